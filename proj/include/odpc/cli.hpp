#pragma once

#include "odpc/chains.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace odpc::cli {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReproduceRow {
    std::string label;
    std::string expected;
    std::string observed;
    bool pass() const { return expected == observed; }
};

// Recomputes every worked example and claim check at desk scale.
std::vector<ReproduceRow> reproduce_all(DistanceCache& cache, const EnumerationOptions& opts);

// Rough wall-clock seconds for enumerating 2^k codewords of length n.
std::uint64_t estimate_seconds(unsigned k, std::uint32_t n, unsigned workers);

}  // namespace odpc::cli
