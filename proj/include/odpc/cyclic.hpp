#pragma once

#include "odpc/cosets.hpp"
#include "odpc/gf2.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace odpc {

// A binary cyclic code of length n given by the leaders of its nonzero cosets:
// alpha^i is a nonzero of the code for every i in a listed coset.
struct CyclicCode {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> nonzero_leaders;  // sorted
    unsigned k = 0;
    BinaryPolynomial generator;  // product of the minimal polynomials of the other cosets
};

// Everything needed to build cyclic codes of one length n.
class CodeSpace {
public:
    explicit CodeSpace(std::uint32_t n);

    std::uint32_t n() const { return cosets_.n(); }
    const CosetTable& cosets() const { return cosets_; }
    const FieldContext& field() const { return field_; }
    const BinaryPolynomial& minimal_polynomial(std::uint32_t leader) const;

    // Throws std::invalid_argument for non-leaders and duplicates.
    CyclicCode code(std::span<const std::uint32_t> nonzero_leaders) const;

    // Canonical leader for the primitive idempotent theta_s^*, whose nonzeros are D_{-s}.
    std::uint32_t theta_star(std::uint32_t s) const { return cosets_.negated_leader(s); }

private:
    CosetTable cosets_;
    FieldContext field_;
    std::vector<BinaryPolynomial> minpolys_;  // indexed like cosets_.cosets()
};

CyclicCode code_from_leaders(std::uint32_t n, std::span<const std::uint32_t> nonzero_leaders);

struct WeightDistribution {
    std::map<unsigned, std::uint64_t> counts;  // weight -> number of codewords

    std::uint64_t total() const;
    unsigned min_nonzero_weight() const;  // throws if only the zero word is present
    std::vector<unsigned> nonzero_weights() const;
    bool operator==(const WeightDistribution&) const = default;
};

struct EnumerationOptions {
    unsigned max_dimension = 28;
    unsigned workers = 1;
};

class DimensionLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive over all 2^k - 1 nonzero codewords (Gray-coded message order).
unsigned min_distance(const CyclicCode& code, const EnumerationOptions& opts = {});
WeightDistribution weight_distribution(const CyclicCode& code, const EnumerationOptions& opts = {});

// Rows x^i g(x), 0 <= i < k.
std::vector<BinaryPolynomial> generator_rows(const CyclicCode& code);
// Codeword for the message whose bit i selects row x^i g(x).
BinaryPolynomial encode_rows(const CyclicCode& code, const BinaryPolynomial& message);
// Inverse of encode_rows; throws std::invalid_argument if g(x) does not divide the word.
BinaryPolynomial message_of(const CyclicCode& code, const BinaryPolynomial& codeword);
bool contains(const CyclicCode& code, const BinaryPolynomial& word);

// Trace representation c_i = sum_l Tr(a_l pi^(i s_l)) of a word of length 2^m - 1.
struct TraceTerm {
    std::uint32_t exponent;  // s_l
    Element coefficient;     // a_l
};
BinaryPolynomial trace_codeword(const FieldContext& ctx, std::span<const TraceTerm> terms);
unsigned trace_weight(const FieldContext& ctx, std::span<const TraceTerm> terms);

// Krawtchouk transform: A'_j = 2^-k sum_i A_i K_j(i). Throws when sum A_w != 2^k
// or when a dual count does not fit in 64 bits.
WeightDistribution macwilliams_transform(const WeightDistribution& wd, unsigned n, unsigned k);
BigInt dual_weight_count(const WeightDistribution& wd, unsigned n, unsigned k, unsigned j);
// 2 * sum_i i A_i == 2^k (n - A'_1).
bool mean_weight_identity(const WeightDistribution& wd, unsigned n, unsigned k);

}  // namespace odpc
