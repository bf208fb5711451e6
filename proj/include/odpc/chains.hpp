#pragma once

#include "odpc/cyclic.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace odpc {

// Order in which minimal cyclic subcodes are added: order[0] spans the smallest
// code of the chain, the first u+1 entries span C_{tau_{lambda-1-u}}.
struct Chain {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> order;
    bool operator==(const Chain&) const = default;
};

// d[0] belongs to the full code, d.back() to the smallest code.
struct DistanceProfile {
    std::vector<unsigned> d;
    bool operator==(const DistanceProfile&) const = default;
};

// Strictly decreasing; dims[0] = k of the full code.
struct DimensionProfile {
    std::vector<unsigned> dims;
    bool operator==(const DimensionProfile&) const = default;
    auto operator<=>(const DimensionProfile&) const = default;
};

std::string to_string(const DistanceProfile& p);
std::string to_string(const DimensionProfile& p);

// Compares from the last (smallest-code) entry towards the first.
// Throws std::invalid_argument on a length mismatch.
std::strong_ordering cmp_inv_dict(const DistanceProfile& a, const DistanceProfile& b);

struct CacheEntry {
    unsigned d = 0;
    std::optional<WeightDistribution> wd;
};

// Minimum distances keyed by (n, sorted nonzero leaders). Not synchronized.
class DistanceCache {
public:
    using Key = std::pair<std::uint32_t, std::vector<std::uint32_t>>;

    std::optional<CacheEntry> find(std::uint32_t n, std::span<const std::uint32_t> sorted_leaders) const;
    // Keeps the most information per key; a conflicting distance keeps the stored value.
    void put(std::uint32_t n, std::vector<std::uint32_t> sorted_leaders, CacheEntry entry);
    void merge(const DistanceCache& other);

    std::size_t size() const { return entries_.size(); }
    const std::map<Key, CacheEntry>& entries() const { return entries_; }

    // Merges the file into this cache. Missing file is not an error; malformed lines
    // are skipped with a message on `warnings`. Returns the number of records read.
    std::size_t load(const std::filesystem::path& path, std::ostream& warnings);
    void save(const std::filesystem::path& path) const;

    static std::string format_record(const Key& key, const CacheEntry& entry);
    static std::optional<std::pair<Key, CacheEntry>> parse_record(const std::string& line);

private:
    std::map<Key, CacheEntry> entries_;
};

DistanceCache cache_load(const std::filesystem::path& path, std::ostream& warnings);
void cache_save(const DistanceCache& cache, const std::filesystem::path& path);

// Computes (and caches) minimum distances of codes in one CodeSpace.
class ChainEvaluator {
public:
    ChainEvaluator(const CodeSpace& space, DistanceCache& cache, EnumerationOptions opts = {});

    const CodeSpace& space() const { return space_; }
    const EnumerationOptions& options() const { return opts_; }

    unsigned distance(std::span<const std::uint32_t> leaders);
    WeightDistribution weights(std::span<const std::uint32_t> leaders);
    unsigned dimension(std::span<const std::uint32_t> leaders) const;

    std::pair<DistanceProfile, DimensionProfile> profiles(const Chain& chain);

    // Fresh enumerations performed so far (cache misses).
    std::uint64_t computed() const { return computed_; }

    // Recomputes up to max_entries cached distances for this length; returns mismatches.
    std::size_t audit_cache(std::size_t max_entries);

private:
    const CodeSpace& space_;
    DistanceCache& cache_;
    EnumerationOptions opts_;
    std::uint64_t computed_ = 0;
};

// Calls visit for each of the lambda! orderings of code.nonzero_leaders in
// lexicographic order; stops early when visit returns false.
void enumerate_chains(const CyclicCode& code, const std::function<bool(const Chain&)>& visit);

std::pair<DistanceProfile, DimensionProfile> chain_profiles(const Chain& chain, ChainEvaluator& eval);

DimensionProfile dimension_profile(const Chain& chain, const CosetTable& cosets);

// Distinct dimension profiles with the number of chains in each, sorted by profile.
std::vector<std::pair<DimensionProfile, std::uint64_t>> list_classes(const CyclicCode& code,
                                                                     const CosetTable& cosets);

enum class Standard { I, II };

struct SearchOptions {
    // Leaders that must be added first, in this order.
    std::vector<std::uint32_t> required_prefix;
    // Evaluate every admissible chain instead of the level-wise search. Needs lambda <= 8.
    bool exhaustive = false;
};

struct SearchReport {
    Standard standard = Standard::II;
    DistanceProfile best;
    DimensionProfile dims;  // of the canonical witness
    std::vector<Chain> witnesses;  // sorted, witnesses.front() is canonical
    std::uint64_t explored = 0;
    std::optional<DimensionProfile> class_filter;
};

SearchReport odpc_standard_ii(const CyclicCode& code, ChainEvaluator& eval, const SearchOptions& opts = {});
SearchReport odpc_standard_i(const CyclicCode& code, const DimensionProfile& cls, ChainEvaluator& eval,
                             const SearchOptions& opts = {});

}  // namespace odpc
