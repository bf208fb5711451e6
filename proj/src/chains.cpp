#include "odpc/chains.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace odpc {

namespace {

std::string join(const std::vector<unsigned>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<std::uint32_t> sorted_copy(std::span<const std::uint32_t> leaders)
{
    std::vector<std::uint32_t> v(leaders.begin(), leaders.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::string to_string(const DistanceProfile& p)
{
    return join(p.d);
}

std::string to_string(const DimensionProfile& p)
{
    return join(p.dims);
}

std::strong_ordering cmp_inv_dict(const DistanceProfile& a, const DistanceProfile& b)
{
    if (a.d.size() != b.d.size())
        throw std::invalid_argument("cmp_inv_dict: profiles of different length");
    for (std::size_t i = a.d.size(); i-- > 0;) {
        if (a.d[i] != b.d[i])
            return a.d[i] <=> b.d[i];
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- cache

std::optional<CacheEntry> DistanceCache::find(std::uint32_t n, std::span<const std::uint32_t> sorted_leaders) const
{
    const Key key{n, std::vector<std::uint32_t>(sorted_leaders.begin(), sorted_leaders.end())};
    const auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void DistanceCache::put(std::uint32_t n, std::vector<std::uint32_t> sorted_leaders, CacheEntry entry)
{
    Key key{n, std::move(sorted_leaders)};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), std::move(entry));
        return;
    }
    if (it->second.d != entry.d)
        return;
    if (!it->second.wd && entry.wd)
        it->second.wd = std::move(entry.wd);
}

void DistanceCache::merge(const DistanceCache& other)
{
    for (const auto& [key, entry] : other.entries_)
        put(key.first, key.second, entry);
}

std::string DistanceCache::format_record(const Key& key, const CacheEntry& entry)
{
    nlohmann::json j;
    j["n"] = key.first;
    j["leaders"] = key.second;
    j["d"] = entry.d;
    if (entry.wd) {
        auto pairs = nlohmann::json::array();
        for (const auto& [w, c] : entry.wd->counts)
            pairs.push_back({w, c});
        j["wd"] = pairs;
    }
    return j.dump();
}

std::optional<std::pair<DistanceCache::Key, CacheEntry>> DistanceCache::parse_record(const std::string& line)
{
    try {
        const auto j = nlohmann::json::parse(line);
        if (!j.is_object() || !j.contains("n") || !j.contains("leaders") || !j.contains("d"))
            return std::nullopt;
        Key key;
        key.first = j.at("n").get<std::uint32_t>();
        key.second = j.at("leaders").get<std::vector<std::uint32_t>>();
        if (!std::is_sorted(key.second.begin(), key.second.end()))
            return std::nullopt;
        CacheEntry entry;
        entry.d = j.at("d").get<unsigned>();
        if (j.contains("wd")) {
            WeightDistribution wd;
            for (const auto& p : j.at("wd")) {
                if (!p.is_array() || p.size() != 2)
                    return std::nullopt;
                wd.counts[p[0].get<unsigned>()] = p[1].get<std::uint64_t>();
            }
            entry.wd = std::move(wd);
        }
        return std::make_pair(std::move(key), std::move(entry));
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

std::size_t DistanceCache::load(const std::filesystem::path& path, std::ostream& warnings)
{
    std::ifstream in(path);
    if (!in)
        return 0;
    std::size_t read = 0;
    std::size_t lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto record = parse_record(line);
        if (!record) {
            warnings << "warning: " << path.string() << ":" << lineno << ": skipping malformed cache record\n";
            continue;
        }
        put(record->first.first, std::move(record->first.second), std::move(record->second));
        ++read;
    }
    return read;
}

void DistanceCache::save(const std::filesystem::path& path) const
{
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write cache file " + path.string());
    for (const auto& [key, entry] : entries_)
        out << format_record(key, entry) << '\n';
}

DistanceCache cache_load(const std::filesystem::path& path, std::ostream& warnings)
{
    DistanceCache c;
    c.load(path, warnings);
    return c;
}

void cache_save(const DistanceCache& cache, const std::filesystem::path& path)
{
    cache.save(path);
}

// ---------------------------------------------------------------- evaluator

ChainEvaluator::ChainEvaluator(const CodeSpace& space, DistanceCache& cache, EnumerationOptions opts)
    : space_(space), cache_(cache), opts_(opts)
{
}

unsigned ChainEvaluator::distance(std::span<const std::uint32_t> leaders)
{
    auto key = sorted_copy(leaders);
    if (auto hit = cache_.find(space_.n(), key))
        return hit->d;
    const auto code = space_.code(key);
    const unsigned d = min_distance(code, opts_);
    ++computed_;
    cache_.put(space_.n(), std::move(key), CacheEntry{d, std::nullopt});
    return d;
}

WeightDistribution ChainEvaluator::weights(std::span<const std::uint32_t> leaders)
{
    auto key = sorted_copy(leaders);
    auto hit = cache_.find(space_.n(), key);
    if (hit && hit->wd)
        return *hit->wd;
    const auto code = space_.code(key);
    auto wd = weight_distribution(code, opts_);
    ++computed_;
    const unsigned d = wd.min_nonzero_weight();
    if (hit && hit->d != d)
        throw std::logic_error("cached distance disagrees with the weight distribution");
    cache_.put(space_.n(), std::move(key), CacheEntry{d, wd});
    return wd;
}

unsigned ChainEvaluator::dimension(std::span<const std::uint32_t> leaders) const
{
    unsigned k = 0;
    for (auto s : leaders)
        k += static_cast<unsigned>(space_.cosets().size_of(s));
    return k;
}

std::pair<DistanceProfile, DimensionProfile> ChainEvaluator::profiles(const Chain& chain)
{
    if (chain.n != space_.n())
        throw std::invalid_argument("chain length does not match the code space");
    const std::size_t lambda = chain.order.size();
    DistanceProfile dp;
    DimensionProfile dims;
    dp.d.resize(lambda);
    dims.dims.resize(lambda);
    for (std::size_t p = 1; p <= lambda; ++p) {
        std::span<const std::uint32_t> prefix(chain.order.data(), p);
        dp.d[lambda - p] = distance(prefix);
        dims.dims[lambda - p] = dimension(prefix);
    }
    for (std::size_t u = 0; u + 1 < lambda; ++u) {
        if (dp.d[u] > dp.d[u + 1])
            throw std::logic_error("distance profile is not monotone: subcode with smaller distance");
        if (dims.dims[u] <= dims.dims[u + 1])
            throw std::logic_error("dimension profile is not strictly decreasing");
    }
    return {dp, dims};
}

std::size_t ChainEvaluator::audit_cache(std::size_t max_entries)
{
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    for (const auto& [key, entry] : cache_.entries()) {
        if (checked >= max_entries)
            break;
        if (key.first != space_.n())
            continue;
        const auto code = space_.code(key.second);
        if (code.k > opts_.max_dimension)
            continue;
        ++checked;
        if (min_distance(code, opts_) != entry.d)
            ++mismatches;
    }
    return mismatches;
}

// ---------------------------------------------------------------- chains

void enumerate_chains(const CyclicCode& code, const std::function<bool(const Chain&)>& visit)
{
    Chain chain{code.n, code.nonzero_leaders};
    std::sort(chain.order.begin(), chain.order.end());
    do {
        if (!visit(chain))
            return;
    } while (std::next_permutation(chain.order.begin(), chain.order.end()));
}

std::pair<DistanceProfile, DimensionProfile> chain_profiles(const Chain& chain, ChainEvaluator& eval)
{
    return eval.profiles(chain);
}

DimensionProfile dimension_profile(const Chain& chain, const CosetTable& cosets)
{
    const std::size_t lambda = chain.order.size();
    DimensionProfile dims;
    dims.dims.resize(lambda);
    unsigned k = 0;
    for (std::size_t p = 0; p < lambda; ++p) {
        k += static_cast<unsigned>(cosets.size_of(chain.order[p]));
        dims.dims[lambda - 1 - p] = k;
    }
    return dims;
}

namespace {

// Sizes of the cosets in adding order, for each distinct arrangement.
std::vector<unsigned> coset_sizes(const CyclicCode& code, const CosetTable& cosets)
{
    std::vector<unsigned> sizes;
    for (auto s : code.nonzero_leaders)
        sizes.push_back(static_cast<unsigned>(cosets.size_of(s)));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

DimensionProfile dims_from_sizes(const std::vector<unsigned>& sizes)
{
    DimensionProfile dims;
    dims.dims.resize(sizes.size());
    unsigned k = 0;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        k += sizes[p];
        dims.dims[sizes.size() - 1 - p] = k;
    }
    return dims;
}

// Adding-order sizes (smallest code first) that realize a dimension profile.
std::vector<unsigned> sizes_from_dims(const DimensionProfile& dims)
{
    const std::size_t lambda = dims.dims.size();
    std::vector<unsigned> sizes(lambda);
    for (std::size_t p = 0; p < lambda; ++p) {
        const unsigned hi = dims.dims[lambda - 1 - p];
        const unsigned lo = (p == 0) ? 0 : dims.dims[lambda - p];
        if (hi <= lo)
            throw std::invalid_argument("dimension profile must be strictly decreasing and positive");
        sizes[p] = hi - lo;
    }
    return sizes;
}

struct Constraints {
    std::vector<std::uint32_t> prefix;
    std::optional<std::vector<unsigned>> sizes;
};

bool admissible(const Constraints& c, const CosetTable& cosets, std::size_t position, std::uint32_t leader)
{
    if (position < c.prefix.size() && c.prefix[position] != leader)
        return false;
    if (c.sizes && cosets.size_of(leader) != (*c.sizes)[position])
        return false;
    return true;
}

void validate_prefix(const CyclicCode& code, const std::vector<std::uint32_t>& prefix)
{
    std::set<std::uint32_t> seen;
    for (auto s : prefix) {
        if (!std::binary_search(code.nonzero_leaders.begin(), code.nonzero_leaders.end(), s))
            throw std::invalid_argument("required prefix leader " + std::to_string(s) + " is not a nonzero of the code");
        if (!seen.insert(s).second)
            throw std::invalid_argument("required prefix repeats leader " + std::to_string(s));
    }
}

SearchReport level_search(const CyclicCode& code, ChainEvaluator& eval, const Constraints& c)
{
    const auto& cosets = eval.space().cosets();
    const std::size_t lambda = code.nonzero_leaders.size();
    SearchReport report;
    std::vector<std::vector<std::uint32_t>> survivors{{}};
    // Small-end profile shared by all survivors (all tie by construction).
    std::vector<unsigned> small_end;
    for (std::size_t p = 0; p < lambda; ++p) {
        std::vector<std::vector<std::uint32_t>> next;
        unsigned best = 0;
        for (const auto& prefix : survivors) {
            for (auto s : code.nonzero_leaders) {
                if (std::find(prefix.begin(), prefix.end(), s) != prefix.end())
                    continue;
                if (!admissible(c, cosets, p, s))
                    continue;
                auto extended = prefix;
                extended.push_back(s);
                const unsigned d = eval.distance(extended);
                ++report.explored;
                if (p > 0 && d > small_end.back())
                    throw std::logic_error("subcode monotonicity violated during search");
                if (next.empty() || d > best) {
                    best = d;
                    next.clear();
                }
                if (d == best)
                    next.push_back(std::move(extended));
            }
        }
        if (next.empty())
            throw std::invalid_argument("no chain satisfies the search constraints");
        small_end.push_back(best);
        survivors = std::move(next);
    }
    std::sort(survivors.begin(), survivors.end());
    report.best.d.assign(small_end.rbegin(), small_end.rend());
    for (auto& order : survivors)
        report.witnesses.push_back(Chain{code.n, std::move(order)});
    report.dims = dimension_profile(report.witnesses.front(), cosets);
    return report;
}

SearchReport exhaustive_search(const CyclicCode& code, ChainEvaluator& eval, const Constraints& c)
{
    const auto& cosets = eval.space().cosets();
    if (code.nonzero_leaders.size() > 8)
        throw std::invalid_argument("exhaustive chain search is limited to lambda <= 8");
    SearchReport report;
    bool any = false;
    enumerate_chains(code, [&](const Chain& chain) {
        for (std::size_t p = 0; p < chain.order.size(); ++p)
            if (!admissible(c, cosets, p, chain.order[p]))
                return true;
        ++report.explored;
        const auto profile = eval.profiles(chain).first;
        if (!any || cmp_inv_dict(profile, report.best) == std::strong_ordering::greater) {
            any = true;
            report.best = profile;
            report.witnesses.clear();
        }
        if (cmp_inv_dict(profile, report.best) == std::strong_ordering::equal)
            report.witnesses.push_back(chain);
        return true;
    });
    if (!any)
        throw std::invalid_argument("no chain satisfies the search constraints");
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Chain& a, const Chain& b) { return a.order < b.order; });
    report.dims = dimension_profile(report.witnesses.front(), cosets);
    return report;
}

}  // namespace

std::vector<std::pair<DimensionProfile, std::uint64_t>> list_classes(const CyclicCode& code,
                                                                     const CosetTable& cosets)
{
    auto sizes = coset_sizes(code, cosets);
    std::map<unsigned, unsigned> multiplicity;
    for (auto s : sizes)
        ++multiplicity[s];
    std::uint64_t mu = 1;
    for (const auto& [size, count] : multiplicity)
        for (unsigned i = 2; i <= count; ++i)
            mu *= i;
    std::vector<std::pair<DimensionProfile, std::uint64_t>> out;
    do {
        out.emplace_back(dims_from_sizes(sizes), mu);
    } while (std::next_permutation(sizes.begin(), sizes.end()));
    std::sort(out.begin(), out.end());
    return out;
}

SearchReport odpc_standard_ii(const CyclicCode& code, ChainEvaluator& eval, const SearchOptions& opts)
{
    if (code.nonzero_leaders.empty())
        throw std::invalid_argument("the zero code has no subcode chain");
    validate_prefix(code, opts.required_prefix);
    Constraints c{opts.required_prefix, std::nullopt};
    auto report = opts.exhaustive ? exhaustive_search(code, eval, c) : level_search(code, eval, c);
    report.standard = Standard::II;
    return report;
}

SearchReport odpc_standard_i(const CyclicCode& code, const DimensionProfile& cls, ChainEvaluator& eval,
                             const SearchOptions& opts)
{
    if (code.nonzero_leaders.empty())
        throw std::invalid_argument("the zero code has no subcode chain");
    if (cls.dims.size() != code.nonzero_leaders.size() || cls.dims.empty() || cls.dims.front() != code.k)
        throw std::invalid_argument("dimension profile " + to_string(cls) + " is not realizable for this code");
    auto sizes = sizes_from_dims(cls);
    auto sorted_sizes = sizes;
    std::sort(sorted_sizes.begin(), sorted_sizes.end());
    if (sorted_sizes != coset_sizes(code, eval.space().cosets()))
        throw std::invalid_argument("dimension profile " + to_string(cls) + " is not realizable for this code");
    validate_prefix(code, opts.required_prefix);
    Constraints c{opts.required_prefix, std::move(sizes)};
    auto report = opts.exhaustive ? exhaustive_search(code, eval, c) : level_search(code, eval, c);
    report.standard = Standard::I;
    report.class_filter = cls;
    report.dims = cls;
    return report;
}

}  // namespace odpc
