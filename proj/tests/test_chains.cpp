#include "odpc/chains.hpp"

#include "odpc/numtheory.hpp"
#include "odpc/rm2.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace odpc;

namespace {

DistanceProfile dp(std::vector<unsigned> d)
{
    return DistanceProfile{std::move(d)};
}

std::filesystem::path temp_file(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("odpc_test_" + name);
    std::filesystem::remove(p);
    return p;
}

// Maximum over all chains, computed with the generator-matrix oracle.
std::pair<DistanceProfile, std::vector<Chain>> oracle_best(const CyclicCode& code, const CodeSpace& space,
                                                           const std::optional<DimensionProfile>& cls = {})
{
    std::map<std::vector<std::uint32_t>, unsigned> memo;
    auto dist = [&](std::vector<std::uint32_t> l) {
        std::sort(l.begin(), l.end());
        auto it = memo.find(l);
        if (it == memo.end())
            it = memo.emplace(l, oracle::min_distance(space.code(l))).first;
        return it->second;
    };
    std::optional<DistanceProfile> best;
    std::vector<Chain> wit;
    enumerate_chains(code, [&](const Chain& c) {
        if (cls && dimension_profile(c, space.cosets()) != *cls)
            return true;
        DistanceProfile p;
        for (std::size_t u = 0; u < c.order.size(); ++u)
            p.d.push_back(dist({c.order.begin(), c.order.end() - static_cast<long>(u)}));
        if (!best || cmp_inv_dict(p, *best) > 0) {
            best = p;
            wit = {c};
        } else if (cmp_inv_dict(p, *best) == 0) {
            wit.push_back(c);
        }
        return true;
    });
    std::sort(wit.begin(), wit.end(), [](const Chain& a, const Chain& b) { return a.order < b.order; });
    return {*best, wit};
}

}  // namespace

TEST_CASE("inverse dictionary comparison")
{
    CHECK(cmp_inv_dict(dp({2, 6, 6, 8}), dp({2, 6, 6, 8})) == std::strong_ordering::equal);
    CHECK(cmp_inv_dict(dp({7, 11, 15, 31}), dp({7, 11, 12, 16})) == std::strong_ordering::greater);
    CHECK(cmp_inv_dict(dp({3, 5, 7, 15}), dp({3, 6, 7, 15})) == std::strong_ordering::less);
    CHECK(cmp_inv_dict(dp({9, 1, 8}), dp({1, 2, 8})) == std::strong_ordering::less);
    CHECK_THROWS_AS(cmp_inv_dict(dp({1, 2}), dp({1, 2, 3})), std::invalid_argument);
    CHECK(to_string(dp({2, 6, 6, 8})) == "2,6,6,8");
}

TEST_CASE("chain enumeration")
{
    const CodeSpace space(21);
    const auto code = space.code(std::vector<std::uint32_t>{0, 1, 5, 7});
    std::vector<Chain> all;
    enumerate_chains(code, [&](const Chain& c) {
        all.push_back(c);
        return true;
    });
    CHECK(all.size() == 24);
    CHECK(all.front().order == std::vector<std::uint32_t>{0, 1, 5, 7});
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Chain& a, const Chain& b) { return a.order < b.order; }));
    int seen = 0;
    enumerate_chains(code, [&](const Chain&) { return ++seen < 5; });
    CHECK(seen == 5);

    const auto single = space.code(std::vector<std::uint32_t>{7});
    int count = 0;
    enumerate_chains(single, [&](const Chain&) { return ++count, true; });
    CHECK(count == 1);

    const rm2::RMSpec s6(6);
    count = 0;
    enumerate_chains(s6.code(), [&](const Chain&) { return ++count, true; });
    CHECK(count == 120);
}

TEST_CASE("profiles of the listed length-21 chain")
{
    const CodeSpace space(21);
    DistanceCache cache;
    ChainEvaluator eval(space, cache);
    const Chain c{21, {1, 7, 0, 5}};
    const auto [p, d] = chain_profiles(c, eval);
    CHECK(p == dp({2, 6, 6, 8}));
    CHECK(d.dims == std::vector<unsigned>{15, 9, 8, 6});
    CHECK(dimension_profile(c, space.cosets()) == d);
    CHECK(eval.computed() == 4);
    chain_profiles(Chain{21, {5, 7, 0, 1}}, eval);
    CHECK(eval.computed() == 7);  // the full code is shared
}

TEST_CASE("dimension classes")
{
    const CodeSpace space(21);
    const auto classes = list_classes(space.code(std::vector<std::uint32_t>{0, 1, 5, 7}), space.cosets());
    CHECK(classes.size() == 12);
    for (const auto& [d, mu] : classes)
        CHECK(mu == 2);

    for (auto [m, expected] : {std::pair{5u, 4u}, std::pair{6u, 20u}}) {
        const rm2::RMSpec s(m);
        const auto cl = list_classes(s.code(), s.space().cosets());
        CHECK(cl.size() == expected);
        std::uint64_t total = 0;
        for (const auto& [d, mu] : cl) {
            CHECK(mu == 6);
            total += mu;
        }
        CHECK(total == nt::factorial(static_cast<unsigned>(s.code().nonzero_leaders.size())));
    }
}

TEST_CASE("Standard I optimum for the length-21 code")
{
    const CodeSpace space(21);
    const auto code = space.code(std::vector<std::uint32_t>{0, 1, 5, 7});
    DistanceCache cache;
    ChainEvaluator eval(space, cache);
    const DimensionProfile cls{{15, 9, 8, 6}};
    const auto r = odpc_standard_i(code, cls, eval);
    CHECK(r.standard == Standard::I);
    CHECK(r.best == dp({2, 6, 6, 8}));
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].order == std::vector<std::uint32_t>{1, 7, 0, 5});
    CHECK(r.witnesses[1].order == std::vector<std::uint32_t>{5, 7, 0, 1});
    CHECK(r.class_filter == cls);
    CHECK_THROWS_AS(odpc_standard_i(code, DimensionProfile{{15, 10, 8, 6}}, eval), std::invalid_argument);
    CHECK_THROWS_AS(odpc_standard_i(code, DimensionProfile{{15, 9, 8}}, eval), std::invalid_argument);
}

TEST_CASE("level-wise search equals exhaustive search and the oracle for lambda <= 5")
{
    for (std::uint32_t n : {15u, 21u, 31u, 45u, 63u}) {
        const CodeSpace space(n);
        const auto leaders = space.cosets().leaders();
        DistanceCache cache;
        ChainEvaluator eval(space, cache);
        for (std::uint32_t mask = 1; mask < (1u << leaders.size()); ++mask) {
            std::vector<std::uint32_t> pick;
            unsigned k = 0;
            for (std::size_t i = 0; i < leaders.size(); ++i)
                if (mask >> i & 1) {
                    pick.push_back(leaders[i]);
                    k += static_cast<unsigned>(space.cosets().size_of(leaders[i]));
                }
            if (pick.size() < 2 || pick.size() > 5 || k > 16)
                continue;
            const auto code = space.code(pick);
            CAPTURE(n);
            CAPTURE(mask);
            SearchOptions ex;
            ex.exhaustive = true;
            const auto a = odpc_standard_ii(code, eval);
            const auto b = odpc_standard_ii(code, eval, ex);
            CHECK(a.best == b.best);
            CHECK(a.witnesses == b.witnesses);
            CHECK(b.explored == nt::factorial(static_cast<unsigned>(pick.size())));
            const auto [best, wit] = oracle_best(code, space);
            CHECK(a.best == best);
            CHECK(a.witnesses == wit);

            for (const auto& [cls, mu] : list_classes(code, space.cosets())) {
                const auto i1 = odpc_standard_i(code, cls, eval);
                const auto i2 = odpc_standard_i(code, cls, eval, ex);
                CHECK(i1.best == i2.best);
                CHECK(i1.witnesses == i2.witnesses);
                CHECK(cmp_inv_dict(a.best, i1.best) >= 0);
            }
        }
    }
}

TEST_CASE("required prefixes")
{
    const rm2::RMSpec s(5);
    DistanceCache cache;
    ChainEvaluator eval(s.space(), cache);
    SearchOptions opts;
    opts.required_prefix = {0, 15};
    const auto r = odpc_standard_ii(s.code(), eval, opts);
    for (const auto& w : r.witnesses) {
        CHECK(w.order[0] == 0);
        CHECK(w.order[1] == 15);
    }
    opts.required_prefix = {0, 0};
    CHECK_THROWS(odpc_standard_ii(s.code(), eval, opts));
    opts.required_prefix = {3};
    CHECK_THROWS(odpc_standard_ii(s.code(), eval, opts));
}

TEST_CASE("Standard II dominates every class and profiles are monotone")
{
    for (unsigned m : {4u, 5u, 6u}) {
        const rm2::RMSpec s(m);
        DistanceCache cache;
        ChainEvaluator eval(s.space(), cache);
        const auto code = s.code();
        const auto best = odpc_standard_ii(code, eval);
        enumerate_chains(code, [&](const Chain& c) {
            const auto [p, d] = eval.profiles(c);
            CHECK(std::is_sorted(p.d.begin(), p.d.end()));
            CHECK(std::adjacent_find(d.dims.begin(), d.dims.end(), std::less_equal<>()) == d.dims.end());
            CHECK(cmp_inv_dict(best.best, p) >= 0);
            return true;
        });
        for (const auto& [cls, mu] : list_classes(code, s.space().cosets()))
            CHECK(cmp_inv_dict(best.best, odpc_standard_i(code, cls, eval).best) >= 0);
    }
}

TEST_CASE("distance cache records")
{
    const DistanceCache::Key key{63, {0, 15}};
    CacheEntry e{24, std::nullopt};
    const auto line = DistanceCache::format_record(key, e);
    CHECK(line == R"({"d":24,"leaders":[0,15],"n":63})");
    const auto back = DistanceCache::parse_record(line);
    REQUIRE(back);
    CHECK(back->first == key);
    CHECK(back->second.d == 24);
    CHECK_FALSE(DistanceCache::parse_record("{not json"));
    CHECK_FALSE(DistanceCache::parse_record(R"({"d":3,"n":7})"));
    CHECK_FALSE(DistanceCache::parse_record(R"({"d":3,"leaders":[3,1],"n":7})"));
}

TEST_CASE("distance cache round trip, merge and corrupt lines")
{
    const rm2::RMSpec s(6);
    DistanceCache cache;
    ChainEvaluator eval(s.space(), cache);
    const std::vector<std::uint32_t> pair{0, 15};
    CHECK(eval.distance(pair) == 24);
    eval.weights(std::vector<std::uint32_t>{0, 31});
    const auto path = temp_file("cache.jsonl");
    cache.save(path);

    std::ostringstream warnings;
    const auto loaded = cache_load(path, warnings);
    CHECK(warnings.str().empty());
    CHECK(loaded.entries().size() == cache.entries().size());
    for (const auto& [k, v] : cache.entries()) {
        const auto other = loaded.find(k.first, k.second);
        REQUIRE(other);
        CHECK(other->d == v.d);
        CHECK(other->wd == v.wd);
    }
    REQUIRE(loaded.find(63, pair));
    CHECK(loaded.find(63, pair)->d == 24);

    {
        std::ofstream f(path, std::ios::app);
        f << "garbage line\n" << R"({"d":7,"leaders":[0],"n":31})" << "\n";
    }
    std::ostringstream w2;
    DistanceCache merged;
    CHECK(merged.load(path, w2) == cache.size() + 1);
    CHECK(w2.str().find("skip") != std::string::npos);
    CHECK(merged.size() == cache.size() + 1);

    std::ostringstream w3;
    DistanceCache none;
    CHECK(none.load(temp_file("missing.jsonl"), w3) == 0);
    CHECK(none.size() == 0);
    const auto empty = temp_file("empty.jsonl");
    std::ofstream(empty).close();
    CHECK(cache_load(empty, w3).size() == 0);

    // A conflicting distance keeps the stored value; a weight distribution is filled in.
    DistanceCache c2;
    c2.put(63, {0, 15}, {24, std::nullopt});
    c2.put(63, {0, 15}, {99, std::nullopt});
    CHECK(c2.find(63, pair)->d == 24);
    WeightDistribution wd;
    wd.counts = {{0, 1}, {24, 3}};
    c2.put(63, {0, 15}, {24, wd});
    CHECK(c2.find(63, pair)->wd == wd);
    c2.merge(merged);
    CHECK(c2.size() == merged.size());

    DistanceCache c3 = cache;
    ChainEvaluator audit(s.space(), c3);
    CHECK(audit.audit_cache(100) == 0);
}
