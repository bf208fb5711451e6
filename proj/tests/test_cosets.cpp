#include "odpc/cosets.hpp"

#include "odpc/numtheory.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace odpc;

TEST_CASE("cosets modulo 21")
{
    const CosetTable t(21);
    CHECK(t.m() == 6);
    CHECK(t.leaders() == std::vector<std::uint32_t>{0, 1, 3, 5, 7, 9});
    CHECK(t.coset(3).elements == std::vector<std::uint32_t>{3, 6, 12});
    CHECK(t.coset(9).elements == std::vector<std::uint32_t>{9, 15, 18});
    CHECK(t.size_of(7) == 2);
    CHECK(t.leader_of(20) == 5);
    CHECK(t.is_leader(5));
    CHECK_FALSE(t.is_leader(2));
    CHECK_THROWS(t.coset(2));
    CHECK_THROWS_AS(CosetTable(20), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_cosets(0), std::invalid_argument);
}

TEST_CASE("negated leaders")
{
    const CosetTable t(63);
    CHECK(t.negated_leader(0) == 0);
    CHECK(t.negated_leader(1) == 31);
    CHECK(t.negated_leader(3) == 15);
    CHECK(t.negated_leader(5) == 23);
    CHECK(t.negated_leader(9) == 27);
    CHECK(t.coset(27).elements == std::vector<std::uint32_t>{27, 45, 54});
}

TEST_CASE("coset counts: phi sum against direct tally")
{
    CHECK(count_L(21, 1) == 1);
    CHECK(count_L(21, 2) == 1);
    CHECK(count_L(21, 3) == 2);
    CHECK(count_L(21, 6) == 2);
    CHECK(count_L(63, 1) == 1);
    CHECK(count_L(63, 6) == 9);
    CHECK_THROWS(count_L(21, 4));
    for (std::uint32_t n = 3; n <= 255; n += 2) {
        const auto m = static_cast<unsigned>(nt::mult_order(2, n));
        for (unsigned v = 1; v <= m; ++v)
            if (m % v == 0) {
                CAPTURE(n);
                CAPTURE(v);
                CHECK(count_L_formula(n, v) == oracle::cosets_of_size(n, v));
            }
    }
}

TEST_CASE("chain counting")
{
    const std::vector<std::uint32_t> gen{3, 9};
    const auto c = chain_counts(21, gen);
    CHECK(c.lambda == 4);
    CHECK(c.total_chains == 24);
    CHECK(c.per_class == 2);
    CHECK(c.num_classes == 12);
    CHECK(c.L.at(6) == 2);
    CHECK(c.J.at(3) == 2);

    // Punctured RM(2,5): nonzeros 0, 15, 11, 7; everything else generates.
    const CosetTable t31(31);
    std::vector<std::uint32_t> g31;
    for (auto l : t31.leaders())
        if (l != 0 && l != 15 && l != 11 && l != 7)
            g31.push_back(l);
    const auto c31 = chain_counts(31, g31);
    CHECK(c31.lambda == 4);
    CHECK(c31.per_class == 6);
    CHECK(c31.num_classes == 4);

    const auto full = chain_counts(255, std::vector<std::uint32_t>{});
    CHECK(full.lambda == 35);
    CHECK(full.total_chains > BigInt(1) << 100);
    CHECK(full.num_classes * full.per_class == full.total_chains);

    CHECK_THROWS(chain_counts(21, std::vector<std::uint32_t>{2}));
    CHECK_THROWS(chain_counts(21, std::vector<std::uint32_t>{3, 3}));
}
