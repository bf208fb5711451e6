#include "odpc/quadsums.hpp"

#include "odpc/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace odpc::quad {

namespace {

void check_m(unsigned m, unsigned hi)
{
    if (m < 2 || m > hi)
        throw std::invalid_argument("m must lie in 2.." + std::to_string(hi));
}

void check_index(unsigned m, unsigned i)
{
    if (i < 1 || i >= m)
        throw std::invalid_argument("exponent index must satisfy 1 <= i <= m-1");
}

std::uint64_t quad_exponent(unsigned i)
{
    return (std::uint64_t{1} << i) + 1;
}

// Table of x^(2^i+1) for every x.
std::vector<Element> power_table(const FieldContext& ctx, unsigned i)
{
    std::vector<Element> out(ctx.size());
    for (Element x = 0; x < ctx.size(); ++x)
        out[x] = ctx.pow(x, quad_exponent(i));
    return out;
}

// Bit x of row a is Tr(a * table[x]).
std::vector<std::vector<std::uint64_t>> trace_rows(const FieldContext& ctx, const std::vector<Element>& table)
{
    const std::size_t words = (ctx.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(ctx.size(), std::vector<std::uint64_t>(words, 0));
    for (Element a = 0; a < ctx.size(); ++a)
        for (Element x = 0; x < ctx.size(); ++x)
            if (ctx.trace(ctx.mul(a, table[x])))
                rows[a][x / 64] |= std::uint64_t{1} << (x % 64);
    return rows;
}

}  // namespace

void validate(const QuadraticForm& f, const FieldContext& ctx)
{
    std::set<unsigned> seen;
    for (const auto& t : f.terms) {
        if (t.i >= ctx.m())
            throw std::invalid_argument("quadratic term index out of range");
        if (!seen.insert(t.i).second)
            throw std::invalid_argument("repeated quadratic term index");
        if (t.coefficient == 0 || t.coefficient >= ctx.size())
            throw std::invalid_argument("quadratic term coefficient must be a nonzero field element");
    }
}

Element evaluate(const QuadraticForm& f, const FieldContext& ctx, Element x)
{
    Element v = 0;
    for (const auto& t : f.terms)
        v ^= ctx.mul(t.coefficient, ctx.pow(x, quad_exponent(t.i)));
    return v;
}

std::int64_t exp_sum(const QuadraticForm& f, const FieldContext& ctx)
{
    validate(f, ctx);
    std::int64_t s = 0;
    for (Element x = 0; x < ctx.size(); ++x)
        s += ctx.trace(evaluate(f, ctx, x)) ? -1 : 1;
    return s;
}

BilinearMatrix bilinear_matrix(const QuadraticForm& f, const FieldContext& ctx)
{
    validate(f, ctx);
    BilinearMatrix b;
    b.m = ctx.m();
    b.rows.assign(b.m, 0);
    std::vector<int> tr(b.m);
    for (unsigned a = 0; a < b.m; ++a)
        tr[a] = ctx.trace(evaluate(f, ctx, Element{1} << a));
    for (unsigned a = 0; a < b.m; ++a)
        for (unsigned c = 0; c < b.m; ++c) {
            const Element x = Element{1} << a, y = Element{1} << c;
            const int v = ctx.trace(evaluate(f, ctx, x ^ y)) ^ tr[a] ^ tr[c];
            if (v)
                b.rows[a] |= 1u << c;
        }
    return b;
}

unsigned gf2_rank(std::vector<std::uint32_t> rows)
{
    unsigned rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] == 0)
            continue;
        ++rank;
        const std::uint32_t pivot = rows[r] & (~rows[r] + 1);
        for (std::size_t s = r + 1; s < rows.size(); ++s)
            if (rows[s] & pivot)
                rows[s] ^= rows[r];
    }
    return rank;
}

unsigned bilinear_rank(const QuadraticForm& f, const FieldContext& ctx)
{
    return gf2_rank(bilinear_matrix(f, ctx).rows);
}

std::uint64_t count_m2(unsigned m, unsigned i)
{
    check_m(m, 16);
    check_index(m, i);
    const auto ctx = FieldContext::build(m);
    const auto p = power_table(ctx, i);
    std::uint64_t count = 0;
    for (Element x = 0; x < ctx.size(); ++x)
        for (Element y = 0; y < ctx.size(); ++y)
            if ((p[x] ^ p[y]) == 0)
                ++count;
    return count;
}

std::uint64_t m2_closed_form(unsigned m, unsigned i)
{
    check_m(m, 63);
    check_index(m, i);
    return 1 + ((std::uint64_t{1} << m) - 1) * nt::gcd_two_pow(i, m);
}

std::uint64_t count_m2_system(unsigned m, unsigned i, unsigned j)
{
    check_m(m, 16);
    check_index(m, i);
    check_index(m, j);
    const auto ctx = FieldContext::build(m);
    const auto p = power_table(ctx, i);
    const auto r = power_table(ctx, j);
    std::uint64_t count = 0;
    for (Element x = 0; x < ctx.size(); ++x)
        for (Element y = 0; y < ctx.size(); ++y)
            if (p[x] == p[y] && r[x] == r[y])
                ++count;
    return count;
}

std::uint64_t count_m3(unsigned m, unsigned i, unsigned j)
{
    check_m(m, 10);
    check_index(m, i);
    check_index(m, j);
    const auto ctx = FieldContext::build(m);
    const auto p = power_table(ctx, i);
    const auto r = power_table(ctx, j);
    std::uint64_t count = 0;
    for (Element x = 0; x < ctx.size(); ++x)
        for (Element y = 0; y < ctx.size(); ++y) {
            const Element u = p[x] ^ p[y], v = r[x] ^ r[y];
            for (Element z = 0; z < ctx.size(); ++z)
                if (p[z] == u && r[z] == v)
                    ++count;
        }
    return count;
}

std::uint64_t m3_closed_form(unsigned m, unsigned i, unsigned j)
{
    check_m(m, 62);
    check_index(m, i);
    check_index(m, j);
    if (i == j)
        throw std::invalid_argument("m3_closed_form needs i != j");
    if (nt::gcd_two_pow(i, m) != 1)
        throw std::invalid_argument("m3_closed_form needs gcd(2^i + 1, 2^m - 1) = 1");
    const unsigned diff = i > j ? i - j : j - i;
    const unsigned g1 = std::gcd(diff, m);
    const unsigned g2 = std::gcd(i + j, m);
    const unsigned g3 = std::gcd(g1, g2);
    const std::uint64_t q = std::uint64_t{1} << m;
    return (q - 1) * ((std::uint64_t{1} << g1) + (std::uint64_t{1} << g2) - (std::uint64_t{1} << g3)) + q;
}

std::uint64_t ValueDistribution::total() const
{
    std::uint64_t t = 0;
    for (const auto& [v, c] : values)
        t += c;
    return t;
}

ValueDistribution t_ab_distribution(unsigned m, unsigned i, unsigned j)
{
    if (m > 7)
        throw std::invalid_argument("t_ab_distribution refuses m > 7");
    check_m(m, 7);
    check_index(m, i);
    check_index(m, j);
    if (i == j)
        throw std::invalid_argument("t_ab_distribution needs i != j");
    const auto ctx = FieldContext::build(m);
    const auto a_rows = trace_rows(ctx, power_table(ctx, i));
    const auto b_rows = trace_rows(ctx, power_table(ctx, j));
    ValueDistribution dist{m, i, j, {}};
    const auto q = static_cast<std::int64_t>(ctx.size());
    for (Element a = 0; a < ctx.size(); ++a)
        for (Element b = 0; b < ctx.size(); ++b) {
            std::int64_t ones = 0;
            for (std::size_t w = 0; w < a_rows[a].size(); ++w)
                ones += std::popcount(a_rows[a][w] ^ b_rows[b][w]);
            ++dist.values[q - 2 * ones];
        }
    return dist;
}

bool MomentReport::holds() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const MomentCheck& c) { return c.match; });
}

MomentReport moments(const ValueDistribution& dist)
{
    const unsigned m = dist.m;
    const BigInt q2 = BigInt(1) << (2 * m);
    BigInt s1 = 0, s2 = 0, s3 = 0;
    for (const auto& [v, c] : dist.values) {
        const BigInt bv = v;
        s1 += bv * c;
        s2 += bv * bv * c;
        s3 += bv * bv * bv * c;
    }
    MomentReport r{m, dist.i, dist.j, {}};
    r.checks.push_back({1, s1, q2, "2^(2m)", s1 == q2});
    const BigInt e2 = q2 * count_m2_system(m, dist.i, dist.j);
    std::string rule2 = "2^(2m) * #{x^e = y^e for both exponents}";
    if (nt::gcd_two_pow(dist.i, m) == 1 || nt::gcd_two_pow(dist.j, m) == 1) {
        rule2 = "2^(3m)";
        if (e2 != (BigInt(1) << (3 * m)))
            throw std::logic_error("pair count disagrees with 2^m although an exponent is coprime");
    }
    r.checks.push_back({2, s2, e2, rule2, s2 == e2});
    const BigInt e3 = q2 * count_m3(m, dist.i, dist.j);
    r.checks.push_back({3, s3, e3, "2^(2m) * M3", s3 == e3});
    return r;
}

MomentReport moments(unsigned m, unsigned i, unsigned j)
{
    return moments(t_ab_distribution(m, i, j));
}

CyclicCode irreducible_code(unsigned m, unsigned i)
{
    check_m(m, 16);
    check_index(m, i);
    const CodeSpace space((1u << m) - 1);
    const std::uint32_t leader = space.cosets().leader_of(static_cast<std::uint32_t>(quad_exponent(i) % space.n()));
    return space.code(std::vector<std::uint32_t>{leader});
}

OneWeightResult one_weight_test(unsigned i, unsigned m)
{
    check_m(m, 16);
    if (i < 1 || i > m / 2)
        throw std::invalid_argument("one_weight_test needs 1 <= i <= m/2");
    OneWeightResult r;
    r.predicted = nt::gcd_two_pow(i, m) == 1 || 2 * i == m;
    const auto code = irreducible_code(m, i);
    r.dimension = code.k;
    const auto weights = weight_distribution(code).nonzero_weights();
    r.observed = weights.size() == 1;
    if (r.observed)
        r.weight = weights.front();
    return r;
}

ValueCounts lemma20_counts(unsigned m)
{
    if (m % 2 != 0 || m < 2 || m > 20)
        throw std::invalid_argument("lemma20_counts needs even m in 2..20");
    const std::uint64_t a = std::uint64_t{1} << (2 * m), b = std::uint64_t{1} << (3 * m / 2),
                        c = std::uint64_t{1} << m, d = std::uint64_t{1} << (m / 2);
    ValueCounts v;
    v.n0 = c - 1;
    v.n_plus = (a + b - c - d) / 2;
    v.n_minus = (a - b - c + d) / 2;
    if (v.n0 + v.n_plus + v.n_minus != a - 1)
        throw std::logic_error("value counts do not sum to 2^(2m) - 1");
    return v;
}

bool three_weight_refutation(unsigned m, unsigned i, unsigned j)
{
    if (m % 2 != 0 || m < 6 || std::has_single_bit(m))
        throw std::invalid_argument("three_weight_refutation needs even m >= 6 that is not a power of 2");
    check_m(m, 16);
    check_index(m, i);
    check_index(m, j);
    if (nt::gcd_two_pow(i, m) != 1)
        throw std::invalid_argument("three_weight_refutation needs gcd(2^i + 1, 2^m - 1) = 1");
    const CodeSpace space((1u << m) - 1);
    const auto li = space.cosets().leader_of(static_cast<std::uint32_t>(quad_exponent(i) % space.n()));
    const auto lj = space.cosets().leader_of(static_cast<std::uint32_t>(quad_exponent(j) % space.n()));
    if (i == j || li == lj)
        throw std::invalid_argument("three_weight_refutation needs distinct cosets");
    const auto code = space.code(std::vector<std::uint32_t>{std::min(li, lj), std::max(li, lj)});
    const unsigned half = 1u << (m - 1), off = 1u << (m / 2 - 1);
    for (auto w : weight_distribution(code).nonzero_weights())
        if (w != half && w != half + off && w != half - off)
            return true;
    return false;
}

WeightDistribution weights_from_sums(unsigned m, unsigned i)
{
    check_m(m, 16);
    check_index(m, i);
    const auto ctx = FieldContext::build(m);
    const auto code = irreducible_code(m, i);
    const std::uint64_t repeat = std::uint64_t{1} << (m - code.k);
    std::map<unsigned, std::uint64_t> raw;
    for (Element a = 0; a < ctx.size(); ++a) {
        const std::int64_t s = a == 0 ? ctx.size() : exp_sum(QuadraticForm{{{i, a}}}, ctx);
        ++raw[static_cast<unsigned>((static_cast<std::int64_t>(ctx.size()) - s) / 2)];
    }
    WeightDistribution wd;
    for (const auto& [w, c] : raw) {
        if (c % repeat != 0)
            throw std::logic_error("sum multiplicities are not a multiple of the coefficient fibre size");
        wd.counts[w] = c / repeat;
    }
    return wd;
}

bool near_half_power(unsigned m, unsigned w)
{
    const std::int64_t diff = static_cast<std::int64_t>(w) - (std::int64_t{1} << (m - 1));
    return diff != 0 && std::has_single_bit(static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
}

}  // namespace odpc::quad
