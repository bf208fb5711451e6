#include "odpc/cosets.hpp"

#include "odpc/numtheory.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace odpc {

CosetTable::CosetTable(std::uint32_t n) : n_(n)
{
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("cyclotomic cosets need an odd positive n, got " + std::to_string(n));
    m_ = static_cast<unsigned>(nt::mult_order(2, n));
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    leader_of_.assign(n, unset);
    position_.assign(n, -1);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (leader_of_[s] != unset)
            continue;
        Coset c;
        c.leader = s;
        std::uint32_t e = s;
        do {
            c.elements.push_back(e);
            leader_of_[e] = s;
            e = static_cast<std::uint32_t>((2 * static_cast<std::uint64_t>(e)) % n);
        } while (e != s);
        std::sort(c.elements.begin(), c.elements.end());
        position_[s] = static_cast<std::int32_t>(cosets_.size());
        cosets_.push_back(std::move(c));
    }
}

std::vector<std::uint32_t> CosetTable::leaders() const
{
    std::vector<std::uint32_t> out;
    out.reserve(cosets_.size());
    for (const auto& c : cosets_)
        out.push_back(c.leader);
    return out;
}

std::uint32_t CosetTable::leader_of(std::uint32_t element) const
{
    if (element >= n_)
        throw std::out_of_range("coset element " + std::to_string(element) + " out of range");
    return leader_of_[element];
}

bool CosetTable::is_leader(std::uint32_t s) const
{
    return s < n_ && position_[s] >= 0;
}

const Coset& CosetTable::coset(std::uint32_t leader) const
{
    if (!is_leader(leader))
        throw std::invalid_argument(std::to_string(leader) + " is not a coset leader modulo " +
                                    std::to_string(n_));
    return cosets_[static_cast<std::size_t>(position_[leader])];
}

std::uint32_t CosetTable::negated_leader(std::uint32_t s) const
{
    const std::uint32_t r = s % n_;
    return leader_of((n_ - r) % n_);
}

CosetTable cyclotomic_cosets(std::uint32_t n)
{
    return CosetTable(n);
}

std::uint64_t count_L_formula(std::uint32_t n, unsigned v)
{
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("count_L: n must be odd");
    const auto m = nt::mult_order(2, n);
    if (v == 0 || m % v != 0)
        throw std::invalid_argument("count_L: v = " + std::to_string(v) + " does not divide m = " +
                                    std::to_string(m));
    std::uint64_t total = 0;
    for (std::uint32_t g = 1; g <= n; ++g) {
        if (n % g != 0)
            continue;
        if (nt::mult_order(2, n / g) == v)
            total += nt::euler_phi(n / g);
    }
    if (total % v != 0)
        throw std::logic_error("count_L: phi sum not divisible by v");
    return total / v;
}

std::uint64_t count_L_direct(const CosetTable& table, unsigned v)
{
    return static_cast<std::uint64_t>(std::count_if(table.cosets().begin(), table.cosets().end(),
                                                    [v](const Coset& c) { return c.elements.size() == v; }));
}

std::uint64_t count_L(std::uint32_t n, unsigned v)
{
    const auto formula = count_L_formula(n, v);
    const auto direct = count_L_direct(CosetTable(n), v);
    if (formula != direct)
        throw std::logic_error("count_L: formula " + std::to_string(formula) + " != direct tally " +
                               std::to_string(direct));
    return formula;
}

namespace {

BigInt big_factorial(std::uint64_t k)
{
    BigInt f = 1;
    for (std::uint64_t i = 2; i <= k; ++i)
        f *= i;
    return f;
}

}  // namespace

CountingSummary chain_counts(std::uint32_t n, std::span<const std::uint32_t> generator_leaders)
{
    const CosetTable table(n);
    CountingSummary s;
    for (unsigned v = 1; v <= table.m(); ++v) {
        if (table.m() % v != 0)
            continue;
        s.L[v] = count_L(n, v);
        s.J[v] = 0;
    }
    std::set<std::uint32_t> seen;
    for (auto g : generator_leaders) {
        if (!table.is_leader(g))
            throw std::invalid_argument("chain_counts: unknown coset leader " + std::to_string(g));
        if (!seen.insert(g).second)
            throw std::invalid_argument("chain_counts: duplicate leader " + std::to_string(g));
        ++s.J[static_cast<unsigned>(table.size_of(g))];
    }
    s.per_class = 1;
    for (const auto& [v, l] : s.L) {
        const auto free = l - s.J[v];
        s.lambda += static_cast<unsigned>(free);
        s.per_class *= big_factorial(free);
    }
    s.total_chains = big_factorial(s.lambda);
    s.num_classes = s.total_chains / s.per_class;

    std::uint64_t lambda_check = 0;
    BigInt mu_check = 1;
    for (const auto& [v, l] : s.L) {
        lambda_check += l - s.J.at(v);
        mu_check *= big_factorial(l - s.J.at(v));
    }
    if (lambda_check != s.lambda || mu_check != s.per_class || s.num_classes * s.per_class != s.total_chains ||
        s.lambda != table.cosets().size() - generator_leaders.size())
        throw std::logic_error("chain_counts: counting identities violated");
    return s;
}

}  // namespace odpc
