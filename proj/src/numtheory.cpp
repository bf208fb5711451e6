#include "odpc/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace odpc::nt {

Valuation two_adic(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("two_adic: n must be positive");
    Valuation v;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v.s;
    }
    v.odd_part = n;
    return v;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t n)
{
    if (q < 2 || n == 0)
        throw std::invalid_argument("mult_order: need q >= 2 and n >= 1");
    if (std::gcd(q, n) != 1)
        throw std::invalid_argument("mult_order: q and n are not coprime");
    if (n == 1)
        return 1;
    const auto step = static_cast<unsigned __int128>(q % n);
    unsigned __int128 acc = step;
    std::uint64_t m = 1;
    while (acc != 1) {
        acc = (acc * step) % n;
        ++m;
    }
    return m;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

void check_exponents(unsigned a, unsigned b)
{
    if (a < 1 || b < 1 || a > 63 || b > 63)
        throw std::invalid_argument("gcd_two_pow: exponents must lie in 1..63");
}

}  // namespace

std::uint64_t gcd_two_pow_direct(unsigned a, unsigned b)
{
    check_exponents(a, b);
    const std::uint64_t plus = (std::uint64_t{1} << a) + 1;
    const std::uint64_t minus = (b == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << b) - 1;
    return std::gcd(plus, minus);
}

std::uint64_t gcd_two_pow_valuation(unsigned a, unsigned b)
{
    check_exponents(a, b);
    if (two_adic(b).s > two_adic(a).s)
        return (std::uint64_t{1} << std::gcd(a, b)) + 1;
    return 1;
}

std::uint64_t gcd_two_pow(unsigned a, unsigned b)
{
    const auto direct = gcd_two_pow_direct(a, b);
    const auto formula = gcd_two_pow_valuation(a, b);
    if (direct != formula)
        throw std::logic_error("gcd_two_pow: valuation formula disagrees with integer gcd at (" +
                               std::to_string(a) + ", " + std::to_string(b) + ")");
    return direct;
}

std::optional<unsigned> coprime_exponent_witness(unsigned m)
{
    if (m < 4 || m % 2 != 0 || m > 63)
        throw std::invalid_argument("coprime_exponent_witness: m must be even, 4 <= m <= 63");
    const unsigned t = (m - 2) / 2;
    for (unsigned i = 1; i <= t; ++i)
        if (gcd_two_pow(i, m) == 1)
            return i;
    return std::nullopt;
}

std::uint64_t factorial(unsigned n)
{
    if (n > 20)
        throw std::overflow_error("factorial: " + std::to_string(n) + "! does not fit in 64 bits");
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace odpc::nt
