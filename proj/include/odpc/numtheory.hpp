#pragma once

#include <cstdint>
#include <optional>

namespace odpc::nt {

// n = 2^s * odd_part with odd_part odd.
struct Valuation {
    unsigned s = 0;
    std::uint64_t odd_part = 1;
};

Valuation two_adic(std::uint64_t n);

// Smallest m >= 1 with q^m = 1 (mod n). Requires gcd(q, n) = 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// gcd(2^a + 1, 2^b - 1) for 1 <= a, b <= 63. Both routes below are evaluated
// and must agree; a disagreement throws std::logic_error.
std::uint64_t gcd_two_pow(unsigned a, unsigned b);
std::uint64_t gcd_two_pow_direct(unsigned a, unsigned b);
std::uint64_t gcd_two_pow_valuation(unsigned a, unsigned b);

// For even m >= 4: the smallest 1 <= i <= (m-2)/2 with gcd(2^i + 1, 2^m - 1) = 1.
std::optional<unsigned> coprime_exponent_witness(unsigned m);

std::uint64_t factorial(unsigned n);

}  // namespace odpc::nt
