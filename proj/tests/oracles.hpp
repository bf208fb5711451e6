#pragma once

// Slow, independent reference implementations used only by the tests.

#include "odpc/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Carry-less product reduced modulo a degree-m polynomial.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, unsigned m)
{
    std::uint32_t r = 0;
    while (b) {
        if (b & 1)
            r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m & 1)
            a ^= poly;
    }
    return r;
}

inline std::uint32_t gf_pow(std::uint32_t a, std::uint64_t e, std::uint32_t poly, unsigned m)
{
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        r = gf_mul(r, a, poly, m);
    return r;
}

inline int gf_trace(std::uint32_t a, std::uint32_t poly, unsigned m)
{
    std::uint32_t t = 0, x = a;
    for (unsigned i = 0; i < m; ++i) {
        t ^= x;
        x = gf_mul(x, x, poly, m);
    }
    return static_cast<int>(t);
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b)
{
    const auto db = std::bit_width(b);
    while (a && std::bit_width(a) >= db)
        a ^= b << (std::bit_width(a) - db);
    return a;
}

inline bool irreducible(std::uint64_t p)
{
    const int d = static_cast<int>(std::bit_width(p)) - 1;
    for (std::uint64_t q = 2; static_cast<int>(std::bit_width(q)) - 1 <= d / 2; ++q)
        if (poly_mod(p, q) == 0)
            return false;
    return d >= 1;
}

// Order of x modulo p by repeated multiplication.
inline std::uint64_t order_of_x(std::uint32_t p, unsigned m)
{
    std::uint32_t v = 2;
    std::uint64_t k = 1;
    while (v != 1) {
        v = gf_mul(v, 2, p, m);
        ++k;
    }
    return k;
}

inline std::uint32_t smallest_primitive(unsigned m)
{
    for (std::uint32_t p = (1u << m) | 1; p < (2u << m); p += 2)
        if (irreducible(p) && order_of_x(p, m) == (1u << m) - 1)
            return p;
    return 0;
}

inline std::uint64_t gcd_two_pow(unsigned a, unsigned b)
{
    return std::gcd((std::uint64_t{1} << a) + 1, (std::uint64_t{1} << b) - 1);
}

// Codewords as bit vectors built from the generator matrix rows x^i g(x).
inline std::vector<std::vector<std::uint8_t>> rows(const odpc::CyclicCode& code)
{
    std::vector<std::vector<std::uint8_t>> out;
    for (unsigned i = 0; i < code.k; ++i) {
        std::vector<std::uint8_t> r(code.n, 0);
        for (int j = 0; j <= code.generator.degree(); ++j)
            if (code.generator.coeff(static_cast<unsigned>(j)))
                r[(i + static_cast<unsigned>(j)) % code.n] = 1;
        out.push_back(std::move(r));
    }
    return out;
}

inline std::map<unsigned, std::uint64_t> weight_distribution(const odpc::CyclicCode& code)
{
    const auto g = rows(code);
    std::map<unsigned, std::uint64_t> wd;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << code.k); ++msg) {
        std::vector<std::uint8_t> c(code.n, 0);
        for (unsigned i = 0; i < code.k; ++i)
            if (msg >> i & 1)
                for (std::uint32_t j = 0; j < code.n; ++j)
                    c[j] ^= g[i][j];
        ++wd[static_cast<unsigned>(std::count(c.begin(), c.end(), 1))];
    }
    return wd;
}

inline unsigned min_distance(const odpc::CyclicCode& code)
{
    const auto wd = oracle::weight_distribution(code);
    for (const auto& [w, c] : wd)
        if (w > 0)
            return w;
    return 0;
}

// Number of cosets of size v by orbit tracing.
inline std::uint64_t cosets_of_size(std::uint32_t n, unsigned v)
{
    std::vector<bool> seen(n, false);
    std::uint64_t count = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        unsigned size = 0;
        std::uint32_t x = s;
        do {
            seen[x] = true;
            x = static_cast<std::uint32_t>((2ull * x) % n);
            ++size;
        } while (x != s);
        count += size == v;
    }
    return count;
}

}  // namespace oracle
