#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace odpc {

// Polynomial over GF(2), coefficient of x^i stored in bit i. Always normalized:
// the highest stored word is nonzero (the zero polynomial stores no words).
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;
    static BinaryPolynomial from_bits(std::uint64_t bits);
    static BinaryPolynomial from_exponents(std::initializer_list<unsigned> exponents);
    static BinaryPolynomial from_exponents(std::span<const unsigned> exponents);
    static BinaryPolynomial monomial(unsigned degree);
    // x^n + 1
    static BinaryPolynomial x_pow_plus_one(unsigned n);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return words_.empty(); }
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool value);
    std::size_t weight() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    BinaryPolynomial operator+(const BinaryPolynomial& other) const;
    BinaryPolynomial operator*(const BinaryPolynomial& other) const;
    BinaryPolynomial shifted(unsigned by) const;
    bool operator==(const BinaryPolynomial& other) const = default;

    // Hex with bit 0 = constant term, most significant nibble first.
    std::string to_hex() const;
    // "1 + x + x^3" style.
    std::string to_string() const;

private:
    void normalize();
    std::vector<std::uint64_t> words_;
};

// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<BinaryPolynomial, BinaryPolynomial> poly_divrem(const BinaryPolynomial& a,
                                                          const BinaryPolynomial& b);
BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial poly_gcd(BinaryPolynomial a, BinaryPolynomial b);

// Field elements are stored in the polynomial basis 1, pi, ..., pi^(m-1) over the
// defining primitive polynomial; products go through discrete log tables.
using Element = std::uint32_t;

// Arithmetic context for GF(2^m) together with a primitive n-th root of unity
// alpha = pi^((2^m - 1) / n). Immutable once built.
class FieldContext {
public:
    // m in 2..16, n odd with n | 2^m - 1 and ord_n(2) = m.
    static FieldContext build(unsigned m, std::uint32_t n);
    // Full length n = 2^m - 1.
    static FieldContext build(unsigned m);

    unsigned m() const { return m_; }
    std::uint32_t size() const { return size_; }  // 2^m
    std::uint32_t n() const { return n_; }
    std::uint32_t unity_root_exponent() const { return unity_root_exponent_; }
    std::uint32_t primitive_poly() const { return primitive_poly_; }

    static Element add(Element a, Element b) { return a ^ b; }
    Element mul(Element a, Element b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;
    // pi^i for any integer exponent (reduced mod 2^m - 1).
    Element exp(std::int64_t i) const;
    // Discrete log base pi; throws for 0.
    std::uint32_t log(Element a) const;
    // alpha^i, alpha a primitive n-th root of unity.
    Element root(std::int64_t i) const { return exp(i * static_cast<std::int64_t>(unity_root_exponent_)); }

    // Absolute trace to GF(2), table lookup.
    int trace(Element a) const { return trace_[a]; }
    // x + x^2 + ... + x^(2^(m-1)) evaluated by repeated squaring.
    int trace_by_frobenius(Element a) const;

private:
    FieldContext() = default;

    unsigned m_ = 0;
    std::uint32_t size_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t unity_root_exponent_ = 0;
    std::uint32_t primitive_poly_ = 0;
    std::vector<Element> exp_;        // 2 * (size - 1) entries
    std::vector<std::uint32_t> log_;  // log_[0] is unused
    std::vector<std::uint8_t> trace_;
};

// Smallest (as an integer, bit i = coefficient of x^i) primitive polynomial of degree m.
std::uint32_t smallest_primitive_polynomial(unsigned m);

// prod_{i in coset} (x - alpha^i). Throws std::invalid_argument unless the exponents
// form one complete 2-cyclotomic coset modulo ctx.n().
BinaryPolynomial minimal_polynomial(std::span<const std::uint32_t> coset, const FieldContext& ctx);

}  // namespace odpc
