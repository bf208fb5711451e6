#include "odpc/gf2.hpp"

#include "odpc/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace odpc {

// ---------------------------------------------------------------- polynomials

BinaryPolynomial BinaryPolynomial::from_bits(std::uint64_t bits)
{
    BinaryPolynomial p;
    p.words_.push_back(bits);
    p.normalize();
    return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<unsigned> exponents)
{
    return from_exponents(std::span<const unsigned>(exponents.begin(), exponents.size()));
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::span<const unsigned> exponents)
{
    BinaryPolynomial p;
    for (unsigned e : exponents)
        p.set_coeff(e, !p.coeff(e));
    return p;
}

BinaryPolynomial BinaryPolynomial::monomial(unsigned degree)
{
    BinaryPolynomial p;
    p.set_coeff(degree, true);
    return p;
}

BinaryPolynomial BinaryPolynomial::x_pow_plus_one(unsigned n)
{
    return from_exponents({0u, n});
}

int BinaryPolynomial::degree() const
{
    if (words_.empty())
        return -1;
    const auto top = words_.back();
    return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(top);
}

bool BinaryPolynomial::coeff(unsigned i) const
{
    const auto w = i / 64;
    if (w >= words_.size())
        return false;
    return (words_[w] >> (i % 64)) & 1;
}

void BinaryPolynomial::set_coeff(unsigned i, bool value)
{
    const auto w = i / 64;
    if (w >= words_.size()) {
        if (!value)
            return;
        words_.resize(w + 1, 0);
    }
    const auto mask = std::uint64_t{1} << (i % 64);
    if (value)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    normalize();
}

std::size_t BinaryPolynomial::weight() const
{
    std::size_t w = 0;
    for (auto x : words_)
        w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

void BinaryPolynomial::normalize()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

BinaryPolynomial BinaryPolynomial::operator+(const BinaryPolynomial& other) const
{
    BinaryPolynomial r = *this;
    if (r.words_.size() < other.words_.size())
        r.words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i)
        r.words_[i] ^= other.words_[i];
    r.normalize();
    return r;
}

BinaryPolynomial BinaryPolynomial::shifted(unsigned by) const
{
    if (is_zero())
        return {};
    BinaryPolynomial r;
    const unsigned word_shift = by / 64;
    const unsigned bit_shift = by % 64;
    r.words_.assign(words_.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + word_shift] ^= words_[i] << bit_shift;
        if (bit_shift != 0)
            r.words_[i + word_shift + 1] ^= words_[i] >> (64 - bit_shift);
    }
    r.normalize();
    return r;
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& other) const
{
    BinaryPolynomial r;
    const int d = other.degree();
    for (int i = 0; i <= d; ++i)
        if (other.coeff(static_cast<unsigned>(i)))
            r = r + shifted(static_cast<unsigned>(i));
    return r;
}

std::string BinaryPolynomial::to_hex() const
{
    if (is_zero())
        return "0";
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    const int d = degree();
    for (int nib = d / 4; nib >= 0; --nib) {
        unsigned v = 0;
        for (int b = 3; b >= 0; --b)
            v = (v << 1) | (coeff(static_cast<unsigned>(4 * nib + b)) ? 1u : 0u);
        s.push_back(digits[v]);
    }
    return s;
}

std::string BinaryPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string s;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (!coeff(static_cast<unsigned>(i)))
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

std::pair<BinaryPolynomial, BinaryPolynomial> poly_divrem(const BinaryPolynomial& a,
                                                          const BinaryPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("poly_divrem: division by the zero polynomial");
    BinaryPolynomial quotient;
    BinaryPolynomial rem = a;
    const int db = b.degree();
    while (rem.degree() >= db) {
        const auto shift = static_cast<unsigned>(rem.degree() - db);
        quotient.set_coeff(shift, true);
        rem = rem + b.shifted(shift);
    }
    return {quotient, rem};
}

BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b)
{
    return a * b;
}

BinaryPolynomial poly_gcd(BinaryPolynomial a, BinaryPolynomial b)
{
    while (!b.is_zero()) {
        auto r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// ---------------------------------------------------------------- field

namespace {

// Order of x modulo poly, or 0 if x reaches zero (poly divisible by x).
std::uint32_t order_of_x(std::uint32_t poly, unsigned m)
{
    const std::uint32_t top = 1u << m;
    const std::uint32_t limit = top - 1;
    std::uint32_t v = 1;
    for (std::uint32_t k = 1; k <= limit; ++k) {
        v <<= 1;
        if (v & top)
            v ^= poly;
        if (v == 0)
            return 0;
        if (v == 1)
            return k;
    }
    return 0;
}

}  // namespace

std::uint32_t smallest_primitive_polynomial(unsigned m)
{
    if (m < 2 || m > 16)
        throw std::invalid_argument("smallest_primitive_polynomial: m must lie in 2..16");
    const std::uint32_t top = 1u << m;
    for (std::uint32_t c = 1; c < top; c += 2) {
        const std::uint32_t poly = top | c;
        if (order_of_x(poly, m) == top - 1)
            return poly;
    }
    throw std::logic_error("smallest_primitive_polynomial: none found");
}

FieldContext FieldContext::build(unsigned m)
{
    if (m < 2 || m > 16)
        throw std::invalid_argument("FieldContext: m must lie in 2..16");
    return build(m, (1u << m) - 1);
}

FieldContext FieldContext::build(unsigned m, std::uint32_t n)
{
    if (m < 2 || m > 16)
        throw std::invalid_argument("FieldContext: m must lie in 2..16");
    const std::uint32_t full = (1u << m) - 1;
    if (n == 0 || full % n != 0)
        throw std::invalid_argument("FieldContext: n = " + std::to_string(n) +
                                    " does not divide 2^" + std::to_string(m) + " - 1");
    if (nt::mult_order(2, n) != m)
        throw std::invalid_argument("FieldContext: " + std::to_string(m) +
                                    " is not the multiplicative order of 2 modulo " + std::to_string(n));

    FieldContext ctx;
    ctx.m_ = m;
    ctx.size_ = full + 1;
    ctx.n_ = n;
    ctx.unity_root_exponent_ = full / n;
    ctx.primitive_poly_ = smallest_primitive_polynomial(m);

    ctx.exp_.resize(2 * static_cast<std::size_t>(full));
    ctx.log_.assign(ctx.size_, 0);
    Element v = 1;
    for (std::uint32_t i = 0; i < full; ++i) {
        ctx.exp_[i] = v;
        ctx.exp_[i + full] = v;
        ctx.log_[v] = i;
        v <<= 1;
        if (v & ctx.size_)
            v ^= ctx.primitive_poly_;
    }

    ctx.trace_.resize(ctx.size_);
    for (Element a = 0; a < ctx.size_; ++a)
        ctx.trace_[a] = static_cast<std::uint8_t>(ctx.trace_by_frobenius(a));
    return ctx;
}

Element FieldContext::inv(Element a) const
{
    if (a == 0)
        throw std::domain_error("FieldContext::inv: zero has no inverse");
    const std::uint32_t full = size_ - 1;
    return exp_[(full - log_[a]) % full];
}

Element FieldContext::pow(Element a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    const std::uint64_t full = size_ - 1;
    return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % full)) % full)];
}

Element FieldContext::exp(std::int64_t i) const
{
    const std::int64_t full = size_ - 1;
    std::int64_t r = i % full;
    if (r < 0)
        r += full;
    return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t FieldContext::log(Element a) const
{
    if (a == 0 || a >= size_)
        throw std::domain_error("FieldContext::log: argument must be a nonzero field element");
    return log_[a];
}

int FieldContext::trace_by_frobenius(Element a) const
{
    Element sum = 0;
    Element x = a;
    for (unsigned i = 0; i < m_; ++i) {
        sum ^= x;
        x = mul(x, x);
    }
    if (sum > 1)
        throw std::logic_error("trace landed outside GF(2)");
    return static_cast<int>(sum);
}

BinaryPolynomial minimal_polynomial(std::span<const std::uint32_t> coset, const FieldContext& ctx)
{
    const std::uint32_t n = ctx.n();
    if (coset.empty())
        throw std::invalid_argument("minimal_polynomial: empty coset");
    std::set<std::uint32_t> members;
    for (auto e : coset) {
        if (e >= n)
            throw std::invalid_argument("minimal_polynomial: exponent out of range");
        members.insert(e);
    }
    // Must equal the doubling orbit of its first element.
    std::set<std::uint32_t> orbit;
    std::uint32_t e = *members.begin();
    do {
        orbit.insert(e);
        e = static_cast<std::uint32_t>((2 * static_cast<std::uint64_t>(e)) % n);
    } while (!orbit.contains(e));
    if (orbit != members || members.size() != coset.size())
        throw std::invalid_argument("minimal_polynomial: exponents do not form a complete cyclotomic coset");

    // Coefficients over GF(2^m), lowest degree first.
    std::vector<Element> poly{1};
    for (auto i : members) {
        const Element root = ctx.root(i);
        std::vector<Element> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] ^= poly[d];
            next[d] ^= ctx.mul(poly[d], root);
        }
        poly = std::move(next);
    }
    BinaryPolynomial result;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (poly[d] > 1)
            throw std::logic_error("minimal_polynomial: coefficient outside GF(2)");
        if (poly[d] == 1)
            result.set_coeff(static_cast<unsigned>(d), true);
    }
    return result;
}

}  // namespace odpc
