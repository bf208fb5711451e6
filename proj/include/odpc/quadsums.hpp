#pragma once

#include "odpc/cosets.hpp"
#include "odpc/cyclic.hpp"
#include "odpc/gf2.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Exponential sums of binary quadratic forms f(x) = sum_i a_i x^(2^i + 1).
namespace odpc::quad {

struct QuadTerm {
    unsigned i = 0;
    Element coefficient = 0;
};

struct QuadraticForm {
    std::vector<QuadTerm> terms;
};

// Throws std::invalid_argument for repeated or out-of-range indices and zero or
// out-of-field coefficients.
void validate(const QuadraticForm& f, const FieldContext& ctx);
Element evaluate(const QuadraticForm& f, const FieldContext& ctx, Element x);

// sum_x (-1)^Tr(f(x)) over all of GF(2^m).
std::int64_t exp_sum(const QuadraticForm& f, const FieldContext& ctx);

// Alternating matrix of B(x, y) = Tr(f(x+y)) + Tr(f(x)) + Tr(f(y)) on the polynomial
// basis; bit b of rows[a] is B(e_a, e_b).
struct BilinearMatrix {
    unsigned m = 0;
    std::vector<std::uint32_t> rows;
};
BilinearMatrix bilinear_matrix(const QuadraticForm& f, const FieldContext& ctx);
unsigned gf2_rank(std::vector<std::uint32_t> rows);
unsigned bilinear_rank(const QuadraticForm& f, const FieldContext& ctx);

// #{(x, y) : x^(2^i+1) + y^(2^i+1) = 0} by direct count, and 1 + (2^m - 1) gcd(2^i+1, 2^m-1).
std::uint64_t count_m2(unsigned m, unsigned i);
std::uint64_t m2_closed_form(unsigned m, unsigned i);
// #{(x, y) : x^(2^i+1) = y^(2^i+1) and x^(2^j+1) = y^(2^j+1)}.
std::uint64_t count_m2_system(unsigned m, unsigned i, unsigned j);

// #{(x, y, z) : x^e + y^e + z^e = 0 for e = 2^i+1 and e = 2^j+1} by direct count.
std::uint64_t count_m3(unsigned m, unsigned i, unsigned j);
// Needs i != j and gcd(2^i+1, 2^m-1) = 1; throws std::invalid_argument otherwise.
std::uint64_t m3_closed_form(unsigned m, unsigned i, unsigned j);

struct ValueDistribution {
    unsigned m = 0;
    unsigned i = 0;
    unsigned j = 0;
    std::map<std::int64_t, std::uint64_t> values;  // value -> multiplicity
    std::uint64_t total() const;
};

// {T(a, b) : a, b in GF(2^m)}, T(a, b) = sum_x (-1)^Tr(a x^(2^i+1) + b x^(2^j+1)).
// Refuses m > 7.
ValueDistribution t_ab_distribution(unsigned m, unsigned i, unsigned j);

struct MomentCheck {
    unsigned power = 0;
    BigInt observed;
    BigInt expected;
    std::string rule;
    bool match = false;
};

struct MomentReport {
    unsigned m = 0;
    unsigned i = 0;
    unsigned j = 0;
    std::vector<MomentCheck> checks;
    bool holds() const;
};

// Sum T, sum T^2 and sum T^3 against q^2, q^2 * (pair count) and q^2 * M3.
MomentReport moments(const ValueDistribution& dist);
MomentReport moments(unsigned m, unsigned i, unsigned j);

// Irreducible code of length 2^m - 1 whose nonzeros are the coset of 1 + 2^i.
CyclicCode irreducible_code(unsigned m, unsigned i);

struct OneWeightResult {
    bool predicted = false;
    bool observed = false;
    std::optional<unsigned> weight;
    unsigned dimension = 0;
};

// 1 <= i <= m/2. Throws std::invalid_argument otherwise.
OneWeightResult one_weight_test(unsigned i, unsigned m);

struct ValueCounts {
    std::uint64_t n0 = 0;
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
};
// Predicted counts of T(a, b) = 0, +2^(m/2), -2^(m/2) over (a, b) != (0, 0). Even m <= 20.
ValueCounts lemma20_counts(unsigned m);

// True when the code with nonzeros on the cosets of 1 + 2^i and 1 + 2^j has a weight
// outside {2^(m-1), 2^(m-1) +- 2^(m/2-1)}. Needs even m not a power of 2,
// gcd(2^i+1, 2^m-1) = 1 and distinct cosets.
bool three_weight_refutation(unsigned m, unsigned i, unsigned j);

// Weight distribution of the irreducible code of 1 + 2^i derived from the sums
// S(a x^(2^i+1)) through w = 2^(m-1) - S/2.
WeightDistribution weights_from_sums(unsigned m, unsigned i);

// True when w = 2^(m-1) + 2^a or 2^(m-1) - 2^a for some a >= 0.
bool near_half_power(unsigned m, unsigned w);

}  // namespace odpc::quad
