#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace odpc {

struct Coset {
    std::uint32_t leader = 0;            // smallest member
    std::vector<std::uint32_t> elements;  // sorted
};

// Partition of {0, ..., n-1} into 2-cyclotomic cosets, ordered by leader.
class CosetTable {
public:
    explicit CosetTable(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    // Multiplicative order of 2 modulo n.
    unsigned m() const { return m_; }
    const std::vector<Coset>& cosets() const { return cosets_; }
    std::vector<std::uint32_t> leaders() const;

    std::uint32_t leader_of(std::uint32_t element) const;
    bool is_leader(std::uint32_t s) const;
    const Coset& coset(std::uint32_t leader) const;  // throws for a non-leader
    std::size_t size_of(std::uint32_t leader) const { return coset(leader).elements.size(); }
    // Leader of D_{-s mod n}.
    std::uint32_t negated_leader(std::uint32_t s) const;

private:
    std::uint32_t n_;
    unsigned m_;
    std::vector<Coset> cosets_;
    std::vector<std::uint32_t> leader_of_;
    std::vector<std::int32_t> position_;  // leader -> index in cosets_, -1 otherwise
};

// Throws std::invalid_argument for even n or n < 1.
CosetTable cyclotomic_cosets(std::uint32_t n);

// Number of size-v cosets by the Euler-phi sum over divisors g of n with ord(2, n/g) = v.
// The value is cross-checked against a direct tally; v must divide ord(2, n).
std::uint64_t count_L(std::uint32_t n, unsigned v);
std::uint64_t count_L_formula(std::uint32_t n, unsigned v);
std::uint64_t count_L_direct(const CosetTable& table, unsigned v);

using BigInt = boost::multiprecision::cpp_int;

struct CountingSummary {
    unsigned lambda = 0;                // number of nonzero cosets
    BigInt total_chains;                // lambda!
    BigInt per_class;                   // mu = prod_v (L(v) - J(v))!
    BigInt num_classes;                 // lambda! / mu
    std::map<unsigned, std::uint64_t> L;  // size -> number of cosets of that size
    std::map<unsigned, std::uint64_t> J;  // size -> number of generator cosets of that size
};

// generator_leaders: cosets whose minimal polynomials divide the generator polynomial.
CountingSummary chain_counts(std::uint32_t n, std::span<const std::uint32_t> generator_leaders);

}  // namespace odpc
