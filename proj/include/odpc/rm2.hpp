#pragma once

#include "odpc/chains.hpp"

#include <memory>
#include <string>
#include <vector>

// Cyclic structure of the punctured second-order Reed-Muller code RM(2,m)*.
namespace odpc::rm2 {

// Primitive idempotents of RM(2,m)*: index -1 is theta_0, 0 is theta_1^*,
// j >= 1 is theta_{l_j}^* with l_j = 1 + 2^j.
struct Label {
    int index = -1;

    static Label zero() { return {-1}; }
    static Label one() { return {0}; }
    static Label quadratic(int j) { return {j}; }
    bool operator==(const Label&) const = default;
};

class RMSpec {
public:
    // 3 <= m <= 16.
    explicit RMSpec(unsigned m);

    unsigned m() const { return m_; }
    unsigned t() const { return t_; }
    bool even() const { return m_ % 2 == 0; }
    std::uint32_t n() const { return space_->n(); }
    const CodeSpace& space() const { return *space_; }

    // theta_0, theta_1^*, theta_{l_1}^*, ..., theta_{l_t}^* and theta_{l_{t+1}}^* for even m.
    std::vector<Label> labels() const;
    // s with the idempotent's nonzeros on D_{-s}: 0, 1 or 1 + 2^j.
    std::uint32_t exponent(Label label) const;
    std::uint32_t leader(Label label) const;
    Label label_of(std::uint32_t leader) const;
    std::string name(Label label) const;
    std::string name_of_leader(std::uint32_t leader) const { return name(label_of(leader)); }

    std::vector<std::uint32_t> leaders(const std::vector<Label>& labels) const;
    CyclicCode code() const;

private:
    unsigned m_;
    unsigned t_;
    std::unique_ptr<CodeSpace> space_;
};

// 3 <= m <= 7.
CyclicCode rm2_code(unsigned m);

// Nested chain theta_0, theta_1^*, (theta_{l_{t+1}}^* for even m), theta_{l_t}^*, ..., theta_{l_1}^*.
Chain corollary_chain(const RMSpec& spec);
DistanceProfile closed_form_profile(unsigned m);

// Nonzeros theta_0 + theta_1^* + sum_{j >= h} theta_{l_j}^* and its predicted parameters.
struct SubcodeParameters {
    unsigned dimension = 0;
    unsigned distance = 0;
};
std::vector<std::uint32_t> nested_subcode_leaders(const RMSpec& spec, unsigned h);
SubcodeParameters nested_subcode_parameters(unsigned m, unsigned h);

struct ConstructedChain {
    Chain chain;
    DistanceProfile formula;
    DimensionProfile dims;
};

// Odd m = 2t+1 >= 5, 2 <= u <= t: theta_1^* first, theta_0 in position u+1.
ConstructedChain prop1_chain(const RMSpec& spec, unsigned u);
// Even m = 2t+2 >= 6, 2 <= i < j <= t+1: theta_{l_{t+1}}^* in position i+1, theta_0 in position j+1.
ConstructedChain prop2_chain(const RMSpec& spec, unsigned i, unsigned j);

enum class Claim { thm1, thm2, thm3, lemma4, lemma6, props };
Claim parse_claim(const std::string& s);
std::string to_string(Claim c);

struct ClaimCheck {
    std::string name;
    std::string expected;
    std::string observed;
    bool holds = false;
};

struct VerifyReport {
    unsigned m = 0;
    Claim claim = Claim::thm1;
    std::vector<ClaimCheck> checks;
    bool holds() const;
};

// Checks one optimality or closed-form claim by brute force. Throws std::invalid_argument
// when the claim does not apply to m (wrong parity, m too small).
VerifyReport verify_theorem(const RMSpec& spec, Claim claim, ChainEvaluator& eval);

}  // namespace odpc::rm2
