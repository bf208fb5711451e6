#include "odpc/rm2.hpp"

#include "odpc/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace odpc::rm2 {

namespace {

unsigned pow2(unsigned e)
{
    return 1u << e;
}

}  // namespace

RMSpec::RMSpec(unsigned m) : m_(m)
{
    if (m < 3 || m > 16)
        throw std::invalid_argument("RM(2,m)*: m must lie in 3..16");
    t_ = (m % 2 == 1) ? (m - 1) / 2 : (m - 2) / 2;
    space_ = std::make_unique<CodeSpace>(pow2(m) - 1);
}

std::vector<Label> RMSpec::labels() const
{
    std::vector<Label> out{Label::zero(), Label::one()};
    const unsigned top = even() ? t_ + 1 : t_;
    for (unsigned j = 1; j <= top; ++j)
        out.push_back(Label::quadratic(static_cast<int>(j)));
    return out;
}

std::uint32_t RMSpec::exponent(Label label) const
{
    if (label.index < -1)
        throw std::invalid_argument("invalid idempotent label");
    if (label.index == -1)
        return 0;
    if (label.index == 0)
        return 1;
    const unsigned top = even() ? t_ + 1 : t_;
    if (static_cast<unsigned>(label.index) > top)
        throw std::invalid_argument("idempotent index out of range for this m");
    return 1 + pow2(static_cast<unsigned>(label.index));
}

std::uint32_t RMSpec::leader(Label label) const
{
    return space_->theta_star(exponent(label));
}

Label RMSpec::label_of(std::uint32_t leader) const
{
    for (auto l : labels())
        if (this->leader(l) == leader)
            return l;
    throw std::invalid_argument("coset leader " + std::to_string(leader) + " is not a nonzero of RM(2," +
                                std::to_string(m_) + ")*");
}

std::string RMSpec::name(Label label) const
{
    if (label.index == -1)
        return "theta_0";
    return "theta_" + std::to_string(exponent(label)) + "*";
}

std::vector<std::uint32_t> RMSpec::leaders(const std::vector<Label>& labels) const
{
    std::vector<std::uint32_t> out;
    out.reserve(labels.size());
    for (auto l : labels)
        out.push_back(leader(l));
    return out;
}

CyclicCode RMSpec::code() const
{
    return space_->code(leaders(labels()));
}

CyclicCode rm2_code(unsigned m)
{
    if (m < 3 || m > 7)
        throw std::invalid_argument("rm2_code: m must lie in 3..7");
    return RMSpec(m).code();
}

Chain corollary_chain(const RMSpec& spec)
{
    std::vector<Label> order{Label::zero(), Label::one()};
    if (spec.even())
        order.push_back(Label::quadratic(static_cast<int>(spec.t()) + 1));
    for (int j = static_cast<int>(spec.t()); j >= 1; --j)
        order.push_back(Label::quadratic(j));
    return Chain{spec.n(), spec.leaders(order)};
}

DistanceProfile closed_form_profile(unsigned m)
{
    if (m < 3 || m > 30)
        throw std::invalid_argument("closed_form_profile: m must lie in 3..30");
    DistanceProfile p;
    if (m % 2 == 1) {
        const unsigned t = (m - 1) / 2;
        for (unsigned u = 0; u + 1 <= t; ++u)
            p.d.push_back(pow2(2 * t) - pow2(2 * t - u - 1) - 1);
        p.d.push_back(pow2(2 * t) - 1);
        p.d.push_back(pow2(m) - 1);
    } else {
        const unsigned t = (m - 2) / 2;
        for (unsigned u = 0; u <= t; ++u)
            p.d.push_back(pow2(2 * t + 1) - pow2(2 * t - u) - 1);
        p.d.push_back(pow2(2 * t + 1) - 1);
        p.d.push_back(pow2(m) - 1);
    }
    return p;
}

std::vector<std::uint32_t> nested_subcode_leaders(const RMSpec& spec, unsigned h)
{
    const unsigned top = spec.even() ? spec.t() + 1 : spec.t();
    if (h < 1 || h > top)
        throw std::invalid_argument("nested subcode index h out of range");
    std::vector<Label> labels{Label::zero(), Label::one()};
    for (unsigned j = h; j <= top; ++j)
        labels.push_back(Label::quadratic(static_cast<int>(j)));
    return spec.leaders(labels);
}

SubcodeParameters nested_subcode_parameters(unsigned m, unsigned h)
{
    const bool even = m % 2 == 0;
    const unsigned t = even ? (m - 2) / 2 : (m - 1) / 2;
    const unsigned top = even ? t + 1 : t;
    if (h < 1 || h > top)
        throw std::invalid_argument("nested subcode index h out of range");
    SubcodeParameters p;
    p.dimension = m * (t - h + 2) + 1 + (even ? m / 2 : 0);
    p.distance = pow2(m - 1) - pow2(m - h - 1) - 1;
    return p;
}

ConstructedChain prop1_chain(const RMSpec& spec, unsigned u)
{
    if (spec.even() || spec.t() < 2)
        throw std::invalid_argument("prop1_chain needs odd m >= 5");
    const unsigned t = spec.t();
    if (u < 2 || u > t)
        throw std::invalid_argument("prop1_chain: u must satisfy 2 <= u <= t");
    std::vector<Label> order{Label::one()};
    for (unsigned j = t; j >= t - u + 2; --j)
        order.push_back(Label::quadratic(static_cast<int>(j)));
    order.push_back(Label::zero());
    for (unsigned j = t - u + 1; j >= 1; --j)
        order.push_back(Label::quadratic(static_cast<int>(j)));

    ConstructedChain out;
    out.chain = Chain{spec.n(), spec.leaders(order)};
    for (unsigned v = 0; v <= t + 1; ++v) {
        unsigned d;
        if (v <= t - u + 1)
            d = pow2(2 * t) - pow2(2 * t - v - 1) - 1;
        else if (v <= t)
            d = pow2(2 * t) - pow2(2 * t - v);
        else
            d = pow2(2 * t);
        out.formula.d.push_back(d);
    }
    out.dims = dimension_profile(out.chain, spec.space().cosets());
    return out;
}

ConstructedChain prop2_chain(const RMSpec& spec, unsigned i, unsigned j)
{
    if (!spec.even() || spec.t() < 2)
        throw std::invalid_argument("prop2_chain needs even m >= 6");
    const unsigned t = spec.t();
    if (i < 2 || i >= j || j > t + 1)
        throw std::invalid_argument("prop2_chain: need 2 <= i < j <= t + 1");
    std::vector<Label> order{Label::one()};
    const int ti = static_cast<int>(t), ii = static_cast<int>(i), jj = static_cast<int>(j);
    for (int x = ti; x >= ti - ii + 2; --x)
        order.push_back(Label::quadratic(x));
    order.push_back(Label::quadratic(static_cast<int>(t) + 1));
    // l_{t-i+1}, ..., l_{t-j+3}; empty when j = i + 1
    for (int x = ti - ii + 1; x >= ti - jj + 3; --x)
        order.push_back(Label::quadratic(x));
    order.push_back(Label::zero());
    for (int x = ti - jj + 2; x >= 1; --x)
        order.push_back(Label::quadratic(x));
    if (order.size() != t + 3)
        throw std::logic_error("prop2_chain: constructed order has the wrong length");

    ConstructedChain out;
    out.chain = Chain{spec.n(), spec.leaders(order)};
    for (unsigned v = 0; v <= t + 2; ++v) {
        unsigned d;
        if (v + j <= t + 2)
            d = pow2(2 * t + 1) - pow2(2 * t - v) - 1;
        else if (v + i <= t + 2)
            d = pow2(2 * t + 1) - pow2(2 * t - v + 1);
        else if (v <= t + 1)
            d = pow2(2 * t + 1) - pow2(2 * t - v + 2);
        else
            d = pow2(2 * t + 1);
        out.formula.d.push_back(d);
    }
    out.dims = dimension_profile(out.chain, spec.space().cosets());
    return out;
}

Claim parse_claim(const std::string& s)
{
    if (s == "thm1")
        return Claim::thm1;
    if (s == "thm2")
        return Claim::thm2;
    if (s == "thm3")
        return Claim::thm3;
    if (s == "lemma4")
        return Claim::lemma4;
    if (s == "lemma6")
        return Claim::lemma6;
    if (s == "props")
        return Claim::props;
    throw std::invalid_argument("unknown claim '" + s + "'");
}

std::string to_string(Claim c)
{
    switch (c) {
    case Claim::thm1: return "thm1";
    case Claim::thm2: return "thm2";
    case Claim::thm3: return "thm3";
    case Claim::lemma4: return "lemma4";
    case Claim::lemma6: return "lemma6";
    case Claim::props: return "props";
    }
    return "?";
}

bool VerifyReport::holds() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.holds; });
}

namespace {

ClaimCheck equal_check(std::string name, const std::string& expected, const std::string& observed)
{
    return ClaimCheck{std::move(name), expected, observed, expected == observed};
}

std::string chain_names(const RMSpec& spec, const Chain& chain)
{
    std::string s;
    for (auto leader : chain.order) {
        if (!s.empty())
            s += ",";
        s += spec.name_of_leader(leader);
    }
    return s;
}

void require(bool ok, const std::string& why)
{
    if (!ok)
        throw std::invalid_argument(why);
}

}  // namespace

VerifyReport verify_theorem(const RMSpec& spec, Claim claim, ChainEvaluator& eval)
{
    if (&eval.space() != &spec.space() && eval.space().n() != spec.n())
        throw std::invalid_argument("evaluator belongs to a different code length");
    VerifyReport report;
    report.m = spec.m();
    report.claim = claim;
    const auto code = spec.code();
    const auto corollary = corollary_chain(spec);

    switch (claim) {
    case Claim::lemma4:
    case Claim::lemma6: {
        require(claim == Claim::lemma4 ? !spec.even() : spec.even(),
                to_string(claim) + " applies to " + (claim == Claim::lemma4 ? "odd" : "even") + " m");
        const auto [profile, dims] = eval.profiles(corollary);
        report.checks.push_back(equal_check("nested chain profile", to_string(closed_form_profile(spec.m())),
                                            to_string(profile)));
        const unsigned top = spec.even() ? spec.t() + 1 : spec.t();
        for (unsigned h = 1; h <= top; ++h) {
            const auto leaders = nested_subcode_leaders(spec, h);
            const auto predicted = nested_subcode_parameters(spec.m(), h);
            report.checks.push_back(equal_check(
                "nested subcode h=" + std::to_string(h) + " [k,d]",
                std::to_string(predicted.dimension) + "," + std::to_string(predicted.distance),
                std::to_string(eval.dimension(leaders)) + "," + std::to_string(eval.distance(leaders))));
        }
        break;
    }
    case Claim::thm1:
    case Claim::thm2: {
        require(claim == Claim::thm1 ? !spec.even() : spec.even(),
                to_string(claim) + " applies to " + (claim == Claim::thm1 ? "odd" : "even") + " m");
        SearchOptions opts;
        opts.required_prefix = {spec.leader(Label::zero()), spec.leader(Label::one())};
        opts.exhaustive = true;
        const auto search = odpc_standard_ii(code, eval, opts);
        const auto profile = eval.profiles(corollary).first;
        report.checks.push_back(
            equal_check("max over theta_0,theta_1*-first chains", to_string(profile), to_string(search.best)));
        const auto completions = nt::factorial(static_cast<unsigned>(code.nonzero_leaders.size()) - 2);
        report.checks.push_back(equal_check("completions examined", std::to_string(completions),
                                            std::to_string(search.explored)));
        const bool witnessed = std::find(search.witnesses.begin(), search.witnesses.end(), corollary) !=
                               search.witnesses.end();
        report.checks.push_back(equal_check("nested chain is a witness", "yes", witnessed ? "yes" : "no"));
        break;
    }
    case Claim::thm3: {
        require(spec.even(), "thm3 applies to even m");
        const auto search = odpc_standard_ii(code, eval);
        const auto profile = eval.profiles(corollary).first;
        report.checks.push_back(equal_check("ODPC-II", to_string(closed_form_profile(spec.m())),
                                            to_string(search.best)));
        report.checks.push_back(
            equal_check("nested chain attains ODPC-II", to_string(search.best), to_string(profile)));
        const auto first = spec.leader(Label::zero());
        const auto second = spec.leader(Label::one());
        const auto third = spec.leader(Label::quadratic(static_cast<int>(spec.t()) + 1));
        const bool power_of_two = (spec.m() & (spec.m() - 1)) == 0;
        bool starts_ok = true;
        for (const auto& w : search.witnesses) {
            starts_ok = starts_ok && w.order[0] == first && w.order[1] == second;
            if (!power_of_two)
                starts_ok = starts_ok && w.order[2] == third;
        }
        const std::string expected_start = power_of_two ? "theta_0,theta_1*"
                                                        : "theta_0,theta_1*," + spec.name(Label::quadratic(static_cast<int>(spec.t()) + 1));
        report.checks.push_back(equal_check("every witness starts with", expected_start,
                                            starts_ok ? expected_start : "other (" + chain_names(spec, search.witnesses.front()) + ")"));
        break;
    }
    case Claim::props: {
        std::vector<ConstructedChain> built;
        if (!spec.even()) {
            require(spec.t() >= 2, "props needs m >= 5 for odd m");
            for (unsigned u = 2; u <= spec.t(); ++u)
                built.push_back(prop1_chain(spec, u));
        } else {
            require(spec.t() >= 2, "props needs m >= 6 for even m");
            for (unsigned i = 2; i <= spec.t() + 1; ++i)
                for (unsigned j = i + 1; j <= spec.t() + 1; ++j)
                    built.push_back(prop2_chain(spec, i, j));
        }
        for (const auto& c : built) {
            const auto [profile, dims] = eval.profiles(c.chain);
            const std::string tag = "[" + chain_names(spec, c.chain) + "]";
            report.checks.push_back(equal_check("formula vs brute force " + tag, to_string(c.formula),
                                                to_string(profile)));
            SearchOptions opts;
            opts.required_prefix = {spec.leader(Label::one())};
            const auto best = odpc_standard_i(code, dims, eval, opts);
            report.checks.push_back(equal_check("class optimum (theta_1* first) dims " + to_string(dims),
                                                to_string(c.formula), to_string(best.best)));
        }
        break;
    }
    }
    return report;
}

}  // namespace odpc::rm2
