#include "odpc/cli.hpp"

#include "odpc/numtheory.hpp"
#include "odpc/quadsums.hpp"
#include "odpc/rm2.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <sstream>

namespace odpc::cli {

namespace {

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string profile_and_dims(const std::pair<DistanceProfile, DimensionProfile>& p)
{
    return to_string(p.first) + " dims " + to_string(p.second);
}

// One evaluator per m, sharing the caller's cache.
class Workspace {
public:
    Workspace(DistanceCache& cache, const EnumerationOptions& opts) : cache_(cache), opts_(opts) {}

    const rm2::RMSpec& spec(unsigned m)
    {
        auto& e = entries_[m];
        if (!e.spec) {
            e.spec = std::make_unique<rm2::RMSpec>(m);
            e.eval = std::make_unique<ChainEvaluator>(e.spec->space(), cache_, opts_);
        }
        return *e.spec;
    }
    ChainEvaluator& eval(unsigned m)
    {
        spec(m);
        return *entries_[m].eval;
    }

    // Distance of the code with nonzeros theta_0 (when with_zero) plus the listed theta_s^*.
    unsigned distance(unsigned m, bool with_zero, std::initializer_list<std::uint32_t> exponents)
    {
        const auto& sp = spec(m);
        std::vector<std::uint32_t> leaders;
        if (with_zero)
            leaders.push_back(0);
        for (auto s : exponents)
            leaders.push_back(sp.space().theta_star(s));
        return eval(m).distance(leaders);
    }

private:
    struct Entry {
        std::unique_ptr<rm2::RMSpec> spec;
        std::unique_ptr<ChainEvaluator> eval;
    };
    DistanceCache& cache_;
    EnumerationOptions opts_;
    std::map<unsigned, Entry> entries_;
};

}  // namespace

std::vector<ReproduceRow> reproduce_all(DistanceCache& cache, const EnumerationOptions& opts)
{
    std::vector<ReproduceRow> rows;
    auto add = [&](std::string label, std::string expected, std::string observed) {
        rows.push_back({std::move(label), std::move(expected), std::move(observed)});
    };
    Workspace ws(cache, opts);

    // Length 21 with generator cosets {3,6,12} and {9,15,18}.
    {
        const std::vector<std::uint32_t> generator{3, 9};
        const auto c = chain_counts(21, generator);
        std::ostringstream s;
        s << "lambda=" << c.lambda << " chains=" << c.total_chains << " mu=" << c.per_class
          << " classes=" << c.num_classes;
        add("n=21 chain counts", "lambda=4 chains=24 mu=2 classes=12", s.str());

        const CodeSpace space(21);
        const auto code = space.code(std::vector<std::uint32_t>{0, 1, 5, 7});
        ChainEvaluator eval(space, cache, opts);
        const auto r = odpc_standard_i(code, DimensionProfile{{15, 9, 8, 6}}, eval);
        add("n=21 class 15,9,8,6 optimum", "2,6,6,8; 2 witnesses",
            to_string(r.best) + "; " + std::to_string(r.witnesses.size()) + " witnesses");
        add("n=21 size-3 minimal polynomials", "1 + x^2 + x^3 | 1 + x + x^3",
            space.minimal_polynomial(3).to_string() + " | " + space.minimal_polynomial(9).to_string());
    }

    // Nested chains and their closed forms.
    add("m=5 nested chain", "7,11,15,31 dims 16,11,6,1",
        profile_and_dims(ws.eval(5).profiles(rm2::corollary_chain(ws.spec(5)))));
    add("m=4 nested chain", "3,5,7,15 dims 11,7,5,1",
        profile_and_dims(ws.eval(4).profiles(rm2::corollary_chain(ws.spec(4)))));
    add("m=6 nested chain", "15,23,27,31,63 dims 22,16,10,7,1",
        profile_and_dims(ws.eval(6).profiles(rm2::corollary_chain(ws.spec(6)))));
    for (unsigned m : {4u, 5u, 6u}) {
        const auto claim = m % 2 ? rm2::Claim::lemma4 : rm2::Claim::lemma6;
        add("m=" + std::to_string(m) + " closed-form profile and nested subcodes", "yes",
            yes_no(rm2::verify_theorem(ws.spec(m), claim, ws.eval(m)).holds()));
    }

    // Unconditional search for m = 6 and the intermediate distances it visits.
    {
        const auto r = odpc_standard_ii(ws.spec(6).code(), ws.eval(6));
        add("m=6 ODPC-II", "15,23,27,31,63", to_string(r.best));
        std::string w;
        for (auto l : r.witnesses.front().order)
            w += (w.empty() ? "" : ",") + ws.spec(6).name_of_leader(l);
        add("m=6 ODPC-II witness", "theta_0,theta_1*,theta_9*,theta_5*,theta_3*; 1 witness",
            w + "; " + std::to_string(r.witnesses.size()) + " witness");
        auto d = [&](bool z, std::initializer_list<std::uint32_t> e) { return std::to_string(ws.distance(6, z, e)); };
        add("m=6 theta_0 + theta_1*, theta_3*, theta_5*, theta_9*", "31,24,31,27",
            d(true, {1}) + "," + d(true, {3}) + "," + d(true, {5}) + "," + d(true, {9}));
        add("m=6 theta_0 + pairs 1+3, 1+5, 1+9, 5+3, 5+9", "23,23,27,24,23",
            d(true, {1, 3}) + "," + d(true, {1, 5}) + "," + d(true, {1, 9}) + "," + d(true, {5, 3}) + "," +
                d(true, {5, 9}));
        add("m=6 theta_0 + triples 1+9+3, 1+9+5", "15,23", d(true, {1, 9, 3}) + "," + d(true, {1, 9, 5}));
    }

    // theta_1*-first chains.
    {
        const auto c = rm2::prop1_chain(ws.spec(5), 2);
        const auto p = ws.eval(5).profiles(c.chain);
        add("m=5 u=2 formula", "7,11,12,16 dims 16,11,10,5", to_string(c.formula) + " dims " + to_string(c.dims));
        add("m=5 u=2 brute force", "7,11,12,16 dims 16,11,10,5", profile_and_dims(p));
    }
    {
        const auto c = rm2::prop2_chain(ws.spec(6), 2, 3);
        const auto p = ws.eval(6).profiles(c.chain);
        add("m=6 i=2 j=3 formula", "15,23,24,24,32 dims 22,16,15,12,6",
            to_string(c.formula) + " dims " + to_string(c.dims));
        add("m=6 i=2 j=3 brute force", "15,23,24,24,32 dims 22,16,15,12,6", profile_and_dims(p));
    }
    for (unsigned m : {5u, 6u}) {
        add("m=" + std::to_string(m) + " theta_1*-first chains: formula = brute force = class optimum", "yes",
            yes_no(rm2::verify_theorem(ws.spec(m), rm2::Claim::props, ws.eval(m)).holds()));
    }

    // Optimality among chains starting theta_0, theta_1*.
    for (unsigned m : {4u, 5u, 6u}) {
        const auto claim = m % 2 ? rm2::Claim::thm1 : rm2::Claim::thm2;
        add("m=" + std::to_string(m) + " nested chain optimal among theta_0,theta_1*-first chains", "yes",
            yes_no(rm2::verify_theorem(ws.spec(m), claim, ws.eval(m)).holds()));
    }
    for (unsigned m : {4u, 6u})
        add("m=" + std::to_string(m) + " unconditional optimum equals the nested chain", "yes",
            yes_no(rm2::verify_theorem(ws.spec(m), rm2::Claim::thm3, ws.eval(m)).holds()));

    // m = 4: adding theta_0 to theta_{l_i}^* alone gives distance below 7.
    add("m=4 theta_0 + theta_3*, theta_0 + theta_5*", "3,5",
        std::to_string(ws.distance(4, true, {3})) + "," + std::to_string(ws.distance(4, true, {5})));

    // Number theory.
    add("coset counts n=21 sizes 1,2,3,6", "1,1,2,2",
        std::to_string(count_L(21, 1)) + "," + std::to_string(count_L(21, 2)) + "," + std::to_string(count_L(21, 3)) +
            "," + std::to_string(count_L(21, 6)));
    {
        bool ok = true;
        for (unsigned a = 1; a <= 16; ++a)
            for (unsigned b = 1; b <= 16; ++b)
                ok = ok && nt::gcd_two_pow_valuation(a, b) == nt::gcd_two_pow_direct(a, b);
        add("gcd(2^a+1, 2^b-1) formula, a,b <= 16", "yes", yes_no(ok));
    }
    {
        std::string s;
        for (unsigned m = 4; m <= 32; m += 2)
            if (!nt::coprime_exponent_witness(m))
                s += (s.empty() ? "" : ",") + std::to_string(m);
        add("even m <= 32 without a coprime exponent", "4,8,16,32", s);
    }

    // Quadratic forms and exponential sums.
    add("M2 (6,2) (6,1) (4,2)", "64,190,76",
        std::to_string(quad::count_m2(6, 2)) + "," + std::to_string(quad::count_m2(6, 1)) + "," +
            std::to_string(quad::count_m2(4, 2)));
    add("M3 (6,2,1) direct, closed form", "568,568",
        std::to_string(quad::count_m3(6, 2, 1)) + "," + std::to_string(quad::m3_closed_form(6, 2, 1)));
    add("M3 (6,2,3) direct, closed form", "190,190",
        std::to_string(quad::count_m3(6, 2, 3)) + "," + std::to_string(quad::m3_closed_form(6, 2, 3)));
    {
        const auto r = quad::moments(6, 2, 1);
        std::string s;
        for (const auto& c : r.checks)
            s += (s.empty() ? "" : ",") + c.observed.str();
        add("m=6 (2,1) sums of T, T^2, T^3", "4096,262144,2326528", s);
    }
    {
        const auto ctx = FieldContext::build(6);
        bool ok = true;
        for (unsigned i : {1u, 2u})
            for (Element a = 1; a < ctx.size(); ++a) {
                const unsigned r = quad::bilinear_rank(quad::QuadraticForm{{{i, a}}}, ctx);
                ok = ok && (r == 6 || r == 6 - std::gcd(2 * i, 6u));
            }
        add("m=6 ranks of a x^(2^i+1) in {m, m - gcd(2i,m)}", "yes", yes_no(ok));
    }
    auto one_weight = [](unsigned i, unsigned m) {
        const auto r = quad::one_weight_test(i, m);
        return std::string(r.observed ? "one weight " + std::to_string(*r.weight) : "several weights") + " k=" +
               std::to_string(r.dimension);
    };
    add("m=6 i=1 irreducible code", "several weights k=6", one_weight(1, 6));
    add("m=6 i=2 irreducible code", "one weight 32 k=6", one_weight(2, 6));
    add("m=6 i=3 irreducible code", "one weight 36 k=3", one_weight(3, 6));
    add("m=4 i=2 irreducible code", "one weight 10 k=2", one_weight(2, 4));
    add("m=6 two-coset codes (2,1) (2,3) not three-weight", "yes,yes",
        yes_no(quad::three_weight_refutation(6, 2, 1)) + "," + yes_no(quad::three_weight_refutation(6, 2, 3)));
    {
        const auto v = quad::lemma20_counts(4);
        add("m=4 predicted T value counts", "15,150,90",
            std::to_string(v.n0) + "," + std::to_string(v.n_plus) + "," + std::to_string(v.n_minus));
    }
    for (unsigned m : {4u, 8u}) {
        bool ok = true;
        for (unsigned i = 1; i <= (m - 2) / 2; ++i) {
            const auto w = weight_distribution(quad::irreducible_code(m, i)).nonzero_weights();
            ok = ok && w.size() >= 2;
            for (auto x : w)
                ok = ok && quad::near_half_power(m, x);
        }
        add("m=" + std::to_string(m) + " irreducible codes: weights 2^(m-1) +- 2^a, not one-weight", "yes",
            yes_no(ok));
    }
    return rows;
}

}  // namespace odpc::cli
