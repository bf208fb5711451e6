#include "odpc/cli.hpp"

#include "odpc/numtheory.hpp"
#include "odpc/quadsums.hpp"
#include "odpc/rm2.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace odpc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    bool json = false;
    std::string cache_path;
    unsigned workers = 1;
    std::optional<unsigned> limit;
    bool consent = false;
};

template <class Range>
std::string join(const Range& r, const char* sep = ",")
{
    std::ostringstream s;
    bool first = true;
    for (const auto& v : r) {
        if (!first)
            s << sep;
        s << v;
        first = false;
    }
    return s.str();
}

json big_to_json(const BigInt& v)
{
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
        return v.convert_to<std::uint64_t>();
    if (v < 0 && v >= std::numeric_limits<std::int64_t>::min())
        return v.convert_to<std::int64_t>();
    return v.str();
}

class Session {
public:
    Session(const Config& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err)
    {
        if (!cfg_.cache_path.empty())
            cache_.load(cfg_.cache_path, err_);
    }

    const Config& cfg() const { return cfg_; }
    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }
    DistanceCache& cache() { return cache_; }

    // Enumeration options for a run whose largest enumerated code has dimension k.
    EnumerationOptions options(unsigned k, std::uint32_t n)
    {
        EnumerationOptions o;
        o.workers = cfg_.workers;
        o.max_dimension = cfg_.limit.value_or(cfg_.consent ? 32 : 28);
        if (k > 24) {
            err_ << "note: enumerating a code of dimension " << k << " takes about " << estimate_seconds(k, n, o.workers)
                 << " s with " << o.workers << " worker(s)\n";
            if (!cfg_.consent)
                throw UsageError("dimension " + std::to_string(k) + " exceeds 24; pass --yes-long-run to proceed");
        }
        if (k > o.max_dimension)
            throw UsageError("dimension " + std::to_string(k) + " exceeds the enumeration limit " +
                             std::to_string(o.max_dimension) + " (--limit)");
        return o;
    }

    void finish()
    {
        if (!cfg_.cache_path.empty())
            cache_.save(cfg_.cache_path);
    }

    void emit(const json& j) { out_ << j.dump(2) << "\n"; }

private:
    Config cfg_;
    std::ostream& out_;
    std::ostream& err_;
    DistanceCache cache_;
};

void require_odd_length(std::uint32_t n)
{
    if (n < 3 || n % 2 == 0)
        throw UsageError("n must be an odd integer >= 3");
}

json chain_json(const Chain& c)
{
    return json(c.order);
}

json report_json(const SearchReport& r)
{
    json j;
    j["standard"] = r.standard == Standard::I ? "I" : "II";
    j["profile"] = r.best.d;
    j["dims"] = r.dims.dims;
    j["witnesses"] = json::array();
    for (const auto& w : r.witnesses)
        j["witnesses"].push_back(chain_json(w));
    j["explored"] = r.explored;
    return j;
}

// ---- cosets / code / mindist / wdist

int cmd_cosets(Session& s, std::uint32_t n, const std::vector<std::uint32_t>& generator)
{
    require_odd_length(n);
    const CosetTable table(n);
    const auto summary = chain_counts(n, generator);
    if (s.cfg().json) {
        json j;
        j["n"] = n;
        j["m"] = table.m();
        j["cosets"] = json::array();
        for (const auto& c : table.cosets())
            j["cosets"].push_back({{"leader", c.leader}, {"size", c.elements.size()}, {"elements", c.elements}});
        j["lambda"] = summary.lambda;
        j["chains"] = big_to_json(summary.total_chains);
        j["per_class"] = big_to_json(summary.per_class);
        j["classes"] = big_to_json(summary.num_classes);
        json l = json::object(), g = json::object();
        for (const auto& [v, c] : summary.L)
            l[std::to_string(v)] = c;
        for (const auto& [v, c] : summary.J)
            g[std::to_string(v)] = c;
        j["L"] = l;
        j["J"] = g;
        s.emit(j);
        return exit_ok;
    }
    auto& out = s.out();
    out << "n=" << n << " m=" << table.m() << " cosets=" << table.cosets().size() << "\n";
    for (const auto& c : table.cosets())
        out << "  " << c.leader << " [" << c.elements.size() << "] {" << join(c.elements) << "}\n";
    out << "lambda: " << summary.lambda << "\n";
    out << "chains: " << summary.total_chains << "\n";
    out << "chains per class: " << summary.per_class << "\n";
    out << "classes: " << summary.num_classes << "\n";
    out << "L:";
    for (const auto& [v, c] : summary.L)
        out << " " << v << ":" << c;
    out << "\nJ:";
    for (const auto& [v, c] : summary.J)
        out << " " << v << ":" << c;
    out << "\n";
    return exit_ok;
}

CyclicCode make_code(const CodeSpace& space, const std::vector<std::uint32_t>& leaders)
{
    if (leaders.empty())
        throw UsageError("--leaders needs at least one coset leader");
    return space.code(leaders);
}

int cmd_code(Session& s, std::uint32_t n, const std::vector<std::uint32_t>& leaders, bool with_distance)
{
    require_odd_length(n);
    const CodeSpace space(n);
    const auto code = make_code(space, leaders);
    std::optional<unsigned> d;
    if (with_distance) {
        ChainEvaluator eval(space, s.cache(), s.options(code.k, n));
        d = eval.distance(code.nonzero_leaders);
    }
    if (s.cfg().json) {
        json j;
        j["n"] = n;
        j["k"] = code.k;
        j["leaders"] = code.nonzero_leaders;
        j["generator"] = code.generator.to_hex();
        if (d)
            j["d"] = *d;
        s.emit(j);
    } else {
        auto& out = s.out();
        out << "n: " << n << "\nk: " << code.k << "\nnonzero leaders: " << join(code.nonzero_leaders) << "\n";
        out << "generator (hex, bit 0 = constant term): " << code.generator.to_hex() << "\n";
        out << "g(x) = " << code.generator.to_string() << "\n";
        if (d)
            out << "d: " << *d << "\n";
    }
    s.finish();
    return exit_ok;
}

int cmd_mindist(Session& s, std::uint32_t n, const std::vector<std::uint32_t>& leaders)
{
    require_odd_length(n);
    const CodeSpace space(n);
    const auto code = make_code(space, leaders);
    ChainEvaluator eval(space, s.cache(), s.options(code.k, n));
    const unsigned d = eval.distance(code.nonzero_leaders);
    if (s.cfg().json)
        s.emit({{"n", n}, {"k", code.k}, {"leaders", code.nonzero_leaders}, {"d", d}});
    else
        s.out() << "[" << n << "," << code.k << "," << d << "]\n";
    s.finish();
    return exit_ok;
}

int cmd_wdist(Session& s, std::uint32_t n, const std::vector<std::uint32_t>& leaders)
{
    require_odd_length(n);
    const CodeSpace space(n);
    const auto code = make_code(space, leaders);
    ChainEvaluator eval(space, s.cache(), s.options(code.k, n));
    const auto wd = eval.weights(code.nonzero_leaders);
    if (s.cfg().json) {
        json w = json::array();
        for (const auto& [weight, count] : wd.counts)
            w.push_back({weight, count});
        s.emit({{"n", n}, {"k", code.k}, {"leaders", code.nonzero_leaders}, {"weights", w}});
    } else {
        s.out() << "weight,count\n";
        for (const auto& [weight, count] : wd.counts)
            s.out() << weight << "," << count << "\n";
    }
    s.finish();
    return exit_ok;
}

// ---- chains

struct ChainArgs {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> leaders;
    std::vector<unsigned> dims;
    std::vector<std::uint32_t> prefix;
    bool exhaustive = false;
    unsigned print_limit = 0;
    bool profiles = false;
};

int cmd_chains_enumerate(Session& s, const ChainArgs& a)
{
    require_odd_length(a.n);
    const CodeSpace space(a.n);
    const auto code = make_code(space, a.leaders);
    std::optional<ChainEvaluator> eval;
    if (a.profiles)
        eval.emplace(space, s.cache(), s.options(code.k, a.n));
    json chains = json::array();
    std::uint64_t total = 0, printed = 0;
    enumerate_chains(code, [&](const Chain& c) {
        ++total;
        if (a.print_limit != 0 && printed >= a.print_limit)
            return true;
        ++printed;
        const auto dims = dimension_profile(c, space.cosets());
        std::optional<DistanceProfile> p;
        if (eval)
            p = eval->profiles(c).first;
        if (s.cfg().json) {
            json j{{"order", c.order}, {"dims", dims.dims}};
            if (p)
                j["profile"] = p->d;
            chains.push_back(j);
        } else {
            s.out() << join(c.order) << "  dims " << to_string(dims);
            if (p)
                s.out() << "  profile " << to_string(*p);
            s.out() << "\n";
        }
        return true;
    });
    if (s.cfg().json)
        s.emit({{"chains", chains}, {"total", total}});
    else
        s.out() << "chains: " << total << " (" << printed << " shown)\n";
    s.finish();
    return exit_ok;
}

int cmd_chains_classes(Session& s, const ChainArgs& a)
{
    require_odd_length(a.n);
    const CodeSpace space(a.n);
    const auto code = make_code(space, a.leaders);
    const auto classes = list_classes(code, space.cosets());
    std::uint64_t total = 0;
    for (const auto& [dims, count] : classes)
        total += count;
    if (s.cfg().json) {
        json c = json::array();
        for (const auto& [dims, count] : classes)
            c.push_back({{"dims", dims.dims}, {"chains", count}});
        s.emit({{"classes", c}, {"total", total}});
    } else {
        for (const auto& [dims, count] : classes)
            s.out() << to_string(dims) << "  " << count << " chains\n";
        s.out() << "classes: " << classes.size() << ", chains: " << total << "\n";
    }
    return exit_ok;
}

void print_report(Session& s, const SearchReport& r)
{
    if (s.cfg().json) {
        s.emit(report_json(r));
        return;
    }
    auto& out = s.out();
    const char* tag = r.standard == Standard::I ? "ODPC-I" : "ODPC-II";
    out << tag << " = " << to_string(r.best) << "; " << r.witnesses.size() << " witnesses\n";
    if (r.class_filter)
        out << "class: " << to_string(*r.class_filter) << "\n";
    out << "dims: " << to_string(r.dims) << "\n";
    out << "canonical witness: " << join(r.witnesses.front().order) << "\n";
    for (std::size_t i = 1; i < r.witnesses.size(); ++i)
        out << "witness: " << join(r.witnesses[i].order) << "\n";
    out << "explored: " << r.explored << "\n";
}

int cmd_chains_search(Session& s, const ChainArgs& a, Standard standard)
{
    require_odd_length(a.n);
    const CodeSpace space(a.n);
    const auto code = make_code(space, a.leaders);
    ChainEvaluator eval(space, s.cache(), s.options(code.k, a.n));
    SearchOptions opts;
    opts.required_prefix = a.prefix;
    opts.exhaustive = a.exhaustive;
    SearchReport r;
    if (standard == Standard::I) {
        if (a.dims.empty())
            throw UsageError("chains odpc1 needs --dims");
        r = odpc_standard_i(code, DimensionProfile{a.dims}, eval, opts);
    } else {
        r = odpc_standard_ii(code, eval, opts);
    }
    print_report(s, r);
    s.finish();
    return exit_ok;
}

// ---- rm2

unsigned rm2_dimension(unsigned m)
{
    return 1 + m + m * (m - 1) / 2;
}

int cmd_rm2_profile(Session& s, unsigned m, std::optional<unsigned> prop1, const std::vector<unsigned>& prop2)
{
    if (prop1 && !prop2.empty())
        throw UsageError("--prop1 and --prop2 are exclusive");
    if (!prop2.empty() && prop2.size() != 2)
        throw UsageError("--prop2 takes two values i,j");
    const rm2::RMSpec spec(m);
    ChainEvaluator eval(spec.space(), s.cache(), s.options(rm2_dimension(m), spec.n()));
    Chain chain;
    DistanceProfile formula;
    if (prop1) {
        const auto c = rm2::prop1_chain(spec, *prop1);
        chain = c.chain;
        formula = c.formula;
    } else if (!prop2.empty()) {
        const auto c = rm2::prop2_chain(spec, prop2[0], prop2[1]);
        chain = c.chain;
        formula = c.formula;
    } else {
        chain = rm2::corollary_chain(spec);
        formula = rm2::closed_form_profile(m);
    }
    const auto [profile, dims] = eval.profiles(chain);
    std::vector<std::string> names;
    for (auto l : chain.order)
        names.push_back(spec.name_of_leader(l));
    const bool holds = profile == formula;
    if (s.cfg().json) {
        s.emit({{"m", m},
                {"chain", names},
                {"leaders", chain.order},
                {"dims", dims.dims},
                {"profile", profile.d},
                {"formula", formula.d},
                {"holds", holds}});
    } else {
        auto& out = s.out();
        out << "RM(2," << m << ")*: n=" << spec.n() << " k=" << rm2_dimension(m) << " t=" << spec.t() << "\n";
        out << "chain (smallest code first): " << join(names, ", ") << "\n";
        out << "leaders: " << join(chain.order) << "\n";
        out << "dims: " << to_string(dims) << "\n";
        out << "profile: " << to_string(profile) << "\n";
        out << "formula: " << to_string(formula) << (holds ? "  [match]" : "  [MISMATCH]") << "\n";
    }
    s.finish();
    return holds ? exit_ok : exit_mismatch;
}

int cmd_rm2_verify(Session& s, unsigned m, const std::string& claim_name)
{
    rm2::Claim claim;
    try {
        claim = rm2::parse_claim(claim_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const rm2::RMSpec spec(m);
    ChainEvaluator eval(spec.space(), s.cache(), s.options(rm2_dimension(m), spec.n()));
    const auto report = rm2::verify_theorem(spec, claim, eval);
    if (s.cfg().json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"holds", c.holds}});
        s.emit({{"m", m}, {"claim", rm2::to_string(claim)}, {"checks", checks}, {"holds", report.holds()}});
    } else {
        auto& out = s.out();
        out << "RM(2," << m << ")* " << rm2::to_string(claim) << "\n";
        if (claim == rm2::Claim::thm3)
            out << "ODPC-II = " << report.checks.front().observed << "\n";
        for (const auto& c : report.checks)
            out << (c.holds ? "  PASS " : "  FAIL ") << c.name << ": expected " << c.expected << ", observed "
                << c.observed << "\n";
        out << (report.holds() ? "verified" : "MISMATCH") << "\n";
    }
    s.finish();
    return report.holds() ? exit_ok : exit_mismatch;
}

// ---- sums

void require_index(unsigned m, unsigned i, const char* what)
{
    if (i < 1 || i >= m)
        throw UsageError(std::string(what) + " must satisfy 1 <= " + what + " <= m-1");
}

int cmd_sums_moments(Session& s, unsigned m, unsigned i, unsigned j)
{
    if (m < 2 || m > 7)
        throw UsageError("sums moments needs 2 <= m <= 7");
    require_index(m, i, "i");
    require_index(m, j, "j");
    if (i == j)
        throw UsageError("sums moments needs i != j");
    const auto r = quad::moments(m, i, j);
    if (s.cfg().json) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"power", c.power},
                              {"observed", big_to_json(c.observed)},
                              {"expected", big_to_json(c.expected)},
                              {"rule", c.rule},
                              {"match", c.match}});
        s.emit({{"m", m}, {"i", i}, {"j", j}, {"checks", checks}, {"holds", r.holds()}});
    } else {
        for (const auto& c : r.checks)
            s.out() << (c.match ? "PASS" : "FAIL") << " sum T^" << c.power << " = " << c.observed << ", expected "
                    << c.expected << " (" << c.rule << ")\n";
    }
    return r.holds() ? exit_ok : exit_mismatch;
}

int cmd_sums_rank(Session& s, unsigned m, unsigned i)
{
    if (m < 2 || m > 16)
        throw UsageError("sums rank needs 2 <= m <= 16");
    require_index(m, i, "i");
    const auto ctx = FieldContext::build(m);
    std::map<unsigned, std::uint64_t> ranks;
    for (Element a = 1; a < ctx.size(); ++a)
        ++ranks[quad::bilinear_rank(quad::QuadraticForm{{{i, a}}}, ctx)];
    const unsigned low = m - std::gcd(2 * i, m);
    bool holds = true;
    for (const auto& [r, c] : ranks)
        holds = holds && (r == m || r == low);
    if (s.cfg().json) {
        json dist = json::array();
        for (const auto& [r, c] : ranks)
            dist.push_back({r, c});
        s.emit({{"m", m}, {"i", i}, {"ranks", dist}, {"allowed", {low, m}}, {"holds", holds}});
    } else {
        s.out() << "rank,count\n";
        for (const auto& [r, c] : ranks)
            s.out() << r << "," << c << "\n";
        s.out() << "allowed: " << low << "," << m << (holds ? "  [match]" : "  [MISMATCH]") << "\n";
    }
    return holds ? exit_ok : exit_mismatch;
}

int cmd_sums_dist(Session& s, unsigned m, unsigned i, unsigned j)
{
    if (m < 2 || m > 7)
        throw UsageError("sums dist needs 2 <= m <= 7");
    require_index(m, i, "i");
    require_index(m, j, "j");
    if (i == j)
        throw UsageError("sums dist needs i != j");
    const auto d = quad::t_ab_distribution(m, i, j);
    if (s.cfg().json) {
        json v = json::array();
        for (const auto& [value, count] : d.values)
            v.push_back({value, count});
        s.emit({{"m", m}, {"i", i}, {"j", j}, {"values", v}});
    } else {
        s.out() << "value,count\n";
        for (const auto& [value, count] : d.values)
            s.out() << value << "," << count << "\n";
    }
    return exit_ok;
}

// ---- reproduce

int cmd_reproduce(Session& s)
{
    const auto rows = reproduce_all(s.cache(), s.options(22, 63));
    std::size_t passed = 0;
    for (const auto& r : rows)
        passed += r.pass();
    if (s.cfg().json) {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"label", r.label}, {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass()}});
        s.emit({{"rows", j}, {"passed", passed}, {"total", rows.size()}});
    } else {
        std::size_t width = 0;
        for (const auto& r : rows)
            width = std::max(width, r.label.size());
        for (const auto& r : rows) {
            s.out() << (r.pass() ? "PASS  " : "FAIL  ") << r.label << std::string(width - r.label.size() + 2, ' ')
                    << "expected " << r.expected;
            if (!r.pass())
                s.out() << "  observed " << r.observed;
            s.out() << "\n";
        }
        s.out() << passed << "/" << rows.size() << " rows pass\n";
    }
    s.finish();
    return passed == rows.size() ? exit_ok : exit_mismatch;
}

}  // namespace

std::uint64_t estimate_seconds(unsigned k, std::uint32_t n, unsigned workers)
{
    // Measured throughput is roughly 2e8 codewords per second per 64 coordinates.
    const double words = static_cast<double>((n + 63) / 64);
    const double secs = std::ldexp(1.0, static_cast<int>(k)) * words / (2e8 * std::max(1u, workers));
    return static_cast<std::uint64_t>(secs) + 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Distance profiles of binary cyclic codes along cyclic subcode chains", "odpc"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    unsigned limit = 0;
    app.add_flag("--json", cfg.json, "Emit JSON instead of text");
    app.add_option("--cache", cfg.cache_path, "Distance cache file (JSON lines)");
    app.add_option("--workers", cfg.workers, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
    auto* limit_opt =
        app.add_option("--limit", limit, "Largest code dimension to enumerate (default 28, 32 with --yes-long-run)")
            ->check(CLI::Range(1u, 40u));
    app.add_flag("--yes-long-run", cfg.consent, "Allow enumerations of dimension above 24");

    std::uint32_t n = 0;
    std::vector<std::uint32_t> leaders, generator;
    bool with_distance = false;

    auto* cosets = app.add_subcommand("cosets", "Cyclotomic cosets and chain counts for length n");
    cosets->add_option("--n", n, "Odd code length")->required();
    cosets->add_option("--generator", generator, "Leaders of the cosets in the generator polynomial")->delimiter(',');

    auto* code = app.add_subcommand("code", "Dimension and generator polynomial of a cyclic code");
    code->add_option("--n", n)->required();
    code->add_option("--leaders", leaders, "Nonzero coset leaders")->delimiter(',')->required();
    code->add_flag("--distance", with_distance, "Also compute the minimum distance");

    auto* mindist = app.add_subcommand("mindist", "Minimum distance by exhaustive enumeration");
    mindist->add_option("--n", n)->required();
    mindist->add_option("--leaders", leaders)->delimiter(',')->required();

    auto* wdist = app.add_subcommand("wdist", "Weight distribution as CSV weight,count");
    wdist->add_option("--n", n)->required();
    wdist->add_option("--leaders", leaders)->delimiter(',')->required();

    ChainArgs ca;
    auto* chains = app.add_subcommand("chains", "Cyclic subcode chains");
    chains->require_subcommand(1);
    auto add_code_opts = [&](CLI::App* sub) {
        sub->add_option("--n", ca.n)->required();
        sub->add_option("--leaders", ca.leaders, "Nonzero coset leaders of the full code")->delimiter(',')->required();
    };
    auto* enumerate = chains->add_subcommand("enumerate", "List chains with their dimension profiles");
    add_code_opts(enumerate);
    enumerate->add_option("--limit", ca.print_limit, "Print at most K chains (0 = all)");
    enumerate->add_flag("--profiles", ca.profiles, "Also compute distance profiles");
    auto* classes = chains->add_subcommand("classes", "Dimension profile classes");
    add_code_opts(classes);
    auto* odpc1 = chains->add_subcommand("odpc1", "Optimum distance profile within one dimension class");
    add_code_opts(odpc1);
    odpc1->add_option("--dims", ca.dims, "Dimension profile, largest code first")->delimiter(',')->required();
    odpc1->add_option("--prefix", ca.prefix, "Leaders that must be added first")->delimiter(',');
    odpc1->add_flag("--exhaustive", ca.exhaustive, "Evaluate every chain of the class");
    auto* odpc2 = chains->add_subcommand("odpc2", "Optimum distance profile over all chains");
    add_code_opts(odpc2);
    odpc2->add_option("--prefix", ca.prefix)->delimiter(',');
    odpc2->add_flag("--exhaustive", ca.exhaustive, "Evaluate every chain");

    unsigned m = 0, i = 0, j = 0;
    std::optional<unsigned> prop1;
    unsigned prop1_value = 0;
    std::vector<unsigned> prop2;
    std::string claim;
    auto* rm = app.add_subcommand("rm2", "Punctured second-order Reed-Muller codes");
    rm->require_subcommand(1);
    auto* profile = rm->add_subcommand("profile", "Distance profile of a constructed chain");
    profile->add_option("--m", m)->required()->check(CLI::Range(3u, 16u));
    auto* prop1_opt = profile->add_option("--prop1", prop1_value, "theta_1*-first chain with theta_0 at position u+1");
    profile->add_option("--prop2", prop2, "theta_1*-first chain for even m, parameters i,j")->delimiter(',');
    auto* verify = rm->add_subcommand("verify", "Check an optimality or closed-form claim by brute force");
    verify->add_option("--m", m)->required()->check(CLI::Range(3u, 16u));
    verify->add_option("--claim", claim, "thm1|thm2|thm3|lemma4|lemma6|props")->required();

    auto* sums = app.add_subcommand("sums", "Exponential sums of quadratic forms");
    sums->require_subcommand(1);
    auto* moments = sums->add_subcommand("moments", "Power moments of T(a,b)");
    moments->add_option("--m", m)->required();
    moments->add_option("--i", i)->required();
    moments->add_option("--j", j)->required();
    auto* rank = sums->add_subcommand("rank", "Ranks of a x^(2^i+1) over all a != 0");
    rank->add_option("--m", m)->required();
    rank->add_option("--i", i)->required();
    auto* dist = sums->add_subcommand("dist", "Value distribution of T(a,b) as CSV value,count");
    dist->add_option("--m", m)->required();
    dist->add_option("--i", i)->required();
    dist->add_option("--j", j)->required();

    auto* reproduce = app.add_subcommand("reproduce", "Recompute all worked examples and claim checks");

    std::vector<const char*> argv{"odpc"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (limit_opt->count())
        cfg.limit = limit;
    if (prop1_opt->count())
        prop1 = prop1_value;

    try {
        Session s(cfg, out, err);
        if (*cosets)
            return cmd_cosets(s, n, generator);
        if (*code)
            return cmd_code(s, n, leaders, with_distance);
        if (*mindist)
            return cmd_mindist(s, n, leaders);
        if (*wdist)
            return cmd_wdist(s, n, leaders);
        if (*enumerate)
            return cmd_chains_enumerate(s, ca);
        if (*classes)
            return cmd_chains_classes(s, ca);
        if (*odpc1)
            return cmd_chains_search(s, ca, Standard::I);
        if (*odpc2)
            return cmd_chains_search(s, ca, Standard::II);
        if (*profile)
            return cmd_rm2_profile(s, m, prop1, prop2);
        if (*verify)
            return cmd_rm2_verify(s, m, claim);
        if (*moments)
            return cmd_sums_moments(s, m, i, j);
        if (*rank)
            return cmd_sums_rank(s, m, i);
        if (*dist)
            return cmd_sums_dist(s, m, i, j);
        if (*reproduce)
            return cmd_reproduce(s);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DimensionLimitError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return exit_mismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    err << "error: no command given\n";
    return exit_usage;
}

}  // namespace odpc::cli
