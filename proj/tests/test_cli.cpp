#include "odpc/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using odpc::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool round_trips(const std::string& text)
{
    return nlohmann::json::parse(text).dump(2) + "\n" == text;
}

}  // namespace

TEST_CASE("usage errors exit with 2")
{
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"cosets", "--n", "1"}).code == 2);
    CHECK(call({"cosets", "--n", "20"}).code == 2);
    CHECK(call({"cosets"}).code == 2);
    CHECK(call({"code", "--n", "21", "--leaders", "2"}).code == 2);
    CHECK(call({"rm2", "verify", "--m", "6", "--claim", "thm9"}).code == 2);
    CHECK(call({"rm2", "verify", "--m", "6", "--claim", "thm1"}).code == 2);
    CHECK(call({"rm2", "profile", "--m", "5", "--prop1", "2", "--prop2", "2,3"}).code == 2);
    CHECK(call({"--workers", "0", "cosets", "--n", "21"}).code == 2);
    CHECK(call({"chains", "odpc1", "--n", "21", "--leaders", "0,1,5,7", "--dims", "15,10,8,6"}).code == 2);
    CHECK(call({"sums", "moments", "--m", "8", "--i", "1", "--j", "2"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"chains", "--help"}).code == 0);
}

TEST_CASE("worked examples through the command line")
{
    const auto v = call({"rm2", "verify", "--m", "6", "--claim", "thm3"});
    CHECK(v.code == 0);
    CHECK(v.out.find("ODPC-II = 15,23,27,31,63") != std::string::npos);

    const auto c = call({"chains", "odpc1", "--n", "21", "--leaders", "0,1,5,7", "--dims", "15,9,8,6"});
    CHECK(c.code == 0);
    CHECK(c.out.find("2,6,6,8; 2 witnesses") != std::string::npos);

    const auto p = call({"rm2", "profile", "--m", "6", "--prop2", "2,3"});
    CHECK(p.code == 0);
    CHECK(p.out.find("profile: 15,23,24,24,32") != std::string::npos);

    const auto k = call({"cosets", "--n", "21", "--generator", "3,9"});
    CHECK(k.code == 0);
    CHECK(k.out.find("classes: 12") != std::string::npos);

    const auto g = call({"code", "--n", "21", "--leaders", "0,1,5,7", "--distance"});
    CHECK(g.code == 0);
    CHECK(g.out.find("k: 15") != std::string::npos);
    CHECK(g.out.find("d: 2") != std::string::npos);
    CHECK(g.out.find("g(x) = 1 + x + x^2 + x^3 + x^4 + x^5 + x^6") != std::string::npos);

    const auto w = call({"wdist", "--n", "15", "--leaders", "0,7"});
    CHECK(w.out == "weight,count\n0,1\n7,15\n8,15\n15,1\n");

    const auto m = call({"mindist", "--n", "63", "--leaders", "0,15"});
    CHECK(m.out == "[63,7,24]\n");

    const auto s = call({"sums", "moments", "--m", "6", "--i", "2", "--j", "1"});
    CHECK(s.code == 0);
    CHECK(s.out.find("2326528") != std::string::npos);
    CHECK(call({"sums", "rank", "--m", "6", "--i", "2"}).code == 0);
    CHECK(call({"sums", "dist", "--m", "4", "--i", "1", "--j", "2"}).out.rfind("value,count\n", 0) == 0);

    const auto e = call({"chains", "enumerate", "--n", "21", "--leaders", "0,1,5,7", "--limit", "2"});
    CHECK(e.out.find("chains: 24 (2 shown)") != std::string::npos);
    CHECK(call({"chains", "classes", "--n", "21", "--leaders", "0,1,5,7"}).out.find("classes: 12") !=
          std::string::npos);
}

TEST_CASE("JSON output round-trips byte for byte")
{
    const std::vector<std::vector<std::string>> cmds{
        {"--json", "cosets", "--n", "21", "--generator", "3,9"},
        {"--json", "code", "--n", "21", "--leaders", "0,1,5,7", "--distance"},
        {"--json", "mindist", "--n", "31", "--leaders", "0,15"},
        {"--json", "wdist", "--n", "31", "--leaders", "0,15"},
        {"--json", "chains", "enumerate", "--n", "21", "--leaders", "0,1,5,7", "--profiles"},
        {"--json", "chains", "classes", "--n", "21", "--leaders", "0,1,5,7"},
        {"--json", "chains", "odpc2", "--n", "63", "--leaders", "0,15,23,27,31"},
        {"--json", "chains", "odpc1", "--n", "21", "--leaders", "0,1,5,7", "--dims", "15,9,8,6"},
        {"--json", "rm2", "profile", "--m", "5", "--prop1", "2"},
        {"--json", "rm2", "verify", "--m", "4", "--claim", "lemma6"},
        {"--json", "sums", "moments", "--m", "4", "--i", "1", "--j", "3"},
        {"--json", "sums", "rank", "--m", "6", "--i", "1"},
        {"--json", "sums", "dist", "--m", "4", "--i", "1", "--j", "2"},
    };
    for (const auto& c : cmds) {
        const auto r = call(c);
        CAPTURE(r.out);
        CHECK(r.code == 0);
        CHECK(round_trips(r.out));
    }
    const auto j = nlohmann::json::parse(call(cmds[6]).out);
    CHECK(j["standard"] == "II");
    CHECK(j["profile"] == nlohmann::json({15, 23, 27, 31, 63}));
    CHECK(j["witnesses"] == nlohmann::json::array({{0, 31, 27, 23, 15}}));
    CHECK(j.contains("dims"));
    CHECK(j.contains("explored"));
}

TEST_CASE("long runs need consent")
{
    // RM(2,7)* has dimension 29.
    const auto r = call({"rm2", "verify", "--m", "7", "--claim", "lemma4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--yes-long-run") != std::string::npos);
    CHECK(r.err.find("takes about") != std::string::npos);
    const auto l = call({"--limit", "10", "mindist", "--n", "63", "--leaders", "0,1,3"});
    CHECK(l.code == 2);
    CHECK(l.err.find("limit") != std::string::npos);
    CHECK(odpc::cli::estimate_seconds(29, 127, 1) >= 1);
}

TEST_CASE("cache file is written and reused")
{
    const auto path = std::filesystem::temp_directory_path() / "odpc_cli_cache.jsonl";
    std::filesystem::remove(path);
    CHECK(call({"--cache", path.string(), "mindist", "--n", "63", "--leaders", "0,15"}).code == 0);
    std::ifstream f(path);
    std::string line;
    REQUIRE(std::getline(f, line));
    CHECK(line == R"({"d":24,"leaders":[0,15],"n":63})");
    {
        std::ofstream g(path, std::ios::app);
        g << "not a record\n";
    }
    const auto again = call({"--cache", path.string(), "mindist", "--n", "63", "--leaders", "0,15"});
    CHECK(again.code == 0);
    CHECK(again.err.find("skipping") != std::string::npos);
}

TEST_CASE("reproduce passes")
{
    const auto r = call({"reproduce"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
