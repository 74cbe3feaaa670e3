#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "scalar/cli.hpp"
#include "scalar/fixture.hpp"

#include <json.hpp>

using scalar::cli::run;

namespace {

const std::string kFixtures = SCALAR_FIXTURE_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run call(std::vector<std::string> args) {
    args.insert(args.begin(), "scalarctl");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval prints the functional value") {
    const Run r = call({"--fixture", fixture("gw_orthant.json"), "eval", "--functional", "gw", "--point", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    const Run h = call({"--fixture", fixture("hu_orthant.json"), "eval", "--point", "-1,-1"});
    CHECK(h.code == 0);
    CHECK(h.out == "-1\n");
}

TEST_CASE("parse errors exit with 2") {
    CHECK(call({"--fixture", fixture("missing.json"), "eval", "--point", "1,2"}).code == 2);
    CHECK(call({"--fixture", fixture("gw_orthant.json"), "eval", "--point", "1,2,3"}).code == 2);
    CHECK(call({"--fixture", fixture("gw_orthant.json"), "eval", "--functional", "nope", "--point", "1,2"}).code == 2);
    CHECK(call({"report", "nonsense"}).code == 2);
    CHECK(call({"--tol", "-1", "report", "axioms"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("check-pair reports a valid pair and its certificates") {
    const Run r = call({"--fixture", fixture("pair_1d.json"), "check-pair", "--G", "G", "--H", "H"});
    CHECK(r.code == 0);
    const auto brace = r.out.find('{');
    REQUIRE(brace != std::string::npos);
    const auto j = nlohmann::json::parse(r.out.substr(brace));
    CHECK(j["valid"] == true);
    CHECK(j["is_ds"]["yes"] == false);
    CHECK(j["convexity"]["convex"] == false);
    CHECK(j["cond_disjoint"]["gap"].get<double>() > 0);
}

TEST_CASE("check-pair exits with 3 on an invalid pair") {
    const Run r = call({"--fixture", fixture("overlap_1d.json"), "check-pair", "--G", "G", "--H", "H"});
    CHECK(r.code == 3);
    CHECK(r.err.find("cond_disjoint") != std::string::npos);
}

TEST_CASE("construct 1d names the failing inequality") {
    const Run ok = call({"construct", "1d", "2", "2.5", "0", "1"});
    CHECK(ok.code == 0);
    const Run bad = call({"construct", "1d", "2", "3", "0", "1"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("b - d < a - c") != std::string::npos);
}

TEST_CASE("dual cone and relations") {
    const Run d = call({"--fixture", fixture("gw_orthant.json"), "dual-cone"});
    CHECK(d.code == 0);
    const auto j = nlohmann::json::parse(d.out);
    CHECK(j["dual"]["rays"].size() == 2);
    const Run rel = call({"--fixture", fixture("pair_1d.json"), "relations", "--G", "G", "--H", "H", "--kind", "set"});
    CHECK(rel.code == 0);
    CHECK(nlohmann::json::parse(rel.out)["relate"] == "true");
}

TEST_CASE("report runs a suite") {
    const Run r = call({"report", "constructions"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3/3 passed") != std::string::npos);
}

TEST_CASE("plots need a planar fixture") {
    const auto dir = std::filesystem::temp_directory_path() / "scalar_cli_test";
    std::filesystem::create_directories(dir);
    const Run r = call({"--fixture", fixture("cube_3d.json"), "plot", "--out", (dir / "cube.svg").string()});
    CHECK(r.code == 4);
}

TEST_CASE("plots are SVG and deterministic") {
    const auto dir = std::filesystem::temp_directory_path() / "scalar_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.svg", b = dir / "b.svg";
    const std::vector<std::string> base = {"--fixture", fixture("construct_orthant.json"), "plot", "--construct", "--out"};
    auto args_a = base, args_b = base;
    args_a.push_back(a.string());
    args_b.push_back(b.string());
    REQUIRE(call(args_a).code == 0);
    REQUIRE(call(args_b).code == 0);
    const std::string sa = slurp(a), sb = slurp(b);
    CHECK(sa == sb);
    CHECK(sa.rfind("<?xml", 0) == 0);
    CHECK(sa.find("<svg") != std::string::npos);
    CHECK(sa.find("version=\"1.1\"") != std::string::npos);
    CHECK(sa.find("</svg>") != std::string::npos);
}

TEST_CASE("stdout is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--fixture", fixture("construct_orthant.json"), "construct", "2d"},
             {"--fixture", fixture("pair_1d.json"), "check-pair", "--G", "G", "--H", "H"},
             {"--seed", "5", "report", "axioms"}}) {
        const Run a = call(args), b = call(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("normalize is a fixed point") {
    for (const char* name : {"gw_orthant.json", "hu_orthant.json", "pair_1d.json", "overlap_1d.json",
                             "ds_generator.json", "construct_orthant.json", "construct_skew.json", "cube_3d.json"}) {
        const Run once = call({"--fixture", fixture(name), "normalize"});
        REQUIRE(once.code == 0);
        const scalar::Fixture fx = scalar::parse_fixture(once.out);
        CHECK(scalar::emit_fixture(fx) == once.out);
    }
}

TEST_CASE("fixture parsing") {
    using scalar::FixtureError;
    using scalar::parse_fixture;
    CHECK_THROWS_AS(parse_fixture("{"), FixtureError);
    CHECK_THROWS_AS(parse_fixture("{\"dim\": 0}"), FixtureError);
    CHECK_THROWS_AS(parse_fixture("{\"dim\": 2, \"extra\": 1}"), FixtureError);
    CHECK_THROWS_AS(parse_fixture("{\"dim\": 2, \"polytopes\": {\"G\": {\"vertices\": [[1]]}}}"), FixtureError);
    CHECK_THROWS_AS(parse_fixture("{\"dim\": 1, \"functionals\": {\"f\": {\"variant\": \"DS\", \"G\": \"G\"}}}"),
                    FixtureError);
    CHECK_THROWS_AS(parse_fixture("{\"dim\": 1, \"tolerances\": {\"eps_feas\": 0.5}}"), FixtureError);
    const auto fx = parse_fixture("{\"dim\": 2}");
    CHECK(fx.ordering_cone().rays().size() == 2);
    CHECK(scalar::format_number(-0.0) == "0");
    CHECK(scalar::format_number(0.1) == "0.1");
    CHECK(scalar::format_number(1.0 / 3) == "0.333333333333");
}

}
