#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "qred/cli.hpp"
#include "qred/dsl.hpp"
#include "qred/reduce.hpp"
#include "support.hpp"

using namespace qred;
using testing::fixture;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), {"--fixtures", testing::fixture_dir()});
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("qred-test-" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("reference command lines") {
    Run check = run_cli({"check", "FIX-A44", "--property", "syzygy-finite", "--bound", "12"});
    CHECK(check.code == exit_code::holds);
    json r = check.report();
    CHECK(r["trace"].size() == 1);
    CHECK(r["certificates"][0]["rule"] == "monomial (terminal)");

    Run reduce = run_cli({"reduce", "FIX-G56"});
    CHECK(reduce.code == exit_code::holds);
    CHECK(reduce.report()["trace"].empty());
    CHECK(reduce.report()["results"]["terminal"]["name"] == "G56");

    Run witness = run_cli({"witness", "FIX-A2", "FIX-A2", "--identity", "--level", "0"});
    CHECK(witness.code == exit_code::holds);
    CHECK(witness.report()["results"]["verdict"] == "holds");
}

TEST_CASE("report layout") {
    json r = run_cli({"analyze", "FIX-KR2"}).report();
    std::vector<std::string> keys;
    for (auto it = r.begin(); it != r.end(); ++it)
        keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    CHECK(keys == std::vector<std::string>{"algebra", "certificates", "command", "conditional", "elapsed_ms",
                                           "results", "seed", "trace"});
    CHECK(r["elapsed_ms"].is_null());
    CHECK(r["algebra"]["dim"] == 2);
    CHECK(r["algebra"]["loewy_length"] == 2);
    CHECK(r["results"]["serial"] == true);
    CHECK(run_cli({"--timing", "analyze", "FIX-KR2"}).report()["elapsed_ms"].is_number());
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"analyze", "FIX-NOPE"}).code == exit_code::usage);
    CHECK(run_cli({"frobnicate", "FIX-A2"}).code == exit_code::usage);
    CHECK(run_cli({"check", "FIX-A2", "--property", "finitistic"}).code == exit_code::usage);
    CHECK(run_cli({"reduce", "FIX-KR2", "--quotient", "x"}).code == exit_code::fails);
    CHECK(run_cli({"check", "FIX-G56", "--property", "syzygy-finite"}).code == exit_code::inconclusive);
    CHECK(run_cli({"witness", "FIX-KR2", "--identity", "--level", "1"}).code == exit_code::fails);

    std::string loop = temp_file("loop.alg", "algebra L\nvertices 1\narrow x : 1 -> 1\n");
    CHECK(run_cli({"analyze", loop}).code == exit_code::inconclusive);
    std::string broken = temp_file("broken.alg", "algebra B\nvertices 1\narrow x : 1 -> 7\n");
    Run r = run_cli({"analyze", broken});
    CHECK(r.code == exit_code::usage);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("requested steps are applied before the fixpoint") {
    Run q = run_cli({"reduce", "FIX-G56", "--quotient-vertex", "1", "--bound", "8"});
    CHECK(q.code == exit_code::holds);
    json r = q.report();
    REQUIRE(r["trace"].size() >= 1);
    CHECK(r["trace"][0]["kind"] == "homological_quotient");
    CHECK(r["trace"][0]["output_dim"] == 5);

    Run c = run_cli({"reduce", "FIX-A44", "--corner", "2", "--variant", "bounded-tor"});
    CHECK(c.code == exit_code::holds);
    CHECK(c.report()["trace"][0]["kind"] == "corner");

    Run t = run_cli({"reduce", "FIX-A44", "--triangular"});
    CHECK(t.report()["trace"][0]["kind"] == "triangular_split");
}

TEST_CASE("corner emission round-trips") {
    for (auto [name, vertices] : {std::pair{"FIX-G56", "s,2"}, {"FIX-A44", "2"}, {"FIX-E57", "1,2"}}) {
        Run c = run_cli({"corner", name, "--vertices", vertices, "--emit", "-"});
        CHECK(c.code == exit_code::holds);
        AlgebraHandle reparsed = complete(parse_algebra(c.out), 16);
        std::vector<VertexId> kept;
        auto a = fixture(name);
        std::stringstream ss(vertices);
        std::string v;
        while (std::getline(ss, v, ','))
            kept.push_back(*a->quiver().find_vertex(v));
        CHECK(reparsed->dim() == corner_basis(*a, kept).size());
        CHECK(reparsed->is_monomial() == corner_presentation(a, kept).algebra->is_monomial());
    }
}

TEST_CASE("module files") {
    auto a2 = fixture("FIX-A2");
    Rep p1 = parse_module("module P1 over A2\ndim 1 = 1\ndim 2 = 1\nmap a = [[1]]\n", a2);
    CHECK(is_isomorphic(p1, projective(a2, 0)).answer == Answer::Yes);
    Rep s = parse_module("module S over A2\ndim 2 = 1\n", a2);
    CHECK(is_isomorphic(s, simple(a2, 1)).answer == Answer::Yes);
    CHECK(is_isomorphic(parse_module(format_module(p1, "P1"), a2), p1).answer == Answer::Yes);

    auto kr2 = fixture("FIX-KR2");
    CHECK_THROWS_WITH_AS(parse_module("module M over KR2\ndim 1 = 2\nmap x = [[1,0],[0,1]]\n", kr2),
                         doctest::Contains("x*x"), ParseError);
    CHECK_THROWS_AS(parse_module("module M over KR2\ndim 1 = 2\nmap x = [[1,0]]\n", kr2), ParseError);
    CHECK_THROWS_AS(parse_module("module M over A2\ndim 1 = 1\n", kr2), ParseError);

    std::string file = temp_file("p1.mod", format_module(p1, "P1"));
    Run r = run_cli({"resolve", "FIX-A2", "--module", file});
    CHECK(r.code == exit_code::holds);
    CHECK(r.report()["results"]["pd"]["value"] == 0);
    CHECK(run_cli({"resolve", "FIX-A2", "--simple", "1"}).report()["results"]["pd"]["value"] == 1);
}

TEST_CASE("bimodule files") {
    auto a44 = fixture("FIX-A44");
    Bimodule reg = regular_bimodule(a44);
    std::string text = format_bimodule(reg, "A");
    Bimodule back = parse_bimodule(text, a44, a44);
    CHECK(is_isomorphic(back.rep, reg.rep).answer == Answer::Yes);

    std::string m = temp_file("m.bimod", text), n = temp_file("n.bimod", text);
    Run r = run_cli({"witness", "FIX-A44", "--bimodules", m, n, "--level", "0"});
    CHECK(r.code == exit_code::holds);
}

TEST_CASE("seeding and determinism") {
    CHECK(run_cli({"analyze", "FIX-A2"}).report()["seed"] == 1);
    CHECK(run_cli({"--seed", "42", "analyze", "FIX-A2"}).report()["seed"] == 42);
    setenv("QRED_SEED", "7", 1);
    CHECK(run_cli({"analyze", "FIX-A2"}).report()["seed"] == 7);
    CHECK(run_cli({"--seed", "3", "analyze", "FIX-A2"}).report()["seed"] == 3);
    unsetenv("QRED_SEED");

    std::vector<std::string> args{"--seed", "5", "witness", "FIX-A44", "--candidate", "2", "--level-max", "2"};
    CHECK(run_cli(args).out == run_cli(args).out);
}
