#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("THURSTONLAB_CLI");
    REQUIRE_MESSAGE(p != nullptr, "THURSTONLAB_CLI must point at the binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream f(path);
    f << text;
    return path;
}

std::string square_file() {
    return write_temp("tl_cli_square.json", R"({
      "name": "square", "b1": 2,
      "alexander": [{"exp": [0,0], "coeff": 1}, {"exp": [1,0], "coeff": 1},
                    {"exp": [0,1], "coeff": 1}],
      "dual_ball_vertices": [[1,1],[1,-1],[-1,1],[-1,-1]]
    })");
}

} // namespace

TEST_CASE("bound golden output") {
    std::string f = square_file();
    RunResult r = run("bound " + f + " --euler 0,2 --sigma 1,0 --curve 3,5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("value") == 7);
    CHECK(j.at("status") == "EXACT");
    CHECK(j.at("provenance") == "Corollary 1.5");
    CHECK(j.at("niceness") == "NICE");

    // Byte-identical on a second run.
    RunResult r2 = run("bound " + f + " --euler 0,2 --sigma 1,0 --curve 3,5");
    CHECK(r.out == r2.out);
}

TEST_CASE("bound unsupported case") {
    std::string f = square_file();
    RunResult r = run("bound " + f + " --euler 1,0 --sigma 0,1 --curve 0,2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("status") == "UNSUPPORTED");
    CHECK(j.at("provenance") == "none");
    CHECK(j.at("xi") == true);
}

TEST_CASE("gysin violation exits 2") {
    std::string f = square_file();
    RunResult r = run("bound " + f + " --euler 1,0 --sigma 1,0 --curve 0,0");
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j.at("error") == "GYSIN_VIOLATION");
}

TEST_CASE("schema error exits 1") {
    std::string bad = write_temp("tl_cli_bad.json", R"({"name": "x", "b1": 2})");
    RunResult r = run("norm " + bad + " --sigma 1,0");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j.at("error") == "BAD_SCHEMA");
}

TEST_CASE("norm and ball") {
    std::string f = square_file();
    RunResult r = run("norm " + f + " --sigma 2,3");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("norm") == 5);

    RunResult b = run("ball " + f);
    json jb = json::parse(b.out);
    CHECK(jb.at("vertices").size() == 4);
    CHECK(jb.at("edges").size() == 4);
    CHECK(jb.at("degenerate") == false);
}

TEST_CASE("ball svg emission") {
    std::string f = square_file();
    std::string svg = "/tmp/tl_cli_ball.svg";
    RunResult r = run("ball " + f + " --svg " + svg);
    CHECK(r.exit_code == 0);
    std::ifstream in(svg);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("<svg") == 0);
    CHECK(text.find("circle") != std::string::npos);
}

TEST_CASE("xi subcommands") {
    std::string f = square_file();
    RunResult r = run("xi list " + f);
    json j = json::parse(r.out);
    CHECK(j.at("classes").size() == 8);
    CHECK(j.at("count") == 8);

    CHECK(json::parse(run("xi test " + f + " --e 1,0").out).at("xi") == true);
    CHECK(json::parse(run("xi test " + f + " --e 2,0").out).at("xi") == false);
    CHECK(json::parse(run("theta test " + f + " --e 2,0").out).at("theta") == true);
}

TEST_CASE("nice check modes") {
    std::string f = square_file();
    json j = json::parse(run("nice check " + f).out);
    CHECK(j.at("status") == "NICE");
    CHECK(j.at("method") == "partition");

    json jf = json::parse(run("nice check " + f + " --fast").out);
    CHECK(jf.at("status") == "SUFFICIENT_ONLY_PASS");

    // Environment cutoff drops the exact method.
    std::string cmd = "THURSTONLAB_MAX_SUPPORT=2 " + cli_path() + " nice check " + f;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    pclose(pipe);
    CHECK(json::parse(out).at("status") == "SUFFICIENT_ONLY_PASS");
}

TEST_CASE("betti and torsion") {
    std::string f = square_file();
    json j = json::parse(run("betti " + f + " --euler 1,0").out);
    CHECK(j.at("b2") == 2);
    CHECK(j.at("b2_plus") == 1);

    json jt = json::parse(run("betti " + f + " --euler 0,0 --torsion").out);
    CHECK(jt.at("status") == "product-up-to-cover");
}

TEST_CASE("sw average") {
    std::string f = write_temp("tl_cli_sw.json", R"({
      "name": "sw", "b1": 2,
      "dual_ball_vertices": [[1,1],[1,-1],[-1,1],[-1,-1]],
      "sw_support": [{"c1": [0,0], "value": 1}, {"c1": [2,0], "value": 1},
                     {"c1": [4,0], "value": 1}]
    })");
    json j = json::parse(run("sw average " + f + " --euler 1,0").out);
    CHECK(j.at("support").size() == 1);
    CHECK(j.at("support")[0].at("value") == 3);
    CHECK(j.at("provenance") == "Theorem 2.1");

    json jz = json::parse(run("sw average " + f + " --euler 0,0").out);
    CHECK(jz.at("support").size() == 3);
    CHECK(jz.at("provenance") == "Remark 1");
}

TEST_CASE("cover check") {
    std::string f = write_temp("tl_cli_cover.json", R"({
      "base": {"name": "b", "b1": 1, "dual_ball_vertices": [[1],[-1]]},
      "cover": {"name": "c", "b1": 1, "dual_ball_vertices": [[1],[-1]]},
      "deg_N": 2, "q": 1,
      "pullback": [[2]],
      "pushforward": [[1]],
      "euler": [3]
    })");
    json j = json::parse(run("cover check " + f).out);
    CHECK(j.at("composition_ok") == true);
    CHECK(j.at("deg_M") == 2);
    CHECK(j.at("all_ok") == true);
    CHECK(j.at("euler_of_cover") == json::array({6}));
}

TEST_CASE("symplectic") {
    std::string f = write_temp("tl_cli_sympl.json", R"({
      "name": "marked", "b1": 2,
      "dual_ball_vertices": [[1,1],[1,-1],[-1,1],[-1,-1]],
      "fibered_marks": [3]
    })");
    json j = json::parse(run("symplectic " + f + " --sigma 1,2 --curve 2,0").out);
    CHECK(j.at("symplectic_candidate") == true);
    json j2 = json::parse(run("symplectic " + f + " --sigma 1,0 --curve 2,0").out);
    CHECK(j2.at("symplectic_candidate") == false);
}

TEST_CASE("fuzz subcommand is deterministic and clean") {
    RunResult r = run("fuzz norms --trials 40 --seed 7");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("failures") == 0);
    CHECK(j.at("trials") == 40);
    RunResult r2 = run("fuzz norms --trials 40 --seed 7");
    CHECK(r.out == r2.out);

    RunResult obs = run("fuzz observation --trials 25 --seed 3");
    CHECK(obs.exit_code == 0);
    CHECK(json::parse(obs.out).at("failures") == 0);

    RunResult claim = run("fuzz claim --trials 25 --seed 5");
    CHECK(claim.exit_code == 0);
    CHECK(json::parse(claim.out).at("failures") == 0);
}
