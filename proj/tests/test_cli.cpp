#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef FREECOH_CLI_PATH
#error "FREECOH_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(FREECOH_CLI_PATH) + ".test_out";
    std::string cmd = std::string(FREECOH_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream os;
    os << in.rdbuf();
    r.output = os.str();
    return r;
}

}  // namespace

TEST_CASE("pair subcommand prints exact limits as JSON") {
    auto r = run_cli("pair --p 2 --I 0 --J 0,1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["limit"] == "2");
    CHECK(j["case"] == "nested");
    CHECK(j["tail_start"] == 2);
    CHECK(j["poly"] == nlohmann::json::array({"1", "2"}));

    auto d = run_cli("pair --p 2 --I 0 --J 1");
    REQUIRE(d.exit_code == 0);
    CHECK(nlohmann::json::parse(d.output)["limit"] == "0");

    auto e = run_cli("pair --p 3 --I \"\" --J \"\"");
    REQUIRE(e.exit_code == 0);
    CHECK(nlohmann::json::parse(e.output)["limit"] == "1");

    // value(1/2) = 1 + 2*(1/2) + 2*(1/4)/(1/2) = 3
    auto t = run_cli("pair --p 2 --I 0 --J 0,1 --t 1/2");
    REQUIRE(t.exit_code == 0);
    CHECK(nlohmann::json::parse(t.output)["value_at_t"] == "3");
    CHECK(run_cli("pair --p 2 --I 0 --J 0,1 --t 5/4").exit_code == 2);
}

TEST_CASE("pair subcommand handles delta points") {
    auto r = run_cli("pair --p 2 --delta \"\" --J 0,0");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output)["limit"] == "4");
}

TEST_CASE("usage and validation errors exit with code 2") {
    CHECK(run_cli("pair --p 2 --I 0,7 --J 1").exit_code == 2);
    CHECK(run_cli("pair --p 4 --I 0 --J 1").exit_code == 2);
    CHECK(run_cli("pair --p 2 --I 0").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    auto r = run_cli("pair --p 2 --I 0,x --J 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("0,x") != std::string::npos);  // offending field named
}

TEST_CASE("random-cascade output feeds back into pair and verify") {
    std::string tree_path = std::string(FREECOH_CLI_PATH) + ".tree.json";
    auto gen = run_cli("random-cascade --p 2 --depth 3 --seed 9 --out " + tree_path);
    REQUIRE(gen.exit_code == 0);

    auto pair = run_cli("pair --p 2 --cascade " + tree_path + " --I 0,1");
    REQUIRE(pair.exit_code == 0);
    auto j = nlohmann::json::parse(pair.output);
    CHECK(j["case"] == "cascade");

    auto ok = run_cli("verify theorem --p 2 --depth 3 --trees 5 --cascade " + tree_path);
    CHECK(ok.exit_code == 0);

    // corrupt one node value: validation must fail with the node named
    {
        std::ifstream in(tree_path);
        nlohmann::json t;
        in >> t;
        t["values"][0]["re_num"] = 424242;
        std::ofstream out(tree_path);
        out << t.dump();
    }
    auto bad = run_cli("verify theorem --p 2 --depth 3 --trees 5 --cascade " + tree_path);
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("cascade condition violated at node") != std::string::npos);
}

TEST_CASE("sweep emits a monotone CSV error column") {
    auto r = run_cli("sweep --p 2 --I 0 --J 0,1 --kmax 12");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("k,t,value,scaled_value,limit,abs_error", 0) == 0);
    double prev = 1e300;
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        ++rows;
        auto last = line.rfind(',');
        double err = std::stod(line.substr(last + 1));
        CHECK(err <= prev);
        prev = err;
    }
    CHECK(rows == 11);  // k = 2..12
}

TEST_CASE("identical configuration gives byte-identical output") {
    auto a = run_cli("verify lemma1 --p 2 --depth 3 --seed 5");
    auto b = run_cli("verify lemma1 --p 2 --depth 3 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto c = run_cli("random-cascade --p 3 --depth 2 --seed 7");
    auto d = run_cli("random-cascade --p 3 --depth 2 --seed 7");
    CHECK(c.output == d.output);
}

TEST_CASE("verify all passes at small scale") {
    auto r = run_cli("verify all --p 2 --depth 3 --seed 2 --trees 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("theorem:") != std::string::npos);
}
