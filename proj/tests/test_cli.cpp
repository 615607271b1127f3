#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef GINDEX_CLI_PATH
#error "GINDEX_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "cli_test_stdout.tmp";
    std::string cmd =
        std::string(GINDEX_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

}  // namespace


TEST_CASE("expand prints the pinned table rows", "[cli]") {
    RunResult r = run_cli("expand --n 4 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "(c c1^3 + 4 c^2 c1 c2 + c^3 c3) f1 + (7 c^2 c1^2 + 4 c^3 c2) f2 + "
          "(6 c^3 c1) f3 + (c^4) f4\n");
    CHECK(run_cli("expand --n 1").out == "(c) f1\n");
}

TEST_CASE("family and pkmu single-value outputs", "[cli]") {
    CHECK(run_cli("family --id andre --n 3").out == "x + 4x^2\n");
    CHECK(run_cli("pkmu --k 3 --mu 2,1,1 --n 7").out == "896\n");
    CHECK(run_cli("family --id type-b --n 2").out == "1 + 6x + x^2\n");
}

TEST_CASE("type grouping JSON carries the four type records for n = 3", "[cli]") {
    RunResult r = run_cli("expand --n 3 --grouping type --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["types"].size() == 4);
    std::vector<long long> ps;
    for (const auto& rec : doc["types"]) ps.push_back(rec["p"].get<long long>());
    CHECK(ps == std::vector<long long>{1, 3, 1, 1});
}

TEST_CASE("JSON output is deterministic and round-trips byte-for-byte", "[cli]") {
    RunResult a = run_cli("expand --n 5 --format json");
    RunResult b = run_cli("expand --n 5 --format json");
    CHECK(a.out == b.out);
    auto doc = nlohmann::ordered_json::parse(a.out);
    CHECK(doc.dump(2) + "\n" == a.out);

    RunResult t1 = run_cli("tableaux --n 4 --g-index --format json");
    RunResult t2 = run_cli("tableaux --n 4 --g-index --format json");
    CHECK(t1.out == t2.out);
}

TEST_CASE("tableaux listing includes the worked figure with its g-vector", "[cli]") {
    RunResult r = run_cli("tableaux --n 7 --shape-k 2 --shape-mu 3,2 --g-index");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("g = (1,1,1,2,1,1,2), G = 4") != std::string::npos);
}

TEST_CASE("exit codes: usage 2, size cap 3, verify success 0", "[cli]") {
    CHECK(run_cli("oracle --stat alternating --n 12").exit_code == 3);
    CHECK(run_cli("pkmu --n 5 --k 2 --mu 4").exit_code == 2);       // k + |mu| != n
    CHECK(run_cli("family --id no-such-family --n 3").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("verify --suite table").exit_code == 0);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify emits one PASS line per check", "[cli]") {
    RunResult r = run_cli("verify --suite fibers --nmax 5");
    CHECK(r.exit_code == 0);
    std::size_t lines = 0, passes = 0;
    std::stringstream ss(r.out);
    std::string line;
    while (std::getline(ss, line)) {
        ++lines;
        if (line.rfind("PASS", 0) == 0) ++passes;
    }
    CHECK(passes >= 5);
    CHECK(lines == passes + 1);  // trailing summary line
}

TEST_CASE("pkmu cache file round-trips and stale schemas are ignored", "[cli]") {
    std::string cache = "pkmu_cache_test.tmp.json";
    std::remove(cache.c_str());
    RunResult first = run_cli("pkmu --n 7 --k 3 --mu 2,1,1 --cache " + cache);
    CHECK(first.exit_code == 0);
    CHECK(first.out == "896\n");
    std::ifstream in(cache);
    REQUIRE(in.good());
    auto doc = nlohmann::json::parse(in);
    CHECK(doc["schema"] == "gindex-pkmu-cache-v1");
    CHECK(doc["values"].contains("3|2,1,1"));
    CHECK(doc["values"]["3|2,1,1"] == "896");
    RunResult second = run_cli("pkmu --n 7 --k 3 --mu 2,1,1 --cache " + cache);
    CHECK(second.out == "896\n");

    // a cache with a different schema tag is ignored, not migrated
    std::ofstream bad(cache);
    bad << "{\"schema\":\"gindex-pkmu-cache-v0\",\"values\":{\"3|2,1,1\":\"1\"}}";
    bad.close();
    RunResult third = run_cli("pkmu --n 7 --k 3 --mu 2,1,1 --cache " + cache);
    CHECK(third.out == "896\n");
    std::remove(cache.c_str());
}

TEST_CASE("grammar subcommand derives through the rule DSL", "[cli]") {
    RunResult r = run_cli("grammar --rules \"x -> y; y -> y\" --u x --target y --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x y^3 + 4 x^2 y^2 + x^3 y\n");
    RunResult c = run_cli(
        "grammar --rules \"x -> y; y -> 1\" --u x --target x --n 4 --check-expansion");
    CHECK(c.exit_code == 0);
    CHECK(run_cli("grammar --rules \"x -> z\" --target x --n 1").exit_code == 2);
}

TEST_CASE("oracle and family b-file output", "[cli]") {
    // rows n = 0..3: A_0 = 1, A_1 = x, A_2 = x + x^2, A_3 = x + 4x^2 + x^3
    RunResult r = run_cli("family --id eulerian --nmax 3 --format bfile");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1\n2 1\n3 1\n4 1\n5 1\n6 4\n7 1\n");
    RunResult o = run_cli("oracle --stat des-aug --n 4");
    CHECK(o.out == "x + 11x^2 + 11x^3 + x^4\n");
    RunResult s = run_cli("oracle --stat asc-s --s 1,3,5");
    CHECK(s.exit_code == 0);
    CHECK(s.out == "1 + 10x + 4x^2\n");
}

