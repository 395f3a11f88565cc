#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include <nlohmann/json.hpp>

#include "support/run_cli.hpp"

using nlohmann::json;
using qwedge::testing::run_cli;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qwedge-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("straighten emits the documented two-term expansion", "[cli]") {
    const auto r = run_cli("straighten --n 2 --level 2 --indices \"-2,4\"");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["input"] == json::parse("[-2,4]"));
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["word"] == json::parse("[4,-2]"));
    CHECK(j["terms"][0]["coeff"] == json::parse("[[1,1]]"));
    CHECK(j["terms"][1]["word"] == json::parse("[2,0]"));
    CHECK(j["terms"][1]["coeff"] == json::parse("[[0,-1],[2,1]]"));
}

TEST_CASE("identical invocations produce identical bytes", "[cli]") {
    const std::string cmd = "decomp --n 2 --level 2 --charge 1,-1 --size 2 --sign minus --no-cache";
    const auto a = run_cli(cmd), b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("bar of a vacuum is itself", "[cli]") {
    const auto r = run_cli("bar --n 2 --level 2 --charge \"1,-1\" --partition \"[[],[]]\"");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["multipartition"] == json::parse("[[],[]]"));
    CHECK(j["terms"][0]["coeff"] == json::parse("[[0,1]]"));
}

TEST_CASE("canon reports the classical six-box coefficient", "[cli]") {
    const auto r =
        run_cli("canon --n 2 --level 1 --charge -3 --partition \"[[6]]\" --sign minus --no-cache");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["lambda"] == json::parse("[[6]]"));
    bool found = false;
    for (const auto& term : j["terms"])
        if (term["multipartition"] == json::parse("[[5,1]]")) {
            CHECK(term["coeff"] == json::parse("[[-1,-1]]"));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("decomp of the empty block is the one-by-one identity", "[cli]") {
    const auto r = run_cli("decomp --n 2 --level 2 --charge 0,0 --size 0 --sign plus --no-cache");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j["order"].size() == 1);
    CHECK(j["entries"] == json::parse("[[0,0,[[0,1]]]]"));
}

TEST_CASE("decomp formats", "[cli]") {
    const std::string base = "decomp --n 2 --level 1 --charge 0 --size 3 --sign minus --no-cache";
    const auto csv = run_cli(base + " --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("row,col,row_label,col_label,coeff\n", 0) == 0);

    const auto tex = run_cli(base + " --format latex");
    REQUIRE(tex.exit_code == 0);
    CHECK(tex.out.find("\\begin{array}") != std::string::npos);

    const auto bad = run_cli(base + " --format yaml");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("warm cache changes nothing but the speed", "[cli]") {
    TempDir tmp;
    const std::string base = "decomp --n 2 --level 2 --charge 2,0 --size 2 --sign minus";
    const std::string cached = base + " --cache-dir " + tmp.path.string();
    const auto cold = run_cli(cached);
    REQUIRE(cold.exit_code == 0);
    CHECK_FALSE(std::filesystem::is_empty(tmp.path));
    const auto warm = run_cli(cached);
    REQUIRE(warm.exit_code == 0);
    CHECK(cold.out == warm.out);
    const auto fresh = run_cli(base + " --no-cache");
    CHECK(fresh.out == cold.out);
}

TEST_CASE("single theorem checks succeed end to end", "[cli]") {
    const auto r = run_cli(
        "check-theorems --theorem A --n 2 --level 2 --charge 3,0 --size 2 --j 1 --sign minus");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["theorem"] == "A");
    CHECK(j["pass"] == true);
    CHECK(j["qualifying"].get<int>() > 0);
}

TEST_CASE("campaigns are reproducible from their seed", "[cli]") {
    const std::string cmd = "check-theorems --theorem B --campaign 3 --seed 11 --jobs 2";
    const auto a = run_cli(cmd), b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto j = json::parse(a.out);
    CHECK(j["reports"].size() == 3);
    CHECK_FALSE(j.contains("elapsed_ms"));

    const auto timed = run_cli(cmd + " --timings");
    CHECK(json::parse(timed.out).contains("elapsed_ms"));
}

TEST_CASE("abacus draws the worked configuration", "[cli]") {
    const auto r = run_cli(
        "abacus --n 2 --level 3 --charge 2,0,-2 --partition \"[[],[1,1],[4]]\" --r 10");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find('o') != std::string::npos);
    CHECK(r.out.find("m=0") != std::string::npos);
    const auto again = run_cli(
        "abacus --n 2 --level 3 --charge 2,0,-2 --partition \"[[],[1,1],[4]]\" --r 10");
    CHECK(again.out == r.out);
}

TEST_CASE("flag problems exit with code 2", "[cli]") {
    CHECK(run_cli("straighten --n 2 --level 2").exit_code == 2);           // missing indices
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("decomp --n 2 --level 2 --charge nope --size 1").exit_code == 2);
    CHECK(run_cli("bar --n 1 --level 2 --charge 0,0 --partition \"[[],[]]\"").exit_code == 2);
    CHECK(run_cli("canon --n 2 --level 1 --charge 0 --partition \"[[1]]\" --sign sideways")
              .exit_code == 2);
}

TEST_CASE("help is help", "[cli]") {
    const auto top = run_cli("--help");
    CHECK(top.exit_code == 0);
    CHECK(top.out.find("straighten") != std::string::npos);
    CHECK(top.out.find("decomp") != std::string::npos);
}
