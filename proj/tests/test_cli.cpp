#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "partlab/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = partlab::cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("partlab_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static inline int counter = 0;
};

const std::string kMatrix2211 = R"({"top":[2,1,1,0],"bottom":[0,1,0,1]})";

}  // namespace

TEST_CASE("partitions subcommand") {
    const auto r = run({"partitions", "5", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 7);
    CHECK(j["partitions"].size() == 7);
    CHECK(j["partitions"][0] == nlohmann::json::array({5}));

    const auto text = run({"partitions", "3"});
    CHECK(text.out == "(3)\n(2,1)\n(1,1,1)\n");

    // n = 0 has the single empty partition
    const auto zero = run({"partitions", "0"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "()\n");
}

TEST_CASE("matrix and demat subcommands") {
    const auto r = run({"matrix", "6,5,2,2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) ==
          nlohmann::json::parse(R"({"top":[5,2,2,0],"bottom":[1,3,0,2]})"));

    const auto back = run({"demat", "-"}, r.out);
    CHECK(back.code == 0);
    CHECK(back.out == "6+5+2+2\n");

    const auto text = run({"matrix", "6,5,2,2"});
    CHECK(text.out == "( 5 2 2 0 )\n( 1 3 0 2 )\n");
}

TEST_CASE("matrix subcommand rejects bad partitions") {
    CHECK(run({"matrix", "1,2,3"}).code == 2);
    CHECK(run({"matrix", "abc"}).code == 2);
    const auto r = run({"matrix", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("path, hooks, weight and tsq subcommands") {
    const auto path = run({"path", kMatrix2211});
    CHECK(path.out == "(2,4) -> (1,4) -> (1,3) -> (1,2) -> (0,2) -> (0,0)\n");

    const auto hooks = run({"hooks", kMatrix2211, "--format", "json"});
    CHECK(nlohmann::json::parse(hooks.out)["parts"] ==
          nlohmann::json::array({11, 9, 5, 3}));

    const auto weight = run({"weight", kMatrix2211});
    CHECK(weight.out == "28\n");

    const auto tsq = run({"tsq", kMatrix2211});
    CHECK(tsq.out == "28 = (2+1+1)^2 + 2(2^2+1^2+1^2)\n");

    // degenerate single-column matrix
    const auto single = run({"path", R"({"top":[0],"bottom":[5]})", "--format", "json"});
    CHECK(single.out == "{\"points\":[[5,0],[0,0]]}\n");
    CHECK(run({"hooks", R"({"top":[0],"bottom":[5]})"}).out == "empty  m = 0\n");
}

TEST_CASE("matrix input through a file") {
    TempDir dir;
    const auto file = dir.path / "matrix.json";
    std::ofstream(file) << kMatrix2211;
    const auto r = run({"weight", file.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "28\n");
}

TEST_CASE("invalid matrix JSON is a usage error") {
    CHECK(run({"path", "{not json"}).code == 2);
    CHECK(run({"path", "/nonexistent/matrix.json"}).code == 2);
    CHECK(run({"weight", R"({"top":[1,0],"bottom":[1,0]})"}).code == 2);
}

TEST_CASE("freq subcommand shows the solution tuples") {
    const auto r = run({"freq", "72"});
    CHECK(r.code == 0);
    CHECK(r.out.find("f(72) = 2") == 0);
    CHECK(r.out.find("(4,1,1,0,0,0)") != std::string::npos);
    CHECK(r.out.find("(3,3,0,0,0,0)") != std::string::npos);

    const auto j = nlohmann::json::parse(run({"freq", "72", "--format", "json"}).out);
    CHECK(j["frequency"] == 2);
    CHECK(j["systems"][0]["a"] == 18);
    CHECK(j["systems"][0]["b"] == 6);
}

TEST_CASE("gaps subcommand") {
    const auto r = run({"gaps", "10"});
    CHECK(r.out == "1 2 4 5 6 7 9 10\n");
}

TEST_CASE("table subcommand emits the fixed CSV columns") {
    const auto r = run({"table", "4", "--format", "csv"});
    CHECK(r.out == "m,frequency,residue_mod_4\n1,0,1\n2,0,2\n3,1,3\n4,0,0\n");

    TempDir dir;
    const auto file = dir.path / "table.csv";
    const auto w = run({"table", "4", "--out", file.string()});
    CHECK(w.code == 0);
    std::ifstream in(file);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "m,frequency,residue_mod_4\n1,0,1\n2,0,2\n3,1,3\n4,0,0\n");
}

TEST_CASE("verify subcommand") {
    const auto r = run({"verify", "--to", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=12") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    const auto csv = run({"verify", "--to", "3", "--format", "csv"});
    CHECK(csv.out == "n,p_oracle,p_theorem,match\n1,1,1,true\n2,2,2,true\n3,3,3,true\n");

    const auto per_m = run({"verify", "--to", "5", "--per-m", "--format", "json"});
    const auto j = nlohmann::json::parse(per_m.out);
    CHECK(j[4]["per_m"]["24"] == 1);
}

TEST_CASE("verify output is byte-identical across job counts") {
    const auto serial = run({"verify", "--to", "15", "--jobs", "1", "--format", "json"});
    const auto parallel = run({"verify", "--to", "15", "--jobs", "4", "--format", "json"});
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(serial.err == parallel.err);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"partitions"}).code == 2);
    CHECK(run({"partitions", "x"}).code == 2);
    const auto r = run({"freq", "0"});
    CHECK(r.code == 2);
}

TEST_CASE("help exits with 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("partlab") != std::string::npos);
}

TEST_CASE("cache is created, reused and kept consistent") {
    TempDir dir;
    const auto cache = (dir.path / "freq.json").string();

    const auto first = run({"table", "30", "--cache", cache, "--format", "csv"});
    CHECK(first.code == 0);
    REQUIRE(fs::exists(cache));

    const auto second = run({"table", "30", "--cache", cache, "--format", "csv"});
    CHECK(second.out == first.out);
    CHECK(second.err.empty());

    // gaps answered from the same cache match the uncached run
    const auto cached_gaps = run({"gaps", "30", "--cache", cache});
    const auto fresh_gaps = run({"gaps", "30"});
    CHECK(cached_gaps.out == fresh_gaps.out);
}

TEST_CASE("corrupt cache warns and recomputes") {
    TempDir dir;
    const auto cache = (dir.path / "freq.json").string();
    std::ofstream(cache) << "{ this is not json";
    const auto r = run({"table", "10", "--cache", cache, "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.out.find("3,1,3") != std::string::npos);
}

TEST_CASE("wrong cached values are detected by the spot check") {
    TempDir dir;
    const auto cache = (dir.path / "freq.json").string();
    // poison every entry so any sample catches it
    nlohmann::json entries;
    for (int m = 1; m <= 20; ++m) entries[std::to_string(m)] = 7;
    std::ofstream(cache) << nlohmann::json{{"format_version", 1}, {"entries", entries}};
    const auto r = run({"table", "20", "--cache", cache, "--format", "csv", "--seed-check", "3"});
    CHECK(r.code == 0);
    CHECK(r.err.find("disagrees") != std::string::npos);
    CHECK(r.out.find("3,1,3") != std::string::npos);  // recomputed, not the poisoned 7
}

TEST_CASE("environment variable overrides the cache flag") {
    TempDir dir;
    const auto env_cache = (dir.path / "env.json").string();
    const auto flag_cache = (dir.path / "flag.json").string();
    ::setenv("PARTITION_LAB_CACHE", env_cache.c_str(), 1);
    const auto r = run({"freq", "12", "--cache", flag_cache});
    ::unsetenv("PARTITION_LAB_CACHE");
    CHECK(r.code == 0);
    CHECK(fs::exists(env_cache));
    CHECK_FALSE(fs::exists(flag_cache));
}
