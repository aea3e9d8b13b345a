#include "phi8/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace phi8;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("phi8_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
                 std::to_string(std::rand()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, VerifyJsonAllHold) {
    const auto r = run({"verify", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "verify");
    EXPECT_TRUE(j["all_hold"].get<bool>());
    EXPECT_EQ(j["reports"].size(), identity_names().size());
    for (const auto& rep : j["reports"]) {
        EXPECT_TRUE(rep["holds"].get<bool>()) << rep["name"];
        EXPECT_TRUE(rep["witness"].is_null());
    }
}

TEST(Cli, VerifyOnly) {
    const auto r = run({"verify", "--only", "golden_cartan", "--only", "char_polys"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[PASS] golden_cartan"), std::string::npos);
    EXPECT_NE(r.out.find("2/2 identities hold"), std::string::npos);
    EXPECT_EQ(run({"verify", "--only", "nope"}).code, 2);
}

TEST(Cli, Powers) {
    const auto r = run({"powers", "-n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sum scalar 7, diff scalar 3√5"), std::string::npos) << r.out;
    const auto j = nlohmann::json::parse(run({"powers", "-n", "5", "--json"}).out);
    EXPECT_EQ(j["sum_scalar"], "5√5");
    EXPECT_EQ(j["diff_scalar"], "11");
    EXPECT_EQ(run({"powers", "-n", "0"}).code, 2);
    EXPECT_EQ(run({"powers"}).code, 2);
}

TEST(Cli, RootsE8) {
    const auto r = run({"roots", "--matrix", "cmE8", "--max-height", "30"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("120 positive roots\n", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("height 29: 1 (cumulative 120)"), std::string::npos);
}

TEST(Cli, RootsFromFileAndOutputs) {
    TempDir dir;
    const auto matrix = dir.path() / "a2.txt";
    std::ofstream(matrix) << "2; -1\n-1; 2\n";
    const auto dot = dir.path() / "a2.dot";
    const auto csv = dir.path() / "a2.csv";
    const auto r = run({"roots", "--matrix-file", matrix.string(), "--dot", dot.string(), "--csv", csv.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("3 positive roots", 0), 0u);
    EXPECT_EQ(slurp(dot).rfind("digraph hasse {", 0), 0u);
    EXPECT_EQ(slurp(csv).rfind("height,coeffs,weight,parents\n", 0), 0u);
}

TEST(Cli, OutDirEnvironment) {
    TempDir dir;
    ::setenv(cli::kOutDirEnv, dir.path().c_str(), 1);
    const auto r = run({"roots", "--matrix", "cmU", "--mode", "serre-free", "--max-height", "8", "--dot", "sub/cmu.dot"});
    ::unsetenv(cli::kOutDirEnv);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("120 positive roots"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(dir.path() / "sub" / "cmu.dot"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "--bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "powers"}).code, 2);
    EXPECT_EQ(run({"roots"}).code, 2);
    EXPECT_EQ(run({"roots", "--matrix", "no/such/file.txt"}).code, 2);
    EXPECT_EQ(run({"roots", "--matrix", "U"}).code, 2);
    EXPECT_EQ(run({"roots", "--matrix", "cmE8", "--mode", "weird"}).code, 2);
    EXPECT_EQ(run({"lattice", "--check", "everything"}).code, 2);
    EXPECT_EQ(run({"project"}).code, 2);
    EXPECT_EQ(run({"project", "--all", "--dims", "1,2,3"}).code, 2);
    EXPECT_EQ(run({"project", "--dims", "1,1,2"}).code, 2);
    EXPECT_EQ(run({"project", "--dims", "1,2"}).code, 2);
    EXPECT_EQ(run({"project", "--dims", "1,2,3", "--basis", "V"}).code, 2);
    EXPECT_EQ(run({"dump", "Q"}).code, 2);
    const auto r = run({"roots"});
    EXPECT_NE(r.err.find("--matrix"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, Lattice) {
    const auto r = run({"lattice", "--check", "hamming", "--json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["all_hold"].get<bool>());
    EXPECT_EQ(run({"lattice", "--check", "hadamard-map"}).code, 0);
}

TEST(Cli, ProjectSingleSubset) {
    TempDir dir;
    const auto r = run({"project", "--dims", "2,3,4", "--json", "--obj", dir.path().string()});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["basis"], "U");
    ASSERT_EQ(j["reports"].size(), 1u);
    EXPECT_EQ(j["reports"][0]["dims"], nlohmann::json::array({2, 3, 4}));
    EXPECT_TRUE(std::filesystem::exists(dir.path() / "dims_2_3_4.obj"));
}

TEST(Cli, DumpRoundTrips) {
    for (const auto& name : constant_names()) {
        const auto r = run({"dump", name});
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(parse_matrix(r.out), *named_constant(name)) << name;
    }
}

TEST(Cli, Deterministic) {
    TempDir dir;
    const auto a = run({"roots", "--matrix", "cmE8", "--max-height", "30", "--json", "--dot",
                        (dir.path() / "a.dot").string(), "--csv", (dir.path() / "a.csv").string()});
    const auto b = run({"roots", "--matrix", "cmE8", "--max-height", "30", "--json", "--dot",
                        (dir.path() / "b.dot").string(), "--csv", (dir.path() / "b.csv").string()});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(dir.path() / "a.dot"), slurp(dir.path() / "b.dot"));
    EXPECT_EQ(slurp(dir.path() / "a.csv"), slurp(dir.path() / "b.csv"));
}
