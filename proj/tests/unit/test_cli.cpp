#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "riskframe");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = riskframe::cli::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("riskframe_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("design prints the strengthening factors") {
    const Run r = run({"design", "--frame", "8x8", "--damage", "1x1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("B_sf = 2.06429") != std::string::npos);
    CHECK(r.out.find("R_sf = 1.1531") != std::string::npos);
}

TEST_CASE("optimize from a scenario file") {
    const auto dir = scratch("opt");
    std::ofstream(dir / "ref.json") << "{}";
    const Run r = run({"optimize", "--scenario", (dir / "ref.json").string(), "--p-ld", "0.1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda_B* = 0.899") != std::string::npos);
    CHECK(r.out.find("lambda_C* = 1.296") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("threshold of the low frame") {
    const Run r = run({"threshold", "--frame", "4x16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status = bracketed") != std::string::npos);
    CHECK(r.out.find("p_LD_th = 0.0") != std::string::npos);
}

TEST_CASE("trace, beta and evaluate") {
    const Run t = run({"trace"});
    CHECK(t.code == 0);
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 5);
    const Run b = run({"beta", "--lambda-b", "0.9", "--lambda-c", "1.3"});
    CHECK(b.code == 0);
    CHECK(b.out.find("apt,bending,3.99146,") != std::string::npos);
    const Run e = run({"evaluate", "--lambda-b", "0.9", "--lambda-c", "1.3"});
    CHECK(e.code == 0);
    CHECK(e.out.find("C_TE = 1.16687") != std::string::npos);
    const Run n = run({"evaluate", "--normal"});
    CHECK(n.out.find("C_const = 1\n") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"optimize", "--no-such-flag"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"design", "--frame", "eight"}).code == 2);
    CHECK(run({"optimize", "--p-ld", "2"}).code == 2);
    CHECK(run({"optimize", "--damage", "0x0"}).code == 2);
    CHECK(run({"sweep"}).code == 1);
    CHECK(run({"sweep", "--catalog", "unknown"}).code == 2);

    const auto dir = scratch("bad");
    std::ofstream(dir / "bad.json") << R"({"psi": 9})";
    const Run r = run({"optimize", "--scenario", (dir / "bad.json").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("psi") != std::string::npos);
    std::ofstream(dir / "typo.json") << R"({"geometry": {"stories": 9}})";
    CHECK(run({"design", "--scenario", (dir / "typo.json").string()}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("trace writes a byte-identical file on re-run") {
    const auto dir = scratch("trace");
    const auto path = (dir / "trace.csv").string();
    REQUIRE(run({"trace", "--out", path}).code == 0);
    const std::string first = slurp(path);
    REQUIRE(run({"trace", "--out", path}).code == 0);
    CHECK(slurp(path) == first);
    fs::remove_all(dir);
}

TEST_CASE("reference tables match the committed golden files") {
    const fs::path golden = fs::path(RISKFRAME_GOLDEN_DIR) / "reference-tables";
    const auto dir = scratch("tables");
    const Run r = run({"reference-tables", "--out", dir.string(), "--jobs", "2"});
    REQUIRE(r.code == 0);
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(golden)) {
        const auto produced = dir / entry.path().filename();
        INFO(entry.path().filename().string());
        REQUIRE(fs::exists(produced));
        CHECK(slurp(produced) == slurp(entry.path()));
        ++compared;
    }
    CHECK(compared == 7);
    fs::remove_all(dir);
}

TEST_CASE("study sweep matches its golden table") {
    const fs::path golden = fs::path(RISKFRAME_GOLDEN_DIR) / "study";
    const auto dir = scratch("sweep");
    const Run r = run({"sweep", "--study", (golden / "small.json").string(), "--out", dir.string(), "--jobs", "3"});
    REQUIRE(r.code == 0);
    CHECK(slurp(dir / "small.csv") == slurp(golden / "small.csv"));
    CHECK(slurp(dir / "small_lambda.svg") == slurp(golden / "small_lambda.svg"));
    fs::remove_all(dir);
}
