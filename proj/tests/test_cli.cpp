#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    if (const char* env = std::getenv("AMOEBA_LAB_CLI")) return env;
    for (const char* guess : {"./tools/amoeba-lab", "./build/tools/amoeba-lab",
                              "../tools/amoeba-lab"})
        if (fs::exists(guess)) return guess;
    return "";
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path out = fs::temp_directory_path() / ("amoebalab_cli_" + std::to_string(counter++));
    std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    fs::remove(out);
    return r;
}

}  // namespace

TEST_CASE("cli: newton prints lattice data") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    RunResult r = run("newton -p \"1+x+y\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"vol\":{\"num\":1,\"den\":2}") != std::string::npos);
    CHECK(r.output.find("\"pick_ok\":true") != std::string::npos);
    CHECK(r.output.find("\"g\":0") != std::string::npos);
    CHECK(r.output.find("\"s\":3") != std::string::npos);
}

TEST_CASE("cli: collinear support exits 64") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    CHECK(run("newton -p \"x+x^2\"").exit_code == 64);
    CHECK(run("newton -p \"1 + $\"").exit_code == 64);
    CHECK(run("newton").exit_code == 64);
}

TEST_CASE("cli: json polynomial file input") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    fs::path f = fs::temp_directory_path() / "amoebalab_poly.json";
    std::ofstream(f) << R"({"terms":[{"i":0,"j":0,"c":1.0},{"i":1,"j":0,"c":1.0},)"
                     << R"({"i":0,"j":1,"c":1.0}]})";
    RunResult r = run("newton -p @" + f.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"s\":3") != std::string::npos);
    fs::remove(f);
}

TEST_CASE("cli: classify exit code contract") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    CHECK(run("classify -p \"1+x+y\"").exit_code == 0);
    CHECK(run("classify -p \"x^2+y^2+1\"").exit_code == 1);
    int circle = run("classify -p \"x^2+y^2-1\"").exit_code;
    CHECK(circle >= 1);
    CHECK(circle <= 2);
}

TEST_CASE("cli: classify writes the evidence trail") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    fs::path dir = fs::temp_directory_path() / "amoebalab_classify_out";
    fs::remove_all(dir);
    RunResult r = run("classify -p \"1+x+y\" --resolution 64 --nphi 32 -o " + dir.string());
    CHECK(r.exit_code == 0);
    for (const char* name : {"lattice.json", "arcs.csv", "curvature.json", "gauss_scan.json",
                             "verdict.json", "figure.svg"})
        CHECK(fs::exists(dir / name));
    fs::remove_all(dir);
}

TEST_CASE("cli: report is byte-identical for a fixed seed") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    const std::string args =
        "report -p \"x^2+y^2-1\" --seed 7 --theta-samples 32 --resolution 64 --nphi 32";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    REQUIRE_FALSE(a.output.empty());
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"config\"") != std::string::npos);
    CHECK(a.output.find("\"raster\"") != std::string::npos);
}

TEST_CASE("cli: fibers and raster subcommands") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    RunResult f = run("fibers -p \"1+x+y\" --theta-samples 16");
    CHECK(f.exit_code == 0);
    CHECK(f.output.find("\"totally_real\":true") != std::string::npos);
    RunResult r = run("raster -p \"1+x+y\" --window 6 --resolution 64 --nphi 32");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"area_estimate\"") != std::string::npos);
}

TEST_CASE("cli: tolerance override flag parses") {
    if (cli_path().empty()) SKIP("CLI binary not found");
    CHECK(run("newton -p \"1+x+y\" --tol-pinch 1e-5").exit_code == 0);
    CHECK(run("newton -p \"1+x+y\" --tol-bogus 1").exit_code == 64);
}
