#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct run_result {
    int exit_code;
    std::string out;
};

// Runs the installed binary with a shell command line; stdout is captured,
// stderr is folded into it so error text is visible to the checks.
run_result run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path tmp =
        fs::temp_directory_path() / ("oneplane_cli_" + std::to_string(counter++));
    const std::string cmd =
        std::string(CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream buf;
    buf << in.rdbuf();
    fs::remove(tmp);
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, buf.str()};
}

std::string fixture(const std::string& name) {
    return (fs::path(FIXTURE_DIR) / (name + ".opg")).string();
}

fs::path write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

}   // namespace

TEST_CASE("validate accepts the corpus and reports sizes") {
    run_result r = run_cli("validate " + fixture("maxe84"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ok n=8 m=20 x=4 faces=18 components=1\n");
}

TEST_CASE("validate rejects malformed input with exit code 2") {
    const fs::path bad = write_temp(
        "bad_cross.opg",
        "opg 1\n"
        "vertex 0\nvertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\n"
        "edge 0 0 2\nedge 1 1 3\nedge 2 4 5\n"
        "cross 0 0 1 pos\ncross 1 0 2 pos\n"
        "rot 0 e0\nrot 1 e1\nrot 2 e0\nrot 3 e1\nrot 4 e2\nrot 5 e2\n");
    run_result r = run_cli("validate " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("EdgeCrossedTwice") != std::string::npos);
    fs::remove(bad);
}

TEST_CASE("invariants emits one json object per drawing") {
    run_result r = run_cli("invariants --format json-lines " + fixture("maxe84"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          R"({"n":8,"m":20,"x":4,"A":-4,"twoB":0,"C":0,"identity_ok":true,)"
          R"("face_hist.3":16,"face_hist.4":2})"
          "\n");
}

TEST_CASE("generator output feeds certify through a pipe") {
    run_result r = run_cli("gen k5-optimal --n 14 | " + std::string(CLI_PATH) +
                           " certify --k 5 -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict=pass") != std::string::npos);
    CHECK(r.out.find("extremal=true") != std::string::npos);
}

TEST_CASE("certify fails with exit code 1 on a bound violation") {
    run_result r = run_cli("certify --k 3 " + fixture("g13_k5"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("verdict=fail") != std::string::npos);
    CHECK(r.out.find("clique_free=false") != std::string::npos);
}

TEST_CASE("certify sweeps a directory") {
    run_result r = run_cli("certify --k 4 --all " + std::string(FIXTURE_DIR) +
                           " --format json-lines");
    CHECK(r.exit_code == 1);   // the K5-free members exceed the K4-free bound
    CHECK(r.out.find("\"file\":\"fig13_nonbip.opg\"") != std::string::npos);
    CHECK(r.out.find("\"file\":\"g10_k4.opg\"") != std::string::npos);
}

TEST_CASE("exhaustive cross check of the clique-free maxima") {
    run_result r = run_cli("turan --n 7 --k 4 --exhaustive");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "turan_size=16\nturan_exhaustive=16\n");
}

TEST_CASE("search reads a plain edge list") {
    const fs::path g = write_temp("search_input.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    run_result r = run_cli("search " + g.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("opg 1\n", 0) == 0);
    fs::remove(g);
}

TEST_CASE("search reports failure with exit code 1") {
    std::string k7 = "7 21\n";
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            k7 += std::to_string(u) + " " + std::to_string(v) + "\n";
    const fs::path g = write_temp("k7.txt", k7);
    run_result r = run_cli("search " + g.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("SearchExhausted") != std::string::npos);
    fs::remove(g);
}

TEST_CASE("fixtures listing and single fixture dump") {
    run_result list = run_cli("fixtures");
    CHECK(list.exit_code == 0);
    CHECK(list.out.find("maxe84 n=8 m=20 x=4\n") != std::string::npos);
    CHECK(list.out.find("g13_k5 n=13 m=44 x=11\n") != std::string::npos);

    run_result one = run_cli("fixtures --name g9_k4");
    CHECK(one.exit_code == 0);
    CHECK(one.out.rfind("opg 1\n", 0) == 0);
}

TEST_CASE("fixture directory override via the environment") {
    const fs::path dir = fs::temp_directory_path() / "oneplane_cli_fixdir";
    fs::create_directories(dir);
    setenv("ONEPLANE_FIXTURES", dir.c_str(), 1);
    run_result r = run_cli("fixtures --name maxe84");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("FixtureInvalid") != std::string::npos);
    unsetenv("ONEPLANE_FIXTURES");
    fs::remove_all(dir);
}

TEST_CASE("svg output is self contained") {
    run_result r = run_cli("gen ladder --k 3 --format svg");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
    CHECK(r.out.find("<line") != std::string::npos);
}

TEST_CASE("skeleton pipes back into the toolchain") {
    run_result r = run_cli("gen cube-g8 | " + std::string(CLI_PATH) +
                           " skeleton - | " + std::string(CLI_PATH) +
                           " faces - --format json-lines");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"class\":\"Alternating4\"") != std::string::npos);
}

TEST_CASE("unknown family is an input error") {
    run_result r = run_cli("gen moebius");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("BadParam") != std::string::npos);
}
