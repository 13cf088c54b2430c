#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef FLOORSUM_CLI_PATH
#error "FLOORSUM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FLOORSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("eval subcommand") {
    auto r = run("eval --f mu2 --x 20 --method both");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("18") != std::string::npos);
    CHECK(r.out.find("verdict: OK") != std::string::npos);

    CHECK(run("eval --f mu3 --x 20 --method naive").out.find("20") !=
          std::string::npos);
    CHECK(run("eval --f one --x 1e6 --method blocks").out.find("1000000") !=
          std::string::npos);
    CHECK(run("eval --f muK:5 --x 100 --method both").out.find("verdict: OK") !=
          std::string::npos);
    CHECK(run("eval --f mobius --x 5000 --method both").out.find("verdict: OK") !=
          std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "/tmp/floorsum_cli_out_test.csv";
    std::remove(path.c_str());
    auto r = run("scaling --f mu2 --xmin 100 --xmax 10000 --points 5 "
                 "--format csv --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty()); // report went to the file, not stdout
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char head[32] = {0};
    REQUIRE(fread(head, 1, 24, f) == 24);
    fclose(f);
    CHECK(std::string(head, 24) == "x,S,Cx,E,log_x,log_absE\n");
    std::remove(path.c_str());
}

TEST_CASE("eval blocks at 1e8 matches the recorded naive-run golden") {
    // one-time oracle: a full naive evaluation at x = 10^8 gave 89180624
    // and `--method both` confirmed the block evaluator against it
    auto r = run("eval --f mu2 --x 1e8 --method blocks --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][0]["value"].get<long long>() == 89180624LL);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("eval --f mu2 --x 0").exit_code == 1);
    CHECK(run("eval --f nope --x 10").exit_code == 1);
    CHECK(run("eval --x 10 --bogus-flag 3").exit_code == 1);
    CHECK(run("vaaler --H 0").exit_code == 1);
    CHECK(run("scaling --f mu2 --xmin 5 --xmax 100").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
    CHECK(run("eval --f mu2 --x 12.5").exit_code == 1);
}

TEST_CASE("numeric/capability failures exit 2") {
    // naive guard is a precondition (exit 1); capability gaps exit 2
    CHECK(run("constant --f one --tol 1e-9 --method accel").exit_code == 2);
    CHECK(run("scaling --f mobius --xmin 10 --xmax 1000").exit_code == 2);
    // mobius point evaluation cannot resolve arguments this large
    CHECK(run("eval --f mobius --x 5e12 --method blocks").exit_code == 2);
    CHECK(run("exppair --word A --start 0/1").exit_code == 1);
}

TEST_CASE("constant subcommand") {
    auto r = run("constant --f one --M 1000000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.99999") != std::string::npos);

    auto both = run("constant --f mu2 --M 1000000 --tol 1e-9 --method both");
    CHECK(both.exit_code == 0);
    CHECK(both.out.find("agreement: OK") != std::string::npos);

    auto pw = run("constant --f power:1.9 --M 100000");
    CHECK(pw.exit_code == 0);
    CHECK(pw.out.find("+-") != std::string::npos);
}

TEST_CASE("exppair subcommand") {
    auto r = run("exppair --word BABAAB --start 0/1,1/1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(2/9, 11/18)") != std::string::npos);
    CHECK(r.out.find("11/29") != std::string::npos);

    CHECK(run("exppair --vartheta 13/84").out.find("152/401") !=
          std::string::npos);
    CHECK(run("exppair --thetak 3").out.find("2/5") != std::string::npos);

    auto opt = run("exppair --optimize 6 --start 0/1,1/1");
    CHECK(opt.exit_code == 0);
    CHECK(opt.out.find("best word B ") != std::string::npos);
    CHECK(opt.out.find("1/3") != std::string::npos);

    CHECK(run("exppair").exit_code == 1);
}

TEST_CASE("scaling csv and json round-trip") {
    auto csv = run("scaling --f mu2 --xmin 1000 --xmax 100000 --points 6 "
                   "--format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("x,S,Cx,E,log_x,log_absE\n", 0) == 0);

    auto js = run("scaling --f mu2 --xmin 1000 --xmax 100000 --points 6 "
                  "--format json");
    CHECK(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["f"] == "mu_2");
    CHECK(j["fit"]["degenerate"] == false);

    auto one = run("scaling --f one --xmin 10 --xmax 10000 --points 5 "
                   "--format json");
    CHECK(one.exit_code == 0);
    auto j1 = nlohmann::json::parse(one.out);
    CHECK(j1["fit"]["degenerate"] == true);

    auto pw = run("scaling --f power:1.5 --xmin 1000 --xmax 100000 --points 6 "
                  "--format json");
    CHECK(pw.exit_code == 0);
    auto j2 = nlohmann::json::parse(pw.out);
    CHECK(j2["references"][0]["exact"] == "5/6"); // (1 + 1.5)/3
}

TEST_CASE("expsum subcommand") {
    auto r = run("expsum --h 1 --x 0 --m 1 --Xlo 0 --Xhi 5 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["re"].get<double>() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::fabs(j["im"].get<double>()) <= 1e-12);

    auto t = run("expsum --h 1 --x 1e4 --Xlo 100 --Xhi 200");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("|sum|") != std::string::npos);

    CHECK(run("expsum --h 1 --x 1 --Xlo 5 --Xhi 5").exit_code == 1);
}

TEST_CASE("gsweep, vaaler, table subcommands") {
    auto g = run("gsweep --f mu2 --x 1e6 --Dmin 10 --Dmax 1000 --Dpoints 7 "
                 "--format csv");
    CHECK(g.exit_code == 0);
    CHECK(g.out.rfind("D,absG,bound_plain,bound_xkappa\n", 0) == 0);

    auto v = run("vaaler --H 64 --grid 10000 --format json");
    CHECK(v.exit_code == 0);
    auto jv = nlohmann::json::parse(v.out);
    CHECK(jv["max_violation"].get<double>() <= 1e-12);
    CHECK(jv["max_h_gamma"].get<double>() <= 1.0);

    CHECK(run("vaaler --H 1 --grid 100").exit_code == 0);

    auto t = run("table --k 2 --format csv");
    CHECK(t.exit_code == 0);
    size_t p1 = t.out.find("152/401");
    size_t p2 = t.out.find("11/29");
    size_t p3 = t.out.find(",2/5,");
    size_t p4 = t.out.find("1919/4268");
    REQUIRE(p1 != std::string::npos);
    REQUIRE(p2 != std::string::npos);
    REQUIRE(p3 != std::string::npos);
    REQUIRE(p4 != std::string::npos);
    CHECK(p1 < p2);
    CHECK(p2 < p3);
    CHECK(p3 < p4);
}

TEST_CASE("threads flag does not change results") {
    auto a = run("--threads 1 scaling --f mu3 --xmin 1000 --xmax 100000 "
                 "--points 6 --format csv");
    auto b = run("--threads 4 scaling --f mu3 --xmin 1000 --xmax 100000 "
                 "--points 6 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}
