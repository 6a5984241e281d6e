#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end checks against the installed command surface: output schemas,
// determinism, and the exit-code contract (0 ok, 2 usage, 3 data, 4
// undefined statistic).

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(AFFNET_CLI) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("census --format simple prints the four tallies") {
    const RunResult r = run("census --dataset dg2 --format simple");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,0,3,7\n");
}

TEST_CASE("clustering global values on the bundled data") {
    CHECK(run("clustering --dataset dg2 --statistic classical").out == "0.875\n");
    CHECK(run("clustering --dataset kite-a --statistic exclusive").out == "0.6\n");
    CHECK(run("clustering --dataset kite-c --statistic opsahl").out == "0.625\n");
}

TEST_CASE("structural census is a four-by-two array") {
    const RunResult r = run("census --dataset dg2 --format structural");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[[0,0],[0,1],[3,3],[3,0]]\n");
}

TEST_CASE("local output lists actors in input order with empty undefined cells") {
    const RunResult r = run("clustering --dataset kite-a --statistic exclusive --level local");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "actor,value\ni,1\nj,1\nk,0.3333333333333333\nl,\n");
}

TEST_CASE("undefined statistics exit with code 4") {
    const RunResult r = run("clustering --dataset k3x2 --statistic exclusive");
    CHECK(r.exit_code == 4);
    CHECK(r.out == "undefined\n");

    const RunResult d = run("dynamic --dataset dg2");  // dg2 carries no times
    CHECK(d.exit_code == 3);  // missing times are a data error, not undefined
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("clustering --dataset dg2 --statistic badname").exit_code == 2);
    CHECK(run("clustering").exit_code == 2);  // no input at all
    CHECK(run("clustering --dataset dg2 --statistic classical --category induced").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("data errors exit with code 3") {
    CHECK(run("census /nonexistent.csv").exit_code == 3);
    CHECK(run("census --dataset nosuch").exit_code == 3);
}

TEST_CASE("dynamic closure on the dated fixture") {
    const RunResult r = run("dynamic --dataset dg1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.61") == 0);
}

TEST_CASE("stc emits the pinned column order") {
    const RunResult r = run("stc --dataset dg2 --max-s 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("s,triples,weak,probability\n", 0) == 0);
}

TEST_CASE("centrality column order and eigenvector flag") {
    const RunResult r = run("centrality --dataset dg2 --ell 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("actor,score\nA,", 0) == 0);
    CHECK(run("centrality --dataset dg2 --eigenvector").exit_code == 0);
    CHECK(run("centrality --dataset dg2 --corrected --eigenvector").exit_code == 2);
}

TEST_CASE("nullmodel output is reproducible under a fixed seed") {
    const std::string args = "nullmodel --dataset dg2 --statistic classical --samples 60 --seed 5";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"mean\"") != std::string::npos);
    CHECK(a.out.find("\"undefined_draws\"") != std::string::npos);
}

TEST_CASE("datasets lists fixtures and extracts them") {
    const RunResult list = run("datasets");
    CHECK(list.exit_code == 0);
    CHECK(list.out.find("dg1,18,14,yes") != std::string::npos);
    CHECK(list.out.find("dg2,5,5,no") != std::string::npos);

    const RunResult csv = run("datasets --extract kite-a");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("actor,event\n", 0) == 0);
}

TEST_CASE("extracted data round-trips through a file") {
    const std::string path = "/tmp/affnet_test_kite.csv";
    {
        std::ofstream f(path);
        f << run("datasets --extract kite-a").out;
    }
    const RunResult r = run("clustering " + path + " --statistic exclusive");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.6\n");
    std::remove(path.c_str());
}

TEST_CASE("instrument consumes a panel and emits the matrix") {
    const std::string path = "/tmp/affnet_test_panel.csv";
    {
        std::ofstream f(path);
        f << "subject,statistic,period,value\n";
        for (int s = 0; s < 5; ++s) {
            const std::string subj = "d" + std::to_string(s);
            f << subj << ",c,1," << 0.1 * s << "\n";
            f << subj << ",c,2," << 0.1 * s + 0.01 << "\n";
            f << subj << ",d,1," << 0.2 * s << "\n";
            f << subj << ",d,2," << 0.2 * s + 0.05 << "\n";
        }
    }
    const RunResult r = run("instrument " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("statistic,stability,discriminability,r2_c,r2_d\n", 0) == 0);
    CHECK(r.out.find("\nc,") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("the worker cap never changes output") {
    const RunResult one = run("--threads 1 clustering --dataset dg1 --statistic exclusive");
    const RunResult many = run("--threads 8 clustering --dataset dg1 --statistic exclusive");
    CHECK(one.exit_code == 0);
    CHECK(one.out == many.out);
}

TEST_CASE("summary reports counts and degree sequences") {
    const RunResult r = run("summary --dataset dg2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"actors\": 5") != std::string::npos);
    CHECK(r.out.find("\"attendances\": 14") != std::string::npos);
}
