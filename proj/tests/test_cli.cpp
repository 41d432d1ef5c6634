// Exercises the installed command-line surface end to end: exit codes,
// file outputs, and determinism of emitted CSV bytes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string tmp_dir() {
    static int counter = 0;
    std::string dir = "cli_scratch_" + std::to_string(counter++);
    std::string cmd = "mkdir -p " + dir;
    REQUIRE(std::system(cmd.c_str()) == 0);
    return dir;
}

int run(const std::string& args) {
    std::string cmd = std::string(ENTDIST_BIN) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args, int* exit_code = nullptr) {
    std::string dir = tmp_dir();
    std::string out_file = dir + "/stdout.txt";
    std::string cmd = std::string(ENTDIST_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (exit_code)
        *exit_code = WEXITSTATUS(status);
    std::ifstream is(out_file);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        n += c == '\n';
    return n;
}

} // namespace

TEST_CASE("figure fig3 produces the documented CSV") {
    std::string dir = tmp_dir();
    std::string out = dir + "/fig3.csv";
    REQUIRE(run("figure fig3 --out " + out) == 0);
    std::string text = slurp(out);
    CHECK(count_lines(text) == 102); // header + 101 rows
    CHECK(text.rfind("scenario,axis1,axis2,e_in,e_com,e_fin,delta_e,classification\n", 0) == 0);

    // e_in column is all zeros
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::size_t p = line.find(",,"); // 1-axis rows have an empty axis2
        REQUIRE(p != std::string::npos);
        CHECK(line.substr(p + 2, 2) == "0,");
    }

    SUBCASE("byte-identical on rerun") {
        std::string out2 = dir + "/fig3_again.csv";
        REQUIRE(run("figure fig3 --out " + out2) == 0);
        CHECK(slurp(out2) == text);
    }
}

TEST_CASE("figure options") {
    std::string dir = tmp_dir();
    REQUIRE(run("figure fig4 --step 0.005 --out " + dir + "/f.csv") == 0);
    CHECK(count_lines(slurp(dir + "/f.csv")) == 202);

    REQUIRE(run("figure fig7 --step 0.1 --channel dephasing:0.3 --out " + dir + "/g.csv") == 0);
    CHECK(count_lines(slurp(dir + "/g.csv")) == 122); // 11x11 grid + header

    REQUIRE(run("figure fig9 --step 0.2 --lower --out " + dir + "/h.csv") == 0);
    CHECK(count_lines(slurp(dir + "/h.csv")) == 37);

    REQUIRE(run("figure fig3 --gnuplot --out " + dir + "/k.csv") == 0);
    CHECK(slurp(dir + "/k.csv.gp").find("plot") != std::string::npos);

    CHECK(run("figure fig99") == 2);
    CHECK(run("figure fig3 --channel dephasing:0.2") == 2);
    CHECK(run("figure fig3 --step -1") == 2);
    CHECK(run("figure") == 2);
    CHECK(run("bogus_subcommand") == 2);
}

TEST_CASE("table1 output") {
    int code = -1;
    std::string text = run_capture("table1", &code);
    CHECK(code == 0);
    CHECK(text.find("12:345") != std::string::npos);
    CHECK(text.find("PPT") != std::string::npos);
    CHECK(text.find("NPT") != std::string::npos);

    std::string boundary = run_capture("table1 --q 0.5", &code);
    CHECK(code == 0);
    CHECK(boundary.find("negativities:") != std::string::npos);

    std::string dir = tmp_dir();
    REQUIRE(run("table1 --out " + dir + "/t.csv") == 0);
    CHECK(count_lines(slurp(dir + "/t.csv")) == 1 + 9 * 6);
}

TEST_CASE("protocol records as json") {
    int code = -1;
    std::string j = run_capture("protocol ame --q 0.45 --grouping 1,4,5:2:3", &code);
    CHECK(code == 0);
    CHECK(j.find("\"classification\": \"Excessive\"") != std::string::npos);
    CHECK(j.find("\"measure\": \"log_negativity\"") != std::string::npos);

    std::string ind = run_capture("protocol indirect --p 0.34 --s 1 --channel identity", &code);
    CHECK(code == 0);
    CHECK(ind.find("\"classification\": \"NonExcessive\"") != std::string::npos);

    std::string bound = run_capture("protocol ame --q 0 --grouping 2,4,5:1:3", &code);
    CHECK(code == 0);
    CHECK(bound.find("\"classification\": \"NonExcessive\"") != std::string::npos);

    CHECK(run("protocol ame --q 0.45 --grouping 1,4:2:3") == 2);     // incomplete cover
    CHECK(run("protocol ame --q 0.45 --grouping nonsense") == 2);
    CHECK(run("protocol indirect --p 0.34 --s 1") == 2);             // channel missing
    CHECK(run("protocol indirect --p 0.34 --s 1 --channel bad:1") == 2);
}

TEST_CASE("search determinism and witness files") {
    std::string dir1 = tmp_dir(), dir2 = tmp_dir();
    REQUIRE(run("search --da 3 --trials 300 --seed 5 --residual theorem1 --out-dir " + dir1) == 0);
    REQUIRE(run("search --da 3 --trials 300 --seed 5 --residual theorem1 --out-dir " + dir2) == 0);
    std::string w1 = dir1 + "/witness_000.json";
    std::ifstream f1(w1);
    REQUIRE(f1.good()); // ~3% hit rate makes 300 trials near-certain
    CHECK(slurp(w1) == slurp(dir2 + "/witness_000.json"));
    CHECK(slurp(w1).find("\"residual\"") != std::string::npos);

    CHECK(run("search --da 1 --trials 10") == 2);
    CHECK(run("search --residual bogus") == 2);
}

TEST_CASE("verify exit codes") {
    // tight tolerance must fail by contract
    CHECK(run("verify paper --tol 1e-15") == 1);
    CHECK(run("verify bogus") == 2);

    int code = -1;
    std::string text = run_capture("verify properties --trials 50 --seed 7", &code);
    CHECK(text.find("c3") != std::string::npos);
    CHECK(text.find("c16") != std::string::npos);

    SUBCASE("deterministic report") {
        std::string again = run_capture("verify properties --trials 50 --seed 7");
        CHECK(again == text);
    }
}
