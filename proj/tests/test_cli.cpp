#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

const std::string kCli = PAIRCOLLECT_CLI_PATH;
const std::string kGolden = PAIRCOLLECT_GOLDEN_DIR;

testsupport::CommandResult cli(const std::string& args) {
    return testsupport::run_command(kCli + " " + args + " 2>/dev/null");
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double field_as_double(const std::string& json_line, const std::string& key) {
    std::string needle = "\"" + key + "\":";
    std::size_t pos = json_line.find(needle);
    REQUIRE_MESSAGE(pos != std::string::npos, "no key " << key << " in " << json_line);
    return std::stod(json_line.substr(pos + needle.size()));
}

}  // namespace

TEST_CASE("exact pmf query emits the recurrence value") {
    auto result = cli("pmf --dist y --n 3 --j 2 --kmax 3 --exact");
    CHECK(result.exit_code == 0);
    auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("\"k\":2") != std::string::npos);
    CHECK(lines[0].find("\"prob\":\"2/9\"") != std::string::npos);
    CHECK(lines[1].find("\"k\":3") != std::string::npos);
    CHECK(lines[1].find("\"prob\":\"4/27\"") != std::string::npos);
}

TEST_CASE("exact outputs never contain floating-point representations") {
    auto result = cli("pmf --dist y --n 4 --j 3 --kmax 12 --exact");
    CHECK(result.exit_code == 0);
    for (const std::string& line : lines_of(result.output)) {
        CHECK(line.find('.') == std::string::npos);  // no decimal points anywhere
        CHECK(line.find("\"prob\":\"") != std::string::npos);  // fraction string, not a number
    }
}

TEST_CASE("moment queries") {
    auto result = cli("moments --target m --n 3");
    CHECK(result.exit_code == 0);
    auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].find("\"mean\":\"22\"") != std::string::npos);

    auto s_result = cli("moments --target s --n 3 --a 2");
    CHECK(s_result.exit_code == 0);
    CHECK(lines_of(s_result.output)[0].find("\"mean\":\"10\"") != std::string::npos);

    auto asym = cli("moments --target s --n 100 --a 50 --asym --regime proportional");
    CHECK(asym.exit_code == 0);
    CHECK(lines_of(asym.output)[0].find("\"main_variance\":1000000") != std::string::npos);

    // s + --asym without --regime cannot pick a limit
    CHECK(cli("moments --target s --n 100 --a 50 --asym").exit_code == 2);
    CHECK(cli("moments --target y --n 4 --j 2 --asym").exit_code == 2);
    CHECK(cli("moments --target m --n 4 --j 2").exit_code == 2);
}

TEST_CASE("tail query") {
    auto result = cli("tail --dist y --n 3 --j 2 --m 2");
    CHECK(result.exit_code == 0);
    double prob = field_as_double(lines_of(result.output)[0], "prob");
    CHECK(prob == doctest::Approx(7.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("oracle subcommand rows") {
    auto result = cli("oracle --n 3 --len 3");
    CHECK(result.exit_code == 0);
    bool found = false;
    for (const std::string& line : lines_of(result.output)) {
        if (line.find("\"j\":2") != std::string::npos &&
            line.find("\"k\":3") != std::string::npos) {
            CHECK(line.find("\"prob\":\"4/27\"") != std::string::npos);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("exit codes") {
    CHECK(cli("pmf --dist y --n 1 --j 1 --kmax 4").exit_code == 2);      // bad parameters
    CHECK(cli("pmf --dist x --n 3 --j 1 --kmax 4").exit_code == 2);      // --j with x
    CHECK(cli("pmf --dist y --n 60 --j 2 --kmax 4 --exact").exit_code == 3);  // size guard
    CHECK(cli("oracle --n 5 --len 4").exit_code == 3);
    CHECK(cli("oracle --n 3 --len 13").exit_code == 3);
    CHECK(cli("simulate --target y --n 3 --j 9 --reps 4 --seed 1").exit_code == 2);
    CHECK(cli("pmf --no-such-flag").exit_code == 2);
    CHECK(cli("").exit_code == 2);  // a subcommand is required
    CHECK(cli("bogus --n 3").exit_code == 2);
    CHECK(cli("--help").exit_code == 0);
}

TEST_CASE("simulation output is reproducible across workers and reruns") {
    const std::string base = "simulate --target s --n 5 --a 3 --reps 500 --seed 99 "
                             "--backend inversion";
    auto one = cli(base + " --workers 1");
    auto four = cli(base + " --workers 4");
    auto rerun = cli(base + " --workers 4");
    CHECK(one.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(four.output == rerun.output);
    CHECK(lines_of(one.output).size() == 500);
    CHECK(one.output.find("\"seed\":99") != std::string::npos);

    auto process = cli("simulate --target m --n 4 --reps 200 --seed 7 --backend process "
                       "--workers 1");
    auto process4 = cli("simulate --target m --n 4 --reps 200 --seed 7 --backend process "
                        "--workers 4");
    CHECK(process.output == process4.output);

    // environment variable is the fallback for --workers
    auto via_env = testsupport::run_command("PAIRCOLLECT_WORKERS=4 " + kCli + " " + base +
                                            " 2>/dev/null");
    CHECK(via_env.output == one.output);
}

TEST_CASE("convergence study over an n grid") {
    auto result = cli("converge --law gumbel --regime fullmax --n-grid 30,100,300 "
                      "--reps 10000 --seed 7");
    CHECK(result.exit_code == 0);
    auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 3);
    double d30 = field_as_double(lines[0], "ks_distance");
    double d100 = field_as_double(lines[1], "ks_distance");
    double d300 = field_as_double(lines[2], "ks_distance");
    CHECK(d30 > d100);
    CHECK(d100 > d300);
    CHECK(d300 < 0.08);

    // law/regime pairs that make no sense are rejected
    CHECK(cli("converge --law gumbel --regime fixedk --n-grid 30 --reps 10 --seed 1")
              .exit_code == 2);
    CHECK(cli("converge --law erlang --regime fullmax --n-grid 30 --reps 10 --seed 1")
              .exit_code == 2);
}

TEST_CASE("diagnose checks") {
    auto tail = cli("diagnose --check tail-limit --n-grid 100,1000 --x 0");
    CHECK(tail.exit_code == 0);
    auto tail_lines = lines_of(tail.output);
    REQUIRE(tail_lines.size() == 2);
    CHECK(field_as_double(tail_lines[0], "rel_err") >
          field_as_double(tail_lines[1], "rel_err"));

    auto dprime = cli("diagnose --check dprime --n-grid 1000 --x 0 --k 10");
    CHECK(dprime.exit_code == 0);
    CHECK(field_as_double(lines_of(dprime.output)[0], "ratio") ==
          doctest::Approx(1.0).epsilon(0.1));

    auto cf = cli("diagnose --check cf-identity --k 5");
    CHECK(cf.exit_code == 0);
    for (const std::string& line : lines_of(cf.output)) {
        CHECK(field_as_double(line, "sup_abs_diff") < 1e-12);
    }

    auto asym = cli("diagnose --check asym-moments --n-grid 50,100");
    CHECK(asym.exit_code == 0);
    auto asym_lines = lines_of(asym.output);
    REQUIRE(asym_lines.size() == 2);
    CHECK(field_as_double(asym_lines[0], "mean_gap_scaled") >
          field_as_double(asym_lines[1], "mean_gap_scaled"));
}

TEST_CASE("golden files freeze the output schemas") {
    auto pmf_jsonl = cli("pmf --dist y --n 3 --j 2 --kmax 6 --exact");
    CHECK(pmf_jsonl.output == read_file(kGolden + "/pmf_y_exact.jsonl"));

    auto pmf_csv = cli("pmf --dist y --n 3 --j 2 --kmax 6 --exact --format csv");
    CHECK(pmf_csv.output == read_file(kGolden + "/pmf_y_exact.csv"));

    auto moments_jsonl = cli("moments --target m --n 3 --asym");
    CHECK(moments_jsonl.output == read_file(kGolden + "/moments_m.jsonl"));

    auto sim_csv = cli("simulate --target y --n 3 --j 2 --reps 5 --seed 42 --format csv");
    CHECK(sim_csv.output == read_file(kGolden + "/simulate_y.csv"));

    auto conv = cli("converge --law erlang --regime fixedk --a-rule k:2 --n-grid 50 "
                    "--reps 200 --seed 5");
    CHECK(conv.output == read_file(kGolden + "/converge_erlang.jsonl"));
}

TEST_CASE("output redirection with --out") {
    std::string path = "/tmp/paircollect_out_test.jsonl";
    std::remove(path.c_str());
    auto result = cli("moments --target y --n 4 --j 2 --out " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.empty());
    std::string contents = read_file(path);
    CHECK(contents.find("\"mean\":\"10\"") != std::string::npos);
    std::remove(path.c_str());
}
