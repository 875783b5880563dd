// End-to-end checks of the command-line tool: spawns the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(POLYRA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/polyra_cli_test_" + name;
  std::ofstream out(path, std::ios::trunc);
  out << content;
  return path;
}

const char* kTwoType = R"({"K":2,"M":1,"C":1.0,"rewards":[1.0,2.0]})";
const char* kThreeType = R"({"K":3,"M":1,"C":1.0,"rewards":[0.25,0.5,1.0]})";

} // namespace

TEST_CASE("bounds command") {
  const std::string inst = write_temp("two.json", kTwoType);
  const RunResult res = run("bounds --instance " + inst);
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  CHECK(out["gamma_up"].get<double>() == doctest::Approx(0.8));
  CHECK(out["L"].get<double>() == doctest::Approx(2.0 / 3.0));
  CHECK(out["gamma_nest_star"].get<double>() == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(out["solutions"].contains("simple_upper"));
  CHECK(out["solutions"]["flex_benchmark"]["gamma"].get<double>() ==
        doctest::Approx(2.0 / 3.0));

  const std::string three = write_temp("three.json", kThreeType);
  const RunResult res3 = run("bounds --instance " + three);
  REQUIRE(res3.exit_code == 0);
  CHECK(json::parse(res3.output)["gamma_star"].get<double>() ==
        doctest::Approx(10.0 / 17).epsilon(1e-9));
}

TEST_CASE("malformed input exits with the usage code") {
  const std::string bad = write_temp("bad.json", "{ not json");
  CHECK(run("bounds --instance " + bad).exit_code == 2);
  CHECK(run("bounds --instance /tmp/polyra_no_such_file.json").exit_code == 2);
  const std::string invalid = write_temp("invalid.json", R"({"K":2,"M":2,"C":1.0,"rewards":[1.0,2.0]})");
  CHECK(run("bounds --instance " + invalid).exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("simulate command") {
  const std::string inst = write_temp("two.json", kTwoType);
  const std::string seq = write_temp(
      "input_b.json",
      R"({"periods":[[{"type":1,"mass":1.0},{"type":2,"mass":1.0}],[{"type":2,"mass":1.0}]]})");
  const RunResult res = run("simulate --instance " + inst + " --polytope bf --sequence " + seq);
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  CHECK(out["summary"]["min_period_cr"].get<double>() == doctest::Approx(0.8));

  // A three-type worst-case input against the constructed polytope.
  const std::string three = write_temp("three.json", kThreeType);
  const std::string input_a = write_temp(
      "input_a.json",
      R"({"periods":[[{"type":1,"mass":2.0},{"type":2,"mass":1.0},{"type":3,"mass":1.0}],
                     [{"type":2,"mass":1.0},{"type":3,"mass":1.0}]]})");
  const RunResult res3 =
      run("simulate --instance " + three + " --polytope b1 --sequence " + input_a);
  REQUIRE(res3.exit_code == 0);
  CHECK(json::parse(res3.output)["summary"]["min_period_cr"].get<double>() >=
        10.0 / 17 - 1e-9);

  CHECK(run("simulate --instance " + inst + " --polytope nosuch --sequence " + seq)
            .exit_code == 2);
}

TEST_CASE("sweep command writes deterministic CSV") {
  const std::string spec = write_temp("sweep.json", R"({
    "K": 2, "M": 1, "C": 1.0,
    "gammas": [0.5],
    "quantities": ["gamma_up", "L"]
  })");
  const std::string out_path = "/tmp/polyra_cli_test_sweep.csv";
  REQUIRE(run("sweep " + spec + " --out " + out_path).exit_code == 0);
  std::ifstream in(out_path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "gamma,gamma_up,L");
  CHECK(row == "0.500000,0.800000,0.666667");

  const RunResult again = run("sweep " + spec);
  CHECK(again.output.find("0.500000,0.800000,0.666667") != std::string::npos);
}

TEST_CASE("worstcase command") {
  const std::string inst = write_temp("two.json", kTwoType);
  const RunResult res = run("worstcase --instance " + inst + " --family staircase");
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  CHECK(out["label"] == "staircase");
  CHECK(out["sequences"].size() == 4);

  const RunResult flexfam = run("worstcase --instance " + inst + " --family flex-benchmark");
  REQUIRE(flexfam.exit_code == 0);
  CHECK(json::parse(flexfam.output)["sequences"].size() == 2);

  const std::string three = write_temp("three.json", kThreeType);
  const RunResult abcd = run("worstcase --instance " + three + " --family three-type");
  REQUIRE(abcd.exit_code == 0);
  CHECK(json::parse(abcd.output)["sequences"].size() == 4);

  const std::string four = write_temp(
      "four.json", R"({"K":4,"M":2,"C":3.0,"rewards":[1.0,3.0,4.0,400.0]})");
  const RunResult variants = run("worstcase --instance " + four + " --family variants");
  REQUIRE(variants.exit_code == 0);
  CHECK(json::parse(variants.output)["families"].size() == 3);
  CHECK_FALSE(json::parse(variants.output)["below_four_types"].get<bool>());

  CHECK(run("worstcase --instance " + inst + " --family nosuch").exit_code == 2);
  CHECK(run("worstcase --instance " + inst + " --family search").exit_code == 2);
}

TEST_CASE("worstcase search mode") {
  const std::string inst = write_temp("two.json", kTwoType);
  const RunResult res = run("worstcase --instance " + inst +
                            " --family search --polytope bf --granularity 2 --periods 2");
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  CHECK(out["min_cr"].get<double>() == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(out["witness"]["periods"].size() == 2);
  CHECK(out["sequences_evaluated"].get<long long>() > 0);
}

TEST_CASE("polytope export and re-import round-trips") {
  const std::string inst = write_temp("two.json", kTwoType);
  const std::string seq = write_temp(
      "input_a.json", R"({"periods":[[{"type":1,"mass":1.0}],[]]})");
  const std::string dumped = "/tmp/polyra_cli_test_bf.json";
  const RunResult direct = run("simulate --instance " + inst + " --polytope bf --sequence " +
                               seq + " --dump-polytope " + dumped);
  REQUIRE(direct.exit_code == 0);
  const RunResult via_file =
      run("simulate --instance " + inst + " --polytope file:" + dumped + " --sequence " + seq);
  REQUIRE(via_file.exit_code == 0);
  CHECK(json::parse(direct.output) == json::parse(via_file.output));
}

TEST_CASE("near-optimal nests hold up on the staircase, end to end") {
  const std::string inst = write_temp(
      "four.json", R"({"K":4,"M":2,"C":3.0,"rewards":[1.0,3.0,4.0,400.0]})");
  const RunResult bounds = run("bounds --instance " + inst);
  REQUIRE(bounds.exit_code == 0);
  const double gamma_up = json::parse(bounds.output)["gamma_up"].get<double>();

  const RunResult fam = run("worstcase --instance " + inst + " --family staircase");
  REQUIRE(fam.exit_code == 0);
  const json sequences = json::parse(fam.output)["sequences"];
  for (const auto& seq_json : sequences) {
    const std::string seq_path = write_temp("stair_seq.json", seq_json.dump());
    const RunResult sim =
        run("simulate --instance " + inst + " --polytope nbar --sequence " + seq_path);
    REQUIRE(sim.exit_code == 0);
    const double min_cr = json::parse(sim.output)["summary"]["min_period_cr"].get<double>();
    CHECK(min_cr >= 0.8 * gamma_up - 1e-9);
  }
}

TEST_CASE("verify command: single criterion and the tamper hook") {
  CHECK(run("verify --level fast --only 2").exit_code == 0);
  // Tampered tolerances must turn the suite red.
  const RunResult tampered = run("verify --level fast --only 2 --tamper-tolerance -1");
  CHECK(tampered.exit_code == 1);
  CHECK(tampered.output.find("FAIL") != std::string::npos);
}
