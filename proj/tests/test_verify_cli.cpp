#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "doctest.h"
#include "strongdim/cli.hpp"
#include "strongdim/families.hpp"
#include "strongdim/graph_io.hpp"
#include "strongdim/verify.hpp"

using namespace smd;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("strongdim_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE_BEGIN("verify_and_cli");

TEST_CASE("verification is deterministic and clean on true theorems") {
  const VerificationReport a = verify_theorem("twin-clique-diam2", 300, 7);
  CHECK(a.trials_attempted == 300);
  CHECK(a.trials_applicable > 0);
  CHECK(a.failures == 0);
  CHECK(a.counterexamples.empty());

  const VerificationReport b = verify_theorem("twin-clique-diam2", 300, 7);
  CHECK(report_to_json(a) == report_to_json(b));

  const VerificationReport red = verify_theorem("corona-reduction", 50, 7);
  CHECK(red.trials_applicable == 50);  // the reduction has no hypothesis to miss
  CHECK(red.failures == 0);

  const VerificationReport spectral = verify_theorem("spectral-clique", 200, 7);
  CHECK(spectral.trials_applicable > 0);
  CHECK(spectral.failures == 0);
}

TEST_CASE("every dispatch case is reachable at the default ranges") {
  const std::vector<std::pair<std::string, int>> tags = {
      {"join-varpi-i", 60},     {"join-varpi-ii", 200},   {"join-dims-i", 60},
      {"join-dims-ii", 400},    {"join-dims-iii", 200},   {"corona-dims-i", 400},
      {"corona-dims-ii", 60},   {"corona-k1", 60},        {"corona-triangle-free", 120},
      {"relations-i", 400},     {"relations-ii", 200},    {"relations-iii", 200},
      {"kr-plus-h-i", 120},     {"kr-plus-h-ii", 200},    {"kr-plus-h-iii", 120},
      {"diam2-omega", 60},      {"spectral-dims", 60},
  };
  for (const auto& [tag, trials] : tags) {
    CAPTURE(tag);
    const VerificationReport r = verify_theorem(tag, trials, 11);
    CHECK(r.trials_applicable > 0);
    CHECK(r.failures == 0);
  }
  // universal true twins are rare in sparse draws; use a dense stream
  TrialRanges dense = default_trial_ranges("diam2-omega-twins");
  dense.p = 0.75;
  const VerificationReport twins = verify_theorem("diam2-omega-twins", dense, 400, 11);
  CHECK(twins.trials_applicable > 0);
  CHECK(twins.failures == 0);
}

TEST_CASE("unknown tags and oversized ranges are rejected") {
  CHECK_THROWS_AS(verify_theorem("no-such-theorem", 10, 1), std::invalid_argument);
  TrialRanges huge = default_trial_ranges("join-dims");
  huge.left_max = 15;
  huge.right_max = 15;
  CHECK_THROWS_AS(verify_theorem("join-dims", huge, 10, 1), std::invalid_argument);
}

TEST_CASE("counterexample machinery reports and replays") {
  const VerificationReport r = verify_theorem("selftest-off-by-one", 20, 3);
  CHECK(r.trials_applicable == 20);
  CHECK(r.failures == 20);
  REQUIRE(r.counterexamples.size() == 20);
  CHECK(r.failures == static_cast<int>(r.counterexamples.size()));
  for (const auto& ce : r.counterexamples) {
    const auto [expected, oracle] = replay_counterexample(ce);
    CHECK(expected == ce.expected);
    CHECK(oracle == ce.oracle);
    CHECK(expected != oracle);  // still fails on replay
  }

  // counterexamples are ordered by trial index
  for (std::size_t i = 1; i < r.counterexamples.size(); ++i)
    CHECK(r.counterexamples[i - 1].trial < r.counterexamples[i].trial);
}

TEST_CASE("replay agrees with fresh trials when the theorem holds") {
  const VerificationReport r = verify_theorem("corona-dims", 50, 42);
  CHECK(r.failures == 0);
  // fabricate a payload from a known-good pair and confirm both sides match
  Counterexample ce;
  ce.case_id = "corona-dims-ii";
  ce.graphs = {{"left", "2 1\n0 1\n"}, {"right", "2 1\n0 1\n"}};
  const auto [expected, oracle] = replay_counterexample(ce);
  CHECK(expected == 3);
  CHECK(oracle == 3);
}

TEST_CASE("cli generates, computes and round-trips") {
  TempDir dir;
  const std::string c5 = dir.file("c5.txt");
  CHECK(cli({"gen", "--family", "cycle", "--n", "5", "--out", c5}) == 0);

  std::string out;
  CHECK(cli({"compute", "--input", c5, "--invariant", "dims"}, &out) == 0);
  CHECK(out == "dims=3\n");

  CHECK(cli({"compute", "--input", c5, "--invariant", "diameter"}, &out) == 0);
  CHECK(out == "diameter=2\n");

  CHECK(cli({"compute", "--input", c5, "--invariant", "varpi"}, &out) == 0);
  CHECK(out == "varpi=2\n");

  CHECK(cli({"compute", "--input", c5, "--invariant", "mmd"}, &out) == 0);
  CHECK(out.rfind("mmd=5\n", 0) == 0);

  CHECK(cli({"compute", "--input", c5, "--invariant", "profile"}, &out) == 0);
  CHECK(out.find("connected=1\n") != std::string::npos);
  CHECK(out.find("diameter=2\n") != std::string::npos);

  CHECK(cli({"compute", "--input", c5, "--invariant", "omega", "--format", "json"}, &out) == 0);
  CHECK(out.find("\"value\": 2") != std::string::npos);
  CHECK(cli({"compute", "--input", c5, "--invariant", "mu"}, &out) == 0);
  CHECK(out == "mu=1.381966011\n");
}

TEST_CASE("cli gen/compute round trip matches the in-memory value") {
  TempDir dir;
  const std::string path = dir.file("g.txt");
  CHECK(cli({"gen", "--family", "gnp-random-connected", "--n", "9", "--p", "0.3", "--seed",
             "17", "--out", path}) == 0);
  const Graph in_memory =
      generate({GraphFamily::gnp_random_connected, 9, 0.3, 17});
  std::string out;
  CHECK(cli({"compute", "--input", path, "--invariant", "diameter"}, &out) == 0);
  CHECK(out == "diameter=" + std::to_string(profile(in_memory).diameter) + "\n");
  CHECK(read_graph_file(path) == in_memory);
}

TEST_CASE("cli product writes the corona") {
  TempDir dir;
  const std::string p2 = dir.file("p2.txt");
  const std::string k2 = dir.file("k2.txt");
  const std::string out_path = dir.file("out.txt");
  CHECK(cli({"gen", "--family", "path", "--n", "2", "--out", p2}) == 0);
  CHECK(cli({"gen", "--family", "complete", "--n", "2", "--out", k2}) == 0);
  CHECK(cli({"product", "--op", "corona", "--left", p2, "--right", k2, "--out", out_path}) == 0);
  const Graph g = read_graph_file(out_path);
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 7);
}

TEST_CASE("cli verify emits byte-identical reports and exit codes") {
  std::string first, second;
  CHECK(cli({"verify", "--theorem", "corona-dims", "--trials", "50", "--seed", "42",
             "--format", "json"}, &first) == 0);
  CHECK(cli({"verify", "--theorem", "corona-dims", "--trials", "50", "--seed", "42",
             "--format", "json"}, &second) == 0);
  CHECK(first == second);
  CHECK(first.find("\"schema_version\": 1") != std::string::npos);
  CHECK(first.find("\"failures\": 0") != std::string::npos);

  std::string text;
  CHECK(cli({"verify", "--theorem", "selftest-off-by-one", "--trials", "3", "--seed", "1"},
            &text) == 1);
  CHECK(text.find("result: FAILED") != std::string::npos);
  CHECK(text.find("counterexample trial=0") != std::string::npos);

  CHECK(cli({"verify", "--theorem", "join-dims", "--trials", "20", "--seed", "5", "--max-n",
             "4"}, &text) == 0);
  CHECK(text.find("result: VERIFIED") != std::string::npos);
  CHECK(text.find("left=[2,4]") != std::string::npos);
}

TEST_CASE("cli input errors exit with 2") {
  TempDir dir;
  const std::string bad = dir.file("bad.txt");
  std::ofstream(bad) << "3 2\n0 1\n1 0\n";
  std::string err;
  CHECK(cli({"compute", "--input", bad, "--invariant", "dims"}, nullptr, &err) == 2);
  CHECK(err.find("line 3") != std::string::npos);

  CHECK(cli({"compute", "--input", dir.file("missing.txt"), "--invariant", "dims"}, nullptr,
            &err) == 2);
  CHECK(cli({"compute", "--wat", "x"}, nullptr, &err) == 2);
  CHECK(cli({"verify", "--theorem", "nope", "--trials", "5", "--seed", "1"}, nullptr, &err) == 2);
  CHECK(cli({"gen", "--family", "cycle", "--n", "2", "--out", dir.file("c.txt")}, nullptr,
            &err) == 2);
  CHECK(cli({}, nullptr, &err) == 2);
}

TEST_SUITE_END();
