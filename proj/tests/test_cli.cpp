// Copyright 2026 The cfspectrum Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfspectrum/cli.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace {

std::string binary_path() {
  const char* p = std::getenv("CFSPECTRUM_BIN");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int rc = pclose(pipe);
  RunResult r;
  r.status = WEXITSTATUS(rc);
  r.out = out;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("dispatch table covers every operation exactly once") {
  const auto& table = cfs::dispatch_table();
  const std::set<std::string> expected_ops = {
      "gauss_expand",        "evaluate",
      "convergents",         "cylinder",
      "tail_union_diameter", "limsup_ratio",
      "superlinearity_check", "increasing_equivalence_check",
      "point_in_E",          "khintchine_ratio",
      "dn_membership",       "f_set_sampler",
      "jarnik_check",        "pressure",
      "mu",                  "consistency_check",
      "n_epsilon_threshold", "inequality4_check",
      "lemma31_dimension",   "fast_khintchine_dimension",
      "jarnik_bounds",       "beta_exponent",
      "covering_sum_trace",  "box_counting",
      "verify_harness"};
  CHECK(table.size() == expected_ops.size());
  const std::set<std::string> subcommands = {
      "expand", "evaluate", "convergents", "cylinder", "growth", "construct",
      "ratio",  "jarnik",   "measure",     "threshold", "dimension", "verify"};
  for (const auto& op : expected_ops) {
    auto it = table.find(op);
    REQUIRE(it != table.end());
    CHECK(subcommands.count(it->second) == 1);
  }
}

TEST_CASE("expand subcommand") {
  auto r = run("expand --rational 5/7");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"quotients\"") != std::string::npos);
  CHECK(r.out.find("\"1\"") != std::string::npos);
  CHECK(r.out.find("\"2\"") != std::string::npos);

  CHECK(run("expand --rational 3/2").status == cfs::kExitDomainError);
  CHECK(run("expand").status == cfs::kExitUsage);

  // Certified-real input: ten ones of the golden ratio conjugate.
  auto g = run("expand --real 0.61803398875 --radius 1e-12 --max-n 10");
  CHECK(g.status == 0);
  size_t ones = 0;
  for (size_t pos = 0; (pos = g.out.find("\"1\"", pos)) != std::string::npos; ++pos)
    ++ones;
  CHECK(ones == 10);
}

TEST_CASE("evaluate and cylinder subcommands") {
  auto r = run("evaluate --word 1,2,2");
  CHECK(r.status == 0);
  CHECK(r.out.find("5/7") != std::string::npos);

  auto c = run("cylinder --word 1 --a-min 2");
  CHECK(c.status == 0);
  CHECK(c.out.find("\"left\": \"1/2\"") != std::string::npos);
  CHECK(c.out.find("\"tail_union_diameter\": \"1/3\"") != std::string::npos);
}

TEST_CASE("dimension closed form over the CLI") {
  auto r = run("dimension --method theorem11 --psi geometric:3 --horizon 100");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"value\": \"1/4\"") != std::string::npos);
  CHECK(r.out.find("\"method\": \"theorem11\"") != std::string::npos);
}

TEST_CASE("resource and diagnostic exit codes") {
  CHECK(run("construct --kind point --psi geometric:2 --n 40").status ==
        cfs::kExitResourceError);
  CHECK(run("growth --check superlinear --psi polynomial:1 --horizon 200").status ==
        cfs::kExitDiagnosticFailure);
  CHECK(run("nosuchcommand").status == cfs::kExitUsage);
  CHECK(run("dimension --method nosuch").status == cfs::kExitUsage);
}

TEST_CASE("byte-identical reruns with identical configs") {
  std::string out1 = "/tmp/cfspectrum_cli_test_a.json";
  std::string out2 = "/tmp/cfspectrum_cli_test_b.json";

  auto r1 = run("construct --kind fsample --s-seq doubleexp --ell 2 --n 6 --seed 7 --out " + out1);
  auto r2 = run("construct --kind fsample --s-seq doubleexp --ell 2 --n 6 --seed 7 --out " + out2);
  CHECK(r1.status == 0);
  CHECK(r2.status == 0);
  std::string a = slurp(out1), b = slurp(out2);
  CHECK(!a.empty());
  CHECK(a == b);

  auto r3 = run("construct --kind fsample --s-seq doubleexp --ell 2 --n 6 --seed 8 --out " + out2);
  CHECK(r3.status == 0);
  CHECK(slurp(out2) != a);

  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("csv format emits a header row") {
  auto r = run("ratio --word 7,54,403 --psi polynomial:2 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("n,a_n,log_sum,ratio", 0) == 0);
}

TEST_CASE("measure and threshold over the CLI") {
  auto p = run("measure --op pressure --t 2 --target-error 1e-8");
  CHECK(p.status == 0);
  CHECK(p.out.find("0.4977") != std::string::npos);

  auto th = run("threshold --psi polynomial:2 --epsilon 1/2 --horizon 256");
  CHECK(th.status == 0);
  CHECK(th.out.find("\"n_epsilon\": 13") != std::string::npos);

  auto j = run("jarnik --word 2,3,100 --beta 1");
  CHECK(j.status == 0);
  CHECK(j.out.find("[") != std::string::npos);
}

TEST_CASE("config file merges under explicit flags") {
  std::string cfg_path = "/tmp/cfspectrum_cli_test.cfg";
  {
    // Values containing commas must be quoted in config files.
    std::ofstream cfg(cfg_path);
    cfg << "[evaluate]\nword=\"1,2,2\"\n";
  }
  auto r = run("--config " + cfg_path + " evaluate");
  CHECK(r.status == 0);
  CHECK(r.out.find("5/7") != std::string::npos);

  // An explicit flag wins over the config value.
  auto r2 = run("--config " + cfg_path + " evaluate --word 2");
  CHECK(r2.status == 0);
  CHECK(r2.out.find("1/2") != std::string::npos);
  std::remove(cfg_path.c_str());
}

TEST_CASE("growth diagnostics over the CLI") {
  auto r = run("growth --check limsup --psi factorial_block --horizon 720");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"divergence\": true") != std::string::npos);

  // A non-monotone table fails the equivalence diagnostic with exit 4.
  std::string table_path = "/tmp/cfspectrum_cli_table.csv";
  {
    std::ofstream t(table_path);
    for (long n = 1; n <= 60; ++n)
      t << n << "," << (n % 2 == 0 ? n * n : n) << "\n";
  }
  auto r2 = run("growth --check equivalence --psi table:" + table_path +
                " --horizon 60 --tolerance 0.01");
  CHECK(r2.status == cfs::kExitDiagnosticFailure);
  CHECK(r2.out.find("\"equivalent\": false") != std::string::npos);
  std::remove(table_path.c_str());
}

TEST_CASE("construct trace lines carry the documented keys") {
  auto r = run("construct --kind point --psi polynomial:2 --n 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("{\"n\":1,\"a_n\":\"7\",") != std::string::npos);
  CHECK(r.out.find("\"log_sum\":") != std::string::npos);
  CHECK(r.out.find("\"ratio\":") != std::string::npos);
}

TEST_CASE("dimension traces in csv carry running estimates") {
  auto r = run("dimension --method lemma31 --s-seq doubleexp --horizon 16 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("level,ratio,running_estimate", 0) == 0);

  auto r2 = run("dimension --method covering --s-seq doubleexp --ell 2"
                " --s-exponent 0.383 --depth 6 --format csv");
  CHECK(r2.status == 0);
  CHECK(r2.out.rfind("level,log_lower,log_upper", 0) == 0);

  auto r3 = run("dimension --method box --s-seq doubleexp --ell 2 --depth 4"
                " --count 1200 --scales 2,3,4,5,6,7,8,9,10,11,12 --format csv");
  CHECK(r3.status == 0);
  CHECK(r3.out.rfind("scale,count,running_estimate", 0) == 0);
}

TEST_CASE("verify subcommand reports pass counts") {
  auto r = run("verify --suite identities --depth 40 --trials 60 --seed 7");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"total_failures\": 0") != std::string::npos);
  CHECK(run("verify --suite nosuch").status == cfs::kExitUsage);
}
