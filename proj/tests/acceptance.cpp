// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs every verification suite at seed 0, groups the
// checks by criterion, and prints one pass/fail line per criterion.  The
// final criterion (byte-identical reports across repeated runs) drives the
// installed CLI twice; pass its path as argv[1].

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "monolie/verification.hpp"

namespace {

struct CriterionSpec {
  int id;
  const char* label;
  double budget_s;  // wall-clock budget for the suites backing the criterion
  std::vector<std::string> modules;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_command(const std::string& cmd) {
  const int st = std::system(cmd.c_str());
  if (st == -1) return -1;
  if (WIFEXITED(st)) return WEXITSTATUS(st);
  return -2;
}

}  // namespace

int main(int argc, char** argv) {
  using clock = std::chrono::steady_clock;
  const unsigned seed = 0;

  std::map<std::string, monolie::SuiteResult> suites;
  std::map<std::string, double> suite_seconds;
  for (const std::string& name : monolie::verify_module_names()) {
    const auto t0 = clock::now();
    suites[name] = monolie::verify_module(name, seed);
    suite_seconds[name] =
        std::chrono::duration<double>(clock::now() - t0).count();
  }

  const std::vector<CriterionSpec> specs = {
      {1, "clifford product, conjugation, inverses", 1.0, {"clifford"}},
      {2, "lie ball membership matches the singular set", 5.0, {"lie"}},
      {3, "norm sandwich and the two norm formulas", 1.0, {"lie"}},
      {4, "legendre series, bounds, derivative identity", 5.0, {"legendre"}},
      {5, "monogenic extensions and kernel polynomials", 30.0, {"monogenic"}},
      {6, "cauchy transform reproduction", 60.0, {"cauchy"}},
      {7, "kernel series agreement on the lie ball", 30.0, {"kernel"}},
      {8, "holomorphic-monogenic diagram closure", 120.0, {"diagram"}},
      {9, "matrix functional calculus", 120.0, {"opcalc"}},
  };

  bool all_ok = true;
  for (const CriterionSpec& spec : specs) {
    std::size_t total = 0, passed = 0;
    double worst = 0.0;
    double seconds = 0.0;
    for (const std::string& mod : spec.modules) {
      seconds += suite_seconds[mod];
      for (const monolie::CheckResult& c : suites[mod].checks) {
        if (c.criterion != spec.id) continue;
        ++total;
        if (c.pass) ++passed;
        if (c.residual > worst) worst = c.residual;
      }
    }
    const bool in_budget = seconds <= spec.budget_s;
    const bool ok = total > 0 && passed == total && in_budget;
    all_ok = all_ok && ok;
    std::printf(
        "criterion %2d [%s] %-46s  checks %zu/%zu  worst residual %.3g  "
        "time %.2fs (budget %.0fs)\n",
        spec.id, ok ? "PASS" : "FAIL", spec.label, passed, total, worst,
        seconds, spec.budget_s);
    if (!in_budget) {
      std::printf("criterion %2d        exceeded its time budget\n", spec.id);
    }
  }

  // Determinism: the CLI report for `verify all --seed 0` must be
  // byte-identical across runs.
  {
    bool ok = false;
    if (argc < 2) {
      std::printf(
          "criterion 10 [FAIL] determinism of the verification report        "
          "(usage: monolie_acceptance <cli-path>)\n");
    } else {
      const std::string cli = argv[1];
      const std::string out1 = "acceptance_report_1.txt";
      const std::string out2 = "acceptance_report_2.txt";
      const int rc1 =
          run_command("\"" + cli + "\" verify all --seed 0 > " + out1 + " 2>&1");
      const int rc2 =
          run_command("\"" + cli + "\" verify all --seed 0 > " + out2 + " 2>&1");
      const std::string a = read_file(out1);
      const std::string b = read_file(out2);
      ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
      std::printf(
          "criterion 10 [%s] determinism of the verification report       "
          "exit codes %d/%d, %zu bytes, %s\n",
          ok ? "PASS" : "FAIL", rc1, rc2, a.size(),
          a == b ? "byte-identical" : "reports differ");
      std::remove(out1.c_str());
      std::remove(out2.c_str());
    }
    all_ok = all_ok && ok;
  }

  std::printf("overall: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}
