// Acceptance gate: one line per criterion, exit code = number of failures.
// Tolerances live in the library checks; this binary only aggregates them.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lie_euler/structure_report.hpp"
#include "lie_euler/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool check_passed(const Json& suite_section, const std::string& name) {
  for (const auto& c : suite_section.at("checks")) {
    if (c.at("name") == name) return c.at("pass").get<bool>();
  }
  return false;
}

bool all_passed(const Json& section, const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (!check_passed(section, n)) return false;
  return true;
}

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  if (!pass) ++g_failures;
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f s", s);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lie_euler;
  VerifyConfig cfg;  // seed 42, gamma 1.4

  auto t0 = Clock::now();
  Json brackets = run_verify_suite("brackets", cfg)["sections"]["brackets"];
  double t_brackets = seconds_since(t0);
  report(1,
         all_passed(brackets, {"commutator-table-13", "quotient-table-12"}) && t_brackets < 1.0,
         "13x13 and 12x12 commutator tables, exact (" + fmt_secs(t_brackets) + ")");
  report(2, check_passed(brackets, "jacobi-identity") && t_brackets < 1.0,
         "jacobi identity on all 286 triples, exact (" + fmt_secs(t_brackets) + ")");

  t0 = Clock::now();
  Json invariance = run_verify_suite("invariance", cfg)["sections"]["invariance"];
  double t_inv = seconds_since(t0);
  report(3,
         all_passed(invariance,
                    {"generator-invariance-symbolic-gamma", "perturbed-field-rejected"}) &&
             t_inv < 30.0,
         "symbolic invariance of all 13 generators, perturbed field rejected (" +
             fmt_secs(t_inv) + ")");
  report(4,
         all_passed(invariance,
                    {"determining-equations-random-100", "seeded-corruptions-detected"}),
         "determining equations: 100 random parameter vectors, corruptions caught");

  report(5, structure_report_passed(structure_report()),
         "structure analysis: center, radical series, Levi, so(3), Galilean ideal, exact");

  Json adjoint = run_verify_suite("adjoint", cfg)["sections"]["adjoint"];
  report(6,
         all_passed(adjoint,
                    {"series-matches-closed-form", "central-generator-acts-trivially",
                     "x1-adjoint-matrix-pattern", "rotation-adjoint-block-pattern",
                     "one-parameter-group-property", "adjoint-is-automorphism"}),
         "adjoint series vs closed forms, printed patterns, group/automorphism properties");
  report(7, check_passed(adjoint, "translation-boost-composite-formulas"),
         "translation-boost composite matches the printed coefficient formulas, 1000 draws");

  Json optimal = run_verify_suite("optimal", cfg)["sections"]["optimal"];
  report(8,
         all_passed(optimal, {"classification-spot-checks", "normalization-sweep-26x100",
                              "exact-rational-normalization"}),
         "optimal system: 26x100 normalization sweep with replay soundness");

  t0 = Clock::now();
  Json residual = run_verify_suite("residual", cfg)["sections"]["residual"];
  double t_res = seconds_since(t0);
  report(9,
         all_passed(residual, {"flow-integration-cross-check", "group-law-and-inverse",
                               "point-action-graph-consistency"}),
         "group actions: flow cross-check, group law, graph consistency");
  report(10,
         all_passed(residual,
                    {"exact-solution-residuals", "single-generator-preservation",
                     "composite-family-preservation-20", "central-scheme-order-2",
                     "exact-solution-floor-limited", "one-sided-scheme-order-1"}) &&
             t_res < 60.0,
         "residual certification and convergence order (" + fmt_secs(t_res) + ")");

  bool reproducible;
  if (argc > 1) {
    std::string cmd = std::string("\"") + argv[1] + "\" verify --suite all --seed 42";
    std::string a = run_capture(cmd);
    std::string b = run_capture(cmd);
    reproducible = !a.empty() && a == b;
  } else {
    std::string a = run_verify_suite("all", cfg).dump(2);
    std::string b = run_verify_suite("all", cfg).dump(2);
    reproducible = a == b;
  }
  report(11, reproducible, "verify --suite all --seed 42 is byte-identical across runs");

  return g_failures;
}
