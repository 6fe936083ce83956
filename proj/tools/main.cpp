// Command-line front end: every analysis of the core library as a subcommand
// with deterministic, machine-readable output. Exit code 0 iff all requested
// checks pass.

#include <array>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lie_euler/adjoint.hpp"
#include "lie_euler/errata.hpp"
#include "lie_euler/group_action.hpp"
#include "lie_euler/optimal.hpp"
#include "lie_euler/residual.hpp"
#include "lie_euler/structure.hpp"
#include "lie_euler/structure_report.hpp"
#include "lie_euler/tables.hpp"
#include "lie_euler/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace lie_euler;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json matrix_json(const Mat13& m) {
  Json rows = Json::array();
  for (int i = 0; i < kAlgebraDim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < kAlgebraDim; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

AlgebraElement parse_coeffs(const std::vector<double>& a) {
  if (a.size() != 13) throw CLI::ValidationError("--a expects 13 comma-separated coefficients");
  AlgebraElement out{};
  for (std::size_t k = 0; k < 13; ++k) out[k] = a[k];
  return out;
}

SolutionField field_by_name(const std::string& name) {
  if (name == "constant") return constant_state();
  if (name == "uniform") return uniform_flow(0.3, -0.2, 0.5, 2.0, 1.5);
  if (name == "stratified") return stratified_state(1.0);
  if (name == "quadratic") return control_quadratic();
  if (name == "trig") return control_trig();
  throw CLI::ValidationError("unknown field: " + name);
}

Grid grid_with_points(int n) {
  Grid g = Grid::default_grid();
  for (auto& h : g.h) h = 1.0 / static_cast<double>(n - 1);
  g.validate();
  return g;
}

Json report_json(const ResidualReport& r) {
  Json j;
  j["max_norm"] = r.max_norm;
  j["l2_norm"] = r.l2_norm;
  j["sample_count"] = r.sample_count;
  j["min_density_seen"] = r.min_density_seen;
  return j;
}

Json moves_json(const std::vector<Move>& moves) {
  Json arr = Json::array();
  for (const Move& m : moves) {
    Json e;
    e["kind"] = m.kind == Move::Kind::kAdjoint ? "adjoint" : "scale";
    if (m.kind == Move::Kind::kAdjoint) e["generator"] = m.generator;
    e["parameter"] = m.parameter;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::optional<TransformSpec> transform_from_flags(int generator, double s,
                                                  std::optional<double> lambda,
                                                  const std::vector<double>& composite) {
  if (!composite.empty()) {
    if (composite.size() != 6)
      throw CLI::ValidationError("--composite expects 6 constants c1..c6");
    std::array<double, 6> c{};
    for (std::size_t k = 0; k < 6; ++k) c[k] = composite[k];
    return TransformSpec::composite_family(c, s);
  }
  if (generator == 0) return std::nullopt;
  double parameter = lambda ? *lambda : s;
  return TransformSpec::single(generator, parameter);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-algebra toolkit for the 3D gas-dynamics Euler equations"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string algebra = "g";
  int gen_i = 1;
  double gen_s = 0.0;
  std::vector<double> coeffs;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  double gamma = 1.4;
  std::string suite = "all";
  std::string field_name = "stratified";
  int grid_points = 17;
  int tr_generator = 0;
  double tr_s = 0.0;
  std::optional<double> tr_lambda;
  std::vector<double> tr_composite;
  std::array<double, 9> point{0, 0, 0, 0, 0, 0, 0, 1, 1};

  auto* c_table = app.add_subcommand("table", "Render the commutator table");
  c_table->add_option("--algebra", algebra, "g (13x13) or g1 (12x12 quotient)")
      ->check(CLI::IsMember({"g", "g1"}));
  c_table->add_option("--format", format)->check(CLI::IsMember({"markdown", "json"}));

  auto* c_structure = app.add_subcommand("structure", "Exact structure analysis report");

  auto* c_adjoint = app.add_subcommand("adjoint", "Closed-form adjoint matrix Ad(exp(s X_i))");
  c_adjoint->add_option("--i", gen_i, "generator index 1..13")->check(CLI::Range(1, 13));
  c_adjoint->add_option("--s", gen_s, "group parameter");
  c_adjoint->add_option("--format", format)->check(CLI::IsMember({"markdown", "json"}));

  auto* c_classify = app.add_subcommand("classify", "Case of the 26-case optimal system");
  c_classify->add_option("--a", coeffs, "coefficients a1..a13")->delimiter(',')->required();

  auto* c_normalize = app.add_subcommand("normalize", "Drive an element to canonical form");
  c_normalize->add_option("--a", coeffs, "coefficients a1..a13")->delimiter(',')->required();
  c_normalize->add_option("--tol", tol, "off-mask tolerance");

  auto* c_transform = app.add_subcommand("transform", "Apply a group element to a state point");
  c_transform->add_option("--generator", tr_generator, "generator index 1..13")
      ->check(CLI::Range(1, 13))
      ->required();
  c_transform->add_option("--s", tr_s, "group parameter");
  c_transform->add_option("--lambda", [&tr_lambda](const std::vector<std::string>& v) {
    tr_lambda = std::stod(v.at(0));
    return true;
  }, "scale parameter for the dilation generators");
  c_transform->add_option("--point", point, "t,x,y,z,u,v,w,p,q")->delimiter(',');

  auto* c_residual = app.add_subcommand("residual", "Finite-difference residual certification");
  c_residual->add_option("--field", field_name,
                         "constant|uniform|stratified|quadratic|trig");
  c_residual->add_option("--grid", grid_points, "points per axis")->check(CLI::Range(3, 257));
  c_residual->add_option("--gamma", gamma, "adiabatic index");
  c_residual->add_option("--generator", tr_generator, "transform generator 1..13")
      ->check(CLI::Range(0, 13));
  c_residual->add_option("--s", tr_s, "transform parameter");
  c_residual->add_option("--lambda", [&tr_lambda](const std::vector<std::string>& v) {
    tr_lambda = std::stod(v.at(0));
    return true;
  }, "scale parameter for the dilation generators");
  c_residual->add_option("--composite", tr_composite, "composite constants c1..c6")
      ->delimiter(',');

  auto* c_verify = app.add_subcommand("verify", "Seeded property suites");
  c_verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"brackets", "invariance", "adjoint", "optimal", "residual", "all"}));
  c_verify->add_option("--seed", seed, "PRNG seed");
  c_verify->add_option("--gamma", gamma, "adiabatic index");

  auto* c_errata = app.add_subcommand("errata", "Corrections applied to the source material");
  c_errata->add_option("--format", format)->check(CLI::IsMember({"markdown", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_table->parsed()) {
      const StructureConstants& sc =
          algebra == "g" ? reference_algebra_table() : reference_quotient_table();
      auto labels = algebra == "g" ? x_labels(13) : y_labels(12);
      if (format == "markdown") {
        std::cout << render_markdown_table(sc, labels);
      } else {
        Json out;
        out["schema_version"] = 1;
        out["algebra"] = algebra;
        out["entries"] = table_to_json(sc);
        emit(out);
      }
      return 0;
    }
    if (c_structure->parsed()) {
      Json out;
      out["schema_version"] = 1;
      out["structure"] = structure_report();
      out["errata"] = errata_to_json();
      emit(out);
      return out["structure"]["pass"].get<bool>() ? 0 : 1;
    }
    if (c_adjoint->parsed()) {
      AdjointMatrix m = adjoint_closed(gen_i, gen_s);
      if (format == "markdown") {
        for (int r = 0; r < kAlgebraDim; ++r) {
          for (int c = 0; c < kAlgebraDim; ++c)
            std::cout << (c ? " " : "") << m.m(r, c);
          std::cout << "\n";
        }
      } else {
        Json out;
        out["schema_version"] = 1;
        out["generator"] = gen_i;
        out["s"] = gen_s;
        out["matrix"] = matrix_json(m.m);
        emit(out);
      }
      return 0;
    }
    if (c_classify->parsed()) {
      ClassifyResult r = classify(parse_coeffs(coeffs));
      Json out;
      out["schema_version"] = 1;
      out["case"] = r.case_id;
      out["notes"] = r.notes;
      emit(out);
      return r.case_id != 0 ? 0 : 1;
    }
    if (c_normalize->parsed()) {
      NormalizationResult r = normalize(parse_coeffs(coeffs), tol);
      Json out;
      out["schema_version"] = 1;
      out["case"] = r.case_id;
      out["representative"] = r.representative;
      out["mask"] = canonical_mask(r.case_id);
      out["mask_reached"] = r.mask_reached;
      out["off_mask_norm"] = r.off_mask_norm;
      out["moves"] = moves_json(r.moves);
      emit(out);
      return r.mask_reached ? 0 : 1;
    }
    if (c_transform->parsed()) {
      double parameter = tr_s;
      if (tr_lambda) {
        // Dilations are parameterized by their scale; convert to the additive
        // group parameter of the flow.
        parameter = std::log(*tr_lambda);
      }
      StatePoint pt = StatePoint::from_array(point);
      StatePoint image = apply_point(tr_generator, parameter, pt);
      Json out;
      out["schema_version"] = 1;
      out["generator"] = tr_generator;
      out["s"] = parameter;
      out["point"] = pt.as_array();
      out["image"] = image.as_array();
      emit(out);
      return 0;
    }
    if (c_residual->parsed()) {
      SolutionField f = field_by_name(field_name);
      EulerSystem sys{gamma};
      Grid grid = grid_with_points(grid_points);
      Json out;
      out["schema_version"] = 1;
      out["field"] = f.name;
      out["gamma"] = gamma;
      out["grid_points"] = grid_points;
      auto spec = transform_from_flags(tr_generator, tr_s, tr_lambda, tr_composite);
      bool pass = true;
      if (spec) {
        PreservationResult r = symmetry_preservation(*spec, f, sys, grid);
        out["transform"] = spec->to_json();
        out["before"] = report_json(r.before);
        out["after"] = report_json(r.after);
        pass = r.pass;
      } else {
        out["report"] = report_json(residual(f, sys, grid));
      }
      out["pass"] = pass;
      emit(out);
      return pass ? 0 : 1;
    }
    if (c_verify->parsed()) {
      VerifyConfig cfg;
      cfg.seed = seed;
      cfg.gamma = gamma;
      Json report = run_verify_suite(suite, cfg);
      emit(report);
      return verify_passed(report) ? 0 : 1;
    }
    if (c_errata->parsed()) {
      if (format == "markdown") {
        std::cout << errata_to_markdown();
      } else {
        Json out;
        out["schema_version"] = 1;
        out["errata"] = errata_to_json();
        emit(out);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    Json err;
    err["schema_version"] = 1;
    err["error"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
