// Command-line surface: construct, verify, enumerate, and scan the
// U(2)-invariant conformally Kahler Einstein-Maxwell metrics on Hirzebruch
// surfaces, with machine-readable reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "emk/invariants.hpp"
#include "emk/oracle.hpp"
#include "emk/page.hpp"
#include "emk/report.hpp"

namespace {

using nlohmann::json;
using namespace emk;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct OutputOptions {
  std::string json_path;
  std::string csv_path;
};

json report_skeleton(const std::string& command) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command;
  return j;
}

void emit(const json& report, const OutputOptions& out) {
  const std::string text = dump_deterministic(report);
  std::cout << text;
  if (!out.json_path.empty()) {
    std::ofstream f(out.json_path, std::ios::binary);
    f << text;
  }
}

void write_csv(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  f << content;
}

json invariants_json(const InvariantsReport& inv) {
  json j;
  j["s_h"] = rational_string(inv.s_h_exact);
  j["s_h_value"] = inv.s_h;
  j["V_over_pi2"] = rational_string(inv.V_over_pi2);
  j["V_h"] = inv.V_h;
  j["sV"] = inv.sV;
  j["area_h_Cminus"] = inv.area_h_Cminus;
  j["area_h_Cplus"] = inv.area_h_Cplus;
  j["einstein"] = inv.einstein;
  return j;
}

json solution_json(const CompactSolution& sol) {
  json j;
  j["k"] = sol.k;
  j["a"] = rational_string(sol.a);
  j["b"] = rational_string(sol.b);
  j["b_over_a"] = to_double(sol.b / sol.a);
  j["branch"] = to_string(sol.branch);
  j["alpha"] = rational_string(sol.alpha);
  j["E"] = rational_string(sol.E);
  json coeffs = json::array();
  for (int i = 0; i <= 4; ++i)
    coeffs.push_back(rational_string(sol.psi[static_cast<std::size_t>(i)]));
  j["psi_coefficients"] = coeffs;
  j["kappa"] = rational_string(sol.kappa());
  j["invariants"] = invariants_json(report(sol));
  const auto flags = classify(sol.profile());
  j["classification"] = {{"extremal", flags.extremal},
                         {"cscK", flags.cscK},
                         {"scalar_flat_kahler", flags.scalar_flat_kahler},
                         {"einstein", flags.einstein.value_or(false)}};
  j["einstein_residual"] = rational_string(einstein_residual(sol));
  const KahlerClass kc = kahler_class_of(sol);
  json kcj;
  kcj["area_Cminus_2pi"] = rational_string(kc.area_Cminus);
  kcj["area_Cplus_2pi"] = rational_string(kc.area_Cplus);
  kcj["area_F_2pi"] = rational_string(kc.area_F);
  if (kc.u) {
    kcj["u"] = rational_string(*kc.u);
    kcj["v"] = rational_string(*kc.v);
    kcj["u_over_v"] = rational_string(*kc.u / *kc.v);
  }
  j["kahler_class"] = kcj;
  return j;
}

int cmd_build(const std::string& a_str, const std::string& b_str, int k,
              const std::string& branch_str, const OutputOptions& out) {
  json rep = report_skeleton("build");
  rep["inputs"] = {{"k", k}, {"a", a_str}, {"b", b_str}, {"branch", branch_str}};
  const Rational a = parse_rational(a_str);
  const Rational b = parse_rational(b_str);
  const Branch branch = branch_from_string(branch_str);
  try {
    const CompactSolution sol = build(k, a, b, branch);
    const ValidationReport vr = validate(sol);
    rep["outputs"] = solution_json(sol);
    json checks = json::array();
    for (const auto& c : vr.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    rep["outputs"]["validation"] = {{"all_passed", vr.all_passed}, {"checks", checks}};
    rep["pass"] = vr.all_passed;
    emit(rep, out);
    return vr.all_passed ? kExitPass : kExitValidation;
  } catch (const BranchError& e) {
    rep["pass"] = false;
    rep["error"] = e.what();
    emit(rep, out);
    return kExitValidation;
  } catch (const ValidationError& e) {
    rep["pass"] = false;
    rep["error"] = e.what();
    emit(rep, out);
    return kExitValidation;
  }
}

int cmd_verify(const std::string& a_str, const std::string& b_str, int k,
               const std::string& branch_str, int samples, double tol,
               const std::string& perturb_alpha, bool full_tensor, const OutputOptions& out) {
  json rep = report_skeleton("verify");
  rep["inputs"] = {{"k", k},       {"a", a_str},           {"b", b_str},
                   {"branch", branch_str}, {"samples", samples},   {"tol", tol},
                   {"perturb_alpha", perturb_alpha}, {"full_tensor", full_tensor}};
  const Rational a = parse_rational(a_str);
  const Rational b = parse_rational(b_str);
  const Branch branch = branch_from_string(branch_str);
  CompactSolution sol;
  try {
    sol = build(k, a, b, branch);
  } catch (const BranchError& e) {
    rep["pass"] = false;
    rep["error"] = e.what();
    emit(rep, out);
    return kExitValidation;
  } catch (const ValidationError& e) {
    rep["pass"] = false;
    rep["error"] = e.what();
    emit(rep, out);
    return kExitValidation;
  }

  MetricProfile profile = sol.profile();
  if (!perturb_alpha.empty()) {
    const Rational eps = parse_rational(perturb_alpha);
    profile.alpha = sol.alpha * (1 + eps);  // test hook: breaks the reduced form
  }

  const CurvatureReport cr = curvature_report(profile, sol.kappa(), samples);
  double worst_structure = 0.0, worst_jinv = 0.0, worst_em = 0.0, worst_r0 = 0.0;
  double worst_asd = 0.0;
  json tensor_samples = json::array();
  for (const CurvatureReportRow& row : cr.rows) {
    worst_structure = std::max(worst_structure, row.structure_residual);
    worst_jinv = std::max(worst_jinv, row.j_invariance_residual);
    worst_em = std::max(worst_em, row.em_residual);
    worst_r0 = std::max(worst_r0, row.trace_free_norm);
    if (!row.einstein_point) {
      const FReconstruction fr = reconstruct_F(profile, row.x);
      worst_asd = std::max({worst_asd, fr.asd_residual, fr.antisymmetry_residual});
    }
    if (full_tensor) {
      json t;
      t["x"] = row.x;
      t["ricci_diag"] = row.ricci_diag;
      t["s_h"] = row.s_h;
      t["trace_free_norm"] = row.trace_free_norm;
      tensor_samples.push_back(t);
    }
  }

  // all curvature-level residuals are reported relative to the curvature
  // scale, so the verdict is invariant under rescaling (a, b)
  const double scale = cr.curvature_scale;
  json residuals;
  residuals["kappa_constancy"] = cr.kappa_residual;
  residuals["structure_equation"] = worst_structure;
  residuals["j_invariance"] = worst_jinv / scale;
  residuals["trace_free_ricci_max"] = worst_r0 / scale;
  bool pass = cr.kappa_residual < tol && worst_structure < 1e-10 &&
              worst_jinv / scale < 1e-10;
  if (cr.einstein_mode) {
    rep["outputs"] = {{"einstein_mode", true}};
  } else {
    residuals["em_residual"] = worst_em / scale;
    residuals["maxwell_dF"] = cr.maxwell.dF / scale;
    residuals["maxwell_dstarF"] = cr.maxwell.dstarF / scale;
    residuals["asd_certification"] = worst_asd / scale;
    pass = pass && worst_em / scale < tol && cr.maxwell.dF / scale < tol &&
           cr.maxwell.dstarF / scale < tol && worst_asd / scale < 1e-10;
    rep["outputs"] = {{"einstein_mode", false}};
  }
  rep["outputs"]["residuals"] = residuals;
  // max over the equation residuals; the trace-free Ricci norm is a property
  // of the solution (how far from Einstein), not an error measure
  rep["outputs"]["max_residual"] = [&residuals] {
    double m = 0.0;
    for (const auto& [key, val] : residuals.items())
      if (key != "trace_free_ricci_max") m = std::max(m, val.get<double>());
    return m;
  }();
  if (full_tensor) rep["outputs"]["tensor_samples"] = tensor_samples;
  rep["pass"] = pass;
  emit(rep, out);
  return pass ? kExitPass : kExitValidation;
}

int cmd_enumerate(const std::string& u_str, const std::string& v_str, const OutputOptions& out) {
  json rep = report_skeleton("enumerate");
  rep["inputs"] = {{"u", u_str}, {"v", v_str}};
  const Rational u = parse_rational(u_str);
  const Rational v = parse_rational(v_str);
  try {
    const EnumerationResult res = enumerate_k1(u, v);
    json sols = json::array();
    std::string csv = csv_line({"index", "branch", "b_over_a", "s_h", "V_h", "sV"});
    int idx = 0;
    for (const auto& s : res.solutions) {
      sols.push_back(solution_json(s));
      const InvariantsReport inv = report(s);
      csv += csv_line({std::to_string(idx++), to_string(s.branch),
                       csv_number(to_double(s.b / s.a)), csv_number(inv.s_h),
                       csv_number(inv.V_h), csv_number(inv.sV)});
    }
    rep["outputs"] = {{"count", res.solutions.size()},
                      {"at_bifurcation", res.at_bifurcation},
                      {"solutions", sols}};
    if (res.at_bifurcation)
      rep["outputs"]["note"] =
          "u/v = 9: the three solutions merge into a single one (b = 3a)";
    rep["pass"] = true;
    emit(rep, out);
    write_csv(out.csv_path, csv);
    return kExitPass;
  } catch (const DegenerateClassError& e) {
    rep["pass"] = false;
    rep["error"] = e.what();
    emit(rep, out);
    return kExitValidation;
  }
}

int cmd_page(const OutputOptions& out) {
  json rep = report_skeleton("page");
  rep["inputs"] = json::object();
  const PagePoint pp = page_point();
  const EinsteinLocusResult locus = einstein_locus(1, Branch::First);
  json o;
  o["z"] = pp.z;
  o["z_digits"] = ferrari_page_root_digits();
  o["u_over_v"] = pp.u_over_v;
  o["u_over_v_radical"] = page_u_over_v_radical();
  o["alpha_over_a"] = pp.alpha_over_a;
  o["sV"] = pp.sV;
  o["einstein"] = pp.einstein;
  o["sturm_root"] = locus.roots_z.empty() ? 0.0 : locus.roots_z.front().value;
  o["radical_vs_sturm"] =
      locus.roots_z.empty() ? 1.0 : std::abs(locus.roots_z.front().value - pp.z);
  rep["outputs"] = o;
  rep["pass"] = pp.einstein;
  emit(rep, out);
  return pp.einstein ? kExitPass : kExitValidation;
}

int cmd_moduli(const std::string& d_str, const std::string& f_str, const OutputOptions& out) {
  json rep = report_skeleton("moduli");
  rep["inputs"] = {{"omega_D", d_str}, {"omega_F", f_str}};
  const ModuliScan scan = moduli_scan(parse_rational(d_str), parse_rational(f_str));
  json entries = json::array();
  std::string csv = csv_line({"k", "b_over_a", "sV"});
  for (const auto& e : scan.entries) {
    entries.push_back({{"k", e.k},
                       {"b_over_a", e.z},
                       {"z_squared", rational_string(e.z_squared)},
                       {"sV", e.sv},
                       {"a", e.a},
                       {"b", e.b}});
    csv += csv_line({std::to_string(e.k), csv_number(e.z), csv_number(e.sv)});
  }
  rep["outputs"] = {{"admissible_k_count", scan.admissible_k.size()},
                    {"admissible_k_max", scan.admissible_k.empty() ? 0 : scan.admissible_k.back()},
                    {"entries", entries},
                    {"component_lower_bound", scan.component_lower_bound}};
  rep["pass"] = true;
  emit(rep, out);
  write_csv(out.csv_path, csv);
  return kExitPass;
}

int cmd_sweep(int k, const std::string& branch_str, const std::string& zmin_str,
              const std::string& zmax_str, int steps, const OutputOptions& out) {
  json rep = report_skeleton("sweep");
  rep["inputs"] = {{"k", k},
                   {"branch", branch_str},
                   {"z_min", zmin_str},
                   {"z_max", zmax_str},
                   {"steps", steps}};
  const Branch branch = branch_from_string(branch_str);
  const Rational zmin = parse_rational(zmin_str);
  const Rational zmax = parse_rational(zmax_str);
  if (!(zmin > 1) || !(zmax > zmin)) throw UsageError("need 1 < z_min < z_max");
  if (steps < 1) throw UsageError("need steps >= 1");

  struct Row {
    double z, s_h, V_h, sV, einstein_residual;
  };
  std::vector<std::future<Row>> futures;
  futures.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    futures.push_back(std::async(std::launch::async, [=]() {
      const Rational z = zmin + (zmax - zmin) * Rational(i) / Rational(steps);
      const CompactSolution sol = build(k, Rational(1), z, branch);
      const InvariantsReport inv = report(sol);
      return Row{to_double(z), inv.s_h, inv.V_h, inv.sV, to_double(einstein_residual(sol))};
    }));
  }
  std::string csv = csv_line({"b_over_a", "s_h", "V_h", "sV", "einstein_residual"});
  json rows = json::array();
  for (auto& f : futures) {
    const Row r = f.get();  // ordering fixed by input index
    csv += csv_line({csv_number(r.z), csv_number(r.s_h), csv_number(r.V_h), csv_number(r.sV),
                     csv_number(r.einstein_residual)});
    rows.push_back({{"b_over_a", r.z},
                    {"s_h", r.s_h},
                    {"V_h", r.V_h},
                    {"sV", r.sV},
                    {"einstein_residual", r.einstein_residual}});
  }
  rep["outputs"] = {{"rows", rows}};
  rep["pass"] = true;
  emit(rep, out);
  write_csv(out.csv_path, csv);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"U(2)-invariant conformally Kahler Einstein-Maxwell metrics on "
               "Hirzebruch surfaces: construct, verify, enumerate, scan"};
  app.require_subcommand(1);
  app.fallthrough();  // global --json/--csv may follow the subcommand

  OutputOptions out;
  app.add_option("--json", out.json_path, "also write the JSON report to this path");
  app.add_option("--csv", out.csv_path, "write plot-ready CSV (enumerate/moduli/sweep)");

  std::string a_str = "1", b_str = "2", branch_str = "first";
  int k = 1;
  int samples = 20;
  double tol = 1e-8;
  std::string perturb_alpha;
  bool full_tensor = false;
  std::string u_str = "10", v_str = "1";
  std::string d_str = "15", f_str = "1";
  std::string zmin_str = "3/2", zmax_str = "3";
  int steps = 20;

  auto* build_cmd = app.add_subcommand(
      "build", "construct and validate a compact solution from (k, a, b, branch)");
  build_cmd->add_option("--k", k, "Hirzebruch index k >= 1");
  build_cmd->add_option("--a", a_str, "left endpoint a (rational 'p/q' or decimal)");
  build_cmd->add_option("--b", b_str, "right endpoint b > a");
  build_cmd->add_option("--branch", branch_str, "'first' or 'second' (second needs k = 1)");

  auto* verify_cmd = app.add_subcommand(
      "verify", "run the independent curvature oracle on a solution");
  verify_cmd->add_option("--k", k, "Hirzebruch index");
  verify_cmd->add_option("--a", a_str, "left endpoint");
  verify_cmd->add_option("--b", b_str, "right endpoint");
  verify_cmd->add_option("--branch", branch_str, "'first' or 'second'");
  verify_cmd->add_option("--samples", samples, "interior sample count (default 20)");
  verify_cmd->add_option("--tol", tol, "residual tolerance (default 1e-8)");
  verify_cmd->add_option("--perturb-alpha", perturb_alpha,
                         "test hook: multiply alpha by (1 + eps) before verification");
  verify_cmd->add_flag("--full-tensor", full_tensor, "include per-sample Ricci tensors");

  auto* enum_cmd = app.add_subcommand(
      "enumerate", "all U(2)-invariant solutions on Sigma_1 in the class u L - v E");
  enum_cmd->add_option("--u", u_str, "coefficient of L (rational)");
  enum_cmd->add_option("--v", v_str, "coefficient of E (rational)");

  app.add_subcommand("page", "locate the Page metric: Ferrari radical vs certified root");

  auto* moduli_cmd = app.add_subcommand(
      "moduli", "scan admissible k for a class given on the D/F basis");
  moduli_cmd->add_option("--d", d_str, "Omega(D) (rational)");
  moduli_cmd->add_option("--f", f_str, "Omega(F) (rational)");

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep of invariants over b/a");
  sweep_cmd->add_option("--k", k, "Hirzebruch index");
  sweep_cmd->add_option("--branch", branch_str, "'first' or 'second'");
  sweep_cmd->add_option("--z-min", zmin_str, "smallest b/a (> 1)");
  sweep_cmd->add_option("--z-max", zmax_str, "largest b/a");
  sweep_cmd->add_option("--steps", steps, "number of grid steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand("build")) return cmd_build(a_str, b_str, k, branch_str, out);
    if (app.got_subcommand("verify"))
      return cmd_verify(a_str, b_str, k, branch_str, samples, tol, perturb_alpha, full_tensor,
                        out);
    if (app.got_subcommand("enumerate")) return cmd_enumerate(u_str, v_str, out);
    if (app.got_subcommand("page")) return cmd_page(out);
    if (app.got_subcommand("moduli")) return cmd_moduli(d_str, f_str, out);
    if (app.got_subcommand("sweep"))
      return cmd_sweep(k, branch_str, zmin_str, zmax_str, steps, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
