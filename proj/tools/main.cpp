// eqforge command line: construct the H/G group families, run the
// verification suites, compute Molien data, solve equivariant bases and emit
// bifurcation reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqforge/bifurcation.hpp"
#include "eqforge/characters.hpp"
#include "eqforge/equivariants.hpp"
#include "eqforge/errors.hpp"
#include "eqforge/grouprep.hpp"
#include "eqforge/isotropy.hpp"
#include "eqforge/jsonout.hpp"
#include "eqforge/modular.hpp"
#include "eqforge/verify.hpp"

namespace {

using eqforge::grouprep::Family;
using eqforge::grouprep::GroupParams;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitNumerical = 4;

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json element_to_json(const eqforge::grouprep::GroupElement& e) {
  return json::array({e.k1, e.k2, e.l1, e.l2, e.m});
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eqforge::DomainError("cannot open output file: " + path);
  out << content;
}

GroupParams make_params(const std::string& family, std::int64_t a, std::int64_t b) {
  if (family == "h") return GroupParams::h4(a, b);
  if (family == "g") return GroupParams::g8(a, b);
  throw eqforge::DomainError("family must be 'h' or 'g'");
}

int cmd_group(const std::string& family, std::int64_t a, std::int64_t b,
              const std::string& out_path, double tol_matrix) {
  const GroupParams p = make_params(family, a, b);
  json report;
  report["specversion"] = "1";
  report["family"] = family == "h" ? "H4" : "G8";
  report["a"] = p.a;
  report["b"] = p.b;
  if (p.family == Family::G8) report["rho"] = p.rho;
  report["order"] = p.order();

  json gens;
  const auto mats = eqforge::grouprep::generator_matrix_list(p);
  const char* names4[] = {"c", "d", "q", "s"};
  const char* names8[] = {"C", "D", "Q", "S", "V"};
  for (std::size_t i = 0; i < mats.size(); ++i)
    gens[p.family == Family::H4 ? names4[i] : names8[i]] = matrix_to_json(mats[i]);
  report["generator_matrices"] = gens;

  json relations = json::array();
  bool all_pass = true;
  for (const auto& rel : eqforge::grouprep::relation_checks(p)) {
    const bool pass = rel.deviation < tol_matrix;
    all_pass = all_pass && pass;
    relations.push_back(
        {{"name", rel.name}, {"deviation", rel.deviation}, {"pass", pass}});
  }
  report["relation_check"] = relations;
  report["all_relations_pass"] = all_pass;

  write_output(out_path, eqforge::jsonout::dump(report));
  return all_pass ? kExitOk : kExitNumerical;
}

int cmd_isotropy(const std::string& family, std::int64_t a, std::int64_t b,
                 const std::string& out_path, double tol_rank) {
  const GroupParams p = make_params(family, a, b);
  const auto classes = eqforge::isotropy::classify_isotropy(p, tol_rank);
  json report;
  report["specversion"] = "1";
  report["a"] = p.a;
  report["b"] = p.b;
  report["family"] = family == "h" ? "H4" : "G8";
  report["nontrivial_fixer_count"] =
      static_cast<std::int64_t>(eqforge::isotropy::nontrivial_fixers(p).size());
  json cls_json = json::array();
  for (const auto& cls : classes) {
    cls_json.push_back({{"representative", element_to_json(cls.representative)},
                        {"fixed_dim", cls.fixed_dim},
                        {"member_count", static_cast<std::int64_t>(cls.members.size())}});
  }
  report["classes"] = cls_json;
  report["class_count"] = static_cast<std::int64_t>(classes.size());
  write_output(out_path, eqforge::jsonout::dump(report));
  return kExitOk;
}

int cmd_molien(std::int64_t a, std::int64_t b, int degree,
               const std::string& out_path, bool cross_check, double tol_rank,
               const std::string& format) {
  if (degree > 3)
    throw eqforge::DomainError("molien: degrees above 3 are not supported");
  if (degree < 1) throw eqforge::DomainError("molien: degree must be >= 1");
  const GroupParams p = GroupParams::g8(a, b);

  if (format == "csv") {
    std::string csv = "d,R_d,r_d\n";
    char buf[64];
    for (int d = 0; d <= degree; ++d) {
      const int r_d = eqforge::characters::molien_invariant(p, d);
      if (d == 0)
        std::snprintf(buf, sizeof buf, "0,,%d\n", r_d);
      else
        std::snprintf(buf, sizeof buf, "%d,%d,%d\n", d,
                      eqforge::characters::molien_equivariant(p, d), r_d);
      csv += buf;
    }
    write_output(out_path, csv);
    return kExitOk;
  }

  json report;
  report["specversion"] = "1";
  report["a"] = p.a;
  report["b"] = p.b;
  report["rho"] = p.rho;
  report["order"] = p.order();
  for (int d = 1; d <= degree; ++d) {
    report["R_" + std::to_string(d)] = eqforge::characters::molien_equivariant(p, d);
    report["R_" + std::to_string(d) + "_raw"] =
        eqforge::characters::molien_equivariant_raw(p, d);
  }
  for (int d = 0; d <= degree; ++d) {
    report["r_" + std::to_string(d)] = eqforge::characters::molien_invariant(p, d);
    report["r_" + std::to_string(d) + "_raw"] =
        eqforge::characters::molien_invariant_raw(p, d);
  }
  if (cross_check) {
    const auto gens = eqforge::grouprep::generator_matrix_list(p);
    json dims = json::array();
    for (int d = 1; d <= degree; ++d)
      dims.push_back(static_cast<std::int64_t>(
          eqforge::equivariants::equivariant_basis(gens, 8, d, tol_rank).size()));
    report["cross_check"] = dims;
  }
  write_output(out_path, eqforge::jsonout::dump(report));
  return kExitOk;
}

int cmd_equivariants(std::int64_t a, std::int64_t b, int degree,
                     const std::string& out_path, double tol_rank) {
  if (degree > 3)
    throw eqforge::DomainError("equivariants: degrees above 3 are not supported");
  const GroupParams p = GroupParams::g8(a, b);
  const auto gens = eqforge::grouprep::generator_matrix_list(p);
  const auto basis = eqforge::equivariants::equivariant_basis(gens, 8, degree, tol_rank);

  json report;
  report["specversion"] = "1";
  report["a"] = p.a;
  report["b"] = p.b;
  report["degree"] = degree;
  report["dimension"] = static_cast<std::int64_t>(basis.size());
  json maps = json::array();
  for (const auto& pm : basis) maps.push_back(json::parse(eqforge::polymap::to_json(pm)));
  report["basis"] = maps;
  write_output(out_path, eqforge::jsonout::dump(report));
  return kExitOk;
}

int cmd_bifurcate(std::int64_t a, std::int64_t b, std::vector<double> coeffs,
                  double r_max, int steps, const std::string& report_path,
                  const std::string& csv_path) {
  const GroupParams p = GroupParams::g8(a, b);
  const std::size_t expected = p.a == 5 ? 8 : 5;
  if (coeffs.size() != 5 && coeffs.size() != expected)
    throw eqforge::DomainError(
        "bifurcate: expected " + std::to_string(expected) +
        " coefficients for a = " + std::to_string(p.a) + ", got " +
        std::to_string(coeffs.size()));

  const eqforge::bifurcation::CubicTruncation r(coeffs);
  const auto gen = eqforge::bifurcation::genericity_check(r);
  if (!gen.ok) {
    std::string msg = "genericity violated:";
    for (const auto& v : gen.violations) msg += " " + v;
    std::cerr << msg << "\n";
    return kExitGenericity;
  }

  const auto report = eqforge::bifurcation::phase_report_y0(r);
  json rep;
  rep["specversion"] = "1";
  rep["a"] = p.a;
  rep["b"] = p.b;
  json cj = json::array();
  for (double c : coeffs) cj.push_back(c);
  rep["coefficients"] = cj;
  json zero = json::array();
  for (int i = 0; i < 4; ++i) zero.push_back(report.zero(i));
  rep["zero"] = zero;
  rep["jacobian"] = matrix_to_json(report.jacobian);
  json ev = json::array();
  for (const auto& v : report.eigenvalues)
    ev.push_back({{"re", v.real()}, {"im", v.imag()}});
  rep["eigenvalues"] = ev;
  rep["hyperbolic"] = report.hyperbolic;
  write_output(report_path, eqforge::jsonout::dump(rep));

  const auto branch = eqforge::bifurcation::branch_continuation(r, r_max, steps);
  std::string csv = "r,lambda,x1,x2,x3,x4,x5,x6,x7,x8,residual\n";
  char buf[64];
  auto put = [&csv, &buf](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g%c", v, sep);
    csv += buf;
  };
  for (const auto& pt : branch) {
    put(pt.r, ',');
    put(pt.lambda, ',');
    for (int i = 0; i < 8; ++i) put(pt.x(i), ',');
    put(pt.residual, '\n');
  }
  write_output(csv_path, csv);
  return kExitOk;
}

int cmd_verify(bool quick, bool inject_fault, const std::string& out_path) {
  eqforge::verify::Options opts;
  opts.quick = quick;
  opts.inject_fault = inject_fault;
  const auto results = eqforge::verify::run_suite(opts);

  bool all_pass = true;
  json checks = json::array();
  for (const auto& res : results) {
    all_pass = all_pass && res.pass;
    std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << " — " << res.detail
              << "\n";
    checks.push_back({{"name", res.name}, {"pass", res.pass}, {"detail", res.detail}});
  }
  std::cout << (all_pass ? "verify: all checks passed" : "verify: FAILURES present")
            << "\n";
  if (!out_path.empty()) {
    json report;
    report["specversion"] = "1";
    report["checks"] = checks;
    report["all_pass"] = all_pass;
    write_output(out_path, eqforge::jsonout::dump(report));
  }
  return all_pass ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"eqforge: finite symmetry families on R^4/R^8, their invariant "
               "theory and symmetry-breaking bifurcation analysis"};
  app.require_subcommand(1);

  std::string family = "g";
  std::int64_t a = 5, b = 3;
  int degree = 3;
  double r_max = 1.0;
  int steps = 100;
  std::string out_path;
  std::string report_path = "phase_report.json";
  std::string csv_path = "branch.csv";
  std::vector<double> coeffs;
  bool quick = false, inject_fault = false, no_cross_check = false;
  double tol_rank = 1e-8, tol_matrix = 1e-12;
  std::string format = "json";

  auto add_group_opts = [&](CLI::App* cmd, bool with_family) {
    if (with_family)
      cmd->add_option("--family", family, "group family: h (R^4) or g (R^8)")
          ->check(CLI::IsMember({"h", "g"}));
    cmd->add_option("--a", a, "parameter a (odd; all prime factors 1 mod 4 for g)")
        ->required();
    cmd->add_option("--b", b, "parameter b (odd, coprime to a)")->required();
  };

  CLI::App* group = app.add_subcommand("group", "construct a group and check its relations");
  add_group_opts(group, true);
  group->add_option("--out", out_path, "output file (default: stdout)");
  group->add_option("--tol-matrix", tol_matrix, "matrix identity tolerance");

  CLI::App* iso = app.add_subcommand("isotropy", "classify nontrivial isotropy subgroups");
  add_group_opts(iso, true);
  iso->add_option("--out", out_path, "output file (default: stdout)");
  iso->add_option("--tol-rank", tol_rank, "relative singular value cut for kernels");

  CLI::App* molien = app.add_subcommand("molien", "Molien coefficients R_d and r_d");
  add_group_opts(molien, false);
  molien->add_option("--degree", degree, "maximum degree (<= 3)");
  molien->add_option("--out", out_path, "output file (default: stdout)");
  molien->add_flag("--no-cross-check", no_cross_check,
                   "skip the nullspace-solver cross check");
  molien->add_option("--tol-rank", tol_rank, "relative singular value cut");
  molien->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* equiv = app.add_subcommand("equivariants",
                                       "basis of homogeneous equivariant maps");
  add_group_opts(equiv, false);
  equiv->add_option("--degree", degree, "degree (<= 3)")->required();
  equiv->add_option("--out", out_path, "output file (default: stdout)");
  equiv->add_option("--tol-rank", tol_rank, "relative singular value cut");

  CLI::App* bif = app.add_subcommand("bifurcate",
                                     "phase-field report and branch continuation");
  add_group_opts(bif, false);
  bif->add_option("--coefficients", coeffs,
                  "truncation coefficients (5 values, or 8 when a = 5)")
      ->required()
      ->delimiter(',');
  bif->add_option("--r-max", r_max, "largest radial coordinate");
  bif->add_option("--steps", steps, "number of grid points");
  bif->add_option("--out-report", report_path, "phase report path");
  bif->add_option("--out-csv", csv_path, "branch CSV path");

  CLI::App* verify = app.add_subcommand("verify", "run the library invariant suite");
  verify->add_flag("--quick", quick, "sample the H_{5,3} oracle sweep instead of 120^2");
  verify->add_flag("--inject-fault", inject_fault,
                   "test-only: flip one canonical-basis coefficient")
      ->group(""); // hidden
  verify->add_option("--out", out_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidParams;
  }

  try {
    if (group->parsed()) return cmd_group(family, a, b, out_path, tol_matrix);
    if (iso->parsed()) return cmd_isotropy(family, a, b, out_path, tol_rank);
    if (molien->parsed())
      return cmd_molien(a, b, degree, out_path, !no_cross_check, tol_rank, format);
    if (equiv->parsed()) return cmd_equivariants(a, b, degree, out_path, tol_rank);
    if (bif->parsed())
      return cmd_bifurcate(a, b, coeffs, r_max, steps, report_path, csv_path);
    if (verify->parsed()) return cmd_verify(quick, inject_fault, out_path);
  } catch (const eqforge::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const eqforge::NumericalAmbiguityError& e) {
    std::cerr << "numerical ambiguity: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const eqforge::NumericalInconsistencyError& e) {
    std::cerr << "numerical inconsistency: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const eqforge::ContinuationError& e) {
    std::cerr << "continuation failed: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalidParams;
}
