#include "eqforge/verify.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <sstream>

#include "eqforge/bifurcation.hpp"
#include "eqforge/characters.hpp"
#include "eqforge/equivariants.hpp"
#include "eqforge/errors.hpp"
#include "eqforge/grouprep.hpp"
#include "eqforge/isotropy.hpp"
#include "eqforge/linalg.hpp"
#include "eqforge/modular.hpp"
#include "eqforge/parallel.hpp"

namespace eqforge::verify {

using grouprep::GroupElement;
using grouprep::GroupParams;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CheckResult check_rho_sweep() {
  for (std::int64_t a = 2; a <= 1000; ++a) {
    if (!modular::is_in_A(a)) continue;
    const auto w = modular::rho_for(a);
    if (w.rho % 2 != 1 || modular::mul_mod(w.rho, w.rho, a) != a - 1)
      return {"modular.rho_sweep", false, "invalid witness at a = " + std::to_string(a)};
    // brute-force smallest odd rho in (0, 2a)
    std::int64_t expect = -1;
    for (std::int64_t r = 1; r < 2 * a; r += 2)
      if (modular::mul_mod(r, r, a) == a - 1) {
        expect = r;
        break;
      }
    if (w.rho != expect)
      return {"modular.rho_sweep", false,
              "not minimal at a = " + std::to_string(a) + ": got " +
                  std::to_string(w.rho) + ", expected " + std::to_string(expect)};
  }
  return {"modular.rho_sweep", true, "all a in A up to 1000"};
}

CheckResult check_congruences() {
  int tested = 0;
  for (std::int64_t a = 2; a <= 200; ++a) {
    if (!modular::is_in_A(a)) continue;
    const auto w = modular::rho_for(a);
    const auto rep = modular::congruence_suite(a, w.rho);
    ++tested;
    for (const auto& item : rep.items) {
      const bool zero_direct = (item.lhs % (2 * a) + 2 * a) % (2 * a) == 0;
      if (zero_direct != item.equals_zero || !item.pass)
        return {"modular.congruence_exhaustive", false,
                "mismatch at a = " + std::to_string(a) + " item " +
                    std::to_string(item.index)};
      const bool special = (a == 5 && w.rho == 3);
      if ((item.index == 7 || item.index == 10) && special && !item.equals_zero)
        return {"modular.congruence_exhaustive", false,
                "items 7/10 must be equalities at (5,3)"};
    }
  }
  return {"modular.congruence_exhaustive", true,
          std::to_string(tested) + " witnesses up to 200"};
}

CheckResult check_relations() {
  double worst = 0.0;
  std::string worst_name;
  for (const GroupParams& p :
       {GroupParams::h4(5, 3), GroupParams::g8(5, 3), GroupParams::g8(13, 3)}) {
    for (const auto& rel : grouprep::relation_checks(p))
      if (rel.deviation > worst) {
        worst = rel.deviation;
        worst_name = rel.name;
      }
  }
  return {"grouprep.relations", worst < 1e-12,
          "worst deviation " + fmt(worst) + " (" + worst_name + ")"};
}

CheckResult check_orders() {
  const std::vector<std::pair<GroupParams, std::size_t>> table = {
      {GroupParams::h4(5, 3), 120},  {GroupParams::h4(5, 7), 280},
      {GroupParams::h4(13, 3), 312}, {GroupParams::h4(5, 9), 360},
      {GroupParams::h4(17, 3), 408}, {GroupParams::h4(5, 11), 440},
      {GroupParams::h4(5, 13), 520}, {GroupParams::h4(13, 5), 520},
      {GroupParams::g8(5, 3), 240},  {GroupParams::g8(13, 3), 624},
      {GroupParams::g8(13, 5), 1040}};
  for (const auto& [p, expect] : table) {
    if (grouprep::enumerate_closure(p).size() != expect ||
        grouprep::enumerate_group(p).size() != expect)
      return {"grouprep.orders", false,
              "wrong order for (a,b) = (" + std::to_string(p.a) + "," +
                  std::to_string(p.b) + ")"};
  }
  return {"grouprep.orders", true, std::to_string(table.size()) + " groups"};
}

CheckResult oracle_sweep_h53(bool quick) {
  const GroupParams p = GroupParams::h4(5, 3);
  const std::vector<GroupElement> all = grouprep::enumerate_group(p);
  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(all.size());
  for (const auto& e : all) mats.push_back(grouprep::element_matrix(e, p));

  std::atomic<bool> ok{true};
  std::atomic<double> worst{0.0};
  const std::size_t n = all.size();

  if (quick) {
    std::mt19937 rng(7u);
    double w = 0.0;
    for (int t = 0; t < 2000 && ok; ++t) {
      const std::size_t i = rng() % n, j = rng() % n;
      const GroupElement prod = grouprep::nf_multiply(all[i], all[j], p);
      const double dev =
          linalg::max_abs_diff(grouprep::element_matrix(prod, p), mats[i] * mats[j]);
      w = std::max(w, dev);
      if (dev >= 1e-9) ok = false;
    }
    return {"grouprep.nf_oracle_h53", ok.load(),
            "2000 sampled products, worst " + fmt(w)};
  }

  parallel_for_chunks(n, [&](std::size_t begin, std::size_t end) {
    double local_worst = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const GroupElement prod = grouprep::nf_multiply(all[i], all[j], p);
        const double dev =
            linalg::max_abs_diff(grouprep::element_matrix(prod, p), mats[i] * mats[j]);
        local_worst = std::max(local_worst, dev);
        if (dev >= 1e-9) ok = false;
      }
    }
    double expected = worst.load();
    while (local_worst > expected &&
           !worst.compare_exchange_weak(expected, local_worst)) {
    }
  });
  return {"grouprep.nf_oracle_h53", ok.load(),
          "all 14400 products, worst " + fmt(worst.load())};
}

CheckResult oracle_sweep_g133() {
  const GroupParams p = GroupParams::g8(13, 3);
  const std::vector<GroupElement> all = grouprep::enumerate_group(p);
  std::mt19937 rng(20240811u);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const GroupElement& e1 = all[rng() % all.size()];
    const GroupElement& e2 = all[rng() % all.size()];
    const GroupElement prod = grouprep::nf_multiply(e1, e2, p);
    const double dev = linalg::max_abs_diff(
        grouprep::element_matrix(prod, p),
        grouprep::element_matrix(e1, p) * grouprep::element_matrix(e2, p));
    worst = std::max(worst, dev);
    if (dev >= 1e-9)
      return {"grouprep.nf_oracle_g133", false, "deviation " + fmt(dev)};
  }
  return {"grouprep.nf_oracle_g133", true, "10000 products, worst " + fmt(worst)};
}

CheckResult check_commutant() {
  const auto dim_of = [](const GroupParams& p) {
    return grouprep::commutant_dimension(grouprep::generator_matrix_list(p), p.dim());
  };
  if (dim_of(GroupParams::h4(5, 3)) != 1) return {"grouprep.commutant", false, "H_{5,3}"};
  if (dim_of(GroupParams::h4(13, 3)) != 1) return {"grouprep.commutant", false, "H_{13,3}"};
  if (dim_of(GroupParams::g8(5, 3)) != 1) return {"grouprep.commutant", false, "G_{5,3}"};
  if (dim_of(GroupParams::g8(13, 3)) != 1) return {"grouprep.commutant", false, "G_{13,3}"};
  auto gens = grouprep::generator_matrix_list(GroupParams::g8(5, 3));
  gens.pop_back(); // drop V: the commutant gains the second block scale
  if (grouprep::commutant_dimension(gens, 8) != 2)
    return {"grouprep.commutant", false, "{C,D,Q,S} without V"};
  return {"grouprep.commutant", true, "dimensions 1,1,1,1 and 2"};
}

CheckResult check_isotropy_h() {
  const GroupParams p = GroupParams::h4(5, 3);
  const auto fixers = isotropy::nontrivial_fixers(p);
  if (fixers.size() != 30)
    return {"isotropy.h53", false, "expected 30 fixers"};
  for (const auto& e : fixers) {
    if (grouprep::element_order(e, p) != 2)
      return {"isotropy.h53", false, "fixer not of order 2"};
    if (isotropy::fixed_space(e, p).dim != 2)
      return {"isotropy.h53", false, "fixed space not 2-dimensional"};
  }
  const auto classes = isotropy::classify_isotropy(p);
  if (classes.size() != 2) return {"isotropy.h53", false, "expected 2 classes"};
  const GroupElement qs{0, 0, 1, 1, 0}, q3s{0, 0, 3, 1, 0};
  if (classes[0].representative != qs || classes[1].representative != q3s)
    return {"isotropy.h53", false, "unexpected representatives"};
  if (isotropy::conjugacy_witness(qs, q3s, p).has_value())
    return {"isotropy.h53", false, "<qs> and <q^3 s> must not be conjugate"};
  return {"isotropy.h53", true, "2 classes, fixed dim 2, fixers of order 2"};
}

CheckResult check_isotropy_g() {
  for (const GroupParams& p : {GroupParams::g8(5, 3), GroupParams::g8(13, 3)}) {
    const auto classes = isotropy::classify_isotropy(p);
    if (classes.size() != 1 || classes[0].fixed_dim != 4)
      return {"isotropy.g", false, "expected one class with 4-dim fixed space"};
    const GroupElement qs{0, 0, 1, 1, 0}, q3s{0, 0, 3, 1, 0};
    if (classes[0].representative != qs)
      return {"isotropy.g", false, "representative is not QS"};
    const auto w = isotropy::conjugacy_witness(qs, q3s, p);
    if (!w || *w != grouprep::gen_v())
      return {"isotropy.g", false, "witness QS -> Q^3 S is not V"};
  }
  return {"isotropy.g", true, "one class <QS>, fixed dim 4, witness V"};
}

CheckResult check_characters() {
  for (const GroupParams& p : {GroupParams::g8(5, 3), GroupParams::g8(13, 3)}) {
    for (const GroupElement& e : grouprep::enumerate_group(p)) {
      const double closed = characters::character_closed_form(e, p);
      const double trace = characters::character_trace(e, p);
      if (std::abs(closed - trace) >= 1e-9)
        return {"characters.closed_form", false,
                "mismatch " + fmt(std::abs(closed - trace))};
    }
    const auto sums = characters::d2_sector_sums(p);
    if (std::abs(sums.l1_zero + sums.l1_two) >= 1e-9)
      return {"characters.closed_form", false, "d=2 sectors do not cancel"};
  }
  return {"characters.closed_form", true,
          "closed form = trace on G_{5,3} and G_{13,3}; d=2 sectors cancel"};
}

CheckResult check_molien() {
  const GroupParams g53 = GroupParams::g8(5, 3);
  const GroupParams g133 = GroupParams::g8(13, 3);
  const bool ok = characters::molien_equivariant(g53, 1) == 1 &&
                  characters::molien_equivariant(g53, 2) == 0 &&
                  characters::molien_equivariant(g53, 3) == 8 &&
                  characters::molien_equivariant(g133, 1) == 1 &&
                  characters::molien_equivariant(g133, 2) == 0 &&
                  characters::molien_equivariant(g133, 3) == 5 &&
                  characters::molien_invariant(g53, 0) == 1 &&
                  characters::molien_invariant(g53, 1) == 0 &&
                  characters::molien_invariant(g53, 2) == 1;
  return {"characters.molien", ok, "R = (1,0,8) / (1,0,5); r_0..r_2 = (1,0,1)"};
}

std::vector<polymap::PolyMap> canonical_set(int count, bool inject_fault) {
  std::vector<polymap::PolyMap> es;
  for (int i = 1; i <= count; ++i) es.push_back(equivariants::canonical_E(i));
  if (inject_fault) {
    // Flip the sign of the first nonzero coefficient of E_5.
    auto& coeffs = es[4].coeffs;
    for (int j = 0; j < coeffs.cols(); ++j)
      if (coeffs(0, j) != 0.0) {
        coeffs(0, j) = -coeffs(0, j);
        break;
      }
  }
  return es;
}

CheckResult check_residuals(bool inject_fault) {
  const auto gens = grouprep::generator_matrix_list(GroupParams::g8(5, 3));
  const auto es = canonical_set(8, inject_fault);
  double worst = 0.0;
  for (const auto& e : es)
    for (const auto& g : gens)
      worst = std::max(worst, equivariants::equivariance_residual(e, g));
  return {"equivariants.residuals", worst < 1e-9,
          "worst residual " + fmt(worst) + " over E_1..E_8 x generators(G_{5,3})"};
}

CheckResult check_span(bool inject_fault) {
  const auto gens = grouprep::generator_matrix_list(GroupParams::g8(5, 3));
  const auto solver = equivariants::equivariant_basis(gens, 8, 3);
  const auto es = canonical_set(8, inject_fault);
  if (solver.size() != 8)
    return {"equivariants.span", false,
            "solver dimension " + std::to_string(solver.size()) + " != 8"};
  const bool match = equivariants::span_match(solver, es);
  return {"equivariants.span", match,
          match ? "solver span = span{E_1..E_8} for G_{5,3}"
                : "span mismatch against the canonical basis"};
}

CheckResult check_bif_spectrum() {
  std::mt19937 rng(99u);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng()) + 0.5) / 4294967296.0;
  };
  for (int t = 0; t < 20; ++t) {
    std::vector<double> c(5);
    for (double& v : c) v = uniform(-2.0, 2.0);
    const bifurcation::CubicTruncation r(c);
    if (!bifurcation::genericity_check(r).ok) {
      --t;
      continue;
    }
    const auto ev = bifurcation::phase_jacobian_at_y0(r);
    std::array<double, 4> expect = {-c[0] + c[1], -c[0] + c[2], -c[0] + c[3],
                                    -2.0 * c[0]};
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 4; ++i) {
      const auto& v = ev[static_cast<std::size_t>(i)];
      if (std::abs(v.imag()) > 1e-10 ||
          std::abs(v.real() - expect[static_cast<std::size_t>(i)]) > 1e-8)
        return {"bifurcation.spectrum", false, "eigenvalue formula mismatch"};
    }
  }
  const auto degenerate = bifurcation::genericity_check(
      bifurcation::CubicTruncation({1.0, 1.0, 0.0, 0.0, 0.0}));
  if (degenerate.ok || degenerate.violations != std::vector<std::string>{"alpha = beta"})
    return {"bifurcation.spectrum", false, "genericity predicate missed alpha = beta"};
  return {"bifurcation.spectrum", true,
          "20 random draws match {-a+b, -a+g, -a+d, -2a}"};
}

CheckResult check_bif_branch() {
  for (const std::vector<double>& c :
       {std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0},
        std::vector<double>{1.0, 0.25, -0.5, 2.0, 0.75, 0.3, -0.4, 0.9}}) {
    const bifurcation::CubicTruncation r(c);
    const auto branch = bifurcation::branch_continuation(r, 1.0, 50);
    for (const auto& pt : branch) {
      if (std::abs(pt.lambda + c[0] * pt.r * pt.r) >= 1e-9)
        return {"bifurcation.branch", false, "lambda(r) != -alpha r^2"};
      if (pt.residual >= 1e-10)
        return {"bifurcation.branch", false, "residual too large"};
      for (int off : {1, 3, 4, 6})
        if (std::abs(pt.x(off)) >= 1e-12)
          return {"bifurcation.branch", false, "left Fix(K)"};
    }
  }
  return {"bifurcation.branch", true,
          "lambda = -alpha r^2, residual < 1e-10, confined to Fix(K) "
          "(5- and 8-coefficient paths)"};
}

} // namespace

std::vector<CheckResult> run_suite(const Options& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_rho_sweep());
  results.push_back(check_congruences());
  results.push_back(check_relations());
  results.push_back(check_orders());
  results.push_back(oracle_sweep_h53(opts.quick));
  results.push_back(oracle_sweep_g133());
  results.push_back(check_commutant());
  results.push_back(check_isotropy_h());
  results.push_back(check_isotropy_g());
  results.push_back(check_characters());
  results.push_back(check_molien());
  results.push_back(check_residuals(opts.inject_fault));
  results.push_back(check_span(opts.inject_fault));
  results.push_back(check_bif_spectrum());
  results.push_back(check_bif_branch());
  return results;
}

} // namespace eqforge::verify
