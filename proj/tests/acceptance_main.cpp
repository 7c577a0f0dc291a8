// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqforge/bifurcation.hpp"
#include "eqforge/characters.hpp"
#include "eqforge/equivariants.hpp"
#include "eqforge/grouprep.hpp"
#include "eqforge/isotropy.hpp"
#include "eqforge/linalg.hpp"
#include "eqforge/modular.hpp"
#include "eqforge/parallel.hpp"

using namespace eqforge;
using namespace eqforge::grouprep;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds,
            const std::string& detail) {
  std::printf("%s criterion %d: %s (%.2fs%s%s)\n", pass ? "PASS" : "FAIL",
              criterion, what.c_str(), seconds, detail.empty() ? "" : "; ",
              detail.c_str());
  if (!pass) ++g_failures;
}

void run(int criterion, const std::string& what,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(criterion, what, pass, seconds, detail);
}

double uniform(std::mt19937& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng()) + 0.5) / 4294967296.0;
}

// 1. Group orders (exact, < 5 s total).
bool criterion_orders(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<GroupParams, std::size_t>> table = {
      {GroupParams::h4(5, 3), 120},  {GroupParams::h4(5, 7), 280},
      {GroupParams::h4(13, 3), 312}, {GroupParams::h4(5, 9), 360},
      {GroupParams::h4(17, 3), 408}, {GroupParams::h4(5, 11), 440},
      {GroupParams::h4(5, 13), 520}, {GroupParams::h4(13, 5), 520},
      {GroupParams::g8(5, 3), 240},  {GroupParams::g8(13, 3), 624},
      {GroupParams::g8(13, 5), 1040}};
  for (const auto& [p, expect] : table) {
    if (grouprep::enumerate_closure(p).size() != expect ||
        grouprep::enumerate_group(p).size() != expect) {
      detail = "wrong order for (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
      return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = "11 groups via generator closure";
  if (secs >= 5.0) {
    detail += "; over the 5 s budget";
    return false;
  }
  return true;
}

// 2. Normal-form oracle (1e-9, < 30 s).
bool criterion_oracle(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const GroupParams h = GroupParams::h4(5, 3);
  const auto all_h = enumerate_group(h);
  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(all_h.size());
  for (const auto& e : all_h) mats.push_back(element_matrix(e, h));

  std::atomic<bool> ok{true};
  parallel_for_chunks(all_h.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && ok; ++i)
      for (std::size_t j = 0; j < all_h.size(); ++j) {
        const GroupElement prod = nf_multiply(all_h[i], all_h[j], h);
        if (linalg::max_abs_diff(element_matrix(prod, h), mats[i] * mats[j]) >= 1e-9)
          ok = false;
      }
  });
  if (!ok) {
    detail = "H_{5,3} product mismatch";
    return false;
  }

  const GroupParams g = GroupParams::g8(13, 3);
  const auto all_g = enumerate_group(g);
  std::mt19937 rng(424242u);
  for (int t = 0; t < 10000; ++t) {
    const GroupElement& e1 = all_g[rng() % all_g.size()];
    const GroupElement& e2 = all_g[rng() % all_g.size()];
    const GroupElement prod = nf_multiply(e1, e2, g);
    if (linalg::max_abs_diff(element_matrix(prod, g),
                             element_matrix(e1, g) * element_matrix(e2, g)) >= 1e-9) {
      detail = "G_{13,3} product mismatch";
      return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = "14400 H products + 10000 G products";
  if (secs >= 30.0) {
    detail += "; over the 30 s budget";
    return false;
  }
  return true;
}

// 3. Absolute irreducibility via commutant dimensions (exact).
bool criterion_commutant(std::string& detail) {
  const auto dim_of = [](const GroupParams& p) {
    return commutant_dimension(generator_matrix_list(p), p.dim());
  };
  if (dim_of(GroupParams::h4(5, 3)) != 1) return false;
  if (dim_of(GroupParams::h4(13, 3)) != 1) return false;
  if (dim_of(GroupParams::g8(5, 3)) != 1) return false;
  if (dim_of(GroupParams::g8(13, 3)) != 1) return false;
  auto no_v = generator_matrix_list(GroupParams::g8(5, 3));
  no_v.pop_back();
  if (commutant_dimension(no_v, 8) != 2) return false;
  detail = "dimensions 1,1,1,1; {C,D,Q,S} gives 2";
  return true;
}

// 4. Isotropy structure (exact).
bool criterion_isotropy(std::string& detail) {
  const GroupParams h = GroupParams::h4(5, 3);
  const auto h_classes = isotropy::classify_isotropy(h);
  if (h_classes.size() != 2) {
    detail = "H_{5,3} class count";
    return false;
  }
  for (const auto& cls : h_classes) {
    if (cls.fixed_dim != 2) return false;
    for (const auto& member : cls.members)
      if (element_order(member, h) != 2 || isotropy::fixed_space(member, h).dim != 2)
        return false;
  }

  const GroupElement qs{0, 0, 1, 1, 0}, q3s{0, 0, 3, 1, 0};
  for (const GroupParams& g : {GroupParams::g8(5, 3), GroupParams::g8(13, 3)}) {
    const auto classes = isotropy::classify_isotropy(g);
    if (classes.size() != 1 || classes[0].fixed_dim != 4 ||
        classes[0].representative != qs) {
      detail = "G class structure";
      return false;
    }
    const auto w = isotropy::conjugacy_witness(qs, q3s, g);
    if (!w || *w != gen_v() || nf_conjugate(*w, qs, g) != q3s) {
      detail = "witness V for Q^3 S";
      return false;
    }
  }
  detail = "H: 2 classes dim 2 order 2; G: one class <QS> dim 4, witness V";
  return true;
}

// 5. Molien coefficients, residues and solver cross-check (< 2 min).
bool criterion_molien(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<GroupParams, int>> expect_r3 = {
      {GroupParams::g8(5, 3), 8},
      {GroupParams::g8(5, 7), 8},
      {GroupParams::g8(13, 3), 5},
      {GroupParams::g8(17, 3), 5}};
  for (const auto& [p, r3] : expect_r3) {
    const int r[3] = {characters::molien_equivariant(p, 1),
                      characters::molien_equivariant(p, 2),
                      characters::molien_equivariant(p, 3)};
    if (r[0] != 1 || r[1] != 0 || r[2] != r3) {
      detail = "wrong Molien values for a=" + std::to_string(p.a);
      return false;
    }
    for (int d = 1; d <= 3; ++d) {
      const double raw = characters::molien_equivariant_raw(p, d);
      if (std::abs(raw - std::round(raw)) >= 1e-6) {
        detail = "rounding residue too large";
        return false;
      }
    }
    const auto gens = generator_matrix_list(p);
    for (int d = 1; d <= 3; ++d)
      if (static_cast<int>(equivariants::equivariant_basis(gens, 8, d).size()) != r[d - 1]) {
        detail = "solver dimension disagrees at a=" + std::to_string(p.a) +
                 " d=" + std::to_string(d);
        return false;
      }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "(1,0,8)/(1,0,5) incl. nullspace dims, " << static_cast<int>(secs) << "s";
  detail = os.str();
  if (secs >= 120.0) {
    detail += "; over the 2 min budget";
    return false;
  }
  return true;
}

// 6. Canonical basis spans and equivariance residuals.
bool criterion_basis(std::string& detail) {
  std::vector<polymap::PolyMap> e18, e15;
  for (int i = 1; i <= 8; ++i) e18.push_back(equivariants::canonical_E(i));
  e15.assign(e18.begin(), e18.begin() + 5);

  const auto gens53 = generator_matrix_list(GroupParams::g8(5, 3));
  if (!equivariants::span_match(equivariants::equivariant_basis(gens53, 8, 3), e18)) {
    detail = "span mismatch for G_{5,3}";
    return false;
  }
  const auto gens133 = generator_matrix_list(GroupParams::g8(13, 3));
  if (!equivariants::span_match(equivariants::equivariant_basis(gens133, 8, 3), e15)) {
    detail = "span mismatch for G_{13,3}";
    return false;
  }

  for (int i = 1; i <= 8; ++i)
    for (const auto& g : gens53)
      if (equivariants::equivariance_residual(e18[static_cast<std::size_t>(i - 1)], g) >= 1e-9) {
        detail = "residual of E_" + std::to_string(i) + " vs G_{5,3}";
        return false;
      }
  for (int i = 1; i <= 5; ++i)
    for (const auto& g : gens133)
      if (equivariants::equivariance_residual(e15[static_cast<std::size_t>(i - 1)], g) >= 1e-9) {
        detail = "residual of E_" + std::to_string(i) + " vs G_{13,3}";
        return false;
      }

  std::mt19937 rng(606u);
  for (int t = 0; t < 100; ++t) {
    const Eigen::MatrixXd d_psi = lie_generator_D(uniform(rng, -3.2, 3.2));
    for (int i = 1; i <= 8; ++i)
      if (equivariants::equivariance_residual(e18[static_cast<std::size_t>(i - 1)], d_psi) >= 1e-9) {
        detail = "residual of E_" + std::to_string(i) + " vs D(psi)";
        return false;
      }
  }
  for (int t = 0; t < 50; ++t) {
    const Eigen::MatrixXd ct =
        lie_generator_C_tilde(uniform(rng, -3.2, 3.2), uniform(rng, -3.2, 3.2));
    for (int i = 1; i <= 5; ++i)
      if (equivariants::equivariance_residual(e15[static_cast<std::size_t>(i - 1)], ct) >= 1e-9) {
        detail = "residual of E_" + std::to_string(i) + " vs C~(phi, phi')";
        return false;
      }
  }
  detail = "spans match; residuals < 1e-9 vs generators, D(psi), C~";
  return true;
}

// 7. Character identity and d = 2 cancellation.
bool criterion_characters(std::string& detail) {
  for (const GroupParams& p : {GroupParams::g8(5, 3), GroupParams::g8(13, 3)}) {
    for (const GroupElement& e : enumerate_group(p))
      if (std::abs(characters::character_closed_form(e, p) -
                   characters::character_trace(e, p)) >= 1e-9) {
        detail = "closed form != trace";
        return false;
      }
    const auto sums = characters::d2_sector_sums(p);
    if (std::abs(sums.l1_zero + sums.l1_two) >= 1e-9) {
      detail = "sector sums do not cancel";
      return false;
    }
  }
  detail = "all 240 + 624 elements; sector sums cancel";
  return true;
}

// 8. Bifurcation spectrum and genericity flags.
bool criterion_spectrum(std::string& detail) {
  std::mt19937 rng(808u);
  int tested = 0;
  while (tested < 100) {
    std::vector<double> c(5);
    for (double& v : c) v = uniform(rng, -2.0, 2.0);
    const bifurcation::CubicTruncation r(c);
    if (!bifurcation::genericity_check(r).ok) continue;
    ++tested;
    const auto ev = bifurcation::phase_jacobian_at_y0(r);
    std::array<double, 4> expect = {-c[0] + c[1], -c[0] + c[2], -c[0] + c[3],
                                    -2.0 * c[0]};
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 4; ++i)
      if (std::abs(ev[static_cast<std::size_t>(i)].imag()) > 1e-10 ||
          std::abs(ev[static_cast<std::size_t>(i)].real() -
                   expect[static_cast<std::size_t>(i)]) > 1e-8) {
        detail = "eigenvalue mismatch";
        return false;
      }
  }

  using bifurcation::CubicTruncation;
  using bifurcation::genericity_check;
  const auto flags = [](const CubicTruncation& r) {
    return genericity_check(r).violations;
  };
  if (flags(CubicTruncation({0, 1, 2, 3, 4})) != std::vector<std::string>{"alpha = 0"})
    return false;
  if (flags(CubicTruncation({1, 1, 2, 3, 4})) != std::vector<std::string>{"alpha = beta"})
    return false;
  if (flags(CubicTruncation({1, 2, 1, 3, 4})) != std::vector<std::string>{"alpha = gamma"})
    return false;
  if (flags(CubicTruncation({1, 2, 3, 1, 4})) != std::vector<std::string>{"alpha = delta"})
    return false;
  if (!genericity_check(CubicTruncation({1, 2, 3, 4, 5})).ok) return false;
  detail = "100 random draws match {-a+b, -a+g, -a+d, -2a}; degenerate cases flagged";
  return true;
}

// 9. Branch law on both coefficient paths.
bool criterion_branch(std::string& detail) {
  std::mt19937 rng(909u);
  for (int variant = 0; variant < 2; ++variant) {
    std::vector<double> c(variant == 0 ? 5 : 8);
    do {
      for (double& v : c) v = uniform(rng, -2.0, 2.0);
    } while (!bifurcation::genericity_check(bifurcation::CubicTruncation(c)).ok);
    const bifurcation::CubicTruncation r(c);
    const auto branch = bifurcation::branch_continuation(r, 1.0, 100);
    if (branch.size() != 100) return false;
    for (const auto& pt : branch) {
      if (std::abs(pt.lambda + c[0] * pt.r * pt.r) >= 1e-9) {
        detail = "lambda(r) law violated";
        return false;
      }
      if (pt.residual >= 1e-10) {
        detail = "residual above 1e-10";
        return false;
      }
      for (int off : {1, 3, 4, 6})
        if (std::abs(pt.x(off)) >= 1e-12) {
          detail = "branch left Fix(K)";
          return false;
        }
    }
  }
  detail = "r_max = 1, 100 steps, five- and eight-coefficient paths";
  return true;
}

// 10. Number-theoretic sweeps.
bool criterion_modular(std::string& detail) {
  for (std::int64_t a = 2; a <= 1000; ++a) {
    if (!modular::is_in_A(a)) continue;
    const auto w = modular::rho_for(a);
    if (w.rho % 2 != 1 || modular::mul_mod(w.rho, w.rho, a) != a - 1) {
      detail = "bad witness at a = " + std::to_string(a);
      return false;
    }
  }
  for (std::int64_t a = 2; a <= 200; ++a) {
    if (!modular::is_in_A(a)) continue;
    const std::int64_t rho = modular::rho_for(a).rho;
    const auto rep = modular::congruence_suite(a, rho);
    const std::int64_t lhs[] = {rho - 1, 2 * (rho - 1), rho + 1, 2 * (rho + 1),
                                2 * rho, 4 * rho,       rho - 3, 3 * rho - 1,
                                rho + 3, 3 * rho + 1};
    for (int i = 0; i < 10; ++i)
      if (rep.items[static_cast<std::size_t>(i)].equals_zero !=
              (modular::mod_pos(lhs[i], 2 * a) == 0) ||
          !rep.items[static_cast<std::size_t>(i)].pass) {
        detail = "congruence mismatch at a = " + std::to_string(a);
        return false;
      }
  }
  const auto special = modular::congruence_suite(5, 3);
  if (!special.items[6].equals_zero || !special.items[9].equals_zero) {
    detail = "items 7/10 must be equalities at (5,3)";
    return false;
  }
  detail = "witnesses to 1000; congruences to 200; (5,3) equalities";
  return true;
}

} // namespace

int main() {
  run(1, "group orders", criterion_orders);
  run(2, "normal-form oracle", criterion_oracle);
  run(3, "absolute irreducibility", criterion_commutant);
  run(4, "isotropy structure", criterion_isotropy);
  run(5, "Molien coefficients", criterion_molien);
  run(6, "canonical cubic basis", criterion_basis);
  run(7, "character identity", criterion_characters);
  run(8, "bifurcation spectrum", criterion_spectrum);
  run(9, "branch law", criterion_branch);
  run(10, "number theory", criterion_modular);

  if (g_failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
