#include "eqforge/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "eqforge/equivariants.hpp"
#include "eqforge/errors.hpp"

namespace eqforge::bifurcation {

using polymap::Monomial;
using polymap::MonomialTable;
using polymap::PolyMap;

namespace {

constexpr std::array<int, 4> kFixCoords = {0, 2, 5, 7}; // zero-based 1,3,6,8
constexpr std::array<int, 4> kOffCoords = {1, 3, 4, 6}; // zero-based 2,4,5,7

std::array<std::complex<double>, 4> eigenvalues_of(const Eigen::Matrix4d& m) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m);
  std::array<std::complex<double>, 4> ev;
  for (int i = 0; i < 4; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  // Deterministic order: by real part, then imaginary part.
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return ev;
}

bool all_hyperbolic(const std::array<std::complex<double>, 4>& ev) {
  return std::all_of(ev.begin(), ev.end(),
                     [](const auto& v) { return std::abs(v.real()) > 1e-8; });
}

} // namespace

CubicTruncation::CubicTruncation(std::vector<double> c) : coefficients(std::move(c)) {
  if (coefficients.size() != 5 && coefficients.size() != 8)
    throw DomainError("CubicTruncation: need 5 or 8 coefficients");
}

PolyMap CubicTruncation::to_polymap() const {
  PolyMap sum = PolyMap::zero(8, 3);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    sum += coefficients[i] * equivariants::canonical_E(static_cast<int>(i) + 1);
  return sum;
}

PolyMap CubicTruncation::restricted() const { return restrict_to_fix(to_polymap()); }

Eigen::Matrix<double, 8, 4> fix_K_embedding() {
  Eigen::Matrix<double, 8, 4> e = Eigen::Matrix<double, 8, 4>::Zero();
  for (int i = 0; i < 4; ++i) e(kFixCoords[static_cast<std::size_t>(i)], i) = 1.0;
  return e;
}

Eigen::VectorXd embed_fix_K(const Eigen::Vector4d& y) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(8);
  for (int i = 0; i < 4; ++i) x(kFixCoords[static_cast<std::size_t>(i)]) = y(i);
  return x;
}

Eigen::Vector4d extract_fix_K(const Eigen::VectorXd& x) {
  if (x.size() != 8) throw DomainError("extract_fix_K: need an 8-vector");
  Eigen::Vector4d y;
  for (int i = 0; i < 4; ++i) y(i) = x(kFixCoords[static_cast<std::size_t>(i)]);
  return y;
}

PolyMap restrict_to_fix(const PolyMap& r8) {
  if (r8.n != 8) throw DomainError("restrict_to_fix: need n = 8");
  const MonomialTable table8(8, r8.d);
  const MonomialTable table4(4, r8.d);
  PolyMap out = PolyMap::zero(4, r8.d);

  for (int j = 0; j < table8.size(); ++j) {
    const Monomial& mono = table8.at(j);
    const bool pure_fix = std::all_of(kOffCoords.begin(), kOffCoords.end(),
                                      [&](int c) { return mono[static_cast<std::size_t>(c)] == 0; });
    if (!pure_fix) continue;
    Monomial reduced(4, 0);
    for (int i = 0; i < 4; ++i)
      reduced[static_cast<std::size_t>(i)] = mono[static_cast<std::size_t>(kFixCoords[static_cast<std::size_t>(i)])];
    const int target = table4.index_of(reduced);

    for (int row = 0; row < 4; ++row)
      out.coeffs(row, target) += r8.coeffs(kFixCoords[static_cast<std::size_t>(row)], j);
    // A complementary output coordinate with weight on a Fix(K)-pure
    // monomial would push Fix(K) points off the subspace.
    for (int off : kOffCoords)
      if (std::abs(r8.coeffs(off, j)) > 1e-12)
        throw InternalError("restrict_to_fix: map does not preserve Fix(K)");
  }
  return out;
}

Eigen::Vector4d phase_field_unchecked(const PolyMap& r4, const Eigen::Vector4d& y) {
  const Eigen::VectorXd val = r4.evaluate(y);
  return val - val.dot(y) * y;
}

Eigen::Vector4d phase_field(const PolyMap& r4, const Eigen::Vector4d& y) {
  if (std::abs(y.norm() - 1.0) > 1e-9)
    throw DomainError("phase_field: y must lie on the unit sphere");
  return phase_field_unchecked(r4, y);
}

Eigen::Matrix4d phase_jacobian(const PolyMap& r4, const Eigen::Vector4d& y) {
  // P(y) = R(y) - sigma(y) y with sigma = <R(y), y>; hence
  // DP = DR - y (DR^T y + R)^T - sigma I.
  const Eigen::VectorXd val = r4.evaluate(y);
  const Eigen::MatrixXd jr = r4.jacobian(y);
  const double sigma = val.dot(y);
  const Eigen::VectorXd grad_sigma = jr.transpose() * y + val;
  return jr - y * grad_sigma.transpose() -
         sigma * Eigen::Matrix4d::Identity();
}

Eigen::Matrix4d phase_jacobian_fd(const PolyMap& r4, const Eigen::Vector4d& y,
                                  double step) {
  Eigen::Matrix4d jac;
  for (int c = 0; c < 4; ++c) {
    Eigen::Vector4d hi = y, lo = y;
    hi(c) += step;
    lo(c) -= step;
    jac.col(c) =
        (phase_field_unchecked(r4, hi) - phase_field_unchecked(r4, lo)) / (2.0 * step);
  }
  return jac;
}

std::array<std::complex<double>, 4> phase_jacobian_at_y0(const CubicTruncation& r) {
  const PolyMap r4 = r.restricted();
  const Eigen::Matrix4d analytic = phase_jacobian(r4, y0());
  const Eigen::Matrix4d fd = phase_jacobian_fd(r4, y0());
  if ((analytic - fd).cwiseAbs().maxCoeff() > 1e-6)
    throw InternalError("phase_jacobian_at_y0: analytic/finite-difference mismatch");
  return eigenvalues_of(analytic);
}

GenericityResult genericity_check(const CubicTruncation& r) {
  const auto& c = r.coefficients;
  GenericityResult res;
  if (std::abs(c[0]) <= 1e-12) res.violations.push_back("alpha = 0");
  if (std::abs(c[0] - c[1]) <= 1e-12) res.violations.push_back("alpha = beta");
  if (std::abs(c[0] - c[2]) <= 1e-12) res.violations.push_back("alpha = gamma");
  if (std::abs(c[0] - c[3]) <= 1e-12) res.violations.push_back("alpha = delta");
  res.ok = res.violations.empty();
  return res;
}

std::vector<BranchPoint> branch_continuation(const CubicTruncation& r,
                                             double r_max, int steps) {
  if (r_max <= 0.0 || steps < 1)
    throw DomainError("branch_continuation: need r_max > 0 and steps >= 1");
  const GenericityResult gen = genericity_check(r);
  if (!gen.ok)
    throw DomainError("branch_continuation: genericity violated (" +
                      gen.violations.front() + ")");

  const PolyMap r8 = r.to_polymap();
  const double alpha = r.alpha();
  std::vector<BranchPoint> branch;
  branch.reserve(static_cast<std::size_t>(steps));

  for (int i = 1; i <= steps; ++i) {
    const double radius = r_max * static_cast<double>(i) / static_cast<double>(steps);
    Eigen::VectorXd x = radius * embed_fix_K(y0());
    double lambda = -alpha * radius * radius;

    // Newton on F(x, lambda) = (lambda x + R(x), (||x||^2 - r^2)/2).
    bool converged = false;
    double fnorm = 0.0;
    for (int it = 0; it < 50; ++it) {
      Eigen::VectorXd f(9);
      f.head(8) = lambda * x + r8.evaluate(x);
      f(8) = 0.5 * (x.squaredNorm() - radius * radius);
      fnorm = f.norm();
      if (fnorm < 1e-13 * std::max(1.0, radius)) {
        converged = true;
        break;
      }
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(9, 9);
      jac.block<8, 8>(0, 0) =
          lambda * Eigen::MatrixXd::Identity(8, 8) + r8.jacobian(x);
      jac.block<8, 1>(0, 8) = x;
      jac.block<1, 8>(8, 0) = x.transpose();
      const Eigen::VectorXd delta = jac.partialPivLu().solve(-f);
      x += delta.head(8);
      lambda += delta(8);
    }
    if (!converged)
      throw ContinuationError("branch_continuation: Newton stalled at r = " +
                              std::to_string(radius) +
                              ", residual = " + std::to_string(fnorm));

    BranchPoint pt;
    pt.r = radius;
    pt.lambda = lambda;
    pt.x = x;
    pt.residual = (lambda * x + r8.evaluate(x)).norm();
    branch.push_back(std::move(pt));
  }
  return branch;
}

std::vector<SphereZero> sphere_zero_search(const CubicTruncation& r,
                                           int seed_count) {
  const PolyMap r4 = r.restricted();

  std::vector<Eigen::Vector4d> seeds;
  for (int i = 0; i < 4; ++i) {
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e(i) = 1.0;
    seeds.push_back(e);
    seeds.push_back(-e);
  }
  std::mt19937 rng(0x5ee3du);
  auto uniform = [&rng]() {
    return (static_cast<double>(rng()) + 0.5) / 4294967296.0;
  };
  auto gauss = [&]() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  for (int k = 0; k < seed_count; ++k) {
    Eigen::Vector4d y{gauss(), gauss(), gauss(), gauss()};
    seeds.push_back(y.normalized());
  }

  std::vector<SphereZero> zeros;
  for (const Eigen::Vector4d& seed : seeds) {
    Eigen::Vector4d y = seed;
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
      Eigen::Matrix<double, 5, 1> g;
      g.head<4>() = phase_field_unchecked(r4, y);
      g(4) = 0.5 * (y.squaredNorm() - 1.0);
      if (g.norm() < 1e-12) {
        converged = true;
        break;
      }
      // Gauss-Newton step on the sphere-augmented system; the 5x4 Jacobian
      // has full column rank near hyperbolic zeros.
      Eigen::Matrix<double, 5, 4> jac;
      jac.topRows<4>() = phase_jacobian(r4, y);
      jac.bottomRows<1>() = y.transpose();
      const Eigen::Vector4d delta = jac.colPivHouseholderQr().solve(-g);
      y += delta;
      if (!y.allFinite() || y.norm() > 4.0) break;
    }
    if (!converged) continue;
    y.normalize();
    bool duplicate = false;
    for (const SphereZero& z : zeros)
      if ((z.y - y).norm() < 1e-6) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    SphereZero z;
    z.y = y;
    z.eigenvalues = eigenvalues_of(phase_jacobian(r4, y));
    z.hyperbolic = all_hyperbolic(z.eigenvalues);
    zeros.push_back(std::move(z));
  }

  // The phase field is odd, so the antipode of every zero is a zero with the
  // same spectrum; add the ones the seeds missed.
  const std::size_t found = zeros.size();
  for (std::size_t i = 0; i < found; ++i) {
    const Eigen::Vector4d anti = -zeros[i].y;
    bool present = false;
    for (const SphereZero& z : zeros)
      if ((z.y - anti).norm() < 1e-6) {
        present = true;
        break;
      }
    if (present) continue;
    SphereZero z;
    z.y = anti;
    z.eigenvalues = eigenvalues_of(phase_jacobian(r4, anti));
    z.hyperbolic = all_hyperbolic(z.eigenvalues);
    zeros.push_back(std::move(z));
  }

  std::sort(zeros.begin(), zeros.end(), [](const SphereZero& a, const SphereZero& b) {
    for (int i = 0; i < 4; ++i)
      if (std::abs(a.y(i) - b.y(i)) > 1e-9) return a.y(i) < b.y(i);
    return false;
  });
  return zeros;
}

PhaseFieldReport phase_report_y0(const CubicTruncation& r) {
  const PolyMap r4 = r.restricted();
  PhaseFieldReport rep;
  rep.zero = y0();
  rep.jacobian = phase_jacobian(r4, rep.zero);
  rep.eigenvalues = eigenvalues_of(rep.jacobian);
  rep.hyperbolic = all_hyperbolic(rep.eigenvalues);
  return rep;
}

} // namespace eqforge::bifurcation
