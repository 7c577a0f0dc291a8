#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eqforge/polymap.hpp"

namespace eqforge::bifurcation {

// Coefficients of the cubic truncation R = sum_i alpha_i E_i: five entries
// for the a > 5 families, eight for the a = 5 path.
struct CubicTruncation {
  std::vector<double> coefficients;

  CubicTruncation() = default;
  explicit CubicTruncation(std::vector<double> c);

  double alpha() const { return coefficients[0]; }
  // Full map on R^8.
  polymap::PolyMap to_polymap() const;
  // Restriction to Fix(K) in the (x1, x3, x6, x8) coordinates.
  polymap::PolyMap restricted() const;
};

// Fix(K) = { x in R^8 : x2 = x4 = x5 = x7 = 0 }; the embedding places
// (y1, y2, y3, y4) at coordinates (1, 3, 6, 8).
Eigen::Matrix<double, 8, 4> fix_K_embedding();
Eigen::VectorXd embed_fix_K(const Eigen::Vector4d& y);
Eigen::Vector4d extract_fix_K(const Eigen::VectorXd& x);

// Restriction of an 8-dimensional cubic map that preserves Fix(K) to a map
// on R^4. Throws InternalError if a complementary output coordinate carries
// a monomial free of complementary variables (the map would leave Fix(K)).
polymap::PolyMap restrict_to_fix(const polymap::PolyMap& r8);

// Phase vector field P_R(y) = R(y) - <R(y), y> y for unit y (checked to
// 1e-9). `r4` is the restricted cubic map.
Eigen::Vector4d phase_field(const polymap::PolyMap& r4, const Eigen::Vector4d& y);

// Ambient formula without the unit-norm check (used by Newton iterations).
Eigen::Vector4d phase_field_unchecked(const polymap::PolyMap& r4,
                                      const Eigen::Vector4d& y);

// Jacobian of y -> P_R(y) in ambient coordinates, analytic and central
// finite-difference versions.
Eigen::Matrix4d phase_jacobian(const polymap::PolyMap& r4, const Eigen::Vector4d& y);
Eigen::Matrix4d phase_jacobian_fd(const polymap::PolyMap& r4,
                                  const Eigen::Vector4d& y, double step = 1e-5);

inline Eigen::Vector4d y0() { return Eigen::Vector4d{0.0, 0.0, 0.0, 1.0}; }

// Eigenvalues of the ambient Jacobian of the phase field at y0, analytic
// path cross-checked against finite differences. For the five-coefficient
// truncation these equal {-a+d, -a+g, -a+b, -2a}.
std::array<std::complex<double>, 4> phase_jacobian_at_y0(const CubicTruncation& r);

struct GenericityResult {
  bool ok = false;
  std::vector<std::string> violations; // e.g. "alpha = beta"
};

// The four open conditions alpha != 0, alpha != beta, alpha != gamma,
// alpha != delta, each tested with tolerance 1e-12 on the difference.
GenericityResult genericity_check(const CubicTruncation& r);

struct BranchPoint {
  double r = 0.0;
  double lambda = 0.0;
  Eigen::VectorXd x; // in R^8
  double residual = 0.0;
};

// Newton-corrected branch of solutions of lambda x + R(x) = 0 with
// ||x|| = r over the uniform grid r in (0, r_max]; the predictor is
// x = r * embed(y0), lambda = -alpha r^2 (exact for the cubic truncation).
std::vector<BranchPoint> branch_continuation(const CubicTruncation& r,
                                             double r_max, int steps);

struct SphereZero {
  Eigen::Vector4d y;
  std::array<std::complex<double>, 4> eigenvalues;
  bool hyperbolic = false;
};

// Newton-on-sphere zero search for the phase field from +-e_i and a
// deterministic 64-point seed set; returns distinct zeros (pairwise distance
// > 1e-6) sorted lexicographically. Always contains +-y0.
std::vector<SphereZero> sphere_zero_search(const CubicTruncation& r,
                                           int seed_count = 64);

struct PhaseFieldReport {
  Eigen::Vector4d zero;
  Eigen::Matrix4d jacobian;
  std::array<std::complex<double>, 4> eigenvalues;
  bool hyperbolic = false;
};

// Report at the distinguished zero y0.
PhaseFieldReport phase_report_y0(const CubicTruncation& r);

} // namespace eqforge::bifurcation
