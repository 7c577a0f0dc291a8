#include "eqforge/equivariants.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "eqforge/errors.hpp"
#include "eqforge/linalg.hpp"

namespace eqforge::equivariants {

using polymap::Monomial;
using polymap::MonomialTable;
using polymap::PolyMap;

Eigen::MatrixXd symmetric_power_matrix(const Eigen::MatrixXd& g, int d) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n) throw DomainError("symmetric_power_matrix: square input");
  const MonomialTable table(n, d);
  const int m = table.size();

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int src = 0; src < m; ++src) {
    // Expand prod_i (row_i(g) . x)^{e_i} by repeated multiplication with the
    // linear forms; terms are collected in exponent-tuple representation.
    std::map<Monomial, double> poly;
    poly[Monomial(static_cast<std::size_t>(n), 0)] = 1.0;
    const Monomial& exps = table.at(src);
    for (int var = 0; var < n; ++var) {
      for (int rep = 0; rep < exps[static_cast<std::size_t>(var)]; ++rep) {
        std::map<Monomial, double> next;
        for (const auto& [mono, coeff] : poly) {
          for (int j = 0; j < n; ++j) {
            const double gj = g(var, j);
            if (gj == 0.0) continue;
            Monomial grown = mono;
            ++grown[static_cast<std::size_t>(j)];
            next[grown] += coeff * gj;
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, coeff] : poly) t(src, table.index_of(mono)) = coeff;
  }
  return t;
}

std::vector<PolyMap> equivariant_basis(
    const std::vector<Eigen::MatrixXd>& generators, int n, int d, double tol) {
  if (generators.empty()) throw DomainError("equivariant_basis: no generators");
  const MonomialTable table(n, d);
  const int m = table.size();
  const int unknowns = n * m;

  // Unknown u_{i,mono} = coefficient of x^mono in output coordinate i,
  // flattened as i*m + mono. For each generator the constraint block reads
  // sum_mono T(mono, mono') u_{i,mono} - sum_j g(i,j) u_{j,mono'} = 0.
  Eigen::MatrixXd stacked(static_cast<int>(generators.size()) * unknowns, unknowns);
  stacked.setZero();
  int row0 = 0;
  for (const Eigen::MatrixXd& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw DomainError("equivariant_basis: generator shape mismatch");
    const Eigen::MatrixXd t = symmetric_power_matrix(g, d);
    for (int i = 0; i < n; ++i)
      for (int mp = 0; mp < m; ++mp) {
        const int row = row0 + i * m + mp;
        for (int mono = 0; mono < m; ++mono)
          stacked(row, i * m + mono) += t(mono, mp);
        for (int j = 0; j < n; ++j) stacked(row, j * m + mp) -= g(i, j);
      }
    row0 += unknowns;
  }

  const linalg::NullspaceResult ns = linalg::nullspace(stacked, tol);
  std::vector<PolyMap> basis;
  basis.reserve(static_cast<std::size_t>(ns.basis.cols()));
  for (int c = 0; c < ns.basis.cols(); ++c)
    basis.push_back(polymap::unflatten(ns.basis.col(c), n, d));
  return basis;
}

namespace {

struct Term {
  double coeff;
  int i, j, k; // 1-based variable indices of the cubic monomial x_i x_j x_k
};

PolyMap from_terms(const std::vector<std::vector<Term>>& rows) {
  const MonomialTable table(8, 3);
  PolyMap p = PolyMap::zero(8, 3);
  for (int row = 0; row < 8; ++row) {
    for (const Term& t : rows[static_cast<std::size_t>(row)]) {
      Monomial mono(8, 0);
      ++mono[static_cast<std::size_t>(t.i - 1)];
      ++mono[static_cast<std::size_t>(t.j - 1)];
      ++mono[static_cast<std::size_t>(t.k - 1)];
      p.coeffs(row, table.index_of(mono)) += t.coeff;
    }
  }
  return p;
}

// (x_i^2 + x_j^2) x_k
std::vector<Term> norm_block(int i, int j, int k) {
  return {{1, i, i, k}, {1, j, j, k}};
}

// The block-exchange generator V pins the relative orientation of the two
// 4-blocks of E_6..E_8: the first four output rows enter with the opposite
// sign, otherwise the maps fail V-equivariance.
PolyMap flip_first_block(PolyMap p) {
  p.coeffs.topRows(4) *= -1.0;
  return p;
}

PolyMap build_E(int index) {
  switch (index) {
    case 1:
      return from_terms({norm_block(1, 2, 1), norm_block(1, 2, 2),
                         norm_block(3, 4, 3), norm_block(3, 4, 4),
                         norm_block(5, 6, 5), norm_block(5, 6, 6),
                         norm_block(7, 8, 7), norm_block(7, 8, 8)});
    case 2:
      return from_terms({norm_block(3, 4, 1), norm_block(3, 4, 2),
                         norm_block(1, 2, 3), norm_block(1, 2, 4),
                         norm_block(7, 8, 5), norm_block(7, 8, 6),
                         norm_block(5, 6, 7), norm_block(5, 6, 8)});
    case 3:
      return from_terms({norm_block(5, 6, 1), norm_block(5, 6, 2),
                         norm_block(7, 8, 3), norm_block(7, 8, 4),
                         norm_block(3, 4, 5), norm_block(3, 4, 6),
                         norm_block(1, 2, 7), norm_block(1, 2, 8)});
    case 4:
      return from_terms({norm_block(7, 8, 1), norm_block(7, 8, 2),
                         norm_block(5, 6, 3), norm_block(5, 6, 4),
                         norm_block(1, 2, 5), norm_block(1, 2, 6),
                         norm_block(3, 4, 7), norm_block(3, 4, 8)});
    case 5:
      return from_terms({
          {{-1, 3, 5, 7}, {-1, 3, 6, 8}, {-1, 4, 5, 8}, {1, 4, 6, 7}},
          {{1, 3, 5, 8}, {-1, 3, 6, 7}, {-1, 4, 5, 7}, {-1, 4, 6, 8}},
          {{-1, 1, 5, 7}, {-1, 1, 6, 8}, {1, 2, 5, 8}, {-1, 2, 6, 7}},
          {{-1, 1, 5, 8}, {1, 1, 6, 7}, {-1, 2, 5, 7}, {-1, 2, 6, 8}},
          {{1, 1, 3, 7}, {1, 1, 4, 8}, {-1, 2, 3, 8}, {1, 2, 4, 7}},
          {{1, 1, 3, 8}, {-1, 1, 4, 7}, {1, 2, 3, 7}, {1, 2, 4, 8}},
          {{1, 1, 3, 5}, {-1, 1, 4, 6}, {1, 2, 3, 6}, {1, 2, 4, 5}},
          {{1, 1, 3, 6}, {1, 1, 4, 5}, {-1, 2, 3, 5}, {1, 2, 4, 6}},
      });
    case 6:
      return flip_first_block(from_terms({
          {{-1, 1, 3, 6}, {1, 1, 4, 5}, {1, 2, 3, 5}, {1, 2, 4, 6}},
          {{1, 1, 3, 5}, {1, 1, 4, 6}, {1, 2, 3, 6}, {-1, 2, 4, 5}},
          {{-1, 1, 3, 8}, {1, 1, 4, 7}, {1, 2, 3, 7}, {1, 2, 4, 8}},
          {{1, 1, 3, 7}, {1, 1, 4, 8}, {1, 2, 3, 8}, {-1, 2, 4, 7}},
          {{1, 3, 5, 8}, {1, 3, 6, 7}, {1, 4, 5, 7}, {-1, 4, 6, 8}},
          {{1, 3, 5, 7}, {-1, 3, 6, 8}, {-1, 4, 5, 8}, {-1, 4, 6, 7}},
          {{-1, 1, 5, 8}, {-1, 1, 6, 7}, {-1, 2, 5, 7}, {1, 2, 6, 8}},
          {{-1, 1, 5, 7}, {1, 1, 6, 8}, {1, 2, 5, 8}, {1, 2, 6, 7}},
      }));
    case 7:
      return flip_first_block(from_terms({
          {{-2, 5, 7, 8}, {-1, 6, 7, 7}, {1, 6, 8, 8}},
          {{-1, 5, 7, 7}, {1, 5, 8, 8}, {2, 6, 7, 8}},
          {{1, 5, 5, 8}, {2, 5, 6, 7}, {-1, 6, 6, 8}},
          {{1, 5, 5, 7}, {-2, 5, 6, 8}, {-1, 6, 6, 7}},
          {{1, 1, 1, 4}, {2, 1, 2, 3}, {-1, 2, 2, 4}},
          {{-1, 1, 1, 3}, {2, 1, 2, 4}, {1, 2, 2, 3}},
          {{2, 1, 3, 4}, {1, 2, 3, 3}, {-1, 2, 4, 4}},
          {{-1, 1, 3, 3}, {1, 1, 4, 4}, {2, 2, 3, 4}},
      }));
    case 8:
      return flip_first_block(from_terms({
          {{1, 3, 3, 8}, {-2, 3, 4, 7}, {-1, 4, 4, 8}},
          {{-1, 3, 3, 7}, {-2, 3, 4, 8}, {1, 4, 4, 7}},
          {{1, 1, 1, 6}, {-2, 1, 2, 5}, {-1, 2, 2, 6}},
          {{-1, 1, 1, 5}, {-2, 1, 2, 6}, {1, 2, 2, 5}},
          {{2, 1, 7, 8}, {1, 2, 7, 7}, {-1, 2, 8, 8}},
          {{1, 1, 7, 7}, {-1, 1, 8, 8}, {-2, 2, 7, 8}},
          {{-2, 3, 5, 6}, {-1, 4, 5, 5}, {1, 4, 6, 6}},
          {{-1, 3, 5, 5}, {1, 3, 6, 6}, {2, 4, 5, 6}},
      }));
    default:
      throw DomainError("canonical_E: index must be in 1..8");
  }
}

} // namespace

PolyMap canonical_E(int i) {
  static const std::vector<PolyMap> all = [] {
    std::vector<PolyMap> v;
    for (int k = 1; k <= 8; ++k) v.push_back(build_E(k));
    return v;
  }();
  if (i < 1 || i > 8) throw DomainError("canonical_E: index must be in 1..8");
  return all[static_cast<std::size_t>(i - 1)];
}

const std::vector<Eigen::VectorXd>& residual_sample_points(int n) {
  static thread_local std::map<int, std::vector<Eigen::VectorXd>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Deterministic sample: Box-Muller over a fixed-seed mt19937, each point
  // normalized and scaled to radius (k+1)/64 so all radii of the unit ball
  // are represented.
  std::mt19937 rng(0x5eb0u + static_cast<unsigned>(n));
  auto uniform = [&rng]() {
    return (static_cast<double>(rng()) + 0.5) / 4294967296.0;
  };
  auto gauss = [&]() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };

  std::vector<Eigen::VectorXd> pts;
  for (int k = 0; k < 64; ++k) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = gauss();
    x *= (static_cast<double>(k + 1) / 64.0) / x.norm();
    pts.push_back(std::move(x));
  }
  return cache.emplace(n, std::move(pts)).first->second;
}

double equivariance_residual(const PolyMap& p, const Eigen::MatrixXd& g) {
  if (g.rows() != p.n || g.cols() != p.n)
    throw DomainError("equivariance_residual: shape mismatch");
  double worst = 0.0;
  for (const Eigen::VectorXd& x : residual_sample_points(p.n)) {
    const double r = (p.evaluate(g * x) - g * p.evaluate(x)).norm();
    worst = std::max(worst, r);
  }
  return worst;
}

Eigen::MatrixXd span_of(const std::vector<PolyMap>& basis) {
  if (basis.empty()) return Eigen::MatrixXd();
  const int len = static_cast<int>(polymap::flatten(basis[0]).size());
  Eigen::MatrixXd m(len, static_cast<int>(basis.size()));
  for (int c = 0; c < m.cols(); ++c)
    m.col(c) = polymap::flatten(basis[static_cast<std::size_t>(c)]);
  // Orthonormalize via thin QR (columns are linearly independent bases here).
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(len, m.cols());
  return q;
}

bool span_match(const std::vector<PolyMap>& basis_a,
                const std::vector<PolyMap>& basis_b, double tol) {
  if (basis_a.size() != basis_b.size()) return false;
  if (basis_a.empty()) return true;
  if (basis_a[0].n != basis_b[0].n || basis_a[0].d != basis_b[0].d)
    throw DomainError("span_match: mixed (n, d)");
  const Eigen::MatrixXd qa = span_of(basis_a);
  const Eigen::MatrixXd qb = span_of(basis_b);
  return linalg::max_principal_sine(qa, qb) < tol &&
         linalg::max_principal_sine(qb, qa) < tol;
}

} // namespace eqforge::equivariants
