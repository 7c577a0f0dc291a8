#include "eqforge/linalg.hpp"

#include <cmath>

#include "eqforge/errors.hpp"

namespace eqforge::linalg {

NullspaceResult nullspace(const Eigen::MatrixXd& a, double rel_tol) {
  const int n = static_cast<int>(a.cols());
  NullspaceResult res;
  if (a.rows() == 0) {
    res.rank = 0;
    res.basis = Eigen::MatrixXd::Identity(n, n);
    return res;
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  if (smax == 0.0) {
    res.rank = 0;
    res.basis = Eigen::MatrixXd::Identity(n, n);
    return res;
  }

  const double cut = rel_tol * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    const double s = sv(i);
    if (s >= 10.0 * cut) {
      ++rank;
    } else if (s >= cut) {
      throw NumericalAmbiguityError(
          "singular value inside ambiguity band [cut, 10*cut); "
          "rank decision unreliable");
    }
  }

  res.rank = rank;
  const int nullity = n - rank;
  // BDCSVD with ThinV returns min(m,n) columns; nullspace vectors are the
  // trailing ones. A wide matrix (m < n) leaves n - m columns unrepresented,
  // but every caller here stacks at least n rows of constraints.
  if (svd.matrixV().cols() < n) {
    Eigen::BDCSVD<Eigen::MatrixXd> full(a, Eigen::ComputeFullV);
    res.basis = full.matrixV().rightCols(nullity);
  } else {
    res.basis = svd.matrixV().rightCols(nullity);
  }
  return res;
}

int nullity(const Eigen::MatrixXd& a, double rel_tol) {
  return static_cast<int>(a.cols()) - nullspace(a, rel_tol).rank;
}

void canonicalize_column_signs(Eigen::MatrixXd& m) {
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > 1e-9) {
        if (m(r, c) < 0.0) m.col(c) = -m.col(c);
        break;
      }
    }
  }
}

double max_principal_sine(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows())
    throw DomainError("max_principal_sine: shape mismatch");
  if (a.cols() == 0) return 0.0;
  // || (I - A A^T) B ||_2 equals sin of the largest principal angle when both
  // column sets are orthonormal.
  Eigen::MatrixXd residual = b - a * (a.transpose() * b);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  return svd.singularValues()(0);
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

} // namespace eqforge::linalg
