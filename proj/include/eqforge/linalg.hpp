#pragma once

#include <Eigen/Dense>

namespace eqforge::linalg {

// Rank policy shared by the commutant, kernel and equivariant solvers:
// singular values below cut = rel_tol * sigma_max count as zero. Values in
// [cut, 10*cut) mean the rank decision is not trustworthy and raise
// NumericalAmbiguityError.
struct NullspaceResult {
  int rank = 0;
  Eigen::MatrixXd basis; // columns form an orthonormal basis of the nullspace
};

NullspaceResult nullspace(const Eigen::MatrixXd& a, double rel_tol = 1e-8);

// Nullspace dimension only (same policy).
int nullity(const Eigen::MatrixXd& a, double rel_tol = 1e-8);

// Flips the sign of each column so that its first entry with magnitude
// above 1e-9 is positive.
void canonicalize_column_signs(Eigen::MatrixXd& m);

// sin of the largest principal angle between the column spans of two
// matrices with orthonormal columns. Requires equal column counts.
double max_principal_sine(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

} // namespace eqforge::linalg
