#pragma once

#include <vector>

#include <Eigen/Dense>

#include "eqforge/polymap.hpp"

namespace eqforge::equivariants {

// M x M matrix T of the induced action on degree-d monomials:
// (g x)^m = sum_{m'} T(m, m') x^{m'} over the shared monomial basis.
Eigen::MatrixXd symmetric_power_matrix(const Eigen::MatrixXd& g, int d);

// Orthonormal basis of { P homogeneous of degree d : P(g x) = g P(x) for all
// generators g }, solved as the nullspace of the stacked coefficient-matching
// constraints. Throws NumericalAmbiguityError if the rank decision falls in
// the ambiguity band.
std::vector<polymap::PolyMap> equivariant_basis(
    const std::vector<Eigen::MatrixXd>& generators, int n, int d,
    double tol = 1e-8);

// The eight canonical cubic equivariants on R^8 (integer coefficients),
// index 1..8. E_1..E_4 are block-norm multiples of the coordinates,
// E_5..E_8 are the triple-product maps.
polymap::PolyMap canonical_E(int i);

// max over a fixed deterministic 64-point sample of ||P(g x) - g P(x)||_2.
double equivariance_residual(const polymap::PolyMap& p, const Eigen::MatrixXd& g);

// True iff the coefficient-space spans agree: equal dimension and mutual
// projection residuals below tol.
bool span_match(const std::vector<polymap::PolyMap>& basis_a,
                const std::vector<polymap::PolyMap>& basis_b, double tol = 1e-8);

// Orthonormalized coefficient-space span (columns) of a set of maps.
Eigen::MatrixXd span_of(const std::vector<polymap::PolyMap>& basis);

// The fixed evaluation sample used by equivariance_residual.
const std::vector<Eigen::VectorXd>& residual_sample_points(int n);

} // namespace eqforge::equivariants
