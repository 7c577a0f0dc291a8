#pragma once

#include <cstdint>

#include "eqforge/grouprep.hpp"

namespace eqforge::characters {

// Character chi(g) = tr(g) of the 8-dimensional representation in closed
// form: zero unless l1 is even and l2 = m = 0, otherwise
// (-1)^(l1/2) * 4 * (cos(eta) + cos(rho*eta)) * cos(nu) with
// eta = k1*pi/a, nu = k2*pi/b.
double character_closed_form(const grouprep::GroupElement& e,
                             const grouprep::GroupParams& params);

// Trace of the matrix realization; oracle for the closed form.
double character_trace(const grouprep::GroupElement& e,
                       const grouprep::GroupParams& params);

// chi_(2)(g) = (chi(g^2) + chi(g)^2) / 2, powers taken in normal form.
double chi_2(const grouprep::GroupElement& e, const grouprep::GroupParams& params);

// chi_(3)(g) = chi(g)^3/6 + chi(g)chi(g^2)/2 + chi(g^3)/3.
double chi_3(const grouprep::GroupElement& e, const grouprep::GroupParams& params);

// Molien coefficient R_d = (1/|G|) sum_g chi_(d)(g) chi(g) for d in {1,2,3},
// rounded to the nearest integer. Throws NumericalInconsistencyError when
// the rounding residue reaches 1e-6.
int molien_equivariant(const grouprep::GroupParams& params, int d);

// r_d = (1/|G|) sum_g chi_(d)(g) for d in {0,1,2,3}.
int molien_invariant(const grouprep::GroupParams& params, int d);

// Raw group averages before rounding (exposed for reports and tests).
double molien_equivariant_raw(const grouprep::GroupParams& params, int d);
double molien_invariant_raw(const grouprep::GroupParams& params, int d);

// Partial sums of sum_g chi_(2)(g) chi(g) over the l1 = 0 and l1 = 2
// sectors; they cancel exactly, which is why R_2 = 0.
struct SectorSums {
  double l1_zero = 0.0;
  double l1_two = 0.0;
};
SectorSums d2_sector_sums(const grouprep::GroupParams& params);

// sum_{k=0}^{w-1} cos(2*l*k*pi/w); equals w when w divides l and 0 otherwise.
double cosine_sum(std::int64_t w, std::int64_t l);

} // namespace eqforge::characters
