#include "eqforge/characters.hpp"

#include <cmath>
#include <numbers>

#include "eqforge/errors.hpp"

namespace eqforge::characters {

using grouprep::GroupElement;
using grouprep::GroupParams;

namespace {

void require_g8(const GroupParams& p, const char* who) {
  if (p.family != grouprep::Family::G8)
    throw DomainError(std::string(who) + ": requires G8 family params");
}

double chi_d(const GroupElement& e, const GroupParams& p, int d) {
  switch (d) {
    case 0:
      return 1.0;
    case 1:
      return character_closed_form(e, p);
    case 2:
      return chi_2(e, p);
    case 3:
      return chi_3(e, p);
    default:
      throw DomainError("chi_(d): only degrees 0..3 are implemented");
  }
}

int round_checked(double raw, const char* who) {
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) >= 1e-6)
    throw NumericalInconsistencyError(std::string(who) +
                                      ": rounding residue >= 1e-6");
  return static_cast<int>(nearest);
}

} // namespace

double character_closed_form(const GroupElement& e, const GroupParams& p) {
  require_g8(p, "character_closed_form");
  if (e.m != 0 || e.l2 != 0 || e.l1 % 2 != 0) return 0.0;
  const double pi = std::numbers::pi;
  const double eta = static_cast<double>(e.k1) * pi / static_cast<double>(p.a);
  const double nu = static_cast<double>(e.k2) * pi / static_cast<double>(p.b);
  const double sign = e.l1 == 2 ? -1.0 : 1.0;
  return sign * 4.0 *
         (std::cos(eta) + std::cos(static_cast<double>(p.rho) * eta)) *
         std::cos(nu);
}

double character_trace(const GroupElement& e, const GroupParams& p) {
  return grouprep::element_matrix(e, p).trace();
}

double chi_2(const GroupElement& e, const GroupParams& p) {
  const double chi1 = character_closed_form(e, p);
  const double chi_sq = character_closed_form(grouprep::nf_power(e, 2, p), p);
  return 0.5 * (chi_sq + chi1 * chi1);
}

double chi_3(const GroupElement& e, const GroupParams& p) {
  const double chi1 = character_closed_form(e, p);
  const double chi_sq = character_closed_form(grouprep::nf_power(e, 2, p), p);
  const double chi_cu = character_closed_form(grouprep::nf_power(e, 3, p), p);
  return chi1 * chi1 * chi1 / 6.0 + 0.5 * chi1 * chi_sq + chi_cu / 3.0;
}

double molien_equivariant_raw(const GroupParams& p, int d) {
  require_g8(p, "molien_equivariant");
  if (d < 1 || d > 3)
    throw DomainError("molien_equivariant: degree must be in {1,2,3}");
  double sum = 0.0;
  for (const GroupElement& g : grouprep::enumerate_group(p))
    sum += chi_d(g, p, d) * character_closed_form(g, p);
  return sum / static_cast<double>(p.order());
}

double molien_invariant_raw(const GroupParams& p, int d) {
  require_g8(p, "molien_invariant");
  if (d < 0 || d > 3)
    throw DomainError("molien_invariant: degree must be in {0,1,2,3}");
  double sum = 0.0;
  for (const GroupElement& g : grouprep::enumerate_group(p))
    sum += chi_d(g, p, d);
  return sum / static_cast<double>(p.order());
}

int molien_equivariant(const GroupParams& p, int d) {
  return round_checked(molien_equivariant_raw(p, d), "molien_equivariant");
}

int molien_invariant(const GroupParams& p, int d) {
  return round_checked(molien_invariant_raw(p, d), "molien_invariant");
}

SectorSums d2_sector_sums(const GroupParams& p) {
  require_g8(p, "d2_sector_sums");
  SectorSums sums;
  for (std::int64_t k1 = 0; k1 < p.a; ++k1)
    for (std::int64_t k2 = 0; k2 < p.b; ++k2)
      for (int l1 : {0, 2}) {
        const GroupElement g{k1, k2, l1, 0, 0};
        const double term = chi_2(g, p) * character_closed_form(g, p);
        (l1 == 0 ? sums.l1_zero : sums.l1_two) += term;
      }
  return sums;
}

double cosine_sum(std::int64_t w, std::int64_t l) {
  if (w < 1) throw DomainError("cosine_sum: w must be >= 1");
  double sum = 0.0;
  for (std::int64_t k = 0; k < w; ++k)
    sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(l) *
                    static_cast<double>(k) / static_cast<double>(w));
  return sum;
}

} // namespace eqforge::characters
