#include "eqforge/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "eqforge/errors.hpp"
#include "eqforge/linalg.hpp"

namespace eqforge::isotropy {

using grouprep::GroupElement;
using grouprep::GroupParams;

FixedSpace fixed_space(const GroupElement& e, const GroupParams& p, double tol) {
  const Eigen::MatrixXd m = grouprep::element_matrix(e, p);
  const Eigen::MatrixXd shifted =
      m - Eigen::MatrixXd::Identity(m.rows(), m.cols());
  linalg::NullspaceResult ns = linalg::nullspace(shifted, tol);
  linalg::canonicalize_column_signs(ns.basis);
  FixedSpace fs;
  fs.element = e;
  fs.basis = std::move(ns.basis);
  fs.dim = static_cast<int>(fs.basis.cols());
  return fs;
}

std::array<Eigen::Vector4d, 2> fixed_space_formula_h(std::int64_t k1,
                                                     std::int64_t k2, int l1,
                                                     const GroupParams& p) {
  if (l1 != 1 && l1 != 3)
    throw DomainError("fixed_space_formula_h: l1 must be 1 or 3");
  const double pi = std::numbers::pi;
  const double shift = l1 == 3 ? 1.0 : 0.0;
  const double ka = static_cast<double>(k1) / static_cast<double>(p.a);
  const double kb = static_cast<double>(k2) / static_cast<double>(p.b);
  const double theta1 = 0.5 * (ka - kb + shift) * pi;
  const double theta2 = 0.5 * (ka + kb + shift) * pi;
  Eigen::Vector4d v1{std::cos(theta1), std::sin(theta1), 0.0, 0.0};
  Eigen::Vector4d v2{0.0, 0.0, std::cos(theta2), std::sin(theta2)};
  return {v1, v2};
}

std::vector<GroupElement> nontrivial_fixers(const GroupParams& p) {
  grouprep::validate(p);
  std::vector<GroupElement> out;
  for (std::int64_t k1 = 0; k1 < p.a; ++k1)
    for (std::int64_t k2 = 0; k2 < p.b; ++k2)
      for (int l1 : {1, 3}) out.push_back({k1, k2, l1, 1, 0});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsotropyClass> classify_isotropy(const GroupParams& p, double tol) {
  const std::vector<GroupElement> fixers = nontrivial_fixers(p);
  const std::set<GroupElement> fixer_set(fixers.begin(), fixers.end());
  const std::vector<GroupElement> group = grouprep::enumerate_group(p);

  std::set<GroupElement> assigned;
  std::vector<IsotropyClass> classes;
  for (const GroupElement& rep : fixers) {
    if (assigned.count(rep)) continue;
    IsotropyClass cls;
    cls.representative = rep;
    for (const GroupElement& w : group) {
      const GroupElement conj = grouprep::nf_conjugate(w, rep, p);
      if (!fixer_set.count(conj))
        throw InternalError("classify_isotropy: conjugate left the fixer set");
      if (cls.conjugator_witnesses.emplace(conj, w).second)
        cls.members.push_back(conj);
    }
    std::sort(cls.members.begin(), cls.members.end());
    for (const GroupElement& member : cls.members) assigned.insert(member);
    cls.fixed_dim = fixed_space(rep, p, tol).dim;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::optional<GroupElement> conjugacy_witness(const GroupElement& from,
                                              const GroupElement& to,
                                              const GroupParams& p) {
  for (const GroupElement& w : grouprep::enumerate_group(p))
    if (grouprep::nf_conjugate(w, from, p) == to) return w;
  return std::nullopt;
}

} // namespace eqforge::isotropy
