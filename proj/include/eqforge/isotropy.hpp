#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "eqforge/grouprep.hpp"

namespace eqforge::isotropy {

// Orthonormal basis of the fixed-point space ker(g - I) of one element.
struct FixedSpace {
  grouprep::GroupElement element;
  Eigen::MatrixXd basis; // dim() x fixed_dim, columns orthonormal,
                         // first nonzero entry of each column positive
  int dim = 0;
};

FixedSpace fixed_space(const grouprep::GroupElement& e,
                       const grouprep::GroupParams& params, double tol = 1e-8);

// Closed-form basis pair for the fixed space of c^k1 d^k2 q^l1 s (l2 = 1)
// acting on R^4: cos/sin vectors at the half-angle combinations, shifted by
// pi/2 when l1 = 3. Requires l1 in {1, 3}.
std::array<Eigen::Vector4d, 2> fixed_space_formula_h(
    std::int64_t k1, std::int64_t k2, int l1, const grouprep::GroupParams& params);

// All non-identity elements with a nonzero fixed space: exactly the tuples
// with l1 in {1,3}, l2 = 1 (and m = 0 for G8), in lexicographic order.
std::vector<grouprep::GroupElement> nontrivial_fixers(
    const grouprep::GroupParams& params);

// A conjugacy class of the order-2 subgroups generated by nontrivial
// fixers. The representative is the lexicographically smallest member;
// each witness w satisfies w * representative * w^-1 = member.
struct IsotropyClass {
  grouprep::GroupElement representative;
  std::vector<grouprep::GroupElement> members;
  int fixed_dim = 0;
  std::map<grouprep::GroupElement, grouprep::GroupElement> conjugator_witnesses;
};

std::vector<IsotropyClass> classify_isotropy(const grouprep::GroupParams& params,
                                             double tol = 1e-8);

// First group element (lexicographic order) conjugating `from` onto `to`,
// or nullopt when the two lie in different classes.
std::optional<grouprep::GroupElement> conjugacy_witness(
    const grouprep::GroupElement& from, const grouprep::GroupElement& to,
    const grouprep::GroupParams& params);

} // namespace eqforge::isotropy
