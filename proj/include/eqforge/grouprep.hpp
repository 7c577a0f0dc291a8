#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace eqforge::grouprep {

enum class Family { H4, G8 };

// Parameters of a group H_{a,b} on R^4 or G_{a,b} on R^8. a and b are odd
// and coprime; the G8 family additionally needs a with all prime factors
// congruent 1 mod 4 and an odd witness rho with rho^2 = -1 (mod a).
struct GroupParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t rho = 0; // 0 means absent (H4 never uses it)
  Family family = Family::H4;

  static GroupParams h4(std::int64_t a, std::int64_t b);
  static GroupParams g8(std::int64_t a, std::int64_t b);
  static GroupParams g8(std::int64_t a, std::int64_t b, std::int64_t rho);

  int dim() const { return family == Family::H4 ? 4 : 8; }
  std::int64_t order() const { return (family == Family::H4 ? 8 : 16) * a * b; }
};

// Validates the parameter invariants; throws DomainError on violation.
void validate(const GroupParams& params);

// Exponent tuple of the normal form  c^k1 d^k2 q^l1 s^l2  (H4, m = 0) or
// C^k1 D^k2 Q^l1 S^l2 V^m  (G8). Group arithmetic is exact on these tuples;
// matrices only realize them.
struct GroupElement {
  std::int64_t k1 = 0; // mod a
  std::int64_t k2 = 0; // mod b
  int l1 = 0;          // mod 4
  int l2 = 0;          // mod 2
  int m = 0;           // mod 2, always 0 for H4

  auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity();
// Generator tuples c/C, d/D, q/Q, s/S, v/V.
GroupElement gen_c();
GroupElement gen_d();
GroupElement gen_q();
GroupElement gen_s();
GroupElement gen_v();

bool is_valid(const GroupElement& e, const GroupParams& params);

// Product in normal form, derived from the rewriting relations:
// the c/d letters pick up inversion signs when passing s/q, the V letter
// conjugates C into C^rho and Q into Q^3, and the overflows c^a, d^b, s^2,
// V^2 inject q^2 (resp. S).
GroupElement nf_multiply(const GroupElement& lhs, const GroupElement& rhs,
                         const GroupParams& params);

GroupElement nf_inverse(const GroupElement& e, const GroupParams& params);

GroupElement nf_power(const GroupElement& e, std::int64_t n,
                      const GroupParams& params);

// Conjugation w * e * w^-1.
GroupElement nf_conjugate(const GroupElement& w, const GroupElement& e,
                          const GroupParams& params);

int element_order(const GroupElement& e, const GroupParams& params);

// 2x2 rotation matrix.
Eigen::Matrix2d rotation2(double psi);

struct GeneratorsH {
  Eigen::MatrixXd c, d, q, s; // 4x4
};
struct GeneratorsG {
  Eigen::MatrixXd C, D, Q, S, V; // 8x8
};

GeneratorsH generator_matrices_h(const GroupParams& params);
GeneratorsG generator_matrices_g(const GroupParams& params);

// Generators as a list in normal-form letter order (c,d,q,s / C,D,Q,S,V).
std::vector<Eigen::MatrixXd> generator_matrix_list(const GroupParams& params);

// Matrix realization of an element: generator powers multiplied in
// normal-form order.
Eigen::MatrixXd element_matrix(const GroupElement& e, const GroupParams& params);

// All normal-form tuples in lexicographic (k1, k2, l1, l2, m) order;
// the first entry is the identity. Size 8ab (H4) or 16ab (G8).
std::vector<GroupElement> enumerate_group(const GroupParams& params);

// Closure of the generator set under nf_multiply (breadth-first). Agrees
// with enumerate_group as a set; exercised by tests as the order oracle.
std::vector<GroupElement> enumerate_closure(const GroupParams& params);

// Dimension of { L : L g = g L for all generators }, computed as the
// nullity of the stacked commutator constraints over dim^2 unknowns.
int commutant_dimension(const std::vector<Eigen::MatrixXd>& generators,
                        int dim, double tol = 1e-8);

// Defining relations evaluated as matrix identities; deviation is the
// max-norm difference of the two sides.
struct RelationCheck {
  std::string name;
  double deviation = 0.0;
};
std::vector<RelationCheck> relation_checks(const GroupParams& params);

// One-parameter Lie generator D(psi) = diag(d(psi), d(psi)) with
// d(psi) = diag(r(-psi), r(psi)); D(pi/b) equals the group generator D.
Eigen::MatrixXd lie_generator_D(double psi);

// c(phi): the 4x4 matrix of a left rotation by phi (c = c(pi/a)).
Eigen::MatrixXd lie_generator_c(double phi);

// C~(phi, phi') = diag(c(phi), c(phi')), generator of the 3-dimensional
// Lie group sample used for the a>5 equivariance checks.
Eigen::MatrixXd lie_generator_C_tilde(double phi, double phi_prime);

} // namespace eqforge::grouprep
