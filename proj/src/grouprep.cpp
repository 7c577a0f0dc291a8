#include "eqforge/grouprep.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "eqforge/errors.hpp"
#include "eqforge/linalg.hpp"
#include "eqforge/modular.hpp"

namespace eqforge::grouprep {

namespace {

// Euclidean divmod: remainder in [0, n), quotient matching.
struct DivMod {
  std::int64_t quot;
  std::int64_t rem;
};

DivMod divmod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  if (r < 0) r += n;
  return {(x - r) / n, r};
}

} // namespace

GroupParams GroupParams::h4(std::int64_t a, std::int64_t b) {
  GroupParams p{a, b, 0, Family::H4};
  validate(p);
  return p;
}

GroupParams GroupParams::g8(std::int64_t a, std::int64_t b) {
  GroupParams p{a, b, modular::rho_for(a).rho, Family::G8};
  validate(p);
  return p;
}

GroupParams GroupParams::g8(std::int64_t a, std::int64_t b, std::int64_t rho) {
  GroupParams p{a, b, rho, Family::G8};
  validate(p);
  return p;
}

void validate(const GroupParams& p) {
  if (p.a < 1 || p.b < 1) throw DomainError("group params: a, b must be positive");
  if (p.a % 2 == 0 || p.b % 2 == 0)
    throw DomainError("group params: a, b must be odd");
  if (std::gcd(p.a, p.b) != 1)
    throw DomainError("group params: a, b must be coprime");
  if (p.family == Family::G8) {
    if (!modular::is_in_A(p.a))
      throw DomainError("group params: a has a prime factor != 1 mod 4");
    if (p.rho <= 0)
      throw DomainError("group params: G8 family requires a rho witness");
    if (p.rho % 2 != 1 || p.rho >= 2 * p.a ||
        modular::mul_mod(p.rho, p.rho, p.a) != p.a - 1)
      throw DomainError("group params: invalid rho witness");
  }
}

GroupElement identity() { return {}; }
GroupElement gen_c() { return {1, 0, 0, 0, 0}; }
GroupElement gen_d() { return {0, 1, 0, 0, 0}; }
GroupElement gen_q() { return {0, 0, 1, 0, 0}; }
GroupElement gen_s() { return {0, 0, 0, 1, 0}; }
GroupElement gen_v() { return {0, 0, 0, 0, 1}; }

bool is_valid(const GroupElement& e, const GroupParams& p) {
  if (e.k1 < 0 || e.k1 >= p.a) return false;
  if (e.k2 < 0 || e.k2 >= p.b) return false;
  if (e.l1 < 0 || e.l1 >= 4) return false;
  if (e.l2 < 0 || e.l2 >= 2) return false;
  if (e.m < 0 || e.m >= 2) return false;
  if (p.family == Family::H4 && e.m != 0) return false;
  return true;
}

GroupElement nf_multiply(const GroupElement& lhs, const GroupElement& rhs,
                         const GroupParams& p) {
  // Move the letters of rhs leftwards into lhs. Passing V^m conjugates
  // C -> C^rho and Q -> Q^{-1}; passing S^l2 inverts C; passing Q^l1
  // inverts D. All overflow corrections are central powers of Q^2.
  const std::int64_t rho_pow = (lhs.m == 1 && p.family == Family::G8) ? p.rho : 1;
  const std::int64_t s_sign = (lhs.l2 == 1) ? -1 : 1;
  const std::int64_t q_sign = (lhs.l1 % 2 == 1) ? -1 : 1;
  const std::int64_t v_sign = (lhs.m == 1) ? -1 : 1;

  std::int64_t k1 = lhs.k1 + s_sign * rho_pow * rhs.k1;
  std::int64_t k2 = lhs.k2 + q_sign * rhs.k2;
  std::int64_t l1 = lhs.l1 + v_sign * rhs.l1;
  std::int64_t l2 = lhs.l2 + rhs.l2;
  std::int64_t m = lhs.m + rhs.m;

  const DivMod dm_m = divmod(m, 2); // V^2 = S
  l2 += dm_m.quot;
  const DivMod dm_s = divmod(l2, 2); // S^2 = Q^2
  l1 += 2 * dm_s.quot;
  const DivMod dm_c = divmod(k1, p.a); // C^a = Q^2
  l1 += 2 * dm_c.quot;
  const DivMod dm_d = divmod(k2, p.b); // D^b = Q^2
  l1 += 2 * dm_d.quot;
  const DivMod dm_q = divmod(l1, 4);

  return {dm_c.rem, dm_d.rem, static_cast<int>(dm_q.rem),
          static_cast<int>(dm_s.rem), static_cast<int>(dm_m.rem)};
}

GroupElement nf_inverse(const GroupElement& e, const GroupParams& p) {
  // Multiply the letter inverses in reverse order; each letter inverse is
  // itself a normal form (negative powers absorb a central Q^2).
  GroupElement inv = identity();
  if (e.m == 1) inv = nf_multiply(inv, GroupElement{0, 0, 2, 1, 1}, p); // V^-1 = Q^2 S V
  if (e.l2 == 1) inv = nf_multiply(inv, GroupElement{0, 0, 2, 1, 0}, p); // S^-1 = Q^2 S
  if (e.l1 != 0)
    inv = nf_multiply(inv, GroupElement{0, 0, (4 - e.l1) % 4, 0, 0}, p);
  if (e.k2 != 0) inv = nf_multiply(inv, GroupElement{0, p.b - e.k2, 2, 0, 0}, p);
  if (e.k1 != 0) inv = nf_multiply(inv, GroupElement{p.a - e.k1, 0, 2, 0, 0}, p);
  return inv;
}

GroupElement nf_power(const GroupElement& e, std::int64_t n,
                      const GroupParams& p) {
  GroupElement base = n < 0 ? nf_inverse(e, p) : e;
  std::int64_t k = n < 0 ? -n : n;
  GroupElement acc = identity();
  while (k > 0) {
    if (k & 1) acc = nf_multiply(acc, base, p);
    base = nf_multiply(base, base, p);
    k >>= 1;
  }
  return acc;
}

GroupElement nf_conjugate(const GroupElement& w, const GroupElement& e,
                          const GroupParams& p) {
  return nf_multiply(nf_multiply(w, e, p), nf_inverse(w, p), p);
}

int element_order(const GroupElement& e, const GroupParams& p) {
  GroupElement acc = e;
  int n = 1;
  const std::int64_t bound = p.order();
  while (acc != identity()) {
    acc = nf_multiply(acc, e, p);
    ++n;
    if (n > bound) throw InternalError("element_order: exceeded group order");
  }
  return n;
}

Eigen::Matrix2d rotation2(double psi) {
  Eigen::Matrix2d r;
  r << std::cos(psi), -std::sin(psi), std::sin(psi), std::cos(psi);
  return r;
}

namespace {

Eigen::MatrixXd block_diag2(const Eigen::Matrix2d& top, const Eigen::Matrix2d& bottom) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m.block<2, 2>(0, 0) = top;
  m.block<2, 2>(2, 2) = bottom;
  return m;
}

Eigen::MatrixXd block_diag4(const Eigen::MatrixXd& top, const Eigen::MatrixXd& bottom) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(8, 8);
  m.block<4, 4>(0, 0) = top;
  m.block<4, 4>(4, 4) = bottom;
  return m;
}

Eigen::MatrixXd matrix_power(Eigen::MatrixXd base, std::int64_t n) {
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(base.rows(), base.cols());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Eigen::MatrixXd q_matrix() {
  Eigen::MatrixXd q(4, 4);
  q << 0, 0, 1, 0, //
      0, 0, 0, 1,  //
      -1, 0, 0, 0, //
      0, -1, 0, 0;
  return q;
}

Eigen::MatrixXd s_matrix() {
  Eigen::MatrixXd s(4, 4);
  s << 0, 0, -1, 0, //
      0, 0, 0, 1,   //
      1, 0, 0, 0,   //
      0, -1, 0, 0;
  return s;
}

} // namespace

GeneratorsH generator_matrices_h(const GroupParams& p) {
  validate(p);
  const double pi = std::numbers::pi;
  GeneratorsH g;
  g.c = block_diag2(rotation2(pi / static_cast<double>(p.a)),
                    rotation2(pi / static_cast<double>(p.a)));
  g.d = block_diag2(rotation2(-pi / static_cast<double>(p.b)),
                    rotation2(pi / static_cast<double>(p.b)));
  g.q = q_matrix();
  g.s = s_matrix();
  return g;
}

GeneratorsG generator_matrices_g(const GroupParams& p) {
  validate(p);
  if (p.family != Family::G8)
    throw DomainError("generator_matrices_g: params are not of the G8 family");
  const GroupParams h{p.a, p.b, 0, Family::H4};
  const GeneratorsH base = generator_matrices_h(h);
  GeneratorsG g;
  g.C = block_diag4(base.c, matrix_power(base.c, p.rho));
  g.D = block_diag4(base.d, base.d);
  g.Q = block_diag4(base.q, -base.q);
  g.S = block_diag4(base.s, base.s);
  g.V = Eigen::MatrixXd::Zero(8, 8);
  g.V.block<4, 4>(0, 4) = Eigen::MatrixXd::Identity(4, 4);
  g.V.block<4, 4>(4, 0) = base.s;
  return g;
}

std::vector<Eigen::MatrixXd> generator_matrix_list(const GroupParams& p) {
  if (p.family == Family::H4) {
    const GeneratorsH g = generator_matrices_h(p);
    return {g.c, g.d, g.q, g.s};
  }
  const GeneratorsG g = generator_matrices_g(p);
  return {g.C, g.D, g.Q, g.S, g.V};
}

Eigen::MatrixXd element_matrix(const GroupElement& e, const GroupParams& p) {
  const std::vector<Eigen::MatrixXd> gens = generator_matrix_list(p);
  Eigen::MatrixXd m = matrix_power(gens[0], e.k1) * matrix_power(gens[1], e.k2) *
                      matrix_power(gens[2], e.l1) * matrix_power(gens[3], e.l2);
  if (p.family == Family::G8 && e.m == 1) m = m * gens[4];
  return m;
}

std::vector<GroupElement> enumerate_group(const GroupParams& p) {
  validate(p);
  std::vector<GroupElement> all;
  all.reserve(static_cast<std::size_t>(p.order()));
  const int m_max = p.family == Family::G8 ? 2 : 1;
  for (std::int64_t k1 = 0; k1 < p.a; ++k1)
    for (std::int64_t k2 = 0; k2 < p.b; ++k2)
      for (int l1 = 0; l1 < 4; ++l1)
        for (int l2 = 0; l2 < 2; ++l2)
          for (int m = 0; m < m_max; ++m)
            all.push_back({k1, k2, l1, l2, m});
  return all;
}

std::vector<GroupElement> enumerate_closure(const GroupParams& p) {
  validate(p);
  std::vector<GroupElement> gens = {gen_c(), gen_d(), gen_q(), gen_s()};
  if (p.family == Family::G8) gens.push_back(gen_v());

  std::set<GroupElement> seen = {identity()};
  std::vector<GroupElement> frontier = {identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& e : frontier)
      for (const GroupElement& g : gens) {
        const GroupElement prod = nf_multiply(e, g, p);
        if (seen.insert(prod).second) next.push_back(prod);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

int commutant_dimension(const std::vector<Eigen::MatrixXd>& generators,
                        int dim, double tol) {
  if (generators.empty()) throw DomainError("commutant_dimension: no generators");
  for (const auto& g : generators)
    if (g.rows() != dim || g.cols() != dim)
      throw DomainError("commutant_dimension: generator shape mismatch");

  const int n2 = dim * dim;
  Eigen::MatrixXd constraints(static_cast<int>(generators.size()) * n2, n2);
  constraints.setZero();
  int row0 = 0;
  for (const auto& g : generators) {
    // (L g - g L)_{ij} = sum_k L_ik g_kj - g_ik L_kj, unknown index i*dim+k.
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const int row = row0 + i * dim + j;
        for (int k = 0; k < dim; ++k) {
          constraints(row, i * dim + k) += g(k, j);
          constraints(row, k * dim + j) -= g(i, k);
        }
      }
    row0 += n2;
  }
  return static_cast<int>(constraints.cols()) -
         linalg::nullspace(constraints, tol).rank;
}

std::vector<RelationCheck> relation_checks(const GroupParams& p) {
  std::vector<RelationCheck> out;
  auto push = [&out](const std::string& name, const Eigen::MatrixXd& lhs,
                     const Eigen::MatrixXd& rhs) {
    out.push_back({name, linalg::max_abs_diff(lhs, rhs)});
  };

  const bool g8 = p.family == Family::G8;
  const std::vector<Eigen::MatrixXd> gens = generator_matrix_list(p);
  const Eigen::MatrixXd& c = gens[0];
  const Eigen::MatrixXd& d = gens[1];
  const Eigen::MatrixXd& q = gens[2];
  const Eigen::MatrixXd& s = gens[3];
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(p.dim(), p.dim());
  const char* cn = g8 ? "C" : "c";
  const char* dn = g8 ? "D" : "d";
  const char* qn = g8 ? "Q" : "q";
  const char* sn = g8 ? "S" : "s";
  auto name2 = [](const char* x, const char* y) { return std::string(x) + y; };

  push(name2(cn, dn) + " = " + name2(dn, cn), c * d, d * c);
  push(name2(cn, qn) + " = " + name2(qn, cn), c * q, q * c);
  push(name2(dn, sn) + " = " + name2(sn, dn), d * s, s * d);
  push(name2(qn, sn) + " = " + name2(sn, qn), q * s, s * q);
  push(std::string(qn) + "^4 = I", matrix_power(q, 4), id);
  push(std::string(sn) + "^4 = I", matrix_power(s, 4), id);
  push(name2(cn, sn) + " = " + sn + cn + "^(2a-1)", c * s,
       s * matrix_power(c, 2 * p.a - 1));
  push(name2(dn, qn) + " = " + qn + dn + "^(2b-1)", d * q,
       q * matrix_power(d, 2 * p.b - 1));
  push(std::string(cn) + "^a = " + qn + "^2", matrix_power(c, p.a), q * q);
  push(std::string(dn) + "^b = " + qn + "^2", matrix_power(d, p.b), q * q);
  push(std::string(sn) + "^2 = " + qn + "^2", s * s, q * q);

  if (g8) {
    const Eigen::MatrixXd& v = gens[4];
    push("VC = C^rho V", v * c, matrix_power(c, p.rho) * v);
    push("CV = VC^(2a-rho)", c * v, v * matrix_power(c, 2 * p.a - p.rho));
    push("VD = DV", v * d, d * v);
    push("VQ = Q^3 V", v * q, matrix_power(q, 3) * v);
    push("VS = SV", v * s, s * v);
    push("V^8 = I", matrix_power(v, 8), id);
    push("V^2 = S", v * v, s);
  }
  return out;
}

Eigen::MatrixXd lie_generator_D(double psi) {
  const Eigen::MatrixXd d = block_diag2(rotation2(-psi), rotation2(psi));
  return block_diag4(d, d);
}

Eigen::MatrixXd lie_generator_c(double phi) {
  return block_diag2(rotation2(phi), rotation2(phi));
}

Eigen::MatrixXd lie_generator_C_tilde(double phi, double phi_prime) {
  return block_diag4(lie_generator_c(phi), lie_generator_c(phi_prime));
}

} // namespace eqforge::grouprep
