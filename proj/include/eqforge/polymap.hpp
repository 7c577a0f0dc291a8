#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace eqforge::polymap {

// Exponent tuple of a degree-d monomial in n variables.
using Monomial = std::vector<int>;

// All monomials of total degree d in n variables, graded-lexicographic:
// within the fixed degree, descending lexicographic on exponent tuples,
// so (d,0,...,0) comes first and (0,...,0,d) last.
std::vector<Monomial> monomial_basis(int n, int d);

// Index lookup for a fixed (n, d) monomial basis.
class MonomialTable {
public:
  MonomialTable(int n, int d);

  int n() const { return n_; }
  int degree() const { return d_; }
  int size() const { return static_cast<int>(list_.size()); }
  const std::vector<Monomial>& list() const { return list_; }
  const Monomial& at(int idx) const { return list_[static_cast<std::size_t>(idx)]; }
  int index_of(const Monomial& m) const; // throws DomainError if absent

private:
  int n_;
  int d_;
  std::vector<Monomial> list_;
  std::map<Monomial, int> index_;
};

// Homogeneous polynomial map R^n -> R^n of degree d, stored as a dense
// coefficient matrix over the shared monomial basis: row = output
// coordinate, column = monomial index.
struct PolyMap {
  int n = 0;
  int d = 0;
  Eigen::MatrixXd coeffs; // n x M

  static PolyMap zero(int n, int d);
  static PolyMap identity(int n); // degree 1

  Eigen::VectorXd evaluate(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;

  PolyMap& operator+=(const PolyMap& other);
  PolyMap& operator*=(double scale);
};

PolyMap operator*(double scale, const PolyMap& p);
PolyMap operator+(PolyMap lhs, const PolyMap& rhs);

// Flattened coefficient vector (row-major over output coordinates) used for
// span computations.
Eigen::VectorXd flatten(const PolyMap& p);
PolyMap unflatten(const Eigen::VectorXd& v, int n, int d);

// JSON serialization: {"n":..,"d":..,"coeffs":[[output_index, [exponents], value],...]}
// listing nonzero coefficients in (output, monomial) order. Round-trips
// integer-valued coefficients bit-exactly.
std::string to_json(const PolyMap& p);
PolyMap from_json(const std::string& text);

} // namespace eqforge::polymap
