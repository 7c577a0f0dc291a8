#include "eqforge/polymap.hpp"

#include <cmath>

#include <json.hpp>

#include "eqforge/errors.hpp"

namespace eqforge::polymap {

namespace {

void gen_monomials(int n, int d, int pos, Monomial& current,
                   std::vector<Monomial>& out) {
  if (pos == n - 1) {
    current[static_cast<std::size_t>(pos)] = d;
    out.push_back(current);
    return;
  }
  for (int e = d; e >= 0; --e) {
    current[static_cast<std::size_t>(pos)] = e;
    gen_monomials(n, d - e, pos + 1, current, out);
  }
}

} // namespace

std::vector<Monomial> monomial_basis(int n, int d) {
  if (n < 1 || d < 0) throw DomainError("monomial_basis: need n >= 1, d >= 0");
  std::vector<Monomial> out;
  Monomial current(static_cast<std::size_t>(n), 0);
  gen_monomials(n, d, 0, current, out);
  return out;
}

MonomialTable::MonomialTable(int n, int d) : n_(n), d_(d), list_(monomial_basis(n, d)) {
  for (int i = 0; i < static_cast<int>(list_.size()); ++i)
    index_[list_[static_cast<std::size_t>(i)]] = i;
}

int MonomialTable::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw DomainError("MonomialTable: unknown monomial");
  return it->second;
}

PolyMap PolyMap::zero(int n, int d) {
  PolyMap p;
  p.n = n;
  p.d = d;
  p.coeffs = Eigen::MatrixXd::Zero(n, static_cast<int>(monomial_basis(n, d).size()));
  return p;
}

PolyMap PolyMap::identity(int n) {
  PolyMap p = zero(n, 1);
  // Degree-1 monomials in descending lex order are x_1, ..., x_n.
  for (int i = 0; i < n; ++i) p.coeffs(i, i) = 1.0;
  return p;
}

Eigen::VectorXd PolyMap::evaluate(const Eigen::VectorXd& x) const {
  if (x.size() != n) throw DomainError("PolyMap::evaluate: dimension mismatch");
  static thread_local std::map<std::pair<int, int>, std::vector<Monomial>> cache;
  auto& basis = cache.try_emplace({n, d}, monomial_basis(n, d)).first->second;

  Eigen::VectorXd mono_vals(static_cast<int>(basis.size()));
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
    double v = 1.0;
    const Monomial& m = basis[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) v *= x(i);
    mono_vals(j) = v;
  }
  return coeffs * mono_vals;
}

Eigen::MatrixXd PolyMap::jacobian(const Eigen::VectorXd& x) const {
  if (x.size() != n) throw DomainError("PolyMap::jacobian: dimension mismatch");
  const std::vector<Monomial> basis = monomial_basis(n, d);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
    const Monomial& m = basis[static_cast<std::size_t>(j)];
    for (int v = 0; v < n; ++v) {
      const int ev = m[static_cast<std::size_t>(v)];
      if (ev == 0) continue;
      // d/dx_v of x^m
      double val = static_cast<double>(ev);
      for (int i = 0; i < n; ++i) {
        const int e = m[static_cast<std::size_t>(i)] - (i == v ? 1 : 0);
        for (int k = 0; k < e; ++k) val *= x(i);
      }
      for (int row = 0; row < n; ++row) jac(row, v) += coeffs(row, j) * val;
    }
  }
  return jac;
}

PolyMap& PolyMap::operator+=(const PolyMap& other) {
  if (n != other.n || d != other.d)
    throw DomainError("PolyMap: incompatible shapes in +=");
  coeffs += other.coeffs;
  return *this;
}

PolyMap& PolyMap::operator*=(double scale) {
  coeffs *= scale;
  return *this;
}

PolyMap operator*(double scale, const PolyMap& p) {
  PolyMap out = p;
  out *= scale;
  return out;
}

PolyMap operator+(PolyMap lhs, const PolyMap& rhs) {
  lhs += rhs;
  return lhs;
}

Eigen::VectorXd flatten(const PolyMap& p) {
  const int m = static_cast<int>(p.coeffs.cols());
  Eigen::VectorXd v(p.n * m);
  for (int i = 0; i < p.n; ++i) v.segment(i * m, m) = p.coeffs.row(i).transpose();
  return v;
}

PolyMap unflatten(const Eigen::VectorXd& v, int n, int d) {
  PolyMap p = PolyMap::zero(n, d);
  const int m = static_cast<int>(p.coeffs.cols());
  if (v.size() != n * m) throw DomainError("unflatten: size mismatch");
  for (int i = 0; i < n; ++i) p.coeffs.row(i) = v.segment(i * m, m).transpose();
  return p;
}

std::string to_json(const PolyMap& p) {
  const std::vector<Monomial> basis = monomial_basis(p.n, p.d);
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
      const double v = p.coeffs(i, j);
      if (v == 0.0) continue;
      coeffs.push_back({i, basis[static_cast<std::size_t>(j)], v});
    }
  nlohmann::json obj;
  obj["n"] = p.n;
  obj["d"] = p.d;
  obj["coeffs"] = coeffs;
  return obj.dump();
}

PolyMap from_json(const std::string& text) {
  const nlohmann::json obj = nlohmann::json::parse(text);
  PolyMap p = PolyMap::zero(obj.at("n").get<int>(), obj.at("d").get<int>());
  const MonomialTable table(p.n, p.d);
  for (const auto& entry : obj.at("coeffs")) {
    const int row = entry.at(0).get<int>();
    const Monomial mono = entry.at(1).get<Monomial>();
    const double value = entry.at(2).get<double>();
    if (row < 0 || row >= p.n) throw DomainError("from_json: bad output index");
    p.coeffs(row, table.index_of(mono)) = value;
  }
  return p;
}

} // namespace eqforge::polymap
