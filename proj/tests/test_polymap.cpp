#include <random>

#include <doctest.h>

#include "eqforge/equivariants.hpp"
#include "eqforge/errors.hpp"
#include "eqforge/polymap.hpp"

using namespace eqforge;
using namespace eqforge::polymap;

TEST_SUITE("polymap") {

TEST_CASE("monomial basis sizes and order") {
  CHECK(monomial_basis(8, 3).size() == 120);
  CHECK(monomial_basis(4, 3).size() == 20);
  CHECK(monomial_basis(8, 1).size() == 8);

  const auto basis = monomial_basis(4, 3);
  CHECK(basis.front() == Monomial{3, 0, 0, 0});
  CHECK(basis.back() == Monomial{0, 0, 0, 3});
  for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] > basis[i]);

  const MonomialTable table(4, 3);
  for (int i = 0; i < table.size(); ++i) CHECK(table.index_of(table.at(i)) == i);
}

TEST_CASE("evaluation basics") {
  const PolyMap id = PolyMap::identity(4);
  Eigen::VectorXd x(4);
  x << 1.5, -2.0, 0.25, 3.0;
  CHECK((id.evaluate(x) - x).norm() == 0.0);

  const PolyMap zero = PolyMap::zero(4, 3);
  CHECK(zero.evaluate(x).norm() == 0.0);
  CHECK(zero.evaluate(Eigen::VectorXd::Zero(4)).norm() == 0.0);
}

TEST_CASE("homogeneity of random cubic maps") {
  std::mt19937 rng(11u);
  auto uni = [&rng] { return (static_cast<double>(rng()) / 4294967296.0) * 2.0 - 1.0; };
  PolyMap p = PolyMap::zero(4, 3);
  for (int i = 0; i < p.coeffs.rows(); ++i)
    for (int j = 0; j < p.coeffs.cols(); ++j) p.coeffs(i, j) = uni();

  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd x(4);
    for (int i = 0; i < 4; ++i) x(i) = uni();
    CHECK((p.evaluate(2.0 * x) - 8.0 * p.evaluate(x)).norm() < 1e-12);
    CHECK((p.evaluate(-x) + p.evaluate(x)).norm() < 1e-12); // odd degree
  }
}

TEST_CASE("analytic jacobian matches finite differences") {
  std::mt19937 rng(12u);
  auto uni = [&rng] { return (static_cast<double>(rng()) / 4294967296.0) * 2.0 - 1.0; };
  PolyMap p = PolyMap::zero(4, 3);
  for (int i = 0; i < p.coeffs.rows(); ++i)
    for (int j = 0; j < p.coeffs.cols(); ++j) p.coeffs(i, j) = uni();

  const double h = 1e-6;
  for (int t = 0; t < 10; ++t) {
    Eigen::VectorXd x(4);
    for (int i = 0; i < 4; ++i) x(i) = uni();
    const Eigen::MatrixXd jac = p.jacobian(x);
    for (int c = 0; c < 4; ++c) {
      Eigen::VectorXd hi = x, lo = x;
      hi(c) += h;
      lo(c) -= h;
      const Eigen::VectorXd fd = (p.evaluate(hi) - p.evaluate(lo)) / (2.0 * h);
      CHECK((jac.col(c) - fd).norm() < 1e-8);
    }
  }
}

TEST_CASE("JSON round-trip is exact for integer coefficients") {
  const PolyMap e5 = equivariants::canonical_E(5);
  const PolyMap back = from_json(to_json(e5));
  CHECK(back.n == e5.n);
  CHECK(back.d == e5.d);
  CHECK((back.coeffs - e5.coeffs).cwiseAbs().maxCoeff() == 0.0);

  // round-trip keeps arbitrary double coefficients bit-identical as well
  std::mt19937 rng(13u);
  PolyMap p = PolyMap::zero(3, 2);
  for (int i = 0; i < p.coeffs.rows(); ++i)
    for (int j = 0; j < p.coeffs.cols(); ++j)
      p.coeffs(i, j) = (static_cast<double>(rng()) / 4294967296.0) * 2e3 - 1e3;
  const PolyMap q = from_json(to_json(p));
  for (int i = 0; i < p.coeffs.rows(); ++i)
    for (int j = 0; j < p.coeffs.cols(); ++j) CHECK(q.coeffs(i, j) == p.coeffs(i, j));
}

TEST_CASE("flatten and unflatten invert each other") {
  const PolyMap e1 = equivariants::canonical_E(1);
  const PolyMap back = unflatten(flatten(e1), 8, 3);
  CHECK((back.coeffs - e1.coeffs).cwiseAbs().maxCoeff() == 0.0);
}

} // TEST_SUITE
