#include <cmath>
#include <numbers>
#include <set>

#include <doctest.h>

#include "eqforge/errors.hpp"
#include "eqforge/isotropy.hpp"
#include "eqforge/linalg.hpp"

using namespace eqforge;
using namespace eqforge::grouprep;
using namespace eqforge::isotropy;

namespace {

Eigen::MatrixXd coord_span(int dim, std::initializer_list<int> coords) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, static_cast<int>(coords.size()));
  int c = 0;
  for (int idx : coords) m(idx, c++) = 1.0;
  return m;
}

} // namespace

TEST_SUITE("isotropy") {

TEST_CASE("fixed spaces of distinguished elements") {
  const GroupParams h = GroupParams::h4(5, 3);
  CHECK(fixed_space(identity(), h).dim == 4);

  // [1,j][j,1] = [j,j] fixes <1, j>, coordinates 1 and 3
  const FixedSpace fs = fixed_space({0, 0, 1, 1, 0}, h);
  REQUIRE(fs.dim == 2);
  CHECK(linalg::max_principal_sine(coord_span(4, {0, 2}), fs.basis) < 1e-12);

  const GroupParams g = GroupParams::g8(5, 3);
  CHECK(fixed_space(identity(), g).dim == 8);

  // QS fixes <xi_1, xi_3, xi_6, xi_8>
  const FixedSpace qs = fixed_space({0, 0, 1, 1, 0}, g);
  REQUIRE(qs.dim == 4);
  CHECK(linalg::max_principal_sine(coord_span(8, {0, 2, 5, 7}), qs.basis) < 1e-12);
}

TEST_CASE("closed-form fixed-space basis") {
  const GroupParams p = GroupParams::h4(5, 3);

  auto basis = fixed_space_formula_h(0, 0, 1, p);
  CHECK((basis[0] - Eigen::Vector4d{1, 0, 0, 0}).norm() < 1e-15);
  CHECK((basis[1] - Eigen::Vector4d{0, 0, 1, 0}).norm() < 1e-15);

  basis = fixed_space_formula_h(0, 0, 3, p);
  CHECK((basis[0] - Eigen::Vector4d{0, 1, 0, 0}).norm() < 1e-15);
  CHECK((basis[1] - Eigen::Vector4d{0, 0, 0, 1}).norm() < 1e-15);

  basis = fixed_space_formula_h(1, 1, 1, p);
  const double theta = 0.5 * (1.0 / 5.0 - 1.0 / 3.0) * std::numbers::pi;
  CHECK(basis[0](0) == doctest::Approx(std::cos(theta)).epsilon(1e-12));
  CHECK(basis[0](1) == doctest::Approx(std::sin(theta)).epsilon(1e-12));

  CHECK_THROWS_AS(fixed_space_formula_h(0, 0, 2, p), DomainError);

  // formula agrees with the kernel oracle for all 30 fixers of H_{5,3}
  for (const GroupElement& e : nontrivial_fixers(p)) {
    const FixedSpace fs = fixed_space(e, p);
    REQUIRE(fs.dim == 2);
    const auto pair = fixed_space_formula_h(e.k1, e.k2, e.l1, p);
    Eigen::MatrixXd formula(4, 2);
    formula.col(0) = pair[0];
    formula.col(1) = pair[1];
    CHECK(linalg::max_principal_sine(formula, fs.basis) < 1e-8);
  }
}

TEST_CASE("nontrivial fixers: counts and kernel cross-validation") {
  const GroupParams h = GroupParams::h4(5, 3);
  const GroupParams g = GroupParams::g8(5, 3);
  const auto fixers_h = nontrivial_fixers(h);
  const auto fixers_g = nontrivial_fixers(g);
  CHECK(fixers_h.size() == 30);
  CHECK(fixers_g.size() == 30);

  for (const auto& fixers : {fixers_h, fixers_g})
    for (const auto& e : fixers) CHECK(e != identity());

  // exactly the elements with a nonzero kernel of (g - I), identity aside
  const std::set<GroupElement> set_h(fixers_h.begin(), fixers_h.end());
  for (const GroupElement& e : enumerate_group(h)) {
    if (e == identity()) continue;
    CHECK(set_h.count(e) == static_cast<std::size_t>(fixed_space(e, h).dim > 0));
  }
  const std::set<GroupElement> set_g(fixers_g.begin(), fixers_g.end());
  for (const GroupElement& e : enumerate_group(g)) {
    if (e == identity()) continue;
    CHECK(set_g.count(e) == static_cast<std::size_t>(fixed_space(e, g).dim > 0));
  }
}

TEST_CASE("fixers have order 2 and the stated fixed-space dimensions") {
  const GroupParams h = GroupParams::h4(5, 3);
  for (const GroupElement& e : nontrivial_fixers(h)) {
    CHECK(element_order(e, h) == 2);
    CHECK(fixed_space(e, h).dim == 2);
  }
  for (const GroupParams& g : {GroupParams::g8(5, 3), GroupParams::g8(13, 3)}) {
    for (const GroupElement& e : nontrivial_fixers(g)) {
      CHECK(element_order(e, g) == 2);
      CHECK(fixed_space(e, g).dim == 4);
    }
  }
}

TEST_CASE("isotropy classification for H_{5,3}") {
  const GroupParams p = GroupParams::h4(5, 3);
  const auto classes = classify_isotropy(p);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].representative == GroupElement{0, 0, 1, 1, 0}); // <qs> = <[j,j]>
  CHECK(classes[1].representative == GroupElement{0, 0, 3, 1, 0}); // <-[j,j]>
  CHECK(classes[0].members.size() + classes[1].members.size() == 30);
  for (const auto& cls : classes) {
    CHECK(cls.fixed_dim == 2);
    for (const auto& member : cls.members) {
      const auto it = cls.conjugator_witnesses.find(member);
      REQUIRE(it != cls.conjugator_witnesses.end());
      CHECK(nf_conjugate(it->second, cls.representative, p) == member);
      CHECK(fixed_space(member, p).dim == cls.fixed_dim);
    }
  }
}

TEST_CASE("isotropy classification for the 8-dimensional family") {
  for (const GroupParams& p : {GroupParams::g8(5, 3), GroupParams::g8(13, 3)}) {
    const auto classes = classify_isotropy(p);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].representative == GroupElement{0, 0, 1, 1, 0}); // <QS>
    CHECK(classes[0].fixed_dim == 4);
    CHECK(classes[0].members.size() == nontrivial_fixers(p).size());
    for (const auto& member : classes[0].members) {
      const auto it = classes[0].conjugator_witnesses.find(member);
      REQUIRE(it != classes[0].conjugator_witnesses.end());
      CHECK(nf_conjugate(it->second, classes[0].representative, p) == member);
    }
  }
}

TEST_CASE("conjugacy witnesses") {
  const GroupParams g = GroupParams::g8(5, 3);
  const GroupElement qs{0, 0, 1, 1, 0}, q3s{0, 0, 3, 1, 0};
  const auto w = conjugacy_witness(qs, q3s, g);
  REQUIRE(w.has_value());
  CHECK(*w == gen_v()); // V Q S V^{-1} = Q^3 S
  CHECK(nf_conjugate(*w, qs, g) == q3s);

  const auto self = conjugacy_witness(qs, qs, g);
  REQUIRE(self.has_value());
  CHECK(*self == identity());

  // in the 4-dimensional group the two classes stay distinct
  const GroupParams h = GroupParams::h4(5, 3);
  CHECK_FALSE(conjugacy_witness(qs, q3s, h).has_value());
}

} // TEST_SUITE
