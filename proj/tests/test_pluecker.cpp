#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "cartan/pluecker.hpp"

using namespace cartan;

TEST_CASE("pluecker coordinates of simple families") {
  SECTION("a constant coordinate plane is an indicator vector") {
    PolyMatrix rows(2, 4);
    rows(0, 0) = Poly(1);
    rows(1, 1) = Poly(1);
    PlueckerVector pv = pluecker_coords(ParamSubspace(std::move(rows), 4));
    REQUIRE(pv.coordinate({0, 1}) == Poly(1));
    for (const auto& sub : pv.subsets)
      if (sub != std::vector<int>{0, 1}) REQUIRE(pv.coordinate(sub).is_zero());
  }
  SECTION("the moving-line pencil has exactly two linear coordinates") {
    for (int d = 2; d <= 5; ++d) {
      ParamSubspace fam = projective_space_line_family(d);
      PlueckerVector pv = pluecker_coords(fam);
      int nonzero = 0;
      for (const Poly& c : pv.coords)
        if (!c.is_zero()) {
          ++nonzero;
          REQUIRE(c.homogeneous_degree() == 1);
        }
      REQUIRE(nonzero == 2);
    }
  }
  SECTION("the conic family has quadratic coordinates") {
    PlueckerVector pv = pluecker_coords(veronese_conic_family());
    for (const Poly& c : pv.coords)
      if (!c.is_zero()) REQUIRE(c.homogeneous_degree() == 2);
  }
  SECTION("an everywhere-degenerate family is rejected") {
    PolyMatrix rows(2, 3);
    rows(0, 0) = Poly::x();
    rows(1, 0) = Poly::y();  // both rows multiples of e_0
    REQUIRE_THROWS_AS(pluecker_coords(ParamSubspace(std::move(rows), 3)),
                      degenerate_input_error);
  }
  SECTION("signed coordinate lookups") {
    ParamSubspace fam = ci_line_family(2);
    PlueckerVector pv = pluecker_coords(fam);
    REQUIRE(pv.signed_coordinate({1, 0}) == -pv.coordinate({0, 1}));
    REQUIRE(pv.signed_coordinate({2, 2}).is_zero());
  }
}

TEST_CASE("generic rank of the named families") {
  for (int d = 1; d <= 5; ++d) REQUIRE(projective_space_line_family(d).has_generic_rank());
  for (int n = 2; n <= 5; ++n) REQUIRE(ci_line_family(n).has_generic_rank());
  REQUIRE(veronese_conic_family().has_generic_rank());
  IsotropicModel model = ci_standard_model(3);
  ParamSubspace total =
      lagrangian_extension_family(domain_pencil(model, 0, 1), model.form, model.v2);
  REQUIRE(total.has_generic_rank());
}

TEST_CASE("curve degrees") {
  SECTION("line families have degree one") {
    for (int d = 1; d <= 5; ++d) REQUIRE(curve_degree(projective_space_line_family(d)) == 1);
    for (int n = 2; n <= 5; ++n) REQUIRE(curve_degree(ci_line_family(n)) == 1);
  }
  SECTION("the conic has degree two") {
    REQUIRE(curve_degree(veronese_conic_family()) == 2);
  }
  SECTION("a constant family has degree zero") {
    PolyMatrix rows(1, 3);
    rows(0, 1) = Poly(1);
    REQUIRE(curve_degree(ParamSubspace(std::move(rows), 3)) == 0);
  }
  SECTION("gcd removal matters: a scaled pencil still has degree one") {
    // multiply the pencil row by a common linear factor in a 1-row family
    PolyMatrix rows(1, 2);
    rows(0, 0) = Poly::x() * (Poly::x() + Poly::y());
    rows(0, 1) = Poly::y() * (Poly::x() + Poly::y());
    REQUIRE(curve_degree(ParamSubspace(std::move(rows), 2)) == 1);
  }
}

TEST_CASE("quadric and plane membership") {
  BilinearForm q4 = euclidean_quadric_form(4);
  Gaussian i = Gaussian::i();
  SECTION("the two circle parametrizations satisfy their quadrics after trig reduction") {
    std::vector<Poly> c1 = {Poly(1), Poly::monomial(1, 0, i), Poly::monomial(0, 1, i), Poly(0)};
    std::vector<Poly> c2 = {Poly::x(), Poly(i), Poly::y(), Poly(0)};
    REQUIRE(quadric_membership_trig(c1, q4).member);
    REQUIRE(quadric_membership_trig(c2, q4).member);
  }
  SECTION("a visibly non-isotropic line fails") {
    std::vector<Poly> line = {Poly::x(), Poly::y(), Poly(0), Poly(0)};
    REQUIRE_FALSE(quadric_membership(line, q4).member);
  }
  SECTION("the zero curve is vacuously a member and flagged degenerate") {
    std::vector<Poly> zero(4, Poly(0));
    MembershipResult res = quadric_membership(zero, q4);
    REQUIRE(res.member);
    REQUIRE(res.degenerate);
  }
  SECTION("quadric rulings stay on the quadric for several fixed parameters") {
    for (auto [v0, v1] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 1}, {2, -3}}) {
      ParamSubspace line = quadric_ruling_line_family(Gaussian(v0), Gaussian(v1));
      std::vector<Poly> pt(4);
      for (int j = 0; j < 4; ++j) pt[j] = line.rows(0, j);
      REQUIRE(quadric_membership(pt, q4).member);
      REQUIRE(curve_degree(line) == 1);
    }
  }
  SECTION("cross-parameter identity: swapping the factors also gives rulings") {
    // v-lines through fixed [u0, u1] arise from the transposed product; check a grid of
    // evaluation points instead of building the transposed family
    ParamSubspace line = quadric_ruling_line_family(Gaussian(1), Gaussian(2));
    for (int t = -2; t <= 2; ++t) {
      std::vector<Gaussian> z(4);
      for (int j = 0; j < 4; ++j) z[j] = line.rows(0, j).evaluate(Gaussian(t), Gaussian(1));
      Gaussian val(0);
      for (int j = 0; j < 4; ++j) val += z[j] * z[j];
      REQUIRE(val.is_zero());
    }
  }
}

TEST_CASE("fixed isotropic extension") {
  SECTION("symplectic model, small ranks") {
    for (int n = 2; n <= 4; ++n) {
      IsotropicModel model = ci_standard_model(n);
      ExactMatrix l(n - 1, 2 * n);
      for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < 2 * n; ++c) l(r, c) = model.v1(r, c);
      ExactMatrix w = lagrangian_extension(l, model.form, model.v2);
      REQUIRE(w.rows() == static_cast<std::size_t>(n));
      REQUIRE(w.rank() == static_cast<std::size_t>(n));
      REQUIRE(isotropy_check(w, model.form));
    }
  }
  SECTION("split symmetric model") {
    IsotropicModel model = diii_standard_model(3);
    ExactMatrix l(2, 6);
    l(0, 0) = Gaussian(1);
    l(1, 1) = Gaussian(1);
    ExactMatrix w = lagrangian_extension(l, model.form, model.v2);
    REQUIRE(isotropy_check(w, model.form));
    // e_1, e_2 extend by the kernel direction e_6 (dual to the missing e_3)
    REQUIRE(w(2, 5) == Gaussian(1));
  }
  SECTION("non-isotropic L is rejected") {
    IsotropicModel model = diii_standard_model(2);
    ExactMatrix l(1, 4);
    l(0, 0) = Gaussian(1);
    l(0, 2) = Gaussian(1);  // e_1 + e_3 pairs with itself under S
    REQUIRE_THROWS_AS(lagrangian_extension(l, model.form, model.v2), parameter_error);
  }
  SECTION("small worked instances: L = <e_1> and L = <e_1, e_2>") {
    {
      IsotropicModel model = ci_standard_model(2);
      ExactMatrix l(1, 4);
      l(0, 0) = Gaussian(1);  // e_1
      ExactMatrix w = lagrangian_extension(l, model.form, model.v2);
      REQUIRE(w.rows() == 2);
      REQUIRE(isotropy_check(w, model.form));
      // the extension line is e_2 - e_4
      REQUIRE(w(1, 1) == Gaussian(1));
      REQUIRE(w(1, 3) == Gaussian(-1));
    }
    {
      IsotropicModel model = ci_standard_model(3);
      ExactMatrix l(2, 6);
      l(0, 0) = Gaussian(1);  // e_1
      l(1, 1) = Gaussian(1);  // e_2
      ExactMatrix w = lagrangian_extension(l, model.form, model.v2);
      REQUIRE(w.rows() == 3);
      REQUIRE(w.rank() == 3);
      REQUIRE(isotropy_check(w, model.form));
      REQUIRE(row_in_span(w, l.row(0)));
      REQUIRE(row_in_span(w, l.row(1)));
    }
  }
  SECTION("a kernel of the wrong dimension is a degeneracy error") {
    IsotropicModel model = ci_standard_model(2);
    ExactMatrix l(1, 4);
    for (int c = 0; c < 4; ++c) l(0, c) = model.v2(0, c);  // L inside V2 itself
    REQUIRE_THROWS_AS(lagrangian_extension(l, model.form, model.v2), degenerate_input_error);
  }
}

TEST_CASE("moving isotropic extension") {
  SECTION("polynomial kernel vector annihilates its matrix") {
    PolyMatrix m(2, 3);
    m(0, 0) = Poly::x();
    m(0, 1) = Poly::y();
    m(1, 2) = Poly(1);
    m(1, 0) = Poly::x() + Poly::y();
    std::vector<Poly> w = polynomial_kernel_vector(m);
    for (std::size_t i = 0; i < 2; ++i) {
      Poly dot;
      for (std::size_t j = 0; j < 3; ++j) dot += m(i, j) * w[j];
      REQUIRE(dot.is_zero());
    }
  }
  SECTION("every coordinate pencil maps to a degree-2 curve") {
    for (int n = 2; n <= 4; ++n) {
      for (auto model : {ci_standard_model(n), diii_standard_model(n)}) {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            ParamSubspace line = domain_pencil(model, i, j);
            ParamSubspace total = lagrangian_extension_family(line, model.form, model.v2);
            REQUIRE(family_isotropy_check(total, model.form));
            REQUIRE(curve_degree(total) == 2);
          }
      }
    }
  }
  SECTION("a generic rational pencil also gives degree two") {
    IsotropicModel model = ci_standard_model(3);
    Matrix<Gaussian> fixed(1, 3);
    fixed(0, 0) = Gaussian(1);
    fixed(0, 1) = Gaussian(2);
    fixed(0, 2) = Gaussian(-1);
    std::vector<Gaussian> a = {Gaussian(1), Gaussian(0), Gaussian(1)};
    std::vector<Gaussian> b = {Gaussian(0), Gaussian(1), Gaussian(Rational(1, 2))};
    ParamSubspace line = domain_pencil_general(model, fixed, a, b);
    ParamSubspace total = lagrangian_extension_family(line, model.form, model.v2);
    REQUIRE(curve_degree(total) == 2);
  }
  SECTION("degree splits one plus one") {
    IsotropicModel model = diii_standard_model(3);
    ParamSubspace line = domain_pencil(model, 0, 2);
    ParamSubspace total = lagrangian_extension_family(line, model.form, model.v2);
    PolyMatrix last(1, total.ambient);
    for (int c = 0; c < total.ambient; ++c) last(0, c) = total.rows(2, c);
    REQUIRE(curve_degree(line) == 1);
    REQUIRE(curve_degree(ParamSubspace(std::move(last), total.ambient)) == 1);
    REQUIRE(curve_degree(total) == 2);
  }
}

TEST_CASE("hyperplane witness search") {
  SECTION("standard configurations, both forms") {
    for (int n = 2; n <= 4; ++n) {
      for (auto model : {ci_standard_model(n), diii_standard_model(n)}) {
        std::vector<Gaussian> v(2 * n);
        for (int c = 0; c < 2 * n; ++c) v[c] = model.v2(0, c);
        ExactMatrix w = hyperplane_witness(n, v, model.v1, model.form);
        REQUIRE(w.rows() == static_cast<std::size_t>(n));
        REQUIRE_FALSE(isotropy_check(w, model.form));
        REQUIRE(row_in_span(w, v));
      }
    }
  }
  SECTION("v inside L is a parameter error") {
    IsotropicModel model = ci_standard_model(2);
    std::vector<Gaussian> v(4);
    for (int c = 0; c < 4; ++c) v[c] = model.v1(0, c);
    REQUIRE_THROWS_AS(hyperplane_witness(2, v, model.v1, model.form), parameter_error);
  }
  SECTION("non-isotropic v is a parameter error under a symmetric form") {
    IsotropicModel model = diii_standard_model(2);
    std::vector<Gaussian> v(4);
    v[0] = Gaussian(1);
    v[2] = Gaussian(1);  // S(v, v) = 2
    REQUIRE_THROWS_AS(hyperplane_witness(2, v, model.v1, model.form), parameter_error);
  }
}

TEST_CASE("grassmann exchange relations hold identically") {
  std::vector<ParamSubspace> families = {ci_line_family(2), projective_space_line_family(3)};
  IsotropicModel model = diii_standard_model(2);
  families.push_back(
      lagrangian_extension_family(domain_pencil(model, 0, 1), model.form, model.v2));
  for (const auto& fam : families) {
    PlueckerVector pv = pluecker_coords(fam);
    if (pv.k < 2) continue;
    for (const auto& a_set : column_subsets(fam.ambient, pv.k - 1))
      for (const auto& b_set : column_subsets(fam.ambient, pv.k + 1))
        REQUIRE(grassmann_relation_residual(pv, a_set, b_set).is_zero());
  }
}

TEST_CASE("degree invariance properties") {
  ParamSubspace fam = ci_line_family(3);
  int base = curve_degree(fam);
  SECTION("projective reparametrization") {
    for (auto [a, b, c, d] :
         std::vector<std::array<int, 4>>{{1, 1, 0, 1}, {2, -1, 1, 3}, {0, 1, 1, 0}}) {
      ParamSubspace rep = reparametrize(fam, Gaussian(a), Gaussian(b), Gaussian(c), Gaussian(d));
      REQUIRE(curve_degree(rep) == base);
    }
    REQUIRE_THROWS_AS(
        reparametrize(fam, Gaussian(1), Gaussian(2), Gaussian(2), Gaussian(4)),
        parameter_error);
  }
  SECTION("row operations among equal-degree rows") {
    PolyMatrix rows = fam.rows;
    for (std::size_t c = 0; c < rows.cols(); ++c) {
      Poly tmp = rows(0, c) + Poly(Gaussian(7)) * rows(1, c);
      rows(1, c) = rows(1, c) + Poly(Gaussian(Rational(1, 3))) * rows(0, c);
      rows(0, c) = tmp;
    }
    REQUIRE(curve_degree(ParamSubspace(std::move(rows), fam.ambient)) == base);
  }
}
