#include <catch2/catch_amalgamated.hpp>

#include "cartan/matrix_lie.hpp"

using namespace cartan;

namespace {

ExactMatrix elementary(int n, int a, int b) {  // E_ab, 0-based
  ExactMatrix e(n, n);
  e(a, b) = Gaussian(1);
  return e;
}

}  // namespace

TEST_CASE("bracket basics") {
  ExactMatrix e12 = elementary(2, 0, 1), e21 = elementary(2, 1, 0);
  REQUIRE(bracket(e12, e12).is_zero());
  ExactMatrix h = bracket(e12, e21);
  REQUIRE(h(0, 0) == Gaussian(1));
  REQUIRE(h(1, 1) == Gaussian(-1));
  REQUIRE_THROWS_AS(bracket(ExactMatrix(2, 2), ExactMatrix(3, 3)), parameter_error);

  SECTION("jacobi identity spot check") {
    ExactMatrix a = elementary(3, 0, 1) - elementary(3, 1, 0);
    ExactMatrix b = elementary(3, 1, 2) - elementary(3, 2, 1);
    ExactMatrix c = elementary(3, 0, 2);
    ExactMatrix cycle = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
                        bracket(bracket(c, a), b);
    REQUIRE(cycle.is_zero());
  }
}

TEST_CASE("orthogonal cartan pair construction") {
  SECTION("block shapes and sizes") {
    CartanPair cp = bdi_cartan_pair(3);
    REQUIRE(cp.p_basis.size() == 6);
    REQUIRE(cp.k_basis.size() == 1 + 3);  // so(2) + so(3)
    REQUIRE(cp.ambient_label == "so(5)");
    for (const auto& m : cp.k_basis) REQUIRE((m + m.transpose()).is_zero());
    for (const auto& m : cp.p_basis) REQUIRE((m + m.transpose()).is_zero());
  }
  SECTION("J sends (xi = e1, 0) to (0, e1) and squares to minus one") {
    CartanPair cp = bdi_cartan_pair(3);
    ExactMatrix jx = cp.apply_complex_structure(cp.p_basis[0]);
    REQUIRE(jx == cp.p_basis[3]);  // Y_1 slot
    ExactMatrix jjx = cp.apply_complex_structure(jx);
    REQUIRE(jjx == Gaussian(-1) * cp.p_basis[0]);
  }
  SECTION("[p, p] lands in k") {
    CartanPair cp = bdi_cartan_pair(4);
    SpanSolver<Gaussian> k_span(flatten_basis(cp.k_basis));
    for (const auto& a : cp.p_basis)
      for (const auto& b : cp.p_basis) REQUIRE(k_span.contains(flatten(bracket(a, b))));
  }
  SECTION("parameter validation") { REQUIRE_THROWS_AS(bdi_cartan_pair(1), parameter_error); }
}

TEST_CASE("lie triple systems") {
  SECTION("all of p") {
    CartanPair cp = bdi_cartan_pair(4);
    REQUIRE(is_lie_triple_system(cp.p_basis, cp).is_triple_system);
  }
  SECTION("the corner so(3) tangent family in so(4)") {
    CartanPair cp = bdi_cartan_pair(2);
    // the corner family: xi = (a, 0), eta = (b, 0)
    std::vector<ExactMatrix> family = {cp.p_basis[0], cp.p_basis[2]};
    auto res = is_lie_triple_system(family, cp);
    REQUIRE(res.is_triple_system);
    REQUIRE(is_j_stable(family, cp));
  }
  SECTION("frozen regression: a real 2-plane is closed but not J-stable") {
    CartanPair cp = bdi_cartan_pair(3);
    std::vector<ExactMatrix> real_plane = {cp.p_basis[0], cp.p_basis[1]};  // (e1,0), (e2,0)
    REQUIRE(is_lie_triple_system(real_plane, cp).is_triple_system);
    REQUIRE_FALSE(is_j_stable(real_plane, cp));
  }
  SECTION("a single real direction is not J-stable") {
    CartanPair cp = bdi_cartan_pair(3);
    REQUIRE_FALSE(is_j_stable({cp.p_basis[0]}, cp));
  }
  SECTION("a non-triple-system reports a witness") {
    CartanPair cp = bdi_cartan_pair(3);
    // the skew plane span{(e1, e2), (e2, 0)} fails closure
    std::vector<ExactMatrix> family = {cp.p_basis[0] + cp.p_basis[4], cp.p_basis[1]};
    auto res = is_lie_triple_system(family, cp);
    REQUIRE_FALSE(res.is_triple_system);
    REQUIRE(res.witness.has_value());
    auto [i, j, k] = *res.witness;
    // recompute the quoted double bracket and confirm it escapes the span
    ExactMatrix dbl = bracket(bracket(family[i], family[j]), family[k]);
    REQUIRE_FALSE(row_in_span(flatten_basis(family), flatten(dbl)));
  }
  SECTION("vectors outside p are rejected") {
    CartanPair cp = bdi_cartan_pair(3);
    REQUIRE_THROWS_AS(is_lie_triple_system({cp.k_basis[0]}, cp), parameter_error);
  }
  SECTION("flag consistency on pseudo-random even-dimensional subspaces") {
    for (int m = 3; m <= 5; ++m) {
      CartanPair cp = bdi_cartan_pair(m);
      int dim_p = static_cast<int>(cp.p_basis.size());
      for (int seed = 0; seed < 8; ++seed) {
        // deterministic small-coefficient 2-plane inside p
        ExactMatrix a(cp.ambient_size(), cp.ambient_size());
        ExactMatrix b(cp.ambient_size(), cp.ambient_size());
        for (int i = 0; i < dim_p; ++i) {
          int ca = ((seed + 1) * (i + 2) * 7) % 5 - 2;
          int cb = ((seed + 3) * (i + 1) * 11) % 5 - 2;
          if (ca != 0) a += Gaussian(ca) * cp.p_basis[i];
          if (cb != 0) b += Gaussian(cb) * cp.p_basis[i];
        }
        if (a.is_zero() || b.is_zero()) continue;
        std::vector<ExactMatrix> family = {a, b};
        if (flatten_basis(family).rank() != 2) continue;
        auto res = is_lie_triple_system(family, cp);
        bool j_stable = is_j_stable(family, cp);
        if (j_stable) {
          // J preserves the plane exactly: the J-images span the same plane
          std::vector<ExactMatrix> enlarged = {a, b, cp.apply_complex_structure(a),
                                               cp.apply_complex_structure(b)};
          REQUIRE(flatten_basis(enlarged).rank() == 2);
        }
        if (res.is_triple_system) {
          REQUIRE_FALSE(res.witness.has_value());
        } else {
          REQUIRE(res.witness.has_value());
        }
      }
    }
  }
}

TEST_CASE("rotation bracket of the corner generators") {
  ExactMatrix x1(4, 4), x2(4, 4);
  x1(0, 2) = Gaussian(-1); x1(2, 0) = Gaussian(1);
  x2(1, 2) = Gaussian(-1); x2(2, 1) = Gaussian(1);
  ExactMatrix want(4, 4);
  want(1, 0) = Gaussian(1);
  want(0, 1) = Gaussian(-1);
  REQUIRE(bracket(x1, x2) == want);
}

TEST_CASE("doubling embedding su -> so") {
  SECTION("pure symmetric part gives the block form") {
    ExactMatrix a(2, 2), b(2, 2);
    b(0, 0) = Gaussian(1);
    b(1, 1) = Gaussian(-1);
    ExactMatrix img = su_to_so(a, b);
    REQUIRE(img.rows() == 4);
    REQUIRE((img + img.transpose()).is_zero());
    REQUIRE(img(0, 2) == Gaussian(1));
    REQUIRE(img(2, 0) == Gaussian(-1));
  }
  SECTION("bracket preservation on exact su(3) pairs") {
    ExactMatrix a1(3, 3), b1(3, 3), a2(3, 3), b2(3, 3);
    a1(0, 1) = Gaussian(Rational(2, 3)); a1(1, 0) = Gaussian(Rational(-2, 3));
    b1(0, 2) = Gaussian(Rational(1, 2)); b1(2, 0) = Gaussian(Rational(1, 2));
    a2(1, 2) = Gaussian(5); a2(2, 1) = Gaussian(-5);
    b2(0, 0) = Gaussian(1); b2(1, 1) = Gaussian(1); b2(2, 2) = Gaussian(-2);
    Gaussian i = Gaussian::i();
    auto compose = [&](const ExactMatrix& a, const ExactMatrix& b) {
      ExactMatrix x = a;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) x(r, c) += i * b(r, c);
      return x;
    };
    ExactMatrix xy = bracket(compose(a1, b1), compose(a2, b2));
    ExactMatrix re(3, 3), im(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        re(r, c) = Gaussian(xy(r, c).re);
        im(r, c) = Gaussian(xy(r, c).im);
      }
    REQUIRE(su_to_so(re, im) == bracket(su_to_so(a1, b1), su_to_so(a2, b2)));
  }
  SECTION("the su(2) image spans a three-dimensional subalgebra of so(4)") {
    ExactMatrix a(2, 2), bsym(2, 2), bdiag(2, 2);
    a(0, 1) = Gaussian(1); a(1, 0) = Gaussian(-1);
    bsym(0, 1) = Gaussian(1); bsym(1, 0) = Gaussian(1);
    bdiag(0, 0) = Gaussian(1); bdiag(1, 1) = Gaussian(-1);
    ExactMatrix zero(2, 2);
    std::vector<ExactMatrix> image = {su_to_so(a, zero), su_to_so(zero, bsym),
                                      su_to_so(zero, bdiag)};
    ExactMatrix span = flatten_basis(image);
    REQUIRE(span.rank() == 3);
    SpanSolver<Gaussian> solver(span);
    for (const auto& u : image)
      for (const auto& v : image) REQUIRE(solver.contains(flatten(bracket(u, v))));
  }
  SECTION("input validation") {
    ExactMatrix not_skew(2, 2), sym(2, 2), traceful(2, 2), zero(2, 2);
    not_skew(0, 1) = Gaussian(1);
    sym(0, 1) = Gaussian(1); sym(1, 0) = Gaussian(1);
    traceful(0, 0) = Gaussian(1);
    REQUIRE_THROWS_AS(su_to_so(not_skew, sym), parameter_error);
    REQUIRE_THROWS_AS(su_to_so(zero, traceful), parameter_error);
    ExactMatrix complex_entry(2, 2);
    complex_entry(0, 1) = Gaussian::i();
    complex_entry(1, 0) = -Gaussian::i();
    REQUIRE_THROWS_AS(su_to_so(complex_entry, zero), parameter_error);
  }
}

TEST_CASE("bilinear forms and isotropy") {
  SECTION("form constructors validate their symmetry kind") {
    REQUIRE_THROWS_AS(BilinearForm(elementary(2, 0, 1), BilinearForm::Kind::symmetric),
                      parameter_error);
    ExactMatrix degenerate(2, 2);
    REQUIRE_THROWS_AS(BilinearForm(degenerate, BilinearForm::Kind::symmetric), parameter_error);
  }
  SECTION("standard lagrangians of the symplectic form") {
    int n = 3;
    BilinearForm omega = symplectic_form(n);
    ExactMatrix v1(n, 2 * n), v2(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      v1(i, n + i) = Gaussian(1);                          // z_1 = ... = z_n = 0
      v2(i, i) = Gaussian(1); v2(i, n + i) = Gaussian(-1); // z_i + z_{n+i} = 0
    }
    REQUIRE(isotropy_check(v1, omega));
    REQUIRE(isotropy_check(v2, omega));
  }
  SECTION("a dual pair under the split symmetric form is not isotropic") {
    int n = 3;
    BilinearForm s = split_symmetric_form(n);
    ExactMatrix dual(2, 2 * n);
    dual(0, 0) = Gaussian(1);   // e_1
    dual(1, n) = Gaussian(1);   // e_{n+1}
    REQUIRE_FALSE(isotropy_check(dual, s));
    REQUIRE(s.evaluate(dual.row(0), dual.row(1)) == Gaussian(1));
  }
  SECTION("size mismatch") {
    BilinearForm s = split_symmetric_form(2);
    std::vector<Gaussian> bad(3);
    REQUIRE_THROWS_AS(s.evaluate(bad, bad), parameter_error);
  }
}
