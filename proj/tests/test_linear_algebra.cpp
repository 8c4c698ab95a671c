#include <catch2/catch_amalgamated.hpp>

#include "cartan/gaussian.hpp"
#include "cartan/matrix.hpp"

using namespace cartan;
using ExactMatrix = Matrix<Gaussian>;

TEST_CASE("gaussian rational field operations") {
  Gaussian i = Gaussian::i();
  REQUIRE(i * i == Gaussian(-1));
  REQUIRE((Gaussian(3) + i) * (Gaussian(3) - i) == Gaussian(10));

  Gaussian q(Rational(1, 2), Rational(-3, 4));
  REQUIRE(q / q == Gaussian(1));
  REQUIRE((q * q.conj()).is_real());
  REQUIRE_THROWS_AS(q / Gaussian(0), parameter_error);

  SECTION("string forms used by the JSON dump") {
    REQUIRE(Gaussian(Rational(1, 3)).str() == "1/3");
    REQUIRE(i.str() == "i");
    REQUIRE((-i).str() == "-i");
    REQUIRE(Gaussian(Rational(2), Rational(-1)).str() == "2-i");
  }
}

TEST_CASE("matrix arithmetic and determinants") {
  ExactMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  b(0, 0) = 0; b(0, 1) = 1; b(1, 0) = 1; b(1, 1) = 0;
  REQUIRE((a * b)(0, 0) == Gaussian(2));
  REQUIRE(a.det() == Gaussian(-2));
  REQUIRE((a * b).det() == Gaussian(2));
  REQUIRE(a.transpose()(0, 1) == Gaussian(3));
  REQUIRE_THROWS_AS(ExactMatrix(2, 3).det(), parameter_error);

  SECTION("4x4 determinant against the permutation expansion") {
    ExactMatrix m(4, 4);
    int counter = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = Gaussian((counter * counter + 3 * i - j) % 7);
    // Laplace along the last row must agree with expansion along the first.
    Gaussian along_last(0);
    for (int c = 0; c < 4; ++c) {
      ExactMatrix sub(3, 3);
      for (int i = 0; i < 3; ++i) {
        int cc = 0;
        for (int j = 0; j < 4; ++j)
          if (j != c) sub(i, cc++) = m(i, j);
      }
      Gaussian term = m(3, c) * sub.det();
      along_last += ((3 + c) % 2 == 0) ? term : -term;
    }
    REQUIRE(m.det() == along_last);
  }
}

TEST_CASE("row reduction, rank and kernels") {
  ExactMatrix m(3, 4);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 0; m(0, 3) = 1;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 1; m(1, 3) = 0;
  m(2, 0) = 3; m(2, 1) = 6; m(2, 2) = 1; m(2, 3) = 1;  // row0 + row1
  REQUIRE(m.rank() == 2);

  ExactMatrix k = m.kernel_basis();
  REQUIRE(k.rows() == 2);
  for (std::size_t r = 0; r < k.rows(); ++r)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Gaussian dot(0);
      for (std::size_t j = 0; j < 4; ++j) dot += m(i, j) * k(r, j);
      REQUIRE(dot.is_zero());
    }
}

TEST_CASE("span solver answers membership and coordinates") {
  ExactMatrix basis(2, 4);
  basis(0, 0) = 1; basis(0, 2) = Gaussian(Rational(1, 3));
  basis(1, 1) = Gaussian::i(); basis(1, 3) = 2;
  SpanSolver<Gaussian> span(basis);
  REQUIRE(span.rank() == 2);

  std::vector<Gaussian> v(4);
  v[0] = 2; v[1] = Gaussian(0, 1) * Gaussian(5); v[2] = Gaussian(Rational(2, 3)); v[3] = 10;
  REQUIRE(span.contains(v));
  auto coords = span.coordinates(v);
  REQUIRE(coords.has_value());
  REQUIRE((*coords)[0] == Gaussian(2));
  REQUIRE((*coords)[1] == Gaussian(5));

  std::vector<Gaussian> w(4);
  w[2] = 1;
  REQUIRE_FALSE(span.contains(w));
  REQUIRE_FALSE(span.coordinates(w).has_value());
  REQUIRE(row_in_span(basis, v));
  REQUIRE_FALSE(row_in_span(basis, w));
}
