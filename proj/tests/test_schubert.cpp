#include <catch2/catch_amalgamated.hpp>

#include "cartan/pluecker.hpp"  // column_subsets
#include "cartan/root_system.hpp"
#include "cartan/schubert.hpp"

using namespace cartan;

TEST_CASE("schubert index validation") {
  REQUIRE_THROWS_AS(SchubertIndex({2, 2}, 4), parameter_error);
  REQUIRE_THROWS_AS(SchubertIndex({3, 1}, 4), parameter_error);
  REQUIRE_THROWS_AS(SchubertIndex({0, 5}, 4), parameter_error);
  REQUIRE_THROWS_AS(SchubertIndex({}, 4), parameter_error);
  REQUIRE(SchubertIndex({0, 2, 4}, 4).d() == 2);
}

TEST_CASE("cell dimension") {
  SECTION("the linear subvariety index has dimension d+1") {
    for (int d = 0; d <= 10; ++d)
      REQUIRE(schubert_dimension(linear_subvariety_index(d, d + 2)) == d + 1);
  }
  SECTION("the point index has dimension 0") {
    REQUIRE(schubert_dimension(point_index(3, 6)) == 0);
  }
  SECTION("the full Grassmannian index gives (d+1)(n-d)") {
    for (int n = 1; n <= 6; ++n)
      for (int d = 0; d < n; ++d) {
        std::vector<int> top(d + 1);
        for (int i = 0; i <= d; ++i) top[i] = n - d + i;
        REQUIRE(schubert_dimension(SchubertIndex(top, n)) == (d + 1) * (n - d));
      }
  }
}

TEST_CASE("closed-form degree") {
  SECTION("linear subvarieties have degree one") {
    for (int d = 0; d <= 10; ++d)
      REQUIRE(schubert_degree(linear_subvariety_index(d, d + 2)) == 1);
  }
  SECTION("the point class has degree one by the 0! convention") {
    REQUIRE(schubert_degree(point_index(4, 7)) == 1);
  }
  SECTION("the Pluecker quadric") {
    REQUIRE(schubert_degree(SchubertIndex({2, 3}, 3)) == 2);
  }
  SECTION("a frozen oracle value") {
    // two Pieri steps from (1,3) reach the point class twice
    SchubertIndex idx({1, 3}, 3);
    REQUIRE(pieri_degree_oracle(idx) == 2);
    REQUIRE(schubert_degree(idx) == 2);
  }
}

TEST_CASE("pieri multiplication") {
  SECTION("one step from (0,2) in Gr(1,3)") {
    CohomologyClass c = CohomologyClass::of(SchubertIndex({0, 2}, 3));
    CohomologyClass step = pieri_multiply(c);
    REQUIRE(step.coefficients().size() == 1);  // (0,1); the drop to (-1,2) is invalid
    REQUIRE(step.coefficient(SchubertIndex({0, 1}, 3)) == 1);
    CohomologyClass c2 = CohomologyClass::of(SchubertIndex({1, 2}, 3));
    CohomologyClass step2 = pieri_multiply(c2);
    REQUIRE(step2.coefficient(SchubertIndex({0, 2}, 3)) == 1);
  }
  SECTION("the point class multiplies to zero") {
    CohomologyClass point = CohomologyClass::of(point_index(2, 5));
    REQUIRE(pieri_multiply(point).is_zero());
  }
  SECTION("coefficients stay nonnegative along every iteration") {
    SchubertIndex idx({1, 3, 5}, 5);
    CohomologyClass c = CohomologyClass::of(idx);
    for (long s = 0; s < schubert_dimension(idx); ++s) {
      c = pieri_multiply(c);
      for (const auto& [a, coeff] : c.coefficients()) REQUIRE(coeff > 0);
    }
  }
  SECTION("degree additivity: the weighted total degree is conserved by each step") {
    // a hyperplane section preserves degree while dimension >= 1, so the sum
    // of coefficient * degree is invariant along the whole iteration
    for (SchubertIndex idx : {SchubertIndex({1, 3, 5}, 5), SchubertIndex({0, 2, 4}, 5),
                              SchubertIndex({2, 3}, 4)}) {
      Integer total = schubert_degree(idx);
      CohomologyClass c = CohomologyClass::of(idx);
      for (long s = 0; s < schubert_dimension(idx); ++s) {
        c = pieri_multiply(c);
        Integer weighted = 0;
        for (const auto& [a, coeff] : c.coefficients())
          weighted += coeff * schubert_degree(SchubertIndex(a, idx.n));
        REQUIRE(weighted == total);
      }
    }
  }
}

TEST_CASE("oracle equivalence on a compact sweep") {
  // the verify suite runs d <= 3, n <= 7; keep the unit sweep smaller
  for (int d = 0; d <= 2; ++d)
    for (int n = d + 1; n <= 5; ++n)
      for (const auto& cols : column_subsets(n + 1, d + 1)) {
        SchubertIndex idx(cols, n);
        INFO("index " << idx.str() << " in P^" << n);
        REQUIRE(schubert_degree(idx) == pieri_degree_oracle(idx));
      }
}

TEST_CASE("raising convention and index duality") {
  SECTION("the raising step from (0,2) in Gr(1,3)") {
    CohomologyClass c = CohomologyClass::of(SchubertIndex({0, 2}, 3));
    CohomologyClass up = pieri_multiply_raising(c);
    REQUIRE(up.coefficients().size() == 2);
    REQUIRE(up.coefficient(SchubertIndex({0, 3}, 3)) == 1);
    REQUIRE(up.coefficient(SchubertIndex({1, 2}, 3)) == 1);
  }
  SECTION("raising and lowering are adjoint under the coefficient pairing") {
    int n = 4, d = 1;
    auto pairing = [](const CohomologyClass& x, const CohomologyClass& y) {
      Integer s = 0;
      for (const auto& [a, cx] : x.coefficients()) {
        auto it = y.coefficients().find(a);
        if (it != y.coefficients().end()) s += cx * it->second;
      }
      return s;
    };
    for (const auto& xa : column_subsets(n + 1, d + 1))
      for (const auto& ya : column_subsets(n + 1, d + 1)) {
        CohomologyClass x = CohomologyClass::of(SchubertIndex(xa, n));
        CohomologyClass y = CohomologyClass::of(SchubertIndex(ya, n));
        REQUIRE(pairing(pieri_multiply_raising(x), y) == pairing(x, pieri_multiply(y)));
      }
  }
  SECTION("iterated raising computes the dual class degree") {
    for (int n = 2; n <= 5; ++n)
      for (const auto& cols : column_subsets(n + 1, 2)) {
        SchubertIndex idx(cols, n);
        SchubertIndex dual = dual_index(idx);
        long codim = schubert_dimension(dual);  // = dim Gr - dim idx
        CohomologyClass c = CohomologyClass::of(idx);
        for (long s = 0; s < codim; ++s) c = pieri_multiply_raising(c);
        std::vector<int> top = {n - 1, n};
        REQUIRE(c.coefficient(SchubertIndex(top, n)) == schubert_degree(dual));
      }
  }
  SECTION("duality is an involution and swaps dimension with codimension") {
    SchubertIndex idx({1, 3, 4}, 6);
    REQUIRE(dual_index(dual_index(idx)) == idx);
    long dim_gr = schubert_dimension(SchubertIndex({4, 5, 6}, 6));
    REQUIRE(schubert_dimension(idx) + schubert_dimension(dual_index(idx)) == dim_gr);
  }
}

TEST_CASE("line index readings") {
  for (int d = 1; d <= 6; ++d) {
    SchubertIndex line = line_in_linear_subvariety_index(d, d + 2);
    REQUIRE(schubert_dimension(line) == 1);
    REQUIRE(schubert_degree(line) == 1);
    SchubertIndex alt = line_in_linear_subvariety_index_alt(d, d + 2);
    REQUIRE(schubert_dimension(alt) == 2);  // the literal reading is a surface, not a line
  }
}

TEST_CASE("dimension agrees with the parabolic root count") {
  for (int n = 1; n <= 6; ++n) {
    RootSystem rs = RootSystem::build(LieType::A, n);
    for (int d = 0; d < n; ++d) {
      std::vector<int> top(d + 1);
      for (int i = 0; i <= d; ++i) top[i] = n - d + i;
      REQUIRE(schubert_dimension(SchubertIndex(top, n)) ==
              parabolic_split(rs, d + 1).complex_dimension());
    }
  }
}
