#ifndef CARTAN_VERIFY_HPP
#define CARTAN_VERIFY_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cartan/hss_catalog.hpp"
#include "cartan/matrix_lie.hpp"
#include "cartan/pluecker.hpp"
#include "cartan/rep_theory.hpp"
#include "cartan/root_system.hpp"
#include "cartan/schubert.hpp"

namespace cartan::verify {

struct CheckResult {
  std::string id;     // stable, sorted identifier
  std::string scope;  // roots | rep | schubert | lie | pluecker | hss
  std::string claim;  // the mathematical statement being reproduced
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int total = 0, passed = 0, failed = 0;
};

/// Sweep caps, scaled down by the CARTAN_VERIFY_CAP environment variable for
/// constrained CI runs.  The defaults reproduce everything at full size.
struct Caps {
  int rank = 8;        // root-system / catalog parameter sweeps
  int schubert_n = 7;  // ambient P^n for the exhaustive degree sweep
  int bdi_m = 8;       // Cartan-pair sweep
  int embed_n = 4;     // isotropic-embedding sweep

  static Caps from_environment() {
    Caps c;
    if (const char* env = std::getenv("CARTAN_VERIFY_CAP")) {
      int cap = std::atoi(env);
      if (cap >= 2) {
        c.rank = std::min(c.rank, cap);
        c.schubert_n = std::min(c.schubert_n, cap);
        c.bdi_m = std::min(c.bdi_m, cap);
        c.embed_n = std::min(c.embed_n, cap);
      }
    }
    return c;
  }
};

namespace detail {

class Runner {
 public:
  explicit Runner(VerifyReport& rep) : rep_(rep) {}

  void add(const std::string& id, const std::string& scope, const std::string& claim,
           const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r;
    r.id = id;
    r.scope = scope;
    r.claim = claim;
    try {
      auto [ok, detail] = body();
      r.pass = ok;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    rep_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& rep_;
};

inline std::pair<bool, std::string> all_of(int checked, bool ok, const std::string& bad = "") {
  if (ok) return {true, std::to_string(checked) + " cases"};
  return {false, bad.empty() ? "failed" : bad};
}

// ── roots ────────────────────────────────────────────────────────────────

inline void roots_checks(Runner& run, const Caps& caps) {
  run.add("roots.010.counts", "roots", "|Phi+| matches the classical count for every type",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int l = 1; l <= caps.rank; ++l) {
              auto n = RootSystem::build(LieType::A, l).positive_roots().size();
              if (static_cast<int>(n) != positive_root_count(LieType::A, l))
                return {false, "A_" + std::to_string(l)};
              ++cases;
            }
            for (int l = 2; l <= caps.rank; ++l)
              for (LieType t : {LieType::B, LieType::C}) {
                auto n = RootSystem::build(t, l).positive_roots().size();
                if (static_cast<int>(n) != positive_root_count(t, l))
                  return {false, to_string(t) + "_" + std::to_string(l)};
                ++cases;
              }
            for (int l = 3; l <= caps.rank; ++l) {
              auto n = RootSystem::build(LieType::D, l).positive_roots().size();
              if (static_cast<int>(n) != positive_root_count(LieType::D, l))
                return {false, "D_" + std::to_string(l)};
              ++cases;
            }
            if (RootSystem::build(LieType::E6, 6).positive_roots().size() != 36)
              return {false, "E6"};
            if (RootSystem::build(LieType::E7, 7).positive_roots().size() != 63)
              return {false, "E7"};
            return all_of(cases + 2, true);
          });

  run.add("roots.020.closure-idempotent", "roots",
          "re-running the reflection closure adds no roots",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (LieType t : {LieType::A, LieType::D, LieType::E6, LieType::E7}) {
              int l = (t == LieType::E6) ? 6 : (t == LieType::E7) ? 7 : 5;
              RootSystem rs = RootSystem::build(t, l);
              auto roots = rs.positive_roots();
              std::set<std::vector<int>> seen;
              for (const auto& r : roots) seen.insert(r.coeffs);
              if (rs.closure_step(roots, seen) != 0) return {false, to_string(t)};
              ++cases;
            }
            return all_of(cases, true);
          });

  run.add("roots.030.delta-pairing", "roots",
          "<delta, alpha-check> = 1 on simple roots; = height for simply-laced",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E6,
                              LieType::E7}) {
              int l = (t == LieType::E6) ? 6 : (t == LieType::E7) ? 7 : 5;
              RootSystem rs = RootSystem::build(t, l);
              DominantWeight zero = DominantWeight::zero(l);
              for (const Root& alpha : rs.positive_roots()) {
                long pair = coroot_pairing(rs, zero, alpha, true);
                if (alpha.is_simple() && pair != 1) return {false, to_string(t) + " simple"};
                if (rs.is_simply_laced() && pair != alpha.height())
                  return {false, to_string(t) + " height"};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("roots.040.parabolic-grassmannian", "roots",
          "|Phi(n+)| = r(l+1-r) for (A_l, alpha_r)",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int l = 1; l <= caps.rank; ++l) {
              RootSystem rs = RootSystem::build(LieType::A, l);
              for (int r = 1; r <= l; ++r) {
                if (parabolic_split(rs, r).complex_dimension() != r * (l + 1 - r))
                  return {false, "A_" + std::to_string(l) + " r=" + std::to_string(r)};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("roots.050.parabolic-partition", "roots",
          "Levi positives and nilradical partition Phi+",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E6,
                              LieType::E7}) {
              int l = (t == LieType::E6) ? 6 : (t == LieType::E7) ? 7 : std::min(5, caps.rank);
              RootSystem rs = RootSystem::build(t, l);
              for (int r = 1; r <= l; ++r) {
                ParabolicSplit ps = parabolic_split(rs, r);
                if (ps.levi_positive.size() + ps.nilradical.size() !=
                    rs.positive_roots().size())
                  return {false, to_string(t)};
                for (const Root& root : ps.nilradical)
                  if (root.coeffs[r - 1] <= 0) return {false, to_string(t)};
                for (const Root& root : ps.levi_positive)
                  if (root.coeffs[r - 1] != 0) return {false, to_string(t)};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("roots.060.parabolic-exceptional", "roots",
          "|Phi(n+)| = 16 for (E6, alpha_1) and 27 for (E7, alpha_7)",
          [&]() -> std::pair<bool, std::string> {
            int d6 = parabolic_split(RootSystem::build(LieType::E6, 6), 1).complex_dimension();
            int d7 = parabolic_split(RootSystem::build(LieType::E7, 7), 7).complex_dimension();
            if (d6 != 16) return {false, "E6: " + std::to_string(d6)};
            if (d7 != 27) return {false, "E7: " + std::to_string(d7)};
            return {true, "16 and 27"};
          });

  run.add("roots.070.subdiagrams", "roots",
          "deleting the branch vertex: E6 -> A5, E7 -> A6; A_l end vertex -> A_{l-1}",
          [&]() -> std::pair<bool, std::string> {
            auto e6 = delete_vertices(RootSystem::build(LieType::E6, 6), {2});
            auto e7 = delete_vertices(RootSystem::build(LieType::E7, 7), {2});
            auto al = delete_vertices(RootSystem::build(LieType::A, 5), {5});
            using V = std::vector<std::pair<LieType, int>>;
            if (e6 != V{{LieType::A, 5}}) return {false, "E6"};
            if (e7 != V{{LieType::A, 6}}) return {false, "E7"};
            if (al != V{{LieType::A, 4}}) return {false, "A5"};
            return {true, "3 cases"};
          });
}

// ── rep theory ───────────────────────────────────────────────────────────

inline void rep_checks(Runner& run, const Caps& caps) {
  run.add("rep.010.fundamental-dimensions", "rep",
          "dim(lambda_i) = binomial(l+1, i) for type A",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int l = 1; l <= caps.rank; ++l) {
              RootSystem rs = RootSystem::build(LieType::A, l);
              for (int i = 1; i <= l; ++i) {
                if (weyl_dimension(rs, DominantWeight::fundamental(l, i)) !=
                    binomial(l + 1, i))
                  return {false, "l=" + std::to_string(l) + " i=" + std::to_string(i)};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("rep.020.tableau-oracle", "rep",
          "Weyl product = hook-content tableau count on all A_l weights, l <= 6, sum(m) <= 3",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            int lmax = std::min(6, caps.rank);
            for (int l = 1; l <= lmax; ++l) {
              RootSystem rs = RootSystem::build(LieType::A, l);
              std::vector<int> m(l, 0);
              std::function<std::pair<bool, std::string>(int, int)> rec =
                  [&](int pos, int budget) -> std::pair<bool, std::string> {
                if (pos == l) {
                  DominantWeight w{std::vector<int>(m)};
                  ++cases;
                  if (weyl_dimension(rs, w) != tableau_dimension(l, w))
                    return {false, "l=" + std::to_string(l)};
                  return {true, ""};
                }
                for (int v = 0; v <= budget; ++v) {
                  m[pos] = v;
                  auto r = rec(pos + 1, budget - v);
                  if (!r.first) return r;
                }
                m[pos] = 0;
                return {true, ""};
              };
              auto r = rec(0, 3);
              if (!r.first) return r;
            }
            return all_of(cases, true);
          });

  run.add("rep.030.monotone", "rep",
          "raising any weight coefficient strictly raises the dimension",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            int lmax = std::min(5, caps.rank);
            for (int l = 1; l <= lmax; ++l) {
              RootSystem rs = RootSystem::build(LieType::A, l);
              std::vector<DominantWeight> pool;
              std::vector<int> m(l, 0);
              std::function<void(int, int)> gen = [&](int pos, int budget) {
                if (pos == l) {
                  pool.push_back(DominantWeight{std::vector<int>(m)});
                  return;
                }
                for (int v = 0; v <= budget; ++v) {
                  m[pos] = v;
                  gen(pos + 1, budget - v);
                }
                m[pos] = 0;
              };
              gen(0, 2);
              for (const auto& w : pool) {
                Integer base = weyl_dimension(rs, w);
                for (int i = 0; i < l; ++i) {
                  DominantWeight up = w;
                  ++up.coeffs[i];
                  if (weyl_dimension(rs, up) <= base) return {false, "l=" + std::to_string(l)};
                  ++cases;
                }
              }
            }
            return all_of(cases, true);
          });

  run.add("rep.040.symmetric-powers", "rep",
          "dim(m * lambda_1) = binomial(l+m, m) for type A",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int l = 1; l <= std::min(6, caps.rank); ++l) {
              RootSystem rs = RootSystem::build(LieType::A, l);
              for (int mm = 0; mm <= 5; ++mm) {
                std::vector<int> w(l, 0);
                w[0] = mm;
                if (weyl_dimension(rs, DominantWeight{std::move(w)}) != binomial(l + mm, mm))
                  return {false, "l=" + std::to_string(l) + " m=" + std::to_string(mm)};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("rep.050.low-dimension-list", "rep",
          "below 2(l+1) type A_l has only the trivial, defining and dual weights (l >= 5)",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int l = 5; l <= caps.rank; ++l) {
              RootSystem rs = RootSystem::build(LieType::A, l);
              auto recs = enumerate_irreps_below(rs, Integer(2 * (l + 1)));
              std::vector<IrrepRecord> want = {
                  {DominantWeight::zero(l), 1},
                  {DominantWeight::fundamental(l, 1), l + 1},
                  {DominantWeight::fundamental(l, l), l + 1}};
              std::sort(want.begin(), want.end());
              if (recs != want) return {false, "l=" + std::to_string(l)};
              ++cases;
            }
            return all_of(cases, true);
          });

  run.add("rep.060.enumeration-frontier", "rep",
          "every pruned frontier weight really exceeds the bound",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int l = 2; l <= std::min(5, caps.rank); ++l) {
              RootSystem rs = RootSystem::build(LieType::A, l);
              Integer bound(3 * (l + 1));
              auto enumr = enumerate_irreps_below_with_frontier(rs, bound);
              for (const auto& rec : enumr.records)
                if (rec.dimension > bound) return {false, "record over bound"};
              for (const auto& rec : enumr.frontier)
                if (rec.dimension <= bound) return {false, "frontier under bound"};
              cases += static_cast<int>(enumr.records.size() + enumr.frontier.size());
            }
            return all_of(cases, true);
          });

  run.add("rep.070.trivial-summand", "rep",
          "minimal trivial summand r >= d - l - 1 on every admissible (l, d)",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int l = 4; l <= caps.rank; ++l) {
              for (long d = l + 2; d < 2L * (l + 1); ++d) {
                bool narrow = (l >= 4) && (d < 2L * l);
                bool wide = (l >= 5);
                if (!narrow && !wide) continue;
                TrivialSummandResult res = min_trivial_summand(l, d);
                if (res.r < res.lower_bound) return {false, "bound violated"};
                if (res.r != d - l - 1)
                  return {false, "expected exact bound at l=" + std::to_string(l)};
                ++cases;
              }
            }
            return all_of(cases, true);
          });
}

// ── schubert ─────────────────────────────────────────────────────────────

inline void schubert_checks(Runner& run, const Caps& caps) {
  run.add("schubert.010.linear-anchor", "schubert",
          "Omega(1,...,d+1) has cell dimension d+1 and degree 1",
          [&]() -> std::pair<bool, std::string> {
            for (int d = 0; d <= 10; ++d) {
              SchubertIndex idx = linear_subvariety_index(d, d + 2);
              if (schubert_dimension(idx) != d + 1) return {false, "dimension d=" + std::to_string(d)};
              if (schubert_degree(idx) != 1) return {false, "degree d=" + std::to_string(d)};
            }
            return {true, "d <= 10"};
          });

  run.add("schubert.020.point-class", "schubert", "the point class has dimension 0 and degree 1",
          [&]() -> std::pair<bool, std::string> {
            for (int d = 0; d <= 6; ++d) {
              SchubertIndex idx = point_index(d, d + 3);
              if (schubert_dimension(idx) != 0 || schubert_degree(idx) != 1)
                return {false, "d=" + std::to_string(d)};
            }
            return {true, "d <= 6"};
          });

  run.add("schubert.030.pieri-oracle", "schubert",
          "closed-form degree = Pieri iteration on every index with d <= 3, n <= 7",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int d = 0; d <= 3; ++d)
              for (int n = d + 1; n <= caps.schubert_n; ++n)
                for (const auto& cols : column_subsets(n + 1, d + 1)) {
                  SchubertIndex idx(cols, n);
                  if (schubert_degree(idx) != pieri_degree_oracle(idx))
                    return {false, idx.str() + " in P^" + std::to_string(n)};
                  ++cases;
                }
            return all_of(cases, true);
          });

  run.add("schubert.040.pluecker-quadric", "schubert",
          "the full Gr(1,3) has degree 2 (the Pluecker quadric)",
          [&]() -> std::pair<bool, std::string> {
            SchubertIndex idx({2, 3}, 3);
            if (schubert_dimension(idx) != 4) return {false, "dimension"};
            if (schubert_degree(idx) != 2) return {false, "degree"};
            return {true, "deg = 2"};
          });

  run.add("schubert.050.cross-module-dimension", "schubert",
          "dim Gr(d,n) from the index formula equals the parabolic root count",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int n = 1; n <= caps.schubert_n; ++n) {
              RootSystem rs = RootSystem::build(LieType::A, n);
              for (int d = 0; d < n; ++d) {
                SchubertIndex full = SchubertIndex(column_subsets(n + 1, d + 1).back(), n);
                if (schubert_dimension(full) !=
                    parabolic_split(rs, d + 1).complex_dimension())
                  return {false, "d=" + std::to_string(d) + " n=" + std::to_string(n)};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("schubert.060.line-index-readings", "schubert",
          "adopted line index has dimension 1 and degree 1; the bumped variant has dimension 2",
          [&]() -> std::pair<bool, std::string> {
            for (int d = 1; d <= 6; ++d) {
              SchubertIndex line = line_in_linear_subvariety_index(d, d + 2);
              if (schubert_dimension(line) != 1 || schubert_degree(line) != 1)
                return {false, "adopted d=" + std::to_string(d)};
              SchubertIndex alt = line_in_linear_subvariety_index_alt(d, d + 2);
              if (schubert_dimension(alt) != 2) return {false, "alt d=" + std::to_string(d)};
            }
            return {true, "d <= 6"};
          });
}

// ── matrix lie ───────────────────────────────────────────────────────────

inline void lie_checks(Runner& run, const Caps& caps) {
  run.add("lie.010.cartan-pair-invariants", "lie",
          "[k,k] in k, [k,p] in p, [p,p] in k, J^2 = -1, J commutes with ad(k)",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int m = 2; m <= caps.bdi_m; ++m) {
              CartanPair cp = bdi_cartan_pair(m);
              SpanSolver<Gaussian> k_span(flatten_basis(cp.k_basis));
              SpanSolver<Gaussian> p_span(flatten_basis(cp.p_basis));
              for (const auto& a : cp.k_basis) {
                for (const auto& b : cp.k_basis)
                  if (!k_span.contains(flatten(bracket(a, b))))
                    return {false, "[k,k] m=" + std::to_string(m)};
                for (const auto& b : cp.p_basis)
                  if (!p_span.contains(flatten(bracket(a, b))))
                    return {false, "[k,p] m=" + std::to_string(m)};
              }
              for (const auto& a : cp.p_basis)
                for (const auto& b : cp.p_basis)
                  if (!k_span.contains(flatten(bracket(a, b))))
                    return {false, "[p,p] m=" + std::to_string(m)};
              // J^2 = -identity
              std::size_t dp = cp.p_basis.size();
              ExactMatrix j2 = cp.complex_structure * cp.complex_structure;
              ExactMatrix minus_id(dp, dp);
              for (std::size_t i = 0; i < dp; ++i) minus_id(i, i) = Gaussian(-1);
              if (!(j2 == minus_id)) return {false, "J^2 m=" + std::to_string(m)};
              // ad(k)-equivariance, generator-wise via coordinates
              for (const auto& z : cp.k_basis)
                for (const auto& x : cp.p_basis) {
                  ExactMatrix lhs = cp.apply_complex_structure(bracket(z, x));
                  ExactMatrix rhs = bracket(z, cp.apply_complex_structure(x));
                  if (!(lhs == rhs)) return {false, "equivariance m=" + std::to_string(m)};
                }
              ++cases;
            }
            return all_of(cases, true);
          });

  run.add("lie.020.full-p-triple", "lie", "p itself is a Lie triple system",
          [&]() -> std::pair<bool, std::string> {
            CartanPair cp = bdi_cartan_pair(4);
            auto res = is_lie_triple_system(cp.p_basis, cp);
            return {res.is_triple_system, "m = 4"};
          });

  run.add("lie.030.quadric-surface-family", "lie",
          "the 2-parameter corner family in so(4) is a J-stable Lie triple system",
          [&]() -> std::pair<bool, std::string> {
            CartanPair cp = bdi_cartan_pair(2);
            std::vector<ExactMatrix> family = {cp.p_basis[0], cp.p_basis[2]};  // (e1,0),(0,e1)
            auto res = is_lie_triple_system(family, cp);
            if (!res.is_triple_system) return {false, "not a triple system"};
            if (!is_j_stable(family, cp)) return {false, "not J-stable"};
            ExactMatrix span = flatten_basis(family);
            if (span.rank() != 2) return {false, "wrong dimension"};
            return {true, "2-dimensional, closed, J-stable"};
          });

  run.add("lie.040.rotation-bracket", "lie",
          "[X1, X2] of the corner so(3) generators is the rotation in coordinates 1,2",
          [&]() -> std::pair<bool, std::string> {
            ExactMatrix x1(4, 4), x2(4, 4), want(4, 4);
            x1(0, 2) = Gaussian(-1); x1(2, 0) = Gaussian(1);
            x2(1, 2) = Gaussian(-1); x2(2, 1) = Gaussian(1);
            want(1, 0) = Gaussian(1); want(0, 1) = Gaussian(-1);
            return {bracket(x1, x2) == want, "E21 - E12"};
          });

  run.add("lie.050.su-to-so-homomorphism", "lie",
          "the doubling map su(n+1) -> so(2n+2) preserves brackets on full bases, n <= 3",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int nn = 1; nn <= 3; ++nn) {
              int sz = nn + 1;
              std::vector<std::pair<ExactMatrix, ExactMatrix>> basis;  // (A, B) parts
              for (int a = 0; a < sz; ++a)
                for (int b = a + 1; b < sz; ++b) {
                  ExactMatrix A(sz, sz), B(sz, sz);
                  A(a, b) = Gaussian(1);
                  A(b, a) = Gaussian(-1);
                  basis.emplace_back(A, B);
                  ExactMatrix A2(sz, sz), B2(sz, sz);
                  B2(a, b) = Gaussian(1);
                  B2(b, a) = Gaussian(1);
                  basis.emplace_back(A2, B2);
                }
              for (int a = 0; a + 1 < sz; ++a) {
                ExactMatrix A(sz, sz), B(sz, sz);
                B(a, a) = Gaussian(1);
                B(a + 1, a + 1) = Gaussian(-1);
                basis.emplace_back(A, B);
              }
              if (static_cast<int>(basis.size()) != sz * sz - 1) return {false, "basis size"};
              Gaussian i = Gaussian::i();
              auto as_complex = [&](const std::pair<ExactMatrix, ExactMatrix>& ab) {
                ExactMatrix x = ab.first;
                for (std::size_t r = 0; r < x.rows(); ++r)
                  for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) += i * ab.second(r, c);
                return x;
              };
              // bracket-preservation and injectivity via the image rank
              ExactMatrix image_span;
              for (const auto& ab : basis) image_span.append_row(flatten(su_to_so(ab.first, ab.second)));
              if (image_span.rank() != basis.size()) return {false, "not injective"};
              for (std::size_t ii = 0; ii < basis.size(); ++ii)
                for (std::size_t jj = ii + 1; jj < basis.size(); ++jj) {
                  ExactMatrix xy = bracket(as_complex(basis[ii]), as_complex(basis[jj]));
                  ExactMatrix re(xy.rows(), xy.cols()), im(xy.rows(), xy.cols());
                  for (std::size_t r = 0; r < xy.rows(); ++r)
                    for (std::size_t c = 0; c < xy.cols(); ++c) {
                      re(r, c) = Gaussian(xy(r, c).re);
                      im(r, c) = Gaussian(xy(r, c).im);
                    }
                  ExactMatrix lhs = su_to_so(re, im);
                  ExactMatrix rhs = bracket(su_to_so(basis[ii].first, basis[ii].second),
                                            su_to_so(basis[jj].first, basis[jj].second));
                  if (!(lhs == rhs)) return {false, "n=" + std::to_string(nn)};
                  ++cases;
                }
            }
            return all_of(cases, true);
          });

  run.add("lie.060.isotropic-base-points", "lie",
          "the two standard Lagrangians are isotropic; a dual pair is not",
          [&]() -> std::pair<bool, std::string> {
            for (int n = 2; n <= 4; ++n) {
              IsotropicModel ci = ci_standard_model(n);
              if (!isotropy_check(ci.v1, ci.form)) return {false, "CI V1"};
              if (!isotropy_check(ci.v2, ci.form)) return {false, "CI V2"};
              IsotropicModel d3 = diii_standard_model(n);
              if (!isotropy_check(d3.v1, d3.form)) return {false, "DIII V1"};
              if (!isotropy_check(d3.v2, d3.form)) return {false, "DIII V2"};
              ExactMatrix dual(2, 2 * n);
              dual(0, 0) = Gaussian(1);
              dual(1, n) = Gaussian(1);  // e_1, e_{n+1}
              if (isotropy_check(dual, d3.form)) return {false, "dual pair"};
            }
            return {true, "n <= 4"};
          });
}

// ── pluecker ─────────────────────────────────────────────────────────────

inline void pluecker_checks(Runner& run, const Caps& caps) {
  run.add("pluecker.010.projective-lines", "pluecker",
          "the moving-vector pencil in G(d, d+1) has degree 1",
          [&]() -> std::pair<bool, std::string> {
            for (int d = 1; d <= 5; ++d)
              if (curve_degree(projective_space_line_family(d)) != 1)
                return {false, "d=" + std::to_string(d)};
            return {true, "d <= 5"};
          });

  run.add("pluecker.020.ci-lines", "pluecker",
          "the Lagrangian pencil in G(n, 2n) is isotropic and has degree 1",
          [&]() -> std::pair<bool, std::string> {
            for (int n = 2; n <= 6; ++n) {
              ParamSubspace fam = ci_line_family(n);
              if (!family_isotropy_check(fam, symplectic_form(n)))
                return {false, "isotropy n=" + std::to_string(n)};
              if (curve_degree(fam) != 1) return {false, "degree n=" + std::to_string(n)};
            }
            return {true, "n <= 6"};
          });

  run.add("pluecker.030.quadric-ruling", "pluecker",
          "fixed rulings of the quadric surface are degree-1 lines on the quadric",
          [&]() -> std::pair<bool, std::string> {
            BilinearForm q = euclidean_quadric_form(4);
            std::vector<std::pair<Gaussian, Gaussian>> vs = {
                {Gaussian(0), Gaussian(1)}, {Gaussian(1), Gaussian(0)}, {Gaussian(1), Gaussian(2)},
                {Gaussian(Rational(2, 3)), Gaussian(1)}};
            for (const auto& [v0, v1] : vs) {
              ParamSubspace line = quadric_ruling_line_family(v0, v1);
              if (curve_degree(line) != 1) return {false, "degree"};
              std::vector<Poly> pt(4);
              for (int j = 0; j < 4; ++j) pt[j] = line.rows(0, j);
              if (!quadric_membership(pt, q).member) return {false, "membership"};
            }
            return {true, "4 rulings"};
          });

  run.add("pluecker.040.conic", "pluecker",
          "the circle image closes to a conic: degree 2, on the quadric, in the plane",
          [&]() -> std::pair<bool, std::string> {
            ParamSubspace conic = veronese_conic_family();
            if (curve_degree(conic) != 2) return {false, "degree"};
            std::vector<Poly> pt(4);
            for (int j = 0; j < 4; ++j) pt[j] = conic.rows(0, j);
            if (!quadric_membership(pt, euclidean_quadric_form(4)).member)
              return {false, "quadric membership"};
            if (!pt[3].is_zero()) return {false, "plane z3 = 0"};
            ExactMatrix plane_form(4, 4);
            plane_form(0, 0) = plane_form(1, 1) = plane_form(2, 2) = Gaussian(1);
            plane_form(3, 3) = Gaussian(-1);  // nondegenerate stand-in for z0^2+z1^2+z2^2 on z3=0
            std::vector<Poly> truncated = {pt[0], pt[1], pt[2], Poly(0)};
            if (!quadric_membership(truncated,
                                    BilinearForm(plane_form, BilinearForm::Kind::symmetric))
                     .member)
              return {false, "plane conic equation"};
            return {true, "degree 2"};
          });

  run.add("pluecker.050.trig-circles", "pluecker",
          "both standard geodesic circles satisfy the quadric equation modulo c^2+s^2-1",
          [&]() -> std::pair<bool, std::string> {
            Gaussian i = Gaussian::i();
            std::vector<Poly> c1 = {Poly(1), Poly::monomial(1, 0, i), Poly::monomial(0, 1, i),
                                    Poly(0)};
            std::vector<Poly> c2 = {Poly::x(), Poly(i), Poly::y(), Poly(0)};
            BilinearForm q = euclidean_quadric_form(4);
            if (!quadric_membership_trig(c1, q).member) return {false, "first circle"};
            if (!quadric_membership_trig(c2, q).member) return {false, "second circle"};
            if (!(trig_normal_form(Poly::x() * Poly::x() + Poly::y() * Poly::y()) == Poly(1)))
              return {false, "c^2 + s^2 = 1"};
            return {true, "both circles"};
          });

  run.add("pluecker.060.isotropic-embedding-ci", "pluecker",
          "every coordinate pencil maps to a degree-2 curve under L -> L + (L-perp ^ V2), CI",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int n = 2; n <= caps.embed_n; ++n) {
              IsotropicModel model = ci_standard_model(n);
              for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                  ParamSubspace line = domain_pencil(model, a, b);
                  ParamSubspace total = lagrangian_extension_family(line, model.form, model.v2);
                  if (curve_degree(total) != 2)
                    return {false, "n=" + std::to_string(n) + " pencil (" + std::to_string(a) +
                                       "," + std::to_string(b) + ")"};
                  ++cases;
                }
            }
            return all_of(cases, true);
          });

  run.add("pluecker.070.isotropic-embedding-diii", "pluecker",
          "same degree-2 statement for the symmetric-form model, DIII",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int n = 2; n <= caps.embed_n; ++n) {
              IsotropicModel model = diii_standard_model(n);
              for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                  ParamSubspace line = domain_pencil(model, a, b);
                  ParamSubspace total = lagrangian_extension_family(line, model.form, model.v2);
                  if (curve_degree(total) != 2)
                    return {false, "n=" + std::to_string(n)};
                  ++cases;
                }
            }
            return all_of(cases, true);
          });

  run.add("pluecker.080.degree-additivity", "pluecker",
          "the embedding degree splits as 1 (moving subspace part) + 1 (intersection line part)",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int n = 2; n <= caps.embed_n; ++n) {
              for (auto model : {ci_standard_model(n), diii_standard_model(n)}) {
                ParamSubspace line = domain_pencil(model, 0, n - 1);
                int d_line = curve_degree(line);
                ParamSubspace total = lagrangian_extension_family(line, model.form, model.v2);
                // the appended intersection row alone
                PolyMatrix last(1, total.ambient);
                for (int c = 0; c < total.ambient; ++c)
                  last(0, c) = total.rows(total.rows.rows() - 1, c);
                int d_kernel = curve_degree(ParamSubspace(std::move(last), total.ambient));
                int d_total = curve_degree(total);
                if (d_line != 1 || d_kernel != 1 || d_total != d_line + d_kernel)
                  return {false, "n=" + std::to_string(n)};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("pluecker.090.fixed-extensions", "pluecker",
          "W = L + (L-perp ^ V2) is an isotropic n-plane with a 1-dimensional intersection",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int n = 2; n <= caps.embed_n; ++n) {
              for (auto model : {ci_standard_model(n), diii_standard_model(n)}) {
                ExactMatrix l(n - 1, 2 * n);
                for (int i = 0; i < n - 1; ++i)
                  for (int c = 0; c < 2 * n; ++c) l(i, c) = model.v1(i, c);
                ExactMatrix w = lagrangian_extension(l, model.form, model.v2);
                if (w.rows() != static_cast<std::size_t>(n)) return {false, "dimension"};
                if (!isotropy_check(w, model.form)) return {false, "isotropy"};
                if (w.rank() != static_cast<std::size_t>(n)) return {false, "rank"};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("pluecker.100.hyperplane-witness", "pluecker",
          "a non-isotropic n-plane through v exists inside B = L + <v> (n <= 4)",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int n = 2; n <= 4; ++n) {
              for (auto model : {ci_standard_model(n), diii_standard_model(n)}) {
                // L = V1; v in V2 is isotropic and off L
                std::vector<Gaussian> v(2 * n, Gaussian(0));
                for (int c = 0; c < 2 * n; ++c) v[c] = model.v2(0, c);
                ExactMatrix witness = hyperplane_witness(n, v, model.v1, model.form);
                if (witness.rows() != static_cast<std::size_t>(n)) return {false, "size"};
                if (isotropy_check(witness, model.form)) return {false, "isotropic witness"};
                if (!row_in_span(witness, v)) return {false, "missing v"};
                ExactMatrix b = model.v1;
                b.append_row(v);
                for (std::size_t r = 0; r < witness.rows(); ++r)
                  if (!row_in_span(b, witness.row(r))) return {false, "outside B"};
                ++cases;
              }
            }
            return all_of(cases, true);
          });

  run.add("pluecker.110.grassmann-relations", "pluecker",
          "the exchange relations vanish identically on computed minors",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            std::vector<ParamSubspace> families = {ci_line_family(2), ci_line_family(3)};
            IsotropicModel model = ci_standard_model(2);
            families.push_back(
                lagrangian_extension_family(domain_pencil(model, 0, 1), model.form, model.v2));
            for (const auto& fam : families) {
              PlueckerVector pv = pluecker_coords(fam);
              for (const auto& a_set : column_subsets(fam.ambient, pv.k - 1))
                for (const auto& b_set : column_subsets(fam.ambient, pv.k + 1)) {
                  if (!grassmann_relation_residual(pv, a_set, b_set).is_zero())
                    return {false, "residual nonzero"};
                  ++cases;
                }
            }
            return all_of(cases, true);
          });

  run.add("pluecker.120.degree-invariance", "pluecker",
          "curve degree is stable under row operations and reparametrization",
          [&]() -> std::pair<bool, std::string> {
            ParamSubspace fam = ci_line_family(3);
            int base = curve_degree(fam);
            ParamSubspace rep =
                reparametrize(fam, Gaussian(1), Gaussian(2), Gaussian(1), Gaussian(-1));
            if (curve_degree(rep) != base) return {false, "reparametrization"};
            PolyMatrix rows = fam.rows;
            for (std::size_t c = 0; c < rows.cols(); ++c) {
              rows(0, c) = rows(0, c) + Poly(Gaussian(3)) * rows(1, c);  // row op among constants
              rows(1, c) = Poly(Gaussian(Rational(-1, 2))) * rows(1, c);
            }
            if (curve_degree(ParamSubspace(std::move(rows), fam.ambient)) != base)
              return {false, "row operations"};
            ParamSubspace conic = veronese_conic_family();
            ParamSubspace conic_rep =
                reparametrize(conic, Gaussian(2), Gaussian(1), Gaussian(1), Gaussian(1));
            if (curve_degree(conic_rep) != curve_degree(conic)) return {false, "conic"};
            return {true, "3 transformations"};
          });
}

// ── hss ──────────────────────────────────────────────────────────────────

inline void hss_checks(Runner& run, const Caps& caps) {
  run.add("hss.010.projective-ranks", "hss",
          "pr: Gr(d,n) -> d+1; BDI(m) -> floor(m/2); CI/DIII(n) -> n-1; EIII -> 5; EVII -> 6",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int n = 1; n <= 14; ++n)
              for (int d = (n + 1) / 2; d < n && d <= 7; ++d) {
                if (projective_rank(HermitianSpace::from_grassmannian(d, n)) != d + 1)
                  return {false, "Gr(" + std::to_string(d) + "," + std::to_string(n) + ")"};
                ++cases;
              }
            for (int m = 3; m <= 12; ++m) {
              if (projective_rank(HermitianSpace::bdi(m)) != m / 2)
                return {false, "BDI(" + std::to_string(m) + ")"};
              ++cases;
            }
            for (int n = 2; n <= caps.rank; ++n) {
              if (projective_rank(HermitianSpace::ci(n)) != n - 1)
                return {false, "CI(" + std::to_string(n) + ")"};
              ++cases;
            }
            for (int n = 3; n <= caps.rank; ++n) {
              if (projective_rank(HermitianSpace::diii(n)) != n - 1)
                return {false, "DIII(" + std::to_string(n) + ")"};
              ++cases;
            }
            if (projective_rank(HermitianSpace::eiii()) != 5) return {false, "EIII"};
            if (projective_rank(HermitianSpace::evii()) != 6) return {false, "EVII"};
            return all_of(cases + 2, true);
          });

  run.add("hss.020.pair-counts", "hss",
          "orbit counts follow the table formulas (p; 2; n; floor(n/2); 2; 2)",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int p = 1; p <= caps.rank; ++p)
              for (int q = p; q <= caps.rank; ++q) {
                if (symmetric_pairs(HermitianSpace::aiii(p, q)).count != p)
                  return {false, "AIII"};
                ++cases;
              }
            for (int m = 3; m <= 12; ++m) {
              if (symmetric_pairs(HermitianSpace::bdi(m)).count != 2) return {false, "BDI"};
              ++cases;
            }
            for (int n = 2; n <= caps.rank; ++n) {
              if (symmetric_pairs(HermitianSpace::ci(n)).count != n) return {false, "CI"};
              ++cases;
            }
            for (int n = 3; n <= caps.rank; ++n) {
              if (symmetric_pairs(HermitianSpace::diii(n)).count != n / 2) return {false, "DIII"};
              ++cases;
            }
            if (symmetric_pairs(HermitianSpace::eiii()).count != 2) return {false, "EIII"};
            if (symmetric_pairs(HermitianSpace::evii()).count != 2) return {false, "EVII"};
            return all_of(cases + 2, true);
          });

  run.add("hss.030.complex-dimensions", "hss",
          "dim_C agrees with the closed forms pq, m, n(n+1)/2, n(n-1)/2, 16, 27",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            for (int p = 1; p <= 6; ++p)
              for (int q = p; q <= 6; ++q) {
                if (complex_dimension(HermitianSpace::aiii(p, q)) != p * q)
                  return {false, "AIII"};
                ++cases;
              }
            for (int m = 3; m <= caps.bdi_m; ++m) {
              if (complex_dimension(HermitianSpace::bdi(m)) != m) return {false, "BDI"};
              ++cases;
            }
            for (int n = 2; n <= caps.rank; ++n) {
              if (complex_dimension(HermitianSpace::ci(n)) != n * (n + 1) / 2)
                return {false, "CI"};
              ++cases;
            }
            for (int n = 3; n <= caps.rank; ++n) {
              if (complex_dimension(HermitianSpace::diii(n)) != n * (n - 1) / 2)
                return {false, "DIII"};
              ++cases;
            }
            if (complex_dimension(HermitianSpace::eiii()) != 16) return {false, "EIII"};
            if (complex_dimension(HermitianSpace::evii()) != 27) return {false, "EVII"};
            return all_of(cases + 2, true);
          });

  run.add("hss.040.min-degrees", "hss",
          "minimal degree 1 for AIII/EIII/EVII, 2 for CI/DIII, {1,2} for BDI",
          [&]() -> std::pair<bool, std::string> {
            using V = std::vector<int>;
            if (min_degree(HermitianSpace::aiii(2, 3)) != V{1}) return {false, "AIII"};
            if (min_degree(HermitianSpace::eiii()) != V{1}) return {false, "EIII"};
            if (min_degree(HermitianSpace::evii()) != V{1}) return {false, "EVII"};
            if (min_degree(HermitianSpace::ci(4)) != V{2}) return {false, "CI"};
            if (min_degree(HermitianSpace::diii(6)) != V{2}) return {false, "DIII"};
            if (min_degree(HermitianSpace::bdi(5)) != (V{1, 2})) return {false, "BDI"};
            return {true, "6 kinds"};
          });

  run.add("hss.050.rank-dimension-bound", "hss",
          "projective rank never exceeds the complex dimension",
          [&]() -> std::pair<bool, std::string> {
            int cases = 0;
            std::vector<HermitianSpace> sweep;
            for (int p = 1; p <= 6; ++p)
              for (int q = p; q <= 6; ++q) sweep.push_back(HermitianSpace::aiii(p, q));
            for (int m = 3; m <= caps.bdi_m; ++m) sweep.push_back(HermitianSpace::bdi(m));
            for (int n = 2; n <= caps.rank; ++n) sweep.push_back(HermitianSpace::ci(n));
            for (int n = 3; n <= caps.rank; ++n) sweep.push_back(HermitianSpace::diii(n));
            sweep.push_back(HermitianSpace::eiii());
            sweep.push_back(HermitianSpace::evii());
            for (const auto& s : sweep) {
              if (projective_rank(s) > complex_dimension(s)) return {false, s.str()};
              ++cases;
            }
            return all_of(cases, true);
          });

  run.add("hss.060.consistency-report", "hss",
          "the cross-identity report has zero violations",
          [&]() -> std::pair<bool, std::string> {
            ConsistencyReport rep = rank_consistency_report(caps.rank);
            if (rep.violations != 0)
              return {false, std::to_string(rep.violations) + " violations"};
            return {true, std::to_string(rep.entries.size()) + " identities"};
          });
}

}  // namespace detail

inline const std::vector<std::string>& scopes() {
  static const std::vector<std::string> s = {"roots", "rep", "schubert", "lie", "pluecker", "hss"};
  return s;
}

/// Run the reproduction suite.  scope is one of scopes() or "all"; sweep
/// sizes honor CARTAN_VERIFY_CAP unless caps are passed explicitly.
inline VerifyReport run_verify(const std::string& scope = "all",
                               const Caps& caps = Caps::from_environment()) {
  VerifyReport rep;
  detail::Runner run(rep);
  bool all = (scope == "all");
  if (all || scope == "roots") detail::roots_checks(run, caps);
  if (all || scope == "rep") detail::rep_checks(run, caps);
  if (all || scope == "schubert") detail::schubert_checks(run, caps);
  if (all || scope == "lie") detail::lie_checks(run, caps);
  if (all || scope == "pluecker") detail::pluecker_checks(run, caps);
  if (all || scope == "hss") detail::hss_checks(run, caps);
  if (rep.checks.empty() && !all)
    throw parameter_error("verify: unknown scope '" + scope + "'");
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  rep.total = static_cast<int>(rep.checks.size());
  for (const auto& c : rep.checks) (c.pass ? rep.passed : rep.failed)++;
  return rep;
}

}  // namespace cartan::verify

#endif
