#ifndef CARTAN_HSS_CATALOG_HPP
#define CARTAN_HSS_CATALOG_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/root_system.hpp"

namespace cartan {

/// The six irreducible compact Hermitian symmetric types, in Cartan's labels:
///   AIII(p,q)  complex Grassmannian G^C(p,q), p-planes in C^{p+q}
///   BDI(m)     the m-dimensional complex quadric
///   CI(n)      Sp(n)/U(n), Lagrangian subspaces in G(n,2n)
///   DIII(n)    SO(2n)/U(n), isotropic subspaces in G(n,2n)
///   EIII       the 16-dimensional exceptional space
///   EVII       the 27-dimensional exceptional space
enum class HssKind { AIII, BDI, CI, DIII, EIII, EVII };

inline std::string to_string(HssKind k) {
  switch (k) {
    case HssKind::AIII: return "AIII";
    case HssKind::BDI: return "BDI";
    case HssKind::CI: return "CI";
    case HssKind::DIII: return "DIII";
    case HssKind::EIII: return "EIII";
    case HssKind::EVII: return "EVII";
  }
  return "?";
}

inline HssKind hss_kind_from_string(const std::string& s) {
  if (s == "AIII") return HssKind::AIII;
  if (s == "BDI") return HssKind::BDI;
  if (s == "CI") return HssKind::CI;
  if (s == "DIII") return HssKind::DIII;
  if (s == "EIII") return HssKind::EIII;
  if (s == "EVII") return HssKind::EVII;
  throw parameter_error("unknown HSS kind '" + s + "'");
}

/// Tagged descriptor of one irreducible compact Hermitian symmetric space.
/// AIII descriptors are normalized to p <= q; the Grassmannian-of-d-planes
/// convention is available through from_grassmannian / grassmann_d / _n
/// (bijection p = d+1, q = n-d after normalizing d >= n/2).
struct HermitianSpace {
  HssKind kind;
  int p = 0, q = 0;  // AIII
  int m = 0;         // BDI
  int n = 0;         // CI, DIII

  static HermitianSpace aiii(int p, int q) {
    if (p < 1 || q < 1) throw parameter_error("AIII needs p, q >= 1");
    HermitianSpace s{HssKind::AIII};
    s.p = std::min(p, q);
    s.q = std::max(p, q);
    return s;
  }
  /// d-planes in P^n, i.e. G^C(d+1, n-d).
  static HermitianSpace from_grassmannian(int d, int n) {
    if (d < 0 || n < 1 || d >= n) throw parameter_error("Grassmannian needs 0 <= d < n");
    return aiii(d + 1, n - d);
  }
  static HermitianSpace bdi(int m) {
    if (m < 3) throw parameter_error("BDI needs m >= 3");
    HermitianSpace s{HssKind::BDI};
    s.m = m;
    return s;
  }
  static HermitianSpace ci(int n) {
    if (n < 2) throw parameter_error("CI needs n >= 2");
    HermitianSpace s{HssKind::CI};
    s.n = n;
    return s;
  }
  static HermitianSpace diii(int n) {
    if (n < 3) throw parameter_error("DIII needs n >= 3");
    HermitianSpace s{HssKind::DIII};
    s.n = n;
    return s;
  }
  static HermitianSpace eiii() { return HermitianSpace{HssKind::EIII}; }
  static HermitianSpace evii() { return HermitianSpace{HssKind::EVII}; }

  /// The d of the d-planes-in-P^n convention (d >= n/2 normalization).
  int grassmann_d() const {
    require(HssKind::AIII);
    return q - 1;
  }
  int grassmann_n() const {
    require(HssKind::AIII);
    return p + q - 1;
  }

  std::string str() const {
    switch (kind) {
      case HssKind::AIII: return "AIII(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case HssKind::BDI: return "BDI(" + std::to_string(m) + ")";
      case HssKind::CI: return "CI(" + std::to_string(n) + ")";
      case HssKind::DIII: return "DIII(" + std::to_string(n) + ")";
      case HssKind::EIII: return "EIII";
      case HssKind::EVII: return "EVII";
    }
    return "?";
  }

  /// Marked-root presentation (type, rank, marked simple root).
  struct MarkedDiagram {
    LieType type;
    int rank;
    int marked;  // 1-based
  };
  MarkedDiagram marked_diagram() const {
    switch (kind) {
      case HssKind::AIII: return {LieType::A, p + q - 1, p};
      case HssKind::BDI:
        if (m % 2 == 1) return {LieType::B, (m + 1) / 2, 1};
        return {LieType::D, (m + 2) / 2, 1};
      case HssKind::CI: return {LieType::C, n, n};
      case HssKind::DIII: return {LieType::D, n, n};
      case HssKind::EIII: return {LieType::E6, 6, 1};
      case HssKind::EVII: return {LieType::E7, 7, 7};
    }
    throw parameter_error("invalid HSS descriptor");
  }

 private:
  void require(HssKind k) const {
    if (kind != k) throw parameter_error("descriptor is not of kind " + to_string(k));
  }
};

/// Maximal dimension of a complex projective space sitting inside the space
/// as a totally geodesic complex submanifold.
inline int projective_rank(const HermitianSpace& s) {
  switch (s.kind) {
    case HssKind::AIII: return std::max(s.p, s.q);  // d+1 in the d-planes convention
    case HssKind::BDI: return s.m / 2;
    case HssKind::CI: return s.n - 1;
    case HssKind::DIII: return s.n - 1;
    case HssKind::EIII: return 5;
    case HssKind::EVII: return 6;
  }
  throw parameter_error("invalid HSS descriptor");
}

/// Complex dimension, computed from the marked-root presentation as the
/// number of positive roots with positive coefficient at the marked root.
inline int complex_dimension(const HermitianSpace& s) {
  auto md = s.marked_diagram();
  RootSystem rs = RootSystem::build(md.type, md.rank);
  return parabolic_split(rs, md.marked).complex_dimension();
}

/// Degree of a maximal totally geodesic projective subspace, in the ample
/// generator of the space itself: 1 for AIII/EIII/EVII, 2 for CI/DIII, and
/// either value for BDI (both occur; the set is returned unresolved).
inline std::vector<int> min_degree(const HermitianSpace& s) {
  switch (s.kind) {
    case HssKind::AIII:
    case HssKind::EIII:
    case HssKind::EVII: return {1};
    case HssKind::CI:
    case HssKind::DIII: return {2};
    case HssKind::BDI: return {1, 2};
  }
  throw parameter_error("invalid HSS descriptor");
}

// ── antipodal pair table ────────────────────────────────────────────────────

/// One factor of a (possibly reducible) symmetric-space label appearing in
/// the antipodal pair table.  Geometry beyond the real dimension is not
/// modeled; products are opaque lists of factors.
struct SpaceLabel {
  enum class Family { GC, GR, CI_t, DIII_t, S2, EIII_t, Point };
  Family family;
  int a = 0, b = 0;

  static SpaceLabel gc(int a, int b) { return {Family::GC, a, b}; }
  static SpaceLabel gr(int a, int b) { return {Family::GR, a, b}; }
  static SpaceLabel ci(int k) { return {Family::CI_t, k, 0}; }
  static SpaceLabel diii(int k) { return {Family::DIII_t, k, 0}; }
  static SpaceLabel s2() { return {Family::S2, 0, 0}; }
  static SpaceLabel eiii() { return {Family::EIII_t, 0, 0}; }

  int real_dimension() const {
    switch (family) {
      case Family::GC: return 2 * a * b;
      case Family::GR: return a * b;
      case Family::CI_t: return a * (a + 1);
      case Family::DIII_t: return a * (a - 1);
      case Family::S2: return 2;
      case Family::EIII_t: return 32;
      case Family::Point: return 0;
    }
    return 0;
  }

  std::string str() const {
    switch (family) {
      case Family::GC:
        if (a == 0 || b == 0) return "pt";
        return "G^C(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Family::GR:
        if (a == 0 || b == 0) return "pt";
        return "G^R(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Family::CI_t: return a == 0 ? "pt" : "CI(" + std::to_string(a) + ")";
      case Family::DIII_t: return a <= 1 ? "pt" : "DIII(" + std::to_string(a) + ")";
      case Family::S2: return "S^2";
      case Family::EIII_t: return "EIII";
      case Family::Point: return "pt";
    }
    return "?";
  }
};

inline std::string product_label(const std::vector<SpaceLabel>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].str();
  return s.empty() ? "pt" : s;
}

inline int product_dimension(const std::vector<SpaceLabel>& factors) {
  int d = 0;
  for (const auto& f : factors) d += f.real_dimension();
  return d;
}

/// Antipodal pair (M+, M-) attached to one orbit of closed-geodesic systems.
struct SymmetricPair {
  std::vector<SpaceLabel> m_plus;
  std::vector<SpaceLabel> m_minus;
  std::string constraint;
  std::string remark;
};

struct PairTable {
  std::vector<SymmetricPair> rows;
  int count = 0;  // the table's orbit count; may exceed rows.size() for the
                  // exceptional types, whose tables display the maximal pair only
};

inline PairTable symmetric_pairs(const HermitianSpace& s) {
  PairTable t;
  switch (s.kind) {
    case HssKind::AIII: {
      for (int h = 1; h <= s.p; ++h) {
        SymmetricPair pr;
        pr.m_plus = {SpaceLabel::gc(h, s.p - h), SpaceLabel::gc(h, s.q - h)};
        pr.m_minus = {SpaceLabel::gc(h, h), SpaceLabel::gc(s.p - h, s.q - h)};
        pr.constraint = "h = " + std::to_string(h) + ", 0 < h <= p <= q";
        t.rows.push_back(std::move(pr));
      }
      t.count = s.p;
      return t;
    }
    case HssKind::BDI: {
      // the quadric is the real-Grassmannian family at (p, q) = (2, m)
      for (int h = 1; h <= 2; ++h) {
        SymmetricPair pr;
        pr.m_plus = {SpaceLabel::gr(h, 2 - h), SpaceLabel::gr(h, s.m - h)};
        pr.m_minus = {SpaceLabel::gr(h, h), SpaceLabel::gr(2 - h, s.m - h)};
        pr.constraint = "h = " + std::to_string(h) + ", 0 < h <= 2";
        t.rows.push_back(std::move(pr));
      }
      t.count = 2;
      return t;
    }
    case HssKind::CI: {
      for (int k = 1; k <= s.n; ++k) {
        SymmetricPair pr;
        pr.m_plus = {SpaceLabel::gc(k, s.n - k)};
        pr.m_minus = {SpaceLabel::ci(k), SpaceLabel::ci(s.n - k)};
        pr.constraint = "k = " + std::to_string(k) + ", 0 < k <= n";
        t.rows.push_back(std::move(pr));
      }
      t.count = s.n;
      return t;
    }
    case HssKind::DIII: {
      for (int k = 1; k <= s.n / 2; ++k) {
        SymmetricPair pr;
        pr.m_plus = {SpaceLabel::gc(k, s.n - k)};
        pr.m_minus = {SpaceLabel::diii(k), SpaceLabel::diii(s.n - k)};
        pr.constraint = "k = " + std::to_string(k) + ", pairs {k, n-k} unordered";
        t.rows.push_back(std::move(pr));
      }
      t.count = s.n / 2;
      return t;
    }
    case HssKind::EIII: {
      SymmetricPair pr;
      pr.m_plus = {SpaceLabel::diii(5)};
      pr.m_minus = {SpaceLabel::s2(), SpaceLabel::gc(5, 1)};
      pr.remark = "maximal pair; the orbit count is 2";
      t.rows.push_back(std::move(pr));
      t.count = 2;
      return t;
    }
    case HssKind::EVII: {
      SymmetricPair pr;
      pr.m_plus = {SpaceLabel::eiii()};
      pr.m_minus = {SpaceLabel::s2(), SpaceLabel::gr(10, 2)};
      pr.remark =
          "maximal pair; orbit count 2.  A variant reading G^R(12,2) appears in degree "
          "discussions but fails the tangent-dimension identity (32+26 != 54).";
      t.rows.push_back(std::move(pr));
      t.count = 2;
      return t;
    }
  }
  throw parameter_error("invalid HSS descriptor");
}

// ── consistency report ──────────────────────────────────────────────────────

struct ConsistencyEntry {
  std::string name;
  long lhs = 0, rhs = 0;
  bool pass = false;
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;
  std::vector<std::string> notes;
  int violations = 0;

  void check(std::string name, long lhs, long rhs) {
    bool ok = (lhs == rhs);
    if (!ok) ++violations;
    entries.push_back({std::move(name), lhs, rhs, ok});
  }
  void check_le(std::string name, long lhs, long rhs) {
    bool ok = (lhs <= rhs);
    if (!ok) ++violations;
    entries.push_back({std::move(name), lhs, rhs, ok});
  }
};

/// Cross-identities between the catalog's invariants:
///  - the exceptional ranks bootstrap off their maximal pairs (pr = pr(M+)+1),
///  - CI/DIII sit one below their ambient Grassmannian,
///  - every tabulated pair satisfies the tangent-space complement identity
///    dim M+ + dim M- = 2 dim_C M,
///  - rows whose M+ is itself a catalog space satisfy pr(M) <= pr(M+) + 1.
inline ConsistencyReport rank_consistency_report(int max_param = 8) {
  ConsistencyReport rep;
  rep.check("pr(EIII) = pr(DIII(5)) + 1", projective_rank(HermitianSpace::eiii()),
            projective_rank(HermitianSpace::diii(5)) + 1);
  rep.check("pr(EVII) = pr(EIII) + 1", projective_rank(HermitianSpace::evii()),
            projective_rank(HermitianSpace::eiii()) + 1);
  for (int n = 2; n <= max_param; ++n)
    rep.check("pr(CI(" + std::to_string(n) + ")) = pr(ambient G(n,2n)) - 1",
              projective_rank(HermitianSpace::ci(n)),
              projective_rank(HermitianSpace::aiii(n, n)) - 1);
  for (int n = 3; n <= max_param; ++n)
    rep.check("pr(DIII(" + std::to_string(n) + ")) = pr(ambient G(n,2n)) - 1",
              projective_rank(HermitianSpace::diii(n)),
              projective_rank(HermitianSpace::aiii(n, n)) - 1);

  // the projective-space tower: AIII(1, n) has the unique pair (P^{n-1}, S^2)
  for (int n = 2; n <= max_param; ++n) {
    PairTable pt = symmetric_pairs(HermitianSpace::aiii(1, n));
    bool shape = pt.rows.size() == 1 && pt.count == 1 &&
                 product_label(pt.rows[0].m_plus) == "pt x G^C(1," + std::to_string(n - 1) + ")" &&
                 product_label(pt.rows[0].m_minus) == "G^C(1,1) x pt";
    rep.check("pair(P^" + std::to_string(n) + ") = (P^" + std::to_string(n - 1) + ", S^2)",
              shape ? 1 : 0, 1);
  }

  auto check_pairs = [&rep](const HermitianSpace& s) {
    PairTable pt = symmetric_pairs(s);
    int best_mplus_rank = -1;
    for (const auto& row : pt.rows) {
      rep.check("dim M+ + dim M- = 2 dim_C " + s.str() + " [" + product_label(row.m_plus) + "]",
                product_dimension(row.m_plus) + product_dimension(row.m_minus),
                2L * complex_dimension(s));
      if (row.m_plus.size() == 1) {
        const SpaceLabel& f = row.m_plus[0];
        int r = -1;
        if (f.family == SpaceLabel::Family::GC && f.a >= 1 && f.b >= 1)
          r = projective_rank(HermitianSpace::aiii(f.a, f.b));
        else if (f.family == SpaceLabel::Family::DIII_t && f.a >= 3)
          r = projective_rank(HermitianSpace::diii(f.a));
        else if (f.family == SpaceLabel::Family::EIII_t)
          r = projective_rank(HermitianSpace::eiii());
        best_mplus_rank = std::max(best_mplus_rank, r);
      }
    }
    if (best_mplus_rank >= 0)
      rep.check_le("pr(" + s.str() + ") <= pr(best single M+) + 1", projective_rank(s),
                   best_mplus_rank + 1);
  };
  for (int n = 2; n <= max_param; ++n) check_pairs(HermitianSpace::ci(n));
  for (int n = 3; n <= max_param; ++n) check_pairs(HermitianSpace::diii(n));
  for (int p = 1; p <= max_param; ++p)
    for (int q = p; q <= max_param; ++q) check_pairs(HermitianSpace::aiii(p, q));
  for (int m = 3; m <= max_param; ++m) check_pairs(HermitianSpace::bdi(m));
  check_pairs(HermitianSpace::eiii());
  check_pairs(HermitianSpace::evii());

  rep.notes.push_back(
      "AIII convention: projective_rank returns max(p, q), the d+1 of the d-planes-in-P^n "
      "normalization with d >= n/2.  The complementary-index reading (rank = d over the "
      "n/2 <= d < n range) differs by the duality shift and is not used.");
  rep.notes.push_back(
      "EVII pair stored with G^R(10,2); the G^R(12,2) variant fails dim M+ + dim M- = 2 dim_C.");
  return rep;
}

}  // namespace cartan

#endif
