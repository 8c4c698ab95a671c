#ifndef CARTAN_PLUECKER_HPP
#define CARTAN_PLUECKER_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/matrix.hpp"
#include "cartan/matrix_lie.hpp"
#include "cartan/poly.hpp"

namespace cartan {

using PolyMatrix = Matrix<Poly>;

/// All k-element subsets of {0..n-1} in lexicographic order; the fixed
/// coordinate order of every Pluecker vector in this library.
inline std::vector<std::vector<int>> column_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// A moving subspace of C^N: k rows of homogeneous polynomials in the curve
/// parameters (u0, u1), entries of one row sharing a common degree (constant
/// rows have degree zero).  Traces a curve in the Grassmannian of k-planes.
struct ParamSubspace {
  PolyMatrix rows;  // k x N
  int ambient = 0;  // N

  ParamSubspace() = default;
  ParamSubspace(PolyMatrix r, int n) : rows(std::move(r)), ambient(n) {
    if (static_cast<int>(rows.cols()) != n)
      throw parameter_error("ParamSubspace: column count does not match ambient dimension");
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      int deg = -1;
      for (std::size_t j = 0; j < rows.cols(); ++j) {
        const Poly& p = rows(i, j);
        if (p.is_zero()) continue;
        int d = p.homogeneous_degree();
        if (d < 0) throw parameter_error("ParamSubspace: inhomogeneous entry");
        if (deg >= 0 && d != deg)
          throw parameter_error("ParamSubspace: mixed degrees within one row");
        deg = d;
      }
    }
  }

  int k() const { return static_cast<int>(rows.rows()); }

  /// Rank of the evaluated matrix at parameter (t, 1).
  std::size_t rank_at(const Gaussian& t) const {
    ExactMatrix m(rows.rows(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) m(i, j) = rows(i, j).evaluate(t, Gaussian(1));
    return m.rank();
  }

  /// Generic-rank invariant: full row rank at three sample parameter values.
  bool has_generic_rank() const {
    for (int t = 1; t <= 3; ++t)
      if (rank_at(Gaussian(t)) != rows.rows()) return false;
    return true;
  }
};

/// Vector of maximal minors in lexicographic column-subset order.
struct PlueckerVector {
  std::vector<Poly> coords;
  std::vector<std::vector<int>> subsets;
  int k = 0;
  int ambient = 0;

  const Poly& coordinate(const std::vector<int>& subset) const {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), subset);
    if (it == subsets.end() || *it != subset)
      throw parameter_error("PlueckerVector: unknown column subset");
    return coords[static_cast<std::size_t>(it - subsets.begin())];
  }

  /// Coordinate of a possibly unsorted index list, with the sign of the
  /// sorting permutation; zero on repeated indices.
  Poly signed_coordinate(std::vector<int> idx) const {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return Poly(0);
    Poly p = coordinate(idx);
    return sign == 1 ? p : -p;
  }
};

/// Maximal minors of the row matrix.  Throws degenerate_input_error when all
/// minors vanish identically (the family never attains rank k).
inline PlueckerVector pluecker_coords(const ParamSubspace& s) {
  PlueckerVector pv;
  pv.k = s.k();
  pv.ambient = s.ambient;
  if (pv.k < 1 || pv.k > pv.ambient)
    throw parameter_error("pluecker_coords: need 1 <= k <= ambient dimension");
  pv.subsets = column_subsets(s.ambient, pv.k);
  bool any_nonzero = false;
  for (const auto& cols : pv.subsets) {
    PolyMatrix minor(pv.k, pv.k);
    for (int i = 0; i < pv.k; ++i)
      for (int j = 0; j < pv.k; ++j) minor(i, j) = s.rows(i, cols[j]);
    Poly d = minor.det();
    if (!d.is_zero()) any_nonzero = true;
    pv.coords.push_back(std::move(d));
  }
  if (!any_nonzero)
    throw degenerate_input_error("pluecker_coords: family is rank-deficient everywhere");
  return pv;
}

/// Degree of the curve map: the common homogeneous degree of the Pluecker
/// coordinates after the polynomial gcd is divided out.  Zero iff the map is
/// constant.
inline int curve_degree(const ParamSubspace& s) {
  PlueckerVector pv = pluecker_coords(s);
  int total = -1;
  Poly g;
  for (const Poly& c : pv.coords) {
    if (c.is_zero()) continue;
    int d = c.homogeneous_degree();
    if (d < 0) throw consistency_error("curve_degree: inhomogeneous Pluecker coordinate");
    if (total >= 0 && d != total)
      throw consistency_error("curve_degree: Pluecker coordinates of mixed degree");
    total = d;
    g = homogeneous_gcd(g, c);
  }
  return total - g.homogeneous_degree();
}

/// Residual of the Grassmann exchange relation for subsets |A| = k-1,
/// |B| = k+1:  sum_i (-1)^i p_{A + b_i} p_{B - b_i}.  Identically zero on any
/// vector of actual minors.
inline Poly grassmann_relation_residual(const PlueckerVector& pv, const std::vector<int>& a_set,
                                        const std::vector<int>& b_set) {
  if (static_cast<int>(a_set.size()) != pv.k - 1 ||
      static_cast<int>(b_set.size()) != pv.k + 1)
    throw parameter_error("grassmann_relation_residual: wrong subset sizes");
  Poly residual;
  for (std::size_t i = 0; i < b_set.size(); ++i) {
    std::vector<int> left = a_set;
    left.push_back(b_set[i]);
    std::vector<int> right;
    for (std::size_t j = 0; j < b_set.size(); ++j)
      if (j != i) right.push_back(b_set[j]);
    Poly term = pv.signed_coordinate(left) * pv.signed_coordinate(right);
    residual += (i % 2 == 0) ? term : -term;
  }
  return residual;
}

// ── membership checks ───────────────────────────────────────────────────────

struct MembershipResult {
  bool member = false;
  bool degenerate = false;  // the zero curve: vacuously a member
};

/// Evaluate a quadratic form on a polynomial point family and decide whether
/// the value vanishes identically in the parameters.
inline MembershipResult quadric_membership(const std::vector<Poly>& point,
                                           const BilinearForm& q) {
  if (point.size() != q.matrix.rows())
    throw parameter_error("quadric_membership: dimension mismatch");
  bool all_zero = true;
  for (const Poly& p : point)
    if (!p.is_zero()) all_zero = false;
  if (all_zero) return {true, true};
  Poly value;
  for (std::size_t i = 0; i < point.size(); ++i)
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (q.matrix(i, j).is_zero()) continue;
      value += Poly(q.matrix(i, j)) * point[i] * point[j];
    }
  return {value.is_zero(), false};
}

/// Same for a trigonometric point family (variables c, s): the value is
/// reduced modulo c^2 + s^2 - 1 before the zero test.
inline MembershipResult quadric_membership_trig(const std::vector<Poly>& point,
                                                const BilinearForm& q) {
  if (point.size() != q.matrix.rows())
    throw parameter_error("quadric_membership_trig: dimension mismatch");
  bool all_zero = true;
  for (const Poly& p : point)
    if (!p.is_zero()) all_zero = false;
  if (all_zero) return {true, true};
  Poly value;
  for (std::size_t i = 0; i < point.size(); ++i)
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (q.matrix(i, j).is_zero()) continue;
      value += Poly(q.matrix(i, j)) * point[i] * point[j];
    }
  return {trig_normal_form(value).is_zero(), false};
}

/// Whether the bilinear form vanishes identically (in the parameters) on all
/// pairs of rows of the family: the family stays inside the isotropic locus.
inline bool family_isotropy_check(const ParamSubspace& s, const BilinearForm& form) {
  if (s.ambient != static_cast<int>(form.matrix.rows()))
    throw parameter_error("family_isotropy_check: dimension mismatch");
  for (std::size_t i = 0; i < s.rows.rows(); ++i)
    for (std::size_t j = i; j < s.rows.rows(); ++j) {
      Poly value;
      for (int a = 0; a < s.ambient; ++a)
        for (int b = 0; b < s.ambient; ++b) {
          if (form.matrix(a, b).is_zero()) continue;
          value += Poly(form.matrix(a, b)) * s.rows(i, a) * s.rows(j, b);
        }
      if (!value.is_zero()) return false;
    }
  return true;
}

// ── isotropic extensions (fixed and moving) ────────────────────────────────

/// W = L + (L-perp intersect V2) for a fixed (n-1)-dimensional isotropic L
/// and complementary isotropic V2 of dimension n inside C^{2n}.  The
/// intersection must be a line; anything else is a degenerate configuration.
inline ExactMatrix lagrangian_extension(const ExactMatrix& l_basis, const BilinearForm& form,
                                        const ExactMatrix& v2_basis) {
  std::size_t two_n = form.matrix.rows();
  std::size_t n = two_n / 2;
  if (l_basis.cols() != two_n || v2_basis.cols() != two_n)
    throw parameter_error("lagrangian_extension: ambient dimension mismatch");
  if (l_basis.rows() + 1 != n || v2_basis.rows() != n)
    throw parameter_error("lagrangian_extension: expected dim L = n-1, dim V2 = n");
  if (!isotropy_check(l_basis, form))
    throw parameter_error("lagrangian_extension: L is not totally isotropic");

  // constraints form(l_i, w) = 0 for w = x * V2
  ExactMatrix constraints(l_basis.rows(), v2_basis.rows());
  for (std::size_t i = 0; i < l_basis.rows(); ++i)
    for (std::size_t j = 0; j < v2_basis.rows(); ++j)
      constraints(i, j) = form.evaluate(l_basis.row(i), v2_basis.row(j));
  ExactMatrix kernel = constraints.kernel_basis();
  if (kernel.rows() != 1)
    throw degenerate_input_error("lagrangian_extension: dim(L-perp intersect V2) = " +
                                 std::to_string(kernel.rows()) + ", expected 1");
  std::vector<Gaussian> w(two_n, Gaussian(0));
  for (std::size_t j = 0; j < v2_basis.rows(); ++j)
    for (std::size_t c = 0; c < two_n; ++c) w[c] += kernel(0, j) * v2_basis(j, c);
  ExactMatrix out = l_basis;
  out.append_row(std::move(w));
  if (!isotropy_check(out, form))
    throw consistency_error("lagrangian_extension: extension failed isotropy");
  return out;
}

/// Kernel vector of an r x (r+1) polynomial matrix by signed maximal minors;
/// satisfies M w = 0 identically.
inline std::vector<Poly> polynomial_kernel_vector(const PolyMatrix& m) {
  if (m.rows() + 1 != m.cols())
    throw parameter_error("polynomial_kernel_vector: need an r x (r+1) matrix");
  std::size_t r = m.rows();
  std::vector<Poly> w(r + 1);
  for (std::size_t drop = 0; drop <= r; ++drop) {
    PolyMatrix minor(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j <= r; ++j) {
        if (j == drop) continue;
        minor(i, cc++) = m(i, j);
      }
    }
    Poly d = minor.det();
    w[drop] = (drop % 2 == 0) ? d : -d;
  }
  return w;
}

/// Moving version of lagrangian_extension: each member of a pencil
/// L(u) of (n-1)-dimensional isotropic subspaces is extended by the line
/// L(u)-perp intersect V2.  Returns the n-row family W(u).
inline ParamSubspace lagrangian_extension_family(const ParamSubspace& l_family,
                                                 const BilinearForm& form,
                                                 const ExactMatrix& v2_basis) {
  int two_n = static_cast<int>(form.matrix.rows());
  int n = two_n / 2;
  if (l_family.ambient != two_n || l_family.k() + 1 != n ||
      static_cast<int>(v2_basis.rows()) != n)
    throw parameter_error("lagrangian_extension_family: shape mismatch");
  if (!family_isotropy_check(l_family, form))
    throw parameter_error("lagrangian_extension_family: moving L is not isotropic");

  PolyMatrix constraints(n - 1, n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n; ++j) {
      Poly entry;
      for (int a = 0; a < two_n; ++a)
        for (int b = 0; b < two_n; ++b) {
          if (form.matrix(a, b).is_zero()) continue;
          entry += Poly(form.matrix(a, b) * v2_basis(j, b)) * l_family.rows(i, a);
        }
      constraints(i, j) = std::move(entry);
    }
  std::vector<Poly> x = polynomial_kernel_vector(constraints);
  if (std::all_of(x.begin(), x.end(), [](const Poly& p) { return p.is_zero(); }))
    throw degenerate_input_error(
        "lagrangian_extension_family: intersection line degenerates identically");
  std::vector<Poly> w(two_n);
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < two_n; ++c) w[c] += x[j] * Poly(v2_basis(j, c));

  PolyMatrix rows = l_family.rows;
  rows.append_row(std::move(w));
  ParamSubspace out(std::move(rows), two_n);
  if (!family_isotropy_check(out, form))
    throw consistency_error("lagrangian_extension_family: extension failed isotropy");
  return out;
}

/// Constructive no-go witness: an n-dimensional subspace of B = L + <v>
/// containing v on which the form is not identically zero.  L must be
/// totally isotropic of dimension n and v an isotropic vector outside L.
/// Searches a deterministic grid of L-combinations; exhaustion would
/// contradict L = L-perp and must not occur.
inline ExactMatrix hyperplane_witness(int n, const std::vector<Gaussian>& v,
                                      const ExactMatrix& l_basis, const BilinearForm& form) {
  if (n < 2 || n > 5) throw parameter_error("hyperplane_witness: n must be in [2, 5]");
  if (static_cast<int>(l_basis.rows()) != n ||
      l_basis.cols() != form.matrix.rows() || v.size() != form.matrix.rows())
    throw parameter_error("hyperplane_witness: shape mismatch");
  if (!isotropy_check(l_basis, form))
    throw parameter_error("hyperplane_witness: L is not totally isotropic");
  if (!form.evaluate(v, v).is_zero())
    throw parameter_error("hyperplane_witness: v must be isotropic");
  if (row_in_span(l_basis, v))
    throw parameter_error("hyperplane_witness: v must lie outside L");

  // candidates w = sum c_i l_i, c in {-2..2}^n, in deterministic order
  std::vector<int> c(n, -2);
  while (true) {
    std::vector<Gaussian> w(l_basis.cols(), Gaussian(0));
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      all_zero = false;
      for (std::size_t j = 0; j < l_basis.cols(); ++j)
        w[j] += Gaussian(c[i]) * l_basis(i, j);
    }
    if (!all_zero && !form.evaluate(w, v).is_zero()) {
      ExactMatrix witness;
      witness.append_row(std::vector<Gaussian>(v));
      witness.append_row(std::move(w));
      for (std::size_t i = 0; i < l_basis.rows() && witness.rows() < static_cast<std::size_t>(n);
           ++i) {
        ExactMatrix trial = witness;
        trial.append_row(l_basis.row(i));
        if (trial.rank() == trial.rows()) witness = std::move(trial);
      }
      if (witness.rows() != static_cast<std::size_t>(n))
        throw consistency_error("hyperplane_witness: could not complete to dimension n");
      return witness;
    }
    int i = n - 1;
    while (i >= 0 && c[i] == 2) c[i--] = -2;
    if (i < 0) break;
    ++c[i];
  }
  throw search_exhausted_error(
      "hyperplane_witness: no non-isotropic n-plane found (grid exhausted)");
}

// ── named families ──────────────────────────────────────────────────────────

/// Pencil of d-dimensional subspaces of C^{d+1}:
///   <e_0, ..., e_{d-2}, u0 e_{d-1} + u1 e_d>.
/// The line in the projective-space model G(d, d+1); degree one.
inline ParamSubspace projective_space_line_family(int d) {
  if (d < 1) throw parameter_error("projective_space_line_family: d must be >= 1");
  PolyMatrix rows(d, d + 1);
  for (int i = 0; i < d - 1; ++i) rows(i, i) = Poly(1);
  rows(d - 1, d - 1) = Poly::x();
  rows(d - 1, d) = Poly::y();
  return ParamSubspace(std::move(rows), d + 1);
}

/// Pencil of n-dimensional subspaces of C^{2n}:
///   <e_1, ..., e_{n-1}, u0 e_n + u1 e_{2n}>,
/// totally isotropic for the symplectic form; the degree-one line of the
/// CI space inside G(n, 2n).
inline ParamSubspace ci_line_family(int n) {
  if (n < 2) throw parameter_error("ci_line_family: n must be >= 2");
  PolyMatrix rows(n, 2 * n);
  for (int i = 0; i < n - 1; ++i) rows(i, i) = Poly(1);
  rows(n - 1, n - 1) = Poly::x();
  rows(n - 1, 2 * n - 1) = Poly::y();
  return ParamSubspace(std::move(rows), 2 * n);
}

/// Product parametrization of the quadric surface z0^2+z1^2+z2^2+z3^2 = 0,
///   ([u0,u1],[v0,v1]) -> [u0v0+u1v1, -i(u0v0-u1v1), u0v1-u1v0, -i(u0v1+u1v0)],
/// restricted to a fixed second factor [v0, v1].  (The Segre relation
/// ab+cd = 0 in the coordinates a = z0+iz1 etc.; corrected product form.)
inline ParamSubspace quadric_ruling_line_family(const Gaussian& v0, const Gaussian& v1) {
  if (v0.is_zero() && v1.is_zero())
    throw parameter_error("quadric_ruling_line_family: [v0, v1] must be a projective point");
  Poly u0 = Poly::x(), u1 = Poly::y();
  Gaussian i = Gaussian::i();
  PolyMatrix rows(1, 4);
  rows(0, 0) = Poly(v0) * u0 + Poly(v1) * u1;
  rows(0, 1) = Poly(-i * v0) * u0 + Poly(i * v1) * u1;
  rows(0, 2) = Poly(v1) * u0 - Poly(v0) * u1;
  rows(0, 3) = Poly(-i * v1) * u0 + Poly(-i * v0) * u1;
  return ParamSubspace(std::move(rows), 4);
}

/// The conic in the plane z3 = 0 of P^3 cut out by z0^2+z1^2+z2^2 = 0,
/// parametrized through the circle point [1, i cos, i sin, 0] and the tangent
/// half-angle substitution; a degree-2 rational normal curve.
inline ParamSubspace veronese_conic_family() {
  std::vector<Poly> trig_point = {Poly(1), Poly::monomial(1, 0, Gaussian::i()),
                                  Poly::monomial(0, 1, Gaussian::i()), Poly(0)};
  PolyMatrix rows(1, 4);
  for (int j = 0; j < 4; ++j) rows(0, j) = weierstrass_homogenize(trig_point[j], 1);
  return ParamSubspace(std::move(rows), 4);
}

/// Standard model of the CI space: the symplectic form on C^{2n} with
/// V1 = <e_{n+1}, ..., e_{2n}> and V2 = <e_i - e_{n+i}>, both Lagrangian,
/// C^{2n} = V1 + V2.
struct IsotropicModel {
  BilinearForm form;
  ExactMatrix v1;
  ExactMatrix v2;
};

inline IsotropicModel ci_standard_model(int n) {
  if (n < 2) throw parameter_error("ci_standard_model: n must be >= 2");
  ExactMatrix v1(n, 2 * n), v2(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    v1(i, n + i) = Gaussian(1);
    v2(i, i) = Gaussian(1);
    v2(i, n + i) = Gaussian(-1);
  }
  return {symplectic_form(n), std::move(v1), std::move(v2)};
}

/// Standard model of the DIII space: the split symmetric form on C^{2n} with
/// V1 = <e_1, ..., e_n> and V2 = <e_{n+1}, ..., e_{2n}>.
inline IsotropicModel diii_standard_model(int n) {
  if (n < 2) throw parameter_error("diii_standard_model: n must be >= 2");
  ExactMatrix v1(n, 2 * n), v2(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    v1(i, i) = Gaussian(1);
    v2(i, n + i) = Gaussian(1);
  }
  return {split_symmetric_form(n), std::move(v1), std::move(v2)};
}

/// Pencil of hyperplanes of V1 through the fixed part spanned by the V1 basis
/// vectors other than `i` and `j`, moving row u0 v1[i] + u1 v1[j].  A line in
/// the domain of the isotropic-extension embedding.
inline ParamSubspace domain_pencil(const IsotropicModel& model, int i, int j) {
  int n = static_cast<int>(model.v1.rows());
  int two_n = static_cast<int>(model.v1.cols());
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw parameter_error("domain_pencil: need two distinct V1 basis indices");
  PolyMatrix rows(n - 1, two_n);
  int r = 0;
  for (int t = 0; t < n; ++t) {
    if (t == i || t == j) continue;
    for (int c = 0; c < two_n; ++c) rows(r, c) = Poly(model.v1(t, c));
    ++r;
  }
  for (int c = 0; c < two_n; ++c)
    rows(n - 2, c) = Poly::x() * Poly(model.v1(i, c)) + Poly::y() * Poly(model.v1(j, c));
  return ParamSubspace(std::move(rows), two_n);
}

/// General pencil with rational coefficient rows in V1 coordinates: fixed
/// part `fixed` (n-2 rows over the V1 basis) and moving row u0 a + u1 b.
inline ParamSubspace domain_pencil_general(const IsotropicModel& model,
                                           const Matrix<Gaussian>& fixed,
                                           const std::vector<Gaussian>& a,
                                           const std::vector<Gaussian>& b) {
  int n = static_cast<int>(model.v1.rows());
  int two_n = static_cast<int>(model.v1.cols());
  if (static_cast<int>(fixed.rows()) != n - 2 || static_cast<int>(fixed.cols()) != n ||
      static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw parameter_error("domain_pencil_general: shape mismatch");
  auto to_ambient = [&](const std::vector<Gaussian>& coords) {
    std::vector<Poly> row(two_n);
    for (int t = 0; t < n; ++t)
      for (int c = 0; c < two_n; ++c) row[c] += Poly(coords[t] * model.v1(t, c));
    return row;
  };
  PolyMatrix rows(0, two_n);
  for (std::size_t i = 0; i < fixed.rows(); ++i) rows.append_row(to_ambient(fixed.row(i)));
  std::vector<Poly> moving(two_n);
  for (int t = 0; t < n; ++t)
    for (int c = 0; c < two_n; ++c)
      moving[c] += (Poly::x() * Poly(a[t]) + Poly::y() * Poly(b[t])) * Poly(model.v1(t, c));
  rows.append_row(std::move(moving));
  ParamSubspace out(std::move(rows), two_n);
  // the pencil must actually move
  if (out.rank_at(Gaussian(0)) != static_cast<std::size_t>(n - 1) ||
      out.rank_at(Gaussian(1)) != static_cast<std::size_t>(n - 1))
    throw degenerate_input_error("domain_pencil_general: pencil is degenerate");
  return out;
}

/// Reparametrize (u0, u1) by an invertible rational 2x2 matrix.
inline ParamSubspace reparametrize(const ParamSubspace& s, const Gaussian& a, const Gaussian& b,
                                   const Gaussian& c, const Gaussian& d) {
  if ((a * d - b * c).is_zero())
    throw parameter_error("reparametrize: matrix must be invertible");
  Poly nx = Poly::monomial(1, 0, a) + Poly::monomial(0, 1, b);
  Poly ny = Poly::monomial(1, 0, c) + Poly::monomial(0, 1, d);
  PolyMatrix rows(s.rows.rows(), s.rows.cols());
  for (std::size_t i = 0; i < s.rows.rows(); ++i)
    for (std::size_t j = 0; j < s.rows.cols(); ++j) rows(i, j) = s.rows(i, j).substitute(nx, ny);
  return ParamSubspace(std::move(rows), s.ambient);
}

}  // namespace cartan

#endif
