#ifndef CARTAN_MATRIX_LIE_HPP
#define CARTAN_MATRIX_LIE_HPP

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/gaussian.hpp"
#include "cartan/matrix.hpp"

namespace cartan {

using ExactMatrix = Matrix<Gaussian>;

inline ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || !x.is_square())
    throw parameter_error("bracket: size mismatch");
  return x * y - y * x;
}

inline std::vector<Gaussian> flatten(const ExactMatrix& m) {
  std::vector<Gaussian> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

inline ExactMatrix flatten_basis(const std::vector<ExactMatrix>& basis) {
  ExactMatrix rows;
  for (const auto& m : basis) rows.append_row(flatten(m));
  return rows;
}

/// Explicit matrix model of a Cartan decomposition g = k + p together with
/// the complex-structure action J on p, expressed in p-basis coordinates.
struct CartanPair {
  std::vector<ExactMatrix> k_basis;
  std::vector<ExactMatrix> p_basis;
  ExactMatrix complex_structure;  // dim p x dim p, rational entries
  std::string ambient_label;
  std::shared_ptr<const SpanSolver<Gaussian>> p_solver;  // built by the constructors

  std::size_t ambient_size() const { return p_basis.empty() ? 0 : p_basis[0].rows(); }

  /// Coordinates of a matrix in the span of p_basis.
  std::optional<std::vector<Gaussian>> p_coordinates(const ExactMatrix& m) const {
    if (p_solver) return p_solver->coordinates(flatten(m));
    return coordinates_in_span(flatten_basis(p_basis), flatten(m));
  }

  /// Apply J to an element of span(p).
  ExactMatrix apply_complex_structure(const ExactMatrix& m) const {
    auto coords = p_coordinates(m);
    if (!coords) throw parameter_error("apply_complex_structure: matrix not in span(p)");
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t j = 0; j < p_basis.size(); ++j) {
      Gaussian c(0);
      for (std::size_t i = 0; i < p_basis.size(); ++i)
        c += complex_structure(j, i) * (*coords)[i];
      if (!c.is_zero()) out += c * p_basis[j];
    }
    return out;
  }
};

/// Cartan pair of the real orthogonal model so(m+2) = (so(2)+so(m)) + p,
/// the ambient algebra of the m-dimensional complex quadric.  p is spanned by
/// the block matrices P(xi, eta) with column vectors xi, eta in R^m placed in
/// the off-diagonal band, and J(xi, eta) = (-eta, xi).
///
/// m = 2 (ambient so(4), where the quadric surface checks live) is allowed;
/// only m < 2 is rejected.
inline CartanPair bdi_cartan_pair(int m) {
  if (m < 2) throw parameter_error("bdi_cartan_pair: m must be >= 2");
  const int N = m + 2;
  auto unit = [&](int a, int b) {  // E_ab - E_ba, 0-based
    ExactMatrix e(N, N);
    e(a, b) = Gaussian(-1);
    e(b, a) = Gaussian(1);
    return e;
  };
  CartanPair cp;
  cp.ambient_label = "so(" + std::to_string(N) + ")";
  cp.k_basis.push_back(unit(0, 1));  // so(2) block on coordinates 1, 2
  for (int a = 2; a < N; ++a)
    for (int b = a + 1; b < N; ++b) cp.k_basis.push_back(unit(a, b));

  auto p_elem = [&](bool eta_slot, int i) {  // xi = e_i or eta = e_i
    ExactMatrix e(N, N);
    int row = eta_slot ? 1 : 0;
    e(row, 2 + i) = Gaussian(-1);
    e(2 + i, row) = Gaussian(1);
    return e;
  };
  for (int i = 0; i < m; ++i) cp.p_basis.push_back(p_elem(false, i));  // X_i = (e_i, 0)
  for (int i = 0; i < m; ++i) cp.p_basis.push_back(p_elem(true, i));   // Y_i = (0, e_i)

  // J X_i = Y_i, J Y_i = -X_i
  ExactMatrix J(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    J(m + i, i) = Gaussian(1);
    J(i, m + i) = Gaussian(-1);
  }
  cp.complex_structure = std::move(J);
  cp.p_solver = std::make_shared<SpanSolver<Gaussian>>(flatten_basis(cp.p_basis));
  return cp;
}

/// Outcome of a Lie-triple-system test; on failure `witness` holds the basis
/// indices (i, j, k) of a double bracket [[n_i, n_j], n_k] outside the span.
struct TripleSystemResult {
  bool is_triple_system = true;
  std::optional<std::tuple<int, int, int>> witness;
};

inline TripleSystemResult is_lie_triple_system(const std::vector<ExactMatrix>& n_basis,
                                               const CartanPair& pair) {
  for (const auto& v : n_basis)
    if (!pair.p_coordinates(v))
      throw parameter_error("is_lie_triple_system: basis element outside span(p)");
  SpanSolver<Gaussian> n_span(flatten_basis(n_basis));
  int r = static_cast<int>(n_basis.size());
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      ExactMatrix inner = bracket(n_basis[i], n_basis[j]);
      for (int k = 0; k < r; ++k) {
        ExactMatrix dbl = bracket(inner, n_basis[k]);
        if (!n_span.contains(flatten(dbl))) return {false, std::make_tuple(i, j, k)};
      }
    }
  return {true, std::nullopt};
}

inline bool is_j_stable(const std::vector<ExactMatrix>& n_basis, const CartanPair& pair) {
  SpanSolver<Gaussian> n_span(flatten_basis(n_basis));
  for (const auto& v : n_basis) {
    ExactMatrix jv = pair.apply_complex_structure(v);
    if (!n_span.contains(flatten(jv))) return false;
  }
  return true;
}

/// Doubling embedding of su(n+1) into so(2n+2):
///   A + iB  ->  [ A  B ]
///               [-B  A ]
/// for A real skew-symmetric and B real symmetric traceless.  A Lie algebra
/// homomorphism because the block product mirrors complex multiplication.
inline ExactMatrix su_to_so(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw parameter_error("su_to_so: A and B must be square of equal size");
  std::size_t n = a.rows();
  Gaussian trace(0);
  for (std::size_t i = 0; i < n; ++i) {
    trace += b(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j).is_real() || !b(i, j).is_real())
        throw parameter_error("su_to_so: entries must be real");
      if (!(a(i, j) == -a(j, i))) throw parameter_error("su_to_so: A must be skew-symmetric");
      if (!(b(i, j) == b(j, i))) throw parameter_error("su_to_so: B must be symmetric");
    }
  }
  if (!trace.is_zero()) throw parameter_error("su_to_so: B must be traceless");
  ExactMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(n + i, n + j) = a(i, j);
      out(i, n + j) = b(i, j);
      out(n + i, j) = -b(i, j);
    }
  return out;
}

/// Nondegenerate bilinear form with a fixed symmetry kind.
struct BilinearForm {
  enum class Kind { symmetric, skew };
  ExactMatrix matrix;
  Kind kind;

  BilinearForm(ExactMatrix m, Kind k) : matrix(std::move(m)), kind(k) {
    if (!matrix.is_square()) throw parameter_error("BilinearForm: matrix must be square");
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j) {
        Gaussian want = (kind == Kind::symmetric) ? matrix(j, i) : -matrix(j, i);
        if (!(matrix(i, j) == want))
          throw parameter_error("BilinearForm: matrix does not match its kind");
      }
    if (matrix.det().is_zero()) throw parameter_error("BilinearForm: degenerate form");
  }

  Gaussian evaluate(const std::vector<Gaussian>& v, const std::vector<Gaussian>& w) const {
    if (v.size() != matrix.rows() || w.size() != matrix.rows())
      throw parameter_error("BilinearForm: vector size mismatch");
    Gaussian out(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = 0; j < w.size(); ++j) out += v[i] * matrix(i, j) * w[j];
    }
    return out;
  }
};

/// The standard symplectic form [[0, -I], [I, 0]] on C^{2n}.  (Sources that
/// write this matrix with the letter J sometimes reuse the same letter for
/// the identity block; here the form and the identity are distinct objects.)
inline BilinearForm symplectic_form(int n) {
  ExactMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = Gaussian(-1);
    m(n + i, i) = Gaussian(1);
  }
  return BilinearForm(std::move(m), BilinearForm::Kind::skew);
}

/// The split symmetric form S_n = [[0, I], [I, 0]] on C^{2n}.
inline BilinearForm split_symmetric_form(int n) {
  ExactMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = Gaussian(1);
    m(n + i, i) = Gaussian(1);
  }
  return BilinearForm(std::move(m), BilinearForm::Kind::symmetric);
}

/// Sum-of-squares quadratic form z_0^2 + ... + z_{N-1}^2 as a symmetric form.
inline BilinearForm euclidean_quadric_form(int N) {
  return BilinearForm(ExactMatrix::identity(N), BilinearForm::Kind::symmetric);
}

/// True iff the form vanishes on every pair of basis vectors (rows).
inline bool isotropy_check(const Matrix<Gaussian>& subspace_basis, const BilinearForm& form) {
  for (std::size_t i = 0; i < subspace_basis.rows(); ++i)
    for (std::size_t j = 0; j < subspace_basis.rows(); ++j)
      if (!form.evaluate(subspace_basis.row(i), subspace_basis.row(j)).is_zero()) return false;
  return true;
}

}  // namespace cartan

#endif
