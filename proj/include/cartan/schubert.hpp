#ifndef CARTAN_SCHUBERT_HPP
#define CARTAN_SCHUBERT_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/rational.hpp"

namespace cartan {

/// Index of a Schubert variety in Gr(d, n) (d-planes in P^n): a strictly
/// increasing tuple 0 <= a_0 < ... < a_d <= n of projective flag dimensions.
struct SchubertIndex {
  std::vector<int> a;
  int n = 0;  // ambient P^n

  SchubertIndex() = default;
  SchubertIndex(std::vector<int> entries, int ambient_n) : a(std::move(entries)), n(ambient_n) {
    if (a.empty()) throw parameter_error("SchubertIndex: empty tuple");
    int prev = -1;
    for (int v : a) {
      if (v <= prev) throw parameter_error("SchubertIndex: entries must strictly increase");
      prev = v;
    }
    if (a.front() < 0 || a.back() > n)
      throw parameter_error("SchubertIndex: entries must lie in [0, n]");
  }

  int d() const { return static_cast<int>(a.size()) - 1; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  }

  friend bool operator<(const SchubertIndex& x, const SchubertIndex& y) { return x.a < y.a; }
  friend bool operator==(const SchubertIndex& x, const SchubertIndex& y) {
    return x.a == y.a && x.n == y.n;
  }
};

/// Cell dimension k = sum(a_i) - d(d+1)/2.  The subtrahend is pinned by the
/// anchor value k = d+1 for the index (1, 2, ..., d+1).
inline long schubert_dimension(const SchubertIndex& idx) {
  long sum = std::accumulate(idx.a.begin(), idx.a.end(), 0L);
  long d = idx.d();
  return sum - d * (d + 1) / 2;
}

/// Closed-form degree  k! / (a_0! ... a_d!) * prod_{i<j} (a_j - a_i)
/// of the Schubert variety in the Pluecker embedding; the factorial quotient
/// is checked to clear exactly.
inline Integer schubert_degree(const SchubertIndex& idx) {
  long k = schubert_dimension(idx);
  Integer num = factorial(static_cast<unsigned>(k));
  for (int i = 0; i < static_cast<int>(idx.a.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(idx.a.size()); ++j)
      num *= Integer(idx.a[j] - idx.a[i]);
  Integer den = 1;
  for (int v : idx.a) den *= factorial(static_cast<unsigned>(v));
  return exact_div(num, den, "schubert_degree");
}

/// Formal nonnegative-integer combination of Schubert classes in a fixed
/// ambient Gr(d, n); support is finite by construction.
class CohomologyClass {
 public:
  CohomologyClass(int d, int n) : d_(d), n_(n) {}

  static CohomologyClass of(const SchubertIndex& idx) {
    CohomologyClass c(idx.d(), idx.n);
    c.coeffs_[idx.a] = 1;
    return c;
  }

  int d() const { return d_; }
  int n() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::vector<int>, Integer>& coefficients() const { return coeffs_; }

  Integer coefficient(const SchubertIndex& idx) const {
    auto it = coeffs_.find(idx.a);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  void add(const std::vector<int>& a, const Integer& c) {
    auto it = coeffs_.find(a);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_[a] = c;
      return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }

 private:
  int d_, n_;
  std::map<std::vector<int>, Integer> coeffs_;
};

/// One multiplication by the hyperplane class, in the dimension-lowering
/// convention: each index entry a_i may drop by 1 provided the tuple stays
/// strictly increasing and nonnegative.  Iterating k times from a class of
/// dimension k lands on multiples of the point class (0, 1, ..., d).
///
/// This is the convention every degree computation here uses.  The dual
/// (entry-raising) form of the same step exists as pieri_multiply_raising,
/// with dual_index as the conversion between the two index pictures.
inline CohomologyClass pieri_multiply(const CohomologyClass& c) {
  CohomologyClass out(c.d(), c.n());
  for (const auto& [a, coeff] : c.coefficients()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<int> b = a;
      b[i] -= 1;
      if (b[i] < 0) continue;
      if (i > 0 && b[i] <= b[i - 1]) continue;
      out.add(b, coeff);
    }
  }
  return out;
}

/// The adjoint Pieri step: raise one entry by 1 keeping the tuple strictly
/// increasing and bounded by n.  Adjoint to pieri_multiply under the
/// coefficient pairing; iterating it computes degrees of complementary-dual
/// classes (see dual_index).
inline CohomologyClass pieri_multiply_raising(const CohomologyClass& c) {
  CohomologyClass out(c.d(), c.n());
  for (const auto& [a, coeff] : c.coefficients()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<int> b = a;
      b[i] += 1;
      if (b[i] > c.n()) continue;
      if (i + 1 < b.size() && b[i] >= b[i + 1]) continue;
      out.add(b, coeff);
    }
  }
  return out;
}

/// Complementary-dual index (n - a_d, ..., n - a_0): the conversion between
/// the lowering and raising index pictures.  Dimension and codimension swap:
/// dim dual = dim Gr - dim.
inline SchubertIndex dual_index(const SchubertIndex& idx) {
  std::vector<int> b(idx.a.size());
  for (std::size_t i = 0; i < idx.a.size(); ++i)
    b[i] = idx.n - idx.a[idx.a.size() - 1 - i];
  return SchubertIndex(std::move(b), idx.n);
}

/// Independent degree computation: iterate pieri_multiply down to dimension
/// zero and read off the coefficient of the point class.  Must agree with
/// schubert_degree everywhere; the test suite sweeps this exhaustively.
inline Integer pieri_degree_oracle(const SchubertIndex& idx) {
  long k = schubert_dimension(idx);
  CohomologyClass c = CohomologyClass::of(idx);
  for (long step = 0; step < k; ++step) c = pieri_multiply(c);
  std::vector<int> point(idx.a.size());
  std::iota(point.begin(), point.end(), 0);
  return c.coefficient(SchubertIndex(point, idx.n));
}

/// Index (1, 2, ..., d+1): the linearly embedded P^{d+1} inside Gr(d, n).
inline SchubertIndex linear_subvariety_index(int d, int n) {
  std::vector<int> a(d + 1);
  std::iota(a.begin(), a.end(), 1);
  return SchubertIndex(std::move(a), n);
}

/// Index (0, 1, ..., d): the point class.
inline SchubertIndex point_index(int d, int n) {
  std::vector<int> a(d + 1);
  std::iota(a.begin(), a.end(), 0);
  return SchubertIndex(std::move(a), n);
}

/// Index of a line inside the linear P^{d+1} = Gr(d, B), dim B = d+2: the
/// pencil of d-planes through a fixed (d-1)-plane inside B, i.e.
/// (0, 1, ..., d-1, d+1).  Cell dimension 1 and degree 1.
inline SchubertIndex line_in_linear_subvariety_index(int d, int n) {
  std::vector<int> a(d + 1);
  std::iota(a.begin(), a.end(), 0);
  a[d] = d + 1;
  return SchubertIndex(std::move(a), n);
}

/// Alternative reading of the same pencil with the last entry bumped by two,
/// (0, 1, ..., d-1, d+2).  Exposed for comparison only: its cell dimension is
/// 2, so it is a surface class, not a line.  Requires n >= d+2.
inline SchubertIndex line_in_linear_subvariety_index_alt(int d, int n) {
  std::vector<int> a(d + 1);
  std::iota(a.begin(), a.end(), 0);
  a[d] = d + 2;
  return SchubertIndex(std::move(a), n);
}

}  // namespace cartan

#endif
