#ifndef CARTAN_REP_THEORY_HPP
#define CARTAN_REP_THEORY_HPP

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/rational.hpp"
#include "cartan/root_system.hpp"

namespace cartan {

/// Dimension of the irreducible representation with the given highest
/// weight: the product over positive roots of <lambda+delta, alpha-check>
/// divided by the product of <delta, alpha-check>, evaluated as one exact
/// integer quotient.  Intermediate values overflow machine words already at
/// E7 scale, hence big integers throughout.
inline Integer weyl_dimension(const RootSystem& rs, const DominantWeight& weight) {
  if (weight.rank() != rs.rank()) throw parameter_error("weyl_dimension: rank mismatch");
  Integer num = 1, den = 1;
  for (const Root& alpha : rs.positive_roots()) {
    num *= coroot_pairing(rs, weight, alpha, true);
    den *= coroot_pairing(rs, DominantWeight::zero(rs.rank()), alpha, true);
  }
  return exact_div(num, den, "weyl_dimension");
}

/// Partition attached to an A-type dominant weight: row k has m_k + ... + m_l
/// boxes.
inline std::vector<int> weight_partition(const DominantWeight& weight) {
  int l = weight.rank();
  std::vector<int> mu(l, 0);
  int tail = 0;
  for (int k = l - 1; k >= 0; --k) {
    tail += weight.coeffs[k];
    mu[k] = tail;
  }
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

/// Independent dimension count for type A: semistandard Young tableaux of the
/// weight's partition with entries in {1..l+1}, via the hook content product
///   prod_cells (l+1 + j - i) / hook(i,j).
/// Shares no code path with weyl_dimension; the two are cross-checked in the
/// test suite on exhaustive sweeps.
inline Integer tableau_dimension(int ell, const DominantWeight& weight) {
  if (ell < 1) throw parameter_error("tableau_dimension: rank must be >= 1");
  if (weight.rank() != ell) throw parameter_error("tableau_dimension: rank mismatch");
  std::vector<int> mu = weight_partition(weight);
  if (mu.empty()) return 1;
  // conjugate partition for leg lengths
  std::vector<int> mu_t(mu[0], 0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int j = 0; j < mu[i]; ++j) ++mu_t[j];
  Rational dim = 1;
  int n = ell + 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (int j = 0; j < mu[i]; ++j) {
      int content = j - static_cast<int>(i);
      int hook = (mu[i] - j - 1) + (mu_t[j] - static_cast<int>(i) - 1) + 1;
      dim *= Rational(n + content, hook);
    }
  }
  dim.canonicalize();
  if (dim.get_den() != 1)
    throw consistency_error("tableau_dimension: hook content product is not an integer");
  return dim.get_num();
}

struct IrrepRecord {
  DominantWeight weight;
  Integer dimension;
  friend bool operator<(const IrrepRecord& a, const IrrepRecord& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.weight < b.weight;
  }
  friend bool operator==(const IrrepRecord& a, const IrrepRecord& b) {
    return a.weight == b.weight && a.dimension == b.dimension;
  }
};

struct IrrepEnumeration {
  std::vector<IrrepRecord> records;   // dimension <= bound, sorted
  std::vector<IrrepRecord> frontier;  // minimal pruned weights (dimension > bound)
};

/// All dominant weights of dimension <= bound.  Breadth-first search over
/// coefficient vectors from the zero weight, expanding a weight only when its
/// dimension is within the bound: the dimension is strictly increasing in
/// every coordinate, so the admissible set is a downward-closed order ideal
/// and the pruned frontier certifies completeness.
inline IrrepEnumeration enumerate_irreps_below_with_frontier(const RootSystem& rs,
                                                             const Integer& bound) {
  IrrepEnumeration out;
  if (bound < 1) return out;
  std::set<std::vector<int>> seen;
  std::deque<DominantWeight> queue;
  queue.push_back(DominantWeight::zero(rs.rank()));
  seen.insert(queue.back().coeffs);
  while (!queue.empty()) {
    DominantWeight w = queue.front();
    queue.pop_front();
    Integer dim = weyl_dimension(rs, w);
    if (dim > bound) {
      out.frontier.push_back({w, dim});
      continue;
    }
    out.records.push_back({w, dim});
    for (int i = 0; i < rs.rank(); ++i) {
      DominantWeight next = w;
      ++next.coeffs[i];
      if (seen.insert(next.coeffs).second) queue.push_back(next);
    }
  }
  std::sort(out.records.begin(), out.records.end());
  std::sort(out.frontier.begin(), out.frontier.end());
  return out;
}

inline std::vector<IrrepRecord> enumerate_irreps_below(const RootSystem& rs,
                                                       const Integer& bound) {
  return enumerate_irreps_below_with_frontier(rs, bound).records;
}

/// Result of the minimal-trivial-summand computation for sl(l+1)-modules of
/// a given dimension; records which of the two hypothesis ranges admitted
/// the input.
struct TrivialSummandResult {
  long r = 0;            // minimal possible trivial-summand dimension
  long lower_bound = 0;  // d - l - 1, the bound being certified
  bool narrow_gate = false;  // l >= 4 and l+1 < d < 2l
  bool wide_gate = false;    // l >= 5 and l+1 < d < 2(l+1)
};

/// Minimal trivial-summand dimension over all decompositions of a
/// d-dimensional sl(l+1)-module into irreducibles (complete reducibility;
/// a module is a multiset of irreducible dimensions).  Exhausts the multisets
/// by an unbounded subset-sum over the dimensions <= d of nontrivial
/// irreducibles and certifies r >= d - l - 1.
inline TrivialSummandResult min_trivial_summand(int ell, long d) {
  TrivialSummandResult res;
  res.narrow_gate = (ell >= 4) && (ell + 1 < d) && (d < 2L * ell);
  res.wide_gate = (ell >= 5) && (ell + 1 < d) && (d < 2L * (ell + 1));
  if (!res.narrow_gate && !res.wide_gate)
    throw parameter_error("min_trivial_summand: (l, d) outside both hypothesis ranges");
  res.lower_bound = d - ell - 1;

  RootSystem rs = RootSystem::build(LieType::A, ell);
  std::vector<long> dims;
  for (const IrrepRecord& rec : enumerate_irreps_below(rs, Integer(d)))
    if (!rec.weight.is_zero()) dims.push_back(rec.dimension.get_si());

  std::vector<bool> reachable(d + 1, false);
  reachable[0] = true;
  for (long s = 0; s <= d; ++s) {
    if (!reachable[s]) continue;
    for (long block : dims)
      if (s + block <= d) reachable[s + block] = true;
  }
  long best = 0;
  for (long s = 0; s <= d; ++s)
    if (reachable[s]) best = s;
  res.r = d - best;
  if (res.r < res.lower_bound)
    throw consistency_error("min_trivial_summand: computed minimum " + std::to_string(res.r) +
                            " violates the bound " + std::to_string(res.lower_bound));
  return res;
}

}  // namespace cartan

#endif
