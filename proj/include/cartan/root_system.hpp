#ifndef CARTAN_ROOT_SYSTEM_HPP
#define CARTAN_ROOT_SYSTEM_HPP

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cartan/errors.hpp"

namespace cartan {

/// Supported simple Lie types.  F4/G2/E8 are intentionally absent: they have
/// no Hermitian symmetric quotient, so nothing downstream needs them.
enum class LieType { A, B, C, D, E6, E7 };

inline std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
  }
  return "?";
}

inline LieType lie_type_from_string(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "E6") return LieType::E6;
  if (s == "E7") return LieType::E7;
  throw parameter_error("unknown Lie type '" + s + "' (expected A, B, C, D, E6, E7)");
}

/// Positive root stored as integer coefficients over the simple roots,
/// together with the coefficients of its coroot over the simple coroots.
/// Coefficient vectors (rather than Euclidean coordinates) keep every entry
/// an integer for all supported types.
struct Root {
  std::vector<int> coeffs;        // n_i(alpha)
  std::vector<int> coroot_coeffs; // coefficients of alpha-check over the simple coroots

  int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
  bool is_simple() const { return height() == 1; }

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend bool operator<(const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs < b.coeffs;
  }
};

/// Nonnegative integer coefficients over the fundamental weights; the zero
/// vector is the trivial representation.
struct DominantWeight {
  std::vector<int> coeffs;  // m_1 ... m_l

  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> m) : coeffs(std::move(m)) {
    for (int c : coeffs)
      if (c < 0) throw parameter_error("DominantWeight: negative coefficient");
  }
  static DominantWeight zero(int rank) { return DominantWeight(std::vector<int>(rank, 0)); }
  static DominantWeight fundamental(int rank, int i) {  // 1-based index
    if (i < 1 || i > rank) throw parameter_error("fundamental weight index out of range");
    std::vector<int> m(rank, 0);
    m[i - 1] = 1;
    return DominantWeight(std::move(m));
  }
  int rank() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
  }
  int level() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
  friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator<(const DominantWeight& a, const DominantWeight& b) {
    return a.coeffs < b.coeffs;
  }
};

/// Cartan matrix A with A[i][j] = <alpha_i, alpha_j-check>.  Vertex numbering
/// for E6/E7 is the branch-on-the-middle convention (chain a1-a3-a4-a5-a6(-a7)
/// with a2 attached to a4), which coincides with Bourbaki's.
inline std::vector<std::vector<int>> cartan_matrix(LieType type, int rank) {
  auto chain = [](int l) {
    std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) {
      a[i][i] = 2;
      if (i + 1 < l) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  switch (type) {
    case LieType::A:
      if (rank < 1) throw parameter_error("type A needs rank >= 1");
      return chain(rank);
    case LieType::B: {
      if (rank < 2) throw parameter_error("type B needs rank >= 2");
      auto a = chain(rank);
      a[rank - 2][rank - 1] = -2;  // last simple root is short
      return a;
    }
    case LieType::C: {
      if (rank < 2) throw parameter_error("type C needs rank >= 2");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = -2;  // last simple root is long
      return a;
    }
    case LieType::D: {
      if (rank < 3) throw parameter_error("type D needs rank >= 3");
      auto a = chain(rank);
      // detach vertex rank from the chain and hook it onto rank-2
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      return a;
    }
    case LieType::E6:
    case LieType::E7: {
      int l = (type == LieType::E6) ? 6 : 7;
      if (rank != l)
        throw parameter_error("type " + to_string(type) + " needs rank " + std::to_string(l));
      std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
      for (int i = 0; i < l; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (l == 7) link(6, 7);
      link(2, 4);
      return a;
    }
  }
  throw parameter_error("unsupported Lie type");
}

/// Root system with base, positive roots and Cartan matrix.  Immutable after
/// construction; safe for concurrent reads.
class RootSystem {
 public:
  static RootSystem build(LieType type, int rank) {
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(type, rank);
    rs.generate_positive_roots();
    return rs;
  }

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  Root simple_root(int i) const {  // 1-based
    if (i < 1 || i > rank_) throw parameter_error("simple root index out of range");
    Root r;
    r.coeffs.assign(rank_, 0);
    r.coroot_coeffs.assign(rank_, 0);
    r.coeffs[i - 1] = r.coroot_coeffs[i - 1] = 1;
    return r;
  }

  bool is_simply_laced() const {
    return type_ == LieType::A || type_ == LieType::D || type_ == LieType::E6 ||
           type_ == LieType::E7;
  }

  /// <alpha, alpha_i-check> for a root given by coefficients.
  int simple_pairing(const std::vector<int>& coeffs, int i) const {  // i 0-based
    int s = 0;
    for (int k = 0; k < rank_; ++k) s += coeffs[k] * cartan_[k][i];
    return s;
  }

  /// One pass of simple reflections over the current positive roots; returns
  /// the number of new roots found.  The public builder runs this to a fixed
  /// point; tests use it to confirm the closure is idempotent.
  int closure_step(std::vector<Root>& roots, std::set<std::vector<int>>& seen) const {
    int added = 0;
    std::size_t upto = roots.size();
    for (std::size_t idx = 0; idx < upto; ++idx) {
      for (int i = 0; i < rank_; ++i) {
        Root img = reflect(roots[idx], i);
        if (std::any_of(img.coeffs.begin(), img.coeffs.end(), [](int c) { return c < 0; }))
          continue;  // reflection left the positive cone
        if (seen.insert(img.coeffs).second) {
          roots.push_back(std::move(img));
          ++added;
        }
      }
    }
    return added;
  }

 private:
  Root reflect(const Root& r, int i) const {  // s_i, i 0-based
    Root out = r;
    out.coeffs[i] -= simple_pairing(r.coeffs, i);
    int dual = 0;  // dual system reflects with the transposed Cartan matrix
    for (int k = 0; k < rank_; ++k) dual += r.coroot_coeffs[k] * cartan_[i][k];
    out.coroot_coeffs[i] -= dual;
    return out;
  }

  void generate_positive_roots() {
    std::set<std::vector<int>> seen;
    positive_.clear();
    for (int i = 1; i <= rank_; ++i) {
      positive_.push_back(simple_root(i));
      seen.insert(positive_.back().coeffs);
    }
    while (closure_step(positive_, seen) > 0) {
    }
    std::sort(positive_.begin(), positive_.end());
  }

  LieType type_{LieType::A};
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
};

/// <lambda (+ delta), alpha-check> as an exact integer.  delta pairs to 1
/// with every simple coroot, so including the shift adds the sum of the
/// coroot coefficients (the height, for simply-laced types).
inline long coroot_pairing(const RootSystem& rs, const DominantWeight& weight, const Root& root,
                           bool include_delta_shift) {
  if (weight.rank() != rs.rank() || static_cast<int>(root.coroot_coeffs.size()) != rs.rank())
    throw parameter_error("coroot_pairing: rank mismatch");
  long s = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    long m = weight.coeffs[i] + (include_delta_shift ? 1 : 0);
    s += m * root.coroot_coeffs[i];
  }
  return s;
}

/// Partition of the positive roots by the coefficient at a marked simple
/// root: the Levi part (coefficient zero) and the nilradical part
/// (coefficient positive).  The nilradical count is the complex dimension of
/// the associated homogeneous space.
struct ParabolicSplit {
  int marked = 0;  // 1-based
  std::vector<Root> levi_positive;
  std::vector<Root> nilradical;

  int complex_dimension() const { return static_cast<int>(nilradical.size()); }
};

inline ParabolicSplit parabolic_split(const RootSystem& rs, int marked) {
  if (marked < 1 || marked > rs.rank())
    throw parameter_error("parabolic_split: marked root index out of range");
  ParabolicSplit ps;
  ps.marked = marked;
  for (const Root& r : rs.positive_roots()) {
    if (r.coeffs[marked - 1] > 0)
      ps.nilradical.push_back(r);
    else
      ps.levi_positive.push_back(r);
  }
  return ps;
}

namespace detail {

struct DiagramComponent {
  std::vector<int> vertices;  // 0-based indices into the ambient diagram
};

/// Classify one connected induced Dynkin subdiagram by type and rank.
/// Simply-laced trees sort by arm lengths at the branch vertex; a double edge
/// is typed B or C by whether its short or long root sits at the path end.
inline std::pair<LieType, int> classify_component(const std::vector<std::vector<int>>& cartan,
                                                  const std::vector<int>& verts) {
  int k = static_cast<int>(verts.size());
  if (k == 1) return {LieType::A, 1};
  auto a = [&](int i, int j) { return cartan[verts[i]][verts[j]]; };
  std::vector<std::vector<int>> adj(k);
  int double_i = -1, double_j = -1;  // a(i,j) == -2: vertex i long, j short
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || a(i, j) == 0) continue;
      adj[i].push_back(j);
      if (a(i, j) == -2) {
        double_i = i;
        double_j = j;
      }
    }
  std::vector<int> degree(k);
  int branch = -1, branch_count = 0;
  for (int i = 0; i < k; ++i) {
    degree[i] = static_cast<int>(adj[i].size());
    if (degree[i] >= 3) {
      branch = i;
      ++branch_count;
    }
  }
  if (branch_count > 1 || (branch >= 0 && degree[branch] > 3))
    throw consistency_error("classify_component: not a Dynkin diagram shape");

  if (double_i >= 0) {
    if (branch >= 0) throw consistency_error("classify_component: branched multi-laced diagram");
    if (k == 2) return {LieType::B, 2};  // B2 and C2 coincide; B is the canonical label
    // The double edge sits at one end of the chain; the end vertex decides.
    if (degree[double_j] == 1) return {LieType::B, k};  // short root terminal
    if (degree[double_i] == 1) return {LieType::C, k};  // long root terminal
    throw consistency_error("classify_component: interior double edge");
  }
  if (branch < 0) return {LieType::A, k};
  // Arm lengths measured from the branch vertex.
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {LieType::D, k};
  if (arms == std::vector<int>{1, 2, 2}) return {LieType::E6, 6};
  if (arms == std::vector<int>{1, 2, 3}) return {LieType::E7, 7};
  throw consistency_error("classify_component: unrecognized diagram (E8-like?)");
}

}  // namespace detail

/// Remove the given simple-root vertices (1-based) from the Dynkin diagram
/// and classify the remaining connected components.  Components are returned
/// sorted by (type, rank).
inline std::vector<std::pair<LieType, int>> delete_vertices(const RootSystem& rs,
                                                            const std::set<int>& removed) {
  for (int v : removed)
    if (v < 1 || v > rs.rank()) throw parameter_error("delete_vertices: vertex out of range");
  const auto& cartan = rs.cartan();
  std::vector<int> kept;
  for (int v = 0; v < rs.rank(); ++v)
    if (!removed.count(v + 1)) kept.push_back(v);

  std::vector<bool> visited(rs.rank(), false);
  std::vector<std::pair<LieType, int>> out;
  for (int start : kept) {
    if (visited[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    visited[start] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : kept)
        if (!visited[w] && cartan[v][w] != 0) {
          visited[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(detail::classify_component(cartan, comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return static_cast<int>(x.first) < static_cast<int>(y.first);
    return x.second < y.second;
  });
  return out;
}

/// Classical positive-root counts, used as construction invariants.
inline int positive_root_count(LieType type, int rank) {
  switch (type) {
    case LieType::A: return rank * (rank + 1) / 2;
    case LieType::B:
    case LieType::C: return rank * rank;
    case LieType::D: return rank * (rank - 1);
    case LieType::E6: return 36;
    case LieType::E7: return 63;
  }
  throw parameter_error("unsupported Lie type");
}

}  // namespace cartan

#endif
