#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rbh/error.hpp"

namespace rbh {

using Edge = std::pair<int, int>;

/// Bipartite graph on a fixed ordered bipartition (X, Y).
///
/// Labels 0..n_x-1 are the X side, n_x..n_x+n_y-1 the Y side. Each X vertex
/// stores its neighbourhood as a bitmask over Y-local indices, so a side holds
/// at most 64 vertices.
class BipartiteGraph {
 public:
  static constexpr int kMaxPart = 64;

  BipartiteGraph() = default;

  BipartiteGraph(int n_x, int n_y) : n_x_(n_x), n_y_(n_y) {
    if (n_x < 0 || n_y < 0 || n_x > kMaxPart || n_y > kMaxPart) {
      throw Error(Errc::invalid_parameter, "part sizes must lie in [0, 64], got (" +
                                               std::to_string(n_x) + ", " + std::to_string(n_y) + ")");
    }
    rows_.assign(static_cast<std::size_t>(n_x), 0);
  }

  int n_x() const noexcept { return n_x_; }
  int n_y() const noexcept { return n_y_; }
  int order() const noexcept { return n_x_ + n_y_; }

  bool in_x(int label) const noexcept { return label >= 0 && label < n_x_; }
  bool in_y(int label) const noexcept { return label >= n_x_ && label < n_x_ + n_y_; }
  bool same_part(int a, int b) const noexcept {
    return (in_x(a) && in_x(b)) || (in_y(a) && in_y(b));
  }

  /// Y-side mask with every Y-local bit set.
  std::uint64_t full_row() const noexcept {
    return n_y_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_y_) - 1;
  }

  /// Neighbourhood of X vertex x as a mask over Y-local indices.
  std::uint64_t row(int x) const { return rows_[static_cast<std::size_t>(x)]; }
  void set_row(int x, std::uint64_t mask) { rows_[static_cast<std::size_t>(x)] = mask & full_row(); }

  /// Neighbourhood of Y-local vertex j as a mask over X labels.
  std::uint64_t column(int j) const {
    std::uint64_t mask = 0;
    for (int x = 0; x < n_x_; ++x) {
      if ((rows_[static_cast<std::size_t>(x)] >> j) & 1U) mask |= std::uint64_t{1} << x;
    }
    return mask;
  }

  bool has_edge(int a, int b) const noexcept {
    if (in_y(a) && in_x(b)) std::swap(a, b);
    if (!in_x(a) || !in_y(b)) return false;
    return (rows_[static_cast<std::size_t>(a)] >> (b - n_x_)) & 1U;
  }

  void add_edge(int a, int b) { set_edge(a, b, true); }
  void remove_edge(int a, int b) { set_edge(a, b, false); }

  int degree(int label) const {
    if (in_x(label)) return std::popcount(row(label));
    if (in_y(label)) return std::popcount(column(label - n_x_));
    throw Error(Errc::invalid_parameter, "label " + std::to_string(label) + " out of range");
  }

  std::size_t edge_count() const noexcept {
    std::size_t m = 0;
    for (auto r : rows_) m += static_cast<std::size_t>(std::popcount(r));
    return m;
  }

  /// Edges as (x, y) label pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int x = 0; x < n_x_; ++x) {
      for (std::uint64_t r = row(x); r != 0; r &= r - 1) {
        out.emplace_back(x, n_x_ + std::countr_zero(r));
      }
    }
    return out;
  }

  /// Biadjacency bitmask with bit x*n_y + j for edge (x, n_x + j).
  std::uint64_t to_mask() const {
    if (n_x_ * n_y_ > 64) throw Error(Errc::invalid_parameter, "graph too large for a 64-bit mask");
    std::uint64_t mask = 0;
    for (int x = 0; x < n_x_; ++x) mask |= row(x) << (x * n_y_);
    return mask;
  }

  static BipartiteGraph from_mask(int n_x, int n_y, std::uint64_t mask) {
    BipartiteGraph g(n_x, n_y);
    if (n_x * n_y > 64) throw Error(Errc::invalid_parameter, "graph too large for a 64-bit mask");
    for (int x = 0; x < n_x; ++x) g.set_row(x, mask >> (x * n_y));
    return g;
  }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  void set_edge(int a, int b, bool present) {
    const int order = n_x_ + n_y_;
    if (a < 0 || b < 0 || a >= order || b >= order) {
      throw Error(Errc::invalid_edge, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                          ") outside labels 0.." + std::to_string(order - 1));
    }
    if (same_part(a, b)) {
      throw Error(Errc::same_part_edge,
                  "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") joins one part");
    }
    if (in_y(a)) std::swap(a, b);
    const std::uint64_t bit = std::uint64_t{1} << (b - n_x_);
    auto& r = rows_[static_cast<std::size_t>(a)];
    r = present ? (r | bit) : (r & ~bit);
  }

  int n_x_ = 0;
  int n_y_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Duplicate edges are merged; (y, x) is accepted as the same edge as (x, y).
inline BipartiteGraph make_graph(int n_x, int n_y, const std::vector<Edge>& edges) {
  BipartiteGraph g(n_x, n_y);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline BipartiteGraph complete_bipartite(int a, int b) {
  BipartiteGraph g(a, b);
  for (int x = 0; x < a; ++x) g.set_row(x, g.full_row());
  return g;
}

inline BipartiteGraph quasi_complement(const BipartiteGraph& g) {
  BipartiteGraph out(g.n_x(), g.n_y());
  for (int x = 0; x < g.n_x(); ++x) out.set_row(x, ~g.row(x));
  return out;
}

/// The same graph with the roles of X and Y exchanged.
inline BipartiteGraph transpose(const BipartiteGraph& g) {
  BipartiteGraph out(g.n_y(), g.n_x());
  for (int j = 0; j < g.n_y(); ++j) out.set_row(j, g.column(j));
  return out;
}

/// Disjoint union of g1 and g2 plus every X1-Y2 and Y1-X2 edge.
/// Within each side, g1's vertices take the lower labels.
inline BipartiteGraph join(const BipartiteGraph& g1, const BipartiteGraph& g2) {
  const int x1 = g1.n_x(), y1 = g1.n_y(), x2 = g2.n_x(), y2 = g2.n_y();
  BipartiteGraph out(x1 + x2, y1 + y2);
  const std::uint64_t y1_mask = y1 == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << y1) - 1;
  const std::uint64_t y2_mask = out.full_row() & ~y1_mask;
  for (int x = 0; x < x1; ++x) out.set_row(x, g1.row(x) | y2_mask);
  for (int x = 0; x < x2; ++x) {
    const std::uint64_t own = y1 == 64 ? 0 : g2.row(x) << y1;
    out.set_row(x1 + x, own | y1_mask);
  }
  return out;
}

/// Connected components as lists of labels, ordered by smallest member.
inline std::vector<std::vector<int>> components(const BipartiteGraph& g) {
  const int order = g.order();
  std::vector<int> comp(static_cast<std::size_t>(order), -1);
  std::vector<std::vector<int>> out;
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(g.n_y()));
  for (int j = 0; j < g.n_y(); ++j) cols[static_cast<std::size_t>(j)] = g.column(j);

  for (int s = 0; s < order; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      std::uint64_t nb = 0;
      int offset = 0;
      if (g.in_x(v)) {
        nb = g.row(v);
        offset = g.n_x();
      } else {
        nb = cols[static_cast<std::size_t>(v - g.n_x())];
      }
      for (; nb != 0; nb &= nb - 1) {
        const int w = offset + std::countr_zero(nb);
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const BipartiteGraph& g) { return components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Named extremal constructions

enum class FamilyTag { Q, R, S, T, B };

struct FamilyName {
  FamilyTag tag = FamilyTag::Q;
  int k = 0;
  int n = 1;
};

inline char tag_char(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Q: return 'Q';
    case FamilyTag::R: return 'R';
    case FamilyTag::S: return 'S';
    case FamilyTag::T: return 'T';
    case FamilyTag::B: return 'B';
  }
  return '?';
}

inline FamilyTag parse_family_tag(const std::string& s) {
  if (s == "Q") return FamilyTag::Q;
  if (s == "R") return FamilyTag::R;
  if (s == "S") return FamilyTag::S;
  if (s == "T") return FamilyTag::T;
  if (s == "B") return FamilyTag::B;
  throw Error(Errc::invalid_parameter, "unknown family tag '" + s + "'");
}

inline std::string to_string(const FamilyName& f) {
  return std::string(1, tag_char(f.tag)) + "^" + std::to_string(f.k) + "_" + std::to_string(f.n);
}

/// Builds Q, R, S, T or B with parameters (k, n).
///
///   Q = K_{k,n-k-1} join co-K_{n-k,k+1}    balanced, 0 <= k <= n-1
///   R = K_{k,k}     join co-K_{n-k,n-k}    balanced, 0 <= k <= n
///   S = K_{k,n-k-1} join co-K_{n-k,k}      parts (n, n-1), 0 <= k <= n-1
///   T = K_{k,n-k-1} join co-K_{n-k-1,k+1}  parts (n-1, n), 0 <= k <= n-1
///   B = K_{k,n-k}   join co-K_{n-k,k}      balanced, 0 <= k <= n
///
/// where co-K_{a,b} is the edgeless graph on parts (a, b).
inline BipartiteGraph construct(const FamilyName& name) {
  const int k = name.k, n = name.n;
  const int k_max = (name.tag == FamilyTag::R || name.tag == FamilyTag::B) ? n : n - 1;
  if (n < 1 || k < 0 || k > k_max || n > BipartiteGraph::kMaxPart) {
    throw Error(Errc::invalid_parameter, "parameters out of range for " + to_string(name));
  }
  auto empty = [](int a, int b) { return BipartiteGraph(a, b); };
  switch (name.tag) {
    case FamilyTag::Q: return join(complete_bipartite(k, n - k - 1), empty(n - k, k + 1));
    case FamilyTag::R: return join(complete_bipartite(k, k), empty(n - k, n - k));
    case FamilyTag::S: return join(complete_bipartite(k, n - k - 1), empty(n - k, k));
    case FamilyTag::T: return join(complete_bipartite(k, n - k - 1), empty(n - k - 1, k + 1));
    case FamilyTag::B: return join(complete_bipartite(k, n - k), empty(n - k, k));
  }
  throw Error(Errc::invalid_parameter, "unknown family tag");
}

inline BipartiteGraph construct(FamilyTag tag, int k, int n) { return construct(FamilyName{tag, k, n}); }

}  // namespace rbh
