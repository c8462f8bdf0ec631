#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbh/bigraph.hpp"
#include "rbh/error.hpp"
#include "rbh/shifting.hpp"

namespace rbh {

/// Ordered, non-empty list of graphs on one common bipartition.
class GraphFamily {
 public:
  explicit GraphFamily(std::vector<BipartiteGraph> graphs) : graphs_(std::move(graphs)) {
    if (graphs_.empty()) throw Error(Errc::invalid_parameter, "a family needs at least one graph");
    for (const auto& g : graphs_) {
      if (g.n_x() != graphs_.front().n_x() || g.n_y() != graphs_.front().n_y()) {
        throw Error(Errc::invalid_parameter, "family members have different bipartitions");
      }
    }
  }

  std::size_t size() const noexcept { return graphs_.size(); }
  const BipartiteGraph& operator[](std::size_t i) const { return graphs_[i]; }
  const std::vector<BipartiteGraph>& graphs() const noexcept { return graphs_; }
  auto begin() const { return graphs_.begin(); }
  auto end() const { return graphs_.end(); }

  int n_x() const { return graphs_.front().n_x(); }
  int n_y() const { return graphs_.front().n_y(); }
  int order() const { return graphs_.front().order(); }

  bool is_constant() const {
    for (const auto& g : graphs_) {
      if (!(g == graphs_.front())) return false;
    }
    return true;
  }

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

 private:
  std::vector<BipartiteGraph> graphs_;
};

/// A path or cycle through `vertices` whose j-th edge is taken from family
/// member `assignment[j]`. For cycles the closing edge (last, first) is the
/// final entry of `assignment`. Family indices are 0-based.
struct RainbowSubgraph {
  std::vector<int> vertices;
  std::vector<int> assignment;
  friend bool operator==(const RainbowSubgraph&, const RainbowSubgraph&) = default;
};

enum class RainbowDefect {
  none,
  vertex_out_of_range,
  repeated_vertex,
  not_spanning,
  no_alternation,
  assignment_length,
  index_out_of_range,
  index_reused,
  missing_edge,
  not_bijective,
};

inline const char* defect_name(RainbowDefect d) {
  switch (d) {
    case RainbowDefect::none: return "none";
    case RainbowDefect::vertex_out_of_range: return "vertex out of range";
    case RainbowDefect::repeated_vertex: return "repeated vertex";
    case RainbowDefect::not_spanning: return "does not visit every vertex";
    case RainbowDefect::no_alternation: return "consecutive vertices in the same part";
    case RainbowDefect::assignment_length: return "assignment length differs from edge count";
    case RainbowDefect::index_out_of_range: return "family index out of range";
    case RainbowDefect::index_reused: return "family index used twice";
    case RainbowDefect::missing_edge: return "edge absent from its assigned graph";
    case RainbowDefect::not_bijective: return "assignment does not use every family member";
  }
  return "?";
}

/// First violated clause, checked in declaration order of RainbowDefect.
inline RainbowDefect diagnose_rainbow(const GraphFamily& family, const RainbowSubgraph& w, bool closed,
                                      bool spanning = true) {
  const int order = family.order();
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (int v : w.vertices) {
    if (v < 0 || v >= order) return RainbowDefect::vertex_out_of_range;
    if (seen[static_cast<std::size_t>(v)]) return RainbowDefect::repeated_vertex;
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (w.vertices.empty() || (spanning && static_cast<int>(w.vertices.size()) != order)) {
    return RainbowDefect::not_spanning;
  }
  const auto& g0 = family[0];
  const std::size_t nv = w.vertices.size();
  for (std::size_t i = 0; i + 1 < nv; ++i) {
    if (g0.same_part(w.vertices[i], w.vertices[i + 1])) return RainbowDefect::no_alternation;
  }
  if (closed && (nv < 4 || g0.same_part(w.vertices.back(), w.vertices.front()))) {
    return RainbowDefect::no_alternation;
  }
  const std::size_t edges = closed ? nv : nv - 1;
  if (w.assignment.size() != edges) return RainbowDefect::assignment_length;
  std::vector<bool> used(family.size(), false);
  for (std::size_t j = 0; j < edges; ++j) {
    const int g = w.assignment[j];
    if (g < 0 || static_cast<std::size_t>(g) >= family.size()) return RainbowDefect::index_out_of_range;
    if (used[static_cast<std::size_t>(g)]) return RainbowDefect::index_reused;
    used[static_cast<std::size_t>(g)] = true;
    const int a = w.vertices[j];
    const int b = w.vertices[(j + 1) % nv];
    if (!family[static_cast<std::size_t>(g)].has_edge(a, b)) return RainbowDefect::missing_edge;
  }
  if (closed && edges != family.size()) return RainbowDefect::not_bijective;
  return RainbowDefect::none;
}

/// Spanning rainbow path (closed = false) or cycle (closed = true).
inline bool verify_rainbow(const GraphFamily& family, const RainbowSubgraph& w, bool closed) {
  return diagnose_rainbow(family, w, closed) == RainbowDefect::none;
}

/// Rainbow path that need not visit every vertex.
inline bool is_rainbow_path(const GraphFamily& family, const RainbowSubgraph& w) {
  return diagnose_rainbow(family, w, false, false) == RainbowDefect::none;
}

namespace detail {

// Exhaustive search over vertex sequences in lexicographic order. Instead of
// branching on which member supplies each edge, the search keeps a maximum
// bipartite matching between the sequence's edges and the family members and
// extends it by one augmenting path per new edge; a prefix survives exactly
// when some injective assignment exists. Witness assignments are then fixed
// to the lexicographically smallest feasible one.
class RainbowSearch {
 public:
  explicit RainbowSearch(const GraphFamily& family) : family_(family) {
    order_ = family.order();
    k_ = static_cast<int>(family.size());
    if (order_ > 64 || k_ > 64) {
      throw Error(Errc::invalid_parameter, "rainbow search supports at most 64 vertices and 64 graphs");
    }
    const int nx = family.n_x();
    all_ = order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
    carriers_.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(family.n_y()), 0);
    nbr_.assign(static_cast<std::size_t>(order_), 0);
    for (int i = 0; i < k_; ++i) {
      const auto& g = family[static_cast<std::size_t>(i)];
      for (int x = 0; x < nx; ++x) {
        for (std::uint64_t r = g.row(x); r != 0; r &= r - 1) {
          const int j = std::countr_zero(r);
          carriers_[static_cast<std::size_t>(x * family.n_y() + j)] |= std::uint64_t{1} << i;
          nbr_[static_cast<std::size_t>(x)] |= std::uint64_t{1} << (nx + j);
          nbr_[static_cast<std::size_t>(nx + j)] |= std::uint64_t{1} << x;
        }
      }
    }
  }

  std::uint64_t carriers(int a, int b) const {
    const int nx = family_.n_x();
    if (a >= nx) std::swap(a, b);
    return carriers_[static_cast<std::size_t>(a * family_.n_y() + (b - nx))];
  }

  std::optional<RainbowSubgraph> hamilton(bool closed) {
    closed_ = closed;
    const int nx = family_.n_x(), ny = family_.n_y();
    std::vector<int> starts;
    if (closed) {
      starts.push_back(0);
    } else {
      for (int v = 0; v < order_; ++v) {
        if (nx == ny + 1 && v >= nx) continue;  // must start in the larger part
        if (ny == nx + 1 && v < nx) continue;
        starts.push_back(v);
      }
    }
    for (int s : starts) {
      reset(s);
      if (dfs_hamilton()) return finish(closed);
    }
    return std::nullopt;
  }

  RainbowSubgraph longest() {
    closed_ = false;
    const int bound = std::min(order_ - 1, k_);
    best_ = {0};
    stop_ = false;
    for (int s = 0; s < order_ && !stop_; ++s) {
      reset(s);
      dfs_longest(bound);
    }
    seq_ = best_;
    return finish(false);
  }

 private:
  void reset(int start) {
    seq_.assign(1, start);
    allow_.clear();
    visited_ = std::uint64_t{1} << start;
    edge_of_graph_.fill(-1);
    graph_of_edge_.fill(-1);
  }

  bool augment(int edge, std::uint64_t& seen) {
    for (std::uint64_t cand = allow_[static_cast<std::size_t>(edge)] & ~seen; cand != 0; cand &= cand - 1) {
      const int g = std::countr_zero(cand);
      seen |= std::uint64_t{1} << g;
      const int holder = edge_of_graph_[static_cast<std::size_t>(g)];
      if (holder < 0 || augment(holder, seen)) {
        edge_of_graph_[static_cast<std::size_t>(g)] = edge;
        graph_of_edge_[static_cast<std::size_t>(edge)] = g;
        return true;
      }
    }
    return false;
  }

  // Appends an edge carried by `allow`; on failure the matching is unchanged.
  bool push_edge(std::uint64_t allow) {
    allow_.push_back(allow);
    std::uint64_t seen = 0;
    const auto saved_e = edge_of_graph_;
    const auto saved_g = graph_of_edge_;
    if (augment(static_cast<int>(allow_.size()) - 1, seen)) return true;
    edge_of_graph_ = saved_e;
    graph_of_edge_ = saved_g;
    allow_.pop_back();
    return false;
  }

  void pop_edge(const std::array<int, 64>& saved_e, const std::array<int, 64>& saved_g) {
    allow_.pop_back();
    edge_of_graph_ = saved_e;
    graph_of_edge_ = saved_g;
  }

  // Every unvisited vertex needs enough neighbours, in the union of all
  // members, among the vertices it could still be joined to.
  bool hopeless() const {
    const std::uint64_t unvisited = all_ & ~visited_;
    const int start = seq_.front(), end = seq_.back();
    std::uint64_t avail = unvisited | (std::uint64_t{1} << end);
    if (closed_) avail |= std::uint64_t{1} << start;
    int single = 0;
    for (std::uint64_t u = unvisited; u != 0; u &= u - 1) {
      const int w = std::countr_zero(u);
      const int c = std::popcount(nbr_[static_cast<std::size_t>(w)] & avail);
      if (closed_) {
        if (c < 2) return true;
      } else {
        if (c == 0) return true;
        if (c == 1 && ++single > 1) return true;
      }
    }
    if (closed_ && seq_.size() >= 2) {
      // reversal symmetry: the closing vertex must exceed the second vertex
      const int second = seq_[1];
      const std::uint64_t above = second >= 63 ? 0 : ~((std::uint64_t{2} << second) - 1);
      if ((nbr_[static_cast<std::size_t>(start)] & unvisited & above) == 0) return true;
    }
    return false;
  }

  bool dfs_hamilton() {
    if (static_cast<int>(seq_.size()) == order_) {
      if (!closed_) return true;
      const int start = seq_.front(), last = seq_.back();
      if (order_ < 4 || seq_[1] >= last) return false;
      const auto allow = carriers(last, start);
      return allow != 0 && push_edge(allow);
    }
    if (hopeless()) return false;
    const int end = seq_.back();
    for (std::uint64_t cand = nbr_[static_cast<std::size_t>(end)] & ~visited_; cand != 0; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      const auto saved_e = edge_of_graph_;
      const auto saved_g = graph_of_edge_;
      if (!push_edge(carriers(end, w))) continue;
      seq_.push_back(w);
      visited_ |= std::uint64_t{1} << w;
      if (dfs_hamilton()) return true;
      visited_ &= ~(std::uint64_t{1} << w);
      seq_.pop_back();
      pop_edge(saved_e, saved_g);
    }
    return false;
  }

  void dfs_longest(int bound) {
    const int edges = static_cast<int>(seq_.size()) - 1;
    if (edges > static_cast<int>(best_.size()) - 1) {
      best_ = seq_;
      if (edges == bound) {
        stop_ = true;
        return;
      }
    }
    const int end = seq_.back();
    for (std::uint64_t cand = nbr_[static_cast<std::size_t>(end)] & ~visited_; cand != 0 && !stop_;
         cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      const auto saved_e = edge_of_graph_;
      const auto saved_g = graph_of_edge_;
      if (!push_edge(carriers(end, w))) continue;
      seq_.push_back(w);
      visited_ |= std::uint64_t{1} << w;
      dfs_longest(bound);
      visited_ &= ~(std::uint64_t{1} << w);
      seq_.pop_back();
      pop_edge(saved_e, saved_g);
    }
  }

  // Maximum matching size of `edges` against members outside `used`.
  int match_size(const std::vector<std::uint64_t>& edges, std::uint64_t used) {
    allow_.clear();
    for (auto a : edges) allow_.push_back(a & ~used);
    edge_of_graph_.fill(-1);
    graph_of_edge_.fill(-1);
    int size = 0;
    for (std::size_t e = 0; e < allow_.size(); ++e) {
      std::uint64_t seen = 0;
      if (augment(static_cast<int>(e), seen)) ++size;
    }
    return size;
  }

  RainbowSubgraph finish(bool closed) {
    RainbowSubgraph out;
    out.vertices = seq_;
    const std::size_t nv = seq_.size();
    const std::size_t ne = closed ? nv : nv - 1;
    std::vector<std::uint64_t> edges(ne);
    for (std::size_t j = 0; j < ne; ++j) edges[j] = carriers(seq_[j], seq_[(j + 1) % nv]);

    std::uint64_t used = 0;
    for (std::size_t j = 0; j < ne; ++j) {
      const std::vector<std::uint64_t> rest(edges.begin() + static_cast<std::ptrdiff_t>(j) + 1, edges.end());
      for (std::uint64_t cand = edges[j] & ~used; cand != 0; cand &= cand - 1) {
        const int g = std::countr_zero(cand);
        const std::uint64_t trial = used | (std::uint64_t{1} << g);
        if (match_size(rest, trial) == static_cast<int>(rest.size())) {
          out.assignment.push_back(g);
          used = trial;
          break;
        }
      }
    }
    return out;
  }

  const GraphFamily& family_;
  int order_ = 0;
  int k_ = 0;
  bool closed_ = false;
  bool stop_ = false;
  std::uint64_t all_ = 0;
  std::uint64_t visited_ = 0;
  std::vector<std::uint64_t> carriers_;
  std::vector<std::uint64_t> nbr_;
  std::vector<int> seq_;
  std::vector<int> best_;
  std::vector<std::uint64_t> allow_;
  std::array<int, 64> edge_of_graph_{};
  std::array<int, 64> graph_of_edge_{};
};

}  // namespace detail

/// Rainbow Hamilton path using every member exactly once, or nullopt when
/// none exists. Requires |family| = n_x + n_y - 1.
inline std::optional<RainbowSubgraph> find_rainbow_hamilton_path(const GraphFamily& family) {
  if (static_cast<int>(family.size()) != family.order() - 1) {
    throw Error(Errc::family_size_mismatch, "a Hamilton path needs " + std::to_string(family.order() - 1) +
                                                " graphs, family has " + std::to_string(family.size()));
  }
  if (std::abs(family.n_x() - family.n_y()) > 1) return std::nullopt;
  return detail::RainbowSearch(family).hamilton(false);
}

/// Rainbow Hamilton cycle, or nullopt. Requires |family| = n_x + n_y; the
/// witness starts at label 0.
inline std::optional<RainbowSubgraph> find_rainbow_hamilton_cycle(const GraphFamily& family) {
  if (static_cast<int>(family.size()) != family.order()) {
    throw Error(Errc::family_size_mismatch, "a Hamilton cycle needs " + std::to_string(family.order()) +
                                                " graphs, family has " + std::to_string(family.size()));
  }
  if (family.n_x() != family.n_y() || family.n_x() < 2) return std::nullopt;
  return detail::RainbowSearch(family).hamilton(true);
}

/// A rainbow path with the most edges; among those, the lexicographically
/// smallest vertex sequence.
inline RainbowSubgraph longest_rainbow_path(const GraphFamily& family) {
  if (family.order() == 0) return {};
  return detail::RainbowSearch(family).longest();
}

/// Applies each shift of the schedule to every member at once, sweeping until
/// no member changes.
inline GraphFamily bi_shift_family(const GraphFamily& family, SweepOrder order = SweepOrder::lexicographic) {
  auto pairs = shift_schedule(family.n_x(), family.n_y());
  if (order == SweepOrder::reversed) std::reverse(pairs.begin(), pairs.end());
  std::vector<BipartiteGraph> cur = family.graphs();
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& p : pairs) {
      for (auto& g : cur) {
        auto next = shift_xy(g, p);
        if (!(next == g)) {
          g = std::move(next);
          moved = true;
        }
      }
    }
  }
  return GraphFamily(std::move(cur));
}

}  // namespace rbh
