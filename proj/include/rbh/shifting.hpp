#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rbh/bigraph.hpp"
#include "rbh/error.hpp"

namespace rbh {

/// Two labels of the same part with x < y.
struct ShiftPair {
  int x = 0;
  int y = 0;
  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;
};

inline void validate_pair(const BipartiteGraph& g, ShiftPair p) {
  const int order = g.order();
  if (p.x < 0 || p.y < 0 || p.x >= order || p.y >= order) {
    throw Error(Errc::invalid_pair, "labels (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                        ") out of range");
  }
  if (!g.same_part(p.x, p.y)) {
    throw Error(Errc::same_part_violation,
                "labels " + std::to_string(p.x) + " and " + std::to_string(p.y) + " lie in different parts");
  }
  if (p.x >= p.y) throw Error(Errc::invalid_pair, "shift pair needs x < y");
}

/// Moves every edge {y, v} to {x, v} unless {x, v} is already present.
inline BipartiteGraph shift_xy(const BipartiteGraph& g, ShiftPair p) {
  validate_pair(g, p);
  BipartiteGraph out = g;
  if (g.in_x(p.x)) {
    const auto rx = g.row(p.x), ry = g.row(p.y);
    out.set_row(p.x, rx | ry);
    out.set_row(p.y, rx & ry);
  } else {
    const int jx = p.x - g.n_x(), jy = p.y - g.n_x();
    const std::uint64_t bx = std::uint64_t{1} << jx, by = std::uint64_t{1} << jy;
    for (int u = 0; u < g.n_x(); ++u) {
      const auto r = g.row(u);
      if ((r & by) && !(r & bx)) out.set_row(u, (r & ~by) | bx);
    }
  }
  return out;
}

/// All same-part pairs (x, y), x < y: X pairs in lexicographic order, then Y pairs.
inline std::vector<ShiftPair> shift_schedule(int n_x, int n_y) {
  std::vector<ShiftPair> pairs;
  for (int x = 0; x < n_x; ++x) {
    for (int y = x + 1; y < n_x; ++y) pairs.push_back({x, y});
  }
  for (int x = n_x; x < n_x + n_y; ++x) {
    for (int y = x + 1; y < n_x + n_y; ++y) pairs.push_back({x, y});
  }
  return pairs;
}

enum class SweepOrder { lexicographic, reversed };

/// Repeats full sweeps of the shift schedule until a sweep moves no edge.
/// Every moving shift strictly lowers the sum of edge endpoint labels, so the
/// loop terminates.
inline BipartiteGraph bi_shift(const BipartiteGraph& g, SweepOrder order = SweepOrder::lexicographic) {
  auto pairs = shift_schedule(g.n_x(), g.n_y());
  if (order == SweepOrder::reversed) std::reverse(pairs.begin(), pairs.end());
  BipartiteGraph cur = g;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& p : pairs) {
      auto next = shift_xy(cur, p);
      if (!(next == cur)) {
        cur = std::move(next);
        moved = true;
      }
    }
  }
  return cur;
}

/// Staircase test: rows are prefixes of Y and their lengths do not increase
/// down X. Equivalent to (x2, y2) in E implying (x1, y1) in E whenever
/// x1 <= x2 and y1 <= y2.
inline bool is_bi_shifted(const BipartiteGraph& g) {
  std::uint64_t prev = g.full_row();
  for (int x = 0; x < g.n_x(); ++x) {
    const auto r = g.row(x);
    if ((r & (r + 1)) != 0) return false;  // not of the form 0..01..1
    if ((r & ~prev) != 0) return false;
    prev = r;
  }
  return true;
}

}  // namespace rbh
