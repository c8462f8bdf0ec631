#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "rbh/bigraph.hpp"

namespace rbh {

namespace detail {

// Maps g's X vertices onto h's X vertices one at a time. After each step the
// Y vertices of both graphs are summarised by (degree, adjacency to the
// already-mapped X vertices); a partial map survives only if the two
// multisets of summaries agree. Once every X vertex is mapped, equal
// multisets mean the Y side can be matched as well.
class PartIsomorphism {
 public:
  PartIsomorphism(const BipartiteGraph& g, const BipartiteGraph& h) : g_(g), h_(h) {}

  bool run() {
    if (g_.n_x() != h_.n_x() || g_.n_y() != h_.n_y()) return false;
    if (g_.edge_count() != h_.edge_count()) return false;

    const int nx = g_.n_x(), ny = g_.n_y();
    g_cols_.resize(static_cast<std::size_t>(ny));
    h_cols_.resize(static_cast<std::size_t>(ny));
    for (int j = 0; j < ny; ++j) {
      g_cols_[static_cast<std::size_t>(j)] = g_.column(j);
      h_cols_[static_cast<std::size_t>(j)] = h_.column(j);
    }

    std::vector<int> gdx(static_cast<std::size_t>(nx)), hdx(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) {
      gdx[static_cast<std::size_t>(x)] = std::popcount(g_.row(x));
      hdx[static_cast<std::size_t>(x)] = std::popcount(h_.row(x));
    }
    if (!same_multiset(gdx, hdx)) return false;

    std::vector<int> gdy(static_cast<std::size_t>(ny)), hdy(static_cast<std::size_t>(ny));
    for (int j = 0; j < ny; ++j) {
      gdy[static_cast<std::size_t>(j)] = std::popcount(g_cols_[static_cast<std::size_t>(j)]);
      hdy[static_cast<std::size_t>(j)] = std::popcount(h_cols_[static_cast<std::size_t>(j)]);
    }
    if (!same_multiset(gdy, hdy)) return false;

    // high-degree vertices first: fewer candidates survive early
    order_.resize(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) order_[static_cast<std::size_t>(x)] = x;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return gdx[static_cast<std::size_t>(a)] > gdx[static_cast<std::size_t>(b)];
    });
    g_deg_x_ = std::move(gdx);
    h_deg_x_ = std::move(hdx);
    g_deg_y_ = std::move(gdy);
    h_deg_y_ = std::move(hdy);
    image_.assign(static_cast<std::size_t>(nx), -1);
    g_sig_.assign(static_cast<std::size_t>(ny), 0);
    h_sig_.assign(static_cast<std::size_t>(ny), 0);
    return extend(0, 0);
  }

 private:
  static bool same_multiset(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool signatures_agree() const {
    const auto ny = g_sig_.size();
    std::vector<std::pair<int, std::uint64_t>> a(ny), b(ny);
    for (std::size_t j = 0; j < ny; ++j) {
      a[j] = {g_deg_y_[j], g_sig_[j]};
      b[j] = {h_deg_y_[j], h_sig_[j]};
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool extend(std::size_t depth, std::uint64_t used) {
    if (depth == order_.size()) return true;
    const int gx = order_[depth];
    const std::uint64_t bit = std::uint64_t{1} << depth;
    for (int hx = 0; hx < h_.n_x(); ++hx) {
      if ((used >> hx) & 1U) continue;
      if (h_deg_x_[static_cast<std::size_t>(hx)] != g_deg_x_[static_cast<std::size_t>(gx)]) continue;

      const auto saved_g = g_sig_;
      const auto saved_h = h_sig_;
      for (std::uint64_t r = g_.row(gx); r != 0; r &= r - 1) g_sig_[static_cast<std::size_t>(std::countr_zero(r))] |= bit;
      for (std::uint64_t r = h_.row(hx); r != 0; r &= r - 1) h_sig_[static_cast<std::size_t>(std::countr_zero(r))] |= bit;

      if (signatures_agree()) {
        image_[static_cast<std::size_t>(gx)] = hx;
        if (extend(depth + 1, used | (std::uint64_t{1} << hx))) return true;
        image_[static_cast<std::size_t>(gx)] = -1;
      }
      g_sig_ = saved_g;
      h_sig_ = saved_h;
    }
    return false;
  }

  const BipartiteGraph& g_;
  const BipartiteGraph& h_;
  std::vector<std::uint64_t> g_cols_, h_cols_;
  std::vector<int> g_deg_x_, h_deg_x_, g_deg_y_, h_deg_y_;
  std::vector<int> order_, image_;
  std::vector<std::uint64_t> g_sig_, h_sig_;
};

}  // namespace detail

/// Isomorphism that maps X onto X and Y onto Y.
inline bool is_part_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h) {
  return detail::PartIsomorphism(g, h).run();
}

/// Bipartition-respecting isomorphism; when both sides have equal size the
/// sides may also be exchanged. Graphs with different part sizes are never
/// isomorphic here.
inline bool is_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h) {
  if (g.n_x() != h.n_x() || g.n_y() != h.n_y()) return false;
  if (is_part_isomorphic(g, h)) return true;
  return g.n_x() == g.n_y() && is_part_isomorphic(g, transpose(h));
}

/// h itself when its part sizes match g's, else h with its sides exchanged.
inline BipartiteGraph oriented_like(const BipartiteGraph& h, const BipartiteGraph& g) {
  if (h.n_x() == g.n_x() && h.n_y() == g.n_y()) return h;
  return transpose(h);
}

}  // namespace rbh
