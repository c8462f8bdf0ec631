#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "rbh/bigraph.hpp"
#include "rbh/isomorphism.hpp"

namespace rbh {

inline constexpr int kMaxEnumerationBits = 36;

/// Every labeled graph on parts (n_x, n_y), in increasing biadjacency-mask
/// order. Single pass; split work by mask range for parallel consumers.
class GraphEnumeration {
 public:
  class iterator {
   public:
    using value_type = BipartiteGraph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n_x, int n_y, std::uint64_t mask) : n_x_(n_x), n_y_(n_y), mask_(mask) {}

    BipartiteGraph operator*() const { return BipartiteGraph::from_mask(n_x_, n_y_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    void operator++(int) { ++mask_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    int n_x_ = 0;
    int n_y_ = 0;
    std::uint64_t mask_ = 0;
  };

  GraphEnumeration(int n_x, int n_y) : n_x_(n_x), n_y_(n_y) {
    if (n_x < 0 || n_y < 0 || n_x * n_y > kMaxEnumerationBits) {
      throw Error(Errc::enumeration_too_large,
                  "parts (" + std::to_string(n_x) + ", " + std::to_string(n_y) + ") exceed " +
                      std::to_string(kMaxEnumerationBits) + " potential edges");
    }
  }

  std::uint64_t size() const noexcept { return std::uint64_t{1} << (n_x_ * n_y_); }
  iterator begin() const { return {n_x_, n_y_, 0}; }
  iterator end() const { return {n_x_, n_y_, size()}; }

 private:
  int n_x_;
  int n_y_;
};

inline GraphEnumeration enumerate_graphs(int n_x, int n_y) { return {n_x, n_y}; }

/// All labeled graphs on pattern's parts that are isomorphic to pattern,
/// in increasing mask order.
inline std::vector<BipartiteGraph> labeled_copies(const BipartiteGraph& pattern) {
  std::vector<BipartiteGraph> out;
  const auto m = pattern.edge_count();
  for (auto g : enumerate_graphs(pattern.n_x(), pattern.n_y())) {
    if (g.edge_count() == m && is_isomorphic(g, pattern)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<BipartiteGraph> labeled_copies(const FamilyName& name) {
  return labeled_copies(construct(name));
}

}  // namespace rbh
