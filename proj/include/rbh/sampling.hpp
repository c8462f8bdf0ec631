#pragma once

#include <cstdint>
#include <vector>

#include "rbh/enumerate.hpp"
#include "rbh/error.hpp"
#include "rbh/isomorphism.hpp"
#include "rbh/parallel.hpp"
#include "rbh/rainbow.hpp"

namespace rbh {

/// Sampled runs draw case i from the stream of chunk i / kSampleChunk.
inline constexpr std::uint64_t kSampleChunk = 1024;

/// Where family members come from: uniform graphs on the parts, or uniform
/// choices from a fixed list of graphs.
struct SamplePool {
  std::vector<BipartiteGraph> graphs;  // empty means every graph on the parts
  bool non_constant = false;

  static SamplePool all() { return {}; }

  /// Labeled copies of `name` on parts (n_x, n_y); the construction is
  /// transposed when its parts come out the other way round.
  static SamplePool copies_of(const FamilyName& name, int n_x, int n_y, bool non_constant = false) {
    const auto g = construct(name);
    const auto oriented = (g.n_x() == n_x && g.n_y() == n_y) ? g : transpose(g);
    if (oriented.n_x() != n_x || oriented.n_y() != n_y) {
      throw Error(Errc::invalid_parameter, to_string(name) + " does not live on the requested parts");
    }
    return {labeled_copies(oriented), non_constant};
  }
};

namespace detail {

inline BipartiteGraph random_graph(ChunkRng& rng, int n_x, int n_y) {
  const int bits = n_x * n_y;
  const std::uint64_t mask = bits == 64 ? rng.bits() : rng.bits() & ((std::uint64_t{1} << bits) - 1);
  return BipartiteGraph::from_mask(n_x, n_y, mask);
}

inline GraphFamily draw_family(ChunkRng& rng, int n_x, int n_y, std::size_t k, const SamplePool& pool) {
  if (pool.non_constant && k < 2) throw Error(Errc::invalid_parameter, "a non-constant family needs k >= 2");
  if (pool.non_constant && pool.graphs.size() == 1) {
    throw Error(Errc::invalid_parameter, "a single-graph pool has no non-constant families");
  }
  for (;;) {
    std::vector<BipartiteGraph> members;
    members.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (pool.graphs.empty()) {
        members.push_back(random_graph(rng, n_x, n_y));
      } else {
        members.push_back(pool.graphs[rng.uniform_below(pool.graphs.size())]);
      }
    }
    GraphFamily family(std::move(members));
    if (!pool.non_constant || !family.is_constant()) return family;
  }
}

}  // namespace detail

/// `count` families of k graphs on (n_x, n_y), fully determined by `seed`.
inline std::vector<GraphFamily> sample_families(int n_x, int n_y, std::size_t k, std::uint64_t seed,
                                                std::uint64_t count, const SamplePool& pool = SamplePool::all()) {
  if (count == 0) throw Error(Errc::invalid_parameter, "count must be at least 1");
  if (k == 0) throw Error(Errc::invalid_parameter, "family size must be at least 1");
  if (n_x * n_y > 64) throw Error(Errc::invalid_parameter, "uniform sampling supports at most 64 potential edges");
  std::vector<GraphFamily> out;
  out.reserve(count);
  for (std::uint64_t chunk = 0; chunk * kSampleChunk < count; ++chunk) {
    ChunkRng rng(seed, chunk);
    const std::uint64_t stop = std::min(count, (chunk + 1) * kSampleChunk);
    for (std::uint64_t i = chunk * kSampleChunk; i < stop; ++i) {
      out.push_back(detail::draw_family(rng, n_x, n_y, k, pool));
    }
  }
  return out;
}

}  // namespace rbh
