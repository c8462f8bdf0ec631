#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rbh/rbh.hpp"

using namespace rbh;

namespace {

BipartiteGraph random_graph(std::mt19937_64& rng, int nx, int ny) {
  const int bits = nx * ny;
  const auto mask = bits == 64 ? rng() : rng() & ((std::uint64_t{1} << bits) - 1);
  return BipartiteGraph::from_mask(nx, ny, mask);
}

}  // namespace

TEST(MakeGraph, EmptyAndComplete) {
  EXPECT_EQ(make_graph(2, 2, {}).edge_count(), 0u);
  const auto k22 = make_graph(2, 2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(k22.edge_count(), 4u);
  EXPECT_EQ(k22, complete_bipartite(2, 2));
}

TEST(MakeGraph, RejectsBadEdges) {
  try {
    make_graph(2, 2, {{1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::same_part_edge);
  }
  try {
    make_graph(2, 2, {{0, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_edge);
  }
  EXPECT_THROW(make_graph(2, 2, {{-1, 2}}), Error);
}

TEST(MakeGraph, DuplicatesMergeAndReversedPairsAccepted) {
  const auto g = make_graph(2, 2, {{0, 2}, {0, 2}, {2, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(BipartiteGraph, DegreesAndMasks) {
  const auto g = make_graph(2, 3, {{0, 2}, {0, 4}, {1, 4}});
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.degree(1), 1);
  EXPECT_EQ(g.degree(2), 1);
  EXPECT_EQ(g.degree(3), 0);
  EXPECT_EQ(g.degree(4), 2);
  EXPECT_EQ(BipartiteGraph::from_mask(2, 3, g.to_mask()), g);
  EXPECT_THROW(BipartiteGraph(65, 1), Error);
}

TEST(QuasiComplement, Examples) {
  EXPECT_EQ(quasi_complement(complete_bipartite(2, 2)), BipartiteGraph(2, 2));
  EXPECT_EQ(quasi_complement(BipartiteGraph(3, 2)), complete_bipartite(3, 2));
}

TEST(QuasiComplement, InvolutionAndEdgeSum) {
  for (auto g : enumerate_graphs(3, 3)) {
    const auto c = quasi_complement(g);
    EXPECT_EQ(quasi_complement(c), g);
    EXPECT_EQ(g.edge_count() + c.edge_count(), 9u);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6));
    EXPECT_EQ(quasi_complement(quasi_complement(g)), g);
  }
}

TEST(Join, PathOnFourVertices) {
  const auto p = join(complete_bipartite(1, 1), BipartiteGraph(1, 1));
  EXPECT_EQ(p.n_x(), 2);
  EXPECT_EQ(p.n_y(), 2);
  EXPECT_EQ(p.edge_count(), 3u);
  // expand the definition: X1={0}, Y1={2}, X2={1}, Y2={3}
  EXPECT_EQ(p, make_graph(2, 2, {{0, 2}, {0, 3}, {1, 2}}));
  EXPECT_EQ(p, construct(FamilyTag::B, 1, 2));
}

TEST(Join, EmptyIsNeutral) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_graph(rng, 3, 4);
    EXPECT_EQ(join(BipartiteGraph(0, 0), g), g);
    EXPECT_EQ(join(g, BipartiteGraph(0, 0)), g);
  }
}

TEST(Join, EdgeCountFormula) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
    const int c = static_cast<int>(rng() % 5), d = static_cast<int>(rng() % 5);
    const auto g1 = random_graph(rng, a, b), g2 = random_graph(rng, c, d);
    EXPECT_EQ(join(g1, g2).edge_count(),
              g1.edge_count() + g2.edge_count() + static_cast<std::size_t>(a * d + b * c));
  }
}

TEST(Construct, SmallExamples) {
  const auto q = construct(FamilyTag::Q, 0, 3);
  EXPECT_EQ(q.n_x(), 3);
  EXPECT_EQ(q.n_y(), 3);
  EXPECT_EQ(q.edge_count(), 6u);
  EXPECT_TRUE(is_isomorphic(q, make_graph(3, 3, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})));

  const auto t = construct(FamilyTag::T, 0, 4);
  EXPECT_EQ(t.order(), 7);
  EXPECT_EQ(t.edge_count(), 9u);
  int isolated = 0;
  for (int v = 0; v < t.order(); ++v) isolated += t.degree(v) == 0;
  EXPECT_EQ(isolated, 1);
  BipartiteGraph k33_plus_vertex(3, 4);
  for (int x = 0; x < 3; ++x) k33_plus_vertex.set_row(x, 0b0111);
  EXPECT_TRUE(is_isomorphic(t, k33_plus_vertex));
}

TEST(Construct, PartSizes) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (auto tag : {FamilyTag::Q, FamilyTag::R, FamilyTag::B}) {
        const auto g = construct(tag, k, n);
        EXPECT_EQ(g.n_x(), n);
        EXPECT_EQ(g.n_y(), n);
      }
      for (auto tag : {FamilyTag::S, FamilyTag::T}) {
        const auto g = construct(tag, k, n);
        EXPECT_EQ(g.order(), 2 * n - 1);
        EXPECT_EQ(std::abs(g.n_x() - g.n_y()), 1);
      }
    }
  }
}

TEST(Construct, EdgeCountFormulas) {
  for (int n = 3; n <= 50; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const auto count = [](const BipartiteGraph& g) {
        std::size_t m = 0;
        for (int u = 0; u < g.order(); ++u)
          for (int v = u + 1; v < g.order(); ++v) m += g.has_edge(u, v);
        return m;
      };
      EXPECT_EQ(count(construct(FamilyTag::Q, k, n)), static_cast<std::size_t>(n * k + (n - k) * (n - k - 1)));
      EXPECT_EQ(count(construct(FamilyTag::T, k, n)), static_cast<std::size_t>(n * k + (n - k - 1) * (n - k - 1)));
      EXPECT_EQ(count(construct(FamilyTag::B, k, n)), static_cast<std::size_t>(n * k + (n - k) * (n - k)));
    }
  }
}

TEST(Construct, RejectsOutOfRange) {
  EXPECT_THROW(construct(FamilyTag::Q, -1, 3), Error);
  EXPECT_THROW(construct(FamilyTag::Q, 3, 3), Error);
  EXPECT_THROW(construct(FamilyTag::T, 3, 3), Error);
  EXPECT_THROW(construct(FamilyTag::S, 3, 3), Error);
  EXPECT_NO_THROW(construct(FamilyTag::R, 3, 3));
  EXPECT_NO_THROW(construct(FamilyTag::B, 3, 3));
  EXPECT_THROW(construct(FamilyTag::B, 4, 3), Error);
  try {
    construct(FamilyTag::R, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_parameter);
  }
}

TEST(Construct, FamilyNames) {
  EXPECT_EQ(to_string(FamilyName{FamilyTag::B, 1, 3}), "B^1_3");
  EXPECT_EQ(parse_family_tag("T"), FamilyTag::T);
  EXPECT_THROW(parse_family_tag("X"), Error);
}

TEST(Isomorphism, Examples) {
  // Q^0_2 with the isolated vertex at label 1 versus label 0
  const auto a = make_graph(2, 2, {{0, 2}, {0, 3}});
  const auto b = make_graph(2, 2, {{1, 2}, {1, 3}});
  EXPECT_TRUE(is_isomorphic(a, b));
  EXPECT_FALSE(is_isomorphic(complete_bipartite(2, 2), construct(FamilyTag::B, 1, 2)));
  // B^1_3 is K_{3,3} minus the edges of a star K_{1,2} centred in Y
  auto removed = BipartiteGraph(3, 3);
  removed.add_edge(1, 5);
  removed.add_edge(2, 5);
  const auto b13 = quasi_complement(removed);
  EXPECT_TRUE(is_isomorphic(construct(FamilyTag::B, 1, 3), b13));
  EXPECT_FALSE(is_isomorphic(BipartiteGraph(2, 2), BipartiteGraph(2, 3)));
}

TEST(Isomorphism, PartSwapOnlyWhenBalanced) {
  const auto g = make_graph(2, 2, {{0, 2}, {0, 3}});
  EXPECT_TRUE(is_isomorphic(g, transpose(g)));
  EXPECT_FALSE(is_part_isomorphic(g, transpose(g)));
}

TEST(Isomorphism, AgreesWithCanonicalForms) {
  std::vector<std::uint64_t> canon;
  std::vector<BipartiteGraph> all;
  for (auto g : enumerate_graphs(3, 3)) {
    canon.push_back(oracle::canonical_mask(g));
    all.push_back(g);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      ASSERT_EQ(is_isomorphic(all[i], all[j]), canon[i] == canon[j]) << i << " " << j;
    }
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(rng, 3, 4), h = random_graph(rng, 3, 4);
    ASSERT_EQ(is_isomorphic(g, h), oracle::canonical_mask(g) == oracle::canonical_mask(h));
  }
}

TEST(Isomorphism, EquivalenceRelationOnTwoByTwo) {
  std::vector<BipartiteGraph> all;
  for (auto g : enumerate_graphs(2, 2)) all.push_back(g);
  for (const auto& a : all) {
    EXPECT_TRUE(is_isomorphic(a, a));
    for (const auto& b : all) {
      EXPECT_EQ(is_isomorphic(a, b), is_isomorphic(b, a));
      for (const auto& c : all) {
        if (is_isomorphic(a, b) && is_isomorphic(b, c)) {
          EXPECT_TRUE(is_isomorphic(a, c));
        }
      }
    }
  }
}

TEST(Enumerate, CountsAndOrder) {
  EXPECT_EQ(enumerate_graphs(2, 2).size(), 16u);
  EXPECT_EQ(enumerate_graphs(2, 1).size(), 4u);
  std::set<std::uint64_t> masks;
  std::uint64_t expected = 0;
  for (auto g : enumerate_graphs(3, 3)) {
    EXPECT_EQ(g.to_mask(), expected++);
    masks.insert(g.to_mask());
  }
  EXPECT_EQ(masks.size(), 512u);
  EXPECT_THROW(enumerate_graphs(6, 7), Error);
  try {
    enumerate_graphs(7, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::enumeration_too_large);
  }
}

TEST(Enumerate, SixCopiesOfQ03) {
  const auto q = construct(FamilyTag::Q, 0, 3);
  int count = 0;
  for (auto g : enumerate_graphs(3, 3)) count += is_isomorphic(g, q);
  EXPECT_EQ(count, 6);
  EXPECT_EQ(labeled_copies(FamilyName{FamilyTag::Q, 0, 3}).size(), 6u);
}

TEST(Components, SortedLabelLists) {
  const auto g = make_graph(3, 3, {{0, 3}, {2, 5}, {2, 4}});
  const auto comps = components(g);
  const std::vector<std::vector<int>> expected = {{0, 3}, {1}, {2, 4, 5}};
  EXPECT_EQ(comps, expected);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(complete_bipartite(2, 3)));
}
