#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "rbh/rbh.hpp"

using namespace rbh;

namespace {

std::size_t parse_error_line(const std::string& text, bool family) {
  try {
    if (family) {
      decode_family(text);
    } else {
      decode_graph(text);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Bgf, Examples) {
  EXPECT_EQ(encode_graph(BipartiteGraph(1, 1)), "p bgf 1 1 0\n");
  EXPECT_EQ(encode_graph(complete_bipartite(1, 1)), "p bgf 1 1 1\ne 0 1\n");
}

TEST(Bgf, CanonicalEdgeOrder) {
  const auto g = decode_graph("p bgf 2 2 3\ne 1 2\ne 0 3\ne 0 2\n");
  EXPECT_EQ(encode_graph(g), "p bgf 2 2 3\ne 0 2\ne 0 3\ne 1 2\n");
}

TEST(Bgf, RoundTripAllThreeByThree) {
  for (auto g : enumerate_graphs(3, 3)) ASSERT_EQ(decode_graph(encode_graph(g)), g);
}

TEST(Bgf, FinalNewlineOptional) { EXPECT_EQ(decode_graph("p bgf 1 1 1\ne 0 1"), complete_bipartite(1, 1)); }

TEST(Bgf, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("", false), 1u);
  EXPECT_EQ(parse_error_line("p bgf 2 2\n", false), 1u);
  EXPECT_EQ(parse_error_line("p bfam 2 2 1\n", false), 1u);
  EXPECT_EQ(parse_error_line("p bgf 2 x 1\ne 0 2\n", false), 1u);
  EXPECT_EQ(parse_error_line("p bgf 2 2 5\n", false), 1u);
  EXPECT_EQ(parse_error_line("p bgf 2 2 2\ne 0 2\n", false), 3u);
  EXPECT_EQ(parse_error_line("p bgf 2 2 2\ne 0 2\ne 0 1\n", false), 3u);
  EXPECT_EQ(parse_error_line("p bgf 2 2 2\ne 0 2\ne 0 2\n", false), 3u);
  EXPECT_EQ(parse_error_line("p bgf 2 2 1\nf 0 2\n", false), 2u);
  EXPECT_EQ(parse_error_line("p bgf 2 2 1\ne 0 2\nextra\n", false), 3u);
  EXPECT_EQ(parse_error_line("p bgf 2 2 1\ne 0 -2\n", false), 2u);
}

TEST(Bfam, RoundTrip) {
  const GraphFamily f({construct(FamilyTag::Q, 0, 2), complete_bipartite(2, 2), BipartiteGraph(2, 2)});
  const auto text = encode_family(f);
  EXPECT_EQ(text,
            "p bfam 2 2 3\n"
            "p bgf 2 2 2\ne 0 2\ne 1 2\n"
            "---\n"
            "p bgf 2 2 4\ne 0 2\ne 0 3\ne 1 2\ne 1 3\n"
            "---\n"
            "p bgf 2 2 0\n");
  EXPECT_EQ(decode_family(text), f);
}

TEST(Bfam, Errors) {
  EXPECT_EQ(parse_error_line("p bgf 2 2 0\n", true), 1u);
  EXPECT_EQ(parse_error_line("p bfam 2 2 0\n", true), 1u);
  EXPECT_EQ(parse_error_line("p bfam 2 2 2\np bgf 2 2 0\n", true), 3u);
  EXPECT_EQ(parse_error_line("p bfam 2 2 2\np bgf 2 2 0\n--\np bgf 2 2 0\n", true), 3u);
  EXPECT_EQ(parse_error_line("p bfam 2 2 1\np bgf 2 1 0\n", true), 2u);
  EXPECT_EQ(parse_error_line("p bfam 2 2 1\np bgf 2 2 0\n---\n", true), 3u);
}

TEST(Witness, Format) {
  EXPECT_EQ(format_witness(std::nullopt, false), "none");
  EXPECT_EQ(format_witness(RainbowSubgraph{{0, 2, 1, 3}, {0, 2, 1}}, false), "path 0 2 1 3 ; g 0 2 1");
  EXPECT_EQ(format_witness(RainbowSubgraph{{0, 2, 1, 3}, {3, 0, 2, 1}}, true), "cycle 0 2 1 3 ; g 3 0 2 1");
}

TEST(Sampling, Deterministic) {
  const auto a = sample_families(2, 2, 3, 1, 5);
  const auto b = sample_families(2, 2, 3, 1, 5);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_families(2, 2, 3, 2, 5));
}

TEST(Sampling, PrefixStable) {
  // the first families do not depend on how many are requested
  const auto few = sample_families(3, 3, 4, 9, 10);
  const auto many = sample_families(3, 3, 4, 9, 3000);
  for (std::size_t i = 0; i < few.size(); ++i) EXPECT_EQ(few[i], many[i]);
}

TEST(Sampling, GoldenFile) {
  std::string text;
  const auto families = sample_families(2, 2, 3, 1, 5);
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (i > 0) text += "\n";
    text += encode_family(families[i]);
  }
  EXPECT_EQ(text, read_file(std::string(RBH_TEST_DATA) + "/sample_2x2_k3_seed1.bfam"));
}

TEST(Sampling, CopiesPool) {
  const auto pool = SamplePool::copies_of({FamilyTag::B, 1, 3}, 3, 3);
  EXPECT_EQ(pool.graphs.size(), 18u);
  const auto b13 = construct(FamilyTag::B, 1, 3);
  for (const auto& f : sample_families(3, 3, 6, 7, 10, pool)) {
    for (const auto& g : f) EXPECT_TRUE(is_isomorphic(g, b13));
  }
}

TEST(Sampling, NonConstantPool) {
  auto pool = SamplePool::copies_of({FamilyTag::Q, 0, 2}, 2, 2, true);
  for (const auto& f : sample_families(2, 2, 3, 4, 500, pool)) EXPECT_FALSE(f.is_constant());
}

TEST(Sampling, TransposedCopies) {
  const auto pool = SamplePool::copies_of({FamilyTag::T, 0, 3}, 3, 2);
  EXPECT_EQ(pool.graphs.size(), 3u);
  for (const auto& g : pool.graphs) {
    EXPECT_EQ(g.n_x(), 3);
    EXPECT_EQ(g.n_y(), 2);
  }
  EXPECT_THROW(SamplePool::copies_of({FamilyTag::T, 0, 3}, 3, 3), Error);
}

TEST(Sampling, Errors) {
  EXPECT_THROW(sample_families(2, 2, 3, 1, 0), Error);
  EXPECT_THROW(sample_families(2, 2, 0, 1, 1), Error);
}

TEST(ChunkRng, UniformBelowRange) {
  ChunkRng rng(1, 0);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.uniform_below(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(rng.uniform_below(1), 0u);
}

TEST(RunChunks, OrderAndExceptions) {
  const auto out = run_chunks(100, 8, [](std::size_t c) { return c * c; });
  for (std::size_t c = 0; c < out.size(); ++c) EXPECT_EQ(out[c], c * c);
  EXPECT_THROW(run_chunks(10, 4,
                          [](std::size_t c) -> int {
                            if (c == 7) throw Error(Errc::invalid_parameter, "chunk");
                            return 0;
                          }),
               Error);
  EXPECT_TRUE(run_chunks(0, 4, [](std::size_t) { return 1; }).empty());
}
