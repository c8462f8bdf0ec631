#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rbh/rbh.hpp"

using namespace rbh;

namespace {

RunOptions exhaustive(int n, unsigned jobs = 4) {
  RunOptions o;
  o.n = n;
  o.jobs = jobs;
  return o;
}

RunOptions sampled(int n, std::uint64_t seed, std::uint64_t count, unsigned jobs = 4) {
  RunOptions o = exhaustive(n, jobs);
  o.mode = Mode::sample(seed, count);
  return o;
}

// graphs on the parts whose spectral radius reaches the threshold, by the
// dense oracle
std::uint64_t dense_qualifying(int nx, int ny, double thr) {
  std::uint64_t q = 0;
  for (auto g : enumerate_graphs(nx, ny)) q += oracle::dense_spectral_radius(g) >= thr - 1e-9;
  return q;
}

std::set<std::string> constant_families(const BipartiteGraph& pattern, std::size_t k) {
  std::set<std::string> out;
  for (const auto& g : labeled_copies(pattern)) out.insert(encode_family(GraphFamily(std::vector(k, g))));
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST(ExtremalCopies, Counts) {
  EXPECT_EQ(extremal_copies({FamilyTag::Q, 0, 2}).copies.size(), 4u);
  EXPECT_EQ(extremal_copies({FamilyTag::B, 1, 2}).copies.size(), 4u);
  EXPECT_EQ(extremal_copies({FamilyTag::Q, 0, 3}).copies.size(), 6u);
  EXPECT_EQ(extremal_copies({FamilyTag::T, 0, 3}).copies.size(), 3u);
  for (const auto& g : extremal_copies({FamilyTag::T, 0, 3}, true).copies) {
    EXPECT_EQ(g.n_x(), 3);
    EXPECT_EQ(g.n_y(), 2);
  }
  for (int n = 2; n <= 4; ++n) {
    const auto b = construct(FamilyTag::B, 1, n);
    for (const auto& g : extremal_copies({FamilyTag::B, 1, n}).copies) EXPECT_TRUE(is_isomorphic(g, b));
  }
}

TEST(MeetsThreshold, TieRule) {
  EXPECT_TRUE(meets_threshold(construct(FamilyTag::Q, 0, 3), Threshold::Q0, 3));
  EXPECT_TRUE(meets_threshold(transpose(construct(FamilyTag::Q, 0, 3)), Threshold::Q0, 3));
  EXPECT_TRUE(meets_threshold(complete_bipartite(3, 3), Threshold::Q0, 3));
  EXPECT_FALSE(meets_threshold(construct(FamilyTag::Q, 1, 3), Threshold::Q0, 3));
  EXPECT_TRUE(meets_threshold(construct(FamilyTag::B, 1, 4), Threshold::B1, 4));
  EXPECT_FALSE(meets_threshold(construct(FamilyTag::B, 2, 4), Threshold::B1, 4));
  const auto d = decide_threshold(construct(FamilyTag::Q, 0, 2), Threshold::Q0, 2);
  EXPECT_TRUE(d.meets);
  EXPECT_TRUE(d.tie);
}

TEST(MeetsThreshold, AgreesWithDenseOracleOnSmallParts) {
  for (int n = 2; n <= 3; ++n) {
    for (auto g : enumerate_graphs(n, n)) {
      const double rho = oracle::dense_spectral_radius(g);
      ASSERT_EQ(meets_threshold(g, Threshold::Q0, n), rho >= threshold(Threshold::Q0, n) - 1e-9);
      ASSERT_EQ(meets_threshold(g, Threshold::B1, n), rho >= threshold(Threshold::B1, n) - 1e-9);
    }
  }
}

TEST(Theorems, PathTheoremAtTwo) {
  const auto r = verify_theorem("1.4", exhaustive(2));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.target, "thm1.4");
  EXPECT_EQ(r.cases_checked, 4096u);
  EXPECT_EQ(r.hypothesis_cases, ipow(dense_qualifying(2, 2, std::sqrt(2.0)), 3));
  EXPECT_EQ(r.hypothesis_cases, 729u);
  const std::set<std::string> got(r.exceptions.begin(), r.exceptions.end());
  EXPECT_EQ(got, constant_families(construct(FamilyTag::Q, 0, 2), 3));
}

TEST(Theorems, NearlyBalancedTheoremBothOrientations) {
  for (auto o : {Orientation::x_larger, Orientation::y_larger}) {
    auto opts = exhaustive(3);
    opts.orientation = o;
    const auto r = verify_theorem("1.5", opts);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.variant, orientation_name(o));
    EXPECT_EQ(r.cases_checked, std::uint64_t{1} << 24);
    const auto [nx, ny] = o == Orientation::x_larger ? std::pair{3, 2} : std::pair{2, 3};
    EXPECT_EQ(r.hypothesis_cases, ipow(dense_qualifying(nx, ny, 2.0), 4));
    auto t = construct(FamilyTag::T, 0, 3);
    if (o == Orientation::x_larger) t = transpose(t);
    const std::set<std::string> got(r.exceptions.begin(), r.exceptions.end());
    EXPECT_EQ(got, constant_families(t, 4));
  }
}

TEST(Theorems, CycleTheoremAtTwo) {
  const auto r = verify_theorem("1.6", exhaustive(2));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_checked, 65536u);
  EXPECT_EQ(r.hypothesis_cases, ipow(dense_qualifying(2, 2, (1.0 + std::sqrt(5.0)) / 2.0), 4));
  EXPECT_EQ(r.hypothesis_cases, 625u);
  const std::set<std::string> got(r.exceptions.begin(), r.exceptions.end());
  EXPECT_EQ(got, constant_families(construct(FamilyTag::B, 1, 2), 4));
}

TEST(Theorems, SampledPathTheoremAtThree) {
  const auto r = verify_theorem("1.4", sampled(3, 5, 3000));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_checked, 3000u);
  EXPECT_EQ(r.hypothesis_cases, 3000u);
}

TEST(Theorems, ExtremalOnly) {
  RunOptions o = exhaustive(3);
  o.mode = Mode::extremal_only();
  const auto r = verify_theorem("1.4", o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_checked, 7776u);
  EXPECT_EQ(r.exceptions.size(), 6u);
}

TEST(Lemmas, CopyLemmaAtThree) {
  const auto r = verify_lemma("3.2", exhaustive(3));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_checked, 7776u);
  EXPECT_EQ(r.exceptions.size(), 6u);
  EXPECT_EQ(r.counters.at("witnesses"), 7770u);
}

TEST(Lemmas, SampledCycleCopyLemma) {
  const auto r = verify_lemma("5.2", sampled(3, 2, 2000));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.exceptions.size(), 18u);
  EXPECT_EQ(r.cases_checked, 2018u);
}

struct TargetCase {
  std::string id;
  int n;
};

void PrintTo(const TargetCase& c, std::ostream* os) { *os << c.id << " n=" << c.n; }

class AllTargets : public ::testing::TestWithParam<TargetCase> {};

TEST_P(AllTargets, PassExhaustively) {
  const auto& [id, n] = GetParam();
  const auto r = run_target(id, exhaustive(n));
  EXPECT_TRUE(r.passed()) << id << ": " << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_GT(r.cases_checked, 0u);
  EXPECT_EQ(r.target, id);
  EXPECT_EQ(r.n, n);
}

INSTANTIATE_TEST_SUITE_P(Harness, AllTargets,
                         ::testing::Values(TargetCase{"thm1.4", 2}, TargetCase{"thm1.5", 2}, TargetCase{"thm1.6", 2},
                                           TargetCase{"lem2.1", 3}, TargetCase{"lem2.2", 3}, TargetCase{"lem2.3", 2},
                                           TargetCase{"lem2.4", 2}, TargetCase{"lem2.5", 4}, TargetCase{"lem2.8", 12},
                                           TargetCase{"lem2.9", 2}, TargetCase{"lem3.1", 3}, TargetCase{"lem3.2", 2},
                                           TargetCase{"lem4.1", 3}, TargetCase{"lem4.2", 3}, TargetCase{"lem5.1", 4},
                                           TargetCase{"lem5.2", 2}, TargetCase{"obs1", 4}, TargetCase{"cor3.1", 3},
                                           TargetCase{"cor4.1", 3}, TargetCase{"cor5.1", 4},
                                           TargetCase{"shift-order", 3}),
                         [](const auto& info) {
                           std::string name = info.param.id;
                           for (auto& c : name) {
                             if (c == '.' || c == '-') c = '_';
                           }
                           return name + "_n" + std::to_string(info.param.n);
                         });

TEST(Lemmas, SampledGraphTargets) {
  for (const char* id : {"lem2.1", "lem2.2", "lem2.5", "obs1", "cor3.1"}) {
    const auto r = run_target(id, sampled(5, 3, 4000));
    EXPECT_TRUE(r.passed()) << id;
    EXPECT_EQ(r.cases_checked, 4000u) << id;
  }
}

TEST(Lemmas, ShiftOrderDependenceIsCounted) {
  EXPECT_EQ(run_target("shift-order", exhaustive(2)).counters.at("order_dependent"), 2u);
}

TEST(Lemmas, CorollaryHypothesisCount) {
  // graphs that bi-shift to the labeled extremal graph and meet the threshold
  const auto r = run_target("cor3.1", exhaustive(3));
  std::uint64_t expected = 0;
  const auto q = construct(FamilyTag::Q, 0, 3);
  for (auto g : enumerate_graphs(3, 3)) {
    if (g.edge_count() != q.edge_count() || !is_isomorphic(bi_shift(g), q)) continue;
    expected += oracle::dense_spectral_radius(g) >= threshold(Threshold::Q0, 3) - 1e-9;
  }
  EXPECT_EQ(r.hypothesis_cases, expected);
  EXPECT_EQ(expected, 6u);
}

TEST(Determinism, ReportsIndependentOfJobs) {
  for (const auto& [id, opts] : std::vector<std::pair<std::string, RunOptions>>{
           {"thm1.4", exhaustive(2)}, {"lem5.2", sampled(3, 9, 3000)}, {"lem2.1", sampled(6, 4, 5000)},
           {"thm1.6", sampled(3, 1, 2500)}}) {
    std::string first;
    for (unsigned jobs : {1u, 2u, 8u}) {
      auto o = opts;
      o.jobs = jobs;
      const auto j = to_json(run_target(id, o), false).dump();
      if (first.empty()) first = j;
      EXPECT_EQ(j, first) << id << " jobs=" << jobs;
    }
  }
}

TEST(Determinism, SeedsMatter) {
  const auto a = to_json(run_target("lem2.1", sampled(6, 1, 2000)), false);
  const auto b = to_json(run_target("lem2.1", sampled(6, 2, 2000)), false);
  EXPECT_NE(a["counters"], b["counters"]);
}

TEST(Replay, ExceptionsReplayAsExceptions) {
  const auto r = verify_theorem("1.6", exhaustive(2));
  for (const auto& text : r.exceptions) EXPECT_EQ(replay_case("thm1.6", text, exhaustive(2)), CaseOutcome::exception);
  const auto k22 = complete_bipartite(2, 2);
  EXPECT_EQ(replay_case("thm1.6", encode_family(GraphFamily(std::vector(4, k22))), exhaustive(2)),
            CaseOutcome::holds);
  EXPECT_EQ(replay_case("thm1.6", encode_family(GraphFamily(std::vector(4, BipartiteGraph(2, 2)))), exhaustive(2)),
            CaseOutcome::outside_hypothesis);
  EXPECT_THROW(replay_case("thm1.6", encode_family(GraphFamily(std::vector(4, k22))), exhaustive(3)), Error);
}

TEST(Replay, GraphCases) {
  const auto q = encode_graph(construct(FamilyTag::Q, 0, 3));
  EXPECT_EQ(replay_case("cor3.1", q, exhaustive(3)), CaseOutcome::holds);
  EXPECT_EQ(replay_case("lem2.1", "pair 0 1\n" + q, exhaustive(3)), CaseOutcome::holds);
  EXPECT_THROW(replay_case("lem2.1", q, exhaustive(3)), Error);
  EXPECT_THROW(replay_case("lem2.8", q, exhaustive(3)), Error);
  EXPECT_THROW(replay_case("lem2.1", "pair 0\n" + q, exhaustive(3)), ParseError);
}

TEST(Errors, BadRequests) {
  EXPECT_THROW(run_target("thm9.9", exhaustive(2)), Error);
  EXPECT_THROW(verify_theorem("2.1", exhaustive(2)), Error);
  try {
    run_target("thm1.4", exhaustive(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::enumeration_too_large);
  }
  try {
    run_target("lem2.1", exhaustive(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::enumeration_too_large);
  }
  EXPECT_THROW(run_target("lem5.1", exhaustive(3)), Error);
  EXPECT_THROW(run_target("lem2.3", sampled(2, 1, 0)), Error);
  EXPECT_THROW(run_target("lem2.8", sampled(6, 1, 10)), Error);
  RunOptions o = exhaustive(2);
  o.mode = Mode::extremal_only();
  EXPECT_THROW(run_target("lem2.3", o), Error);
  EXPECT_THROW(parse_orientation("sideways"), Error);
}

TEST(Report, JsonAndCsv) {
  const auto r = verify_theorem("1.4", exhaustive(2));
  const auto j = to_json(r);
  for (const char* key : {"target", "variant", "n", "mode", "cases_checked", "hypothesis_cases", "violations",
                          "exceptions", "counters", "verdict", "elapsed_seconds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["mode"]["kind"], "exhaustive");
  EXPECT_FALSE(to_json(r, false).contains("elapsed_seconds"));
  const auto s = to_json(run_target("lem2.5", sampled(3, 7, 10)));
  EXPECT_EQ(s["mode"]["seed"], 7);
  EXPECT_EQ(s["mode"]["count"], 10);
  const auto row = to_csv_row(r);
  EXPECT_TRUE(row.starts_with("thm1.4,,2,exhaustive,4096,729,0,4,pass,")) << row;
  const auto header = csv_header();
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
}
