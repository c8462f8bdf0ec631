#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbh/bfam.hpp"
#include "rbh/bgf.hpp"
#include "rbh/enumerate.hpp"
#include "rbh/isomorphism.hpp"
#include "rbh/parallel.hpp"
#include "rbh/rainbow.hpp"
#include "rbh/report.hpp"
#include "rbh/sampling.hpp"
#include "rbh/shifting.hpp"
#include "rbh/spectral.hpp"
#include "rbh/threshold_suite.hpp"

namespace rbh {

/// Largest case space an exhaustive run will walk.
inline constexpr std::uint64_t kMaxExhaustiveCases = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kExhaustiveChunk = 512;
/// Precision of the second spectral computation for threshold ties.
inline constexpr double kTieTol = 1e-14;
/// How close two spectral radii must be to count as a tie in shift checks.
inline constexpr double kShiftTie = 1e-9;

// ---------------------------------------------------------------------------
// Threshold decisions

struct ThresholdDecision {
  bool meets = false;
  bool tie = false;
};

/// Decides rho(g) >= threshold(t, n). Clear margins are taken at face value;
/// a tie within eps is accepted when g is the threshold graph itself, or when
/// a tighter recomputation still lands no lower than threshold - eps.
inline ThresholdDecision decide_threshold(const BipartiteGraph& g, Threshold t, int n,
                                          double eps = kDefaultEps, double tol = kDefaultTol) {
  switch (compare_to_threshold(g, t, n, eps, tol)) {
    case Comparison::above: return {true, false};
    case Comparison::below: return {false, false};
    case Comparison::at_tie: break;
  }
  if (is_isomorphic(g, oriented_like(threshold_graph(t, n), g))) return {true, true};
  const double rho = spectral_radius(g, kTieTol).value;
  return {rho >= threshold(t, n) - eps, true};
}

inline bool meets_threshold(const BipartiteGraph& g, Threshold t, int n, double eps = kDefaultEps,
                            double tol = kDefaultTol) {
  return decide_threshold(g, t, n, eps, tol).meets;
}

// ---------------------------------------------------------------------------
// Labeled extremal copies

struct ExtremalCopySet {
  FamilyName name;
  std::vector<BipartiteGraph> copies;
};

/// All labeled graphs on the parts of construct(name), or on the exchanged
/// parts when `transposed`, that are isomorphic to the construction.
inline ExtremalCopySet extremal_copies(const FamilyName& name, bool transposed = false) {
  auto g = construct(name);
  if (transposed) g = transpose(g);
  return {name, labeled_copies(g)};
}

// ---------------------------------------------------------------------------
// Run options

enum class Orientation { x_larger, y_larger };

inline const char* orientation_name(Orientation o) {
  return o == Orientation::x_larger ? "x_larger" : "y_larger";
}

inline Orientation parse_orientation(const std::string& s) {
  if (s == "x_larger") return Orientation::x_larger;
  if (s == "y_larger") return Orientation::y_larger;
  throw Error(Errc::invalid_parameter, "unknown orientation '" + s + "'");
}

/// Harness parameters. For the random-graph property targets (lem2.1, lem2.2,
/// lem2.5) in sample mode, n bounds the part sizes; for lem2.8 it is n_max.
struct RunOptions {
  int n = 2;
  Mode mode = Mode::exhaustive();
  unsigned jobs = default_jobs();
  double eps = kDefaultEps;
  double tol = kDefaultTol;
  Orientation orientation = Orientation::x_larger;
};

enum class CaseOutcome { outside_hypothesis, holds, exception, violation };

inline const std::vector<std::string>& target_ids() {
  static const std::vector<std::string> ids = {
      "thm1.4", "thm1.5", "thm1.6", "lem2.1", "lem2.2", "lem2.3", "lem2.4", "lem2.5", "lem2.8",
      "lem2.9", "lem3.1", "lem3.2", "lem4.1", "lem4.2", "lem5.1", "lem5.2", "obs1",   "cor3.1",
      "cor4.1", "cor5.1", "shift-order"};
  return ids;
}

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

inline void merge_into(VerificationReport& total, const VerificationReport& part) {
  total.cases_checked += part.cases_checked;
  total.hypothesis_cases += part.hypothesis_cases;
  total.violations.insert(total.violations.end(), part.violations.begin(), part.violations.end());
  total.exceptions.insert(total.exceptions.end(), part.exceptions.begin(), part.exceptions.end());
  for (const auto& [key, value] : part.counters) total.counters[key] += value;
}

inline void record(VerificationReport& r, CaseOutcome outcome, const std::string& text) {
  ++r.cases_checked;
  if (outcome == CaseOutcome::outside_hypothesis) return;
  ++r.hypothesis_cases;
  if (outcome == CaseOutcome::exception) r.exceptions.push_back(text);
  if (outcome == CaseOutcome::violation) r.violations.push_back(text);
}

inline std::pair<int, int> nearly_balanced_parts(int n, Orientation o) {
  return o == Orientation::x_larger ? std::pair{n, n - 1} : std::pair{n - 1, n};
}

inline std::optional<RainbowSubgraph> search(const GraphFamily& f, bool closed) {
  return closed ? find_rainbow_hamilton_cycle(f) : find_rainbow_hamilton_path(f);
}

// ---------------------------------------------------------------------------
// Family targets

enum class FamilyKind { theorem, copies, shift_contrapositive, longest_path };

struct FamilySetting {
  FamilyKind kind = FamilyKind::theorem;
  int n_x = 0;
  int n_y = 0;
  std::size_t k = 0;
  bool closed = false;
  Threshold threshold = Threshold::Q0;
  int n = 0;
  BipartiteGraph extremal;
  FamilyName extremal_name;
};

inline FamilySetting family_setting(const std::string& id, const RunOptions& o) {
  FamilySetting s;
  const int n = o.n;
  s.n = n;
  auto balanced = [&](std::size_t k) {
    s.n_x = s.n_y = n;
    s.k = k;
  };
  auto extremal = [&](FamilyTag tag, int kk, Threshold t) {
    s.extremal_name = {tag, kk, n};
    s.extremal = oriented_like(construct(s.extremal_name), BipartiteGraph(s.n_x, s.n_y));
    s.threshold = t;
  };
  if (n < 2) throw Error(Errc::invalid_parameter, id + " needs n >= 2");
  if (id == "thm1.4" || id == "lem3.2") {
    s.kind = id == "thm1.4" ? FamilyKind::theorem : FamilyKind::copies;
    balanced(2 * static_cast<std::size_t>(n) - 1);
    extremal(FamilyTag::Q, 0, Threshold::Q0);
  } else if (id == "thm1.5" || id == "lem4.2") {
    s.kind = id == "thm1.5" ? FamilyKind::theorem : FamilyKind::copies;
    std::tie(s.n_x, s.n_y) = nearly_balanced_parts(n, o.orientation);
    s.k = 2 * static_cast<std::size_t>(n) - 2;
    extremal(FamilyTag::T, 0, Threshold::T0);
  } else if (id == "thm1.6" || id == "lem5.2") {
    s.kind = id == "thm1.6" ? FamilyKind::theorem : FamilyKind::copies;
    s.closed = true;
    balanced(2 * static_cast<std::size_t>(n));
    extremal(FamilyTag::B, 1, Threshold::B1);
  } else if (id == "lem2.3") {
    s.kind = FamilyKind::shift_contrapositive;
    balanced(2 * static_cast<std::size_t>(n) - 1);
  } else if (id == "lem2.4") {
    s.kind = FamilyKind::shift_contrapositive;
    s.closed = true;
    balanced(2 * static_cast<std::size_t>(n));
  } else {
    s.kind = FamilyKind::longest_path;
    balanced(2 * static_cast<std::size_t>(n) - 1);
  }
  return s;
}

inline bool extendable(const GraphFamily& f, const RainbowSubgraph& w) {
  std::uint64_t used = 0, on_path = 0;
  for (int g : w.assignment) used |= std::uint64_t{1} << g;
  for (int v : w.vertices) on_path |= std::uint64_t{1} << v;
  for (int end : {w.vertices.front(), w.vertices.back()}) {
    for (std::size_t g = 0; g < f.size(); ++g) {
      if ((used >> g) & 1U) continue;
      for (int v = 0; v < f.order(); ++v) {
        if (!((on_path >> v) & 1U) && f[g].has_edge(end, v)) return true;
      }
    }
  }
  return false;
}

/// `hypothesis` is the theorem's spectral hypothesis for every member; the
/// other kinds ignore it.
inline CaseOutcome classify_family(const FamilySetting& s, const GraphFamily& f, bool hypothesis,
                                   VerificationReport& r) {
  switch (s.kind) {
    case FamilyKind::theorem: {
      if (!hypothesis) return CaseOutcome::outside_hypothesis;
      const auto w = search(f, s.closed);
      if (w) {
        ++r.counters["witnesses"];
        return verify_rainbow(f, *w, s.closed) ? CaseOutcome::holds : CaseOutcome::violation;
      }
      const bool extremal = f.is_constant() && is_isomorphic(f[0], s.extremal);
      return extremal ? CaseOutcome::exception : CaseOutcome::violation;
    }
    case FamilyKind::copies: {
      const auto w = search(f, s.closed);
      if (w) ++r.counters["witnesses"];
      if (f.is_constant()) {
        ++r.counters["constant_families"];
        return w ? CaseOutcome::violation : CaseOutcome::exception;
      }
      return (w && verify_rainbow(f, *w, s.closed)) ? CaseOutcome::holds : CaseOutcome::violation;
    }
    case FamilyKind::shift_contrapositive: {
      if (const auto w = search(f, s.closed)) {
        ++r.counters["witnesses"];
        return verify_rainbow(f, *w, s.closed) ? CaseOutcome::outside_hypothesis : CaseOutcome::violation;
      }
      for (const auto& p : shift_schedule(f.n_x(), f.n_y())) {
        std::vector<BipartiteGraph> shifted;
        for (const auto& g : f) shifted.push_back(shift_xy(g, p));
        ++r.counters["single_shifts"];
        if (search(GraphFamily(std::move(shifted)), s.closed)) return CaseOutcome::violation;
      }
      const auto full = bi_shift_family(f);
      for (const auto& g : full) {
        if (!is_bi_shifted(g)) return CaseOutcome::violation;
      }
      return search(full, s.closed) ? CaseOutcome::violation : CaseOutcome::holds;
    }
    case FamilyKind::longest_path: {
      const auto w = longest_rainbow_path(f);
      if (static_cast<int>(w.vertices.size()) == f.order()) ++r.counters["hamiltonian"];
      if (!is_rainbow_path(f, w)) return CaseOutcome::violation;
      return extendable(f, w) ? CaseOutcome::violation : CaseOutcome::holds;
    }
  }
  return CaseOutcome::violation;
}

inline bool family_hypothesis(const FamilySetting& s, const GraphFamily& f, const RunOptions& o) {
  if (s.kind != FamilyKind::theorem) return true;
  for (const auto& g : f) {
    if (!meets_threshold(g, s.threshold, s.n, o.eps, o.tol)) return false;
  }
  return true;
}

inline GraphFamily family_at(const std::vector<BipartiteGraph>& pool, std::size_t k, std::uint64_t index) {
  std::vector<BipartiteGraph> members(k);
  for (std::size_t j = k; j-- > 0;) {
    members[j] = pool[index % pool.size()];
    index /= pool.size();
  }
  return GraphFamily(std::move(members));
}

inline std::vector<BipartiteGraph> all_graphs(int n_x, int n_y) {
  std::vector<BipartiteGraph> out;
  for (auto g : enumerate_graphs(n_x, n_y)) out.push_back(std::move(g));
  return out;
}

// Walks every ordered family over `pool` (the first member varies slowest).
inline VerificationReport walk_families(const FamilySetting& s, const std::vector<BipartiteGraph>& pool,
                                        bool hypothesis, const RunOptions& o) {
  const std::uint64_t total = saturating_pow(pool.size(), s.k);
  const std::uint64_t chunks = (total + kExhaustiveChunk - 1) / kExhaustiveChunk;
  const auto parts = run_chunks(chunks, o.jobs, [&](std::size_t c) {
    VerificationReport r;
    const std::uint64_t stop = std::min(total, (c + 1) * kExhaustiveChunk);
    for (std::uint64_t i = c * kExhaustiveChunk; i < stop; ++i) {
      const auto f = family_at(pool, s.k, i);
      record(r, classify_family(s, f, hypothesis, r), encode_family(f));
    }
    return r;
  });
  VerificationReport out;
  for (const auto& p : parts) merge_into(out, p);
  return out;
}

inline VerificationReport run_family_target(const std::string& id, const RunOptions& o) {
  const auto s = family_setting(id, o);
  VerificationReport out;
  const auto kind = o.mode.kind;

  // member pools: every graph on the parts, or the labeled extremal copies
  const bool over_copies = s.kind == FamilyKind::copies || kind == ModeKind::extremal_only;
  if (kind == ModeKind::extremal_only && s.kind != FamilyKind::theorem && s.kind != FamilyKind::copies) {
    throw Error(Errc::invalid_parameter, id + " has no extremal-only mode");
  }

  if (kind == ModeKind::exhaustive || kind == ModeKind::extremal_only) {
    std::vector<BipartiteGraph> pool;
    std::uint64_t pool_size = 0;
    if (over_copies) {
      pool = labeled_copies(s.extremal);
      pool_size = pool.size();
    } else {
      if (s.n_x * s.n_y > 24) {
        throw Error(Errc::enumeration_too_large, id + " family space is too large for exhaustive mode");
      }
      pool_size = std::uint64_t{1} << (s.n_x * s.n_y);
    }
    const std::uint64_t space = saturating_pow(pool_size, s.k);
    if (space > kMaxExhaustiveCases) {
      throw Error(Errc::enumeration_too_large, id + " at n=" + std::to_string(s.n) + " has " +
                                                   (space == std::numeric_limits<std::uint64_t>::max()
                                                        ? std::string("too many")
                                                        : std::to_string(space)) +
                                                   " families; use sample mode");
    }
    if (!over_copies) pool = all_graphs(s.n_x, s.n_y);

    if (s.kind == FamilyKind::theorem) {
      // families outside the hypothesis are counted but not searched
      std::vector<BipartiteGraph> qualifying;
      for (const auto& g : pool) {
        const auto d = decide_threshold(g, s.threshold, s.n, o.eps, o.tol);
        if (d.tie) ++out.counters["tie_graphs"];
        if (d.meets) qualifying.push_back(g);
      }
      out.counters["qualifying_graphs"] = qualifying.size();
      if (!qualifying.empty()) merge_into(out, walk_families(s, qualifying, true, o));
      out.cases_checked = space;
    } else {
      merge_into(out, walk_families(s, pool, true, o));
    }
    return out;
  }

  // sample mode
  const std::uint64_t count = o.mode.count;
  if (count == 0) throw Error(Errc::invalid_parameter, "sample mode needs a positive count");
  SamplePool pool;
  std::optional<Threshold> rejection;
  if (s.kind == FamilyKind::copies) {
    pool.graphs = labeled_copies(s.extremal);
    pool.non_constant = true;
    // constant families are few and always checked
    for (const auto& g : pool.graphs) {
      const GraphFamily f(std::vector<BipartiteGraph>(s.k, g));
      record(out, classify_family(s, f, true, out), encode_family(f));
    }
  } else if (s.kind == FamilyKind::theorem) {
    if (s.n_x * s.n_y <= 16) {
      for (auto g : enumerate_graphs(s.n_x, s.n_y)) {
        if (meets_threshold(g, s.threshold, s.n, o.eps, o.tol)) pool.graphs.push_back(std::move(g));
      }
    } else {
      rejection = s.threshold;
    }
  }

  const std::uint64_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  const auto parts = run_chunks(chunks, o.jobs, [&](std::size_t c) {
    VerificationReport r;
    ChunkRng rng(o.mode.seed, c);
    const std::uint64_t stop = std::min(count, (c + 1) * kSampleChunk);
    for (std::uint64_t i = c * kSampleChunk; i < stop; ++i) {
      std::optional<GraphFamily> f;
      if (rejection) {
        std::vector<BipartiteGraph> members;
        for (std::size_t j = 0; j < s.k; ++j) {
          for (std::uint64_t attempt = 0;; ++attempt) {
            if (attempt == 1'000'000) {
              throw Error(Errc::invalid_parameter, "hypothesis too rare for rejection sampling");
            }
            auto g = random_graph(rng, s.n_x, s.n_y);
            if (meets_threshold(g, *rejection, s.n, o.eps, o.tol)) {
              members.push_back(std::move(g));
              break;
            }
          }
        }
        f.emplace(std::move(members));
      } else {
        f.emplace(draw_family(rng, s.n_x, s.n_y, s.k, pool));
      }
      record(r, classify_family(s, *f, true, r), encode_family(*f));
    }
    return r;
  });
  for (const auto& p : parts) merge_into(out, p);
  return out;
}

// ---------------------------------------------------------------------------
// Graph targets

struct GraphSetting {
  std::string id;
  int n = 0;
  int n_x = 0;
  int n_y = 0;
  Threshold threshold = Threshold::Q0;
  BipartiteGraph extremal;
  bool random_parts = false;  // sample mode draws part sizes in [1, n]
};

inline GraphSetting graph_setting(const std::string& id, const RunOptions& o) {
  GraphSetting s;
  s.id = id;
  s.n = o.n;
  s.n_x = s.n_y = o.n;
  auto extremal = [&](FamilyTag tag, int k, Threshold t) {
    s.extremal = oriented_like(construct(tag, k, o.n), BipartiteGraph(s.n_x, s.n_y));
    s.threshold = t;
  };
  const bool nearly = id == "lem4.1" || id == "cor4.1";
  const bool cycle = id == "lem5.1" || id == "cor5.1";
  if (cycle && o.n < 4) throw Error(Errc::invalid_parameter, id + " needs n >= 4");
  if ((nearly || id == "lem3.1" || id == "cor3.1") && o.n < 2) {
    throw Error(Errc::invalid_parameter, id + " needs n >= 2");
  }
  if (o.n < 1) throw Error(Errc::invalid_parameter, id + " needs n >= 1");
  if (nearly) std::tie(s.n_x, s.n_y) = nearly_balanced_parts(o.n, o.orientation);
  if (id == "lem3.1" || id == "cor3.1") extremal(FamilyTag::Q, 0, Threshold::Q0);
  if (nearly) extremal(FamilyTag::T, 0, Threshold::T0);
  if (cycle) extremal(FamilyTag::B, 1, Threshold::B1);
  s.random_parts = id == "lem2.1" || id == "lem2.2" || id == "lem2.5";
  return s;
}

inline std::string encode_case(const BipartiteGraph& g, std::optional<ShiftPair> p) {
  std::string out;
  if (p) out = "pair " + std::to_string(p->x) + " " + std::to_string(p->y) + "\n";
  return out + encode_graph(g);
}

inline bool uses_pairs(const std::string& id) {
  return id == "lem2.1" || id == "lem2.2" || id == "lem3.1" || id == "lem4.1" || id == "lem5.1";
}

inline CaseOutcome classify_graph(const GraphSetting& s, const BipartiteGraph& g, std::optional<ShiftPair> p,
                                  const RunOptions& o, VerificationReport& r) {
  const auto& id = s.id;
  if (id == "lem2.1") {
    const auto h = shift_xy(g, *p);
    if (h.edge_count() != g.edge_count()) return CaseOutcome::violation;
    const double before = spectral_radius(g, o.tol).value, after = spectral_radius(h, o.tol).value;
    if (after > before + kShiftTie) ++r.counters["strict_increase"];
    return after >= before - kShiftTie ? CaseOutcome::holds : CaseOutcome::violation;
  }
  if (id == "lem2.2") {
    if (!is_connected(g)) return CaseOutcome::outside_hypothesis;
    const auto h = shift_xy(g, *p);
    const double before = spectral_radius(g, o.tol).value, after = spectral_radius(h, o.tol).value;
    if (std::abs(after - before) > kShiftTie) return CaseOutcome::holds;
    ++r.counters["near_ties"];
    return is_isomorphic(g, h) ? CaseOutcome::holds : CaseOutcome::violation;
  }
  if (id == "lem2.5") {
    return nosal_check(g, o.tol).holds ? CaseOutcome::holds : CaseOutcome::violation;
  }
  if (id == "obs1") {
    bool fixed = true;
    for (const auto& q : shift_schedule(g.n_x(), g.n_y())) {
      if (!(shift_xy(g, q) == g)) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++r.counters["bi_shifted"];
    const auto h = bi_shift(g);
    const bool ok = fixed == is_bi_shifted(g) && is_bi_shifted(h) && h.edge_count() == g.edge_count();
    return ok ? CaseOutcome::holds : CaseOutcome::violation;
  }
  if (id == "shift-order") {
    const auto a = bi_shift(g, SweepOrder::lexicographic);
    const auto b = bi_shift(g, SweepOrder::reversed);
    if (!(a == b)) ++r.counters["order_dependent"];
    const double rho = spectral_radius(g, o.tol).value;
    const bool ok = is_bi_shifted(a) && is_bi_shifted(b) && spectral_radius(a, o.tol).value >= rho - kShiftTie &&
                    spectral_radius(b, o.tol).value >= rho - kShiftTie;
    return ok ? CaseOutcome::holds : CaseOutcome::violation;
  }
  // single-shift lemmas and their corollaries: S(G) ~ extremal and
  // rho(G) >= threshold force G ~ extremal
  if (g.edge_count() != s.extremal.edge_count()) return CaseOutcome::outside_hypothesis;
  const auto h = p ? shift_xy(g, *p) : bi_shift(g);
  if (!is_isomorphic(h, s.extremal)) return CaseOutcome::outside_hypothesis;
  const auto d = decide_threshold(g, s.threshold, s.n, o.eps, o.tol);
  if (d.tie) ++r.counters["tie_graphs"];
  if (!d.meets) return CaseOutcome::outside_hypothesis;
  return is_isomorphic(g, s.extremal) ? CaseOutcome::holds : CaseOutcome::violation;
}

inline void check_graph(const GraphSetting& s, const BipartiteGraph& g, const RunOptions& o, VerificationReport& r) {
  if (uses_pairs(s.id)) {
    for (const auto& p : shift_schedule(g.n_x(), g.n_y())) record(r, classify_graph(s, g, p, o, r), encode_case(g, p));
  } else {
    record(r, classify_graph(s, g, std::nullopt, o, r), encode_case(g, std::nullopt));
  }
}

// Sparse, even and dense graphs in equal measure.
inline BipartiteGraph random_mixed_graph(ChunkRng& rng, int n_x, int n_y) {
  const auto a = random_graph(rng, n_x, n_y).to_mask();
  const auto b = random_graph(rng, n_x, n_y).to_mask();
  switch (rng.uniform_below(3)) {
    case 0: return BipartiteGraph::from_mask(n_x, n_y, a & b);
    case 1: return BipartiteGraph::from_mask(n_x, n_y, a);
    default: return BipartiteGraph::from_mask(n_x, n_y, a | b);
  }
}

inline VerificationReport run_graph_target(const std::string& id, const RunOptions& o) {
  const auto s = graph_setting(id, o);
  const auto kind = o.mode.kind;
  if (kind == ModeKind::extremal_only) throw Error(Errc::invalid_parameter, id + " has no extremal-only mode");
  VerificationReport out;

  if (kind == ModeKind::exhaustive) {
    const int bits = s.n_x * s.n_y;
    if (bits > 24) {
      throw Error(Errc::enumeration_too_large, id + " at n=" + std::to_string(s.n) + " is too large for exhaustive mode");
    }
    const std::uint64_t total = std::uint64_t{1} << bits;
    const std::uint64_t chunks = (total + kExhaustiveChunk - 1) / kExhaustiveChunk;
    const auto parts = run_chunks(chunks, o.jobs, [&](std::size_t c) {
      VerificationReport r;
      const std::uint64_t stop = std::min(total, (c + 1) * kExhaustiveChunk);
      for (std::uint64_t m = c * kExhaustiveChunk; m < stop; ++m) {
        check_graph(s, BipartiteGraph::from_mask(s.n_x, s.n_y, m), o, r);
      }
      return r;
    });
    for (const auto& p : parts) merge_into(out, p);
    return out;
  }

  const std::uint64_t count = o.mode.count;
  if (count == 0) throw Error(Errc::invalid_parameter, "sample mode needs a positive count");
  if (s.random_parts && (o.n < 2 || o.n > 8)) {
    throw Error(Errc::invalid_parameter, id + " sample mode needs 2 <= n <= 8 (the part-size bound)");
  }
  const std::uint64_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  const auto parts = run_chunks(chunks, o.jobs, [&](std::size_t c) {
    VerificationReport r;
    ChunkRng rng(o.mode.seed, c);
    const std::uint64_t stop = std::min(count, (c + 1) * kSampleChunk);
    for (std::uint64_t i = c * kSampleChunk; i < stop; ++i) {
      int n_x = s.n_x, n_y = s.n_y;
      if (s.random_parts) {
        // a shift needs two vertices on one side
        do {
          n_x = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(o.n)));
          n_y = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(o.n)));
        } while (uses_pairs(id) && n_x < 2 && n_y < 2);
      }
      const auto g = random_mixed_graph(rng, n_x, n_y);
      if (uses_pairs(id)) {
        const auto pairs = shift_schedule(n_x, n_y);
        const auto p = pairs[rng.uniform_below(pairs.size())];
        record(r, classify_graph(s, g, p, o, r), encode_case(g, p));
      } else {
        record(r, classify_graph(s, g, std::nullopt, o, r), encode_case(g, std::nullopt));
      }
    }
    return r;
  });
  for (const auto& p : parts) merge_into(out, p);
  return out;
}

inline bool is_family_target(const std::string& id) {
  return id.starts_with("thm") || id == "lem2.3" || id == "lem2.4" || id == "lem2.9" || id == "lem3.2" ||
         id == "lem4.2" || id == "lem5.2";
}

inline bool is_nearly_balanced_target(const std::string& id) {
  return id == "thm1.5" || id == "lem4.1" || id == "lem4.2" || id == "cor4.1";
}

}  // namespace detail

/// Runs one harness. Reports are canonical: violation and exception lists are
/// sorted, so runs with any worker count produce identical reports apart
/// from `elapsed`.
inline VerificationReport run_target(const std::string& id, const RunOptions& opts) {
  const auto& ids = target_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw Error(Errc::invalid_parameter, "unknown target '" + id + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  if (id == "lem2.8") {
    if (opts.mode.kind != ModeKind::exhaustive) throw Error(Errc::invalid_parameter, "lem2.8 runs in exhaustive mode only");
    r = threshold_gap_suite(opts.n, opts.tol);
  } else if (detail::is_family_target(id)) {
    r = detail::run_family_target(id, opts);
  } else {
    r = detail::run_graph_target(id, opts);
  }
  r.target = id;
  r.n = opts.n;
  r.mode = opts.mode;
  if (detail::is_nearly_balanced_target(id)) r.variant = orientation_name(opts.orientation);
  r.canonicalize();
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

/// Theorem harness by number: 1.4, 1.5 or 1.6.
inline VerificationReport verify_theorem(const std::string& number, const RunOptions& opts) {
  if (number != "1.4" && number != "1.5" && number != "1.6") {
    throw Error(Errc::invalid_parameter, "unknown theorem '" + number + "'");
  }
  return run_target("thm" + number, opts);
}

/// Lemma, observation or corollary harness: "2.1" ... "5.2", "obs1", "cor3.1".
inline VerificationReport verify_lemma(const std::string& id, const RunOptions& opts) {
  if (id.starts_with("obs") || id.starts_with("cor") || id.starts_with("lem")) return run_target(id, opts);
  return run_target("lem" + id, opts);
}

/// Re-runs a single recorded case (the BFAM or graph text from a report).
inline CaseOutcome replay_case(const std::string& id, std::string_view text, const RunOptions& opts) {
  VerificationReport scratch;
  if (detail::is_family_target(id)) {
    const auto s = detail::family_setting(id, opts);
    const auto f = decode_family(text);
    if (f.n_x() != s.n_x || f.n_y() != s.n_y || f.size() != s.k) {
      throw Error(Errc::invalid_parameter, "family does not match " + id + " at n=" + std::to_string(opts.n));
    }
    return detail::classify_family(s, f, detail::family_hypothesis(s, f, opts), scratch);
  }
  if (id == "lem2.8" || std::find(target_ids().begin(), target_ids().end(), id) == target_ids().end()) {
    throw Error(Errc::invalid_parameter, "no replay for target '" + id + "'");
  }
  auto s = detail::graph_setting(id, opts);
  std::optional<ShiftPair> pair;
  if (text.starts_with("pair ")) {
    const auto nl = text.find('\n');
    const auto tokens = detail::split_spaces(text.substr(0, nl));
    if (tokens.size() != 3) throw ParseError(1, "expected 'pair <x> <y>'");
    pair = ShiftPair{static_cast<int>(detail::parse_count(tokens[1], 1)),
                     static_cast<int>(detail::parse_count(tokens[2], 1))};
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  const auto g = decode_graph(text);
  if (detail::uses_pairs(id) && !pair) throw Error(Errc::invalid_parameter, id + " cases carry a shift pair");
  if (!s.random_parts && (g.n_x() != s.n_x || g.n_y() != s.n_y)) {
    throw Error(Errc::invalid_parameter, "graph does not match " + id + " at n=" + std::to_string(opts.n));
  }
  return detail::classify_graph(s, g, pair, opts, scratch);
}

}  // namespace rbh
