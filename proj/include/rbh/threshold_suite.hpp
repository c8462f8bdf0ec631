#pragma once

#include <chrono>
#include <cmath>
#include <string>

#include "rbh/report.hpp"
#include "rbh/spectral.hpp"

namespace rbh {

/// Margin every strict threshold inequality must clear.
inline constexpr double kGapMargin = 1e-9;

/// Numeric checks on the named constructions for 4 <= n <= n_max:
///  * rho(Q^k_n) < rho(Q^0_n) and rho(T^k_n) < rho(T^0_n) for 1 <= k <= n-2,
///  * rho(B^k_n) < rho(B^1_n) for 2 <= k <= n-2,
///  * edge-count formulas and rho <= sqrt(|E|) for every construction used,
///  * the closed forms rho(Q^0_n) = sqrt(n(n-1)) and rho(T^0_n) = n-1,
///  * rho(T^{n-2}_n) equals both its equitable-quotient radius and the largest
///    root of x^4 - (n-1)^2 x^2 + (n-1)(n-2), and P(n-1) = (n-1)(n-2) exactly.
/// The Nosal chain sqrt(k^2-nk+n^2) <= sqrt(n^2-2n+4) < sqrt(n(n-1)) used to
/// bound B^k_n is tight at n = 4; such steps are counted, not failed.
inline VerificationReport threshold_gap_suite(int n_max, double tol = kDefaultTol) {
  if (n_max < 4) throw Error(Errc::invalid_parameter, "threshold gap suite needs n_max >= 4");
  if (n_max > BipartiteGraph::kMaxPart) throw Error(Errc::invalid_parameter, "n_max above 64 is not supported");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.target = "lem2.8";
  r.n = n_max;
  r.mode = Mode::exhaustive();

  auto fail = [&](int n, const std::string& what, int k = -1) {
    std::string s = "n=" + std::to_string(n);
    if (k >= 0) s += " k=" + std::to_string(k);
    r.violations.push_back(s + ": " + what);
  };
  auto edges_ok = [&](const BipartiteGraph& g, long long expected, int n, int k, char tag) {
    ++r.counters["edge_counts"];
    if (static_cast<long long>(g.edge_count()) != expected) fail(n, std::string(1, tag) + " edge count " + std::to_string(g.edge_count()), k);
  };
  auto nosal_ok = [&](const BipartiteGraph& g, int n, int k, char tag) {
    ++r.counters["nosal_checks"];
    if (!nosal_check(g, tol).holds) fail(n, std::string(1, tag) + " exceeds sqrt(|E|)", k);
  };

  for (int n = 4; n <= n_max; ++n) {
    const double q0 = std::sqrt(static_cast<double>(n) * (n - 1));
    const double t0 = n - 1.0;
    const double b1 = threshold(Threshold::B1, n);

    const double q0_rho = spectral_radius(construct(FamilyTag::Q, 0, n), tol).value;
    const double t0_rho = spectral_radius(construct(FamilyTag::T, 0, n), tol).value;
    r.counters["closed_forms"] += 2;
    if (std::abs(q0_rho - q0) > kGapMargin) fail(n, "rho(Q^0) differs from sqrt(n(n-1))");
    if (std::abs(t0_rho - t0) > kGapMargin) fail(n, "rho(T^0) differs from n-1");
    ++r.counters["subgraph_bounds"];
    if (!(q0_rho <= b1 + kGapMargin)) fail(n, "rho(Q^0) exceeds rho(B^1)");

    for (int k = 1; k <= n - 2; ++k) {
      ++r.cases_checked;
      const auto q = construct(FamilyTag::Q, k, n);
      edges_ok(q, static_cast<long long>(n) * k + static_cast<long long>(n - k) * (n - k - 1), n, k, 'Q');
      nosal_ok(q, n, k, 'Q');
      ++r.counters["strict_inequalities"];
      if (!(spectral_radius(q, tol).value < q0 - kGapMargin)) fail(n, "rho(Q^k) not below rho(Q^0)", k);

      const auto t = construct(FamilyTag::T, k, n);
      edges_ok(t, static_cast<long long>(n) * k + static_cast<long long>(n - k - 1) * (n - k - 1), n, k, 'T');
      nosal_ok(t, n, k, 'T');
      ++r.counters["strict_inequalities"];
      if (!(spectral_radius(t, tol).value < t0 - kGapMargin)) fail(n, "rho(T^k) not below rho(T^0)", k);

      if (k >= 2) {
        const auto b = construct(FamilyTag::B, k, n);
        edges_ok(b, static_cast<long long>(n) * k + static_cast<long long>(n - k) * (n - k), n, k, 'B');
        nosal_ok(b, n, k, 'B');
        ++r.counters["strict_inequalities"];
        if (!(spectral_radius(b, tol).value < b1 - kGapMargin)) fail(n, "rho(B^k) not below rho(B^1)", k);
        const long long lhs = static_cast<long long>(k) * k - static_cast<long long>(n) * k + n * n;
        const long long mid = static_cast<long long>(n) * n - 2 * n + 4;
        if (lhs > mid) fail(n, "k^2-nk+n^2 exceeds n^2-2n+4", k);
        if (mid >= static_cast<long long>(n) * (n - 1)) ++r.counters["tight_chain_steps"];
      }
    }

    // T^{n-2}_n through its quotient and characteristic polynomial
    const auto tn = construct(FamilyTag::T, n - 2, n);
    const auto qm = quotient_matrix(tn, near_extremal_partition(n));
    const double rho_t = spectral_radius(tn, tol).value;
    const double rho_q = quotient_spectral_radius(qm, tol);
    const double root = near_extremal_largest_root(n);
    ++r.counters["quotient_checks"];
    if (!qm.equitable) fail(n, "T^{n-2} partition is not equitable");
    if (std::abs(rho_q - rho_t) > kGapMargin) fail(n, "quotient radius differs from rho(T^{n-2})");
    if (std::abs(root - rho_t) > kGapMargin) fail(n, "largest quartic root differs from rho(T^{n-2})");
    const long long p_exact = near_extremal_charpoly_exact(n, n - 1);
    if (p_exact != static_cast<long long>(n - 1) * (n - 2)) fail(n, "P(n-1) differs from (n-1)(n-2)");
    if (!(p_exact > 0)) fail(n, "P(n-1) is not positive");
  }
  r.hypothesis_cases = r.cases_checked;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace rbh
