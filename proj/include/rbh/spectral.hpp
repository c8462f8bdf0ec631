#pragma once

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "rbh/bigraph.hpp"
#include "rbh/error.hpp"

namespace rbh {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kDefaultEps = 1e-9;
inline constexpr std::size_t kMaxPowerIterations = 1'000'000;

/// Converged spectral radius.
///
/// `tolerance` is the bound actually enforced: the requested tolerance, raised
/// to the rounding floor of the Gram matrix when the request is below it.
/// `residual` bounds |value - rho| from the final power-iteration residual.
struct SpectralEstimate {
  double value = 0.0;
  double tolerance = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
};

namespace detail {

struct GramResult {
  double lambda = 0.0;
  double rho_error = 0.0;
  double tolerance = 0.0;
  std::size_t iterations = 0;
};

// Dominant eigenvalue of the PSD Gram matrix of one connected component by
// power iteration from the all-ones vector. For unit x with Rayleigh quotient
// mu and residual r = |Mx - mu x|, some eigenvalue lies within r of mu, so
// sqrt(mu) is within r / (sqrt(mu) + sqrt(mu - r)) of the spectral radius.
inline GramResult gram_dominant(const std::vector<std::vector<double>>& m, double tol) {
  const std::size_t dim = m.size();
  GramResult out;
  if (dim == 1) {
    out.lambda = m[0][0];
    out.tolerance = tol;
    out.iterations = 1;
    return out;
  }

  double norm_inf = 0.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (double v : row) s += v;
    norm_inf = std::max(norm_inf, s);
  }

  std::vector<double> x(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  std::vector<double> y(dim);
  double last_bound = INFINITY;
  for (std::size_t it = 1; it <= kMaxPowerIterations; ++it) {
    for (std::size_t i = 0; i < dim; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < dim; ++j) s += m[i][j] * x[j];
      y[i] = s;
    }
    double mu = 0.0;
    for (std::size_t i = 0; i < dim; ++i) mu += x[i] * y[i];
    double r2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = y[i] - mu * x[i];
      r2 += d * d;
    }
    const double r = std::sqrt(r2);
    const double root = std::sqrt(std::max(mu, 0.0));
    const double bound = r / (root + std::sqrt(std::max(mu - r, 0.0)) + DBL_MIN);
    // rounding floor of the residual computation, expressed on the rho scale
    const double floor = 8.0 * static_cast<double>(dim) * DBL_EPSILON * norm_inf /
                         (2.0 * std::max(root, 1.0));
    const double target = std::max(tol, floor);
    last_bound = bound;
    if (bound <= target) {
      out.lambda = mu;
      out.rho_error = bound;
      out.tolerance = target;
      out.iterations = it;
      return out;
    }
    double ny = 0.0;
    for (double v : y) ny += v * v;
    ny = std::sqrt(ny);
    for (std::size_t i = 0; i < dim; ++i) x[i] = y[i] / ny;
  }
  throw ConvergenceFailure(last_bound, kMaxPowerIterations);
}

}  // namespace detail

/// Spectral radius of the adjacency matrix, computed per connected component
/// as the square root of the dominant eigenvalue of N N^T (N the
/// biadjacency block restricted to the component), maximised over components.
inline SpectralEstimate spectral_radius(const BipartiteGraph& g, double tol = kDefaultTol) {
  if (!(tol > 0.0)) throw Error(Errc::invalid_parameter, "tolerance must be positive");
  SpectralEstimate best;
  best.tolerance = tol;
  for (const auto& comp : components(g)) {
    std::vector<int> xs;
    for (int v : comp) {
      if (g.in_x(v)) xs.push_back(v);
    }
    if (xs.empty() || g.row(xs.front()) == 0) continue;  // isolated vertex
    const std::size_t dim = xs.size();
    std::vector<std::vector<double>> gram(dim, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i; j < dim; ++j) {
        const double c = std::popcount(g.row(xs[i]) & g.row(xs[j]));
        gram[i][j] = gram[j][i] = c;
      }
    }
    const auto res = detail::gram_dominant(gram, tol);
    const double value = std::sqrt(std::max(res.lambda, 0.0));
    best.iterations += res.iterations;
    if (value > best.value) {
      best.value = value;
      best.residual = res.rho_error;
    }
    best.tolerance = std::max(best.tolerance, res.tolerance);
  }
  return best;
}

struct NosalCheck {
  double rho = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// rho(G) against sqrt(|E(G)|).
inline NosalCheck nosal_check(const BipartiteGraph& g, double tol = kDefaultTol) {
  const auto est = spectral_radius(g, tol);
  NosalCheck out;
  out.rho = est.value;
  out.bound = std::sqrt(static_cast<double>(g.edge_count()));
  out.holds = out.rho <= out.bound + est.tolerance;
  return out;
}

// ---------------------------------------------------------------------------
// Thresholds

/// Extremal graphs whose spectral radius serves as a hypothesis threshold:
/// Q0 = K_{n,n-1} + K_1, T0 = K_{n-1,n-1} + K_1, B1 = K_{1,n-1} join co-K_{n-1,1}.
enum class Threshold { Q0, T0, B1 };

inline const char* threshold_name(Threshold t) {
  switch (t) {
    case Threshold::Q0: return "Q0";
    case Threshold::T0: return "T0";
    case Threshold::B1: return "B1";
  }
  return "?";
}

inline Threshold parse_threshold(const std::string& s) {
  if (s == "Q0") return Threshold::Q0;
  if (s == "T0") return Threshold::T0;
  if (s == "B1") return Threshold::B1;
  throw Error(Errc::invalid_parameter, "unknown threshold tag '" + s + "'");
}

inline BipartiteGraph threshold_graph(Threshold t, int n) {
  switch (t) {
    case Threshold::Q0: return construct(FamilyTag::Q, 0, n);
    case Threshold::T0: return construct(FamilyTag::T, 0, n);
    case Threshold::B1: return construct(FamilyTag::B, 1, n);
  }
  throw Error(Errc::invalid_parameter, "unknown threshold tag");
}

namespace detail {

inline double cycle_threshold_cached(int n) {
  static std::mutex mu;
  static std::map<int, double> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, spectral_radius(construct(FamilyTag::B, 1, n), 1e-12).value).first;
  }
  return it->second;
}

}  // namespace detail

/// Q0 and T0 use their closed forms sqrt(n(n-1)) and n-1; B1 has none and is
/// computed once per n.
inline double threshold(Threshold t, int n) {
  if (n < 2) throw Error(Errc::invalid_parameter, "threshold needs n >= 2");
  switch (t) {
    case Threshold::Q0: return std::sqrt(static_cast<double>(n) * (n - 1));
    case Threshold::T0: return static_cast<double>(n - 1);
    case Threshold::B1: return detail::cycle_threshold_cached(n);
  }
  throw Error(Errc::invalid_parameter, "unknown threshold tag");
}

enum class Comparison { below, at_tie, above };

inline const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::below: return "below";
    case Comparison::at_tie: return "tie";
    case Comparison::above: return "above";
  }
  return "?";
}

inline Comparison compare_to_threshold(const BipartiteGraph& g, Threshold t, int n,
                                       double eps = kDefaultEps, double tol = kDefaultTol) {
  if (!(eps > 0.0)) throw Error(Errc::invalid_parameter, "eps must be positive");
  const double rho = spectral_radius(g, tol).value;
  const double thr = threshold(t, n);
  if (rho > thr + eps) return Comparison::above;
  if (rho < thr - eps) return Comparison::below;
  return Comparison::at_tie;
}

// ---------------------------------------------------------------------------
// Quotient matrices

struct QuotientMatrix {
  std::size_t order = 0;
  std::vector<std::vector<double>> entries;
  bool equitable = false;
  std::vector<std::vector<int>> partition;
};

/// Entry (i, j) is the average number of neighbours in class j over the
/// vertices of class i.
inline QuotientMatrix quotient_matrix(const BipartiteGraph& g,
                                      const std::vector<std::vector<int>>& partition) {
  const int order = g.order();
  std::vector<int> cls(static_cast<std::size_t>(order), -1);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty()) throw Error(Errc::invalid_partition, "empty class");
    for (int v : partition[c]) {
      if (v < 0 || v >= order) {
        throw Error(Errc::invalid_partition, "label " + std::to_string(v) + " out of range");
      }
      if (cls[static_cast<std::size_t>(v)] >= 0) {
        throw Error(Errc::invalid_partition, "label " + std::to_string(v) + " in two classes");
      }
      cls[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < order; ++v) {
    if (cls[static_cast<std::size_t>(v)] < 0) {
      throw Error(Errc::invalid_partition, "label " + std::to_string(v) + " not covered");
    }
  }

  const std::size_t m = partition.size();
  QuotientMatrix q;
  q.order = m;
  q.partition = partition;
  q.entries.assign(m, std::vector<double>(m, 0.0));
  q.equitable = true;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> first;
    for (std::size_t idx = 0; idx < partition[i].size(); ++idx) {
      const int v = partition[i][idx];
      std::vector<int> counts(m, 0);
      for (int w = 0; w < order; ++w) {
        if (g.has_edge(v, w)) ++counts[static_cast<std::size_t>(cls[static_cast<std::size_t>(w)])];
      }
      for (std::size_t j = 0; j < m; ++j) q.entries[i][j] += counts[j];
      if (idx == 0) {
        first = counts;
      } else if (counts != first) {
        q.equitable = false;
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      q.entries[i][j] /= static_cast<double>(partition[i].size());
    }
  }
  return q;
}

/// Perron root of a non-negative irreducible matrix. Iterates on B + I, whose
/// positive diagonal rules out periodic oscillation, and stops once the
/// Collatz-Wielandt bounds min (Bx)_i / x_i <= rho <= max (Bx)_i / x_i close
/// to within tol.
inline double quotient_spectral_radius(const QuotientMatrix& q, double tol = kDefaultTol) {
  const std::size_t m = q.order;
  if (m == 0) return 0.0;
  std::vector<double> x(m, 1.0), y(m);
  double scale = 1.0;
  for (const auto& row : q.entries) {
    for (double v : row) scale = std::max(scale, v);
  }
  const double target = std::max(tol, 16.0 * static_cast<double>(m) * DBL_EPSILON * scale);
  for (std::size_t it = 0; it < kMaxPowerIterations; ++it) {
    double lo = INFINITY, hi = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += q.entries[i][j] * x[j];
      const double ratio = s / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      y[i] = s + x[i];
    }
    if (hi - lo <= target) return 0.5 * (lo + hi);
    const double top = *std::max_element(y.begin(), y.end());
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / top;
    if (*std::min_element(x.begin(), x.end()) <= 0.0) {
      throw Error(Errc::invalid_parameter, "quotient matrix is reducible");
    }
  }
  throw ConvergenceFailure(INFINITY, kMaxPowerIterations);
}

// ---------------------------------------------------------------------------
// The four-class quotient of T^{n-2}_n

/// Partition {X1, X2, Y1, Y2} of T^{n-2}_n = K_{n-2,1} join co-K_{1,n-1}
/// under which it is equitable.
inline std::vector<std::vector<int>> near_extremal_partition(int n) {
  if (n < 3) throw Error(Errc::invalid_parameter, "near-extremal partition needs n >= 3");
  std::vector<std::vector<int>> p(4);
  for (int x = 0; x < n - 2; ++x) p[0].push_back(x);
  p[1].push_back(n - 2);
  p[2].push_back(n - 1);
  for (int y = n; y <= 2 * n - 2; ++y) p[3].push_back(y);
  return p;
}

/// x^4 - (n-1)^2 x^2 + (n-1)(n-2), the characteristic polynomial of that quotient.
inline double near_extremal_charpoly(int n, double x) {
  if (n < 3) throw Error(Errc::invalid_parameter, "charpoly needs n >= 3");
  const double a = n - 1, b = n - 2;
  const double x2 = x * x;
  return x2 * x2 - a * a * x2 + a * b;
}

inline long long near_extremal_charpoly_exact(long long n, long long x) {
  if (n < 3) throw Error(Errc::invalid_parameter, "charpoly needs n >= 3");
  const long long x2 = x * x;
  return x2 * x2 - (n - 1) * (n - 1) * x2 + (n - 1) * (n - 2);
}

/// Largest real root by bisection on [(n-1)/sqrt(2), n-1], where the
/// polynomial changes sign from negative to positive.
inline double near_extremal_largest_root(int n) {
  double lo = (n - 1) / std::sqrt(2.0);
  double hi = n - 1;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (near_extremal_charpoly(n, mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace rbh
