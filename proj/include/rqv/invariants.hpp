#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rqv/error.hpp"
#include "rqv/graph.hpp"
#include "rqv/interval.hpp"

namespace rqv {

/// R(G) = sum over edges of 1 / sqrt(d(u) d(v)), as a certified enclosure.
template <typename T = double>
Interval<T> randic_index(const Graph& g) {
  const DegreeProfile p = g.degree_profile();
  if (p.delta_min < 1) throw InputError("Randic index is undefined with an isolated vertex");
  Interval<T> sum;
  const Interval<T> one(T(1));
  for (auto [u, v] : g.edges()) {
    sum += one / sqrt_int<T>(static_cast<std::int64_t>(p.degrees[u]) * p.degrees[v]);
  }
  return sum;
}

/// m(v): mean degree over N(v), exact.
inline Rational avg_neighbor_degree(const Graph& g, int v) {
  const int d = g.degree(v);
  if (d < 1) throw InputError("m(v) is undefined for an isolated vertex " + std::to_string(v));
  std::int64_t sum = 0;
  VertexSet nb = g.neighbours(v);
  while (nb) {
    const int u = std::countr_zero(nb);
    nb &= nb - 1;
    sum += g.degree(u);
  }
  return Rational(sum, d);
}

/// t(v) = d(v) + m(v).
inline Rational t_value(const Graph& g, int v) {
  return Rational(g.degree(v)) + avg_neighbor_degree(g, v);
}

inline std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

/// Upper bound on the number s of degree-one vertices in a connected graph
/// with n vertices, m edges and maximum degree Δ.
///
/// With r = n - s non-leaf vertices, every edge not incident to a leaf joins
/// two non-leaves; the maximum-degree vertex reaches at most min(Δ, r - 1) of
/// the other non-leaves, so m - s <= min(Δ, r - 1) + C(r - 1, 2). For
/// Δ = n - 1 this is the count m - Δ <= C(Δ - s, 2). The non-leaf degree sum
/// s + 2(m - s) must also fit in r·Δ.
inline int max_pendant_neighbors(int n, int m, int delta_max) {
  if (n < 2 || n > kMaxVertices) throw InputError("n outside [2, 64]");
  const std::int64_t max_m = choose2(n);
  if (m < n - 1 || m > max_m) {
    throw InputError("m = " + std::to_string(m) + " infeasible for a connected graph on " +
                     std::to_string(n) + " vertices");
  }
  if (delta_max < 1 || delta_max > n - 1 || static_cast<std::int64_t>(n) * delta_max < 2 * m ||
      (n > 2 && delta_max < 2)) {
    throw InputError("maximum degree " + std::to_string(delta_max) + " infeasible for (n, m) = (" +
                     std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  int best = -1;
  for (int s = 0; s <= n - 1; ++s) {
    const int r = n - s;
    bool ok = false;
    if (r == 1) {
      ok = m == n - 1 && delta_max == n - 1;
    } else {
      const std::int64_t inner = m - s;
      ok = inner >= r - 1 &&
           inner <= std::min<std::int64_t>(delta_max, r - 1) + choose2(r - 1) &&
           s + 2 * inner <= static_cast<std::int64_t>(r) * delta_max;
    }
    if (ok) best = s;
  }
  if (best < 0) throw InputError("no pendant count is feasible for these parameters");
  return best;
}

}  // namespace rqv
