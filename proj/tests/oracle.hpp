#pragma once

// Brute-force reference implementations used to cross-check the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "rqv/enumeration.hpp"
#include "rqv/graph.hpp"
#include "rqv/spectral.hpp"

namespace oracle {

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) p.emplace_back(i, j);
  return p;
}

/// Every labeled graph on n vertices (2^C(n,2) of them).
inline std::vector<rqv::Graph> labeled_graphs(int n) {
  const auto pairs = all_pairs(n);
  std::vector<rqv::Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1) e.push_back(pairs[b]);
    }
    out.push_back(rqv::Graph::from_edges(n, e));
  }
  return out;
}

/// Smallest edge bitmask over all n! relabelings: a complete invariant.
inline std::uint64_t brute_canonical(const rqv::Graph& g) {
  const int n = g.order();
  const auto pairs = all_pairs(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (g.adjacent(perm[pairs[b].first], perm[pairs[b].second])) code |= std::uint64_t{1} << b;
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of eigenvalues of M greater than x, by Sylvester inertia of M - xI
/// (LDL^T without pivoting in long double; exact zero pivots are nudged).
inline int count_above(const rqv::SymmetricMatrix& m, long double x) {
  const int n = m.order();
  std::vector<long double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j) - (i == j ? x : 0.0L);
  int positive = 0;
  for (int k = 0; k < n; ++k) {
    long double d = a[k * n + k];
    if (d == 0.0L) d = 1e-30L;
    if (d > 0) ++positive;
    for (int i = k + 1; i < n; ++i) {
      const long double f = a[i * n + k] / d;
      for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return positive;
}

/// Largest eigenvalue by bisection on the inertia count.
inline long double largest_eigenvalue_bisection(const rqv::SymmetricMatrix& m) {
  long double bound = 0;
  for (int i = 0; i < m.order(); ++i) {
    long double row = 0;
    for (int j = 0; j < m.order(); ++j) row += std::fabs(static_cast<long double>(m(i, j)));
    bound = std::max(bound, row);
  }
  long double lo = -bound - 1;
  long double hi = bound + 1;
  for (int it = 0; it < 200 && hi - lo > 1e-15L; ++it) {
    const long double mid = (lo + hi) / 2;
    if (count_above(m, mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier; coefficient k
/// multiplies x^k. Exact in long double for small integer matrices.
inline std::vector<long double> characteristic_polynomial(const rqv::SymmetricMatrix& m) {
  const int n = m.order();
  std::vector<long double> c(n + 1, 0.0L);
  c[n] = 1.0L;
  std::vector<long double> mk(static_cast<std::size_t>(n) * n, 0.0L);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} I
    std::vector<long double> next(static_cast<std::size_t>(n) * n, 0.0L);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long double acc = 0;
        for (int l = 0; l < n; ++l) acc += m(i, l) * mk[l * n + j];
        next[i * n + j] = acc + (i == j ? c[n - k + 1] : 0.0L);
      }
    }
    mk = std::move(next);
    long double trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) trace += m(i, l) * mk[l * n + i];
    c[n - k] = -trace / k;
  }
  return c;
}

inline long double evaluate(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

/// Bisection on det(xI - M) inside [lo, hi], which must bracket a sign change.
inline long double polynomial_root(const std::vector<long double>& c, long double lo, long double hi) {
  long double flo = evaluate(c, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-16L; ++it) {
    const long double mid = (lo + hi) / 2;
    const long double fm = evaluate(c, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// All connected graphs up to isomorphism for 1 <= n <= max_n, cached.
inline const std::vector<rqv::Graph>& connected_up_to(int max_n) {
  static std::map<int, std::vector<rqv::Graph>> cache;
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;
  std::vector<rqv::Graph> all;
  for (int n = 1; n <= max_n; ++n) {
    for (const rqv::Graph& g : rqv::enumerate_connected(n)) all.push_back(g);
  }
  return cache.emplace(max_n, std::move(all)).first->second;
}

}  // namespace oracle
