#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "rqv/graph.hpp"

namespace rqv {

/// Canonical forms are limited to 16 vertices so that the upper-triangle
/// bit string (at most 120 bits) fits in two machine words.
inline constexpr int kMaxCanonicalOrder = 16;

/// Upper-triangle adjacency bits of a labelled graph, taken column by column
/// ((0,1), (0,2), (1,2), (0,3), ...) and packed most-significant-bit first,
/// so that word-wise comparison is lexicographic comparison of the bit string.
struct CanonicalCode {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalLabeling {
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<int> order;
  CanonicalCode code;
};

namespace detail {

struct OrderedPartition {
  int count = 0;
  std::array<VertexSet, kMaxCanonicalOrder> cell{};
};

inline void split_cell(OrderedPartition& p, int at, const VertexSet* parts, int nparts) {
  for (int c = p.count - 1; c > at; --c) p.cell[c + nparts - 1] = p.cell[c];
  for (int i = 0; i < nparts; ++i) p.cell[at + i] = parts[i];
  p.count += nparts - 1;
}

/// Refines to the coarsest equitable partition finer than `p`. Cells split by
/// the number of neighbours a vertex has in a splitter cell, in ascending
/// order of that count, which keeps the result isomorphism-invariant.
inline void refine(const Graph& g, OrderedPartition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count && !changed; ++s) {
      const VertexSet splitter = p.cell[s];
      for (int c = 0; c < p.count; ++c) {
        const VertexSet x = p.cell[c];
        if (std::has_single_bit(x)) continue;
        std::array<VertexSet, kMaxCanonicalOrder + 1> bucket{};
        VertexSet rest = x;
        while (rest) {
          const int v = std::countr_zero(rest);
          rest &= rest - 1;
          bucket[std::popcount(g.neighbours(v) & splitter)] |= bit(v);
        }
        std::array<VertexSet, kMaxCanonicalOrder + 1> parts{};
        int nparts = 0;
        for (VertexSet b : bucket) {
          if (b) parts[nparts++] = b;
        }
        if (nparts > 1) {
          split_cell(p, c, parts.data(), nparts);
          changed = true;
          break;
        }
      }
    }
  }
}

inline CanonicalCode code_of(const Graph& g, const std::vector<int>& order) {
  CanonicalCode code;
  int t = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    const VertexSet row = g.neighbours(order[j]);
    for (int i = 0; i < j; ++i, ++t) {
      if (row & bit(order[i])) {
        if (t < 64) {
          code.hi |= std::uint64_t{1} << (63 - t);
        } else {
          code.lo |= std::uint64_t{1} << (63 - (t - 64));
        }
      }
    }
  }
  return code;
}

struct SearchState {
  bool found = false;
  CanonicalLabeling best;
  std::vector<int> scratch;
};

inline bool are_twins(const Graph& g, int u, int v) {
  return ((g.neighbours(u) ^ g.neighbours(v)) & ~(bit(u) | bit(v))) == 0;
}

inline void search(const Graph& g, OrderedPartition p, SearchState& st) {
  refine(g, p);
  int target = -1;
  for (int c = 0; c < p.count; ++c) {
    if (!std::has_single_bit(p.cell[c])) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    for (int i = 0; i < p.count; ++i) st.scratch[i] = std::countr_zero(p.cell[i]);
    const CanonicalCode code = code_of(g, st.scratch);
    if (!st.found || code < st.best.code) {
      st.found = true;
      st.best.code = code;
      st.best.order = st.scratch;
    }
    return;
  }
  // Swapping two twins is an automorphism fixing every individualised
  // vertex, so only one twin per class needs a branch.
  const VertexSet candidates = p.cell[target];
  std::array<int, kMaxCanonicalOrder> tried{};
  int ntried = 0;
  VertexSet rest = candidates;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    bool twin = false;
    for (int i = 0; i < ntried && !twin; ++i) twin = are_twins(g, tried[i], v);
    if (twin) continue;
    tried[ntried++] = v;
    OrderedPartition q = p;
    const VertexSet parts[2] = {bit(v), candidates & ~bit(v)};
    split_cell(q, target, parts, 2);
    search(g, q, st);
  }
}

}  // namespace detail

/// Canonical labelling: the minimum code over the leaves of an
/// individualisation-refinement search whose root partition orders vertices
/// by degree.
inline CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw InputError("canonical labelling supports at most 16 vertices");
  }
  detail::OrderedPartition root;
  std::array<VertexSet, kMaxCanonicalOrder> by_degree{};
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)] |= bit(v);
  for (VertexSet cell : by_degree) {
    if (cell) root.cell[root.count++] = cell;
  }
  detail::SearchState st;
  st.scratch.resize(n);
  detail::search(g, root, st);
  return st.best;
}

inline Graph canonical_form(const Graph& g) {
  return g.permuted(canonical_labeling(g).order);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degree_profile().degrees;
  auto db = b.degree_profile().degrees;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_labeling(a).code == canonical_labeling(b).code;
}

}  // namespace rqv
