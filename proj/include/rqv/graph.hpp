#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rqv/error.hpp"

namespace rqv {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

constexpr VertexSet low_bits(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

struct DegreeProfile {
  std::vector<int> degrees;
  int delta_min = 0;
  int delta_max = 0;
  int m = 0;
};

/// Simple undirected graph on at most 64 vertices. Each neighbourhood is a
/// 64-bit set; values are immutable once built through the public API.
class Graph {
 public:
  Graph() : Graph(1) {}

  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw InputError("vertex count " + std::to_string(n) +
                       " outside [1, 64]");
    }
  }

  /// Builds a graph from an edge list; loops and repeated edges are rejected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      g.check_vertex(u);
      g.check_vertex(v);
      if (u == v) throw InputError("loop at vertex " + std::to_string(u));
      if (g.adj_[u] & bit(v)) {
        throw InputError("repeated edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "}");
      }
      g.adj_[u] |= bit(v);
      g.adj_[v] |= bit(u);
    }
    return g;
  }

  /// Builds a graph from neighbourhood masks, validating symmetry and the
  /// absence of loops.
  static Graph from_rows(int n, const std::vector<VertexSet>& rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) != n) {
      throw InputError("row count does not match vertex count");
    }
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~low_bits(n)) throw InputError("neighbour out of range");
      if (rows[v] & bit(v)) throw InputError("loop at vertex " + std::to_string(v));
      g.adj_[v] = rows[v];
    }
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (((g.adj_[u] >> v) & 1U) != ((g.adj_[v] >> u) & 1U)) {
          throw InputError("adjacency is not symmetric");
        }
      }
    }
    return g;
  }

  int order() const noexcept { return n_; }

  int size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  VertexSet neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1U;
  }

  int degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
  }

  DegreeProfile degree_profile() const {
    DegreeProfile p;
    p.degrees.resize(n_);
    p.delta_min = n_;
    int twice = 0;
    for (int v = 0; v < n_; ++v) {
      const int d = std::popcount(adj_[v]);
      p.degrees[v] = d;
      p.delta_min = std::min(p.delta_min, d);
      p.delta_max = std::max(p.delta_max, d);
      twice += d;
    }
    p.m = twice / 2;
    return p;
  }

  int min_degree() const { return degree_profile().delta_min; }
  int max_degree() const { return degree_profile().delta_max; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      VertexSet higher = adj_[u] & ~low_bits(u + 1);
      while (higher) {
        const int v = std::countr_zero(higher);
        higher &= higher - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Vertices reachable from `start`, restricted to `alive`.
  VertexSet reachable(int start, VertexSet alive) const {
    VertexSet seen = bit(start) & alive;
    VertexSet frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj_[v];
      }
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool is_connected() const { return reachable(0, all()) == all(); }

  /// True when removing `v` leaves the remaining vertices connected.
  bool is_non_cut_vertex(int v) const {
    check_vertex(v);
    if (n_ == 1) return true;
    const VertexSet alive = all() & ~bit(v);
    const int start = std::countr_zero(alive);
    return reachable(start, alive) == alive;
  }

  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    VertexSet left = all();
    while (left) {
      const VertexSet c = reachable(std::countr_zero(left), left);
      out.push_back(c);
      left &= ~c;
    }
    return out;
  }

  /// Induced subgraph on `keep`, relabelled contiguously in increasing
  /// vertex order.
  Graph induced(VertexSet keep) const {
    keep &= all();
    const int k = std::popcount(keep);
    if (k == 0) throw InputError("induced subgraph on the empty set");
    std::array<int, kMaxVertices> relabel{};
    std::vector<int> old_of;
    for (int v = 0; v < n_; ++v) {
      if (keep & bit(v)) {
        relabel[v] = static_cast<int>(old_of.size());
        old_of.push_back(v);
      }
    }
    Graph h(k);
    for (int i = 0; i < k; ++i) {
      VertexSet row = adj_[old_of[i]] & keep;
      while (row) {
        const int w = std::countr_zero(row);
        row &= row - 1;
        h.adj_[i] |= bit(relabel[w]);
      }
    }
    return h;
  }

  Graph delete_vertex(int v) const {
    check_vertex(v);
    if (n_ < 2) throw InputError("cannot delete the only vertex of a graph");
    return induced(all() & ~bit(v));
  }

  /// Appends a vertex adjacent to `nbrs` (a subset of the current vertices).
  Graph with_new_vertex(VertexSet nbrs) const {
    if (n_ >= kMaxVertices) throw InputError("graph already has 64 vertices");
    if (nbrs & ~all()) throw InputError("neighbour out of range");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.adj_[n_] = nbrs;
    VertexSet rest = nbrs;
    while (rest) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      g.adj_[u] |= bit(n_);
    }
    return g;
  }

  /// Relabels so that old vertex order[i] becomes vertex i.
  Graph permuted(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_) {
      throw InputError("permutation length mismatch");
    }
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    Graph h(n_);
    for (int i = 0; i < n_; ++i) {
      VertexSet row = adj_[order[i]];
      while (row) {
        const int w = std::countr_zero(row);
        row &= row - 1;
        h.adj_[i] |= bit(pos[w]);
      }
    }
    return h;
  }

  VertexSet all() const noexcept { return low_bits(n_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_,
                                       b.adj_.begin());
  }

  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin(),
        b.adj_.begin() + b.n_);
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(n_));
    }
  }

  int n_ = 1;
  std::array<VertexSet, kMaxVertices> adj_{};
};

inline int degree(const Graph& g, int v) { return g.degree(v); }
inline bool is_connected(const Graph& g) { return g.is_connected(); }
inline Graph delete_vertex(const Graph& g, int v) { return g.delete_vertex(v); }

enum class Family { complete, star, cycle, path, star_plus_edge };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star_plus_edge: return "star_plus_edge";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::complete, Family::star, Family::cycle, Family::path,
                   Family::star_plus_edge}) {
    if (family_name(f) == name) return f;
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

inline int family_min_order(Family f) {
  switch (f) {
    case Family::cycle: return 3;
    case Family::star_plus_edge: return 3;
    case Family::star: return 2;
    default: return 1;
  }
}

/// Named families. The star and S*_n use vertex 0 as the centre; S*_n joins
/// leaves 1 and 2.
inline Graph make_family(Family f, int n) {
  if (n < family_min_order(f) || n > kMaxVertices) {
    throw InputError(std::string(family_name(f)) + " needs " +
                     std::to_string(family_min_order(f)) +
                     " <= n <= 64, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> e;
  switch (f) {
    case Family::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
      break;
    case Family::star:
      for (int v = 1; v < n; ++v) e.emplace_back(0, v);
      break;
    case Family::star_plus_edge:
      for (int v = 1; v < n; ++v) e.emplace_back(0, v);
      e.emplace_back(1, 2);
      break;
    case Family::cycle:
      for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
      break;
    case Family::path:
      for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
      break;
  }
  return Graph::from_edges(n, e);
}

inline Graph make_family(std::string_view name, int n) {
  return make_family(parse_family(name), n);
}

/// Structural recognisers used to confirm equality witnesses.
inline bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

inline bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  return g.max_degree() == n - 1;
}

}  // namespace rqv
