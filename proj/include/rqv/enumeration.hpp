#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rqv/canonical.hpp"
#include "rqv/graph.hpp"

namespace rqv {

inline constexpr int kMaxExhaustiveOrder = 10;

/// Inclusive integer range.
struct IntRange {
  int lo = 0;
  int hi = 0;

  bool contains(int x) const noexcept { return lo <= x && x <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Optional (m, Δ, δ) window applied to yielded graphs.
struct GraphFilter {
  std::optional<IntRange> edges;
  std::optional<IntRange> max_degree;
  std::optional<IntRange> min_degree;

  bool accepts(const Graph& g) const {
    if (edges && !edges->contains(g.size())) return false;
    if (max_degree || min_degree) {
      const DegreeProfile p = g.degree_profile();
      if (max_degree && !max_degree->contains(p.delta_max)) return false;
      if (min_degree && !min_degree->contains(p.delta_min)) return false;
    }
    return true;
  }
};

/// Input-iterator adaptor for any type exposing `std::optional<Graph> next()`.
template <typename Stream>
class StreamIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Graph;
  using difference_type = std::ptrdiff_t;
  using pointer = const Graph*;
  using reference = const Graph&;

  StreamIterator() = default;
  explicit StreamIterator(Stream* s) : stream_(s) { advance(); }

  reference operator*() const { return *current_; }
  pointer operator->() const { return &*current_; }
  StreamIterator& operator++() {
    advance();
    return *this;
  }
  void operator++(int) { advance(); }

  friend bool operator==(const StreamIterator& it, std::default_sentinel_t) {
    return !it.current_.has_value();
  }

 private:
  void advance() { current_ = stream_->next(); }

  Stream* stream_ = nullptr;
  std::optional<Graph> current_;
};

namespace detail {

/// Children of a connected canonical parent under canonical augmentation.
///
/// A child C = P + v is kept only when v is equivalent to the canonically
/// chosen deletion vertex w of C: w is the non-cut vertex of minimum degree
/// with the largest canonical position, and C - w must be isomorphic to P.
/// Every connected graph then has exactly one parent class, so duplicates can
/// only arise from one parent and are removed locally.
inline std::vector<Graph> augment(const Graph& parent, const CanonicalCode& parent_code) {
  const int k = parent.order();
  std::vector<std::pair<CanonicalCode, Graph>> kids;
  for (VertexSet s = 1; s < bit(k); ++s) {
    const Graph child = parent.with_new_vertex(s);
    const int dv = std::popcount(s);
    VertexSet candidates = 0;
    bool rejected = false;
    for (int u = 0; u <= k && !rejected; ++u) {
      const int du = child.degree(u);
      if (du > dv) continue;
      if (u != k && !child.is_non_cut_vertex(u)) continue;
      if (du < dv) {
        rejected = true;
      } else {
        candidates |= bit(u);
      }
    }
    if (rejected) continue;
    const CanonicalLabeling lab = canonical_labeling(child);
    int w = -1;
    for (int pos = k; pos >= 0; --pos) {
      if (candidates & bit(lab.order[pos])) {
        w = lab.order[pos];
        break;
      }
    }
    if (w != k && canonical_labeling(child.delete_vertex(w)).code != parent_code) continue;
    kids.emplace_back(lab.code, child.permuted(lab.order));
  }
  std::sort(kids.begin(), kids.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  kids.erase(std::unique(kids.begin(), kids.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             kids.end());
  std::vector<Graph> out;
  out.reserve(kids.size());
  for (auto& kv : kids) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace detail

/// Depth-first stream of canonical connected graphs on n vertices, one per
/// isomorphism class. The order is fixed for a given n. Filtering does not
/// change the relative order of the graphs that pass.
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n, GraphFilter filter = {})
      : n_(n), filter_(std::move(filter)) {
    if (n < 1) throw InputError("enumeration needs n >= 1");
    if (n > kMaxExhaustiveOrder) {
      throw InputError("exhaustive enumeration is capped at n = 10 (got " +
                       std::to_string(n) + "); use sampling instead");
    }
    const Graph k1(1);
    if (n == 1) {
      pending_single_ = true;
    } else {
      stack_.push_back(Frame{detail::augment(k1, canonical_labeling(k1).code), 0});
    }
  }

  ConnectedGraphStream(const ConnectedGraphStream&) = delete;
  ConnectedGraphStream& operator=(const ConnectedGraphStream&) = delete;

  int order() const noexcept { return n_; }

  std::optional<Graph> next() {
    if (pending_single_) {
      pending_single_ = false;
      const Graph k1(1);
      if (filter_.accepts(k1)) return k1;
      return std::nullopt;
    }
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.pos == top.children.size()) {
        stack_.pop_back();
        continue;
      }
      Graph g = std::move(top.children[top.pos++]);
      if (g.order() == n_) {
        if (filter_.accepts(g)) return g;
        continue;
      }
      // Each later vertex adds at least one edge.
      if (filter_.edges && g.size() + (n_ - g.order()) > filter_.edges->hi) continue;
      auto kids = detail::augment(g, canonical_labeling(g).code);
      stack_.push_back(Frame{std::move(kids), 0});
    }
    return std::nullopt;
  }

  StreamIterator<ConnectedGraphStream> begin() { return StreamIterator<ConnectedGraphStream>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  struct Frame {
    std::vector<Graph> children;
    std::size_t pos = 0;
  };

  int n_;
  GraphFilter filter_;
  bool pending_single_ = false;
  std::vector<Frame> stack_;
};

inline ConnectedGraphStream enumerate_connected(int n, GraphFilter filter = {}) {
  return ConnectedGraphStream(n, std::move(filter));
}

inline std::vector<Graph> all_connected(int n, GraphFilter filter = {}) {
  ConnectedGraphStream s(n, std::move(filter));
  std::vector<Graph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace rqv
