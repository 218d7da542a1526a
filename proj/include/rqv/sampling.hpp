#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rqv/enumeration.hpp"
#include "rqv/graph.hpp"

namespace rqv {

struct SamplerConfig {
  int n = 0;
  /// Edge count drawn uniformly from this range for each sample.
  std::optional<IntRange> edges;
  /// Alternative to `edges`: independent edge probability.
  std::optional<double> edge_probability;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  void validate() const {
    if (n < 2 || n > kMaxVertices) throw InputError("sampling needs 2 <= n <= 64");
    if (edges.has_value() == edge_probability.has_value()) {
      throw InputError("sampler needs exactly one of an edge range or an edge probability");
    }
    const int max_m = n * (n - 1) / 2;
    if (edges && (edges->lo > edges->hi || edges->lo < n - 1 || edges->hi > max_m)) {
      throw InputError("edge range [" + std::to_string(edges->lo) + ", " +
                       std::to_string(edges->hi) + "] infeasible for a connected graph on " +
                       std::to_string(n) + " vertices (need " + std::to_string(n - 1) +
                       " <= m <= " + std::to_string(max_m) + ")");
    }
    if (edge_probability && !(*edge_probability > 0.0 && *edge_probability <= 1.0)) {
      throw InputError("edge probability must lie in (0, 1]");
    }
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Unbiased draw from [0, bound) by rejection; std distributions are not
/// reproducible across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// The i-th sample of a configuration. Each index owns an independent
/// generator, so the sequence does not depend on how indices are scheduled.
inline Graph sample_at(const SamplerConfig& cfg, std::size_t index) {
  std::mt19937_64 rng(detail::splitmix64(cfg.seed ^ detail::splitmix64(index + 1)));
  const int n = cfg.n;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

  if (cfg.edges) {
    const int m = cfg.edges->lo + static_cast<int>(detail::bounded(
                                      rng, static_cast<std::uint64_t>(cfg.edges->hi - cfg.edges->lo + 1)));
    for (;;) {
      // Partial Fisher-Yates: the first m slots are a uniform m-subset.
      for (int i = 0; i < m; ++i) {
        const auto j = i + static_cast<std::size_t>(detail::bounded(rng, pairs.size() - i));
        std::swap(pairs[i], pairs[j]);
      }
      const Graph g = Graph::from_edges(n, {pairs.begin(), pairs.begin() + m});
      if (g.is_connected()) return g;
    }
  }
  const double p = *cfg.edge_probability;
  for (;;) {
    std::vector<std::pair<int, int>> chosen;
    for (const auto& e : pairs) {
      if (detail::unit_double(rng) < p) chosen.push_back(e);
    }
    const Graph g = Graph::from_edges(n, chosen);
    if (g.is_connected()) return g;
  }
}

/// Stream of `count` connected samples, uniform over labelled graphs with the
/// drawn edge count (or G(n, p)) conditioned on connectivity.
class SampleStream {
 public:
  explicit SampleStream(SamplerConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

  std::optional<Graph> next() {
    if (index_ >= cfg_.count) return std::nullopt;
    return sample_at(cfg_, index_++);
  }

  const SamplerConfig& config() const noexcept { return cfg_; }

  StreamIterator<SampleStream> begin() { return StreamIterator<SampleStream>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  SamplerConfig cfg_;
  std::size_t index_ = 0;
};

inline SampleStream sample_connected(SamplerConfig cfg) { return SampleStream(std::move(cfg)); }

}  // namespace rqv
