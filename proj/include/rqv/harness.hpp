#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rqv/certifier.hpp"
#include "rqv/enumeration.hpp"
#include "rqv/error.hpp"
#include "rqv/graph.hpp"
#include "rqv/graph6.hpp"
#include "rqv/interval.hpp"
#include "rqv/invariants.hpp"
#include "rqv/sampling.hpp"
#include "rqv/spectral.hpp"

namespace rqv {

inline constexpr double kEqualityTolerance = 1e-8;
inline constexpr int kMinConjectureOrder = 4;
inline constexpr std::size_t kTopListSize = 10;

/// Conjectured maximum of q/R: (4n-4)/n for 4 <= n <= 12, n/sqrt(n-1) for n >= 13.
template <typename T = double>
Interval<T> bound_branch(int n) {
  if (n < kMinConjectureOrder) throw InputError("the conjecture starts at n = 4");
  if (n <= 12) return Interval<T>::from_rational(Rational(4 * n - 4, n));
  return ival<T>(n) / sqrt_int<T>(n - 1);
}

/// Families whose ratio meets the branch bound exactly, by closed forms:
/// q(K_n) = 2n - 2 and R(K_n) = n/2 give (4n-4)/n; q(S_n) = n and
/// R(S_n) = sqrt(n-1) give n/sqrt(n-1).
inline std::optional<Family> closed_form_equality(const Graph& g) {
  const int n = g.order();
  if (n < kMinConjectureOrder) return std::nullopt;
  if (n <= 12 && is_complete(g)) return Family::complete;
  if (n >= 13 && is_star(g)) return Family::star;
  return std::nullopt;
}

enum class RunMode { exhaustive, sample, single, stream };

constexpr std::string_view to_string(RunMode m) {
  switch (m) {
    case RunMode::exhaustive: return "exhaustive";
    case RunMode::sample: return "sample";
    case RunMode::single: return "single";
    case RunMode::stream: return "stream";
  }
  return "?";
}

struct VerifyRunConfig {
  RunMode mode = RunMode::exhaustive;
  IntRange n{4, 4};
  /// Sample mode: seed and count; `edges` applies to every n when set,
  /// otherwise each n uses [n-1, min(C(n,2), n+30)].
  SamplerConfig sampler;
  /// Exhaustive mode: optional (m, Δ, δ) window.
  GraphFilter filter;
  /// Single and stream modes.
  std::vector<Graph> graphs;
  /// Stream mode: every graph is claimed to be an equality witness of this family.
  std::optional<Family> claimed_family;
  double tolerance = kEqualityTolerance;
  double spectral_tolerance = kDefaultSpectralTolerance;
  /// 0 means RQV_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

enum class Outcome { ok, violation, witness, undecidable };

struct GraphFinding {
  std::string graph6;
  int n = 0;
  int m = 0;
  Interval<double> ratio;
  Interval<double> bound;
  Outcome outcome = Outcome::ok;
  std::string note;
};

struct VerifyRunResult {
  RunMode mode = RunMode::exhaustive;
  std::size_t graphs_checked = 0;
  std::map<int, std::size_t> graphs_per_n;
  std::vector<GraphFinding> violations;
  std::vector<GraphFinding> equality_witnesses;
  std::vector<GraphFinding> undecidable;
  std::optional<GraphFinding> max_ratio_graph;
  /// Largest ratio.lo first.
  std::vector<GraphFinding> top;

  bool passed() const { return violations.empty() && undecidable.empty(); }
};

/// "7" or "4..9".
inline IntRange parse_int_range(std::string_view text) {
  auto parse = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InputError("bad integer range '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse(text);
    return {v, v};
  }
  const IntRange r{parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
  if (r.lo > r.hi) throw InputError("empty range '" + std::string(text) + "'");
  return r;
}

inline unsigned worker_count(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RQV_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw InputError("RQV_THREADS must be an integer in [1, 1024]");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Checks one graph against its branch bound.
inline GraphFinding check_graph(const Graph& g, double tol = kEqualityTolerance,
                                double spectral_tol = kDefaultSpectralTolerance) {
  const int n = g.order();
  if (n < kMinConjectureOrder) throw InputError("conjecture checks need n >= 4, got n = " + std::to_string(n));
  if (!g.is_connected()) throw InputError("conjecture checks need a connected graph");
  GraphFinding f;
  f.graph6 = write_graph6(g);
  f.n = n;
  f.m = g.size();
  f.bound = bound_branch(n);
  try {
    f.ratio = q_radius(g, spectral_tol).bracket() / randic_index(g);
  } catch (const NumericalError& e) {
    f.outcome = Outcome::undecidable;
    f.note = e.what();
    return f;
  }
  if (f.ratio.hi() > f.bound.hi() + tol) {
    f.outcome = Outcome::violation;
    f.note = "ratio exceeds bound";
  } else if (f.ratio.hi() >= f.bound.lo() - tol) {
    if (const auto fam = closed_form_equality(g)) {
      f.outcome = Outcome::witness;
      f.note = std::string(family_name(*fam));
    } else {
      f.outcome = Outcome::violation;
      f.note = "unexpected equality witness";
    }
  }
  return f;
}

namespace detail {

inline bool finding_order(const GraphFinding& a, const GraphFinding& b) {
  return std::tie(a.n, a.graph6, a.note) < std::tie(b.n, b.graph6, b.note);
}

/// Larger ratio.lo first; ties by (n, graph6).
inline bool ratio_order(const GraphFinding& a, const GraphFinding& b) {
  if (a.ratio.lo() != b.ratio.lo()) return a.ratio.lo() > b.ratio.lo();
  return finding_order(a, b);
}

class Aggregator {
 public:
  Aggregator(const VerifyRunConfig& cfg, RunMode mode)
      : tol_(cfg.tolerance), spectral_tol_(cfg.spectral_tolerance), threads_(worker_count(cfg.threads)) {
    result_.mode = mode;
    batch_.reserve(kBatch);
  }

  void push(Graph g) {
    batch_.push_back(std::move(g));
    if (batch_.size() == kBatch) flush();
  }

  VerifyRunResult finish() {
    flush();
    std::sort(result_.violations.begin(), result_.violations.end(), finding_order);
    std::sort(result_.equality_witnesses.begin(), result_.equality_witnesses.end(), finding_order);
    std::sort(result_.undecidable.begin(), result_.undecidable.end(), finding_order);
    if (!result_.top.empty()) result_.max_ratio_graph = result_.top.front();
    return std::move(result_);
  }

  VerifyRunResult& result() { return result_; }

 private:
  static constexpr std::size_t kBatch = 4096;

  void flush() {
    if (batch_.empty()) return;
    std::vector<GraphFinding> out(batch_.size());
    const unsigned workers = std::min<unsigned>(threads_, static_cast<unsigned>(batch_.size()));
    if (workers <= 1) {
      for (std::size_t i = 0; i < batch_.size(); ++i) out[i] = check_graph(batch_[i], tol_, spectral_tol_);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < batch_.size(); i += workers) {
              out[i] = check_graph(batch_[i], tol_, spectral_tol_);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& f : out) absorb(std::move(f));
    batch_.clear();
  }

  void absorb(GraphFinding f) {
    ++result_.graphs_checked;
    ++result_.graphs_per_n[f.n];
    switch (f.outcome) {
      case Outcome::violation: result_.violations.push_back(f); break;
      case Outcome::witness: result_.equality_witnesses.push_back(f); break;
      case Outcome::undecidable: result_.undecidable.push_back(f); return;
      case Outcome::ok: break;
    }
    auto& top = result_.top;
    if (top.size() < kTopListSize || ratio_order(f, top.back())) {
      top.insert(std::upper_bound(top.begin(), top.end(), f, ratio_order), std::move(f));
      if (top.size() > kTopListSize) top.pop_back();
    }
  }

  double tol_;
  double spectral_tol_;
  unsigned threads_;
  std::vector<Graph> batch_;
  VerifyRunResult result_;
};

inline bool has_witness(const VerifyRunResult& r, const std::string& graph6) {
  return std::any_of(r.equality_witnesses.begin(), r.equality_witnesses.end(),
                     [&](const GraphFinding& f) { return f.graph6 == graph6; });
}

inline IntRange default_sample_edges(int n) {
  return {n - 1, static_cast<int>(std::min<std::int64_t>(choose2(n), n + 30))};
}

}  // namespace detail

/// Checks q/R against the branch bound over the configured graphs.
///
/// A graph is a violation when ratio.hi exceeds the bound by more than the
/// tolerance. A graph within the tolerance of the bound must be K_n (n <= 12)
/// or S_n (n >= 13) by closed form, otherwise it is recorded as an
/// unexpected witness. Exhaustive runs also require K_n among the witnesses.
inline VerifyRunResult verify_conjecture(const VerifyRunConfig& cfg) {
  if (!(cfg.tolerance >= 0.0)) throw InputError("tolerance must be nonnegative");
  if (cfg.mode == RunMode::exhaustive || cfg.mode == RunMode::sample) {
    if (cfg.n.lo > cfg.n.hi) throw InputError("empty n range");
    if (cfg.n.lo < kMinConjectureOrder) throw InputError("the conjecture starts at n = 4");
  }
  detail::Aggregator agg(cfg, cfg.mode);
  switch (cfg.mode) {
    case RunMode::exhaustive: {
      if (cfg.n.hi > kMaxExhaustiveOrder) {
        throw InputError("exhaustive mode supports n <= " + std::to_string(kMaxExhaustiveOrder) +
                         "; use sampling for larger n");
      }
      for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        for (const Graph& g : enumerate_connected(n, cfg.filter)) agg.push(g);
      }
      VerifyRunResult r = agg.finish();
      for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        const Graph k = make_family(Family::complete, n);
        if (!cfg.filter.accepts(k)) continue;
        const std::string code = write_graph6(k);
        if (!detail::has_witness(r, code)) {
          GraphFinding f = check_graph(k, cfg.tolerance, cfg.spectral_tolerance);
          f.outcome = Outcome::violation;
          f.note = "missing equality witness K_" + std::to_string(n);
          r.violations.push_back(std::move(f));
        }
      }
      std::sort(r.violations.begin(), r.violations.end(), detail::finding_order);
      return r;
    }
    case RunMode::sample: {
      for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        SamplerConfig sc = cfg.sampler;
        sc.n = n;
        if (!sc.edges && !sc.edge_probability) sc.edges = detail::default_sample_edges(n);
        for (const Graph& g : sample_connected(sc)) agg.push(g);
      }
      return agg.finish();
    }
    case RunMode::single:
    case RunMode::stream: {
      if (cfg.graphs.empty()) throw InputError("no graphs given");
      if (cfg.mode == RunMode::single && cfg.graphs.size() != 1) throw InputError("single mode takes one graph");
      for (const Graph& g : cfg.graphs) agg.push(g);
      VerifyRunResult r = agg.finish();
      if (cfg.claimed_family) {
        // Each listed graph is claimed to be an equality witness of the family.
        for (const Graph& g : cfg.graphs) {
          const std::string code = write_graph6(g);
          const auto fam = closed_form_equality(g);
          if (fam == cfg.claimed_family && detail::has_witness(r, code)) continue;
          GraphFinding f = check_graph(g, cfg.tolerance, cfg.spectral_tolerance);
          f.outcome = Outcome::violation;
          f.note = "claimed " + std::string(family_name(*cfg.claimed_family)) + " equality witness is not one";
          r.violations.push_back(std::move(f));
        }
        std::sort(r.violations.begin(), r.violations.end(), detail::finding_order);
      }
      return r;
    }
  }
  throw InputError("unknown run mode");
}

/// Exhaustive search for the largest q/R on n vertices, with the top-10 list.
inline VerifyRunResult find_extremal(int n, unsigned threads = 0) {
  VerifyRunConfig cfg;
  cfg.mode = RunMode::exhaustive;
  cfg.n = {n, n};
  cfg.threads = threads;
  return verify_conjecture(cfg);
}

inline nlohmann::ordered_json to_json(const GraphFinding& f) {
  nlohmann::ordered_json j{{"graph6", f.graph6},
                           {"n", f.n},
                           {"m", f.m},
                           {"ratio", {{"lo", f.ratio.lo()}, {"hi", f.ratio.hi()}}},
                           {"bound", {{"lo", f.bound.lo()}, {"hi", f.bound.hi()}}}};
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

inline nlohmann::ordered_json to_json(const VerifyRunResult& r, int schema_version = 1) {
  auto list = [](const std::vector<GraphFinding>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& f : v) a.push_back(to_json(f));
    return a;
  };
  nlohmann::ordered_json per_n = nlohmann::ordered_json::object();
  for (const auto& [n, c] : r.graphs_per_n) per_n[std::to_string(n)] = c;
  nlohmann::ordered_json j{{"schema_version", schema_version},
                           {"mode", std::string(to_string(r.mode))},
                           {"passed", r.passed()},
                           {"graphs_checked", r.graphs_checked},
                           {"graphs_per_n", per_n},
                           {"violations", list(r.violations)},
                           {"equality_witnesses", list(r.equality_witnesses)},
                           {"undecidable", list(r.undecidable)}};
  j["max_ratio_graph"] = r.max_ratio_graph ? to_json(*r.max_ratio_graph) : nlohmann::ordered_json(nullptr);
  j["top"] = list(r.top);
  return j;
}

}  // namespace rqv
