#pragma once

// Whole-corpus property checks over enumerated connected graphs, shared by
// the property tests and the acceptance runner.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rqv/bounds.hpp"
#include "rqv/canonical.hpp"
#include "rqv/graph6.hpp"
#include "rqv/invariants.hpp"
#include "rqv/spectral.hpp"

namespace chain {

inline constexpr double kTol = 1e-9;

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

/// Quantities that several checks share, computed once per graph.
struct Facts {
  const rqv::Graph* g;
  rqv::DegreeProfile p;
  rqv::Interval<double> randic;
  rqv::SpectralResult q;
  rqv::SpectralResult lambda1;
};

inline Facts facts_of(const rqv::Graph& g) {
  return {&g, g.degree_profile(), rqv::randic_index(g), rqv::q_radius(g), rqv::lambda1(g)};
}

inline std::string label(const rqv::Graph& g, const char* what) {
  return std::string(what) + " at " + rqv::write_graph6(g);
}

/// Hong, Feng-Yu and Merris upper bounds; FMS, Bollobas-Erdos and DFR lower bounds.
inline void bound_checks(const Facts& f, Tally& t) {
  const rqv::Graph& g = *f.g;
  const int n = g.order();
  const int m = f.p.m;
  t.expect(f.lambda1.upper <= rqv::hong_bound(n, m).hi() + kTol, label(g, "hong"));
  t.expect(f.q.upper <= rqv::feng_yu_bound(n, m).hi() + kTol, label(g, "feng_yu"));
  t.expect(f.q.upper <= rqv::merris_bound(g).hi() + kTol, label(g, "merris"));
  t.expect(f.lambda1.lower >= rqv::fms_lower_lambda1(m, f.randic).lo() - kTol, label(g, "fms"));
  const auto be = rqv::be_lower(n);
  t.expect(f.randic.lo() >= be.lo() - kTol, label(g, "bollobas_erdos"));
  // Equality in R >= sqrt(n-1) only for stars.
  t.expect(f.randic.lo() > be.hi() + kTol || rqv::is_star(g), label(g, "bollobas_erdos equality"));
  if (f.p.delta_min >= 2) t.expect(f.randic.lo() >= rqv::dfr_lower(n).lo() - kTol, label(g, "dfr"));
}

/// R(G) - R(G - v) >= sqrt(δ/Δ)/2 for every minimum-degree v whose deletion
/// leaves no isolated vertex.
inline void deletion_checks(const Facts& f, Tally& t) {
  const rqv::Graph& g = *f.g;
  if (g.order() < 3) return;
  const double rhs = 0.5 * std::sqrt(static_cast<double>(f.p.delta_min) / f.p.delta_max);
  for (int v = 0; v < g.order(); ++v) {
    if (f.p.degrees[v] != f.p.delta_min) continue;
    const rqv::Graph h = g.delete_vertex(v);
    if (h.min_degree() < 1) continue;
    const auto diff = f.randic - rqv::randic_index(h);
    t.expect(diff.hi() >= rhs - kTol, label(g, "hansen_vukicevic"));
  }
}

namespace detail {

inline void pendant_sequences(const rqv::Graph& g, const rqv::Interval<double>& r0, double acc, Tally& t,
                              const rqv::Graph& root) {
  bool extended = false;
  if (g.order() > 2) {
    const int delta = g.max_degree();
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 1) continue;
      extended = true;
      pendant_sequences(g.delete_vertex(v), r0, acc + 0.5 / std::sqrt(static_cast<double>(delta)), t, root);
    }
  }
  if (!extended) {
    // Maximal sequence: compare with the sum accumulated along the way.
    t.expect(r0.hi() >= acc + rqv::randic_index(g).lo() - kTol, label(root, "iterated deletion"));
  }
}

}  // namespace detail

/// R(G) >= Σ 1/(2 sqrt(Δ(G_i))) + R(G_s) along every maximal pendant-deletion sequence.
inline void iterated_deletion_checks(const Facts& f, Tally& t) {
  detail::pendant_sequences(*f.g, f.randic, 0.0, t, *f.g);
}

/// Trees: q <= n with equality exactly for stars.
inline void tree_checks(const Facts& f, Tally& t) {
  const rqv::Graph& g = *f.g;
  if (f.p.m != g.order() - 1) return;
  const int n = g.order();
  t.expect(f.q.lower <= n + kTol, label(g, "tree q <= n"));
  const bool at_n = f.q.upper >= n - kTol;
  t.expect(at_n == rqv::is_star(g), label(g, "tree q = n iff star"));
}

/// Merris direction, the dense chain R >= m/(n-1) and the small-Δ chain q <= 2Δ < n.
inline void lemma_chain_checks(const Facts& f, Tally& t) {
  const rqv::Graph& g = *f.g;
  const int n = g.order();
  t.expect(rqv::merris_bound(g).hi() >= f.q.lower - kTol, label(g, "max t >= q"));
  t.expect(f.randic.hi() >= static_cast<double>(f.p.m) / (n - 1) - kTol, label(g, "dense R >= m/(n-1)"));
  if (2 * f.p.delta_max < n) t.expect(f.q.lower < n + kTol, label(g, "small q < n"));
}

/// If m >= n and R > sqrt(n-1) + (2m-2n+2)/(n sqrt(n-1)), then q/R < n/sqrt(n-1).
inline void basic_lemma_checks(const Facts& f, Tally& t) {
  const rqv::Graph& g = *f.g;
  const int n = g.order();
  const int m = f.p.m;
  if (m < n) return;
  const auto root = rqv::sqrt_int<double>(n - 1);
  const auto threshold = root + rqv::ival<double>(2 * m - 2 * n + 2) / (rqv::ival<double>(n) * root);
  if (!(f.randic.lo() > threshold.hi())) return;
  const auto ratio = f.q.bracket() / f.randic;
  t.expect(ratio.hi() < (rqv::ival<double>(n) / root).hi() + kTol, label(g, "basic lemma"));
}

/// Unicyclic graphs (m = n): the minimum R over each n is attained by S*_n,
/// and only by S*_n.
inline void unicyclic_minimum_checks(const std::vector<rqv::Graph>& graphs, int max_n, Tally& t) {
  for (int n = 3; n <= max_n; ++n) {
    const rqv::Graph star_plus = rqv::make_family(rqv::Family::star_plus_edge, n);
    const auto target = rqv::randic_index(star_plus);
    bool found = false;
    for (const rqv::Graph& g : graphs) {
      if (g.order() != n || g.size() != n) continue;
      const auto r = rqv::randic_index(g);
      if (rqv::isomorphic(g, star_plus)) {
        found = true;
        continue;
      }
      t.expect(r.lo() > target.hi(), label(g, "unicyclic minimum"));
    }
    t.expect(found, "S*_" + std::to_string(n) + " missing from the enumeration");
  }
}

}  // namespace chain
