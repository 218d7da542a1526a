#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rqv/bounds.hpp"
#include "rqv/graph.hpp"
#include "rqv/graph6.hpp"
#include "rqv/interval.hpp"
#include "rqv/invariants.hpp"
#include "rqv/spectral.hpp"

namespace rqv {

inline constexpr int kSchemaVersion = 1;

struct InvariantReport {
  int n = 0;
  int m = 0;
  int delta_min = 0;
  int delta_max = 0;
  Interval<double> randic;
  SpectralResult q;
  SpectralResult lambda1;
  /// q-bracket / randic.
  Interval<double> ratio_q_over_R;
  std::vector<BoundValue> bound_values;

  const BoundValue& bound(BoundName name) const {
    for (const auto& b : bound_values) {
      if (b.name == name) return b;
    }
    throw InputError("bound not present in report");
  }
};

inline InvariantReport full_report(const Graph& g, double tol = kDefaultSpectralTolerance) {
  if (!g.is_connected()) throw InputError("invariant report needs a connected graph");
  if (g.order() < 2) throw InputError("invariant report needs n >= 2 (R is undefined on K1)");
  InvariantReport r;
  const DegreeProfile p = g.degree_profile();
  r.n = g.order();
  r.m = p.m;
  r.delta_min = p.delta_min;
  r.delta_max = p.delta_max;
  r.randic = randic_index(g);
  r.q = q_radius(g, tol);
  r.lambda1 = rqv::lambda1(g, tol);
  r.ratio_q_over_R = r.q.bracket() / r.randic;
  r.bound_values = {
      {BoundName::hong, hong_bound(r.n, r.m)},
      {BoundName::feng_yu, feng_yu_bound(r.n, r.m)},
      {BoundName::merris, merris_bound(g)},
      {BoundName::be_lower, be_lower(r.n)},
      {BoundName::dfr_lower, dfr_lower(r.n), p.delta_min >= 2},
      {BoundName::fms_lower, fms_lower_lambda1(r.m, r.randic)},
  };
  return r;
}

inline nlohmann::ordered_json interval_json(const Interval<double>& x) {
  return {{"lo", x.lo()}, {"hi", x.hi()}};
}

inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (const auto& b : r.bound_values) {
    bounds[std::string(to_string(b.name))] = {{"side", std::string(to_string(b.side()))},
                                              {"applicable", b.applicable},
                                              {"value", interval_json(b.value)}};
  }
  auto spectral = [](const SpectralResult& s) {
    return nlohmann::ordered_json{{"value", s.lambda_max},
                                  {"lo", s.lower},
                                  {"hi", s.upper},
                                  {"residual", s.residual},
                                  {"iterations", s.iterations}};
  };
  return {{"schema_version", kSchemaVersion},
          {"n", r.n},
          {"m", r.m},
          {"delta_min", r.delta_min},
          {"delta_max", r.delta_max},
          {"randic", interval_json(r.randic)},
          {"q", spectral(r.q)},
          {"lambda1", spectral(r.lambda1)},
          {"ratio_q_over_R", interval_json(r.ratio_q_over_R)},
          {"bounds", bounds}};
}

inline std::string render_text(const InvariantReport& r, const std::string& label) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << label << "\n";
  os << "  n = " << r.n << ", m = " << r.m << ", delta = " << r.delta_min << ", Delta = " << r.delta_max << "\n";
  os << "  R       = " << r.randic.mid() << "  " << r.randic << "\n";
  os << "  q       = " << r.q.lambda_max << "  " << r.q.bracket() << "\n";
  os << "  lambda1 = " << r.lambda1.lambda_max << "  " << r.lambda1.bracket() << "\n";
  os << "  q/R     = " << r.ratio_q_over_R.mid() << "  " << r.ratio_q_over_R << "\n";
  for (const auto& b : r.bound_values) {
    os << "  " << std::left << std::setw(10) << to_string(b.name) << std::right << b.value.mid()
       << "  (" << to_string(b.side()) << (b.applicable ? "" : ", not applicable") << ")\n";
  }
  return os.str();
}

}  // namespace rqv
