#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "rqv/error.hpp"
#include "rqv/graph.hpp"
#include "rqv/interval.hpp"
#include "rqv/invariants.hpp"

namespace rqv {

enum class BoundName { hong, feng_yu, merris, be_lower, dfr_lower, fms_lower };
enum class BoundSide { upper_on_lambda1, upper_on_q, lower_on_R, lower_on_lambda1 };

inline constexpr std::array<BoundName, 6> kAllBounds = {
    BoundName::hong,     BoundName::feng_yu,   BoundName::merris,
    BoundName::be_lower, BoundName::dfr_lower, BoundName::fms_lower};

constexpr BoundSide side_of(BoundName b) {
  switch (b) {
    case BoundName::hong: return BoundSide::upper_on_lambda1;
    case BoundName::feng_yu:
    case BoundName::merris: return BoundSide::upper_on_q;
    case BoundName::be_lower:
    case BoundName::dfr_lower: return BoundSide::lower_on_R;
    case BoundName::fms_lower: return BoundSide::lower_on_lambda1;
  }
  return BoundSide::upper_on_q;
}

constexpr std::string_view to_string(BoundName b) {
  switch (b) {
    case BoundName::hong: return "hong";
    case BoundName::feng_yu: return "feng_yu";
    case BoundName::merris: return "merris";
    case BoundName::be_lower: return "be_lower";
    case BoundName::dfr_lower: return "dfr_lower";
    case BoundName::fms_lower: return "fms_lower";
  }
  return "?";
}

constexpr std::string_view to_string(BoundSide s) {
  switch (s) {
    case BoundSide::upper_on_lambda1: return "upper_on_lambda1";
    case BoundSide::upper_on_q: return "upper_on_q";
    case BoundSide::lower_on_R: return "lower_on_R";
    case BoundSide::lower_on_lambda1: return "lower_on_lambda1";
  }
  return "?";
}

struct BoundValue {
  BoundName name;
  Interval<double> value;
  /// False when the graph falls outside the bound's hypothesis (dfr_lower
  /// needs δ >= 2); the value is still reported.
  bool applicable = true;

  BoundSide side() const { return side_of(name); }
};

/// λ1 <= sqrt(2m - n + 1) for graphs without isolated vertices.
template <typename T = double>
Interval<T> hong_bound(int n, int m) {
  const std::int64_t radicand = 2 * static_cast<std::int64_t>(m) - n + 1;
  if (n < 1 || radicand < 0) throw InputError("hong bound needs 2m - n + 1 >= 0");
  return sqrt_int<T>(radicand);
}

/// q <= 2m / (n - 1) + n - 2.
template <typename T = double>
Interval<T> feng_yu_bound(int n, int m) {
  if (n < 2) throw InputError("feng-yu bound needs n >= 2");
  return ival<T>(2 * static_cast<std::int64_t>(m)) / ival<T>(n - 1) + ival<T>(n - 2);
}

/// max over v of d(v) + m(v), exact.
inline Rational merris_bound_exact(const Graph& g) {
  if (!g.is_connected() || g.order() < 2) throw InputError("merris bound needs a connected graph with n >= 2");
  Rational best = t_value(g, 0);
  for (int v = 1; v < g.order(); ++v) best = std::max(best, t_value(g, v));
  return best;
}

inline Interval<double> merris_bound(const Graph& g) {
  return Interval<double>::from_rational(merris_bound_exact(g));
}

/// λ1 >= m / R.
template <typename T = double>
Interval<T> fms_lower_lambda1(int m, const Interval<T>& randic) {
  if (!(randic.lo() > 0)) throw InputError("fms bound needs R > 0");
  return ival<T>(m) / randic;
}

/// R >= sqrt(n - 1) without isolated vertices.
template <typename T = double>
Interval<T> be_lower(int n) {
  if (n < 2) throw InputError("be bound needs n >= 2");
  return sqrt_int<T>(n - 1);
}

/// R >= sqrt(2(n-1)) + 1/(n-1) - sqrt(2/(n-1)) when δ >= 2.
template <typename T = double>
Interval<T> dfr_lower(int n) {
  if (n < 2) throw InputError("dfr bound needs n >= 2");
  const Interval<T> k = ival<T>(n - 1);
  return sqrt(ival<T>(2) * k) + Interval<T>(T(1)) / k - sqrt(ival<T>(2) / k);
}

}  // namespace rqv
