#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rqv/enumeration.hpp"
#include "rqv/error.hpp"
#include "rqv/graph.hpp"
#include "rqv/interval.hpp"
#include "rqv/invariants.hpp"

namespace rqv {

enum class LemmaId {
  reduce_f,
  lemma_1314,
  dense,
  small,
  largedegree_t,
  lb131_n13,
  lb131_n12,
  base13_k1_randic,
  min2,
  h_identity,
  l_identity,
  h_monotone,
  l_concave_endpoints,
  g12_final,
  unicyclic_star,
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::reduce_f,        LemmaId::lemma_1314,  LemmaId::dense,
    LemmaId::small,           LemmaId::largedegree_t, LemmaId::lb131_n13,
    LemmaId::lb131_n12,       LemmaId::base13_k1_randic, LemmaId::min2,
    LemmaId::h_identity,      LemmaId::l_identity,  LemmaId::h_monotone,
    LemmaId::l_concave_endpoints, LemmaId::g12_final, LemmaId::unicyclic_star,
};

constexpr std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::reduce_f: return "reduce_f";
    case LemmaId::lemma_1314: return "lemma_1314";
    case LemmaId::dense: return "dense";
    case LemmaId::small: return "small";
    case LemmaId::largedegree_t: return "largedegree_t";
    case LemmaId::lb131_n13: return "lb131_n13";
    case LemmaId::lb131_n12: return "lb131_n12";
    case LemmaId::base13_k1_randic: return "base13_k1_randic";
    case LemmaId::min2: return "min2";
    case LemmaId::h_identity: return "h_identity";
    case LemmaId::l_identity: return "l_identity";
    case LemmaId::h_monotone: return "h_monotone";
    case LemmaId::l_concave_endpoints: return "l_concave_endpoints";
    case LemmaId::g12_final: return "g12_final";
    case LemmaId::unicyclic_star: return "unicyclic_star";
  }
  return "?";
}

inline LemmaId parse_lemma_id(std::string_view s) {
  for (LemmaId id : kAllLemmas) {
    if (to_string(id) == s) return id;
  }
  throw InputError("unknown lemma id '" + std::string(s) + "'");
}

enum class CheckStatus { certified, failed, undecidable };

constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::certified: return "certified";
    case CheckStatus::failed: return "failed";
    case CheckStatus::undecidable: return "undecidable";
  }
  return "?";
}

/// How a margin is judged: margin > 0, margin >= 0, or margin == 0.
enum class Relation { strict, non_strict, equal };

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct Witness {
  std::string claim;
  Params params;
};

struct LemmaCheck {
  LemmaId lemma_id = LemmaId::reduce_f;
  nlohmann::ordered_json grid;
  CheckStatus status = CheckStatus::certified;
  /// Margin with the smallest lower end (first such point in grid order).
  Interval<double> worst_margin;
  Witness witness;
  std::size_t evaluated_points = 0;
  double wall_time_ms = 0.0;
  /// First failing (or undecidable) point, when any.
  std::optional<Witness> first_failure;

  bool certified() const { return status == CheckStatus::certified; }
};

struct PointOutcome {
  CheckStatus status = CheckStatus::certified;
  Interval<double> margin;
};

namespace detail {

template <typename T>
CheckStatus classify(const Interval<T>& m, Relation rel) {
  switch (rel) {
    case Relation::strict:
      if (m.lo() > 0) return CheckStatus::certified;
      if (m.hi() <= 0) return CheckStatus::failed;
      return CheckStatus::undecidable;
    case Relation::non_strict:
      if (m.lo() >= 0) return CheckStatus::certified;
      if (m.hi() < 0) return CheckStatus::failed;
      return CheckStatus::undecidable;
    case Relation::equal:
      return m.contains_zero() ? CheckStatus::undecidable : CheckStatus::failed;
  }
  return CheckStatus::undecidable;
}

inline CheckStatus classify_sign(int sign, Relation rel) {
  switch (rel) {
    case Relation::strict: return sign > 0 ? CheckStatus::certified : CheckStatus::failed;
    case Relation::non_strict: return sign >= 0 ? CheckStatus::certified : CheckStatus::failed;
    case Relation::equal: return sign == 0 ? CheckStatus::certified : CheckStatus::failed;
  }
  return CheckStatus::failed;
}

}  // namespace detail

/// Decides a real-valued margin in double interval arithmetic, retrying once
/// at 50 digits when the double enclosure straddles the threshold.
/// `margin` is called with std::type_identity<T> and returns Interval<T>.
template <typename F>
PointOutcome decide_real(Relation rel, F&& margin) {
  const Interval<double> m = margin(std::type_identity<double>{});
  CheckStatus st = detail::classify(m, rel);
  if (st != CheckStatus::undecidable) return {st, m};
  const Interval<ExtendedFloat> me = margin(std::type_identity<ExtendedFloat>{});
  return {detail::classify(me, rel), to_double(me)};
}

inline PointOutcome decide_exact(const Rational& margin, Relation rel) {
  // Boost's mixed rational/int comparisons recurse under C++20 rewritten
  // operators, so the sign comes from the (normalised) numerator.
  const std::int64_t num = margin.numerator();
  const int sign = num > 0 ? 1 : (num < 0 ? -1 : 0);
  return {detail::classify_sign(sign, rel),
          num == 0 ? Interval<double>(0.0) : Interval<double>::from_rational(margin)};
}

inline PointOutcome decide_exact(const BigInt& margin, Relation rel) {
  return {detail::classify_sign(margin.sign(), rel),
          margin.is_zero() ? Interval<double>(0.0) : Interval<double>::from_bigint(margin)};
}

/// Accumulates point outcomes in grid order.
class CheckBuilder {
 public:
  CheckBuilder(LemmaId id, nlohmann::ordered_json grid)
      : start_(std::chrono::steady_clock::now()) {
    check_.lemma_id = id;
    check_.grid = std::move(grid);
  }

  void add(std::string claim, Params params, const PointOutcome& out) {
    ++check_.evaluated_points;
    if (!have_worst_ || out.margin.lo() < check_.worst_margin.lo()) {
      have_worst_ = true;
      check_.worst_margin = out.margin;
      check_.witness = Witness{claim, params};
    }
    if (out.status == CheckStatus::failed) {
      if (check_.status != CheckStatus::failed) check_.first_failure = Witness{claim, params};
      check_.status = CheckStatus::failed;
    } else if (out.status == CheckStatus::undecidable && check_.status == CheckStatus::certified) {
      check_.status = CheckStatus::undecidable;
      check_.first_failure = Witness{std::move(claim), std::move(params)};
    }
  }

  /// A consistency condition: counted and able to fail the check, but not a
  /// margin of the inequality itself.
  void require(std::string claim, Params params, bool ok) {
    ++check_.evaluated_points;
    if (!ok && check_.status != CheckStatus::failed) {
      check_.status = CheckStatus::failed;
      check_.first_failure = Witness{std::move(claim), std::move(params)};
    }
  }

  LemmaCheck finish() {
    check_.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(check_);
  }

 private:
  LemmaCheck check_;
  bool have_worst_ = false;
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Closed-form quantities.

/// f(m) = m / sqrt(2m - (n-1)) - sqrt(n-1) - (2m - 2(n-1)) / (n sqrt(n-1)).
/// Positive f means the Hong and Favaron-Maheo-Sacle bounds force R above
/// the threshold needed by the Feng-Yu route.
template <typename T = double>
Interval<T> f_value(int n, int m) {
  const std::int64_t radicand = 2 * static_cast<std::int64_t>(m) - (n - 1);
  if (n < 2 || radicand <= 0) throw InputError("f needs n >= 2 and 2m - (n-1) > 0");
  const Interval<T> root_n1 = sqrt_int<T>(n - 1);
  return ival<T>(m) / sqrt_int<T>(radicand) - root_n1 -
         ival<T>(2 * static_cast<std::int64_t>(m) - 2 * (n - 1)) / (ival<T>(n) * root_n1);
}

/// h(m) = A^2 - B^2 = m^2 n^2 (n-1) - (2m + n^2 - 3n + 2)^2 (2m - (n-1)).
inline BigInt h_value(int n, int m) {
  const BigInt N(n);
  const BigInt M(m);
  const BigInt c = 2 * M + N * N - 3 * N + 2;
  return M * M * N * N * (N - 1) - c * c * (2 * M - (N - 1));
}

/// l(m) = h'(m) = 2mn^2(n-1) - 4(n^2 + 2m - 3n + 2)(2m - n + 1) - 2(n^2 + 2m - 3n + 2)^2.
inline BigInt l_value(int n, int m) {
  const BigInt N(n);
  const BigInt M(m);
  const BigInt c = N * N + 2 * M - 3 * N + 2;
  return 2 * M * N * N * (N - 1) - 4 * c * (2 * M - N + 1) - 2 * c * c;
}

/// l'(m) = 2n^3 - 18n^2 - 48m + 56n - 40.
inline BigInt l_prime_value(int n, int m) {
  const BigInt N(n);
  return 2 * N * N * N - 18 * N * N - 48 * BigInt(m) + 56 * N - 40;
}

inline BigInt h_at_n_plus_8_cubic(int n) {
  const BigInt N(n);
  return 45 * N * N * N - 657 * N * N + 288 * N - 5508;
}

inline BigInt l_at_n_plus_8_cubic(int n) {
  const BigInt N(n);
  return 14 * N * N * N - 154 * N * N + 68 * N - 1872;
}

/// l with a real argument.
template <typename T>
Interval<T> l_real(int n, const Interval<T>& m) {
  const Interval<T> N = ival<T>(n);
  const Interval<T> c = N * N + ival<T>(2) * m - ival<T>(3) * N + ival<T>(2);
  return ival<T>(2) * m * N * N * (N - ival<T>(1)) -
         ival<T>(4) * c * (ival<T>(2) * m - N + ival<T>(1)) - ival<T>(2) * c * c;
}

/// 4n^{9/2} - 2n^4 - 36n^{7/2} - 80n^3 + 112n^{5/2} - 42n^2 - 80n^{3/2} + 44n - 16.
template <typename T>
Interval<T> l_at_two_n_three_halves_expanded(int n) {
  const Interval<T> N = ival<T>(n);
  const Interval<T> r = sqrt(N);
  const Interval<T> n2 = N * N;
  const Interval<T> n3 = n2 * N;
  const Interval<T> n4 = n3 * N;
  return ival<T>(4) * n4 * r - ival<T>(2) * n4 - ival<T>(36) * n3 * r - ival<T>(80) * n3 +
         ival<T>(112) * n2 * r - ival<T>(42) * n2 - ival<T>(80) * N * r + ival<T>(44) * N -
         ival<T>(16);
}

/// floor(2 n^{3/2}) computed exactly as isqrt(4 n^3).
inline std::int64_t floor_two_n_three_halves(int n) {
  const BigInt v = boost::multiprecision::sqrt(BigInt(4) * n * n * n);
  return narrow(v);
}

inline bool two_n_three_halves_is_integer(int n) {
  const std::int64_t f = floor_two_n_three_halves(n);
  return BigInt(f) * f == BigInt(4) * n * n * n;
}

/// g(m) for n = 12: (2m/11 + 10) sqrt(2m - 11) / m.
template <typename T = double>
Interval<T> g12_value(int m) {
  if (2 * static_cast<std::int64_t>(m) - 11 <= 0) throw InputError("g12 needs 2m - 11 > 0");
  return (ival<T>(2 * static_cast<std::int64_t>(m)) / ival<T>(11) + ival<T>(10)) *
         sqrt_int<T>(2 * static_cast<std::int64_t>(m) - 11) / ival<T>(m);
}

/// Exact g12(m) when 2m - 11 is a perfect square.
inline std::optional<Rational> g12_exact(int m) {
  const std::int64_t radicand = 2 * static_cast<std::int64_t>(m) - 11;
  if (radicand <= 0) throw InputError("g12 needs 2m - 11 > 0");
  const auto root = static_cast<std::int64_t>(boost::multiprecision::sqrt(BigInt(radicand)));
  if (root * root != radicand) return std::nullopt;
  return (Rational(2 * m, 11) + 10) * root / m;
}

/// Left side of the pendant-deletion estimate: s deletions from a hub of
/// degree `hub` (= n - 1) followed by the minimum-degree-2 bound on the
/// remaining hub + 1 - s vertices.
template <typename T = double>
Interval<T> lb131_lhs(int hub, int s) {
  if (s < 0 || s >= hub - 1) throw InputError("lb131 needs 0 <= s < n - 2");
  Interval<T> sum;
  const Interval<T> one(T(1));
  for (int i = 0; i < s; ++i) sum += one / (ival<T>(2) * sqrt_int<T>(hub - i));
  const Interval<T> rest = ival<T>(hub - s);
  return sum + sqrt(ival<T>(2) * rest) + one / rest - sqrt(ival<T>(2) / rest);
}

/// sqrt(n-1) + 2(k+1) / (n sqrt(n-1)): the Randic threshold for n + k edges.
template <typename T = double>
Interval<T> randic_threshold(int n, int k) {
  const Interval<T> r = sqrt_int<T>(n - 1);
  return r + ival<T>(2 * (k + 1)) / (ival<T>(n) * r);
}

/// (2n-4)/sqrt(2n-2) + 1/(n-1).
template <typename T = double>
Interval<T> min2_lhs(int n) {
  return ival<T>(2 * n - 4) / sqrt_int<T>(2 * n - 2) + Interval<T>(T(1)) / ival<T>(n - 1);
}

/// R(S*_n) = (n-3)/sqrt(n-1) + sqrt(2/(n-1)) + 1/2.
template <typename T = double>
Interval<T> randic_star_plus_edge(int n) {
  const Interval<T> k = ival<T>(n - 1);
  return ival<T>(n - 3) / sqrt(k) + sqrt(ival<T>(2) / k) + Interval<T>(T(1)) / ival<T>(2);
}

// ---------------------------------------------------------------------------
// Certificates.

struct FRange {
  int n;
  IntRange m;
};

struct CertifyOptions {
  int hl_n_max = 40;
  int chain_n_max = 100;
  /// Lower end of the min2 grid; the lemma itself is stated for n >= 12.
  int min2_n_min = 12;
  /// Test hook: added to every f value (negative control).
  double f_perturbation = 0.0;
};

inline nlohmann::ordered_json range_json(const IntRange& r) { return {r.lo, r.hi}; }

inline LemmaCheck certify_f_grid(LemmaId id, const std::vector<FRange>& ranges, double perturbation = 0.0) {
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const auto& r : ranges) grid.push_back({{"n", r.n}, {"m", range_json(r.m)}});
  nlohmann::ordered_json g{{"ranges", grid}};
  if (perturbation != 0.0) g["f_perturbation"] = perturbation;
  CheckBuilder b(id, g);
  for (const auto& r : ranges) {
    for (int m = r.m.lo; m <= r.m.hi; ++m) {
      b.add("f>0", {{"n", r.n}, {"m", m}}, decide_real(Relation::strict, [&](auto tag) {
              using T = typename decltype(tag)::type;
              return f_value<T>(r.n, m) + Interval<T>(T(perturbation));
            }));
    }
  }
  return b.finish();
}

inline LemmaCheck certify_reduce_f(double perturbation = 0.0) {
  std::vector<FRange> ranges;
  for (int n = 15; n <= 17; ++n) ranges.push_back({n, {n + 8, n * (n - 1) / 2}});
  return certify_f_grid(LemmaId::reduce_f, ranges, perturbation);
}

inline LemmaCheck certify_lemma_1314(double perturbation = 0.0) {
  return certify_f_grid(LemmaId::lemma_1314, {{13, {24, 78}}, {14, {23, 91}}}, perturbation);
}

inline void require_hl_grid(int n_max) {
  if (n_max < 18) throw InputError("h/l grids need n_max >= 18");
}

/// h(n, n+8) and l(n, n+8) against their expanded cubics, exactly.
inline LemmaCheck certify_h_identity(int n_max = 40) {
  require_hl_grid(n_max);
  CheckBuilder b(LemmaId::h_identity, {{"n", {18, n_max}}, {"m", "n+8"}});
  for (int n = 18; n <= n_max; ++n) {
    b.add("h(n+8)=45n^3-657n^2+288n-5508", {{"n", n}},
          decide_exact(BigInt(h_value(n, n + 8) - h_at_n_plus_8_cubic(n)), Relation::equal));
  }
  return b.finish();
}

/// l(n, n+8) against its cubic, plus the derivative identities of the
/// quadratic l: 2(l(m+1) - l(m)) = l'(m) + l'(m+1) and l'' = -48.
inline LemmaCheck certify_l_identity(int n_max = 40) {
  require_hl_grid(n_max);
  CheckBuilder b(LemmaId::l_identity, {{"n", {18, n_max}}, {"m", "n+8..n+17"}});
  for (int n = 18; n <= n_max; ++n) {
    b.add("l(n+8)=14n^3-154n^2+68n-1872", {{"n", n}},
          decide_exact(BigInt(l_value(n, n + 8) - l_at_n_plus_8_cubic(n)), Relation::equal));
    for (int m = n + 8; m < n + 18; ++m) {
      b.add("2(l(m+1)-l(m))=l'(m)+l'(m+1)", {{"n", n}, {"m", m}},
            decide_exact(BigInt(2 * (l_value(n, m + 1) - l_value(n, m)) - l_prime_value(n, m) -
                                l_prime_value(n, m + 1)),
                         Relation::equal));
      b.add("l''=-48", {{"n", n}, {"m", m}},
            decide_exact(BigInt(l_value(n, m + 1) - 2 * l_value(n, m) + l_value(n, m - 1) + 48),
                         Relation::equal));
    }
  }
  return b.finish();
}

/// h(n+8) > 0, h strictly increasing on the integers of [n+8, 2n^{3/2}], the
/// factors behind A, B >= 0, and growth of the h(n+8) cubic.
inline LemmaCheck certify_h_monotone(int n_max = 40) {
  require_hl_grid(n_max);
  CheckBuilder b(LemmaId::h_monotone, {{"n", {18, n_max}}, {"m", "n+8..floor(2n^1.5)"}});
  for (int n = 18; n <= n_max; ++n) {
    const auto top = static_cast<int>(floor_two_n_three_halves(n));
    b.add("h(n+8)>0", {{"n", n}}, decide_exact(h_value(n, n + 8), Relation::strict));
    b.add("cubic(n+1)>cubic(n)", {{"n", n}},
          decide_exact(BigInt(h_at_n_plus_8_cubic(n + 1) - h_at_n_plus_8_cubic(n)), Relation::strict));
    for (int m = n + 8; m <= top; ++m) {
      const BigInt N(n);
      const BigInt M(m);
      b.add("A>0", {{"n", n}, {"m", m}}, decide_exact(BigInt(M * N * N * (N - 1)), Relation::strict));
      b.add("B>=0", {{"n", n}, {"m", m}},
            decide_exact(BigInt((2 * M + N * N - 3 * N + 2) * (2 * M - (N - 1))), Relation::non_strict));
      if (m < top) {
        b.add("h(m+1)>h(m)", {{"n", n}, {"m", m}},
              decide_exact(BigInt(h_value(n, m + 1) - h_value(n, m)), Relation::strict));
      }
    }
  }
  return b.finish();
}

/// l > 0 at n+8, at floor/ceil of 2n^{3/2}, at every integer in between, and
/// at the real endpoint 2n^{3/2}, where it is cross-checked against the
/// expanded half-integer-power polynomial.
inline LemmaCheck certify_l_concave_endpoints(int n_max = 40) {
  require_hl_grid(n_max);
  CheckBuilder b(LemmaId::l_concave_endpoints, {{"n", {18, n_max}}, {"m", "n+8..ceil(2n^1.5)"}});
  for (int n = 18; n <= n_max; ++n) {
    const auto lo = static_cast<int>(floor_two_n_three_halves(n));
    const int hi = two_n_three_halves_is_integer(n) ? lo : lo + 1;
    b.add("l(n+8)>0", {{"n", n}}, decide_exact(l_value(n, n + 8), Relation::strict));
    b.add("l(floor(2n^1.5))>0", {{"n", n}, {"m", lo}}, decide_exact(l_value(n, lo), Relation::strict));
    b.add("l(ceil(2n^1.5))>0", {{"n", n}, {"m", hi}}, decide_exact(l_value(n, hi), Relation::strict));
    for (int m = n + 9; m < lo; ++m) {
      b.add("l(m)>0", {{"n", n}, {"m", m}}, decide_exact(l_value(n, m), Relation::strict));
    }
    b.add("l(2n^1.5)>0", {{"n", n}}, decide_real(Relation::strict, [&](auto tag) {
            using T = typename decltype(tag)::type;
            return l_real<T>(n, ival<T>(2) * ival<T>(n) * sqrt_int<T>(n));
          }));
    // The direct and expanded forms of l(2n^{3/2}) must have overlapping enclosures.
    {
      const Interval<double> direct = l_real<double>(n, ival<double>(2) * ival<double>(n) * sqrt_int<double>(n));
      const Interval<double> expanded = l_at_two_n_three_halves_expanded<double>(n);
      b.require("expansion_matches", {{"n", n}},
                direct.lo() <= expanded.hi() && expanded.lo() <= direct.hi());
    }
    b.add("expanded(n+1)>expanded(n)", {{"n", n}}, decide_real(Relation::strict, [&](auto tag) {
            using T = typename decltype(tag)::type;
            return l_at_two_n_three_halves_expanded<T>(n + 1) - l_at_two_n_three_halves_expanded<T>(n);
          }));
  }
  return b.finish();
}

inline std::vector<LemmaCheck> certify_h_l_claims(int n_max = 40) {
  return {certify_h_monotone(n_max), certify_l_concave_endpoints(n_max)};
}

/// n = 12 closing step: g(m) < 11/3 for 21 <= m <= 65, g(66) = 11/3 exactly,
/// and 12/sqrt(11) < 11/3.
inline LemmaCheck certify_g12() {
  CheckBuilder b(LemmaId::g12_final, {{"m", {21, 66}}, {"n", 12}});
  for (int m = 21; m <= 65; ++m) {
    b.add("g(m)<11/3", {{"m", m}}, decide_real(Relation::strict, [&](auto tag) {
            using T = typename decltype(tag)::type;
            return ival<T>(11) / ival<T>(3) - g12_value<T>(m);
          }));
  }
  const auto exact = g12_exact(66);
  b.add("g(66)=11/3", {{"m", 66}},
        exact ? decide_exact(*exact - Rational(11, 3), Relation::equal)
              : PointOutcome{CheckStatus::failed, Interval<double>(-1.0)});
  b.add("12/sqrt(11)<11/3", {}, decide_real(Relation::strict, [&](auto tag) {
          using T = typename decltype(tag)::type;
          return ival<T>(11) / ival<T>(3) - ival<T>(12) / sqrt_int<T>(11);
        }));
  return b.finish();
}

struct KSCap {
  int k;
  int s_max;
};

/// The (k, s_max) table for a hub of degree n - 1 and n + k edges.
inline std::vector<KSCap> lb131_table(int n) {
  std::vector<KSCap> out;
  const int k_lo = n == 13 ? 2 : 1;
  const int k_hi = n == 13 ? 10 : 8;
  for (int k = k_lo; k <= k_hi; ++k) out.push_back({k, max_pendant_neighbors(n, n + k, n - 1)});
  return out;
}

inline LemmaCheck certify_lb131(int n, const std::vector<KSCap>& table) {
  if (n != 12 && n != 13) throw InputError("lb131 is stated for n = 12 and n = 13");
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const auto& row : table) {
    if (row.s_max >= n - 2) throw InputError("s must stay below n - 2");
    grid.push_back({{"k", row.k}, {"s", {1, row.s_max}}});
  }
  CheckBuilder b(n == 13 ? LemmaId::lb131_n13 : LemmaId::lb131_n12, {{"n", n}, {"table", grid}});
  for (const auto& row : table) {
    for (int s = 1; s <= row.s_max; ++s) {
      b.add("lhs>threshold", {{"k", row.k}, {"s", s}}, decide_real(Relation::strict, [&](auto tag) {
              using T = typename decltype(tag)::type;
              return lb131_lhs<T>(n - 1, s) - randic_threshold<T>(n, row.k);
            }));
    }
  }
  return b.finish();
}

inline LemmaCheck certify_lb131(int n) { return certify_lb131(n, lb131_table(n)); }

/// The two k = 1 configurations on 13 vertices: hub of degree 12 whose
/// neighbourhood spans a P3, or two disjoint edges.
inline Graph base13_k1_graph(bool path_configuration) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= 12; ++v) e.emplace_back(0, v);
  if (path_configuration) {
    e.emplace_back(1, 2);
    e.emplace_back(2, 3);
  } else {
    e.emplace_back(1, 2);
    e.emplace_back(3, 4);
  }
  return Graph::from_edges(13, e);
}

template <typename T = double>
Interval<T> base13_k1_formula(bool path_configuration) {
  const Interval<T> one(T(1));
  if (path_configuration) {
    return ival<T>(9) / sqrt_int<T>(12) + ival<T>(2) / sqrt_int<T>(24) + one / sqrt_int<T>(36) +
           ival<T>(2) / sqrt_int<T>(6);
  }
  return ival<T>(8) / sqrt_int<T>(12) + ival<T>(4) / sqrt_int<T>(24) + ival<T>(2) / sqrt_int<T>(4);
}

inline LemmaCheck certify_base13_k1(int n = 13) {
  if (n != 13) throw InputError("base13 k=1 check is stated for n = 13");
  CheckBuilder b(LemmaId::base13_k1_randic, {{"n", 13}, {"k", 1}, {"configurations", {"p3", "two_edges"}}});
  for (bool path : {true, false}) {
    const std::string tag_name = path ? "p3" : "two_edges";
    b.add(tag_name + ":R>threshold", {{"config", path ? 0 : 1}}, decide_real(Relation::strict, [&](auto tag) {
            using T = typename decltype(tag)::type;
            return base13_k1_formula<T>(path) - randic_threshold<T>(13, 1);
          }));
    const Graph g = base13_k1_graph(path);
    const Interval<double> from_graph = randic_index(g);
    const Interval<double> from_formula = base13_k1_formula<double>(path);
    b.require(tag_name + ":graph_matches_formula", {{"config", path ? 0 : 1}},
              std::max(std::abs(from_graph.hi() - from_formula.lo()), std::abs(from_formula.hi() - from_graph.lo())) <=
                  1e-12);
  }
  return b.finish();
}

inline LemmaCheck certify_min2(IntRange n_range, IntRange k_range) {
  if (n_range.lo < 9 || n_range.lo > n_range.hi) throw InputError("min2 grid needs 9 <= n_lo <= n_hi");
  if (k_range.lo < 1 || k_range.hi > 10 || k_range.lo > k_range.hi) {
    throw InputError("min2 grid needs 1 <= k <= 10");
  }
  CheckBuilder b(LemmaId::min2, {{"n", range_json(n_range)}, {"k", range_json(k_range)}});
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int k = k_range.lo; k <= k_range.hi; ++k) {
      b.add("dfr>threshold", {{"n", n}, {"k", k}}, decide_real(Relation::strict, [&](auto tag) {
              using T = typename decltype(tag)::type;
              return min2_lhs<T>(n) - randic_threshold<T>(n, k);
            }));
    }
  }
  return b.finish();
}

/// The t(v) = d(v) + m(v) <= n chains behind the large-degree case, over
/// n in `n_range` (n >= 13), together with the n = 12 analogue.
inline LemmaCheck certify_largedegree(IntRange n_range) {
  if (n_range.lo < 13 || n_range.lo > n_range.hi) throw InputError("largedegree grid needs 13 <= n_lo <= n_hi");
  CheckBuilder b(LemmaId::largedegree_t, {{"n", range_json(n_range)}, {"n12_analogue", true}});
  auto exact = [&](const char* claim, Params p, const Rational& margin, Relation rel) {
    b.add(claim, std::move(p), decide_exact(margin, rel));
  };
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    // n/2 > sqrt(n + 21), i.e. n^2 > 4(n + 21).
    exact("n/2>sqrt(n+21)", {{"n", n}}, Rational(n * n - 4 * (n + 21)), Relation::strict);
    for (int k = 1; k <= 10; ++k) {
      exact("4+(n+2k+1)/4<=n", {{"n", n}, {"k", k}}, Rational(n - 4) - Rational(n + 2 * k + 1, 4),
            Relation::non_strict);
    }
    exact("case1:(n-4)+(n+21)/(n-4)<n", {{"n", n}}, Rational(4) - Rational(n + 21, n - 4), Relation::strict);
    exact("case2:(n-3)+(n+15)/(n-3)<n", {{"n", n}}, Rational(3) - Rational(n + 15, n - 3), Relation::strict);
    exact("case3:(n-2)+(n+9)/(n-2)<=n", {{"n", n}}, Rational(2) - Rational(n + 9, n - 2), Relation::non_strict);
    exact("d3:3+(n+9)/3<=n", {{"n", n}}, Rational(n - 3) - Rational(n + 9, 3), Relation::non_strict);
  }
  // n = 12: cases 6 <= Δ <= 8 (k <= 8), Δ = 9 (k <= 6), Δ = 10 (k <= 3).
  const int n = 12;
  struct Case {
    int delta;
    int k_max;
    Relation rel;
  };
  for (const Case c : {Case{6, 8, Relation::strict}, Case{7, 8, Relation::strict}, Case{8, 8, Relation::strict},
                       Case{9, 6, Relation::strict}, Case{10, 3, Relation::non_strict}}) {
    for (int k = 1; k <= c.k_max; ++k) {
      exact("n12:Delta+(n+2k+1)/Delta", {{"delta", c.delta}, {"k", k}},
            Rational(n - c.delta) - Rational(n + 2 * k + 1, c.delta), c.rel);
      exact("n12:Delta^2>=n+2k+1", {{"delta", c.delta}, {"k", k}}, Rational(c.delta * c.delta - (n + 2 * k + 1)),
            Relation::non_strict);
    }
  }
  for (int k = 1; k <= 8; ++k) {
    exact("n12:4+(n+2k+1)/4<=n", {{"k", k}}, Rational(n - 4) - Rational(n + 2 * k + 1, 4), Relation::non_strict);
  }
  for (int k = 1; k <= 3; ++k) {
    exact("n12:d3:3+(n+2k+1)/3<=n", {{"k", k}}, Rational(n - 3) - Rational(n + 2 * k + 1, 3), Relation::non_strict);
  }
  exact("n12:d2:2+Delta<=n", {{"delta", 10}}, Rational(n - 2 - 10), Relation::non_strict);
  return b.finish();
}

/// (n-1)^2 / n^{3/2} < n / sqrt(n-1).
inline LemmaCheck certify_dense(IntRange n_range) {
  CheckBuilder b(LemmaId::dense, {{"n", range_json(n_range)}});
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    b.add("(n-1)^2/n^1.5<n/sqrt(n-1)", {{"n", n}}, decide_real(Relation::strict, [&](auto tag) {
            using T = typename decltype(tag)::type;
            const Interval<T> N = ival<T>(n);
            return N / sqrt_int<T>(n - 1) - square(ival<T>(n - 1)) / (N * sqrt(N));
          }));
  }
  return b.finish();
}

/// 2Δ < n for every integer Δ < n/2.
inline LemmaCheck certify_small(IntRange n_range) {
  CheckBuilder b(LemmaId::small, {{"n", range_json(n_range)}, {"delta", "1..ceil(n/2)-1"}});
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int delta = 1; 2 * delta < n; ++delta) {
      b.add("2Delta<n", {{"n", n}, {"delta", delta}}, decide_exact(Rational(n - 2 * delta), Relation::strict));
    }
  }
  return b.finish();
}

/// R(S*_n) > sqrt(n-1) + 2/(n sqrt(n-1)) (unicyclic case, k = 0).
inline LemmaCheck certify_unicyclic_star(IntRange n_range) {
  CheckBuilder b(LemmaId::unicyclic_star, {{"n", range_json(n_range)}});
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    b.add("R(S*_n)>threshold(k=0)", {{"n", n}}, decide_real(Relation::strict, [&](auto tag) {
            using T = typename decltype(tag)::type;
            return randic_star_plus_edge<T>(n) - randic_threshold<T>(n, 0);
          }));
  }
  return b.finish();
}

inline LemmaCheck certify_one(LemmaId id, const CertifyOptions& opt = {}) {
  switch (id) {
    case LemmaId::reduce_f: return certify_reduce_f(opt.f_perturbation);
    case LemmaId::lemma_1314: return certify_lemma_1314(opt.f_perturbation);
    case LemmaId::dense: return certify_dense({13, opt.chain_n_max});
    case LemmaId::small: return certify_small({13, opt.chain_n_max});
    case LemmaId::largedegree_t: return certify_largedegree({13, opt.chain_n_max});
    case LemmaId::lb131_n13: return certify_lb131(13);
    case LemmaId::lb131_n12: return certify_lb131(12);
    case LemmaId::base13_k1_randic: return certify_base13_k1(13);
    case LemmaId::min2: return certify_min2({opt.min2_n_min, opt.chain_n_max}, {1, 10});
    case LemmaId::h_identity: return certify_h_identity(opt.hl_n_max);
    case LemmaId::l_identity: return certify_l_identity(opt.hl_n_max);
    case LemmaId::h_monotone: return certify_h_monotone(opt.hl_n_max);
    case LemmaId::l_concave_endpoints: return certify_l_concave_endpoints(opt.hl_n_max);
    case LemmaId::g12_final: return certify_g12();
    case LemmaId::unicyclic_star: return certify_unicyclic_star({12, opt.chain_n_max});
  }
  throw InputError("unknown lemma id");
}

/// Every certificate in a fixed order.
inline std::vector<LemmaCheck> certify_all(const CertifyOptions& opt = {}) {
  std::vector<LemmaCheck> out;
  for (LemmaId id : kAllLemmas) out.push_back(certify_one(id, opt));
  return out;
}

inline nlohmann::ordered_json params_json(const Witness& w) {
  nlohmann::ordered_json j{{"claim", w.claim}};
  for (const auto& [k, v] : w.params) j[k] = v;
  return j;
}

inline nlohmann::ordered_json to_json(const LemmaCheck& c, int schema_version = 1) {
  nlohmann::ordered_json j{{"schema_version", schema_version},
                           {"lemma_id", std::string(to_string(c.lemma_id))},
                           {"grid", c.grid},
                           {"status", std::string(to_string(c.status))},
                           {"worst_margin", {{"lo", c.worst_margin.lo()}, {"hi", c.worst_margin.hi()}}},
                           {"witness", params_json(c.witness)},
                           {"evaluated_points", c.evaluated_points},
                           {"wall_time_ms", c.wall_time_ms}};
  if (c.first_failure) j["first_failure"] = params_json(*c.first_failure);
  return j;
}

}  // namespace rqv
