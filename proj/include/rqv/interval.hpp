#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include <boost/math/special_functions/next.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "rqv/error.hpp"

namespace rqv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

/// 50 decimal digits; the fallback precision for undecidable comparisons.
using ExtendedFloat = boost::multiprecision::cpp_bin_float_50;

namespace detail {

// Multiprecision results are widened by two ulps; their rounding guarantee
// is documented less tightly than IEEE-754's.
template <typename T>
T next_up(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
  } else {
    return boost::math::float_next(boost::math::float_next(x));
  }
}

template <typename T>
T next_down(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
  } else {
    return boost::math::float_prior(boost::math::float_prior(x));
  }
}

template <typename T>
T to_real(std::int64_t v) {
  return T(v);
}

}  // namespace detail

/// Closed interval [lo, hi] whose endpoints are widened outward by one ulp
/// (two for multiprecision) after every arithmetic primitive. The primitives
/// are correctly rounded, so the widened result contains the exact value.
template <typename T = double>
class Interval {
 public:
  Interval() = default;

  /// Degenerate interval; `v` must be exactly representable.
  Interval(const T& v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)

  Interval(const T& lo, const T& hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw InputError("interval with lo > hi");
  }

  /// Integer enclosure; exact unless |v| exceeds the mantissa.
  static Interval from_int(std::int64_t v) {
    const T t = detail::to_real<T>(v);
    if constexpr (std::is_same_v<T, double>) {
      if (std::abs(v) > (std::int64_t{1} << 53)) return widen(t, t);
    }
    return Interval(t);
  }

  static Interval from_rational(const Rational& r) {
    return from_int(r.numerator()) / from_int(r.denominator());
  }

  static Interval from_bigint(const BigInt& v) {
    const T t = static_cast<T>(v);
    // Conversion rounds to nearest, so one ulp either way contains v.
    return widen(t, t);
  }

  const T& lo() const noexcept { return lo_; }
  const T& hi() const noexcept { return hi_; }
  T width() const { return hi_ - lo_; }
  T mid() const { return (lo_ + hi_) / 2; }

  bool contains(const T& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return widen(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    return widen(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }

  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

  friend Interval operator*(const Interval& a, const Interval& b) {
    const T p1 = a.lo_ * b.lo_;
    const T p2 = a.lo_ * b.hi_;
    const T p3 = a.hi_ * b.lo_;
    const T p4 = a.hi_ * b.hi_;
    using std::max;
    using std::min;
    return widen(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw InputError("interval division by an interval containing 0");
    const T q1 = a.lo_ / b.lo_;
    const T q2 = a.lo_ / b.hi_;
    const T q3 = a.hi_ / b.lo_;
    const T q4 = a.hi_ / b.hi_;
    using std::max;
    using std::min;
    return widen(min(min(q1, q2), min(q3, q4)), max(max(q1, q2), max(q3, q4)));
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  /// Interval hull.
  friend Interval hull(const Interval& a, const Interval& b) {
    using std::max;
    using std::min;
    return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
  }

  friend Interval max(const Interval& a, const Interval& b) {
    using std::max;
    return Interval(max(a.lo_, b.lo_), max(a.hi_, b.hi_));
  }

  friend Interval min(const Interval& a, const Interval& b) {
    using std::min;
    return Interval(min(a.lo_, b.lo_), min(a.hi_, b.hi_));
  }

  /// Certain comparisons: true only when every point of `a` relates to
  /// every point of `b`.
  friend bool certainly_less(const Interval& a, const Interval& b) { return a.hi_ < b.lo_; }
  friend bool certainly_less_equal(const Interval& a, const Interval& b) { return a.hi_ <= b.lo_; }

  template <typename U>
  Interval<U> convert() const {
    if constexpr (std::is_same_v<U, T>) {
      return *this;
    } else if constexpr (std::is_same_v<U, double>) {
      const double l = static_cast<double>(lo_);
      const double h = static_cast<double>(hi_);
      return Interval<U>(detail::next_down(l), detail::next_up(h));
    } else {
      return Interval<U>(U(lo_), U(hi_));
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lo_ << ", " << x.hi_ << ']';
  }

 private:
  static Interval widen(const T& lo, const T& hi) {
    using std::isnan;
    if (isnan(lo) || isnan(hi)) throw InputError("NaN in interval arithmetic");
    Interval r;
    r.lo_ = detail::next_down(lo);
    r.hi_ = detail::next_up(hi);
    return r;
  }

  T lo_ = 0;
  T hi_ = 0;
};

template <typename T>
Interval<T> sqrt(const Interval<T>& x) {
  if (x.hi() < 0) throw InputError("square root of a negative interval");
  using std::sqrt;
  const T lo = x.lo() <= 0 ? T(0) : detail::next_down(T(sqrt(x.lo())));
  const T hi = detail::next_up(T(sqrt(x.hi())));
  using std::max;
  return Interval<T>(max(lo, T(0)), hi);
}

template <typename T>
Interval<T> square(const Interval<T>& x) {
  if (x.lo() >= 0) return x * x;
  if (x.hi() <= 0) return (-x) * (-x);
  using std::max;
  const Interval<T> a = Interval<T>(x.lo()) * Interval<T>(x.lo());
  const Interval<T> b = Interval<T>(x.hi()) * Interval<T>(x.hi());
  return Interval<T>(T(0), max(a.hi(), b.hi()));
}

template <typename T>
Interval<T> ival(std::int64_t v) {
  return Interval<T>::from_int(v);
}

template <typename T>
Interval<T> sqrt_int(std::int64_t v) {
  return sqrt(ival<T>(v));
}

inline Interval<double> to_double(const Interval<ExtendedFloat>& x) {
  return x.template convert<double>();
}

/// BigInt to int64, throwing when the value does not fit.
inline std::int64_t narrow(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      v < BigInt(std::numeric_limits<std::int64_t>::min())) {
    throw InputError("integer does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace rqv
