#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "rqv/error.hpp"
#include "rqv/graph.hpp"
#include "rqv/interval.hpp"

namespace rqv {

inline constexpr double kDefaultSpectralTolerance = 1e-10;
/// Power-step polishing of the Perron vector: rounds of steps, at most.
inline constexpr int kPowerRounds = 40;
inline constexpr int kPowerStepsPerRound = 10;

/// Dense symmetric matrix; `set` writes both triangles so the storage is
/// symmetric by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order) : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {
    if (order < 1 || order > kMaxVertices) throw InputError("matrix order outside [1, 64]");
  }

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }

  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  bool all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
  }

  bool nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return v >= 0.0; });
  }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InputError("matrix index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<double> a_;
};

inline SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix m(g.order());
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

/// Q = D + A.
inline SymmetricMatrix signless_laplacian(const Graph& g) {
  SymmetricMatrix m = adjacency_matrix(g);
  for (int v = 0; v < g.order(); ++v) m.set(v, v, static_cast<double>(g.degree(v)));
  return m;
}

struct Eigensystem {
  std::vector<double> values;
  /// Column k (entries vectors[i * n + k]) belongs to values[k].
  std::vector<double> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal mass underflows.
inline Eigensystem jacobi_eigensystem(const SymmetricMatrix& m, int max_sweeps = 100) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (int i = 0; i < n; ++i) {
      diag += at(i, i) * at(i, i);
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off == 0.0 || off <= 1e-36 * diag) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // After a few sweeps, drop entries too small to change either diagonal.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(at(p, p)) + g == std::abs(at(p, p)) &&
            std::abs(at(q, q)) + g == std::abs(at(q, q))) {
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          continue;
        }
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = vrp - s * (vrq + tau * vrp);
          v[r * n + q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  Eigensystem es;
  es.values.resize(n);
  for (int i = 0; i < n; ++i) es.values[i] = at(i, i);
  es.vectors = std::move(v);
  es.sweeps = sweep;
  return es;
}

/// Largest eigenvalue with a certified bracket [lower, upper].
struct SpectralResult {
  double lambda_max = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  /// max_i |(Mx)_i - rho x_i| for the returned unit eigenvector.
  double residual = 0.0;
  int iterations = 0;

  Interval<double> bracket() const { return Interval<double>(lower, upper); }
};

namespace detail {

inline std::vector<Interval<double>> interval_product(const SymmetricMatrix& m,
                                                      const std::vector<double>& x) {
  const int n = m.order();
  std::vector<Interval<double>> y(n);
  for (int i = 0; i < n; ++i) {
    Interval<double> acc;
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != 0.0) acc += Interval<double>(m(i, j)) * Interval<double>(x[j]);
    }
    y[i] = acc;
  }
  return y;
}

inline Interval<double> rayleigh(const std::vector<double>& x, const std::vector<Interval<double>>& mx) {
  Interval<double> num;
  Interval<double> den;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += Interval<double>(x[i]) * mx[i];
    den += Interval<double>(x[i]) * Interval<double>(x[i]);
  }
  return num / den;
}

}  // namespace detail

/// Largest eigenvalue of a symmetric matrix.
///
/// The lower end of the bracket is a Rayleigh quotient, which never exceeds
/// the largest eigenvalue. For a nonnegative matrix with a strictly positive
/// top eigenvector the upper end is the Collatz-Wielandt bound
/// max_i (Mx)_i / x_i. Otherwise it is the largest rho_j + ||r_j||_2 over the
/// computed eigenpairs (each such interval holds an eigenvalue). All of these
/// quantities are evaluated in interval arithmetic.
inline SpectralResult largest_eigenvalue(const SymmetricMatrix& m,
                                         double tol = kDefaultSpectralTolerance) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (!m.all_finite()) throw InputError("matrix has non-finite entries");
  const int n = m.order();
  const Eigensystem es = jacobi_eigensystem(m);
  const int top = static_cast<int>(std::max_element(es.values.begin(), es.values.end()) - es.values.begin());

  auto column = [&](int k) {
    std::vector<double> x(n);
    double norm = 0.0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = es.vectors[i * n + k];
      norm += x[i] * x[i];
      sum += x[i];
    }
    const double scale = (sum < 0 ? -1.0 : 1.0) / std::sqrt(norm);
    for (double& xi : x) xi *= scale;
    return x;
  };
  auto residual_norm2 = [&](const std::vector<double>& x, const std::vector<Interval<double>>& mx,
                            const Interval<double>& rho) {
    Interval<double> acc;
    for (int i = 0; i < n; ++i) acc += square(mx[i] - rho * Interval<double>(x[i]));
    Interval<double> xx;
    for (int i = 0; i < n; ++i) xx += Interval<double>(x[i]) * Interval<double>(x[i]);
    return sqrt(acc / xx);
  };

  const std::vector<double> x = column(top);
  const auto mx = detail::interval_product(m, x);
  const Interval<double> rho = detail::rayleigh(x, mx);

  SpectralResult res;
  res.iterations = es.sweeps;
  for (int i = 0; i < n; ++i) {
    res.residual = std::max(res.residual, std::abs(mx[i].mid() - rho.mid() * x[i]));
  }

  // Collatz-Wielandt: for a nonnegative M and any positive x,
  // min (Mx)_i/x_i <= rho(M) <= max (Mx)_i/x_i. Tiny Perron entries carry
  // large relative error from the eigensolver, so the vector is polished
  // with shifted power steps (M + sI keeps the top eigenvalue dominant).
  std::vector<double> px(x.size());
  std::transform(x.begin(), x.end(), px.begin(), [](double v) { return std::abs(v); });
  bool have_cw = false;
  if (m.nonnegative()) {
    const double shift = std::max(0.0, rho.mid()) / 2;
    for (int round = 0; round <= kPowerRounds; ++round) {
      if (round > 0) {
        for (int step = 0; step < kPowerStepsPerRound; ++step) {
          std::vector<double> y(n, 0.0);
          double norm = 0.0;
          for (int i = 0; i < n; ++i) {
            double acc = shift * px[i];
            for (int j = 0; j < n; ++j) acc += m(i, j) * px[j];
            y[i] = acc;
            norm = std::max(norm, acc);
          }
          for (int i = 0; i < n; ++i) px[i] = y[i] / norm;
        }
      }
      if (std::any_of(px.begin(), px.end(), [](double v) { return !(v > 0.0); })) continue;
      const auto mpx = detail::interval_product(m, px);
      double cw_hi = -std::numeric_limits<double>::infinity();
      double cw_lo = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        const Interval<double> ratio = mpx[i] / Interval<double>(px[i]);
        cw_hi = std::max(cw_hi, ratio.hi());
        cw_lo = std::min(cw_lo, ratio.lo());
      }
      res.lower = std::max(rho.lo(), cw_lo);
      res.upper = cw_hi;
      res.iterations = es.sweeps + round * kPowerStepsPerRound;
      have_cw = true;
      if (res.upper - res.lower <= tol) break;
    }
  }
  if (!have_cw) {
    res.lower = rho.lo();
    res.upper = (rho + residual_norm2(x, mx, rho)).hi();
    for (int k = 0; k < n; ++k) {
      if (k == top) continue;
      const std::vector<double> xk = column(k);
      const auto mxk = detail::interval_product(m, xk);
      const Interval<double> rk = detail::rayleigh(xk, mxk);
      res.upper = std::max(res.upper, (rk + residual_norm2(xk, mxk, rk)).hi());
    }
  }
  res.lambda_max = std::clamp(rho.mid(), res.lower, res.upper);
  if (res.upper - res.lower > tol) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "eigenvalue bracket width %.3e exceeds tolerance %.3e", res.upper - res.lower, tol);
    throw NumericalError(buf);
  }
  return res;
}

namespace detail {

template <typename MatrixOf>
SpectralResult per_component(const Graph& g, double tol, MatrixOf matrix_of) {
  SpectralResult best;
  bool first = true;
  int sweeps = 0;
  for (VertexSet comp : g.components()) {
    const SpectralResult r = largest_eigenvalue(matrix_of(g.induced(comp)), tol);
    sweeps += r.iterations;
    if (first) {
      best = r;
      first = false;
      continue;
    }
    if (r.lambda_max > best.lambda_max) {
      const double lo = std::max(best.lower, r.lower);
      const double hi = std::max(best.upper, r.upper);
      best = r;
      best.lower = lo;
      best.upper = hi;
    } else {
      best.lower = std::max(best.lower, r.lower);
      best.upper = std::max(best.upper, r.upper);
    }
  }
  best.iterations = sweeps;
  return best;
}

}  // namespace detail

/// Signless-Laplacian spectral radius q(G). Components are solved separately
/// so the Perron vector of each block is strictly positive.
inline SpectralResult q_radius(const Graph& g, double tol = kDefaultSpectralTolerance) {
  return detail::per_component(g, tol, [](const Graph& h) { return signless_laplacian(h); });
}

/// Adjacency spectral radius λ1(G).
inline SpectralResult lambda1(const Graph& g, double tol = kDefaultSpectralTolerance) {
  return detail::per_component(g, tol, [](const Graph& h) { return adjacency_matrix(h); });
}

}  // namespace rqv
