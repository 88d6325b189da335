// Test-only reference oracles: brute-force or closed-form routes that stay
// independent of the library implementation they check.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "uckit/common.hpp"
#include "uckit/geometry.hpp"
#include "uckit/random.hpp"

namespace oracle {

using uckit::Vector;

/// Exact modulus of convexity of the unit lp ball, p >= 2 (attained in a
/// two-dimensional coordinate section).
inline double lp_delta(double p, double eps) {
  return 1.0 - std::pow(1.0 - std::pow(eps / 2.0, p), 1.0 / p);
}

/// Exact modulus of smoothness of the Euclidean unit ball.
inline double l2_rho(double tau) { return std::sqrt(1.0 + tau * tau) - 1.0; }

/// Exact modulus of convexity of the Euclidean unit ball.
inline double l2_delta(double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); }

/// Brute-force maximum of <d, x> over a dense angular grid of the boundary
/// of a 2-d body.
inline double support_by_grid(const uckit::ConvexBody& body, const Vector& d, int samples) {
  double best = -1e300;
  for (int i = 0; i < samples; ++i) {
    const double th = 2.0 * M_PI * i / samples;
    Vector x(2);
    x << std::cos(th), std::sin(th);
    x /= uckit::gauge(body, x);
    best = std::max(best, d.dot(x));
  }
  return best;
}

/// Brute-force argmax of <d, x> over a dense angular grid of a 2-d boundary.
inline Vector lmo_by_grid(const uckit::ConvexBody& body, const Vector& d, int samples) {
  double best = -1e300;
  Vector arg(2);
  for (int i = 0; i < samples; ++i) {
    const double th = 2.0 * M_PI * i / samples;
    Vector x(2);
    x << std::cos(th), std::sin(th);
    x /= uckit::gauge(body, x);
    if (d.dot(x) > best) {
      best = d.dot(x);
      arg = x;
    }
  }
  return arg;
}

/// Brute-force local rotundity of a 2-d body: min of <d, x* - x> over the
/// boundary arc and the exact-distance ring, both intersected with the
/// feasibility constraints.
inline double nu_by_grid(const uckit::ConvexBody& body, double eps, const Vector& xstar,
                         const Vector& d, int samples) {
  double best = 1e300;
  for (int i = 0; i < samples; ++i) {
    const double th = 2.0 * M_PI * i / samples;
    Vector u(2);
    u << std::cos(th), std::sin(th);
    Vector xb = u / uckit::gauge(body, u);
    if (uckit::gauge(body, xstar - xb) >= eps) best = std::min(best, d.dot(xstar - xb));
    Vector xr = xstar - eps * (u / uckit::gauge(body, u));
    if (uckit::gauge(body, xr) <= 1.0) best = std::min(best, d.dot(xstar - xr));
  }
  return best;
}

/// Brute-force local smoothness modulus of a 2-d body over a polar grid of
/// the unit ball.
inline double local_rho_by_grid(const uckit::ConvexBody& body, double t, const Vector& xstar,
                                const Vector& d, int angular, int radial) {
  double best = 0.0;
  for (int i = 0; i < angular; ++i) {
    const double th = 2.0 * M_PI * i / angular;
    Vector u(2);
    u << std::cos(th), std::sin(th);
    u /= uckit::gauge(body, u);
    for (int r = 1; r <= radial; ++r) {
      const Vector x = (static_cast<double>(r) / radial) * u;
      best = std::max(best, uckit::gauge(body, xstar + t * x) - 1.0 - t * d.dot(x));
    }
  }
  return best;
}

/// Brute-force modulus of smoothness of a 2-d body over boundary pairs.
inline double rho_by_grid(const uckit::ConvexBody& body, double tau, int samples) {
  std::vector<Vector> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double th = 2.0 * M_PI * i / samples;
    Vector u(2);
    u << std::cos(th), std::sin(th);
    pts.push_back(u / uckit::gauge(body, u));
  }
  double best = 0.0;
  for (const auto& x : pts)
    for (const auto& y : pts)
      best = std::max(best,
                      0.5 * (uckit::gauge(body, x + tau * y) + uckit::gauge(body, x - tau * y)) - 1.0);
  return best;
}

/// Central finite-difference gradient, step h.
inline Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& x,
                          double h) {
  Vector g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Vector hi = x, lo = x;
    hi[i] += h;
    lo[i] -= h;
    g[i] = (f(hi) - f(lo)) / (2.0 * h);
  }
  return g;
}

/// Central finite-difference Hessian, step h, symmetrized.
inline uckit::Matrix fd_hessian(const std::function<double(const Vector&)>& f, const Vector& x,
                                double h) {
  const int m = static_cast<int>(x.size());
  uckit::Matrix H(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Vector pp = x, pm = x, mp = x, mm = x;
      pp[i] += h;
      pp[j] += h;
      pm[i] += h;
      pm[j] -= h;
      mp[i] -= h;
      mp[j] += h;
      mm[i] -= h;
      mm[j] -= h;
      H(i, j) = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
    }
  }
  return 0.5 * (H + H.transpose());
}

/// Grid Legendre transform on [-R, R]: sup_x x*y - f(x).
inline double conjugate_on_grid(const std::function<double(double)>& f, double R, int n,
                                double y) {
  double best = -1e300;
  for (int i = 0; i < n; ++i) {
    const double x = -R + 2.0 * R * i / (n - 1);
    best = std::max(best, x * y - f(x));
  }
  return best;
}

}  // namespace oracle
