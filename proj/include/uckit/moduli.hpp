#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "uckit/characterizations.hpp"
#include "uckit/common.hpp"
#include "uckit/fitting.hpp"
#include "uckit/geometry.hpp"
#include "uckit/random.hpp"

namespace uckit {

enum class ModulusKind { Delta, Rho, RhoLocal, NuLocal };

/// Which side of the true value an estimate sits on: infima are estimated
/// from above, suprema from below.
enum class BiasDirection { FromAbove, FromBelow };

inline const char* modulus_kind_name(ModulusKind k) {
  switch (k) {
    case ModulusKind::Delta: return "delta";
    case ModulusKind::Rho: return "rho";
    case ModulusKind::RhoLocal: return "rho_local";
    case ModulusKind::NuLocal: return "nu_local";
  }
  return "?";
}

inline const char* bias_name(BiasDirection b) {
  return b == BiasDirection::FromAbove ? "from_above" : "from_below";
}

struct Anchor {
  Vector xstar;
  Vector direction;
};

struct ModulusCurve {
  ModulusKind kind = ModulusKind::Delta;
  std::vector<double> grid;
  std::vector<double> values;
  Budget budget;
  std::uint64_t seed = 0;
  BiasDirection bias = BiasDirection::FromAbove;
  std::optional<Anchor> anchor;
  /// Raw estimates that broke monotonicity before the cumulative-max pass
  /// (delta/nu kinds only).
  int raw_monotonicity_violations = 0;
};

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Coordinate-wise golden-section descent with geometrically shrinking
/// search windows. Tracks the best point ever evaluated, so objectives with
/// infeasible (+inf) regions are handled.
template <class F>
std::pair<Vector, double> coordinate_refine(const F& objective, Vector theta, double init_value,
                                            int rounds, double w_start = 0.5, double w_end = 1e-4) {
  constexpr double kGolden = 0.6180339887498949;
  double best = init_value;
  if (rounds <= 0) return {theta, best};
  for (int r = 0; r < rounds; ++r) {
    const double frac = rounds > 1 ? static_cast<double>(r) / (rounds - 1) : 1.0;
    const double w = w_start * std::pow(w_end / w_start, frac);
    for (int j = 0; j < theta.size(); ++j) {
      double lo = theta[j] - w, hi = theta[j] + w;
      double x1 = hi - kGolden * (hi - lo);
      double x2 = lo + kGolden * (hi - lo);
      const auto eval = [&](double t) {
        Vector probe = theta;
        probe[j] = t;
        return objective(probe);
      };
      double f1 = eval(x1), f2 = eval(x2);
      double arg_best = theta[j];
      bool improved = false;
      const auto consider = [&](double t, double f) {
        if (f < best) {
          best = f;
          arg_best = t;
          improved = true;
        }
      };
      consider(x1, f1);
      consider(x2, f2);
      for (int it = 0; it < 14; ++it) {
        if (f1 < f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - kGolden * (hi - lo);
          f1 = eval(x1);
          consider(x1, f1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + kGolden * (hi - lo);
          f2 = eval(x2);
          consider(x2, f2);
        }
      }
      if (improved) theta[j] = arg_best;
    }
  }
  return {theta, best};
}

/// Boundary point on the gauge-projected chord from x toward w at gauge
/// distance eps from x. Returns nothing when the chord passes too close to
/// the origin or the far end is closer than eps.
inline std::optional<Vector> chord_point_at_distance(const ConvexBody& body, const Vector& x,
                                                     const Vector& w, double eps) {
  const auto project = [&](double s) -> std::optional<Vector> {
    Vector c = x + s * (w - x);
    const double g = gauge(body, c);
    if (g < 1e-12) return std::nullopt;
    return Vector(c / g);
  };
  if (gauge(body, x - w) < eps) return std::nullopt;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 44; ++it) {
    const double mid = 0.5 * (lo + hi);
    auto y = project(mid);
    if (!y) return std::nullopt;
    if (gauge(body, x - *y) >= eps) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return project(hi);
}

inline Vector normalize_gauge(const ConvexBody& body, const Vector& u) {
  const double g = gauge(body, u);
  return g > 1e-300 ? Vector(u / g) : u;
}

/// Midpoint depth of a boundary pair, min over the pair as drawn (distance
/// >= eps) and the pair repaired to distance exactly eps.
inline double delta_pair_value(const ConvexBody& body, const Vector& x, const Vector& w,
                               double eps) {
  double best = kInf;
  if (gauge(body, x - w) >= eps) {
    best = std::min(best, 1.0 - gauge(body, 0.5 * (x + w)));
    if (auto y = chord_point_at_distance(body, x, w, eps)) {
      best = std::min(best, 1.0 - gauge(body, 0.5 * (x + *y)));
    }
  }
  return best;
}

}  // namespace detail

/// Estimate of the modulus of convexity delta(eps): the infimum over
/// boundary pairs at gauge distance >= eps of the midpoint depth
/// 1 - ||(x+y)/2||_C. Estimated from above.
inline double estimate_delta(const ConvexBody& body, double eps, const Budget& budget,
                             std::uint64_t seed) {
  require(eps >= 0.0 && eps <= 2.0, "estimate_delta: eps must lie in [0,2]");
  if (eps == 0.0) return 0.0;

  double best = 1.0;  // antipodal pair (x, -x) is always feasible
  Vector best_u, best_w;
  for (int i = 0; i < budget.restarts; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    Vector g1 = rng.gaussian_vector(body.dim());
    Vector g2 = rng.gaussian_vector(body.dim());
    if (g1.cwiseAbs().maxCoeff() < 1e-12 || g2.cwiseAbs().maxCoeff() < 1e-12) continue;
    const Vector nz1 = detail::normalize_gauge(body, g1);
    const Vector nz2 = detail::normalize_gauge(body, g2);
    const Vector ex1 = lmo(body, g1);
    const bool lmo_distinct = (ex1 - nz1).cwiseAbs().maxCoeff() > 1e-13;
    const int combos = lmo_distinct ? 2 : 1;
    for (int a = 0; a < combos; ++a) {
      Vector x = a == 0 ? nz1 : ex1;
      Vector w = a == 0 ? nz2 : lmo(body, g2);
      if (gauge(body, x - w) < eps) {
        // near-antipodal fallback keeps the pair feasible for any eps <= 2
        Vector alt = -x + 0.05 * rng.gaussian_vector(body.dim());
        w = detail::normalize_gauge(body, alt);
        if (gauge(body, x - w) < eps) continue;
      }
      const double v = detail::delta_pair_value(body, x, w, eps);
      if (v < best) {
        best = v;
        best_u = x;
        best_w = w;
      }
    }
  }

  if (best_u.size() > 0 && budget.refine_rounds > 0) {
    Vector theta(2 * body.dim());
    theta << best_u, best_w;
    const auto objective = [&](const Vector& t) {
      const Vector u = t.head(body.dim());
      const Vector w = t.tail(body.dim());
      if (gauge(body, u) < 1e-9 || gauge(body, w) < 1e-9) return detail::kInf;
      return detail::delta_pair_value(body, detail::normalize_gauge(body, u),
                                      detail::normalize_gauge(body, w), eps);
    };
    best = detail::coordinate_refine(objective, theta, best, budget.refine_rounds).second;
  }
  return std::max(0.0, best);
}

/// Estimate of the modulus of smoothness rho(tau): the supremum over unit
/// gauge pairs of (||x + tau y|| + ||x - tau y||)/2 - 1. Estimated from
/// below.
inline double estimate_rho(const ConvexBody& body, double tau, const Budget& budget,
                           std::uint64_t seed) {
  require(tau > 0.0 && std::isfinite(tau), "estimate_rho: tau must be positive");
  const auto pair_value = [&](const Vector& x, const Vector& y) {
    return 0.5 * (gauge(body, x + tau * y) + gauge(body, x - tau * y)) - 1.0;
  };

  double best = 0.0;
  Vector best_u, best_w;
  for (int i = 0; i < budget.restarts; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    Vector g1 = rng.gaussian_vector(body.dim());
    Vector g2 = rng.gaussian_vector(body.dim());
    if (g1.cwiseAbs().maxCoeff() < 1e-12 || g2.cwiseAbs().maxCoeff() < 1e-12) continue;
    const Vector nz1 = detail::normalize_gauge(body, g1);
    const Vector nz2 = detail::normalize_gauge(body, g2);
    const Vector ex1 = lmo(body, g1);
    const bool lmo_distinct = (ex1 - nz1).cwiseAbs().maxCoeff() > 1e-13;
    const int combos = lmo_distinct ? 2 : 1;
    for (int a = 0; a < combos; ++a) {
      const Vector& x = a == 0 ? nz1 : ex1;
      const Vector y = a == 0 ? nz2 : lmo(body, g2);
      const double v = pair_value(x, y);
      if (v > best) {
        best = v;
        best_u = x;
        best_w = y;
      }
    }
  }

  if (best_u.size() > 0 && budget.refine_rounds > 0) {
    Vector theta(2 * body.dim());
    theta << best_u, best_w;
    const auto objective = [&](const Vector& t) {
      const Vector u = t.head(body.dim());
      const Vector w = t.tail(body.dim());
      if (gauge(body, u) < 1e-9 || gauge(body, w) < 1e-9) return detail::kInf;
      return -pair_value(detail::normalize_gauge(body, u), detail::normalize_gauge(body, w));
    };
    best = -detail::coordinate_refine(objective, theta, -best, budget.refine_rounds).second;
  }
  // rho(tau) <= tau by the triangle inequality; clamp numerical overshoot
  return std::min(std::max(0.0, best), tau);
}

/// Validates a local-modulus anchor: x* on the boundary, d normalized in
/// the polar gauge and inside the normal cone at x*.
inline void validate_anchor(const ConvexBody& body, const Vector& xstar, const Vector& d,
                            double tol = 1e-6) {
  detail::check_input(body, xstar, "anchor");
  detail::check_input(body, d, "anchor");
  require(std::abs(gauge(body, xstar) - 1.0) <= tol,
          "anchor: x* must lie on the boundary of the body");
  require(std::abs(support(body, d) - 1.0) <= tol,
          "anchor: d must be normalized in the polar gauge");
  require(support(body, d) - d.dot(xstar) <= tol,
          "anchor: d must lie in the normal cone at x*");
}

namespace detail {

/// Maps raw coordinates onto C: identity inside, gauge projection outside.
inline Vector clamp_to_body(const ConvexBody& body, const Vector& u) {
  const double g = gauge(body, u);
  return g > 1.0 ? Vector(u / g) : u;
}

}  // namespace detail

/// Estimate of the local modulus of smoothness at a boundary anchor
/// (x*, d): sup over ||x||_C <= 1 of ||x* + t x|| - ||x*|| - t <d, x>.
/// Estimated from below.
inline double estimate_local_rho(const ConvexBody& body, double t, const Vector& xstar,
                                 const Vector& d, const Budget& budget, std::uint64_t seed) {
  require(t >= 0.0 && std::isfinite(t), "estimate_local_rho: t must be nonnegative");
  validate_anchor(body, xstar, d);
  if (t == 0.0) return 0.0;
  const double base = gauge(body, xstar);
  const auto value = [&](const Vector& x) {
    return gauge(body, xstar + t * x) - base - t * d.dot(x);
  };

  // the objective is convex in x, so the supremum over C sits at extreme
  // points; boundary candidates suffice
  double best = 0.0;  // x = 0 attains 0
  Vector best_u = -xstar;
  for (int i = 0; i < budget.restarts; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    Vector g = rng.gaussian_vector(body.dim());
    if (g.cwiseAbs().maxCoeff() < 1e-12) continue;
    const Vector nz = detail::normalize_gauge(body, g);
    const Vector ex = lmo(body, g);
    for (const Vector* x : {&nz, &ex}) {
      const double v = value(*x);
      if (v > best) {
        best = v;
        best_u = *x;
      }
    }
  }
  if (budget.refine_rounds > 0) {
    const auto objective = [&](const Vector& u) {
      return -value(detail::clamp_to_body(body, u));
    };
    best = -detail::coordinate_refine(objective, best_u, -best, budget.refine_rounds).second;
  }
  return std::max(0.0, best);
}

/// Estimate of the local modulus of rotundity at a boundary anchor (x*, d):
/// inf over x in C with ||x* - x||_C >= eps of <d, x* - x>. Estimated from
/// above.
inline double estimate_nu(const ConvexBody& body, double eps, const Vector& xstar,
                          const Vector& d, const Budget& budget, std::uint64_t seed) {
  require(eps >= 0.0 && eps <= 2.0, "estimate_nu: eps must lie in [0,2]");
  validate_anchor(body, xstar, d);
  if (eps == 0.0) return 0.0;

  const auto boundary_value = [&](const Vector& x) {
    if (gauge(body, xstar - x) < eps * (1.0 - 1e-12)) return detail::kInf;
    return d.dot(xstar - x);
  };
  // points at gauge distance exactly eps from x*, feasibility = membership
  const auto ring_value = [&](const Vector& z) {
    const Vector x = xstar - eps * z;
    if (gauge(body, x) > 1.0 + 1e-12) return detail::kInf;
    return d.dot(xstar - x);
  };

  // ring point along -x* is feasible for every eps in [0,2]
  double best = ring_value(xstar);
  Vector best_u = xstar;
  bool best_is_ring = true;
  for (int i = 0; i < budget.restarts; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    Vector g = rng.gaussian_vector(body.dim());
    if (g.cwiseAbs().maxCoeff() < 1e-12) continue;
    const Vector xb = detail::normalize_gauge(body, g);
    double v = boundary_value(xb);
    if (v < best) {
      best = v;
      best_u = xb;
      best_is_ring = false;
    }
    const Vector xe = lmo(body, g);
    v = boundary_value(xe);
    if (v < best) {
      best = v;
      best_u = xe;
      best_is_ring = false;
    }
    const Vector z = detail::normalize_gauge(body, g);
    v = ring_value(z);
    if (v < best) {
      best = v;
      best_u = z;
      best_is_ring = true;
    }
  }
  require(std::isfinite(best), "estimate_nu: no feasible point found; increase the budget");

  if (budget.refine_rounds > 0) {
    if (best_is_ring) {
      const auto objective = [&](const Vector& u) {
        if (gauge(body, u) < 1e-9) return detail::kInf;
        return ring_value(detail::normalize_gauge(body, u));
      };
      best = detail::coordinate_refine(objective, best_u, best, budget.refine_rounds).second;
    } else {
      const auto objective = [&](const Vector& u) {
        if (gauge(body, u) < 1e-9) return detail::kInf;
        return boundary_value(detail::normalize_gauge(body, u));
      };
      best = detail::coordinate_refine(objective, best_u, best, budget.refine_rounds).second;
    }
  }
  return std::max(0.0, best);
}

// --- grids and curves --------------------------------------------------------

/// 50 log-spaced separation values on [0.05, 2].
inline std::vector<double> default_eps_grid(int points = 50, double lo = 0.05, double hi = 2.0) {
  require(points >= 2 && lo > 0.0 && hi > lo, "default_eps_grid: bad parameters");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
  g.back() = hi;
  return g;
}

/// 20 log-spaced step values on [0.01, 1].
inline std::vector<double> default_tau_grid(int points = 20, double lo = 0.01, double hi = 1.0) {
  return default_eps_grid(points, lo, hi);
}

namespace detail {

inline void check_grid(const std::vector<double>& grid) {
  require(!grid.empty(), "grid must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1], "grid must be strictly increasing");
}

/// Cumulative max smoothing for the nondecreasing moduli; counts raw
/// violations so estimation noise stays visible.
inline int enforce_nondecreasing(std::vector<double>& values) {
  int violations = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      ++violations;
      values[i] = values[i - 1];
    }
  }
  return violations;
}

}  // namespace detail

inline ModulusCurve delta_curve(const ConvexBody& body, const std::vector<double>& grid,
                                const Budget& budget, std::uint64_t seed, int threads = 1) {
  detail::check_grid(grid);
  ModulusCurve c;
  c.kind = ModulusKind::Delta;
  c.grid = grid;
  c.values.assign(grid.size(), 0.0);
  c.budget = budget;
  c.seed = seed;
  c.bias = BiasDirection::FromAbove;
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    c.values[i] = estimate_delta(body, grid[i], budget, child_seed(seed, 1000 + i));
  });
  c.raw_monotonicity_violations = detail::enforce_nondecreasing(c.values);
  return c;
}

inline ModulusCurve rho_curve(const ConvexBody& body, const std::vector<double>& grid,
                              const Budget& budget, std::uint64_t seed, int threads = 1) {
  detail::check_grid(grid);
  ModulusCurve c;
  c.kind = ModulusKind::Rho;
  c.grid = grid;
  c.values.assign(grid.size(), 0.0);
  c.budget = budget;
  c.seed = seed;
  c.bias = BiasDirection::FromBelow;
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    c.values[i] = estimate_rho(body, grid[i], budget, child_seed(seed, 2000 + i));
  });
  return c;
}

inline ModulusCurve nu_curve(const ConvexBody& body, const std::vector<double>& grid,
                             const Vector& xstar, const Vector& d, const Budget& budget,
                             std::uint64_t seed, int threads = 1) {
  detail::check_grid(grid);
  ModulusCurve c;
  c.kind = ModulusKind::NuLocal;
  c.grid = grid;
  c.values.assign(grid.size(), 0.0);
  c.budget = budget;
  c.seed = seed;
  c.bias = BiasDirection::FromAbove;
  c.anchor = Anchor{xstar, d};
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    c.values[i] = estimate_nu(body, grid[i], xstar, d, budget, child_seed(seed, 3000 + i));
  });
  c.raw_monotonicity_violations = detail::enforce_nondecreasing(c.values);
  return c;
}

inline ModulusCurve local_rho_curve(const ConvexBody& body, const std::vector<double>& grid,
                                    const Vector& xstar, const Vector& d, const Budget& budget,
                                    std::uint64_t seed, int threads = 1) {
  detail::check_grid(grid);
  ModulusCurve c;
  c.kind = ModulusKind::RhoLocal;
  c.grid = grid;
  c.values.assign(grid.size(), 0.0);
  c.budget = budget;
  c.seed = seed;
  c.bias = BiasDirection::FromBelow;
  c.anchor = Anchor{xstar, d};
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    c.values[i] = estimate_local_rho(body, grid[i], xstar, d, budget, child_seed(seed, 4000 + i));
  });
  return c;
}

// --- power-law certificate fit -----------------------------------------------

/// Fits (alpha, p) with alpha * eps^p <= value on the whole grid, or
/// nothing when the curve is flat (not uniformly convex). Grid zeros are
/// excluded from the fit.
inline std::optional<UCParams> fit_uc_params(const ModulusCurve& curve) {
  require(curve.kind == ModulusKind::Delta || curve.kind == ModulusKind::NuLocal,
          "fit_uc_params: curve must be a delta or nu curve");
  constexpr double kFloor = 1e-9;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    if (curve.grid[i] <= 0.0) continue;
    if (curve.grid[i] >= 0.1 && curve.values[i] <= kFloor) return std::nullopt;
    if (curve.values[i] > kFloor) {
      xs.push_back(curve.grid[i]);
      ys.push_back(curve.values[i]);
    }
  }
  require(xs.size() >= 3, "fit_uc_params: need at least 3 usable grid points");
  const LinearFit fit = loglog_fit(xs, ys);
  const double p_hat = fit.slope;
  double alpha_hat = std::exp(fit.intercept);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    alpha_hat = std::min(alpha_hat, ys[i] / std::pow(xs[i], p_hat));
  }
  const Item item = curve.kind == ModulusKind::Delta ? Item::ModulusUC : Item::LocalRotundity;
  return UCParams::make(alpha_hat, p_hat, item, ExponentRole::ConvexityP);
}

// --- duality-formula checks ----------------------------------------------------

struct DualityGapRow {
  double param = 0.0;  // tau or t
  double lhs = 0.0;    // estimated smoothness modulus of the polar body
  double rhs = 0.0;    // conjugate expression from the convexity-side curve
  double diff = 0.0;
};

struct LindenstraussReport {
  std::vector<DualityGapRow> rows;
  double tolerance = 1e-2;
  double max_abs_diff = 0.0;
  bool pass = false;
};

/// Compares the polar body's smoothness modulus against the conjugate
/// transform of the body's convexity modulus, pointwise over tau_grid.
inline LindenstraussReport check_lindenstrauss_global(const ConvexBody& body,
                                                      const std::vector<double>& tau_grid,
                                                      const std::vector<double>& eps_grid,
                                                      const Budget& budget, std::uint64_t seed,
                                                      double tol = 1e-2, int threads = 1) {
  detail::check_grid(tau_grid);
  const ModulusCurve delta = delta_curve(body, eps_grid, budget, child_seed(seed, 1), threads);
  const ConvexBody polar_body = polar(body);
  LindenstraussReport report;
  report.tolerance = tol;
  report.rows.resize(tau_grid.size());
  parallel_for(tau_grid.size(), threads, [&](std::size_t i) {
    const double tau = tau_grid[i];
    const double lhs = estimate_rho(polar_body, tau, budget, child_seed(seed, 100 + i));
    double rhs = 0.0;  // eps = 0 term of the supremum
    for (std::size_t k = 0; k < delta.grid.size(); ++k) {
      rhs = std::max(rhs, 0.5 * tau * delta.grid[k] - delta.values[k]);
    }
    report.rows[i] = DualityGapRow{tau, lhs, rhs, lhs - rhs};
  });
  for (const auto& row : report.rows)
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(row.diff));
  report.pass = report.max_abs_diff <= tol;
  return report;
}

/// Local counterpart: the polar body's local smoothness modulus at the
/// swapped anchor (d, x*) against the conjugate of the rotundity modulus.
inline LindenstraussReport check_lindenstrauss_local(const ConvexBody& body,
                                                     const std::vector<double>& t_grid,
                                                     const std::vector<double>& eps_grid,
                                                     const Vector& xstar, const Vector& d,
                                                     const Budget& budget, std::uint64_t seed,
                                                     double tol = 1e-2, int threads = 1) {
  require(!t_grid.empty(), "t grid must be nonempty");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    require(t_grid[i] > t_grid[i - 1], "grid must be strictly increasing");
  validate_anchor(body, xstar, d);
  const ModulusCurve nu = nu_curve(body, eps_grid, xstar, d, budget, child_seed(seed, 1), threads);
  const ConvexBody polar_body = polar(body);
  LindenstraussReport report;
  report.tolerance = tol;
  report.rows.resize(t_grid.size());
  parallel_for(t_grid.size(), threads, [&](std::size_t i) {
    const double t = t_grid[i];
    const double lhs =
        t == 0.0 ? 0.0 : estimate_local_rho(polar_body, t, d, xstar, budget, child_seed(seed, 200 + i));
    double rhs = 0.0;
    for (std::size_t k = 0; k < nu.grid.size(); ++k) {
      rhs = std::max(rhs, nu.grid[k] * t - nu.values[k]);
    }
    report.rows[i] = DualityGapRow{t, lhs, rhs, lhs - rhs};
  });
  for (const auto& row : report.rows)
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(row.diff));
  report.pass = report.max_abs_diff <= tol;
  return report;
}

}  // namespace uckit
