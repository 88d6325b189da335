#pragma once

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "uckit/common.hpp"
#include "uckit/geometry.hpp"
#include "uckit/moduli.hpp"
#include "uckit/random.hpp"

namespace uckit {

/// Outcome of a randomized violation scan of one inequality family.
struct ViolationReport {
  std::string check;
  nlohmann::json body;
  nlohmann::json params;
  long samples = 0;
  long violations = 0;
  double max_deficit = 0.0;   // worst tolerance-exceeding shortfall
  double max_ratio = 0.0;     // worst lhs/rhs for ratio-style checks
  std::uint64_t seed = 0;
  bool strictness_warning = false;

  nlohmann::json to_json() const {
    return nlohmann::json{{"check", check},       {"body", body},
                          {"params", params},     {"samples", samples},
                          {"violations", violations}, {"max_deficit", max_deficit},
                          {"max_ratio", max_ratio},   {"seed", seed},
                          {"strictness_warning", strictness_warning}};
  }
};

namespace detail {

/// Alternate interior and boundary samples; violations of marginal
/// constants concentrate near the boundary.
inline Vector mixed_sample(const ConvexBody& body, Rng& rng, long index) {
  if (index % 2 == 0) return sample_in_body(body, rng);
  return sample_on_sphere(body, rng);
}

inline Vector polar_sphere_direction(const ConvexBody& body, Rng& rng) {
  for (;;) {
    Vector g = rng.gaussian_vector(body.dim());
    const double s = support(body, g);
    if (s > 1e-12) return g / s;
  }
}

inline void note_violation(ViolationReport& report, double deficit, double rhs) {
  if (deficit > kViolationTol * (1.0 + std::abs(rhs))) {
    ++report.violations;
    report.max_deficit = std::max(report.max_deficit, deficit);
  }
}

}  // namespace detail

/// Midpoint inclusion scan: (x+y)/2 + alpha ||x-y||^p B stays inside C.
inline ViolationReport check_midpoint_inclusion(const ConvexBody& body, double alpha, double p,
                                                long samples, std::uint64_t seed) {
  require(alpha >= 0.0 && p >= 2.0, "check_midpoint_inclusion: bad parameters");
  ViolationReport report;
  report.check = "midpoint_inclusion";
  report.body = body;
  report.params = {{"alpha", alpha}, {"p", p}};
  report.seed = seed;
  for (long i = 0; i < samples; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector x = detail::mixed_sample(body, rng, i);
    const Vector y = detail::mixed_sample(body, rng, i + 1);
    const Vector z = sample_on_sphere(body, rng);
    const double shift = alpha * std::pow(gauge(body, x - y), p);
    const double g = gauge(body, 0.5 * (x + y) + shift * z);
    detail::note_violation(report, g - 1.0, 1.0);
    ++report.samples;
  }
  return report;
}

/// Scaling-inequality scan at LMO points: <d, y-x> >= alpha ||d||_polar
/// ||y-x||^p with y the maximizer of <d, .> over C.
inline ViolationReport check_global_scaling(const ConvexBody& body, double alpha, double p,
                                            long samples, std::uint64_t seed) {
  require(alpha > 0.0 && p >= 2.0, "check_global_scaling: bad parameters");
  ViolationReport report;
  report.check = "global_scaling";
  report.body = body;
  report.params = {{"alpha", alpha}, {"p", p}};
  report.seed = seed;
  for (long i = 0; i < samples; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector d = detail::polar_sphere_direction(body, rng);
    const Vector y = lmo(body, d);
    const Vector x = detail::mixed_sample(body, rng, i);
    const double lhs = d.dot(y - x);
    const double rhs = alpha * support(body, d) * std::pow(gauge(body, y - x), p);
    if (violates_lower_bound(lhs, rhs)) {
      ++report.violations;
      report.max_deficit = std::max(report.max_deficit, rhs - lhs);
    }
    ++report.samples;
  }
  return report;
}

/// Local scaling scan at a boundary anchor: <d, x*-x> >= alpha ||x*-x||^p
/// over x in C.
inline ViolationReport check_local_scaling(const ConvexBody& body, const Vector& xstar,
                                           const Vector& d, double alpha, double p, long samples,
                                           std::uint64_t seed) {
  require(alpha > 0.0 && p >= 2.0, "check_local_scaling: bad parameters");
  validate_anchor(body, xstar, d);
  ViolationReport report;
  report.check = "local_scaling";
  report.body = body;
  report.params = {{"alpha", alpha}, {"p", p}};
  report.seed = seed;
  report.strictness_warning = !strictly_convex(body);
  for (long i = 0; i < samples; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector x = detail::mixed_sample(body, rng, i);
    const double lhs = d.dot(xstar - x);
    const double rhs = alpha * std::pow(gauge(body, xstar - x), p);
    if (violates_lower_bound(lhs, rhs)) {
      ++report.violations;
      report.max_deficit = std::max(report.max_deficit, rhs - lhs);
    }
    ++report.samples;
  }
  return report;
}

/// LMO continuity scan: ||lmo(d1) - lmo(d2)|| against the uniform-convexity
/// Hoelder bound with constant derived from (alpha, p).
inline ViolationReport check_lmo_holder(const ConvexBody& body, double alpha, double p, long pairs,
                                        std::uint64_t seed) {
  require(alpha > 0.0 && p >= 2.0, "check_lmo_holder: bad parameters");
  ViolationReport report;
  report.check = "lmo_holder";
  report.body = body;
  report.params = {{"alpha", alpha}, {"p", p}};
  report.seed = seed;
  const double inv_pm1 = 1.0 / (p - 1.0);
  for (long i = 0; i < pairs; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector d1 = rng.gaussian_vector(body.dim());
    const Vector d2 = rng.gaussian_vector(body.dim());
    if (d1.cwiseAbs().maxCoeff() < 1e-12 || d2.cwiseAbs().maxCoeff() < 1e-12) continue;
    const Vector v1 = lmo(body, d1);
    const Vector v2 = lmo(body, d2);
    const double lhs = gauge(body, v1 - v2);
    const double dual_sum = support(body, d1) + support(body, d2);
    const double rhs = std::pow(2.0 * alpha * dual_sum, -inv_pm1) *
                       std::pow(gauge(polar(body), d1 - d2), inv_pm1);
    ++report.samples;
    if (rhs <= 0.0) continue;  // d1 == d2: both sides vanish
    report.max_ratio = std::max(report.max_ratio, lhs / rhs);
    if (violates_lower_bound(rhs, lhs)) {
      ++report.violations;
      report.max_deficit = std::max(report.max_deficit, lhs - rhs);
    }
  }
  return report;
}

/// Hoelder continuity of the support gradient on the polar unit sphere.
inline ViolationReport check_support_holder_sphere(const ConvexBody& body, double c, double q_minus_1,
                                                   long pairs, std::uint64_t seed) {
  require(c > 0.0 && q_minus_1 > 0.0 && q_minus_1 <= 1.0,
          "check_support_holder_sphere: bad parameters");
  require(strictly_convex(body), "check_support_holder_sphere: body must be strictly convex");
  ViolationReport report;
  report.check = "support_holder_sphere";
  report.body = body;
  report.params = {{"c", c}, {"q_minus_1", q_minus_1}};
  report.seed = seed;
  const ConvexBody dual = polar(body);
  for (long i = 0; i < pairs; ++i) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector d1 = detail::polar_sphere_direction(body, rng);
    const Vector d2 = detail::polar_sphere_direction(body, rng);
    const Vector g1 = support_gradient(body, d1);
    const Vector g2 = support_gradient(body, d2);
    const double lhs = gauge(body, g1 - g2);
    const double rhs = c * std::pow(gauge(dual, d1 - d2), q_minus_1);
    ++report.samples;
    if (rhs > 0.0) report.max_ratio = std::max(report.max_ratio, lhs / rhs);
    if (violates_lower_bound(rhs, lhs)) {
      ++report.violations;
      report.max_deficit = std::max(report.max_deficit, lhs - rhs);
    }
  }
  return report;
}

}  // namespace uckit
