#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "uckit/moduli.hpp"

using namespace uckit;
using Catch::Approx;

namespace {
Vector e1(int dim) {
  Vector v = Vector::Zero(dim);
  v[0] = 1.0;
  return v;
}
const Budget kTestBudget{600, 24};
}  // namespace

TEST_CASE("delta estimates on the euclidean ball", "[moduli]") {
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  // analytic oracle: constrained maximization over sphere pairs
  CHECK(estimate_delta(l2, 1.0, kTestBudget, 42) == Approx(oracle::l2_delta(1.0)).margin(1e-3));
  CHECK(estimate_delta(l2, 0.0, kTestBudget, 42) == 0.0);
  const auto l1 = ConvexBody::lp_ball(1.0, 1.0, 2);
  CHECK(estimate_delta(l1, 0.5, kTestBudget, 42) == Approx(0.0).margin(1e-9));
  CHECK_THROWS_AS(estimate_delta(l2, 2.5, kTestBudget, 42), std::invalid_argument);
}

TEST_CASE("rho estimates", "[moduli]") {
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  CHECK(estimate_rho(l2, 1.0, kTestBudget, 7) == Approx(oracle::l2_rho(1.0)).margin(1e-3));
  const auto l1 = ConvexBody::lp_ball(1.0, 1.0, 2);
  // polytope attains (||x+ty|| + ||x-ty||)/2 - 1 = t; cross-checked by grid
  CHECK(estimate_rho(l1, 0.5, kTestBudget, 7) == Approx(0.5).margin(1e-6));
  CHECK(oracle::rho_by_grid(l1, 0.5, 600) == Approx(0.5).margin(1e-3));
  // rho(tau) <= tau always
  for (double tau : {1e-3, 1e-2, 0.1}) {
    CHECK(estimate_rho(l2, tau, Budget{200, 10}, 7) <= tau);
  }
  CHECK_THROWS_AS(estimate_rho(l2, 0.0, kTestBudget, 7), std::invalid_argument);
}

TEST_CASE("local rho estimates on the disk", "[moduli]") {
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  const Vector x = e1(2), d = e1(2);
  // dense polar-grid oracle puts the supremum at 0.5 (not the global
  // modulus value sqrt(2)-1: the local modulus ranges over the whole ball)
  const double grid_value = oracle::local_rho_by_grid(l2, 1.0, x, d, 4000, 60);
  CHECK(grid_value == Approx(0.5).margin(1e-4));
  CHECK(estimate_local_rho(l2, 1.0, x, d, kTestBudget, 3) == Approx(grid_value).margin(1e-3));
  // t -> 0: first-order terms cancel
  CHECK(estimate_local_rho(l2, 1e-4, x, d, Budget{200, 12}, 3) == Approx(0.0).margin(1e-6));
  // interior anchor rejected
  CHECK_THROWS_AS(estimate_local_rho(l2, 1.0, 0.5 * x, d, kTestBudget, 3), std::invalid_argument);
}

TEST_CASE("nu estimates", "[moduli]") {
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  const Vector x = e1(2), d = e1(2);
  // constrained minimization oracle on the disk: value eps^2/2
  const double grid_value = oracle::nu_by_grid(l2, 1.0, x, d, 400000);
  CHECK(grid_value == Approx(0.5).margin(1e-4));
  CHECK(estimate_nu(l2, 1.0, x, d, kTestBudget, 5) == Approx(grid_value).margin(1e-3));
  CHECK(estimate_nu(l2, 0.0, x, d, kTestBudget, 5) == 0.0);

  const auto l4 = ConvexBody::lp_ball(4.0, 1.0, 2);
  const double nu_l4 = estimate_nu(l4, 0.5, e1(2), e1(2), kTestBudget, 5);
  CHECK(nu_l4 > 0.0);
  // frozen from the dense-grid minimization oracle
  CHECK(nu_l4 == Approx(0.016005).margin(2e-4));
  CHECK(oracle::nu_by_grid(l4, 0.5, e1(2), e1(2), 400000) == Approx(0.016005).margin(1e-5));
}

TEST_CASE("nu dominates the global modulus on the disk", "[moduli][property]") {
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  for (double eps : {0.3, 0.8, 1.3}) {
    const double nu = estimate_nu(l2, eps, e1(2), e1(2), kTestBudget, 11);
    REQUIRE(nu >= oracle::l2_delta(eps) - 1e-3);
  }
}

TEST_CASE("estimates are deterministic under the seed", "[moduli][property]") {
  const auto l4 = ConvexBody::lp_ball(4.0, 1.0, 3);
  const auto grid = default_eps_grid(8, 0.2, 1.6);
  const Budget small{120, 10};
  const auto a = delta_curve(l4, grid, small, 99);
  const auto b = delta_curve(l4, grid, small, 99);
  REQUIRE(a.values == b.values);
  const auto c = delta_curve(l4, grid, small, 100);
  REQUIRE(a.values != c.values);
}

TEST_CASE("delta curves are nondecreasing and nonnegative", "[moduli][property]") {
  const auto l4 = ConvexBody::lp_ball(4.0, 1.0, 2);
  const auto curve = delta_curve(l4, default_eps_grid(12, 0.1, 1.9), Budget{200, 12}, 21);
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    REQUIRE(curve.values[i] >= 0.0);
    if (i > 0) REQUIRE(curve.values[i] >= curve.values[i - 1]);
  }
}

TEST_CASE("fit_uc_params on synthetic and analytic curves", "[moduli]") {
  ModulusCurve exact;
  exact.kind = ModulusKind::Delta;
  exact.grid = default_eps_grid(30, 0.05, 2.0);
  for (double eps : exact.grid) exact.values.push_back(eps * eps / 8.0);
  const auto fit = fit_uc_params(exact);
  REQUIRE(fit.has_value());
  CHECK(fit->exponent == Approx(2.0).margin(1e-9));
  CHECK(fit->alpha == Approx(0.125).margin(1e-9));

  ModulusCurve analytic;
  analytic.kind = ModulusKind::Delta;
  analytic.grid = default_eps_grid(50, 0.05, 2.0);
  for (double eps : analytic.grid) analytic.values.push_back(oracle::l2_delta(eps));
  const auto l2fit = fit_uc_params(analytic);
  REQUIRE(l2fit.has_value());
  CHECK(l2fit->exponent > 1.9);
  CHECK(l2fit->exponent < 2.1);
  // shrunk constant certifies the lower bound on the whole grid
  for (std::size_t i = 0; i < analytic.grid.size(); ++i) {
    REQUIRE(l2fit->alpha * std::pow(analytic.grid[i], l2fit->exponent) <=
            analytic.values[i] + 1e-12);
  }

  ModulusCurve flat;
  flat.kind = ModulusKind::Delta;
  flat.grid = {0.2, 0.5, 1.0, 1.5};
  flat.values = {0.0, 0.0, 0.0, 0.0};
  CHECK_FALSE(fit_uc_params(flat).has_value());

  ModulusCurve tiny;
  tiny.kind = ModulusKind::Delta;
  tiny.grid = {0.5, 1.0};
  tiny.values = {0.1, 0.3};
  CHECK_THROWS_AS(fit_uc_params(tiny), std::invalid_argument);
}

TEST_CASE("fitted exponent tracks the ball exponent", "[moduli][property]") {
  // dim <= 4 at moderate budget; tolerance matches the estimator contract
  const auto l4 = ConvexBody::lp_ball(4.0, 1.0, 2);
  const auto curve = delta_curve(l4, default_eps_grid(24, 0.05, 2.0), Budget{800, 30}, 31);
  const auto fit = fit_uc_params(curve);
  REQUIRE(fit.has_value());
  CHECK(fit->exponent == Approx(4.0).margin(0.3));
}

TEST_CASE("global lindenstrauss on the disk", "[moduli]") {
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  const auto taus = default_tau_grid(6, 0.1, 1.0);
  const auto report =
      check_lindenstrauss_global(l2, taus, default_eps_grid(40, 0.05, 2.0), kTestBudget, 17, 5e-3);
  INFO("max diff " << report.max_abs_diff);
  CHECK(report.pass);
  // analytic cross-check of both sides
  for (const auto& row : report.rows) {
    REQUIRE(row.lhs == Approx(oracle::l2_rho(row.param)).margin(2e-3));
  }
}

TEST_CASE("degenerate eps grid gives a zero supremum", "[moduli]") {
  ModulusCurve dummy;
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  const auto report = check_lindenstrauss_global(l2, {0.5}, {1e-12}, Budget{50, 4}, 3, 1.0);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].rhs == Approx(0.0).margin(1e-9));
}

TEST_CASE("local lindenstrauss on the disk and the l4 ball", "[moduli]") {
  const auto l2 = ConvexBody::lp_ball(2.0, 1.0, 2);
  const Vector x = e1(2), d = e1(2);
  auto report = check_lindenstrauss_local(l2, {0.0, 0.15, 0.4, 0.8}, default_eps_grid(40, 0.05, 2.0),
                                          x, d, kTestBudget, 19, 5e-3);
  INFO("disk max diff " << report.max_abs_diff);
  CHECK(report.pass);
  CHECK(report.rows[0].lhs == 0.0);
  CHECK(report.rows[0].rhs == Approx(0.0).margin(1e-9));

  const auto l4 = ConvexBody::lp_ball(4.0, 1.0, 2);
  report = check_lindenstrauss_local(l4, {0.1, 0.3, 0.7}, default_eps_grid(40, 0.05, 2.0), x, d,
                                     kTestBudget, 23, 1e-2);
  INFO("l4 max diff " << report.max_abs_diff);
  CHECK(report.pass);
}
