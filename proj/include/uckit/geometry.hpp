#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "uckit/common.hpp"
#include "uckit/random.hpp"

namespace uckit {

/// Exponent of an lp ball. Infinity is a distinguished state rather than a
/// float sentinel, so formulas never compare against HUGE_VAL.
class LpExponent {
 public:
  static LpExponent finite(double p) {
    require(std::isfinite(p) && p >= 1.0, "lp exponent must be finite and >= 1");
    return LpExponent(p, false);
  }
  static LpExponent inf() { return LpExponent(0.0, true); }

  bool is_inf() const { return inf_; }
  double value() const {
    require(!inf_, "exponent is infinite");
    return p_;
  }

  /// Conjugate exponent: 1/p + 1/p* = 1, with 1 <-> inf.
  LpExponent conjugate() const {
    if (inf_) return finite(1.0);
    if (p_ == 1.0) return inf();
    return finite(p_ / (p_ - 1.0));
  }

  bool operator==(const LpExponent& o) const {
    return inf_ == o.inf_ && (inf_ || p_ == o.p_);
  }

  std::string str() const { return inf_ ? "inf" : std::to_string(p_); }

 private:
  LpExponent(double p, bool inf) : p_(p), inf_(inf) {}
  double p_;
  bool inf_;
};

struct LpBallParams {
  LpExponent p = LpExponent::finite(2.0);
  double radius = 1.0;
};

struct EllipsoidParams {
  Matrix Q;      // symmetric positive definite; gauge(x) = sqrt(x'Qx)
  Matrix Q_inv;  // cached for support/lmo
};

class ConvexBody;

struct ScaledParams {
  std::shared_ptr<const ConvexBody> inner;
  double factor = 1.0;
};

/// A centrally symmetric compact convex body with nonempty interior,
/// described by its closed-form oracles.
class ConvexBody {
 public:
  static ConvexBody lp_ball(double p, double radius, int dim) {
    return lp_ball(LpExponent::finite(p), radius, dim);
  }
  static ConvexBody lp_ball(LpExponent p, double radius, int dim) {
    require(radius > 0.0 && std::isfinite(radius), "lp ball radius must be positive");
    require(dim >= 1, "dimension must be positive");
    ConvexBody b;
    b.dim_ = dim;
    b.params_ = LpBallParams{p, radius};
    return b;
  }

  static ConvexBody ellipsoid(Matrix Q) {
    require(Q.rows() == Q.cols() && Q.rows() >= 1, "ellipsoid matrix must be square");
    Matrix S = 0.5 * (Q + Q.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(S);
    require(es.info() == Eigen::Success && es.eigenvalues().minCoeff() > 0.0,
            "ellipsoid matrix must be positive definite");
    ConvexBody b;
    b.dim_ = static_cast<int>(S.rows());
    b.params_ = EllipsoidParams{S, S.inverse()};
    return b;
  }

  static ConvexBody scaled(ConvexBody inner, double factor) {
    require(factor > 0.0 && std::isfinite(factor), "scale factor must be positive");
    ConvexBody b;
    b.dim_ = inner.dim();
    b.params_ = ScaledParams{std::make_shared<const ConvexBody>(std::move(inner)), factor};
    return b;
  }

  int dim() const { return dim_; }

  const LpBallParams* as_lp() const { return std::get_if<LpBallParams>(&params_); }
  const EllipsoidParams* as_ellipsoid() const { return std::get_if<EllipsoidParams>(&params_); }
  const ScaledParams* as_scaled() const { return std::get_if<ScaledParams>(&params_); }

  std::string describe() const {
    if (const auto* lp = as_lp()) {
      return "lp:" + lp->p.str() + ":" + std::to_string(lp->radius) + ":" + std::to_string(dim_);
    }
    if (as_ellipsoid()) return "ellipsoid:dim=" + std::to_string(dim_);
    const auto* s = as_scaled();
    return "scaled:" + std::to_string(s->factor) + ":(" + s->inner->describe() + ")";
  }

 private:
  ConvexBody() = default;
  int dim_ = 0;
  std::variant<LpBallParams, EllipsoidParams, ScaledParams> params_;
};

namespace detail {

inline double lp_norm(const Vector& x, const LpExponent& p) {
  if (p.is_inf()) return x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
  const double pv = p.value();
  if (pv == 2.0) return x.norm();
  if (pv == 1.0) return x.cwiseAbs().sum();
  const double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  // scale by the max coordinate so large exponents cannot overflow
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]) / m, pv);
  return m * std::pow(s, 1.0 / pv);
}

inline void check_input(const ConvexBody& body, const Vector& v, const char* what) {
  require(v.size() == body.dim(), std::string(what) + ": dimension mismatch");
  require(v.allFinite(), std::string(what) + ": non-finite input");
}

}  // namespace detail

/// Minkowski gauge ||x||_C = inf{ lambda >= 0 : x in lambda C }.
inline double gauge(const ConvexBody& body, const Vector& x) {
  detail::check_input(body, x, "gauge");
  if (const auto* lp = body.as_lp()) {
    return detail::lp_norm(x, lp->p) / lp->radius;
  }
  if (const auto* el = body.as_ellipsoid()) {
    return std::sqrt(std::max(0.0, x.dot(el->Q * x)));
  }
  const auto* sc = body.as_scaled();
  return gauge(*sc->inner, x) / sc->factor;
}

/// Support function sigma_C(d) = sup_{v in C} <v, d>; equals the gauge of d
/// in the polar body.
inline double support(const ConvexBody& body, const Vector& d) {
  detail::check_input(body, d, "support");
  if (const auto* lp = body.as_lp()) {
    return lp->radius * detail::lp_norm(d, lp->p.conjugate());
  }
  if (const auto* el = body.as_ellipsoid()) {
    return std::sqrt(std::max(0.0, d.dot(el->Q_inv * d)));
  }
  const auto* sc = body.as_scaled();
  return sc->factor * support(*sc->inner, d);
}

/// Linear maximization oracle: argmax_{x in C} <d, x>. Ties on the l1 ball
/// break toward the lowest index among maximal |d_i|.
inline Vector lmo(const ConvexBody& body, const Vector& d) {
  detail::check_input(body, d, "lmo");
  require(d.cwiseAbs().maxCoeff() > 0.0, "ambiguous LMO");
  if (const auto* lp = body.as_lp()) {
    const int m = body.dim();
    const double r = lp->radius;
    Vector v = Vector::Zero(m);
    if (lp->p.is_inf()) {
      for (int i = 0; i < m; ++i) v[i] = r * (d[i] > 0 ? 1.0 : (d[i] < 0 ? -1.0 : 0.0));
      return v;
    }
    const double pv = lp->p.value();
    if (pv == 1.0) {
      int best = 0;
      for (int i = 1; i < m; ++i)
        if (std::abs(d[i]) > std::abs(d[best])) best = i;
      v[best] = r * (d[best] > 0 ? 1.0 : -1.0);
      return v;
    }
    const double ps = pv / (pv - 1.0);
    const double M = d.cwiseAbs().maxCoeff();
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
      double u = std::abs(d[i]) / M;
      if (u < 1e-300) u = 0.0;  // avoid underflow noise in u^(ps-1)
      v[i] = (d[i] >= 0 ? 1.0 : -1.0) * std::pow(u, ps - 1.0);
      s += std::pow(u, ps);
    }
    return (r / std::pow(s, (ps - 1.0) / ps)) * v;
  }
  if (const auto* el = body.as_ellipsoid()) {
    Vector w = el->Q_inv * d;
    return w / std::sqrt(std::max(1e-300, d.dot(w)));
  }
  const auto* sc = body.as_scaled();
  return sc->factor * lmo(*sc->inner, d);
}

/// True when the support function is differentiable away from 0 (unique
/// maximizing face everywhere).
inline bool strictly_convex(const ConvexBody& body) {
  if (const auto* lp = body.as_lp()) {
    return !lp->p.is_inf() && lp->p.value() > 1.0;
  }
  if (body.as_ellipsoid()) return true;
  return strictly_convex(*body.as_scaled()->inner);
}

/// Membership test for d in the normal cone N_C(x) at a boundary point x.
inline bool in_normal_cone(const ConvexBody& body, const Vector& x, const Vector& d,
                           double tol = kBoundaryTol) {
  detail::check_input(body, x, "in_normal_cone");
  detail::check_input(body, d, "in_normal_cone");
  require(std::abs(gauge(body, x) - 1.0) <= tol,
          "in_normal_cone: x not on boundary within tolerance");
  require(d.cwiseAbs().maxCoeff() > 0.0, "in_normal_cone: zero direction");
  const double s = support(body, d);
  return s - d.dot(x) <= tol * s;
}

/// Gradient of the support function at d != 0; defined for strictly convex
/// bodies, where the maximizing point is unique.
inline Vector support_gradient(const ConvexBody& body, const Vector& d) {
  require(strictly_convex(body), "support not differentiable everywhere");
  return lmo(body, d);
}

/// Polar body C° = { d : <x,d> <= 1 for all x in C }.
inline ConvexBody polar(const ConvexBody& body) {
  if (const auto* lp = body.as_lp()) {
    return ConvexBody::lp_ball(lp->p.conjugate(), 1.0 / lp->radius, body.dim());
  }
  if (const auto* el = body.as_ellipsoid()) {
    return ConvexBody::ellipsoid(el->Q_inv);
  }
  const auto* sc = body.as_scaled();
  return ConvexBody::scaled(polar(*sc->inner), 1.0 / sc->factor);
}

/// Coordinate half-widths of an axis-aligned box containing C.
inline Vector bounding_box_halfwidths(const ConvexBody& body) {
  const int m = body.dim();
  if (const auto* lp = body.as_lp()) {
    return Vector::Constant(m, lp->radius);
  }
  if (const auto* el = body.as_ellipsoid()) {
    Vector h(m);
    for (int i = 0; i < m; ++i) h[i] = std::sqrt(el->Q_inv(i, i));
    return h;
  }
  const auto* sc = body.as_scaled();
  return sc->factor * bounding_box_halfwidths(*sc->inner);
}

/// Uniform sample from C by rejection from the bounding box. Intended for
/// desk-scale dimensions (m <= 6 or so).
inline Vector sample_in_body(const ConvexBody& body, Rng& rng) {
  const Vector h = bounding_box_halfwidths(body);
  const int m = body.dim();
  for (int attempt = 0; attempt < 2000000; ++attempt) {
    Vector x(m);
    for (int i = 0; i < m; ++i) x[i] = h[i] * rng.uniform(-1.0, 1.0);
    if (gauge(body, x) <= 1.0) return x;
  }
  throw std::runtime_error("sample_in_body: rejection sampling failed; dimension too large?");
}

/// Boundary point from a Gaussian direction, via gauge normalization.
/// Covers the whole boundary, including polytope faces.
inline Vector sample_on_sphere(const ConvexBody& body, Rng& rng) {
  for (;;) {
    Vector g = rng.gaussian_vector(body.dim());
    const double n = gauge(body, g);
    if (n > 1e-12) return g / n;
  }
}

/// Extreme point from a Gaussian direction, via the LMO.
inline Vector sample_extreme(const ConvexBody& body, Rng& rng) {
  for (;;) {
    Vector g = rng.gaussian_vector(body.dim());
    if (g.cwiseAbs().maxCoeff() > 1e-12) return lmo(body, g);
  }
}

// --- JSON (de)serialization -------------------------------------------------

inline void to_json(nlohmann::json& j, const ConvexBody& body) {
  if (const auto* lp = body.as_lp()) {
    j = nlohmann::json{{"kind", "lp"}, {"r", lp->radius}, {"dim", body.dim()}};
    if (lp->p.is_inf()) {
      j["p"] = "inf";
    } else {
      j["p"] = lp->p.value();
    }
    return;
  }
  if (const auto* el = body.as_ellipsoid()) {
    std::vector<std::vector<double>> rows(body.dim(), std::vector<double>(body.dim()));
    for (int i = 0; i < body.dim(); ++i)
      for (int k = 0; k < body.dim(); ++k) rows[i][k] = el->Q(i, k);
    j = nlohmann::json{{"kind", "ellipsoid"}, {"Q", rows}};
    return;
  }
  const auto* sc = body.as_scaled();
  nlohmann::json inner;
  to_json(inner, *sc->inner);
  j = nlohmann::json{{"kind", "scaled"}, {"s", sc->factor}, {"inner", inner}};
}

inline ConvexBody body_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lp") {
    LpExponent p = LpExponent::finite(2.0);
    const auto& pj = j.at("p");
    if (pj.is_string()) {
      require(pj.get<std::string>() == "inf", "body json: unknown exponent string");
      p = LpExponent::inf();
    } else {
      p = LpExponent::finite(pj.get<double>());
    }
    return ConvexBody::lp_ball(p, j.at("r").get<double>(), j.at("dim").get<int>());
  }
  if (kind == "ellipsoid") {
    const auto rows = j.at("Q").get<std::vector<std::vector<double>>>();
    const int m = static_cast<int>(rows.size());
    Matrix Q(m, m);
    for (int i = 0; i < m; ++i) {
      require(static_cast<int>(rows[i].size()) == m, "body json: Q must be square");
      for (int k = 0; k < m; ++k) Q(i, k) = rows[i][k];
    }
    return ConvexBody::ellipsoid(Q);
  }
  if (kind == "scaled") {
    return ConvexBody::scaled(body_from_json(j.at("inner")), j.at("s").get<double>());
  }
  throw std::invalid_argument("body json: unknown kind '" + kind + "'");
}

}  // namespace uckit
