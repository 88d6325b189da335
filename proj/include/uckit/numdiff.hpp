#pragma once

#include <functional>

#include "uckit/common.hpp"

namespace uckit {

/// Central differences, step h = 1e-4 * max(1, ||x||) unless overridden.
inline Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& x,
                          double h = 0.0) {
  if (h <= 0.0) h = 1e-4 * std::max(1.0, x.norm());
  Vector g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Vector hi = x, lo = x;
    hi[i] += h;
    lo[i] -= h;
    g[i] = (f(hi) - f(lo)) / (2.0 * h);
  }
  return g;
}

/// Central-difference Hessian, symmetrized as (H + H')/2.
inline Matrix fd_hessian(const std::function<double(const Vector&)>& f, const Vector& x,
                         double h = 0.0) {
  if (h <= 0.0) h = 1e-4 * std::max(1.0, x.norm());
  const int m = static_cast<int>(x.size());
  Matrix H(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
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
      H(j, i) = H(i, j);
    }
  }
  return H;
}

}  // namespace uckit
