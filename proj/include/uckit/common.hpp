#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

namespace uckit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Default relative tolerance for boundary membership tests.
inline constexpr double kBoundaryTol = 1e-8;

/// An inequality lhs >= rhs counts as violated only when the deficit
/// exceeds this scale times (1 + |rhs|).
inline constexpr double kViolationTol = 1e-9;

/// Sample/restart counts for the derivative-free estimators.
struct Budget {
  int restarts = 2000;
  int refine_rounds = 40;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline bool violates_lower_bound(double lhs, double rhs, double tol = kViolationTol) {
  return rhs - lhs > tol * (1.0 + std::abs(rhs));
}

/// Runs fn(i) for i in [0, n) over `threads` workers. Work items must be
/// independent; callers own any reduction (which must be order-independent
/// to preserve determinism).
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::atomic<std::size_t> next{0};
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace uckit
