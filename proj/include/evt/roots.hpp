#pragma once

#include <functional>

namespace evt {

struct Bracket {
  double lo;
  double hi;
};

/// Finds x in [lo, hi] with f(x) = 0 for a monotone f whose values at the
/// endpoints have opposite signs. Newton steps from `derivative` are taken
/// when they stay inside the current bracket, bisection otherwise. When both
/// ends share a sign and their ratio is large the bisection point is the
/// geometric mean, so brackets spanning many decades converge quickly.
[[nodiscard]] double solve_monotone(const std::function<double(double)>& f,
                                    const std::function<double(double)>& derivative, Bracket bracket,
                                    double x_tol = 1e-13, int max_iter = 400);

/// Bisection-only variant.
[[nodiscard]] double solve_monotone(const std::function<double(double)>& f, Bracket bracket,
                                    double x_tol = 1e-13, int max_iter = 400);

/// Expands a bracket around `start` for an increasing f until f(lo) <= 0 <= f(hi),
/// staying within [left, right] (which may be infinite).
[[nodiscard]] Bracket expand_bracket(const std::function<double(double)>& f, double left, double right,
                                     double start = 0.0);

}  // namespace evt
