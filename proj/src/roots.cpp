#include "evt/roots.hpp"

#include <cmath>
#include <limits>

#include "evt/errors.hpp"

namespace evt {
namespace {

double split_point(double lo, double hi) {
  if (lo > 0.0 && hi > 4.0 * lo) {
    return std::sqrt(lo) * std::sqrt(hi);
  }
  if (hi < 0.0 && lo < 4.0 * hi) {
    return -std::sqrt(-lo) * std::sqrt(-hi);
  }
  return lo + 0.5 * (hi - lo);
}

bool close_enough(double lo, double hi, double x_tol) {
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  return hi - lo <= x_tol * scale;
}

}  // namespace

double solve_monotone(const std::function<double(double)>& f,
                      const std::function<double(double)>& derivative, Bracket bracket, double x_tol,
                      int max_iter) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericalError("solve_monotone: root is not bracketed", 0.5 * (lo + hi), hi - lo);
  }
  const bool increasing = flo < 0.0;
  double x = split_point(lo, hi);
  for (int it = 0; it < max_iter; ++it) {
    const double fx = f(x);
    if (fx == 0.0) {
      return x;
    }
    if ((fx < 0.0) == increasing) {
      lo = x;
    } else {
      hi = x;
    }
    if (close_enough(lo, hi, x_tol)) {
      return 0.5 * (lo + hi);
    }
    double next = std::numeric_limits<double>::quiet_NaN();
    if (derivative) {
      const double d = derivative(x);
      if (d != 0.0 && std::isfinite(d)) {
        next = x - fx / d;
      }
    }
    if (!(next > lo && next < hi)) {
      next = split_point(lo, hi);
    }
    // Newton converged to within rounding: finish.
    if (std::abs(next - x) <= 0.25 * x_tol * std::max(1.0, std::abs(x))) {
      return next;
    }
    x = next;
  }
  return 0.5 * (lo + hi);
}

double solve_monotone(const std::function<double(double)>& f, Bracket bracket, double x_tol, int max_iter) {
  return solve_monotone(f, nullptr, bracket, x_tol, max_iter);
}

Bracket expand_bracket(const std::function<double(double)>& f, double left, double right, double start) {
  if (start <= left || start >= right) {
    if (std::isfinite(left) && std::isfinite(right)) {
      start = 0.5 * (left + right);
    } else if (std::isfinite(left)) {
      start = left + 1.0;
    } else if (std::isfinite(right)) {
      start = right - 1.0;
    } else {
      start = 0.0;
    }
  }
  double lo = start;
  double hi = start;
  double step = 1.0;
  for (int i = 0; i < 2100 && !(f(lo) <= 0.0); ++i) {
    const double next = lo - step;
    lo = std::isfinite(left) ? std::max(next, left + 0.5 * (lo - left)) : next;
    step *= 2.0;
    if (std::isinf(lo)) break;
  }
  step = 1.0;
  for (int i = 0; i < 2100 && !(f(hi) >= 0.0); ++i) {
    const double next = hi + step;
    hi = std::isfinite(right) ? std::min(next, right - 0.5 * (right - hi)) : next;
    step *= 2.0;
    if (std::isinf(hi)) break;
  }
  if (!(f(lo) <= 0.0) || !(f(hi) >= 0.0)) {
    throw NumericalError("expand_bracket: unable to bracket the root", start, 0.0);
  }
  return {lo, hi};
}

}  // namespace evt
