#include "evt/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "evt/errors.hpp"

namespace evt {
namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Piece {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Piece& other) const { return error < other.error; }
};

double finite_or_zero(double v) { return std::isfinite(v) ? v : 0.0; }

Piece gk21(const Integrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = finite_or_zero(f(center));
  double resg = 0.0;
  double resk = fc * kWgk[10];
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = finite_or_zero(f(center - dx));
    const double f2 = finite_or_zero(f(center + dx));
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) {
      resg += kWg[j / 2] * (f1 + f2);
    }
  }
  const double value = resk * half;
  double error = std::abs((resk - resg) * half);
  // Floor at a few ulps of the magnitude, so round-off does not drive subdivision.
  error = std::max(error, 50.0 * std::numeric_limits<double>::epsilon() * std::abs(value));
  return {a, b, value, error, depth};
}

// Maps the (semi-)infinite interval onto a finite one.
struct Mapped {
  Integrand g;
  double lo;
  double hi;
};

Mapped map_interval(const Integrand& f, double a, double b) {
  const bool a_inf = std::isinf(a);
  const bool b_inf = std::isinf(b);
  if (!a_inf && !b_inf) {
    return {f, a, b};
  }
  if (!a_inf && b_inf) {
    return {[&f, a](double t) {
              if (t >= 1.0) return 0.0;
              const double s = 1.0 - t;
              return f(a + t / s) / (s * s);
            },
            0.0, 1.0};
  }
  if (a_inf && !b_inf) {
    return {[&f, b](double t) {
              if (t >= 1.0) return 0.0;
              const double s = 1.0 - t;
              return f(b - t / s) / (s * s);
            },
            0.0, 1.0};
  }
  return {[&f](double t) {
            const double s = 1.0 - t * t;
            if (s <= 0.0) return 0.0;
            return f(t / s) * (1.0 + t * t) / (s * s);
          },
          -1.0, 1.0};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("QuadratureSpec: tolerances must be positive");
  }
  if (max_subdivisions == 0) {
    throw DomainError("QuadratureSpec: max_subdivisions must be positive");
  }
  if (!(tail_cut > 0.0) || tail_cut >= 1.0) {
    throw DomainError("QuadratureSpec: tail_cut must lie in (0, 1)");
  }
}

QuadratureResult integrate_adaptive(const Integrand& f, std::span<const double> breaks,
                                    const QuadratureSpec& spec) {
  spec.validate();
  QuadratureResult out;
  if (breaks.size() < 2) {
    out.converged = true;
    return out;
  }

  // Each piece keeps its own integrand (mapped or not).
  std::vector<Mapped> maps;
  maps.reserve(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    if (!(b > a)) {
      continue;
    }
    maps.push_back(map_interval(f, a, b));
  }

  struct Tagged {
    Piece piece;
    std::size_t map;
    bool operator<(const Tagged& other) const { return piece < other.piece; }
  };
  std::priority_queue<Tagged> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    const Piece p = gk21(maps[m].g, maps[m].lo, maps[m].hi, 0);
    out.evaluations += 21;
    total += p.value;
    total_err += p.error;
    heap.push({p, m});
  }

  constexpr int kMaxDepth = 60;
  std::size_t subdivisions = 0;
  std::vector<Tagged> finished;
  while (!heap.empty()) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_err <= tol) {
      out.converged = true;
      break;
    }
    if (subdivisions >= spec.max_subdivisions) {
      break;
    }
    const Tagged worst = heap.top();
    heap.pop();
    const Piece& p = worst.piece;
    const double mid = 0.5 * (p.a + p.b);
    if (p.depth >= kMaxDepth || !(mid > p.a && mid < p.b)) {
      // Cannot be refined further; freeze its contribution.
      finished.push_back(worst);
      if (heap.empty()) {
        break;
      }
      continue;
    }
    const Integrand& g = maps[worst.map].g;
    const Piece left = gk21(g, p.a, mid, p.depth + 1);
    const Piece right = gk21(g, mid, p.b, p.depth + 1);
    out.evaluations += 42;
    ++subdivisions;
    total += left.value + right.value - p.value;
    total_err += left.error + right.error - p.error;
    heap.push({left, worst.map});
    heap.push({right, worst.map});
  }

  // Re-sum from the pieces to shed the drift of the running totals.
  double sum = 0.0;
  double err = 0.0;
  double comp = 0.0;
  auto accumulate = [&](const Piece& p) {
    const double y = p.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += p.error;
  };
  out.intervals = heap.size() + finished.size();
  while (!heap.empty()) {
    accumulate(heap.top().piece);
    heap.pop();
  }
  for (const auto& t : finished) {
    accumulate(t.piece);
  }
  out.value = sum;
  out.abs_error = err;
  if (!out.converged) {
    out.converged = err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(sum));
  }
  return out;
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  const std::array<double, 2> breaks{a, b};
  return integrate_adaptive(f, breaks, spec);
}

double integrate(const Integrand& f, std::span<const double> breaks, const QuadratureSpec& spec) {
  const QuadratureResult r = integrate_adaptive(f, breaks, spec);
  if (!r.converged) {
    throw NumericalError("quadrature did not converge within max_subdivisions", r.value, r.abs_error);
  }
  return r.value;
}

double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  const std::array<double, 2> breaks{a, b};
  return integrate(f, breaks, spec);
}

}  // namespace evt
