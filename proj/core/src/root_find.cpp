#include "gfactor/root_find.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gfactor/errors.hpp"
#include "gfactor/numeric_text.hpp"

namespace gfactor {

namespace {

double checked_eval(const std::function<double(double)>& f, double x, int& evaluations) {
  const double value = f(x);
  ++evaluations;
  if (std::isnan(value))
    throw SolverError("objective returned NaN at x = " + format_double(x));
  return value;
}

}  // namespace

RootResult find_root_bracketed(const std::function<double(double)>& f, double x_lo, double x_hi,
                               double x_tol, double f_tol, int max_iterations) {
  if (!(x_tol > 0.0) || !(f_tol >= 0.0))
    throw DomainError("root tolerances must be positive");
  if (!(x_lo < x_hi))
    throw DomainError("bracket [" + format_double(x_lo) + ", " + format_double(x_hi) +
                      "] is empty");

  RootResult result;
  double a = x_lo;
  double b = x_hi;
  double fa = checked_eval(f, a, result.evaluations);
  double fb = checked_eval(f, b, result.evaluations);

  if (fa == 0.0 || fb == 0.0) {
    result.converged = true;
    result.x = fa == 0.0 ? a : b;
    result.f = 0.0;
    result.bracket_width = 0.0;
    return result;
  }
  if ((fa < 0.0) == (fb < 0.0))
    throw SolverError("no sign change across [" + format_double(x_lo) + ", " +
                      format_double(x_hi) + "]");

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;

  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb < 0.0) == (fc < 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }

    const double midpoint_offset = 0.5 * (c - b);
    result.x = b;
    result.f = fb;
    result.bracket_width = std::abs(c - b);
    if (fb == 0.0 || (std::abs(fb) <= f_tol && result.bracket_width <= x_tol)) {
      result.converged = true;
      return result;
    }

    // Minimum meaningful step; kept near machine precision so the bracket
    // can keep shrinking until the residual test above is satisfied.
    const double step_floor =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 1e-300;
    if (std::abs(midpoint_offset) <= step_floor) {
      // Bracket cannot shrink further in double precision.
      return result;
    }

    if (std::abs(e) >= step_floor && std::abs(fa) > std::abs(fb)) {
      // Attempt an interpolation step.
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * midpoint_offset * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * midpoint_offset * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double accept_near = 3.0 * midpoint_offset * q - std::abs(step_floor * q);
      const double accept_slow = std::abs(e * q);
      if (2.0 * p < std::min(accept_near, accept_slow)) {
        e = d;
        d = p / q;
      } else {
        d = midpoint_offset;
        e = d;
      }
    } else {
      d = midpoint_offset;
      e = d;
    }

    a = b;
    fa = fb;
    if (std::abs(d) > step_floor)
      b += d;
    else
      b += midpoint_offset > 0.0 ? step_floor : -step_floor;
    fb = checked_eval(f, b, result.evaluations);
  }

  result.x = b;
  result.f = fb;
  result.bracket_width = std::abs(c - b);
  result.converged = fb == 0.0 || (std::abs(fb) <= f_tol && result.bracket_width <= x_tol);
  return result;
}

}  // namespace gfactor
