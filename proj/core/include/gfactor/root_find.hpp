#pragma once

#include <functional>

namespace gfactor {

struct RootResult {
  /// Best root estimate and the function value there.
  double x = 0.0;
  double f = 0.0;
  /// Width of the final sign-change bracket around x.
  double bracket_width = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Bracketed scalar root search: inverse-quadratic and secant steps with a
/// bisection fallback, so progress never stalls. Requires f(x_lo) and
/// f(x_hi) on opposite sides of zero (SolverError otherwise). Converged
/// means |f| <= f_tol and the bracket has shrunk to at most x_tol; an exact
/// zero converges immediately.
RootResult find_root_bracketed(const std::function<double(double)>& f, double x_lo, double x_hi,
                               double x_tol, double f_tol, int max_iterations = 128);

}  // namespace gfactor
