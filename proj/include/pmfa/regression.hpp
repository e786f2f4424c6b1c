#pragma once

#include <stdexcept>
#include <vector>

#include "pmfa/types.hpp"

namespace pmfa {

/// Raised when an estimator cannot produce a meaningful fit (all-zero
/// scales, fewer than three usable points, undefined leaders on a path).
class estimation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordinary least-squares line through (x_i, y_i). Slopes of log2 quantities
/// against -j realize every liminf-style exponent in this library.
struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  int j1 = 0;
  int j2 = 0;
  int points_used = 0;
};

inline RegressionFit ols_fit(const std::vector<double>& x, const std::vector<double>& y,
                             int j1, int j2) {
  const int n = static_cast<int>(x.size());
  if (n < 3) {
    throw estimation_error("regression needs at least 3 usable scales");
  }
  double xm = 0.0, ym = 0.0;
  for (int i = 0; i < n; ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  if (sxx == 0.0) {
    throw estimation_error("regression abscissae are degenerate");
  }
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.j1 = j1;
  fit.j2 = j2;
  fit.points_used = n;
  return fit;
}

/// Largest increase between consecutive chord slopes of (grid, values);
/// <= 0 for a concave sample, positive where concavity is violated.
inline double concavity_violation(const Array& grid, const Array& values) {
  double worst = 0.0;
  for (Index i = 0; i + 2 < grid.size(); ++i) {
    const double s0 = (values[i + 1] - values[i]) / (grid[i + 1] - grid[i]);
    const double s1 = (values[i + 2] - values[i + 1]) / (grid[i + 2] - grid[i + 1]);
    worst = std::max(worst, s1 - s0);
  }
  return worst;
}

}  // namespace pmfa
