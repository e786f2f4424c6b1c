#pragma once

#include <vector>

#include "pmfa/leaders.hpp"
#include "pmfa/regression.hpp"
#include "pmfa/types.hpp"
#include "pmfa/wavelet.hpp"

namespace pmfa {

struct Estimate {
  double value = 0.0;
  RegressionFit fit;
};

/// Samples of a scaling function (eta(p) or zeta(r)) on a moment grid, one
/// log-log regression per grid point.
struct ScalingFunction {
  Array grid;
  Array values;
  std::vector<RegressionFit> fits;

  /// Largest violation of discrete concavity along the grid (0 if concave).
  double max_concavity_violation() const { return concavity_violation(grid, values); }
};

/// Bracket for the critical Lebesgue index from the sign changes of eta(p).
/// Both ends coincide when the estimate crosses zero transversally.
struct P0Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// Default fit range [3, j_max - 2].
JRange default_j_range(int j_max);
inline JRange default_j_range(const CoefficientField& field) {
  return default_j_range(field.j_max);
}

/// Uniform Holder exponent: slope of log2 sup_k |c_{j,k}| against -j.
/// Scales that are identically zero are skipped; fewer than three usable
/// scales raise estimation_error.
Estimate estimate_hmin(const CoefficientField& field, JRange jr);

/// eta(p): per-p slope of log2(2^-j sum_k |c_{j,k}|^p) against -j.
ScalingFunction wavelet_scaling_function(const CoefficientField& field, const Array& p_grid,
                                         JRange jr);

/// Bracketing pair for p0 from an eta(p) sample; (grid_max, +inf) when eta
/// stays positive, (0, grid_min) when it is negative on the whole grid.
P0Bracket critical_lebesgue_index(const ScalingFunction& sf);

/// Soft diagnostic: largest increase of eta(p)/p along the grid. The exact
/// scaling function has p -> eta(p)/p nonincreasing; a sizable positive
/// value flags an untrustworthy fit, it is not an error.
double eta_over_p_increase(const ScalingFunction& sf);

/// Pointwise exponent from the leader decay along the dyadic path above x0.
/// Callers pick the leader kind; p-leader estimates are only meaningful
/// where eta(p) > 0.
Estimate pointwise_p_exponent(const LeaderField& lead, double x0, JRange jr);

/// h(q) = estimated 1/q-exponent at x0 per grid point; q = 0 uses wavelet
/// leaders. The mapping q -> h(q) is concave for exact exponents.
struct ExponentCurve {
  Array q;
  Array h;
  std::vector<RegressionFit> fits;

  double max_concavity_violation() const { return concavity_violation(q, h); }
};

ExponentCurve p_exponent_curve(const CoefficientField& field, double x0, const Array& q_grid,
                               JRange jr);

/// Lacunarity exponent at x0: decay of the L-leaders built at q0 (+ margin
/// when p0 is finite) with increment dq.
Estimate pointwise_lacunarity(const CoefficientField& field, double x0, double q0, double dq,
                              JRange jr);

/// Margin added above a finite q0 before taking the right derivative.
inline constexpr double kQ0Margin = 0.05;

}  // namespace pmfa
