#pragma once

#include <limits>
#include <vector>

#include "pmfa/types.hpp"
#include "pmfa/wavelet.hpp"

namespace pmfa {

enum class LeaderKind { sup, p, l };

/// Per-interval multiresolution quantities e_lambda >= 0 feeding the
/// regressions: wavelet leaders (sup of |c| over the tree under 3*lambda),
/// p-leaders (depth-weighted local l^p norms), or their L-leader ratios.
/// Entries with no usable coefficient below 3*lambda are marked undefined
/// and excluded from log-log fits.
struct LeaderField {
  LeaderKind kind = LeaderKind::sup;
  double p = std::numeric_limits<double>::infinity();
  double q = 0.0;
  double dq = 0.0;
  int j_max = 0;
  std::vector<Array> values;
  std::vector<BoolArray> defined;

  Index scale_size(int j) const { return Index(1) << j; }
  double value(int j, Index k) const { return values[static_cast<size_t>(j)][k]; }
  bool is_defined(int j, Index k) const { return defined[static_cast<size_t>(j)][k]; }
};

/// d_lambda = sup |c_lambda'| over lambda' in 3*lambda, down to the finest
/// stored scale.
LeaderField wavelet_leaders(const CoefficientField& field);

/// d^p_lambda = (sum over lambda' in 3*lambda of |c|^p 2^{-(j'-j)})^{1/p}.
/// p <= 1 realizes the Hardy-space extension numerically.
LeaderField p_leaders(const CoefficientField& field, double p);

/// L-leaders (d^{1/(q+dq)} / d^{1/q})^{1/dq}; q = 0 uses wavelet leaders
/// for the denominator. Undefined wherever either constituent is.
LeaderField l_leaders(const CoefficientField& field, double q, double dq);

}  // namespace pmfa
