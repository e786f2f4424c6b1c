#pragma once

#include <string>
#include <vector>

#include "pmfa/types.hpp"

namespace pmfa {

/// Coefficient convention stored in a field. `pointwise` is the convention
/// c_{j,k} = 2^j <psi(2^j . - k), f> in which |c_{j,k}| ~ 2^{-hj} encodes a
/// pointwise regularity h; `l2` is the orthonormal-basis convention.
enum class Normalization { pointwise, l2 };

/// Orthonormal two-channel filter bank with a known number of vanishing
/// moments. `regularity_estimate` is the uniform Holder regularity of the
/// underlying wavelet, used to check admissibility against the exponents
/// being measured.
struct FilterBank {
  std::string name;
  Array lowpass;
  Array highpass;
  int vanishing_moments = 0;
  double regularity_estimate = 0.0;

  // Energy centers of the filters, used to align coefficient indices with
  // dyadic positions during analysis.
  double lowpass_center = 0.0;
  double highpass_center = 0.0;

  /// Daubechies family, `order` vanishing moments in 1..10 (order 1 is Haar).
  /// Taps are computed by spectral factorization and verified orthonormal.
  static FilterBank daubechies(int order);
};

/// The bank used by generators and the CLI when none is specified.
const FilterBank& default_bank();

/// Wavelet coefficients c_{j,k} on the periodic unit interval, detail scales
/// 0..j_max with 2^j entries each, plus the single coarse scaling coefficient.
struct CoefficientField {
  int j_max = 0;
  Array approx;
  std::vector<Array> detail;
  Normalization normalization = Normalization::pointwise;

  static CoefficientField zeros(int j_max);

  Index scale_size(int j) const { return Index(1) << j; }
  double& c(int j, Index k) { return detail[static_cast<size_t>(j)][k]; }
  double c(int j, Index k) const { return detail[static_cast<size_t>(j)][k]; }

  /// Nonzero detail coefficients per scale (sparsity bookkeeping).
  IntArray nonzero_counts() const;
};

/// Periodic pyramid decomposition of a power-of-two signal (length >= 16)
/// into a pointwise-normalized CoefficientField with j_max = log2(n) - 1.
/// Per-scale indices are circularly shifted so that c_{j,k} is centered on
/// the dyadic interval [k 2^-j, (k+1) 2^-j).
CoefficientField analyze(const Array& signal, const FilterBank& bank);

/// Exact inverse of analyze (adjoint pyramid); returns 2^(j_max+1) samples.
Array synthesize(const CoefficientField& field, const FilterBank& bank);

}  // namespace pmfa
