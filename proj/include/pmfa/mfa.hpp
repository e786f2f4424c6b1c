#pragma once

#include <string>

#include "pmfa/exponents.hpp"
#include "pmfa/leaders.hpp"
#include "pmfa/types.hpp"

namespace pmfa {

enum class ZeroPolicy { exclude_undefined, strict };

/// Structure functions S(r,j) = 2^-j sum over usable leaders of e^r, stored
/// as log2 S over the (r, j) grid with the usable-leader count per scale.
/// Scales with no usable leader are masked (NaN row entries).
struct StructureFunctions {
  Array r_grid;
  Matrix log_s;      // rows: r grid, cols: scales 0..j_max
  IntArray counts;   // usable leaders per scale
  int j_max = 0;
  ZeroPolicy policy = ZeroPolicy::exclude_undefined;
};

StructureFunctions structure_functions(const LeaderField& lead, const Array& r_grid,
                                       ZeroPolicy policy = ZeroPolicy::exclude_undefined);

/// zeta(r): per-r slope of log2 S(r,j) against -j over unmasked scales.
ScalingFunction scaling_function(const StructureFunctions& s, JRange jr);

/// Discrete Legendre transform d(H) = inf_r (1 - zeta(r) + H r). Points whose
/// infimum is attained at the r-grid boundary are flagged non-interior: there
/// the true infimum over all of R is unbounded below and the value is only an
/// extrapolation.
struct Spectrum {
  Array h_grid;
  Array d;
  Array r_of_h;
  BoolArray interior;
  std::string note;

  double support_lo() const;
  double support_hi() const;
  /// d at the supported grid point closest to H; NaN when nothing is supported.
  double value_near(double H) const;
  /// (H, d) at the supported maximum of d.
  std::pair<double, double> mode() const;
};

Spectrum legendre_spectrum(const ScalingFunction& zeta, const Array& h_grid);

/// Full p-leader pipeline: leaders -> structure functions -> zeta -> Legendre.
/// p may be +inf (wavelet leaders). Appends a note when eta(p) <= 0, i.e.
/// when the p-exponents being probed are not certified to exist.
Spectrum p_spectrum(const CoefficientField& field, double p, const Array& r_grid,
                    const Array& h_grid, JRange jr);

/// Same pipeline over L-leaders at (q0 [+ margin when q0 > 0], dq).
Spectrum lacunarity_spectrum(const CoefficientField& field, double q0, double dq,
                             const Array& r_grid, const Array& h_grid, JRange jr);

/// Inclusive uniform grid a, a+step, ..., b.
Array grid_range(double a, double b, double step);

}  // namespace pmfa
