#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pmfa/types.hpp"
#include "pmfa/wavelet.hpp"

namespace pmfa::generators {

/// Affine map q -> intercept + slope * q (q = 1/p).
struct AffineInQ {
  double intercept = 0.0;
  double slope = 0.0;
  double operator()(double q) const { return intercept + slope * q; }
};

/// Affine map p -> intercept + slope * p.
struct AffineInP {
  double intercept = 0.0;
  double slope = 0.0;
  double operator()(double p) const { return intercept + slope * p; }
};

/// Closed-form multifractal spectra of a lacunary wavelet series.
struct LwsSpectra {
  double alpha = 0.0;
  double eta = 0.0;

  double h_max(double p) const { return alpha / eta + (1.0 / eta - 1.0) / p; }
  double d_p(double H, double p) const { return eta * (H + 1.0 / p) / (alpha + 1.0 / p); }
  double d_lacunarity(double L) const { return eta * (L + 1.0); }
  double l_max() const { return 1.0 / eta - 1.0; }
};

/// Machine-readable theory attached to each synthesized signal: exponents at
/// the singular point as a function of q = 1/p, the critical Lebesgue index,
/// the wavelet scaling function, and spectra where known in closed form.
struct GroundTruth {
  std::string generator;
  std::optional<double> x0;
  std::optional<AffineInQ> p_exponent;  // q -> h^{1/q}(x0)
  std::optional<double> lacunarity;     // at x0
  double p0 = std::numeric_limits<double>::infinity();
  std::optional<AffineInP> eta;
  std::optional<double> support_dimension;  // upper box dimension of supp(mu)
  std::optional<LwsSpectra> spectra;
  std::optional<double> hmin;
};

/// Generator output: the natural representation(s) of the signal plus its
/// ground truth. `locations` holds the drawn nonzero positions per scale for
/// the random series (diagnostics).
struct Synthesis {
  std::optional<Array> signal;
  std::optional<CoefficientField> field;
  GroundTruth truth;
  std::vector<std::vector<Index>> locations;
};

enum class CuspMode { time, coefficients };

/// |x - 1/2|^alpha (time mode, alpha > -1, grid offset by half a sample) or
/// the self-similar coefficient model c_{j,k} = 2^{-alpha j} c_{0,k} with
/// rapidly decaying c_{0,k} (any alpha). Nonnegative even integers in time
/// mode use the odd-signed variant x|x|^{alpha-1}.
Synthesis cusp(double alpha, int J, CuspMode mode, const FilterBank& bank = default_bank());

/// Comb of teeth theta(2^{gamma j}(x - 2^{-omega j})) with amplitudes
/// 2^{-alpha j}; gamma >= omega > 1. Built in the time domain from the
/// two-vanishing-moment Haar-derived tooth, then analyzed.
Synthesis lacunary_comb(double alpha, double omega, double gamma, int J,
                        const FilterBank& bank = default_bank());

/// Wavelet series with c_{j,k} = 2^{-alpha j} on k in
/// [2^{(1-a)j}, 2^{(1-a)j} + 2^{bj}], zero elsewhere; 0 < b < 1 - a.
Synthesis thin_chirp(double a, double b, double alpha, int J);

/// Random series with exactly floor(2^{eta j}) coefficients of size
/// 2^{-alpha j} per scale at distinct uniform positions, eta in (0,1).
Synthesis lacunary_wavelet_series(double alpha, double eta, int J, unsigned long long seed);

/// sum a^n cos(b^n pi x) with ab > 1, sampled through the even reflection of
/// [0,1] so the periodization stays continuous; truncated once a^n is below
/// double resolution.
Synthesis weierstrass(double a, double b, int n_terms, Index n_samples);

/// I.i.d. standard normal samples.
Synthesis white_noise(Index n_samples, unsigned long long seed);

/// Middle-third Cantor measure realized as a density histogram on the 2^J
/// grid (exact ternary-interval intersection), then analyzed.
Synthesis cantor_measure(int J, const FilterBank& bank = default_bank());

/// Every detail coefficient at scale j >= 1 equal to 1/j^2: a continuous
/// function whose wavelet scaling function vanishes identically.
Synthesis eta_zero_counterexample(int J);

}  // namespace pmfa::generators
