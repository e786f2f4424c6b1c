#include "pmfa/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pmfa::generators {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCuspDecay = 6.0;  // polynomial decay order of c_{0,k}

Index uniform_index(std::mt19937_64& rng, Index n) {
  const unsigned long long un = static_cast<unsigned long long>(n);
  const unsigned long long limit = ~0ULL - (~0ULL % un);
  unsigned long long x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<Index>(x % un);
}

std::vector<Index> draw_distinct(std::mt19937_64& rng, Index n, Index count) {
  std::vector<Index> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), Index(0));
  for (Index i = 0; i < count; ++i) {
    std::swap(idx[static_cast<size_t>(i)],
              idx[static_cast<size_t>(i + uniform_index(rng, n - i))]);
  }
  std::vector<Index> out(idx.begin(), idx.begin() + count);
  std::sort(out.begin(), out.end());
  return out;
}

// Integral of the tooth theta = 1_[0,1/4) - 1_[1/4,3/4) + 1_[3/4,1).
double theta_integral(double y) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 0.0;
  if (y <= 0.25) return y;
  if (y <= 0.75) return 0.5 - y;
  return y - 1.0;
}

}  // namespace

Synthesis cusp(double alpha, int J, CuspMode mode, const FilterBank& bank) {
  if (J < 4) {
    throw std::invalid_argument("cusp: J too small");
  }
  const double x0 = 0.5;
  Synthesis out;
  if (mode == CuspMode::coefficients) {
    CoefficientField field = CoefficientField::zeros(J);
    for (int j = 0; j <= J; ++j) {
      const Index n = Index(1) << j;
      const double amp = std::exp2(-alpha * j);
      const double center = x0 * static_cast<double>(n);
      for (Index k = 0; k < n; ++k) {
        double dist = std::abs(static_cast<double>(k) - center);
        dist = std::min(dist, static_cast<double>(n) - dist);
        field.c(j, k) = amp * std::pow(1.0 + dist, -kCuspDecay);
      }
    }
    out.field = std::move(field);
  } else {
    if (!(alpha > -1.0)) {
      throw std::invalid_argument("cusp: time-domain mode requires alpha > -1");
    }
    const bool even_int = alpha >= 0.0 && alpha == std::floor(alpha) &&
                          static_cast<long long>(alpha) % 2 == 0;
    const Index n = Index(1) << J;
    Array signal(n);
    for (Index i = 0; i < n; ++i) {
      const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(n) - x0;
      signal[i] = even_int ? x * std::pow(std::abs(x), alpha - 1.0)
                           : std::pow(std::abs(x), alpha);
    }
    out.field = analyze(signal, bank);
    out.signal = std::move(signal);
  }
  out.truth.generator = "cusp";
  out.truth.x0 = x0;
  out.truth.p_exponent = AffineInQ{alpha, 0.0};
  out.truth.lacunarity = 0.0;
  out.truth.p0 = alpha >= 0.0 ? kInf : -1.0 / alpha;
  out.truth.eta = AffineInP{1.0, alpha};
  out.truth.hmin = alpha;
  return out;
}

Synthesis lacunary_comb(double alpha, double omega, double gamma, int J,
                        const FilterBank& bank) {
  if (!(gamma >= omega && omega > 1.0)) {
    throw std::invalid_argument("lacunary_comb: need gamma >= omega > 1");
  }
  const int teeth = static_cast<int>(std::floor((J - 2) / gamma));
  if (teeth < 4) {
    throw std::invalid_argument("lacunary_comb: J too small to resolve 4 teeth");
  }
  for (int t = 1; t < teeth; ++t) {
    const double next_end = std::exp2(-omega * (t + 1)) + std::exp2(-gamma * (t + 1));
    if (next_end > std::exp2(-omega * t)) {
      throw std::invalid_argument("lacunary_comb: teeth overlap at these parameters");
    }
  }
  const Index n = Index(1) << J;
  const double cell = 1.0 / static_cast<double>(n);
  Array signal = Array::Zero(n);
  for (int t = 1; t <= teeth; ++t) {
    const double amp = std::exp2(-alpha * t);
    const double pos = std::exp2(-omega * t);
    const double scale = std::exp2(gamma * t);  // tooth width 1/scale
    const Index lo = static_cast<Index>(std::floor(pos * n));
    const Index hi = std::min<Index>(n - 1, static_cast<Index>(std::floor((pos + 1.0 / scale) * n)) + 1);
    // Exact cell averages of the piecewise-constant tooth.
    for (Index i = lo; i <= hi; ++i) {
      const double u = theta_integral(scale * (static_cast<double>(i) * cell - pos));
      const double v = theta_integral(scale * (static_cast<double>(i + 1) * cell - pos));
      signal[i] += amp * (v - u) / (scale * cell);
    }
  }
  Synthesis out;
  out.field = analyze(signal, bank);
  out.signal = std::move(signal);
  out.truth.generator = "lacunary_comb";
  out.truth.x0 = 0.0;
  out.truth.p_exponent = AffineInQ{alpha / omega, gamma / omega - 1.0};
  out.truth.lacunarity = gamma / omega - 1.0;
  out.truth.p0 = alpha >= 0.0 ? kInf : -gamma / alpha;
  out.truth.eta = AffineInP{1.0, alpha / gamma};
  out.truth.hmin = alpha / gamma;
  return out;
}

Synthesis thin_chirp(double a, double b, double alpha, int J) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0 - a)) {
    throw std::invalid_argument("thin_chirp: need a in (0,1) and 0 < b < 1 - a");
  }
  CoefficientField field = CoefficientField::zeros(J);
  for (int j = 0; j <= J; ++j) {
    const Index n = Index(1) << j;
    const Index k_lo = static_cast<Index>(std::llround(std::exp2((1.0 - a) * j)));
    const Index count = static_cast<Index>(std::floor(std::exp2(b * j))) + 1;
    const double amp = std::exp2(-alpha * j);
    for (Index k = k_lo; k < k_lo + count && k < n; ++k) {
      field.c(j, k) = amp;
    }
  }
  Synthesis out;
  out.field = std::move(field);
  out.truth.generator = "thin_chirp";
  out.truth.x0 = 0.0;
  out.truth.p_exponent = AffineInQ{alpha / a, (1.0 - a - b) / a};
  out.truth.lacunarity = (1.0 - a - b) / a;
  out.truth.p0 = alpha <= 0.0 ? (1.0 - b) / (-alpha) : kInf;
  out.truth.eta = AffineInP{1.0 - b, alpha};
  out.truth.hmin = alpha;
  return out;
}

Synthesis lacunary_wavelet_series(double alpha, double eta, int J, unsigned long long seed) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw std::invalid_argument("lacunary_wavelet_series: eta must lie in (0,1)");
  }
  std::mt19937_64 rng(seed);
  CoefficientField field = CoefficientField::zeros(J);
  std::vector<std::vector<Index>> locations(static_cast<size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) {
    const Index n = Index(1) << j;
    const Index count = static_cast<Index>(std::floor(std::exp2(eta * j)));
    const double amp = std::exp2(-alpha * j);
    auto picks = draw_distinct(rng, n, count);
    for (Index k : picks) {
      const double sign = (rng() & 1ULL) ? 1.0 : -1.0;
      field.c(j, k) = sign * amp;
    }
    locations[static_cast<size_t>(j)] = std::move(picks);
  }
  Synthesis out;
  out.field = std::move(field);
  out.locations = std::move(locations);
  out.truth.generator = "lacunary_wavelet_series";
  out.truth.p_exponent = AffineInQ{alpha / eta, 1.0 / eta - 1.0};  // a.e. point
  out.truth.lacunarity = 1.0 / eta - 1.0;
  out.truth.p0 = alpha < 0.0 ? (eta - 1.0) / alpha : kInf;
  out.truth.eta = AffineInP{1.0 - eta, alpha};
  out.truth.spectra = LwsSpectra{alpha, eta};
  out.truth.hmin = alpha;
  return out;
}

Synthesis weierstrass(double a, double b, int n_terms, Index n_samples) {
  if (!(a > 0.0 && a < 1.0 && a * b >= 1.0)) {
    throw std::invalid_argument("weierstrass: need 0 < a < 1 and ab >= 1");
  }
  if (n_samples < 16) {
    throw std::invalid_argument("weierstrass: too few samples");
  }
  int terms = 0;
  double pw = 1.0;
  while (terms < n_terms && pw >= 0x1p-52) {
    pw *= a;
    ++terms;
  }
  Array signal(n_samples);
  for (Index i = 0; i < n_samples; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(n_samples);
    const double x = u <= 0.5 ? 2.0 * u : 2.0 * (1.0 - u);
    double s = 0.0;
    double an = 1.0;
    double bn = 1.0;
    for (int t = 0; t < terms; ++t) {
      s += an * std::cos(bn * std::numbers::pi * x);
      an *= a;
      bn *= b;
    }
    signal[i] = s;
  }
  const double H = -std::log(a) / std::log(b);
  Synthesis out;
  out.signal = std::move(signal);
  out.truth.generator = "weierstrass";
  out.truth.x0 = 0.25;
  out.truth.p_exponent = AffineInQ{H, 0.0};
  out.truth.lacunarity = 0.0;
  out.truth.p0 = kInf;
  out.truth.eta = AffineInP{0.0, H};
  out.truth.hmin = H;
  return out;
}

Synthesis white_noise(Index n_samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Array signal(n_samples);
  for (Index i = 0; i < n_samples; ++i) signal[i] = normal(rng);
  Synthesis out;
  out.signal = std::move(signal);
  out.truth.generator = "white_noise";
  out.truth.p0 = 0.0;
  out.truth.eta = AffineInP{0.0, -0.5};
  out.truth.hmin = -0.5;
  return out;
}

namespace {

void spread_cantor(double lo, double len, int depth, double mass, Array& hist) {
  if (depth == 0) {
    const Index n = hist.size();
    const double hi = lo + len;
    Index first = static_cast<Index>(std::floor(lo * n));
    Index last = std::min<Index>(n - 1, static_cast<Index>(std::floor(hi * n)));
    for (Index i = first; i <= last; ++i) {
      const double cl = static_cast<double>(i) / n;
      const double cr = static_cast<double>(i + 1) / n;
      const double overlap = std::min(cr, hi) - std::max(cl, lo);
      if (overlap > 0.0) hist[i] += mass * overlap / len;
    }
    return;
  }
  spread_cantor(lo, len / 3.0, depth - 1, mass / 2.0, hist);
  spread_cantor(lo + 2.0 * len / 3.0, len / 3.0, depth - 1, mass / 2.0, hist);
}

}  // namespace

Synthesis cantor_measure(int J, const FilterBank& bank) {
  if (J < 4 || J > 24) {
    throw std::invalid_argument("cantor_measure: J out of range");
  }
  const int depth = std::min(J, 20);
  const Index n = Index(1) << J;
  Array hist = Array::Zero(n);
  spread_cantor(0.0, 1.0, depth, 1.0, hist);
  Array density = hist * static_cast<double>(n);
  Synthesis out;
  out.field = analyze(density, bank);
  out.signal = std::move(density);
  out.truth.generator = "cantor_measure";
  out.truth.support_dimension = std::log(2.0) / std::log(3.0);
  out.truth.p0 = 1.0;
  return out;
}

Synthesis eta_zero_counterexample(int J) {
  if (J < 4) {
    throw std::invalid_argument("eta_zero_counterexample: J too small");
  }
  CoefficientField field = CoefficientField::zeros(J);
  for (int j = 1; j <= J; ++j) {
    field.detail[static_cast<size_t>(j)].setConstant(1.0 / (static_cast<double>(j) * j));
  }
  Synthesis out;
  out.field = std::move(field);
  out.truth.generator = "eta_zero_counterexample";
  out.truth.eta = AffineInP{0.0, 0.0};
  out.truth.p0 = kInf;
  out.truth.hmin = 0.0;
  return out;
}

}  // namespace pmfa::generators
