#include "pmfa/wavelet.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pmfa {

namespace {

using cplx = std::complex<double>;

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx(0.0, 0.0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

cplx horner(const std::vector<double>& coeff, cplx y) {
  cplx v(0.0, 0.0);
  for (size_t i = coeff.size(); i-- > 0;) v = v * y + coeff[i];
  return v;
}

// Roots of a real polynomial (ascending coefficients) via the companion
// matrix, polished with a few Newton steps.
std::vector<cplx> poly_roots(const std::vector<double>& coeff) {
  const int deg = static_cast<int>(coeff.size()) - 1;
  if (deg < 1) return {};
  Matrix companion = Matrix::Zero(deg, deg);
  for (int i = 0; i < deg; ++i) companion(0, i) = -coeff[deg - 1 - i] / coeff[deg];
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);

  std::vector<double> dcoeff(coeff.size() - 1);
  for (size_t i = 1; i < coeff.size(); ++i) dcoeff[i - 1] = coeff[i] * static_cast<double>(i);

  std::vector<cplx> roots;
  roots.reserve(deg);
  for (int i = 0; i < deg; ++i) {
    cplx r = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const cplx f = horner(coeff, r);
      const cplx df = horner(dcoeff, r);
      if (std::abs(df) == 0.0) break;
      const cplx step = f / df;
      r -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
    }
    roots.push_back(r);
  }
  return roots;
}

double energy_center(const Array& taps) {
  double num = 0.0, den = 0.0;
  for (Index t = 0; t < taps.size(); ++t) {
    num += static_cast<double>(t) * taps[t] * taps[t];
    den += taps[t] * taps[t];
  }
  return num / den;
}

void check_orthonormal(const Array& h) {
  const Index n = h.size();
  for (Index m = 0; 2 * m < n; ++m) {
    double s = 0.0;
    for (Index t = 0; t + 2 * m < n; ++t) s += h[t] * h[t + 2 * m];
    const double target = (m == 0) ? 1.0 : 0.0;
    if (std::abs(s - target) > 1e-10) {
      throw std::runtime_error("filter bank factorization lost orthonormality");
    }
  }
}

// Holder regularity of the Daubechies wavelet per order (tabulated).
constexpr double kDaubechiesRegularity[11] = {
    0.0, 0.0, 0.5500, 1.0878, 1.6179, 1.9690, 2.1891, 2.4604, 2.7608, 3.0736, 3.3614};

int log2_exact(Index n) {
  int j = 0;
  while ((Index(1) << j) < n) ++j;
  if ((Index(1) << j) != n) return -1;
  return j;
}

Index wrap(Index i, Index n) { return ((i % n) + n) % n; }

// Circular shift aligning coefficient k with the dyadic interval lambda(j,k);
// delta = number of pyramid levels below scale j. The effective analysis
// filter is a lowpass cascade with one highpass step on top, so its energy
// center is com_h (1/2 - 2^-delta) + com_g / 2 in units of 2^-j.
Index align_shift(const FilterBank& bank, int delta) {
  const double off = bank.lowpass_center * (0.5 - std::ldexp(1.0, -delta)) +
                     bank.highpass_center * 0.5;
  return static_cast<Index>(std::floor(off));
}

}  // namespace

FilterBank FilterBank::daubechies(int order) {
  if (order < 1 || order > 10) {
    throw std::invalid_argument("daubechies: order must be in 1..10");
  }
  const int N = order;
  Array h;
  if (N == 1) {
    h.resize(2);
    h << 1.0, 1.0;
  } else {
    // P(y) = sum_{k<N} C(N-1+k, k) y^k; its roots give, through
    // z^2 - (2 - 4y) z + 1 = 0, the minimal-phase factor of the half-band
    // product filter.
    std::vector<double> p(N);
    double binom = 1.0;
    for (int k = 0; k < N; ++k) {
      p[k] = binom;
      binom = binom * static_cast<double>(N + k) / static_cast<double>(k + 1);
    }
    std::vector<cplx> q{cplx(1.0, 0.0)};
    for (const cplx& y : poly_roots(p)) {
      const cplx c = 2.0 - 4.0 * y;
      const cplx disc = std::sqrt(c * c - 4.0);
      cplx z = (c + disc) / 2.0;
      if (std::abs(z) > 1.0) z = (c - disc) / 2.0;
      q = poly_mul(q, {-z, cplx(1.0, 0.0)});
    }
    std::vector<cplx> taps = q;
    for (int i = 0; i < N; ++i) taps = poly_mul(taps, {cplx(0.5, 0.0), cplx(0.5, 0.0)});
    h.resize(static_cast<Index>(taps.size()));
    for (size_t i = 0; i < taps.size(); ++i) h[static_cast<Index>(i)] = taps[i].real();
  }
  h *= std::sqrt(2.0) / h.sum();
  check_orthonormal(h);

  FilterBank bank;
  bank.name = "db" + std::to_string(order);
  bank.lowpass = h;
  bank.highpass.resize(h.size());
  const Index L = h.size();
  for (Index t = 0; t < L; ++t) {
    bank.highpass[t] = ((t % 2 == 0) ? 1.0 : -1.0) * h[L - 1 - t];
  }
  bank.vanishing_moments = order;
  bank.regularity_estimate = kDaubechiesRegularity[order];
  bank.lowpass_center = energy_center(bank.lowpass);
  bank.highpass_center = energy_center(bank.highpass);
  return bank;
}

const FilterBank& default_bank() {
  static const FilterBank bank = FilterBank::daubechies(8);
  return bank;
}

CoefficientField CoefficientField::zeros(int j_max) {
  CoefficientField field;
  field.j_max = j_max;
  field.approx = Array::Zero(1);
  field.detail.resize(static_cast<size_t>(j_max) + 1);
  for (int j = 0; j <= j_max; ++j) {
    field.detail[static_cast<size_t>(j)] = Array::Zero(Index(1) << j);
  }
  return field;
}

IntArray CoefficientField::nonzero_counts() const {
  IntArray counts(j_max + 1);
  for (int j = 0; j <= j_max; ++j) {
    counts[j] = (detail[static_cast<size_t>(j)] != 0.0).count();
  }
  return counts;
}

CoefficientField analyze(const Array& signal, const FilterBank& bank) {
  const Index n = signal.size();
  const int J = log2_exact(n);
  if (J < 0 || n < 16) {
    throw std::domain_error("analyze: signal length must be a power of two >= 16");
  }
  const Array& h = bank.lowpass;
  const Array& g = bank.highpass;
  const Index L = h.size();

  CoefficientField field = CoefficientField::zeros(J - 1);
  Array a = signal;
  for (int j = J - 1; j >= 0; --j) {
    const Index m = Index(1) << j;
    const Index nin = 2 * m;
    Array anext(m), d(m);
    for (Index k = 0; k < m; ++k) {
      double sl = 0.0, sh = 0.0;
      for (Index t = 0; t < L; ++t) {
        const double v = a[wrap(2 * k + t, nin)];
        sl += h[t] * v;
        sh += g[t] * v;
      }
      anext[k] = sl;
      d[k] = sh;
    }
    const double scale = std::exp2(0.5 * (j - J));
    const Index shift = align_shift(bank, J - j);
    Array& out = field.detail[static_cast<size_t>(j)];
    for (Index k = 0; k < m; ++k) out[wrap(k + shift, m)] = d[k] * scale;
    a.swap(anext);
  }
  field.approx = a * std::exp2(-0.5 * J);
  return field;
}

Array synthesize(const CoefficientField& field, const FilterBank& bank) {
  if (field.normalization != Normalization::pointwise) {
    throw std::invalid_argument("synthesize: field must use the pointwise normalization");
  }
  const int J = field.j_max + 1;
  const Array& h = bank.lowpass;
  const Array& g = bank.highpass;
  const Index L = h.size();

  Array a = field.approx * std::exp2(0.5 * J);
  for (int j = 0; j < J; ++j) {
    const Index m = Index(1) << j;
    const Index nout = 2 * m;
    const double scale = std::exp2(0.5 * (J - j));
    const Index shift = align_shift(bank, J - j);
    const Array& stored = field.detail[static_cast<size_t>(j)];
    Array d(m);
    for (Index k = 0; k < m; ++k) d[k] = stored[wrap(k + shift, m)] * scale;

    Array up = Array::Zero(nout);
    for (Index k = 0; k < m; ++k) {
      for (Index t = 0; t < L; ++t) {
        up[wrap(2 * k + t, nout)] += h[t] * a[k] + g[t] * d[k];
      }
    }
    a.swap(up);
  }
  return a;
}

}  // namespace pmfa
