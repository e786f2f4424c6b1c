#include "pmfa/mfa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pmfa {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

Array grid_range(double a, double b, double step) {
  if (!(step > 0.0) || b < a) {
    throw std::invalid_argument("grid_range: need step > 0 and b >= a");
  }
  const Index n = static_cast<Index>(std::floor((b - a) / step + 0.5)) + 1;
  Array g(n);
  for (Index i = 0; i < n; ++i) g[i] = a + step * static_cast<double>(i);
  return g;
}

StructureFunctions structure_functions(const LeaderField& lead, const Array& r_grid,
                                       ZeroPolicy policy) {
  if (r_grid.size() == 0) {
    throw std::invalid_argument("structure_functions: empty moment grid");
  }
  StructureFunctions s;
  s.r_grid = r_grid;
  s.j_max = lead.j_max;
  s.policy = policy;
  s.counts = IntArray::Zero(lead.j_max + 1);
  s.log_s.setConstant(r_grid.size(), lead.j_max + 1, kNaN);

  Index total_usable = 0;
  for (int j = 0; j <= lead.j_max; ++j) {
    const Array& v = lead.values[static_cast<size_t>(j)];
    const BoolArray& def = lead.defined[static_cast<size_t>(j)];
    Index cnt = 0;
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = 0.0;
    for (Index k = 0; k < v.size(); ++k) {
      if (!def[k]) {
        if (policy == ZeroPolicy::strict) {
          throw estimation_error("structure_functions: undefined leader under strict policy");
        }
        continue;
      }
      ++cnt;
      vmin = std::min(vmin, v[k]);
      vmax = std::max(vmax, v[k]);
    }
    s.counts[j] = cnt;
    total_usable += cnt;
    if (cnt == 0) continue;
    for (Index i = 0; i < r_grid.size(); ++i) {
      const double r = r_grid[i];
      // Factor out the extreme leader so e^r never overflows.
      const double ref = (r >= 0.0) ? vmax : vmin;
      double acc = 0.0;
      for (Index k = 0; k < v.size(); ++k) {
        if (!def[k]) continue;
        acc += std::pow(v[k] / ref, r);
      }
      s.log_s(i, j) = r * std::log2(ref) + std::log2(acc) - static_cast<double>(j);
    }
  }
  if (total_usable == 0) {
    throw estimation_error("structure_functions: no usable leader at any scale");
  }
  return s;
}

ScalingFunction scaling_function(const StructureFunctions& s, JRange jr) {
  if (jr.j1 < 0 || jr.j2 > s.j_max || jr.j1 >= jr.j2) {
    throw std::invalid_argument("scaling_function: invalid scale range");
  }
  ScalingFunction sf;
  sf.grid = s.r_grid;
  sf.values.resize(s.r_grid.size());
  sf.fits.resize(static_cast<size_t>(s.r_grid.size()));
  for (Index i = 0; i < s.r_grid.size(); ++i) {
    std::vector<double> xs, ys;
    for (int j = jr.j1; j <= jr.j2; ++j) {
      if (s.counts[j] == 0) continue;
      xs.push_back(-static_cast<double>(j));
      ys.push_back(s.log_s(i, j));
    }
    if (xs.size() < 3) {
      throw estimation_error("scaling_function: fewer than 3 usable scales in range");
    }
    RegressionFit fit = ols_fit(xs, ys, jr.j1, jr.j2);
    sf.values[i] = fit.slope;
    sf.fits[static_cast<size_t>(i)] = fit;
  }
  return sf;
}

double Spectrum::support_lo() const {
  for (Index i = 0; i < h_grid.size(); ++i) {
    if (interior[i]) return h_grid[i];
  }
  return kNaN;
}

double Spectrum::support_hi() const {
  for (Index i = h_grid.size(); i-- > 0;) {
    if (interior[i]) return h_grid[i];
  }
  return kNaN;
}

double Spectrum::value_near(double H) const {
  Index best = -1;
  double dist = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < h_grid.size(); ++i) {
    if (!interior[i]) continue;
    const double e = std::abs(h_grid[i] - H);
    if (e < dist) {
      dist = e;
      best = i;
    }
  }
  return best < 0 ? kNaN : d[best];
}

std::pair<double, double> Spectrum::mode() const {
  Index best = -1;
  double dmax = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < h_grid.size(); ++i) {
    if (!interior[i]) continue;
    if (d[i] > dmax) {
      dmax = d[i];
      best = i;
    }
  }
  if (best < 0) return {kNaN, kNaN};
  return {h_grid[best], d[best]};
}

Spectrum legendre_spectrum(const ScalingFunction& zeta, const Array& h_grid) {
  const Index nr = zeta.grid.size();
  if (nr < 3) {
    throw std::invalid_argument("legendre_spectrum: need at least 3 moments");
  }
  Spectrum spec;
  spec.h_grid = h_grid;
  spec.d.resize(h_grid.size());
  spec.r_of_h.resize(h_grid.size());
  spec.interior = BoolArray::Constant(h_grid.size(), false);
  for (Index i = 0; i < h_grid.size(); ++i) {
    const double H = h_grid[i];
    double best = std::numeric_limits<double>::infinity();
    Index arg = 0;
    for (Index r = 0; r < nr; ++r) {
      if (std::isnan(zeta.values[r])) continue;
      const double v = 1.0 - zeta.values[r] + H * zeta.grid[r];
      if (v < best) {
        best = v;
        arg = r;
      }
    }
    // A boundary argmin with an interior tie still counts as interior;
    // exact ties arise for monofractal (linear) scaling functions.
    bool interior = (arg > 0 && arg + 1 < nr);
    if (!interior) {
      const double tie = 1e-12 * (1.0 + std::abs(best));
      for (Index r = 1; r + 1 < nr && !interior; ++r) {
        if (std::isnan(zeta.values[r])) continue;
        const double v = 1.0 - zeta.values[r] + H * zeta.grid[r];
        if (v <= best + tie) {
          interior = true;
          arg = r;
        }
      }
    }
    spec.d[i] = best;
    spec.r_of_h[i] = zeta.grid[arg];
    spec.interior[i] = interior;
  }
  return spec;
}

Spectrum p_spectrum(const CoefficientField& field, double p, const Array& r_grid,
                    const Array& h_grid, JRange jr) {
  if (!(p > 0.0)) {
    throw std::domain_error("p_spectrum: p must be positive");
  }
  const LeaderField lead = std::isinf(p) ? wavelet_leaders(field) : p_leaders(field, p);
  const StructureFunctions s = structure_functions(lead, r_grid);
  Spectrum spec = legendre_spectrum(scaling_function(s, jr), h_grid);
  if (!std::isinf(p)) {
    Array pg(1);
    pg[0] = p;
    const ScalingFunction eta = wavelet_scaling_function(field, pg, jr);
    if (!(eta.values[0] > 0.0)) {
      spec.note = "eta(p) <= 0: p-exponents are not certified at this p";
    }
  }
  return spec;
}

Spectrum lacunarity_spectrum(const CoefficientField& field, double q0, double dq,
                             const Array& r_grid, const Array& h_grid, JRange jr) {
  const double q = (q0 > 0.0) ? q0 + kQ0Margin : 0.0;
  const LeaderField lead = l_leaders(field, q, dq);
  const StructureFunctions s = structure_functions(lead, r_grid);
  return legendre_spectrum(scaling_function(s, jr), h_grid);
}

}  // namespace pmfa
