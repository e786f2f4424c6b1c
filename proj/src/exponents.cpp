#include "pmfa/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pmfa/dyadic.hpp"

namespace pmfa {

namespace {

void check_range(JRange jr, int j_max) {
  if (jr.j1 < 0 || jr.j2 > j_max || jr.j1 >= jr.j2) {
    throw std::invalid_argument("invalid scale range for this field");
  }
}

void check_pointwise(const CoefficientField& field) {
  if (field.normalization != Normalization::pointwise) {
    throw std::invalid_argument("estimators require the pointwise normalization");
  }
}

// log2 of sum_k |c_k|^p with the largest magnitude factored out, so that
// extreme exponents neither overflow nor underflow.
double log2_power_sum(const Array& c, double p, Index* used) {
  double amax = 0.0;
  for (Index k = 0; k < c.size(); ++k) amax = std::max(amax, std::abs(c[k]));
  if (used) *used = 0;
  if (amax == 0.0) return -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  Index cnt = 0;
  for (Index k = 0; k < c.size(); ++k) {
    const double a = std::abs(c[k]);
    if (a == 0.0) continue;
    acc += std::pow(a / amax, p);
    ++cnt;
  }
  if (used) *used = cnt;
  return p * std::log2(amax) + std::log2(acc);
}

}  // namespace

JRange default_j_range(int j_max) { return {3, j_max - 2}; }

Estimate estimate_hmin(const CoefficientField& field, JRange jr) {
  check_pointwise(field);
  check_range(jr, field.j_max);
  std::vector<double> xs, ys;
  for (int j = jr.j1; j <= jr.j2; ++j) {
    const double sup = field.detail[static_cast<size_t>(j)].abs().maxCoeff();
    if (sup <= 0.0) continue;
    xs.push_back(-static_cast<double>(j));
    ys.push_back(std::log2(sup));
  }
  if (xs.size() < 3) {
    throw estimation_error("estimate_hmin: fewer than 3 nonzero scales in range");
  }
  RegressionFit fit = ols_fit(xs, ys, jr.j1, jr.j2);
  return {fit.slope, fit};
}

ScalingFunction wavelet_scaling_function(const CoefficientField& field, const Array& p_grid,
                                         JRange jr) {
  check_pointwise(field);
  check_range(jr, field.j_max);
  for (Index i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > 0.0)) {
      throw std::invalid_argument("wavelet_scaling_function: p grid must be positive");
    }
  }
  ScalingFunction sf;
  sf.grid = p_grid;
  sf.values.resize(p_grid.size());
  sf.fits.resize(static_cast<size_t>(p_grid.size()));
  for (Index i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    std::vector<double> xs, ys;
    for (int j = jr.j1; j <= jr.j2; ++j) {
      Index used = 0;
      const double ls = log2_power_sum(field.detail[static_cast<size_t>(j)], p, &used);
      if (used == 0) continue;
      xs.push_back(-static_cast<double>(j));
      ys.push_back(ls - static_cast<double>(j));
    }
    if (xs.size() < 3) {
      throw estimation_error("wavelet_scaling_function: fewer than 3 nonzero scales");
    }
    RegressionFit fit = ols_fit(xs, ys, jr.j1, jr.j2);
    sf.values[i] = fit.slope;
    sf.fits[static_cast<size_t>(i)] = fit;
  }
  return sf;
}

P0Bracket critical_lebesgue_index(const ScalingFunction& sf) {
  const Index n = sf.grid.size();
  if (n < 2) {
    throw std::invalid_argument("critical_lebesgue_index: grid too small");
  }
  const double inf = std::numeric_limits<double>::infinity();
  double lower = 0.0;
  bool any_pos = false, any_neg = false;
  for (Index i = 0; i < n; ++i) {
    if (sf.values[i] > 0.0) {
      any_pos = true;
      lower = std::max(lower, sf.grid[i]);
    }
    if (sf.values[i] < 0.0) any_neg = true;
  }
  if (!any_neg) return {sf.grid[n - 1], inf};
  if (!any_pos) return {0.0, sf.grid[0]};
  // First transversal crossing after the last positive value.
  for (Index i = 0; i + 1 < n; ++i) {
    if (sf.values[i] > 0.0 && sf.values[i + 1] <= 0.0) {
      const double root = sf.grid[i] + (sf.grid[i + 1] - sf.grid[i]) * sf.values[i] /
                                           (sf.values[i] - sf.values[i + 1]);
      if (sf.grid[i] >= lower - 1e-12) return {root, root};
    }
  }
  return {lower, lower};
}

double eta_over_p_increase(const ScalingFunction& sf) {
  double worst = 0.0;
  for (Index i = 0; i + 1 < sf.grid.size(); ++i) {
    worst = std::max(worst, sf.values[i + 1] / sf.grid[i + 1] - sf.values[i] / sf.grid[i]);
  }
  return worst;
}

Estimate pointwise_p_exponent(const LeaderField& lead, double x0, JRange jr) {
  check_range(jr, lead.j_max);
  std::vector<double> xs, ys;
  for (int j = jr.j1; j <= jr.j2; ++j) {
    const Index k = locate(x0, j).k;
    if (!lead.is_defined(j, k)) continue;
    xs.push_back(-static_cast<double>(j));
    ys.push_back(std::log2(lead.value(j, k)));
  }
  if (xs.size() < 3) {
    throw estimation_error("pointwise_p_exponent: fewer than 3 defined leaders on the path");
  }
  RegressionFit fit = ols_fit(xs, ys, jr.j1, jr.j2);
  return {fit.slope, fit};
}

ExponentCurve p_exponent_curve(const CoefficientField& field, double x0, const Array& q_grid,
                               JRange jr) {
  check_pointwise(field);
  ExponentCurve curve;
  curve.q = q_grid;
  curve.h.resize(q_grid.size());
  curve.fits.resize(static_cast<size_t>(q_grid.size()));
  for (Index i = 0; i < q_grid.size(); ++i) {
    const double q = q_grid[i];
    if (q < 0.0) {
      throw std::invalid_argument("p_exponent_curve: q must be nonnegative");
    }
    const LeaderField lead = (q == 0.0) ? wavelet_leaders(field) : p_leaders(field, 1.0 / q);
    const Estimate est = pointwise_p_exponent(lead, x0, jr);
    curve.h[i] = est.value;
    curve.fits[static_cast<size_t>(i)] = est.fit;
  }
  return curve;
}

Estimate pointwise_lacunarity(const CoefficientField& field, double x0, double q0, double dq,
                              JRange jr) {
  check_pointwise(field);
  if (!(dq > 0.0)) {
    throw std::domain_error("pointwise_lacunarity: dq must be positive");
  }
  const double q = (q0 > 0.0) ? q0 + kQ0Margin : 0.0;
  const LeaderField lead = l_leaders(field, q, dq);
  return pointwise_p_exponent(lead, x0, jr);
}

}  // namespace pmfa
