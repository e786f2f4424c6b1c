#pragma once

// Brute-force reference implementations for the fast leader and structure
// function code paths. These stay deliberately naive: direct enumeration of
// children_in_3lambda, no shared partial sums.

#include <cmath>
#include <random>

#include "pmfa/dyadic.hpp"
#include "pmfa/leaders.hpp"
#include "pmfa/types.hpp"
#include "pmfa/wavelet.hpp"

namespace oracles {

using namespace pmfa;

inline double brute_sup_leader(const CoefficientField& field, int j, Index k) {
  double best = 0.0;
  for (int jc = j; jc <= field.j_max; ++jc) {
    const KRange range = children_in_3lambda({j, k}, jc);
    for (Index i = 0; i < range.count; ++i) {
      best = std::max(best, std::abs(field.c(jc, range.at(i))));
    }
  }
  return best;
}

inline double brute_p_leader(const CoefficientField& field, int j, Index k, double p) {
  double acc = 0.0;
  for (int jc = j; jc <= field.j_max; ++jc) {
    const KRange range = children_in_3lambda({j, k}, jc);
    const double w = std::exp2(-(jc - j));
    for (Index i = 0; i < range.count; ++i) {
      const double a = std::abs(field.c(jc, range.at(i)));
      if (a > 0.0) acc += std::pow(a, p) * w;
    }
  }
  return acc > 0.0 ? std::pow(acc, 1.0 / p) : 0.0;
}

inline double brute_structure(const LeaderField& lead, double r, int j) {
  double acc = 0.0;
  for (Index k = 0; k < lead.scale_size(j); ++k) {
    if (!lead.is_defined(j, k)) continue;
    acc += std::pow(lead.value(j, k), r);
  }
  return acc * std::exp2(-j);
}

// Does lambda(j_child, k_child) lie inside the tripled interval of
// lambda(j, k) on the circle? Integer arithmetic at resolution 2^-j_child.
inline bool contained_in_3lambda(int j, Index k, int j_child, Index k_child) {
  const Index m = Index(1) << (j_child - j);
  const Index n = Index(1) << j_child;
  const Index lo = (k - 1) * m;  // tripled interval is [lo, lo + 3m) at this resolution
  for (Index t = -1; t <= 1; ++t) {
    const Index shifted = k_child + t * n;
    if (shifted >= lo && shifted + 1 <= lo + 3 * m) return true;
  }
  return false;
}

inline CoefficientField random_field(int j_max, unsigned seed, double zero_fraction = 0.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif;
  CoefficientField field = CoefficientField::zeros(j_max);
  for (int j = 0; j <= j_max; ++j) {
    for (Index k = 0; k < field.scale_size(j); ++k) {
      field.c(j, k) = unif(rng) < zero_fraction ? 0.0 : normal(rng);
    }
  }
  return field;
}

}  // namespace oracles
