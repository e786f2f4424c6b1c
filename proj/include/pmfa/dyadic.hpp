#pragma once

#include <cmath>
#include <stdexcept>

#include "pmfa/types.hpp"

namespace pmfa {

/// Dyadic interval lambda(j,k) = [k 2^-j, (k+1) 2^-j) on the periodic unit
/// interval. Scale j >= 0, position 0 <= k < 2^j.
struct DyadicIndex {
  int j;
  Index k;

  friend bool operator==(const DyadicIndex&, const DyadicIndex&) = default;
};

inline Index scale_count(int j) { return Index(1) << j; }

/// Dyadic interval of width 2^-j containing x0.
inline DyadicIndex locate(double x0, int j) {
  if (!(x0 >= 0.0 && x0 < 1.0)) {
    throw std::domain_error("locate: x0 must lie in [0, 1)");
  }
  if (j < 0) {
    throw std::domain_error("locate: scale must be nonnegative");
  }
  Index k = static_cast<Index>(std::floor(std::ldexp(x0, j)));
  if (k >= scale_count(j)) k = scale_count(j) - 1;  // x0 just below 1 at coarse j
  return {j, k};
}

/// Contiguous run of positions at one scale, modulo the periodic wrap.
/// Iterates k = (begin + i) mod modulus for i in [0, count).
struct KRange {
  Index begin;
  Index count;
  Index modulus;

  Index at(Index i) const { return ((begin + i) % modulus + modulus) % modulus; }
  bool collapsed() const { return count == modulus; }
};

/// Positions k' at scale j_child whose intervals are contained in 3*lambda,
/// the tripled parent interval, under the periodic topology. When the tripled
/// interval covers the whole circle the range collapses to one full turn.
inline KRange children_in_3lambda(DyadicIndex parent, int j_child) {
  if (j_child < parent.j) {
    throw std::domain_error("children_in_3lambda: j_child must be >= parent scale");
  }
  const Index m = Index(1) << (j_child - parent.j);
  const Index n = scale_count(j_child);
  const Index span = 3 * m;
  if (span >= n) return {0, n, n};
  return {(parent.k - 1) * m, span, n};
}

}  // namespace pmfa
