#include "pmfa/leaders.hpp"

#include <cmath>
#include <stdexcept>

namespace pmfa {

namespace {

LeaderField empty_like(const CoefficientField& field) {
  LeaderField lead;
  lead.j_max = field.j_max;
  lead.values.resize(static_cast<size_t>(field.j_max) + 1);
  lead.defined.resize(static_cast<size_t>(field.j_max) + 1);
  for (int j = 0; j <= field.j_max; ++j) {
    lead.values[static_cast<size_t>(j)] = Array::Zero(Index(1) << j);
    lead.defined[static_cast<size_t>(j)] = BoolArray::Constant(Index(1) << j, false);
  }
  return lead;
}

// Distinct wrapped neighbors {k-1, k, k+1}; at the coarsest scales the
// tripled interval covers the circle and neighbors collapse.
int neighbor_set(Index k, Index n, Index out[3]) {
  int cnt = 0;
  const Index cand[3] = {(k - 1 + n) % n, k, (k + 1) % n};
  for (Index c : cand) {
    bool dup = false;
    for (int i = 0; i < cnt; ++i) dup |= (out[i] == c);
    if (!dup) out[cnt++] = c;
  }
  return cnt;
}

}  // namespace

LeaderField wavelet_leaders(const CoefficientField& field) {
  LeaderField lead = empty_like(field);
  lead.kind = LeaderKind::sup;

  // Bottom-up subtree maxima, then the 3-neighbor max per interval.
  std::vector<Array> subtree(static_cast<size_t>(field.j_max) + 1);
  for (int j = field.j_max; j >= 0; --j) {
    const Index n = Index(1) << j;
    Array m = field.detail[static_cast<size_t>(j)].abs();
    if (j < field.j_max) {
      const Array& child = subtree[static_cast<size_t>(j) + 1];
      for (Index k = 0; k < n; ++k) {
        m[k] = std::max(m[k], std::max(child[2 * k], child[2 * k + 1]));
      }
    }
    subtree[static_cast<size_t>(j)] = std::move(m);
  }
  for (int j = 0; j <= field.j_max; ++j) {
    const Index n = Index(1) << j;
    const Array& m = subtree[static_cast<size_t>(j)];
    Array& out = lead.values[static_cast<size_t>(j)];
    BoolArray& def = lead.defined[static_cast<size_t>(j)];
    for (Index k = 0; k < n; ++k) {
      Index nb[3];
      const int cnt = neighbor_set(k, n, nb);
      double v = 0.0;
      for (int i = 0; i < cnt; ++i) v = std::max(v, m[nb[i]]);
      out[k] = v;
      def[k] = v > 0.0;
    }
  }
  return lead;
}

LeaderField p_leaders(const CoefficientField& field, double p) {
  if (!(p > 0.0)) {
    throw std::domain_error("p_leaders: p must be positive");
  }
  if (std::isinf(p)) return wavelet_leaders(field);

  LeaderField lead = empty_like(field);
  lead.kind = LeaderKind::p;
  lead.p = p;

  // Subtree sums S_j[k] = sum_{lambda' in subtree} |c|^p 2^{-(j'-j)};
  // one halving per level realizes the depth weight.
  std::vector<Array> subtree(static_cast<size_t>(field.j_max) + 1);
  for (int j = field.j_max; j >= 0; --j) {
    const Index n = Index(1) << j;
    const Array& c = field.detail[static_cast<size_t>(j)];
    Array s(n);
    for (Index k = 0; k < n; ++k) {
      const double a = std::abs(c[k]);
      s[k] = (a == 0.0) ? 0.0 : std::pow(a, p);
    }
    if (j < field.j_max) {
      const Array& child = subtree[static_cast<size_t>(j) + 1];
      for (Index k = 0; k < n; ++k) {
        s[k] += 0.5 * (child[2 * k] + child[2 * k + 1]);
      }
    }
    subtree[static_cast<size_t>(j)] = std::move(s);
  }
  const double inv_p = 1.0 / p;
  for (int j = 0; j <= field.j_max; ++j) {
    const Index n = Index(1) << j;
    const Array& s = subtree[static_cast<size_t>(j)];
    Array& out = lead.values[static_cast<size_t>(j)];
    BoolArray& def = lead.defined[static_cast<size_t>(j)];
    for (Index k = 0; k < n; ++k) {
      Index nb[3];
      const int cnt = neighbor_set(k, n, nb);
      double acc = 0.0;
      for (int i = 0; i < cnt; ++i) acc += s[nb[i]];
      const double v = (acc > 0.0) ? std::pow(acc, inv_p) : 0.0;
      out[k] = v;
      def[k] = acc > 0.0 && std::isfinite(v);
    }
  }
  return lead;
}

LeaderField l_leaders(const CoefficientField& field, double q, double dq) {
  if (!(dq > 0.0)) {
    throw std::domain_error("l_leaders: dq must be positive");
  }
  if (q < 0.0) {
    throw std::domain_error("l_leaders: q must be nonnegative");
  }
  const LeaderField num = p_leaders(field, 1.0 / (q + dq));
  const LeaderField den = (q == 0.0) ? wavelet_leaders(field) : p_leaders(field, 1.0 / q);

  LeaderField lead = empty_like(field);
  lead.kind = LeaderKind::l;
  lead.q = q;
  lead.dq = dq;
  const double inv_dq = 1.0 / dq;
  for (int j = 0; j <= field.j_max; ++j) {
    const Index n = Index(1) << j;
    Array& out = lead.values[static_cast<size_t>(j)];
    BoolArray& def = lead.defined[static_cast<size_t>(j)];
    for (Index k = 0; k < n; ++k) {
      if (!num.is_defined(j, k) || !den.is_defined(j, k)) continue;
      const double v = std::pow(num.value(j, k) / den.value(j, k), inv_dq);
      if (std::isfinite(v) && v > 0.0) {
        out[k] = v;
        def[k] = true;
      }
    }
  }
  return lead;
}

}  // namespace pmfa
