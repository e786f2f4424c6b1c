#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pmfa/wavelet.hpp"

using namespace pmfa;

namespace {

Array random_signal(Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Array s(n);
  for (Index i = 0; i < n; ++i) s[i] = normal(rng);
  return s;
}

}  // namespace

TEST_CASE("daubechies banks are orthonormal with the advertised moments") {
  for (int order = 1; order <= 10; ++order) {
    const FilterBank bank = FilterBank::daubechies(order);
    CHECK(bank.vanishing_moments == order);
    CHECK(bank.lowpass.size() == 2 * order);
    CHECK(bank.lowpass.sum() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    // shifted-tap orthonormality
    const Array& h = bank.lowpass;
    for (Index m = 0; 2 * m < h.size(); ++m) {
      double s = 0.0;
      for (Index t = 0; t + 2 * m < h.size(); ++t) s += h[t] * h[t + 2 * m];
      CHECK(std::abs(s - (m == 0 ? 1.0 : 0.0)) < 1e-10);
    }

    // vanishing moments of the highpass, on the rescaled abscissa (n - c)/L
    // so the check is numerically meaningful at high order
    const Array& g = bank.highpass;
    const double c = (g.size() - 1) / 2.0;
    const double L = static_cast<double>(g.size());
    for (int m = 0; m < order; ++m) {
      double s = 0.0;
      for (Index t = 0; t < g.size(); ++t) s += g[t] * std::pow((t - c) / L, m);
      CHECK(std::abs(s) < 1e-8);
    }
  }
  CHECK_THROWS_AS(FilterBank::daubechies(0), std::invalid_argument);
  CHECK_THROWS_AS(FilterBank::daubechies(11), std::invalid_argument);
}

TEST_CASE("regularity estimates increase with the order") {
  double prev = FilterBank::daubechies(2).regularity_estimate;
  CHECK(prev > 0.5);
  for (int order = 3; order <= 10; ++order) {
    const double reg = FilterBank::daubechies(order).regularity_estimate;
    CHECK(reg > prev);
    prev = reg;
  }
}

TEST_CASE("analyze rejects bad lengths") {
  CHECK_THROWS_AS(analyze(random_signal(24, 1), default_bank()), std::domain_error);
  CHECK_THROWS_AS(analyze(random_signal(8, 1), default_bank()), std::domain_error);
}

TEST_CASE("constant signals have vanishing details") {
  const Array sig = Array::Constant(256, 3.25);
  const CoefficientField field = analyze(sig, default_bank());
  for (int j = 0; j <= field.j_max; ++j) {
    CHECK(field.detail[static_cast<size_t>(j)].abs().maxCoeff() < 1e-12);
  }
  CHECK(field.approx[0] == doctest::Approx(3.25));
}

TEST_CASE("a single synthesized wavelet comes back as a unit coefficient") {
  CoefficientField field = CoefficientField::zeros(7);
  field.c(5, 11) = 1.0;
  const Array sig = synthesize(field, default_bank());
  const CoefficientField back = analyze(sig, default_bank());
  CHECK(back.c(5, 11) == doctest::Approx(1.0).epsilon(1e-10));
  double off = 0.0;
  for (int j = 0; j <= back.j_max; ++j) {
    for (Index k = 0; k < back.scale_size(j); ++k) {
      if (j == 5 && k == 11) continue;
      off = std::max(off, std::abs(back.c(j, k)));
    }
  }
  CHECK(off < 1e-8);
}

TEST_CASE("round trips are exact to near machine precision") {
  for (int order : {2, 5, 8, 10}) {
    const FilterBank bank = FilterBank::daubechies(order);
    SUBCASE("signal -> field -> signal") {
      for (unsigned seed : {1u, 2u}) {
        const Array sig = random_signal(1024, seed);
        const Array back = synthesize(analyze(sig, bank), bank);
        CHECK((back - sig).abs().maxCoeff() / sig.abs().maxCoeff() < 1e-10);
      }
    }
    SUBCASE("field -> signal -> field") {
      for (unsigned seed : {3u, 4u, 5u}) {
        const CoefficientField field = oracles::random_field(9, seed);
        const CoefficientField back = analyze(synthesize(field, bank), bank);
        double err = (back.approx - field.approx).abs().maxCoeff();
        for (int j = 0; j <= field.j_max; ++j) {
          err = std::max(err, (back.detail[static_cast<size_t>(j)] -
                               field.detail[static_cast<size_t>(j)])
                                  .abs()
                                  .maxCoeff());
        }
        CHECK(err < 1e-10);
      }
    }
  }
}

TEST_CASE("cyclic shifts of the signal permute each detail scale") {
  const int J = 6;
  const Array sig = random_signal(Index(1) << J, 11);
  const CoefficientField base = analyze(sig, default_bank());
  for (int j = 2; j < J; ++j) {
    const Index step = Index(1) << (J - j);  // one interval at scale j
    Array shifted(sig.size());
    for (Index i = 0; i < sig.size(); ++i) shifted[(i + step) % sig.size()] = sig[i];
    const CoefficientField moved = analyze(shifted, default_bank());
    for (int jj = j; jj <= base.j_max; ++jj) {
      const Index rot = Index(1) << (jj - j);
      const Index n = base.scale_size(jj);
      for (Index k = 0; k < n; ++k) {
        CHECK(moved.c(jj, (k + rot) % n) == doctest::Approx(base.c(jj, k)).epsilon(1e-9));
      }
    }
  }
}
