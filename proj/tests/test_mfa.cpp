#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pmfa/generators.hpp"
#include "pmfa/mfa.hpp"

using namespace pmfa;
using namespace pmfa::generators;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Leader field with prescribed per-scale constants, all defined.
LeaderField constant_leaders(int j_max, const std::function<double(int)>& value_at) {
  CoefficientField shape = CoefficientField::zeros(j_max);
  LeaderField lead = wavelet_leaders(shape);
  for (int j = 0; j <= j_max; ++j) {
    lead.values[static_cast<size_t>(j)].setConstant(value_at(j));
    lead.defined[static_cast<size_t>(j)].setConstant(true);
  }
  return lead;
}

}  // namespace

TEST_CASE("structure functions: unit leaders give S == 1 for every moment") {
  const LeaderField lead = constant_leaders(8, [](int) { return 1.0; });
  const StructureFunctions s = structure_functions(lead, grid_range(-3.0, 3.0, 0.5));
  for (Index i = 0; i < s.r_grid.size(); ++i) {
    for (int j = 0; j <= 8; ++j) {
      CHECK(s.log_s(i, j) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  // S(0, j) = count * 2^-j with a full field
  CHECK(s.counts[5] == 32);
}

TEST_CASE("structure functions of the eta-zero coefficients are polynomial in j") {
  const Synthesis syn = eta_zero_counterexample(10);
  // wrap the coefficient magnitudes as the multiresolution quantities
  LeaderField lead = constant_leaders(
      10, [&](int j) { return j >= 1 ? 1.0 / (static_cast<double>(j) * j) : 0.0; });
  lead.defined[0].setConstant(false);
  Array rg(3);
  rg << 0.5, 1.0, 2.0;
  const StructureFunctions s = structure_functions(lead, rg);
  for (Index i = 0; i < rg.size(); ++i) {
    for (int j = 1; j <= 10; ++j) {
      CHECK(s.log_s(i, j) == doctest::Approx(-2.0 * rg[i] * std::log2(j)).epsilon(1e-10));
    }
  }
  (void)syn;
}

TEST_CASE("structure functions match brute force on random fields") {
  for (unsigned seed : {4u, 5u}) {
    const CoefficientField field = oracles::random_field(5, seed, 0.4);
    const LeaderField lead = p_leaders(field, 1.5);
    const Array rg = grid_range(-2.0, 3.0, 0.5);
    const StructureFunctions s = structure_functions(lead, rg);
    for (Index i = 0; i < rg.size(); ++i) {
      for (int j = 0; j <= 5; ++j) {
        if (s.counts[j] == 0) continue;
        const double brute = oracles::brute_structure(lead, rg[i], j);
        CHECK(s.log_s(i, j) == doctest::Approx(std::log2(brute)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("strict zero policy raises on undefined leaders") {
  const CoefficientField field = oracles::random_field(5, 6, 0.6);
  const LeaderField lead = wavelet_leaders(field);
  CHECK_THROWS_AS(structure_functions(lead, grid_range(0.0, 2.0, 1.0), ZeroPolicy::strict),
                  estimation_error);
}

TEST_CASE("scaling function of a monofractal surrogate is exactly linear") {
  const LeaderField lead = constant_leaders(10, [](int j) { return std::exp2(-0.7 * j); });
  const Array rg = grid_range(-2.0, 2.0, 0.5);
  const ScalingFunction zeta = scaling_function(structure_functions(lead, rg), {3, 8});
  for (Index i = 0; i < rg.size(); ++i) {
    CHECK(zeta.values[i] == doctest::Approx(0.7 * rg[i]).epsilon(1e-10));
  }
  // zeta(0) = 0 for a full field
  CHECK(zeta.values[4] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("legendre transform of a linear scaling function") {
  ScalingFunction zeta;
  zeta.grid = grid_range(-4.0, 4.0, 0.25);
  zeta.values = 0.7 * zeta.grid;
  const Array hg = grid_range(0.0, 1.4, 0.05);
  const Spectrum spec = legendre_spectrum(zeta, hg);
  // d(H0) = 1 (tie across all moments counts as interior) and strictly less
  // away from H0, where the infimum runs off the moment grid
  CHECK(spec.value_near(0.7) == doctest::Approx(1.0));
  for (Index i = 0; i < hg.size(); ++i) {
    if (std::abs(hg[i] - 0.7) < 1e-9) continue;
    CHECK(spec.d[i] < 1.0);
    CHECK(!spec.interior[i]);
  }
  CHECK(spec.d.maxCoeff() <= 1.0 + 1e-12);
  // infimum of affine functions is concave, exactly
  CHECK(concavity_violation(spec.h_grid, spec.d) < 1e-10);
}

TEST_CASE("p-spectrum pipeline on a lacunary wavelet series") {
  const Synthesis syn = lacunary_wavelet_series(0.3, 0.8, 12, 3);
  const Array rg = grid_range(-3.0, 5.0, 0.25);
  const Array hg = grid_range(0.0, 1.2, 0.01);
  const Spectrum spec = p_spectrum(*syn.field, 2.0, rg, hg, {3, 8});
  CHECK(spec.note.empty());  // eta(2) > 0, the estimate is certified
  CHECK(spec.support_hi() == doctest::Approx(syn.truth.spectra->h_max(2.0)).epsilon(0.4));
  CHECK(spec.d.maxCoeff() <= 1.05);
  const auto [hm, dm] = spec.mode();
  CHECK(dm == doctest::Approx(1.0).epsilon(0.1));
  CHECK(hm > 0.3);
  // the estimated spectrum stays above the theory line on its support
  for (double H : {0.35, 0.4, 0.45}) {
    CHECK(spec.value_near(H) >= syn.truth.spectra->d_p(H, 2.0) - 0.2);
  }
}

TEST_CASE("the eta <= 0 validity warning fires where p-exponents are uncertified") {
  const Synthesis syn = cusp(-2.0, 12, CuspMode::coefficients);  // p0 = 0.5
  const Spectrum spec = p_spectrum(*syn.field, 2.0, grid_range(-2.0, 3.0, 0.25),
                                   grid_range(-2.5, 0.5, 0.02), {3, 8});
  CHECK(!spec.note.empty());
}

TEST_CASE("lacunarity spectrum separates cusp from comb") {
  const Synthesis c = cusp(0.3, 12, CuspMode::coefficients);
  const Array rg = grid_range(-2.0, 4.0, 0.25);
  const Array hg = grid_range(-0.5, 1.0, 0.01);
  // the cusp is monofractal in L: the raw upper bound concentrates at 0
  const Spectrum sc = lacunarity_spectrum(*c.field, 0.0, 0.05, rg, hg, {3, 8});
  Index arg = 0;
  sc.d.maxCoeff(&arg);
  CHECK(std::abs(sc.h_grid[arg]) < 0.1);
  const auto raw_at = [&](double L) {
    Index best = 0;
    (sc.h_grid - L).abs().minCoeff(&best);
    return sc.d[best];
  };
  CHECK(raw_at(0.4) < 0.5);  // the upper bound decays away from L = 0
  CHECK(raw_at(-0.3) < 0.5);

  const Synthesis comb = lacunary_comb(0.2, 1.2, 1.5, 18);
  const Spectrum sb = lacunarity_spectrum(*comb.field, 0.0, 0.1, rg, hg, {3, 10});
  CHECK(sb.support_hi() >= 0.25 - 0.15);  // support includes gamma/omega - 1
}

TEST_CASE("the pipeline is deterministic") {
  const Synthesis syn = lacunary_wavelet_series(0.3, 0.8, 11, 8);
  const Array rg = grid_range(-2.0, 3.0, 0.5);
  const Array hg = grid_range(0.0, 1.0, 0.02);
  const Spectrum a = p_spectrum(*syn.field, 2.0, rg, hg, {3, 8});
  const Spectrum b = p_spectrum(*syn.field, 2.0, rg, hg, {3, 8});
  CHECK((a.d == b.d).all());
  CHECK((a.r_of_h == b.r_of_h).all());
}

TEST_CASE("grid_range validates its arguments") {
  CHECK_THROWS_AS(grid_range(1.0, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(grid_range(0.0, 1.0, 0.0), std::invalid_argument);
  const Array g = grid_range(-1.0, 1.0, 0.5);
  CHECK(g.size() == 5);
  CHECK(g[0] == -1.0);
  CHECK(g[4] == 1.0);
}
