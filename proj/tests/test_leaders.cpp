#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pmfa/generators.hpp"
#include "pmfa/leaders.hpp"
#include "pmfa/regression.hpp"

using namespace pmfa;

TEST_CASE("parameter validation") {
  const CoefficientField field = oracles::random_field(5, 1);
  CHECK_THROWS_AS(p_leaders(field, 0.0), std::domain_error);
  CHECK_THROWS_AS(p_leaders(field, -1.0), std::domain_error);
  CHECK_THROWS_AS(l_leaders(field, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(l_leaders(field, -0.1, 0.05), std::domain_error);
}

TEST_CASE("an all-zero field gives flagged all-zero leaders") {
  const CoefficientField field = CoefficientField::zeros(6);
  for (const LeaderField& lead : {wavelet_leaders(field), p_leaders(field, 2.0)}) {
    for (int j = 0; j <= 6; ++j) {
      CHECK((lead.values[static_cast<size_t>(j)] == 0.0).all());
      CHECK((!lead.defined[static_cast<size_t>(j)]).all());
    }
  }
}

TEST_CASE("a single nonzero coefficient follows the closed forms") {
  CoefficientField field = CoefficientField::zeros(6);
  const double v = 0.8125;
  field.c(4, 9) = v;

  const LeaderField sup = wavelet_leaders(field);
  const LeaderField p2 = p_leaders(field, 2.0);
  for (int j = 0; j <= 6; ++j) {
    for (Index k = 0; k < field.scale_size(j); ++k) {
      const bool inside = j <= 4 && oracles::contained_in_3lambda(j, k, 4, 9);
      CHECK(sup.is_defined(j, k) == inside);
      if (inside) {
        CHECK(sup.value(j, k) == v);  // sup of a singleton, exact
        CHECK(p2.value(j, k) ==
              doctest::Approx(v * std::exp2(-(4 - j) / 2.0)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("leaders dominate the interval's own coefficient") {
  const CoefficientField field = oracles::random_field(7, 21);
  const LeaderField sup = wavelet_leaders(field);
  for (int j = 0; j <= 7; ++j) {
    for (Index k = 0; k < field.scale_size(j); ++k) {
      CHECK(sup.value(j, k) >= std::abs(field.c(j, k)));
    }
  }
}

TEST_CASE("fast computation equals the brute-force enumeration") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const CoefficientField field = oracles::random_field(6, seed, 0.3);
    const LeaderField sup = wavelet_leaders(field);
    const LeaderField ph = p_leaders(field, 0.5);
    const LeaderField p2 = p_leaders(field, 2.0);
    for (int j = 0; j <= 6; ++j) {
      for (Index k = 0; k < field.scale_size(j); ++k) {
        const double bs = oracles::brute_sup_leader(field, j, k);
        CHECK(sup.value(j, k) == bs);  // max is order-independent, exact match
        CHECK(sup.is_defined(j, k) == (bs > 0.0));
        for (const auto& [lead, p] : {std::pair{&ph, 0.5}, std::pair{&p2, 2.0}}) {
          const double bp = oracles::brute_p_leader(field, j, k, p);
          if (bp > 0.0) {
            CHECK(lead->value(j, k) == doctest::Approx(bp).epsilon(1e-12));
          } else {
            CHECK(!lead->is_defined(j, k));
          }
        }
      }
    }
  }
}

TEST_CASE("p-leaders converge to wavelet leaders as p grows") {
  const CoefficientField field = oracles::random_field(6, 77);
  const LeaderField sup = wavelet_leaders(field);
  const auto gap = [&](double p) {
    const LeaderField lead = p_leaders(field, p);
    double worst = 0.0;
    for (int j = 0; j <= 6; ++j) {
      for (Index k = 0; k < field.scale_size(j); ++k) {
        worst = std::max(worst, std::abs(lead.value(j, k) / sup.value(j, k) - 1.0));
      }
    }
    return worst;
  };
  // the worst-case gap behaves like log(tree mass)/p
  const double g64 = gap(64.0);
  const double g256 = gap(256.0);
  CHECK(g64 < 0.05);
  CHECK(g256 < 0.015);
  CHECK(g256 < 0.3 * g64);
}

TEST_CASE("L-leader of an isolated coefficient is one") {
  CoefficientField field = CoefficientField::zeros(6);
  field.c(3, 5) = 2.5;
  const LeaderField ll = l_leaders(field, 0.0, 0.05);
  CHECK(ll.value(3, 5) == doctest::Approx(1.0));  // no lacunarity contribution
  CHECK(ll.is_defined(3, 5));
}

TEST_CASE("L-leaders are undefined wherever a constituent vanishes") {
  CoefficientField field = CoefficientField::zeros(5);
  field.c(5, 17) = 1.0;
  const LeaderField ll = l_leaders(field, 0.0, 0.05);
  for (int j = 0; j <= 5; ++j) {
    for (Index k = 0; k < field.scale_size(j); ++k) {
      CHECK(ll.is_defined(j, k) == oracles::contained_in_3lambda(j, k, 5, 17));
    }
  }
}

TEST_CASE("fitted L-leader exponents discriminate cusp from chirp") {
  using namespace pmfa::generators;
  // cusps carry no lacunarity
  const Synthesis c = cusp(0.3, 12, CuspMode::coefficients);
  const LeaderField lc = l_leaders(*c.field, 0.0, 0.05);
  std::vector<double> xs, ys;
  for (int j = 3; j <= 9; ++j) {
    xs.push_back(-j);
    ys.push_back(std::log2(lc.value(j, Index(1) << (j - 1))));
  }
  CHECK(std::abs(ols_fit(xs, ys, 3, 9).slope) < 0.05);

  // the thin chirp's L-leader exponent matches its accessibility exponent
  const Synthesis t = thin_chirp(0.5, 0.3, 0.2, 20);
  const LeaderField lt = l_leaders(*t.field, 0.0, 0.05);
  xs.clear();
  ys.clear();
  for (int j = 3; j <= 7; ++j) {
    xs.push_back(-j);
    ys.push_back(std::log2(lt.value(j, 0)));
  }
  CHECK(ols_fit(xs, ys, 3, 7).slope == doctest::Approx(0.4).epsilon(0.25));
}
