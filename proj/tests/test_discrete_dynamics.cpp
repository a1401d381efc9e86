#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "zenodec/discrete_dynamics.hpp"

using namespace zenodec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Least squares of ln|amplitude| over t = k delta, the decay-rate oracle.
double fitted_rate(const std::vector<std::complex<double>>& amps, double delta) {
  double tm = 0.0, ym = 0.0;
  const auto n = static_cast<double>(amps.size());
  for (std::size_t k = 0; k < amps.size(); ++k) {
    tm += static_cast<double>(k) * delta;
    ym += std::log(std::abs(amps[k]));
  }
  tm /= n;
  ym /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    double dt = static_cast<double>(k) * delta - tm;
    sxy += dt * (std::log(std::abs(amps[k])) - ym);
    sxx += dt * dt;
  }
  return -sxy / sxx;
}

TransitionEnergies degenerate_eps(double eps) {
  return TransitionEnergies::create(eps, 0.0, 0.0);
}

}  // namespace

TEST_CASE("transition energies validate gap signs") {
  auto te = TransitionEnergies::create(8.5e-25, 0.0, 0.0);
  REQUIRE(te.gap_if == 8.5e-25);
  REQUIRE(te.gap_i0 == 8.5e-25);
  REQUIRE_FALSE(te.degenerate_i0());
  REQUIRE_FALSE(te.degenerate_if());

  auto flat = TransitionEnergies::create(3e-25, 3e-25, 1e-25);
  REQUIRE(flat.degenerate_if());
  REQUIRE_FALSE(flat.degenerate_i0());

  REQUIRE_THROWS_AS(TransitionEnergies::create(1e-25, 2e-25, 0.0), validation_error);
  REQUIRE_THROWS_AS(TransitionEnergies::create(1e-25, 0.0, 2e-25), validation_error);
  REQUIRE_THROWS_AS(TransitionEnergies::create(std::nan(""), 0.0, 0.0),
                    validation_error);
}

TEST_CASE("decay exponent, exact mode") {
  const double eps = 8.5e-25;
  const double delta = 1.240672725882353e-10;

  SECTION("zero gap means no decay and no phase") {
    auto alpha = decay_exponent(0.0, delta, ExponentMode::exact);
    REQUIRE(alpha.re == 0.0);
    REQUIRE(alpha.im == 0.0);
  }
  SECTION("y = 1 decays at ln2/(2 delta)") {
    double gap = constants.hbar / delta;
    auto alpha = decay_exponent(gap, delta, ExponentMode::exact);
    REQUIRE_THAT(alpha.re, WithinRel(std::log(2.0) / (2.0 * delta), 1e-12));
    REQUIRE_THAT(alpha.im, WithinRel(std::atan(1.0) / delta, 1e-12));
  }
  SECTION("reference transition") {
    auto alpha = decay_exponent(eps, delta, ExponentMode::exact);
    double y = eps * delta / constants.hbar;
    REQUIRE_THAT(alpha.re, WithinRel(std::log1p(y * y) / (2.0 * delta), 1e-14));
  }
  SECTION("delta must be positive") {
    REQUIRE_THROWS_AS(decay_exponent(eps, 0.0, ExponentMode::exact), validation_error);
    REQUIRE_THROWS_AS(decay_exponent(eps, -1e-10, ExponentMode::exact),
                      validation_error);
    REQUIRE_THROWS_AS(decay_exponent(-eps, delta, ExponentMode::exact),
                      validation_error);
  }
}

TEST_CASE("decay exponent, paper mode") {
  const double hbar = constants.hbar;
  SECTION("printed closed forms") {
    double gap = 8.5e-25, delta = 1e-11;
    auto alpha = decay_exponent(gap, delta, ExponentMode::paper);
    REQUIRE_THAT(alpha.re, WithinRel(gap * gap * delta / (hbar * hbar), 1e-14));
    REQUIRE_THAT(alpha.im,
                 WithinRel(gap / hbar - std::pow(gap, 3) * delta * delta /
                                            std::pow(hbar, 3),
                           1e-14));
  }
  SECTION("paper rate is twice the exact rate in the small-y limit") {
    double delta = 1e-10;
    double y = 0.01;
    double gap = y * hbar / delta;
    auto exact = decay_exponent(gap, delta, ExponentMode::exact);
    auto paper = decay_exponent(gap, delta, ExponentMode::paper);
    REQUIRE_THAT(exact.re, WithinRel(paper.re / 2.0, 1e-4));
  }
  SECTION("exact/paper rate ratio converges to 1/2 at y = 1e-4") {
    double delta = 1e-10;
    double gap = 1e-4 * hbar / delta;
    auto exact = decay_exponent(gap, delta, ExponentMode::exact);
    double paper_re = gap * gap * delta / (hbar * hbar);
    REQUIRE_THAT(exact.re / paper_re, WithinRel(0.5, 1e-6));
  }
  SECTION("re is non-negative in both modes for random inputs") {
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> logy(-6.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      double delta = 1e-10;
      double gap = std::pow(10.0, logy(rng)) * hbar / delta;
      REQUIRE(decay_exponent(gap, delta, ExponentMode::exact).re >= 0.0);
      REQUIRE(decay_exponent(gap, delta, ExponentMode::paper).re >= 0.0);
    }
  }
}

TEST_CASE("relaxation delta") {
  const double eps = 8.5e-25;
  SECTION("degenerate reference transition") {
    REQUIRE_THAT(relaxation_delta(degenerate_eps(eps)),
                 WithinRel(1.240672725882353e-10, 1e-12));
    REQUIRE_THAT(relaxation_delta(degenerate_eps(eps)),
                 WithinRel(constants.hbar / eps, 1e-14));
  }
  SECTION("zero numerator gap gives zero delta") {
    auto te = TransitionEnergies::create(3e-25, 3e-25, 0.0);
    REQUIRE(relaxation_delta(te) == 0.0);
  }
  SECTION("homogeneity of degree minus one") {
    REQUIRE_THAT(relaxation_delta(degenerate_eps(2.0 * eps)),
                 WithinRel(relaxation_delta(degenerate_eps(eps)) / 2.0, 1e-12));
  }
  SECTION("vanishing ground gap is degenerate") {
    auto te = TransitionEnergies::create(0.0, 0.0, 0.0);
    REQUIRE_THROWS_WITH(relaxation_delta(te),
                        Catch::Matchers::ContainsSubstring("degenerate transition"));
  }
}

TEST_CASE("decay constant") {
  const double eps = 8.5e-25;
  SECTION("reference value eps/hbar") {
    REQUIRE_THAT(decay_constant(degenerate_eps(eps)),
                 WithinRel(8060143333.0358, 1e-10));
  }
  SECTION("isoenergetic final state stops the decay") {
    auto te = TransitionEnergies::create(3e-25, 3e-25, 0.0);
    REQUIRE(decay_constant(te) == 0.0);
  }
  SECTION("composition identity with delta") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> energy(1e-26, 1e-23);
    for (int i = 0; i < 100; ++i) {
      double e_i = energy(rng);
      double e_f = e_i * std::uniform_real_distribution<double>(0.0, 0.999)(rng);
      auto te = TransitionEnergies::create(e_i, e_f, 0.0);
      double composed = te.gap_i0 * te.gap_i0 * relaxation_delta(te) /
                        (constants.hbar * constants.hbar);
      REQUIRE_THAT(decay_constant(te), WithinRel(composed, 1e-12));
    }
  }
  SECTION("symmetric under gap exchange") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> energy(1e-26, 1e-23);
    for (int i = 0; i < 50; ++i) {
      double g1 = energy(rng), g2 = energy(rng);
      double top = std::max(g1, g2) * 2.0;
      auto te_a = TransitionEnergies::create(top, top - g1, top - g2);
      auto te_b = TransitionEnergies::create(top, top - g2, top - g1);
      REQUIRE(te_a.gap_if == te_b.gap_i0);
      REQUIRE_THAT(decay_constant(te_a), WithinRel(decay_constant(te_b), 1e-12));
    }
  }
  SECTION("degenerate ground gap is rejected") {
    REQUIRE_THROWS_AS(decay_constant(TransitionEnergies::create(1e-25, 0.0, 1e-25)),
                      validation_error);
  }
}

TEST_CASE("difference-equation iteration") {
  const double hbar = constants.hbar;
  SECTION("zero gap leaves the amplitude untouched") {
    auto amps = iterate_difference_equation(0.0, 1e-10, 20);
    REQUIRE(amps.size() == 21);
    for (const auto& a : amps) {
      REQUIRE(a == std::complex<double>(1.0, 0.0));
    }
  }
  SECTION("y = 1 halves the squared modulus per step") {
    double delta = 1e-10;
    double gap = hbar / delta;
    auto amps = iterate_difference_equation(gap, delta, 100);
    REQUIRE_THAT(std::abs(amps[100]), WithinRel(std::pow(2.0, -50.0), 1e-10));
    REQUIRE_THAT(fitted_rate(amps, delta),
                 WithinRel(std::log(2.0) / (2.0 * delta), 1e-12));
  }
  SECTION("fitted rate matches the exact exponent across y") {
    double delta = 1e-10;
    for (double y : {0.01, 0.1, 0.5, 1.0}) {
      double gap = y * hbar / delta;
      auto amps = iterate_difference_equation(gap, delta, 60);
      auto alpha = decay_exponent(gap, delta, ExponentMode::exact);
      REQUIRE_THAT(fitted_rate(amps, delta), WithinRel(alpha.re, 1e-10));
    }
  }
  SECTION("modulus never increases") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> logy(-4.0, 1.5);
    for (int i = 0; i < 30; ++i) {
      double delta = 1e-10;
      double gap = std::pow(10.0, logy(rng)) * hbar / delta;
      auto amps = iterate_difference_equation(gap, delta, 40);
      for (std::size_t k = 1; k < amps.size(); ++k) {
        REQUIRE(std::abs(amps[k]) <= std::abs(amps[k - 1]));
      }
    }
  }
  SECTION("argument validation") {
    REQUIRE_THROWS_AS(iterate_difference_equation(1e-25, 1e-10, 0), validation_error);
    REQUIRE_THROWS_AS(iterate_difference_equation(1e-25, 0.0, 5), validation_error);
    REQUIRE_THROWS_AS(iterate_difference_equation(-1e-25, 1e-10, 5), validation_error);
  }
}
