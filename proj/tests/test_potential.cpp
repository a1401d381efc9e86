#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "zenodec/potential.hpp"

using namespace zenodec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

QuarticPotential reference_pot(double m = 1e-26, double omega = 5e6,
                               double a = 1.3e-7) {
  return QuarticPotential::create(m, omega, a);
}

// Random double-well family: keeps 9A^2 > 32B with a clear margin.
struct RandomWell {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> coef_a{8.0, 30.0};
  std::uniform_real_distribution<double> frac{0.05, 0.9};
  std::uniform_real_distribution<double> mass{1e-27, 1e-25};
  std::uniform_real_distribution<double> omega{1e5, 1e8};
  std::uniform_real_distribution<double> length{1e-8, 1e-6};

  explicit RandomWell(unsigned seed) : rng(seed) {}

  QuarticPotential next() {
    double A = coef_a(rng);
    double B = frac(rng) * 9.0 * A * A / 32.0;
    return QuarticPotential::create(mass(rng), omega(rng), length(rng), A, B);
  }
};

}  // namespace

TEST_CASE("construction validates and derives beta_sq") {
  auto pot = reference_pot();
  REQUIRE(pot.A == 14.0);
  REQUIRE(pot.B == 45.0);
  REQUIRE(pot.double_well);
  REQUIRE_THAT(pot.beta_sq * constants.hbar,
               WithinRel(pot.mass * pot.omega * pot.a * pot.a, 1e-12));

  REQUIRE_THROWS_AS(QuarticPotential::create(0.0, 5e6, 1e-7), validation_error);
  REQUIRE_THROWS_AS(QuarticPotential::create(1e-26, -1.0, 1e-7), validation_error);
  REQUIRE_THROWS_AS(QuarticPotential::create(1e-26, 5e6, 0.0), validation_error);
  REQUIRE_THROWS_AS(QuarticPotential::create(1e-26, 5e6, 1e-7, -1.0, 45.0),
                    validation_error);
  REQUIRE_THROWS_AS(QuarticPotential::create(1e-26, 5e6, 1e-7, 14.0, -0.5),
                    validation_error);
}

TEST_CASE("evaluate reproduces the quartic closed form") {
  auto pot = reference_pot();
  double scale = 0.5 * pot.mass * pot.omega * pot.omega * pot.a * pot.a;

  SECTION("origin is the left minimum at zero energy") {
    REQUIRE(evaluate(pot, 0.0) == 0.0);
  }
  SECTION("xi = 1 gives 32 in units of the energy scale") {
    REQUIRE_THAT(evaluate(pot, pot.a), WithinRel(32.0 * scale, 1e-12));
  }
  SECTION("right minimum sits at minus the asymmetry energy") {
    auto pts = stationary_points(pot);
    REQUIRE_THAT(evaluate(pot, pts.x2), WithinRel(-asymmetry_energy(pot), 1e-12));
  }
  SECTION("non-finite positions are rejected") {
    REQUIRE_THROWS_AS(evaluate(pot, std::nan("")), validation_error);
  }
}

TEST_CASE("dimensionless shape values") {
  auto pot = reference_pot();
  REQUIRE(pot.dimensionless(0.0) == 0.0);
  REQUIRE_THAT(pot.dimensionless(1.0), WithinRel(32.0, 1e-14));
  REQUIRE_THAT(pot.dimensionless(3.0), WithinRel(108.0, 1e-14));
  REQUIRE_THAT(pot.dimensionless(7.5), WithinRel(-210.9375, 1e-14));
}

TEST_CASE("stationary points of the default geometry") {
  SECTION("a = 1 gives 0, 3, 7.5") {
    auto pts = stationary_points(QuarticPotential::create(1e-26, 5e6, 1.0));
    REQUIRE(pts.x0 == 0.0);
    REQUIRE_THAT(pts.x1, WithinRel(3.0, 1e-12));
    REQUIRE_THAT(pts.x2, WithinRel(7.5, 1e-12));
  }
  SECTION("points scale linearly in a") {
    auto pts = stationary_points(QuarticPotential::create(1e-26, 5e6, 2.0));
    REQUIRE_THAT(pts.x1, WithinRel(6.0, 1e-12));
    REQUIRE_THAT(pts.x2, WithinRel(15.0, 1e-12));
  }
  SECTION("well width is the minima separation") {
    auto pot = reference_pot();
    REQUIRE_THAT(well_width(pot), WithinRel(7.5 * pot.a, 1e-12));
  }
  SECTION("single well and the degenerate boundary are errors") {
    auto single = QuarticPotential::create(1e-26, 5e6, 1e-7, 2.0, 45.0);
    REQUIRE_FALSE(single.double_well);
    REQUIRE_THROWS_AS(stationary_points(single), validation_error);
    double A = 14.0;
    auto boundary = QuarticPotential::create(1e-26, 5e6, 1e-7, A, 9.0 * A * A / 32.0);
    REQUIRE_THROWS_AS(stationary_points(boundary), validation_error);
  }
  SECTION("barrier tops both minima") {
    RandomWell gen(11);
    for (int i = 0; i < 50; ++i) {
      auto pot = gen.next();
      auto pts = stationary_points(pot);
      REQUIRE(pts.x0 == 0.0);
      REQUIRE(pts.x0 < pts.x1);
      REQUIRE(pts.x1 < pts.x2);
      REQUIRE(evaluate(pot, pts.x1) >= evaluate(pot, pts.x0));
      REQUIRE(evaluate(pot, pts.x1) >= evaluate(pot, pts.x2));
    }
  }
}

TEST_CASE("stationary points have vanishing derivative") {
  RandomWell gen(23);
  for (int i = 0; i < 60; ++i) {
    auto pot = gen.next();
    auto pts = stationary_points(pot);
    for (double xs : {pts.x0, pts.x1, pts.x2}) {
      double xi = xs / pot.a;
      double h = 1e-5 * std::max(1.0, std::abs(xi));
      double fd = (pot.dimensionless(xi + h) - pot.dimensionless(xi - h)) / (2.0 * h);
      double scale = 4.0 * std::abs(xi * xi * xi) + 3.0 * pot.A * xi * xi +
                     2.0 * pot.B * std::abs(xi) + 1.0;
      REQUIRE(std::abs(fd) / scale < 1e-6);
    }
  }
}

TEST_CASE("asymmetry energy") {
  SECTION("default geometry coefficient 3375/32") {
    auto pot = reference_pot();
    double scale = 0.5 * pot.mass * pot.omega * pot.omega * pot.a * pot.a;
    REQUIRE_THAT(asymmetry_energy(pot), WithinRel(210.9375 * scale, 1e-12));
    REQUIRE_THAT(asymmetry_energy(pot),
                 WithinRel(105.46875 * pot.mass * pot.omega * pot.omega * pot.a * pot.a,
                           1e-12));
  }
  SECTION("symmetric double well has zero asymmetry") {
    auto pot = QuarticPotential::create(1e-26, 5e6, 1e-7, 14.0, 49.0);
    REQUIRE(pot.double_well);
    REQUIRE_THAT(asymmetry_energy(pot), WithinAbs(0.0, 1e-40));
  }
  SECTION("single well is an error") {
    auto single = QuarticPotential::create(1e-26, 5e6, 1e-7, 2.0, 45.0);
    REQUIRE_THROWS_AS(asymmetry_energy(single), validation_error);
  }
}

TEST_CASE("omega_from_asymmetry") {
  const double m_be9 = 1.4964778098840002e-26;
  SECTION("reference trap value") {
    REQUIRE_THAT(omega_from_asymmetry(8.5e-25, m_be9, 1e-6),
                 WithinRel(5503939.939618886, 1e-12));
  }
  SECTION("square root scaling in epsilon") {
    double base = omega_from_asymmetry(2e-25, m_be9, 1e-6);
    REQUIRE_THAT(omega_from_asymmetry(8e-25, m_be9, 1e-6), WithinRel(2.0 * base, 1e-12));
  }
  SECTION("rejects non-positive input") {
    REQUIRE_THROWS_AS(omega_from_asymmetry(0.0, m_be9, 1e-6), validation_error);
    REQUIRE_THROWS_AS(omega_from_asymmetry(8.5e-25, -1.0, 1e-6), validation_error);
    REQUIRE_THROWS_AS(omega_from_asymmetry(8.5e-25, m_be9, 0.0), validation_error);
  }
  SECTION("asymmetry_energy inverts it for the default geometry") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> eps(1e-26, 1e-23);
    std::uniform_real_distribution<double> mass(1e-27, 1e-25);
    std::uniform_real_distribution<double> width(1e-7, 1e-5);
    for (int i = 0; i < 60; ++i) {
      double e = eps(rng), m = mass(rng), w = width(rng);
      double a = 2.0 * w / 15.0;
      auto pot = QuarticPotential::create(m, omega_from_asymmetry(e, m, w), a);
      REQUIRE_THAT(asymmetry_energy(pot), WithinRel(e, 1e-9));
      REQUIRE_THAT(well_width(pot), WithinRel(w, 1e-12));
    }
  }
}

TEST_CASE("ground state of the harmonic left well") {
  SECTION("nu and msd at beta_sq = 1, B = 45") {
    auto pot = QuarticPotential::create(constants.hbar, 1.0, 1.0);
    REQUIRE_THAT(pot.beta_sq, WithinRel(1.0, 1e-12));
    auto gs = ground_state(pot);
    REQUIRE_THAT(gs.nu, WithinRel(6.708203932499369, 1e-12));
    REQUIRE_THAT(gs.msd, WithinRel(0.07453559924999299, 1e-12));
  }
  SECTION("msd relation 2 nu msd = a^2") {
    RandomWell gen(43);
    for (int i = 0; i < 40; ++i) {
      auto pot = gen.next();
      auto gs = ground_state(pot);
      REQUIRE(gs.nu > 0.0);
      REQUIRE_THAT(2.0 * gs.nu * gs.msd, WithinRel(pot.a * pot.a, 1e-12));
    }
  }
  SECTION("reference trap spatial shift near 9.8 nm") {
    double m = 1.4964778098840002e-26, w = 1e-6;
    double a = 2.0 * w / 15.0;
    auto pot = QuarticPotential::create(m, omega_from_asymmetry(8.5e-25, m, w), a);
    auto gs = ground_state(pot);
    REQUIRE_THAT(gs.nu, WithinRel(93.14328203045167, 1e-10));
    REQUIRE_THAT(std::sqrt(gs.msd), WithinRel(9.768951880176745e-09, 1e-10));
  }
  SECTION("msd strictly decreases as B grows at fixed beta_sq") {
    double prev = std::numeric_limits<double>::infinity();
    for (double B : {5.0, 20.0, 45.0, 90.0, 200.0}) {
      auto pot = QuarticPotential::create(1e-26, 5e6, 1.3e-7, 14.0, B);
      double msd = ground_state(pot).msd;
      REQUIRE(msd < prev);
      prev = msd;
    }
  }
  SECTION("flat well rejected") {
    auto flat = QuarticPotential::create(1e-26, 5e6, 1.3e-7, 14.0, 0.0);
    REQUIRE_THROWS_AS(ground_state(flat), validation_error);
  }
}

TEST_CASE("scan") {
  auto pot = reference_pot();
  SECTION("two-point scan brackets the range exactly") {
    auto rows = scan(pot, 0.0, 1.0, 2);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].xi == 0.0);
    REQUIRE(rows[0].v == 0.0);
    REQUIRE(rows[1].xi == 1.0);
    REQUIRE_THAT(rows[1].v, WithinRel(32.0, 1e-14));
  }
  SECTION("barrier is a local maximum among scan neighbors") {
    auto rows = scan(pot, 0.0, 8.0, 801);
    std::size_t idx = 300;  // xi = 3.0
    REQUIRE(rows[idx].xi == Catch::Approx(3.0));
    REQUIRE(rows[idx].v > rows[idx - 1].v);
    REQUIRE(rows[idx].v > rows[idx + 1].v);
  }
  SECTION("values are independent of the dimensional scales") {
    auto other = QuarticPotential::create(7e-25, 9e7, 4.2e-8);
    auto r1 = scan(pot, -1.0, 9.0, 64);
    auto r2 = scan(other, -1.0, 9.0, 64);
    for (std::size_t i = 0; i < r1.size(); ++i) {
      REQUIRE(r1[i].xi == r2[i].xi);
      REQUIRE(r1[i].v == r2[i].v);
    }
  }
  SECTION("invalid ranges are rejected") {
    REQUIRE_THROWS_AS(scan(pot, 0.0, 1.0, 1), validation_error);
    REQUIRE_THROWS_AS(scan(pot, 2.0, 1.0, 16), validation_error);
    REQUIRE_THROWS_AS(scan(pot, 1.0, 1.0, 16), validation_error);
  }
}

TEST_CASE("scan CSV header and formatting") {
  auto pot = reference_pot();
  std::ostringstream out;
  write_scan_csv(out, scan(pot, 0.0, 1.0, 2));
  REQUIRE(out.str() == "xi,v_dimensionless\n0,0\n1,32\n");
}
