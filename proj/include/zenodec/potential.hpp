#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "zenodec/csv.hpp"
#include "zenodec/errors.hpp"
#include "zenodec/units.hpp"

namespace zenodec {

// Quartic bistable potential
//
//   V(x) = (1/2) m omega^2 x^2 [ (x/a)^2 - A (x/a) + B ]
//
// With A = 14, B = 45 the potential has a shallow well at x = 0, a barrier
// at x = 3a and a deeper well at x = 7.5a.
struct QuarticPotential {
  double mass;     // kg
  double omega;    // rad/s
  double a;        // m, lattice length scale
  double A;        // dimensionless cubic coefficient
  double B;        // dimensionless quadratic coefficient
  double beta_sq;  // m omega a^2 / hbar
  bool double_well;  // 9 A^2 > 32 B, three distinct stationary points

  static QuarticPotential create(double mass, double omega, double a,
                                 double A = 14.0, double B = 45.0) {
    detail::require_positive_finite(mass, "mass [kg]");
    detail::require_positive_finite(omega, "omega [rad/s]");
    detail::require_positive_finite(a, "length scale a [m]");
    if (!std::isfinite(A) || A < 0.0 || !std::isfinite(B) || B < 0.0) {
      throw validation_error("potential coefficients A, B must be finite and >= 0");
    }
    QuarticPotential pot;
    pot.mass = mass;
    pot.omega = omega;
    pot.a = a;
    pot.A = A;
    pot.B = B;
    pot.beta_sq = mass * omega * a * a / constants.hbar;
    pot.double_well = 9.0 * A * A > 32.0 * B;
    return pot;
  }

  // Dimensionless potential v(xi) = xi^2 (xi^2 - A xi + B), xi = x/a,
  // so that V(x) = (1/2) m omega^2 a^2 v(x/a).
  double dimensionless(double xi) const {
    return xi * xi * (xi * xi - A * xi + B);
  }

  // Energy scale (1/2) m omega^2 a^2 in J.
  double energy_scale() const { return 0.5 * mass * omega * omega * a * a; }
};

struct StationaryPoints {
  double x0;  // left minimum, always 0
  double x1;  // barrier maximum
  double x2;  // right minimum
};

// Harmonic approximation of the left well. nu is the Gaussian width
// parameter of the ground state, msd the mean square spatial shift
// <x^2> = a^2 / (2 nu).
struct GroundState {
  double nu;   // sqrt(B) beta^2, dimensionless
  double msd;  // m^2
};

struct PotentialSample {
  double xi;  // dimensionless position
  double v;   // dimensionless potential
};

inline double evaluate(const QuarticPotential& pot, double x) {
  if (!std::isfinite(x)) {
    throw validation_error("position x must be finite");
  }
  double xi = x / pot.a;
  return pot.energy_scale() * pot.dimensionless(xi);
}

inline StationaryPoints stationary_points(const QuarticPotential& pot) {
  double disc = 9.0 * pot.A * pot.A - 32.0 * pot.B;
  if (disc <= 0.0) {
    throw validation_error(
        "single-well configuration: 9A^2 <= 32B leaves no real barrier "
        "(9A^2 = " + std::to_string(9.0 * pot.A * pot.A) +
        ", 32B = " + std::to_string(32.0 * pot.B) + ")");
  }
  double root = std::sqrt(disc);
  StationaryPoints pts;
  pts.x0 = 0.0;
  pts.x1 = pot.a / 8.0 * (3.0 * pot.A - root);
  pts.x2 = pot.a / 8.0 * (3.0 * pot.A + root);
  return pts;
}

// Well separation w = x2 - x0. For A = 14, B = 45 this is 15a/2.
inline double well_width(const QuarticPotential& pot) {
  return stationary_points(pot).x2;
}

// epsilon = V(x0) - V(x2), positive when the right well is deeper.
inline double asymmetry_energy(const QuarticPotential& pot) {
  StationaryPoints pts = stationary_points(pot);
  return evaluate(pot, pts.x0) - evaluate(pot, pts.x2);
}

// Trap frequency that produces the asymmetry energy epsilon for the
// A = 14, B = 45 geometry: omega = (2/w) sqrt(2 epsilon / (15 m)).
// Only valid for that coefficient pair (w = 15a/2 and the epsilon
// coefficient 3375/32 are both specific to it).
inline double omega_from_asymmetry(double epsilon, double mass, double width) {
  detail::require_positive_finite(epsilon, "asymmetry energy [J]");
  detail::require_positive_finite(mass, "mass [kg]");
  detail::require_positive_finite(width, "well width [m]");
  return 2.0 / width * std::sqrt(2.0 * epsilon / (15.0 * mass));
}

inline GroundState ground_state(const QuarticPotential& pot) {
  if (pot.B <= 0.0) {
    throw validation_error("flat well: B must be > 0 for a harmonic ground state");
  }
  GroundState gs;
  gs.nu = std::sqrt(pot.B) * pot.beta_sq;
  gs.msd = pot.a * pot.a / (2.0 * gs.nu);
  return gs;
}

inline std::vector<PotentialSample> scan(const QuarticPotential& pot,
                                         double xi_min, double xi_max, int n) {
  if (!std::isfinite(xi_min) || !std::isfinite(xi_max) || xi_min >= xi_max) {
    throw validation_error("scan range requires finite xi_min < xi_max");
  }
  if (n < 2) {
    throw validation_error("scan requires n >= 2 samples, got " + std::to_string(n));
  }
  std::vector<PotentialSample> rows;
  rows.reserve(static_cast<std::size_t>(n));
  double step = (xi_max - xi_min) / (n - 1);
  for (int i = 0; i < n; ++i) {
    double xi = (i == n - 1) ? xi_max : xi_min + i * step;
    rows.push_back({xi, pot.dimensionless(xi)});
  }
  return rows;
}

inline void write_scan_csv(std::ostream& out,
                           const std::vector<PotentialSample>& rows) {
  out << "xi,v_dimensionless\n";
  for (const auto& r : rows) {
    out << csv::format_full(r.xi) << ',' << csv::format_full(r.v) << '\n';
  }
}

}  // namespace zenodec
