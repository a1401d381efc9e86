#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "zenodec/discrete_dynamics.hpp"
#include "zenodec/errors.hpp"
#include "zenodec/units.hpp"

namespace zenodec {

// Every closed-form timescale of the double-well decoherence pipeline.
// Singular limits (T -> 0, dx -> 0, degenerate gaps) are hard errors, never
// infinities, so report generation cannot leak non-finite values into CSV.

struct TimescaleReport {
  double gamma;     // 1/s, decay constant
  double delta;     // s, relaxation parameter
  double tau_dec;   // s, decoherence time
  double tau_zeno;  // s, Zeno time
  double ratio;     // tau_dec / tau_zeno
  double t_tran;    // K, transitional temperature
  std::optional<double> tau_dwell;  // s, weak dwell time (needs a measurement time)
};

inline double zeno_time(const TransitionEnergies& te);

// Interval between consecutive measurements. The Zeno regime condition
// tau_m << sqrt(2) tau_zeno is operationalized with a factor-of-ten
// separation; the flag is carried in reports rather than refusing the
// computation.
struct MeasurementContext {
  double tau_m;        // s
  bool zeno_regime_ok;

  static MeasurementContext create(double tau_m, const TransitionEnergies& te) {
    detail::require_positive_finite(tau_m, "measurement time tau_m [s]");
    return MeasurementContext{tau_m, tau_m < 0.1 * std::sqrt(2.0) * zeno_time(te)};
  }
};

namespace detail {

// coth via expm1 so the small-argument regime (exactly where the Zeno limit
// lives) stays fully accurate.
inline double coth(double x) {
  if (x <= 0.0 || !std::isfinite(x)) {
    throw numerical_error("coth argument must be positive and finite");
  }
  if (x < 1e-4) {
    return 1.0 / x + x / 3.0 - x * x * x / 45.0;
  }
  return 1.0 + 2.0 / std::expm1(2.0 * x);
}

inline double geometric_gap(const TransitionEnergies& te) {
  double s = std::sqrt(te.gap_if * te.gap_i0);
  if (s == 0.0) {
    throw validation_error("degenerate transition: sqrt((E_i-E_f)(E_i-E_0)) = 0");
  }
  return s;
}

}  // namespace detail

// tau_dec = hbar^2 / (2 m gamma k_B T dx^2). Diagonal elements (dx = 0) do
// not decohere, so dx^2 -> 0 is rejected rather than mapped to infinity.
inline double decoherence_time_generic(double mass, double gamma,
                                       double temperature, double dx_sq) {
  detail::require_positive_finite(mass, "mass [kg]");
  detail::require_positive_finite(gamma, "relaxation rate gamma [1/s]");
  detail::require_positive_finite(temperature, "temperature [K]");
  detail::require_positive_finite(dx_sq, "squared spatial shift dx^2 [m^2]");
  const double hbar = constants.hbar;
  return hbar * hbar /
         (2.0 * mass * gamma * constants.k_b * temperature * dx_sq);
}

// Double-well decoherence time
//   tau_dec = [hbar sqrt(3) / sqrt(gap_if gap_i0)]
//             [2 hbar / (w k_B T)] sqrt(2 eps / m)
// for the A = 14, B = 45 geometry.
inline double decoherence_time_doublewell(const TransitionEnergies& te,
                                          double epsilon, double mass,
                                          double width, double temperature) {
  double s = detail::geometric_gap(te);
  detail::require_positive_finite(epsilon, "asymmetry energy [J]");
  detail::require_positive_finite(mass, "mass [kg]");
  detail::require_positive_finite(width, "well width [m]");
  detail::require_positive_finite(temperature, "temperature [K]");
  const double hbar = constants.hbar;
  return hbar * std::sqrt(3.0) / s * (2.0 * hbar / (width * constants.k_b * temperature)) *
         std::sqrt(2.0 * epsilon / mass);
}

// Decoherence time of the hyperfine transition |0 up> -> |0 down>, where
// both gaps equal the asymmetry energy:
//   tau_dec = (2 hbar^2 / (w k_B T)) sqrt(6 / (m eps))
inline double transition_tdec(double epsilon, double mass, double width,
                              double temperature) {
  detail::require_positive_finite(epsilon, "asymmetry energy [J]");
  detail::require_positive_finite(mass, "mass [kg]");
  detail::require_positive_finite(width, "well width [m]");
  detail::require_positive_finite(temperature, "temperature [K]");
  const double hbar = constants.hbar;
  return 2.0 * hbar * hbar / (width * constants.k_b * temperature) *
         std::sqrt(6.0 / (mass * epsilon));
}

// Weak value of the dwell time under dissipative interaction:
//   tau_w = (hbar / S) coth(tau_m S / (2 hbar)),  S = sqrt(gap_if gap_i0)
inline double dwell_time_weak(const TransitionEnergies& te,
                              const MeasurementContext& ctx) {
  double s = detail::geometric_gap(te);
  double x = ctx.tau_m * s / (2.0 * constants.hbar);
  if (x <= 0.0) {
    throw numerical_error("tau_m * S / (2 hbar) underflows to zero");
  }
  double result = constants.hbar / s * detail::coth(x);
  if (!std::isfinite(result)) {
    throw numerical_error("dwell time overflows");
  }
  return result;
}

// tau_zeno = sqrt(2) hbar / sqrt(gap_if gap_i0). The geometric mean
// sqrt(tau_w * tau_m) converges to this value as tau_m -> 0.
inline double zeno_time(const TransitionEnergies& te) {
  double s = detail::geometric_gap(te);
  return std::sqrt(2.0) * constants.hbar / s;
}

// Temperature at which tau_dec = tau_zeno:
//   T_tran = (2 hbar / (w k_B)) sqrt(3 eps / m)
// Above it decoherence outruns Zeno stabilization.
inline double transition_temperature(double epsilon, double mass, double width) {
  detail::require_positive_finite(epsilon, "asymmetry energy [J]");
  detail::require_positive_finite(mass, "mass [kg]");
  detail::require_positive_finite(width, "well width [m]");
  const double hbar = constants.hbar;
  return 2.0 * hbar / (width * constants.k_b) * std::sqrt(3.0 * epsilon / mass);
}

// tau_dec / tau_zeno = (2 hbar / (w k_B T)) sqrt(3 eps / m) = T_tran / T.
// Independent of the transition gaps, which cancel in the ratio.
inline double ratio_dec_zeno(double epsilon, double mass, double width,
                             double temperature) {
  detail::require_positive_finite(temperature, "temperature [K]");
  return transition_temperature(epsilon, mass, width) / temperature;
}

// Photon recoil temperature T_rec = hbar^2 k^2 / (m k_B).
inline double recoil_temperature(double mass, double wavenumber) {
  detail::require_positive_finite(mass, "mass [kg]");
  detail::require_positive_finite(wavenumber, "wavenumber k [1/m]");
  const double hbar = constants.hbar;
  return hbar * hbar * wavenumber * wavenumber / (mass * constants.k_b);
}

}  // namespace zenodec
