#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "zenodec/errors.hpp"
#include "zenodec/units.hpp"

namespace zenodec {

// Energy triple of a decaying transition: initial, final and ground state.
// Both gaps E_i - E_f and E_i - E_0 must be non-negative so that every
// square root downstream stays real. Zero gaps are allowed but tracked,
// since they make the relaxation parameter and decay constant degenerate.
struct TransitionEnergies {
  double e_i;     // J, initial
  double e_f;     // J, final
  double e_0;     // J, ground
  double gap_if;  // e_i - e_f
  double gap_i0;  // e_i - e_0

  static TransitionEnergies create(double e_i, double e_f, double e_0) {
    if (!std::isfinite(e_i) || !std::isfinite(e_f) || !std::isfinite(e_0)) {
      throw validation_error("transition energies must be finite");
    }
    if (e_i < e_f || e_i < e_0) {
      throw validation_error("transition must be downhill: requires e_i >= e_f and e_i >= e_0");
    }
    return TransitionEnergies{e_i, e_f, e_0, e_i - e_f, e_i - e_0};
  }

  bool degenerate_i0() const { return gap_i0 == 0.0; }
  bool degenerate_if() const { return gap_if == 0.0; }
};

// Complex exponent of the trial solution psi(t) = exp(-alpha t) psi(0) of
// the retarded difference equation. re decays the amplitude, im is the
// phase rate.
struct DecayExponent {
  double re;  // 1/s
  double im;  // 1/s
};

// "exact" keeps the full logarithm alpha = ln(1 + i y)/delta, y = gap
// delta / hbar. "paper" is the third-order form without the 1/2 and 1/3
// Taylor coefficients:
//   re = gap^2 delta / hbar^2
//   im = gap/hbar - gap^3 delta^2 / hbar^3
// In the y -> 0 limit the paper-mode decay rate is exactly twice the exact
// one. The paper form is the default everywhere downstream because the
// closed-form timescales are built on it.
enum class ExponentMode { exact, paper };

inline DecayExponent decay_exponent(double gap_j, double delta_s,
                                    ExponentMode mode) {
  if (!std::isfinite(delta_s) || delta_s <= 0.0) {
    throw validation_error("relaxation parameter delta must be positive, got " +
                           std::to_string(delta_s));
  }
  if (!std::isfinite(gap_j) || gap_j < 0.0) {
    throw validation_error("energy gap must be >= 0 and finite");
  }
  const double hbar = constants.hbar;
  double y = gap_j * delta_s / hbar;
  if (!std::isfinite(y)) {
    throw numerical_error("gap*delta/hbar overflows");
  }
  DecayExponent alpha;
  if (mode == ExponentMode::exact) {
    // ln(1 + i y) = (1/2) ln(1 + y^2) + i atan(y)
    alpha.re = std::log1p(y * y) / (2.0 * delta_s);
    alpha.im = std::atan(y) / delta_s;
  } else {
    alpha.re = gap_j * gap_j * delta_s / (hbar * hbar);
    alpha.im = gap_j / hbar - gap_j * gap_j * gap_j * delta_s * delta_s / (hbar * hbar * hbar);
  }
  return alpha;
}

// delta = (hbar / (E_i - E_0)) sqrt((E_i - E_f) / (E_i - E_0))
inline double relaxation_delta(const TransitionEnergies& te) {
  if (te.degenerate_i0()) {
    throw validation_error("degenerate transition: E_i = E_0");
  }
  return constants.hbar / te.gap_i0 * std::sqrt(te.gap_if / te.gap_i0);
}

// gamma = sqrt((E_i - E_f)(E_i - E_0)) / hbar, equal to
// gap_i0^2 * delta / hbar^2 by composition.
inline double decay_constant(const TransitionEnergies& te) {
  if (te.degenerate_i0()) {
    throw validation_error("degenerate transition: E_i = E_0");
  }
  return std::sqrt(te.gap_if * te.gap_i0) / constants.hbar;
}

// Brute-force iteration of the retarded difference equation with the
// ground-state shift: psi(t) = psi(t - delta) / (1 + i gap delta / hbar).
// Returns the amplitudes at k = 0 .. steps, so amplitude[k] = (1 + i y)^-k.
// Serves as the numerical oracle for decay_exponent: the fitted decay rate
// of |amplitude[k]| over t = k delta equals the exact-mode re.
inline std::vector<std::complex<double>> iterate_difference_equation(
    double gap_j, double delta_s, int steps) {
  if (steps < 1) {
    throw validation_error("iteration requires steps >= 1");
  }
  if (!std::isfinite(delta_s) || delta_s <= 0.0) {
    throw validation_error("relaxation parameter delta must be positive");
  }
  if (!std::isfinite(gap_j) || gap_j < 0.0) {
    throw validation_error("energy gap must be >= 0 and finite");
  }
  double y = gap_j * delta_s / constants.hbar;
  std::complex<double> divisor(1.0, y);
  if (!std::isfinite(std::norm(divisor))) {
    throw numerical_error("difference-equation divisor 1 + i*gap*delta/hbar overflows");
  }
  std::vector<std::complex<double>> amplitudes;
  amplitudes.reserve(static_cast<std::size_t>(steps) + 1);
  amplitudes.emplace_back(1.0, 0.0);
  for (int k = 1; k <= steps; ++k) {
    amplitudes.push_back(amplitudes.back() / divisor);
  }
  return amplitudes;
}

}  // namespace zenodec
