#pragma once

#include <cmath>
#include <string>

#include "zenodec/errors.hpp"

namespace zenodec {

// 2019 SI exact values. Everything downstream computes in SI; conversions
// happen only at input/output boundaries.
struct PhysicalConstants {
  double hbar;  // reduced Planck constant, J s
  double h;     // Planck constant, J s
  double k_b;   // Boltzmann constant, J/K
  double amu;   // atomic mass unit, kg
};

inline constexpr PhysicalConstants constants{1.054571817e-34, 6.62607015e-34,
                                             1.380649e-23, 1.66053907e-27};

enum class Dimension { energy, temperature, length, mass, frequency, time, rate };

inline const char* dimension_name(Dimension d) {
  switch (d) {
    case Dimension::energy: return "energy";
    case Dimension::temperature: return "temperature";
    case Dimension::length: return "length";
    case Dimension::mass: return "mass";
    case Dimension::frequency: return "frequency";
    case Dimension::time: return "time";
    case Dimension::rate: return "rate";
  }
  return "unknown";
}

// A checked dimensioned value. Mass, temperature, length and frequency must
// be strictly positive; every dimension must be finite.
struct Quantity {
  double value;
  Dimension dimension;

  static Quantity make(double value, Dimension dimension) {
    if (!std::isfinite(value)) {
      throw validation_error(std::string(dimension_name(dimension)) +
                             " must be finite");
    }
    switch (dimension) {
      case Dimension::mass:
      case Dimension::temperature:
      case Dimension::length:
      case Dimension::frequency:
        if (value <= 0.0) {
          throw validation_error(std::string(dimension_name(dimension)) +
                                 " must be strictly positive, got " +
                                 std::to_string(value));
        }
        break;
      default:
        break;
    }
    return Quantity{value, dimension};
  }
};

namespace detail {
inline void require_positive_finite(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw validation_error(std::string(name) +
                           " must be positive and finite, got " +
                           std::to_string(v));
  }
}
}  // namespace detail

// E = h nu. The asymmetry energy of the double well is h nu0.
inline double frequency_to_energy(double nu_hz) {
  detail::require_positive_finite(nu_hz, "frequency [Hz]");
  return constants.h * nu_hz;
}

inline double amu_to_kg(double mass_amu) {
  detail::require_positive_finite(mass_amu, "mass [amu]");
  return mass_amu * constants.amu;
}

inline double kg_to_amu(double mass_kg) {
  detail::require_positive_finite(mass_kg, "mass [kg]");
  return mass_kg / constants.amu;
}

}  // namespace zenodec
