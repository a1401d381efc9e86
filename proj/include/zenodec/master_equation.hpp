#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zenodec/csv.hpp"
#include "zenodec/errors.hpp"
#include "zenodec/potential.hpp"
#include "zenodec/units.hpp"

namespace zenodec {

// Grid-based integrator for the position-representation master equation
//
//   d rho/dt = -(i/hbar) [H, rho]
//              - gamma (x - x') (d_x - d_x') rho
//              - (2 m gamma k_B T / hbar^2) (x - x')^2 rho
//
// on rho(x, x'). The last term is diagonal in (x, x'), so with only it
// enabled every point carries the exact factor exp(-Lambda (x-x')^2 t);
// the integrator steps with that factor rather than an ODE approximation.
// The full equation is advanced with classical RK4 on central differences,
// with the outermost ring clamped to zero.

using Complex = std::complex<double>;

struct GridSpec {
  double x_min;  // m
  double x_max;  // m
  int n;         // points per axis
  double dx;     // m, derived

  static GridSpec create(double x_min, double x_max, int n) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_max <= x_min) {
      throw validation_error("grid requires finite x_min < x_max");
    }
    if (n < 32) {
      throw validation_error("grid requires n >= 32 points per axis, got " +
                             std::to_string(n));
    }
    return GridSpec{x_min, x_max, n, (x_max - x_min) / (n - 1)};
  }

  double x(int j) const { return x_min + j * dx; }

  // Index of the node nearest to a position inside the box.
  int nearest(double pos) const {
    if (!std::isfinite(pos) || pos < x_min - 0.5 * dx || pos > x_max + 0.5 * dx) {
      throw validation_error("position " + std::to_string(pos) +
                             " is outside the grid box");
    }
    int j = static_cast<int>(std::lround((pos - x_min) / dx));
    return std::clamp(j, 0, n - 1);
  }
};

// rho(x_j, x'_k) samples, row-major: values[j*n + k]. Hermiticity is
// maintained exactly by mirrored writes; the trace is dx * sum of the
// diagonal.
struct DensityMatrixGrid {
  GridSpec grid;
  std::vector<Complex> values;
  double time = 0.0;  // s

  Complex& at(int j, int k) { return values[static_cast<std::size_t>(j) * grid.n + k]; }
  const Complex& at(int j, int k) const {
    return values[static_cast<std::size_t>(j) * grid.n + k];
  }

  double trace() const {
    double tr = 0.0;
    for (int j = 0; j < grid.n; ++j) tr += at(j, j).real();
    return tr * grid.dx;
  }

  // tr(rho^2) with the same dx^2 measure; 1 for a pure normalized state.
  double purity() const {
    double p = 0.0;
    for (const auto& v : values) p += std::norm(v);
    return p * grid.dx * grid.dx;
  }

  double max_hermiticity_deviation() const {
    double dev = 0.0;
    for (int j = 0; j < grid.n; ++j) {
      for (int k = j; k < grid.n; ++k) {
        dev = std::max(dev, std::abs(at(j, k) - std::conj(at(k, j))));
      }
    }
    return dev;
  }

  double min_diagonal() const {
    double m = at(0, 0).real();
    for (int j = 1; j < grid.n; ++j) m = std::min(m, at(j, j).real());
    return m;
  }

  double max_diagonal() const {
    double m = at(0, 0).real();
    for (int j = 1; j < grid.n; ++j) m = std::max(m, at(j, j).real());
    return m;
  }

  bool finite() const {
    for (const auto& v : values) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
  }
};

struct EvolutionConfig {
  bool include_hamiltonian = false;
  bool include_dissipation = false;
  bool include_decoherence = true;
  double gamma = 0.0;        // 1/s, relaxation rate
  double temperature = 0.0;  // K
  double mass = 0.0;         // kg
  std::optional<QuarticPotential> potential;  // empty = free particle
  double dt = 0.0;           // s
  int steps = 1;
  bool check_invariants = false;  // assert hermiticity/trace/diagonal each step

  double decoherence_rate_coefficient() const {
    return 2.0 * mass * gamma * constants.k_b * temperature /
           (constants.hbar * constants.hbar);
  }
};

namespace detail {

inline void validate_config(const EvolutionConfig& cfg, const GridSpec& grid) {
  if (!std::isfinite(cfg.dt) || cfg.dt <= 0.0) {
    throw validation_error("time step dt must be positive and finite");
  }
  if (cfg.include_hamiltonian || cfg.include_decoherence) {
    require_positive_finite(cfg.mass, "mass [kg]");
  }
  if (cfg.include_dissipation || cfg.include_decoherence) {
    require_positive_finite(cfg.gamma, "relaxation rate gamma [1/s]");
  }
  if (cfg.include_decoherence) {
    require_positive_finite(cfg.temperature, "temperature [K]");
  }
  if (cfg.include_hamiltonian) {
    // Explicit-scheme contract for the kinetic term.
    double bound = 0.1 * 2.0 * cfg.mass * grid.dx * grid.dx / constants.hbar;
    if (cfg.dt > bound) {
      throw numerical_error(
          "stability violation: dt = " + std::to_string(cfg.dt) +
          " s exceeds the explicit-scheme bound 0.1*(2 m dx^2/hbar) = " +
          std::to_string(bound) + " s");
    }
  }
}

inline void enforce_hermiticity(DensityMatrixGrid& rho) {
  int n = rho.grid.n;
  for (int j = 0; j < n; ++j) {
    rho.at(j, j) = Complex(rho.at(j, j).real(), 0.0);
    for (int k = j + 1; k < n; ++k) {
      Complex avg = 0.5 * (rho.at(j, k) + std::conj(rho.at(k, j)));
      rho.at(j, k) = avg;
      rho.at(k, j) = std::conj(avg);
    }
  }
}

inline void check_step_invariants(const DensityMatrixGrid& rho) {
  if (!rho.finite()) {
    throw numerical_error("non-finite density matrix at t = " +
                          std::to_string(rho.time) + " s");
  }
  double herm = rho.max_hermiticity_deviation();
  if (herm > 1e-10) {
    throw numerical_error("hermiticity deviation " + std::to_string(herm) +
                          " exceeds 1e-10");
  }
  double tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-6) {
    throw numerical_error("trace drift " + std::to_string(tr - 1.0) +
                          " exceeds 1e-6");
  }
  double scale = std::max(rho.max_diagonal(), 1.0);
  if (rho.min_diagonal() < -1e-10 * scale) {
    throw numerical_error("negative diagonal element below tolerance");
  }
}

// Right-hand side of the master equation on the interior of the grid.
// The outermost ring is held at zero, so stencils never read past it.
inline void master_equation_rhs(const DensityMatrixGrid& rho,
                                const EvolutionConfig& cfg,
                                std::vector<Complex>& out) {
  const int n = rho.grid.n;
  const double dx = rho.grid.dx;
  const double hbar = constants.hbar;
  const double lambda = cfg.include_decoherence
                            ? cfg.decoherence_rate_coefficient()
                            : 0.0;
  const double kin = cfg.include_hamiltonian
                         ? hbar / (2.0 * cfg.mass * dx * dx)
                         : 0.0;  // hbar/2m dx^2, the -(i/hbar)*(-hbar^2/2m) weight
  const Complex i_unit(0.0, 1.0);

  std::fill(out.begin(), out.end(), Complex(0.0, 0.0));

  std::vector<double> v_over_hbar;
  if (cfg.include_hamiltonian && cfg.potential) {
    v_over_hbar.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      v_over_hbar[static_cast<std::size_t>(j)] = evaluate(*cfg.potential, rho.grid.x(j)) / hbar;
    }
  }

  for (int j = 1; j < n - 1; ++j) {
    const double xj = rho.grid.x(j);
    for (int k = 1; k < n - 1; ++k) {
      const double xk = rho.grid.x(k);
      const double sep = xj - xk;
      const Complex r = rho.at(j, k);
      Complex d(0.0, 0.0);

      if (cfg.include_hamiltonian) {
        // -(i/hbar)[H, rho]: kinetic part via second differences on each
        // index, potential part as V(x) - V(x').
        Complex lap_x = rho.at(j + 1, k) - 2.0 * r + rho.at(j - 1, k);
        Complex lap_xp = rho.at(j, k + 1) - 2.0 * r + rho.at(j, k - 1);
        d += i_unit * kin * (lap_x - lap_xp);
        if (cfg.potential) {
          double vdiff = v_over_hbar[static_cast<std::size_t>(j)] -
                         v_over_hbar[static_cast<std::size_t>(k)];
          d -= i_unit * vdiff * r;
        }
      }
      if (cfg.include_dissipation) {
        Complex grad_x = (rho.at(j + 1, k) - rho.at(j - 1, k)) / (2.0 * dx);
        Complex grad_xp = (rho.at(j, k + 1) - rho.at(j, k - 1)) / (2.0 * dx);
        d -= cfg.gamma * sep * (grad_x - grad_xp);
      }
      if (cfg.include_decoherence) {
        d -= lambda * sep * sep * r;
      }
      out[static_cast<std::size_t>(j) * n + k] = d;
    }
  }
}

inline bool decoherence_only(const EvolutionConfig& cfg) {
  return cfg.include_decoherence && !cfg.include_hamiltonian &&
         !cfg.include_dissipation;
}

}  // namespace detail

// Pure cat state |psi><psi| with psi the normalized superposition
// sqrt(weight) g(c1) + sqrt(1-weight) g(c2) of Gaussians of width sigma
// (position standard deviation). Normalization uses the grid trace, so
// dx * sum of the diagonal is 1 up to rounding.
inline DensityMatrixGrid init_cat_state(const GridSpec& grid, double c1,
                                        double c2, double sigma,
                                        double weight) {
  if (!std::isfinite(c1) || !std::isfinite(c2) || c1 == c2) {
    throw validation_error("cat state requires two distinct finite centers");
  }
  if (!std::isfinite(sigma) || sigma <= 2.0 * grid.dx) {
    throw validation_error("cat state sigma must exceed 2*dx = " +
                           std::to_string(2.0 * grid.dx) +
                           " m to be resolvable on the grid");
  }
  if (!(weight > 0.0) || weight > 1.0) {
    throw validation_error("cat state weight must lie in (0, 1]");
  }
  const double margin = 5.0 * sigma;
  for (double c : {c1, c2}) {
    if (c - margin < grid.x_min || c + margin > grid.x_max) {
      throw validation_error("cat state center " + std::to_string(c) +
                             " m is not at least 5 sigma inside the box");
    }
  }

  const int n = grid.n;
  std::vector<double> psi(static_cast<std::size_t>(n));
  const double a1 = std::sqrt(weight);
  const double a2 = std::sqrt(1.0 - weight);
  double norm_sq = 0.0;
  for (int j = 0; j < n; ++j) {
    double x = grid.x(j);
    double g1 = std::exp(-(x - c1) * (x - c1) / (4.0 * sigma * sigma));
    double g2 = std::exp(-(x - c2) * (x - c2) / (4.0 * sigma * sigma));
    psi[static_cast<std::size_t>(j)] = a1 * g1 + a2 * g2;
    norm_sq += psi[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(j)];
  }
  norm_sq *= grid.dx;
  double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (auto& p : psi) p *= inv_norm;

  DensityMatrixGrid rho;
  rho.grid = grid;
  rho.values.assign(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
  rho.time = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      double v = psi[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(k)];
      rho.at(j, k) = Complex(v, 0.0);
      rho.at(k, j) = Complex(v, 0.0);
    }
  }
  return rho;
}

// Advance rho by cfg.dt. Decoherence-only configurations multiply every
// point by its exact exponential factor; anything involving derivatives
// goes through RK4 with the clamped boundary ring.
inline DensityMatrixGrid step(DensityMatrixGrid rho, const EvolutionConfig& cfg) {
  detail::validate_config(cfg, rho.grid);
  const int n = rho.grid.n;

  if (detail::decoherence_only(cfg)) {
    const double lambda = cfg.decoherence_rate_coefficient();
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        double sep = rho.grid.x(j) - rho.grid.x(k);
        rho.at(j, k) *= std::exp(-lambda * sep * sep * cfg.dt);
      }
    }
    rho.time += cfg.dt;
    if (cfg.check_invariants) detail::check_step_invariants(rho);
    return rho;
  }

  const std::size_t size = rho.values.size();
  std::vector<Complex> k1(size), k2(size), k3(size), k4(size), tmp(size);
  DensityMatrixGrid stage = rho;

  detail::master_equation_rhs(rho, cfg, k1);
  for (std::size_t i = 0; i < size; ++i) stage.values[i] = rho.values[i] + 0.5 * cfg.dt * k1[i];
  detail::master_equation_rhs(stage, cfg, k2);
  for (std::size_t i = 0; i < size; ++i) stage.values[i] = rho.values[i] + 0.5 * cfg.dt * k2[i];
  detail::master_equation_rhs(stage, cfg, k3);
  for (std::size_t i = 0; i < size; ++i) stage.values[i] = rho.values[i] + cfg.dt * k3[i];
  detail::master_equation_rhs(stage, cfg, k4);
  for (std::size_t i = 0; i < size; ++i) {
    rho.values[i] += cfg.dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  rho.time += cfg.dt;

  if (!rho.finite()) {
    throw numerical_error("non-finite density matrix after step ending at t = " +
                          std::to_string(rho.time) + " s");
  }
  detail::enforce_hermiticity(rho);
  if (cfg.check_invariants) detail::check_step_invariants(rho);
  return rho;
}

struct CoherenceSample {
  double t;          // s
  double magnitude;  // |rho(c1, c2)|
};

// Off-diagonal magnitude at the cat-coherence peak, one row per snapshot.
inline std::vector<CoherenceSample> coherence_trace(
    const std::vector<DensityMatrixGrid>& series, double c1, double c2) {
  if (series.empty()) {
    throw validation_error("coherence trace requires a non-empty series");
  }
  int j = series.front().grid.nearest(c1);
  int k = series.front().grid.nearest(c2);
  std::vector<CoherenceSample> trace;
  trace.reserve(series.size());
  for (const auto& rho : series) {
    trace.push_back({rho.time, std::abs(rho.at(j, k))});
  }
  return trace;
}

// Ordinary least squares on (t, ln magnitude); returns the negated slope.
inline double fit_decay_rate(const std::vector<CoherenceSample>& series) {
  if (series.size() < 3) {
    throw validation_error("decay fit requires at least 3 samples");
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!(series[i].magnitude > 0.0)) {
      throw validation_error("decay fit requires strictly positive magnitudes");
    }
    if (i > 0 && !(series[i].t > series[i - 1].t)) {
      throw validation_error("decay fit requires a strictly increasing time axis");
    }
  }
  double t_mean = 0.0, y_mean = 0.0;
  for (const auto& s : series) {
    t_mean += s.t;
    y_mean += std::log(s.magnitude);
  }
  t_mean /= static_cast<double>(series.size());
  y_mean /= static_cast<double>(series.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& s : series) {
    double dt = s.t - t_mean;
    sxy += dt * (std::log(s.magnitude) - y_mean);
    sxx += dt * dt;
  }
  if (sxx == 0.0) {
    throw validation_error("decay fit requires a non-degenerate time axis");
  }
  return -sxy / sxx;
}

struct EvolutionResult {
  DensityMatrixGrid final_state;
  std::vector<CoherenceSample> trace;  // sampled at (c1, c2)
  double max_hermiticity_drift = 0.0;
  double max_trace_drift = 0.0;
};

// Drive cfg.steps steps, sampling the coherence magnitude at the nodes
// nearest (c1, c2) every sample_every steps (plus t = 0 and the final
// step), without storing intermediate grids. Drift diagnostics are the
// maxima over all sampled states.
inline EvolutionResult evolve(DensityMatrixGrid rho, const EvolutionConfig& cfg,
                              double c1, double c2, int sample_every = 1) {
  if (cfg.steps < 1) {
    throw validation_error("evolution requires steps >= 1");
  }
  if (sample_every < 1) {
    throw validation_error("sample_every must be >= 1");
  }
  int j = rho.grid.nearest(c1);
  int k = rho.grid.nearest(c2);

  EvolutionResult result;
  result.trace.push_back({rho.time, std::abs(rho.at(j, k))});
  result.max_trace_drift = std::abs(rho.trace() - 1.0);
  result.max_hermiticity_drift = rho.max_hermiticity_deviation();

  for (int s = 1; s <= cfg.steps; ++s) {
    try {
      rho = step(std::move(rho), cfg);
    } catch (const numerical_error& e) {
      throw numerical_error(std::string(e.what()) + " (step " + std::to_string(s) + ")");
    }
    if (s % sample_every == 0 || s == cfg.steps) {
      result.trace.push_back({rho.time, std::abs(rho.at(j, k))});
      result.max_trace_drift =
          std::max(result.max_trace_drift, std::abs(rho.trace() - 1.0));
      result.max_hermiticity_drift = std::max(result.max_hermiticity_drift,
                                              rho.max_hermiticity_deviation());
    }
  }
  result.final_state = std::move(rho);
  return result;
}

inline void write_trace_csv(std::ostream& out,
                            const std::vector<CoherenceSample>& trace) {
  out << "t_s,coherence_abs\n";
  for (const auto& s : trace) {
    out << csv::format_full(s.t) << ',' << csv::format_full(s.magnitude) << '\n';
  }
}

// Full grid snapshot, one row per (x, x') node pair.
inline void write_snapshot_csv(std::ostream& out, const DensityMatrixGrid& rho) {
  out << "x_m,xp_m,re,im\n";
  for (int j = 0; j < rho.grid.n; ++j) {
    for (int k = 0; k < rho.grid.n; ++k) {
      out << csv::format_full(rho.grid.x(j)) << ',' << csv::format_full(rho.grid.x(k))
          << ',' << csv::format_full(rho.at(j, k).real()) << ','
          << csv::format_full(rho.at(j, k).imag()) << '\n';
    }
  }
}

}  // namespace zenodec
