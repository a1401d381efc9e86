#pragma once

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zenodec/csv.hpp"
#include "zenodec/discrete_dynamics.hpp"
#include "zenodec/errors.hpp"
#include "zenodec/timescales.hpp"
#include "zenodec/units.hpp"

namespace zenodec {

// Named trap configurations and the four-state qubit ladder
// |n,S> with n in {0,1} (motional) and S in {down, up} (hyperfine),
// E(|n,S>) = n h nux + (S = up ? epsilon : 0), ground state |0,down> at 0.

enum class EpsilonMode { paper_value, h_nu0 };

inline std::string epsilon_mode_name(EpsilonMode m) {
  return m == EpsilonMode::paper_value ? "paper_value" : "h_nu0";
}

inline EpsilonMode parse_epsilon_mode(const std::string& s) {
  if (s == "paper_value") return EpsilonMode::paper_value;
  if (s == "h_nu0") return EpsilonMode::h_nu0;
  throw validation_error("unknown epsilon_mode '" + s +
                         "' (expected paper_value or h_nu0)");
}

enum class QubitState { zero_down, zero_up, one_down, one_up };

inline std::string qubit_state_name(QubitState s) {
  switch (s) {
    case QubitState::zero_down: return "0down";
    case QubitState::zero_up: return "0up";
    case QubitState::one_down: return "1down";
    case QubitState::one_up: return "1up";
  }
  throw validation_error("invalid qubit state");
}

inline QubitState parse_qubit_state(const std::string& s) {
  if (s == "0down") return QubitState::zero_down;
  if (s == "0up") return QubitState::zero_up;
  if (s == "1down") return QubitState::one_down;
  if (s == "1up") return QubitState::one_up;
  throw validation_error("unknown qubit state '" + s +
                         "' (expected 0down, 0up, 1down, or 1up)");
}

struct TrapScenario {
  std::string label;
  double mass_amu;       // as configured, kept for lossless round-trips
  double mass;           // kg
  double nu0;            // Hz, hyperfine splitting
  double nux;            // Hz, motional splitting
  double w;              // m, well separation
  double temperature;    // K
  EpsilonMode epsilon_mode;
  double epsilon;        // J, resolved per epsilon_mode

  // epsilon_j is consulted only in paper_value mode; h_nu0 resolves
  // epsilon = h * nu0 regardless.
  static TrapScenario create(std::string label, double mass_amu, double nu0,
                             double nux, double w, double temperature,
                             EpsilonMode mode, double epsilon_j = 0.0) {
    if (label.empty()) {
      throw validation_error("scenario label must be non-empty");
    }
    detail::require_positive_finite(mass_amu, "mass [amu]");
    detail::require_positive_finite(nu0, "hyperfine splitting nu0 [Hz]");
    detail::require_positive_finite(nux, "motional splitting nux [Hz]");
    detail::require_positive_finite(w, "well separation [m]");
    detail::require_positive_finite(temperature, "temperature [K]");
    double epsilon;
    if (mode == EpsilonMode::paper_value) {
      detail::require_positive_finite(epsilon_j, "epsilon [J]");
      epsilon = epsilon_j;
    } else {
      epsilon = frequency_to_energy(nu0);
    }
    return TrapScenario{std::move(label), mass_amu, amu_to_kg(mass_amu),
                        nu0,  nux,      w,
                        temperature,    mode,     epsilon};
  }
};

// Single Be9+ ion in an optical-lattice double well, hyperfine qubit split
// by 1.250 GHz, motional splitting 11 MHz, cooled to 5 uK. The well
// separation of 1 um and the quoted asymmetry 8.5e-25 J reproduce the
// reference timescales (tau_dec ~ 7 ns, tau_Z ~ 0.17 ns, T_tran ~ 200 uK).
inline TrapScenario preset_be9(EpsilonMode mode = EpsilonMode::paper_value) {
  return TrapScenario::create("Be9-hyperfine", 9.012, 1.250e9, 1.1e7, 1e-6,
                              5e-6, mode, 8.5e-25);
}

inline double state_energy(const TrapScenario& sc, QubitState s) {
  double e = 0.0;
  if (s == QubitState::one_down || s == QubitState::one_up) {
    e += frequency_to_energy(sc.nux);
  }
  if (s == QubitState::zero_up || s == QubitState::one_up) {
    e += sc.epsilon;
  }
  return e;
}

struct QubitTransition {
  QubitState from_state;
  QubitState to_state;
  double gap_if;  // J, E_i - E_f
  double gap_i0;  // J, E_i - E(|0,down>)
};

inline QubitTransition make_transition(const TrapScenario& sc, QubitState from,
                                       QubitState to) {
  if (from == to) {
    throw validation_error("transition requires two distinct states");
  }
  double e_i = state_energy(sc, from);
  double e_f = state_energy(sc, to);
  if (e_i < e_f) {
    throw validation_error("transition " + qubit_state_name(from) + " -> " +
                           qubit_state_name(to) +
                           " is uphill; only decays are modeled");
  }
  return QubitTransition{from, to, e_i - e_f, e_i};
}

inline std::string transition_name(const QubitTransition& tr) {
  return qubit_state_name(tr.from_state) + "-" + qubit_state_name(tr.to_state);
}

inline TransitionEnergies transition_energies(const TrapScenario& sc,
                                              const QubitTransition& tr) {
  double e_i = state_energy(sc, tr.from_state);
  double e_f = state_energy(sc, tr.to_state);
  return TransitionEnergies::create(e_i, e_f, 0.0);
}

inline TimescaleReport build_report(const TrapScenario& sc,
                                    const QubitTransition& tr) {
  TransitionEnergies te = transition_energies(sc, tr);
  if (te.degenerate_i0() || te.degenerate_if()) {
    throw validation_error("transition " + transition_name(tr) +
                           " has a vanishing gap; no finite relaxation rate");
  }
  TimescaleReport report;
  report.gamma = decay_constant(te);
  report.delta = relaxation_delta(te);
  report.tau_dec = decoherence_time_doublewell(te, sc.epsilon, sc.mass, sc.w,
                                               sc.temperature);
  report.tau_zeno = zeno_time(te);
  report.ratio = report.tau_dec / report.tau_zeno;
  report.t_tran = transition_temperature(sc.epsilon, sc.mass, sc.w);
  return report;
}

enum class SweepVariable { temperature, width, epsilon };

inline std::string sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::temperature: return "temperature";
    case SweepVariable::width: return "width";
    case SweepVariable::epsilon: return "epsilon";
  }
  throw validation_error("invalid sweep variable");
}

inline SweepVariable parse_sweep_variable(const std::string& s) {
  if (s == "temperature") return SweepVariable::temperature;
  if (s == "width") return SweepVariable::width;
  if (s == "epsilon") return SweepVariable::epsilon;
  throw validation_error("unknown sweep variable '" + s +
                         "' (expected temperature, width, or epsilon)");
}

struct SweepRow {
  std::string variable;
  double value;
  TimescaleReport report;
};

// Log-spaced scan of one scenario parameter; every row rebuilds the
// scenario so derived quantities (epsilon-dependent gaps included) stay
// consistent.
inline std::vector<SweepRow> sweep(const TrapScenario& sc,
                                   const QubitTransition& tr, SweepVariable var,
                                   double lo, double hi, int n) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 0.0 || lo >= hi) {
    throw validation_error("sweep requires 0 < lo < hi");
  }
  if (n < 2) {
    throw validation_error("sweep requires n >= 2 points");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  const double log_lo = std::log(lo);
  const double log_step = (std::log(hi) - log_lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    double value = i == 0 ? lo : (i == n - 1 ? hi : std::exp(log_lo + i * log_step));
    TrapScenario point = sc;
    switch (var) {
      case SweepVariable::temperature:
        point = TrapScenario::create(sc.label, sc.mass_amu, sc.nu0, sc.nux,
                                     sc.w, value, sc.epsilon_mode, sc.epsilon);
        break;
      case SweepVariable::width:
        point = TrapScenario::create(sc.label, sc.mass_amu, sc.nu0, sc.nux,
                                     value, sc.temperature, sc.epsilon_mode,
                                     sc.epsilon);
        break;
      case SweepVariable::epsilon:
        point = TrapScenario::create(sc.label, sc.mass_amu, sc.nu0, sc.nux,
                                     sc.w, sc.temperature,
                                     EpsilonMode::paper_value, value);
        break;
    }
    QubitTransition ptr = make_transition(point, tr.from_state, tr.to_state);
    rows.push_back({sweep_variable_name(var), value, build_report(point, ptr)});
  }
  return rows;
}

inline void write_report_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "variable,value,gamma_per_s,delta_s,tau_dec_s,tau_zeno_s,ratio,t_tran_k\n";
  for (const auto& row : rows) {
    out << row.variable << ',' << csv::format_full(row.value) << ','
        << csv::format_full(row.report.gamma) << ','
        << csv::format_full(row.report.delta) << ','
        << csv::format_full(row.report.tau_dec) << ','
        << csv::format_full(row.report.tau_zeno) << ','
        << csv::format_full(row.report.ratio) << ','
        << csv::format_full(row.report.t_tran) << '\n';
  }
}

inline void serialize_scenario(std::ostream& out, const TrapScenario& sc) {
  out << "label = " << sc.label << '\n';
  out << "mass_amu = " << csv::format_full(sc.mass_amu) << '\n';
  out << "nu0_hz = " << csv::format_full(sc.nu0) << '\n';
  out << "nux_hz = " << csv::format_full(sc.nux) << '\n';
  out << "well_width_m = " << csv::format_full(sc.w) << '\n';
  out << "temperature_k = " << csv::format_full(sc.temperature) << '\n';
  out << "epsilon_mode = " << epsilon_mode_name(sc.epsilon_mode) << '\n';
  if (sc.epsilon_mode == EpsilonMode::paper_value) {
    out << "epsilon_j = " << csv::format_full(sc.epsilon) << '\n';
  }
}

namespace detail {

inline double parse_scenario_number(const std::map<std::string, std::string>& kv,
                                    const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw validation_error("scenario file is missing required key '" + key + "'");
  }
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(it->second, &pos);
  } catch (const std::exception&) {
    throw validation_error("scenario key '" + key + "' has non-numeric value '" +
                           it->second + "'");
  }
  if (pos != it->second.size()) {
    throw validation_error("scenario key '" + key + "' has trailing junk in '" +
                           it->second + "'");
  }
  if (!std::isfinite(v) || v <= 0.0) {
    throw validation_error("scenario key '" + key +
                           "' must be positive and finite, got '" + it->second +
                           "'");
  }
  return v;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

// Flat `key = value` format, one pair per line, '#' comments allowed.
inline TrapScenario parse_scenario(std::istream& in) {
  static const char* known[] = {"label",        "mass_amu",     "nu0_hz",
                                "nux_hz",       "well_width_m", "temperature_k",
                                "epsilon_mode", "epsilon_j"};
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw validation_error("scenario file line " + std::to_string(lineno) +
                             " is not a key = value pair");
    }
    std::string key = detail::trim(t.substr(0, eq));
    std::string value = detail::trim(t.substr(eq + 1));
    bool recognized = false;
    for (const char* k : known) recognized = recognized || key == k;
    if (!recognized) {
      throw validation_error("scenario file line " + std::to_string(lineno) +
                             " has unknown key '" + key + "'");
    }
    if (kv.count(key)) {
      throw validation_error("scenario file repeats key '" + key + "'");
    }
    kv[key] = value;
  }

  auto label_it = kv.find("label");
  if (label_it == kv.end() || label_it->second.empty()) {
    throw validation_error("scenario file is missing required key 'label'");
  }
  auto mode_it = kv.find("epsilon_mode");
  if (mode_it == kv.end()) {
    throw validation_error("scenario file is missing required key 'epsilon_mode'");
  }
  EpsilonMode mode = parse_epsilon_mode(mode_it->second);
  double epsilon_j = 0.0;
  if (mode == EpsilonMode::paper_value) {
    epsilon_j = detail::parse_scenario_number(kv, "epsilon_j");
  }
  return TrapScenario::create(label_it->second,
                              detail::parse_scenario_number(kv, "mass_amu"),
                              detail::parse_scenario_number(kv, "nu0_hz"),
                              detail::parse_scenario_number(kv, "nux_hz"),
                              detail::parse_scenario_number(kv, "well_width_m"),
                              detail::parse_scenario_number(kv, "temperature_k"),
                              mode, epsilon_j);
}

inline TrapScenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw validation_error("cannot open scenario file '" + path + "'");
  }
  return parse_scenario(in);
}

}  // namespace zenodec
