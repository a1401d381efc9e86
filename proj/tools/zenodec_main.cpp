// zenodec command line front end.
//
// Subcommands: potential, discrete, timescales, sweep, evolve, scenario.
// Data goes to stdout (or -o FILE), diagnostics to stderr. Exit statuses:
// 0 success, 2 usage error, 3 validation error, 4 numerical failure.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zenodec/zenodec.hpp"

namespace {

struct OutputTarget {
  std::ofstream file;

  std::ostream& open(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) {
      throw zenodec::validation_error("cannot open output file '" + path + "'");
    }
    return file;
  }
};

double parse_double_field(const std::string& token, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != token.size()) {
    throw zenodec::validation_error(what + " has non-numeric part '" + token + "'");
  }
  return v;
}

int parse_int_field(const std::string& token, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(token, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != token.size()) {
    throw zenodec::validation_error(what + " has a non-integer part '" + token + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.push_back("");
  return parts;
}

// "lo:hi:n" for potential scans
void parse_triplet(const std::string& s, double& lo, double& hi, int& n) {
  auto parts = split(s, ':');
  if (parts.size() != 3) {
    throw zenodec::validation_error("expected lo:hi:n, got '" + s + "'");
  }
  lo = parse_double_field(parts[0], "scan lower bound");
  hi = parse_double_field(parts[1], "scan upper bound");
  n = parse_int_field(parts[2], "scan point count");
}

// "lo:hi" for sweeps
void parse_pair(const std::string& s, double& lo, double& hi) {
  auto parts = split(s, ':');
  if (parts.size() != 2) {
    throw zenodec::validation_error("expected lo:hi, got '" + s + "'");
  }
  lo = parse_double_field(parts[0], "range lower bound");
  hi = parse_double_field(parts[1], "range upper bound");
}

// "0up-0down" -> (from, to)
std::pair<zenodec::QubitState, zenodec::QubitState> parse_transition(
    const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= s.size()) {
    throw zenodec::validation_error(
        "expected a transition of the form FROM-TO (e.g. 0up-0down), got '" + s + "'");
  }
  return {zenodec::parse_qubit_state(s.substr(0, dash)),
          zenodec::parse_qubit_state(s.substr(dash + 1))};
}

// Scenario source plus unit-suffixed overrides shared by the subcommands.
struct ScenarioArgs {
  std::string source = "be9";
  std::string label;
  double mass_amu = 0.0;
  double nu0_ghz = 0.0;
  double nux_mhz = 0.0;
  double width_um = 0.0;
  double temperature_uk = 0.0;
  double epsilon_j = 0.0;
  std::string epsilon_mode;

  CLI::Option* opt_label = nullptr;
  CLI::Option* opt_mass = nullptr;
  CLI::Option* opt_nu0 = nullptr;
  CLI::Option* opt_nux = nullptr;
  CLI::Option* opt_width = nullptr;
  CLI::Option* opt_temperature = nullptr;
  CLI::Option* opt_epsilon = nullptr;
  CLI::Option* opt_mode = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--scenario", source,
                    "Preset name (be9) or path to a scenario file")
        ->capture_default_str();
    opt_label = cmd->add_option("--label", label, "Override the scenario label");
    opt_mass = cmd->add_option("--mass-amu", mass_amu, "Override the ion mass [amu]");
    opt_nu0 = cmd->add_option("--nu0-ghz", nu0_ghz,
                              "Override the hyperfine splitting [GHz]");
    opt_nux = cmd->add_option("--nux-mhz", nux_mhz,
                              "Override the motional splitting [MHz]");
    opt_width = cmd->add_option("--width-um", width_um,
                                "Override the well separation [um]");
    opt_temperature = cmd->add_option("--temperature-uk", temperature_uk,
                                      "Override the cooling temperature [uK]");
    opt_epsilon = cmd->add_option(
        "--epsilon-j", epsilon_j,
        "Override the well asymmetry energy [J] (implies paper_value mode)");
    opt_mode = cmd->add_option("--epsilon-mode", epsilon_mode,
                               "Asymmetry convention: paper_value or h_nu0");
  }

  zenodec::TrapScenario resolve() const {
    zenodec::TrapScenario sc = (source == "be9") ? zenodec::preset_be9()
                                                 : zenodec::load_scenario(source);
    bool any = opt_label->count() || opt_mass->count() || opt_nu0->count() ||
               opt_nux->count() || opt_width->count() ||
               opt_temperature->count() || opt_epsilon->count() ||
               opt_mode->count();
    if (!any) return sc;

    std::string new_label = opt_label->count() ? label : sc.label;
    double new_mass = opt_mass->count() ? mass_amu : sc.mass_amu;
    double new_nu0 = opt_nu0->count() ? nu0_ghz * 1e9 : sc.nu0;
    double new_nux = opt_nux->count() ? nux_mhz * 1e6 : sc.nux;
    double new_w = opt_width->count() ? width_um * 1e-6 : sc.w;
    double new_t = opt_temperature->count() ? temperature_uk * 1e-6 : sc.temperature;
    zenodec::EpsilonMode new_mode = sc.epsilon_mode;
    if (opt_mode->count()) new_mode = zenodec::parse_epsilon_mode(epsilon_mode);
    if (opt_epsilon->count() && !opt_mode->count()) {
      new_mode = zenodec::EpsilonMode::paper_value;
    }
    double new_eps = opt_epsilon->count() ? epsilon_j : sc.epsilon;
    return zenodec::TrapScenario::create(new_label, new_mass, new_nu0, new_nux,
                                         new_w, new_t, new_mode, new_eps);
  }
};

void run_potential(const std::string& scan_spec, double coef_a, double coef_b,
                   const std::string& out_path) {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  parse_triplet(scan_spec, lo, hi, n);
  auto pot = zenodec::QuarticPotential::create(1.0, 1.0, 1.0, coef_a, coef_b);
  auto rows = zenodec::scan(pot, lo, hi, n);
  OutputTarget target;
  zenodec::write_scan_csv(target.open(out_path), rows);
}

void run_discrete(const ScenarioArgs& sargs, const std::string& transition_str,
                  CLI::Option* opt_gap_if, double gap_if_j,
                  CLI::Option* opt_gap_i0, double gap_i0_j,
                  CLI::Option* opt_delta, double delta_s, int iterate,
                  const std::string& out_path) {
  zenodec::TransitionEnergies te{0, 0, 0, 0, 0};
  if (opt_gap_if->count() || opt_gap_i0->count()) {
    if (!opt_gap_if->count() || !opt_gap_i0->count()) {
      throw zenodec::validation_error(
          "--gap-if-j and --gap-i0-j must be given together");
    }
    te = zenodec::TransitionEnergies::create(gap_i0_j, gap_i0_j - gap_if_j, 0.0);
  } else {
    zenodec::TrapScenario sc = sargs.resolve();
    auto [from, to] = parse_transition(transition_str);
    te = zenodec::transition_energies(sc, zenodec::make_transition(sc, from, to));
  }

  double delta = opt_delta->count() ? delta_s : zenodec::relaxation_delta(te);
  if (opt_delta->count()) {
    zenodec::detail::require_positive_finite(delta, "delta [s]");
  }
  double gamma = zenodec::decay_constant(te);
  auto exact = zenodec::decay_exponent(te.gap_i0, delta, zenodec::ExponentMode::exact);
  auto paper = zenodec::decay_exponent(te.gap_i0, delta, zenodec::ExponentMode::paper);

  OutputTarget target;
  std::ostream& out = target.open(out_path);
  namespace csv = zenodec::csv;
  if (iterate > 0) {
    auto amps = zenodec::iterate_difference_equation(te.gap_i0, delta, iterate);
    out << "k,t_s,re,im,abs\n";
    for (std::size_t k = 0; k < amps.size(); ++k) {
      out << k << ',' << csv::format_full(static_cast<double>(k) * delta) << ','
          << csv::format_full(amps[k].real()) << ','
          << csv::format_full(amps[k].imag()) << ','
          << csv::format_full(std::abs(amps[k])) << '\n';
    }
  } else {
    out << "quantity,value\n";
    out << "gap_if_j," << csv::format_full(te.gap_if) << '\n';
    out << "gap_i0_j," << csv::format_full(te.gap_i0) << '\n';
    out << "delta_s," << csv::format_full(delta) << '\n';
    out << "gamma_per_s," << csv::format_full(gamma) << '\n';
    out << "alpha_re_exact_per_s," << csv::format_full(exact.re) << '\n';
    out << "alpha_im_exact_rad_per_s," << csv::format_full(exact.im) << '\n';
    out << "alpha_re_paper_per_s," << csv::format_full(paper.re) << '\n';
    out << "alpha_im_paper_rad_per_s," << csv::format_full(paper.im) << '\n';
    out << "paper_re_over_exact_re," << csv::format_full(paper.re / exact.re) << '\n';
  }
}

void run_timescales(const ScenarioArgs& sargs, const std::string& transition_str,
                    CLI::Option* opt_tau_m, double tau_m_s,
                    const std::string& out_path) {
  zenodec::TrapScenario sc = sargs.resolve();
  auto [from, to] = parse_transition(transition_str);
  auto tr = zenodec::make_transition(sc, from, to);
  auto report = zenodec::build_report(sc, tr);

  if (opt_tau_m->count()) {
    auto te = zenodec::transition_energies(sc, tr);
    auto ctx = zenodec::MeasurementContext::create(tau_m_s, te);
    double dwell = zenodec::dwell_time_weak(te, ctx);
    std::cerr << "dwell time " << zenodec::csv::format_full(dwell)
              << " s at tau_m = " << zenodec::csv::format_full(tau_m_s)
              << " s; sqrt(dwell*tau_m) = "
              << zenodec::csv::format_full(std::sqrt(dwell * tau_m_s))
              << " s vs tau_zeno = " << zenodec::csv::format_full(report.tau_zeno)
              << " s (zeno regime: " << (ctx.zeno_regime_ok ? "yes" : "no")
              << ")\n";
  }

  std::vector<zenodec::SweepRow> rows{
      {"temperature", sc.temperature, report}};
  OutputTarget target;
  zenodec::write_report_csv(target.open(out_path), rows);
}

void run_sweep(const ScenarioArgs& sargs, const std::string& transition_str,
               const std::string& var_str, const std::string& range_str, int n,
               const std::string& out_path) {
  zenodec::TrapScenario sc = sargs.resolve();
  auto [from, to] = parse_transition(transition_str);
  auto tr = zenodec::make_transition(sc, from, to);
  double lo = 0.0, hi = 0.0;
  parse_pair(range_str, lo, hi);
  auto rows = zenodec::sweep(sc, tr, zenodec::parse_sweep_variable(var_str), lo,
                             hi, n);
  OutputTarget target;
  zenodec::write_report_csv(target.open(out_path), rows);
}

struct EvolveArgs {
  std::string transition_str = "0up-0down";
  std::string terms = "decoherence";
  int grid_n = 256;
  double xi_min = -2.0;
  double xi_max = 10.0;
  int steps = 200;
  int sample_every = 1;
  double dt_s = 0.0;
  double sigma_m = 0.0;
  double weight = 0.5;
  double gamma_per_s = 0.0;
  std::string snapshot_path;

  CLI::Option* opt_dt = nullptr;
  CLI::Option* opt_sigma = nullptr;
  CLI::Option* opt_gamma = nullptr;
};

void run_evolve(const ScenarioArgs& sargs, const EvolveArgs& eargs,
                const std::string& out_path) {
  using namespace zenodec;
  TrapScenario sc = sargs.resolve();

  bool want_h = false, want_d = false, want_dec = false;
  for (const auto& term : split(eargs.terms, ',')) {
    if (term == "all") {
      want_h = want_d = want_dec = true;
    } else if (term == "hamiltonian") {
      want_h = true;
    } else if (term == "dissipation") {
      want_d = true;
    } else if (term == "decoherence") {
      want_dec = true;
    } else {
      throw validation_error("unknown term '" + term +
                             "' (expected hamiltonian, dissipation, decoherence, or all)");
    }
  }
  if (!want_h && !want_d && !want_dec) {
    throw validation_error("at least one master-equation term is required");
  }

  const double a = 2.0 * sc.w / 15.0;
  auto pot = QuarticPotential::create(
      sc.mass, omega_from_asymmetry(sc.epsilon, sc.mass, sc.w), a);
  auto points = stationary_points(pot);
  auto grid = GridSpec::create(eargs.xi_min * a, eargs.xi_max * a, eargs.grid_n);

  double c1 = grid.x(grid.nearest(points.x0));
  double c2 = grid.x(grid.nearest(points.x2));
  double sep = std::abs(c2 - c1);

  double sigma = eargs.sigma_m;
  if (!eargs.opt_sigma->count()) {
    double gs_width = std::sqrt(ground_state(pot).msd);
    sigma = gs_width > 2.1 * grid.dx ? gs_width : 2.1 * grid.dx;
  }

  double gamma = eargs.gamma_per_s;
  if (!eargs.opt_gamma->count()) {
    auto [from, to] = parse_transition(eargs.transition_str);
    gamma = decay_constant(
        transition_energies(sc, make_transition(sc, from, to)));
  } else {
    detail::require_positive_finite(gamma, "relaxation rate gamma [1/s]");
  }

  EvolutionConfig cfg;
  cfg.include_hamiltonian = want_h;
  cfg.include_dissipation = want_d;
  cfg.include_decoherence = want_dec;
  cfg.gamma = gamma;
  cfg.temperature = sc.temperature;
  cfg.mass = sc.mass;
  cfg.potential = pot;
  cfg.steps = eargs.steps;

  const double lambda = cfg.decoherence_rate_coefficient();
  double dt = eargs.dt_s;
  if (!eargs.opt_dt->count()) {
    double tau_cat = want_dec ? 1.0 / (lambda * sep * sep) : 0.0;
    if (want_h || want_d) {
      double max_sep = grid.x_max - grid.x_min;
      dt = 0.1 * 2.0 * cfg.mass * grid.dx * grid.dx / constants.hbar;
      if (want_dec) {
        dt = std::min(dt, 0.25 / (lambda * max_sep * max_sep));
        dt = std::min(dt, tau_cat / 25.0);
      }
    } else {
      dt = tau_cat / 25.0;
    }
  }
  cfg.dt = dt;

  auto rho = init_cat_state(grid, c1, c2, sigma, eargs.weight);
  auto result = evolve(std::move(rho), cfg, c1, c2, eargs.sample_every);

  std::cerr << std::setprecision(9);
  std::cerr << "grid: n = " << grid.n << ", dx = " << grid.dx << " m, box ["
            << grid.x_min << ", " << grid.x_max << "] m\n";
  std::cerr << "cat centers " << c1 << " m and " << c2 << " m (separation "
            << sep << " m), sigma = " << sigma << " m, weight = "
            << eargs.weight << "\n";
  std::cerr << "gamma = " << gamma << " 1/s, t step = " << cfg.dt << " s, "
            << cfg.steps << " steps\n";
  if (want_dec) {
    std::cerr << "decoherence coefficient = " << lambda
              << " 1/(m^2 s); predicted off-diagonal rate at the cat separation = "
              << lambda * sep * sep << " 1/s\n";
  }
  try {
    std::cerr << "fitted off-diagonal decay rate = "
              << fit_decay_rate(result.trace) << " 1/s\n";
  } catch (const validation_error&) {
    std::cerr << "fitted off-diagonal decay rate unavailable (magnitudes too small)\n";
  }
  std::cerr << "max hermiticity drift = " << result.max_hermiticity_drift
            << ", max trace drift = " << result.max_trace_drift << "\n";

  if (!eargs.snapshot_path.empty()) {
    std::ofstream snap(eargs.snapshot_path);
    if (!snap) {
      throw validation_error("cannot open snapshot file '" +
                             eargs.snapshot_path + "'");
    }
    write_snapshot_csv(snap, result.final_state);
  }
  OutputTarget target;
  write_trace_csv(target.open(out_path), result.trace);
}

void run_scenario(const ScenarioArgs& sargs, const std::string& out_path) {
  zenodec::TrapScenario sc = sargs.resolve();
  OutputTarget target;
  zenodec::serialize_scenario(target.open(out_path), sc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zenodec: decoherence versus quantum Zeno timescales for laser-cooled "
      "ions in bistable traps"};
  app.require_subcommand(1);

  // potential
  auto* pot_cmd = app.add_subcommand(
      "potential", "Scan the dimensionless quartic double-well shape");
  std::string scan_spec;
  double coef_a = 14.0, coef_b = 45.0;
  std::string pot_out;
  pot_cmd->add_option("--scan", scan_spec,
                      "Scan range lo:hi:n in units of the lattice constant a")
      ->required();
  pot_cmd->add_option("--coef-a", coef_a, "Cubic shape coefficient A [dimensionless]")
      ->capture_default_str();
  pot_cmd->add_option("--coef-b", coef_b, "Quadratic shape coefficient B [dimensionless]")
      ->capture_default_str();
  pot_cmd->add_option("-o,--output", pot_out, "Output CSV path (default: stdout)");
  pot_cmd->callback([&]() { run_potential(scan_spec, coef_a, coef_b, pot_out); });

  // discrete
  auto* disc_cmd = app.add_subcommand(
      "discrete", "Decay exponents and the retarded difference equation");
  ScenarioArgs disc_sargs;
  disc_sargs.attach(disc_cmd);
  std::string disc_transition = "0up-0down";
  double gap_if_j = 0.0, gap_i0_j = 0.0, disc_delta = 0.0;
  int iterate = 0;
  std::string disc_out;
  disc_cmd->add_option("--transition", disc_transition,
                       "Qubit transition FROM-TO (e.g. 0up-0down)")
      ->capture_default_str();
  auto* opt_gap_if = disc_cmd->add_option(
      "--gap-if-j", gap_if_j, "Transition gap E_i - E_f [J] (bypasses the ladder)");
  auto* opt_gap_i0 = disc_cmd->add_option(
      "--gap-i0-j", gap_i0_j, "Ground gap E_i - E_0 [J] (bypasses the ladder)");
  auto* opt_delta = disc_cmd->add_option(
      "--delta-s", disc_delta, "Override the relaxation parameter delta [s]");
  disc_cmd->add_option("--iterate", iterate,
                       "Emit N difference-equation amplitudes instead of the summary");
  disc_cmd->add_option("-o,--output", disc_out, "Output CSV path (default: stdout)");
  disc_cmd->callback([&]() {
    run_discrete(disc_sargs, disc_transition, opt_gap_if, gap_if_j, opt_gap_i0,
                 gap_i0_j, opt_delta, disc_delta, iterate, disc_out);
  });

  // timescales
  auto* ts_cmd = app.add_subcommand(
      "timescales", "Full decoherence/Zeno timescale report for one transition");
  ScenarioArgs ts_sargs;
  ts_sargs.attach(ts_cmd);
  std::string ts_transition = "0up-0down";
  double tau_m_s = 0.0;
  std::string ts_out;
  ts_cmd->add_option("--transition", ts_transition,
                     "Qubit transition FROM-TO (e.g. 0up-0down)")
      ->capture_default_str();
  auto* opt_tau_m = ts_cmd->add_option(
      "--tau-m-s", tau_m_s, "Measurement interval [s]; reports the dwell time on stderr");
  ts_cmd->add_option("-o,--output", ts_out, "Output CSV path (default: stdout)");
  ts_cmd->callback([&]() {
    run_timescales(ts_sargs, ts_transition, opt_tau_m, tau_m_s, ts_out);
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Log-spaced parameter sweep of the timescale report");
  ScenarioArgs sweep_sargs;
  sweep_sargs.attach(sweep_cmd);
  std::string sweep_transition = "0up-0down";
  std::string var_str, range_str;
  int sweep_n = 0;
  std::string sweep_out;
  sweep_cmd->add_option("--transition", sweep_transition,
                        "Qubit transition FROM-TO (e.g. 0up-0down)")
      ->capture_default_str();
  sweep_cmd->add_option("--var", var_str,
                        "Swept variable: temperature [K], width [m], or epsilon [J]")
      ->required();
  sweep_cmd->add_option("--range", range_str, "Sweep range lo:hi in SI units")
      ->required();
  sweep_cmd->add_option("--n", sweep_n, "Number of log-spaced points (>= 2)")
      ->required();
  sweep_cmd->add_option("-o,--output", sweep_out, "Output CSV path (default: stdout)");
  sweep_cmd->callback([&]() {
    run_sweep(sweep_sargs, sweep_transition, var_str, range_str, sweep_n,
              sweep_out);
  });

  // evolve
  auto* ev_cmd = app.add_subcommand(
      "evolve",
      "Integrate the position-space master equation for a two-well cat state");
  ScenarioArgs ev_sargs;
  ev_sargs.attach(ev_cmd);
  EvolveArgs eargs;
  std::string ev_out;
  ev_cmd->add_option("--transition", eargs.transition_str,
                     "Transition FROM-TO fixing the relaxation rate")
      ->capture_default_str();
  ev_cmd->add_option("--terms", eargs.terms,
                     "Comma list of terms: hamiltonian, dissipation, decoherence, or all")
      ->capture_default_str();
  ev_cmd->add_option("--grid-n", eargs.grid_n, "Grid points per axis (>= 32)")
      ->capture_default_str();
  ev_cmd->add_option("--xi-min", eargs.xi_min,
                     "Left box edge in units of the lattice constant a")
      ->capture_default_str();
  ev_cmd->add_option("--xi-max", eargs.xi_max,
                     "Right box edge in units of the lattice constant a")
      ->capture_default_str();
  ev_cmd->add_option("--steps", eargs.steps, "Number of time steps")
      ->capture_default_str();
  ev_cmd->add_option("--sample-every", eargs.sample_every,
                     "Steps between coherence-trace samples")
      ->capture_default_str();
  eargs.opt_dt = ev_cmd->add_option(
      "--dt-s", eargs.dt_s, "Time step [s] (default: auto from stability and decay scales)");
  eargs.opt_sigma = ev_cmd->add_option(
      "--sigma-m", eargs.sigma_m,
      "Cat packet width [m] (default: ground-state width, widened if the grid cannot resolve it)");
  ev_cmd->add_option("--weight", eargs.weight,
                     "Population weight of the left packet, in (0, 1]")
      ->capture_default_str();
  eargs.opt_gamma = ev_cmd->add_option(
      "--gamma-per-s", eargs.gamma_per_s,
      "Relaxation rate [1/s] (default: decay constant of --transition)");
  ev_cmd->add_option("--snapshot", eargs.snapshot_path,
                     "Also write the final density-matrix grid CSV here");
  ev_cmd->add_option("-o,--output", ev_out,
                     "Coherence-trace CSV path (default: stdout)");
  ev_cmd->callback([&]() { run_evolve(ev_sargs, eargs, ev_out); });

  // scenario
  auto* sc_cmd = app.add_subcommand(
      "scenario", "Resolve a scenario (preset or file plus overrides) and write it back out");
  ScenarioArgs sc_sargs;
  sc_sargs.attach(sc_cmd);
  std::string sc_out;
  sc_cmd->add_option("-o,--output", sc_out, "Output path (default: stdout)");
  sc_cmd->callback([&]() { run_scenario(sc_sargs, sc_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const zenodec::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const zenodec::numerical_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
