// Prints the full timescale report for the Be9 hyperfine preset and shows
// how the decoherence/Zeno ratio moves with temperature.

#include <cstdio>

#include "zenodec/zenodec.hpp"

int main() {
  using namespace zenodec;

  TrapScenario sc = preset_be9();
  QubitTransition tr = make_transition(sc, QubitState::zero_up, QubitState::zero_down);
  TimescaleReport report = build_report(sc, tr);

  std::printf("%s, transition %s at T = %.3g K\n", sc.label.c_str(),
              transition_name(tr).c_str(), sc.temperature);
  std::printf("  relaxation rate gamma   %.6g 1/s\n", report.gamma);
  std::printf("  relaxation delta        %.6g s\n", report.delta);
  std::printf("  decoherence time        %.6g s\n", report.tau_dec);
  std::printf("  zeno time               %.6g s\n", report.tau_zeno);
  std::printf("  ratio tau_dec/tau_zeno  %.6g\n", report.ratio);
  std::printf("  transitional temp       %.6g K\n", report.t_tran);

  std::printf("\nratio vs temperature (log spaced):\n");
  for (const auto& row : sweep(sc, tr, SweepVariable::temperature, 1e-6, 1e-3, 7)) {
    std::printf("  T = %.3e K  ratio = %.4g %s\n", row.value, row.report.ratio,
                row.report.ratio > 1.0 ? "(decoherence slower than zeno)" : "");
  }
  return 0;
}
