#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hodge {

struct VerifyConfig {
  /// Largest module dimension for the exhaustive sweeps.
  int max_dim = 5;
  std::uint64_t seed = 7;
};

struct SweepResult {
  int criterion = 0;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// Extra deterministic counters worth reporting.
  std::string detail;
  /// First few failing cases, in sweep order.
  std::vector<std::string> samples;
  /// Wall time; kept out of the report so reports stay byte-identical.
  double seconds = 0;

  bool ok() const { return failures == 0 && cases > 0; }
};

SweepResult sweep_dominance(const VerifyConfig& config);
SweepResult sweep_hodge_identity(const VerifyConfig& config);
SweepResult sweep_hdg_pr(const VerifyConfig& config);
SweepResult sweep_e3_bijection(const VerifyConfig& config);
SweepResult sweep_hdg_filt(const VerifyConfig& config);
SweepResult sweep_lifting(const VerifyConfig& config, int feasible_cases = 500, int infeasible_cases = 100);
SweepResult sweep_isotropic(const VerifyConfig& config);
SweepResult sweep_degeneration(const VerifyConfig& config);

/// Criteria 1-8 in order; sweeps run on worker threads, results are
/// returned sorted by criterion.
std::vector<SweepResult> run_all(const VerifyConfig& config);

/// One line per sweep plus a summary line; no timings.
std::string format_report(const VerifyConfig& config, const std::vector<SweepResult>& results);

}  // namespace hodge
