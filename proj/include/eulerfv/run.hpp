#pragma once

#include <filesystem>
#include <iosfwd>

#include "eulerfv/config.hpp"
#include "eulerfv/diagnostics.hpp"
#include "eulerfv/output.hpp"

namespace eulerfv {

struct RunResult {
  ConservedField final_state;
  double t = 0.0;
  std::int64_t steps = 0;
  std::int64_t retries = 0;
  FieldTotals initial_totals{};
  FieldTotals final_totals{};
  ConservationReport conservation{};
  WeakBvIntegrals bv{};
  std::filesystem::path diagnostics_path;
};

/// Drive one simulation: initial condition, time loop, diagnostics.csv at
/// the configured cadence, snapshots at the configured times.
RunResult run_simulation(const RunConfig& cfg, int threads = 1, std::ostream* log = nullptr);

/// The `check` verb: the scheme's algebraic identities and sign guarantees
/// evaluated on randomized admissible states over both boundary kinds.
/// Prints one pass/fail line per check; returns the number of failures.
int run_identity_suite(const RunConfig& cfg, unsigned long long seed, std::ostream& out);

}  // namespace eulerfv
