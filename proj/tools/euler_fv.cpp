// Command-line harness: `run` a configured simulation, `eoc` a
// mesh-convergence study, or `check` the scheme's identity/property suite.
//
// Exit codes: 0 success, 2 config error, 3 admissibility failure,
// 4 identity-suite failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eulerfv/convergence.hpp"
#include "eulerfv/run.hpp"
#include "eulerfv/timeloop.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAdmissibility = 3;
constexpr int kExitIdentity = 4;

int cmd_run(const std::string& config_path, int threads) {
  const eulerfv::RunConfig cfg = eulerfv::load_config(config_path);
  const eulerfv::RunResult result = eulerfv::run_simulation(cfg, threads, &std::cout);
  std::cout << "run finished: t = " << result.t << ", steps = " << result.steps
            << ", retries = " << result.retries << "\n"
            << "  |dM|/M0 = " << result.conservation.mass_drift_rel
            << ", |dE|/E0 = " << result.conservation.energy_drift_rel
            << ", min-entropy drift = " << result.conservation.min_entropy_drift << "\n"
            << "  weak BV: B1 = " << result.bv.b1 << ", B2 = " << result.bv.b2
            << ", B3 = " << result.bv.b3 << "\n"
            << "  diagnostics: " << result.diagnostics_path.string() << "\n";
  return 0;
}

int cmd_eoc(const std::string& config_path, int levels, int threads) {
  const eulerfv::RunConfig cfg = eulerfv::load_config(config_path);
  const eulerfv::ConvergenceResult result =
      eulerfv::convergence_study(cfg, levels, threads, &std::cout);
  std::cout << "eoc table: " << result.eoc_path.string() << "\n";
  return 0;
}

int cmd_check(const std::string& config_path, unsigned long long seed) {
  const eulerfv::RunConfig cfg = eulerfv::load_config(config_path);
  const int failures = eulerfv::run_identity_suite(cfg, seed, std::cout);
  return failures == 0 ? 0 : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite volume solver for the complete compressible Euler system"};
  app.require_subcommand(1);

  std::string config_path;
  int threads = 1;
  int levels = 3;
  unsigned long long seed = 12345;

  auto* run = app.add_subcommand("run", "Run one simulation");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--threads", threads, "Worker threads for the residual sweep");

  auto* eoc = app.add_subcommand("eoc", "Mesh-convergence study");
  eoc->add_option("config", config_path, "Config file")->required();
  eoc->add_option("--levels", levels, "Number of mesh halvings in the ladder");
  eoc->add_option("--threads", threads, "Worker threads for the residual sweep");

  auto* check = app.add_subcommand("check", "Identity and property suite on randomized states");
  check->add_option("config", config_path, "Config file")->required();
  check->add_option("--seed", seed, "RNG seed for the randomized states");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, threads);
    if (eoc->parsed()) return cmd_eoc(config_path, levels, threads);
    if (check->parsed()) return cmd_check(config_path, seed);
  } catch (const eulerfv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const eulerfv::AdmissibilityError& e) {
    std::cerr << "admissibility failure: " << e.what() << "\n";
    return kExitAdmissibility;
  } catch (const eulerfv::NonFiniteStateError& e) {
    std::cerr << "non-finite state: " << e.what() << "\n";
    return kExitAdmissibility;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
