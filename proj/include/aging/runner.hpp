#ifndef AGING_RUNNER_HPP
#define AGING_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace aging {

struct RunnerOptions {
  std::string out_dir = ".";
  std::optional<double> tol;   // overrides the config 'tol' key when set
  std::uint64_t seed = 1234;   // affects randomized verification sampling only
};

// Executes one subcommand ("run", "sweep", "varcheck") against a config file.
// Returns the process exit code: 0 on success, 2 for configuration defects,
// 3 for numerical failures.
int run_command(const std::string& subcommand, const std::string& config_path,
                const RunnerOptions& opts);

}  // namespace aging

#endif
