// Command line front end for the aging scenario library.
//
//   aging run <config>       integrate one scenario and write its artifacts
//   aging sweep <config>     repeat a scenario over sweep_values of sweep_key
//   aging varcheck <config>  randomized finite-difference check of the
//                            analytic variation rows
//
// Configs are flat key=value files; see configs/ for worked examples. Every
// output lands in --out-dir as CSV (with the resolved config in '#' header
// lines), a flat manifest, and an SVG chart. Outputs carry no timestamps, so
// repeated runs are byte identical.
//
// Exit codes: 0 success, 2 configuration defect, 3 numerical failure.

#include <string>

#include <CLI11.hpp>

#include "aging/runner.hpp"
#include "aging/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"aging: closed aging scenarios on a rod material metric"};
  app.set_version_flag("--version", std::string("aging ") + aging::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  aging::RunnerOptions opts;
  double tol_flag = 0.0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "path to a key=value config file")->required();
    sub->add_option("--out-dir", opts.out_dir, "directory for CSV/SVG/manifest outputs");
    sub->add_option("--tol", tol_flag, "override the config tolerance");
    sub->add_option("--seed", opts.seed, "seed for randomized verification sampling");
  };

  CLI::App* run = app.add_subcommand("run", "integrate one scenario");
  CLI::App* sweep = app.add_subcommand("sweep", "run a scenario across sweep_values");
  CLI::App* varcheck = app.add_subcommand("varcheck", "verify variation rows by finite differences");
  add_common(run);
  add_common(sweep);
  add_common(varcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* active = run->parsed() ? run : sweep->parsed() ? sweep : varcheck;
  if (active->count("--tol") > 0) opts.tol = tol_flag;
  return aging::run_command(active->get_name(), config_path, opts);
}
