#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Black-box tests of the installed binary: exit codes, artifact layout, and
// byte-level determinism of the emitted files.

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

int next_id() {
  static int id = 0;
  return ++id;
}

CommandResult run_cli(const std::string& args) {
  const fs::path log =
      fs::temp_directory_path() / ("aging_cli_log_" + std::to_string(next_id()) + ".txt");
  const std::string cmd =
      std::string(AGING_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  CommandResult res;
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(log);
  std::ostringstream os;
  os << in.rdbuf();
  res.output = os.str();
  fs::remove(log);
  return res;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Everything that is not a '#' metadata line: the column row plus data rows.
std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("aging_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string fixture(const std::string& name) {
  return std::string(AGING_CONFIG_DIR) + "/" + name;
}

fs::path write_config(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << body;
  return p;
}

const char* kUaBody =
    "process = ua\n"
    "c1 = -4.8\n"
    "c2 = 1\n"
    "p = -300\n"
    "k = 1\n"
    "s0 = 1.3\n";

}  // namespace

TEST_CASE("run: artifacts land in out-dir with exit 0") {
  const fs::path dir = fresh_dir("ring");
  const auto res = run_cli("run " + fixture("ring_degradation.cfg") + " --out-dir " + dir.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("ring:") != std::string::npos);

  const std::string stress = slurp(dir / "ring_degradation_stress.csv");
  CHECK(stress.find("# aging ") != std::string::npos);
  CHECK(stress.find("# process=ring") != std::string::npos);
  CHECK(data_rows(stress).size() == 1001);  // column row + grid_n points
  CHECK(data_rows(stress).front() == "r,sigma_rr,sigma_hoop");

  const std::string curvature = slurp(dir / "ring_degradation_curvature.csv");
  CHECK(data_rows(curvature).front() == "r,gauss_curvature");

  const std::string manifest = slurp(dir / "ring_degradation_manifest.txt");
  CHECK(manifest.find("continuity_residual = ") != std::string::npos);
  CHECK(manifest.find("curvature_final_max = ") != std::string::npos);

  const std::string svg = slurp(dir / "ring_degradation_chart.svg");
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("sigma_hoop") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  // No half-written temporaries left behind.
  CHECK(!fs::exists(dir / "ring_degradation_stress.csv.tmp"));
}

TEST_CASE("run: repeated runs are byte identical") {
  const fs::path a = fresh_dir("sr_a");
  const fs::path b = fresh_dir("sr_b");
  CHECK(run_cli("run " + fixture("sr_relaxation.cfg") + " --out-dir " + a.string()).exit_code == 0);
  CHECK(run_cli("run " + fixture("sr_relaxation.cfg") + " --out-dir " + b.string()).exit_code == 0);
  for (const char* name :
       {"sr_relaxation_timeseries.csv", "sr_relaxation_manifest.txt", "sr_relaxation_chart.svg"}) {
    CHECK_MESSAGE(slurp(a / name) == slurp(b / name), name);
  }
}

TEST_CASE("sweep: single-value sweep reproduces the run rows") {
  const fs::path cfg = write_config("ua_single.cfg", std::string(kUaBody) +
                                                         "sweep_key = s0\n"
                                                         "sweep_values = 1.3\n");
  const fs::path run_dir = fresh_dir("ua_single_run");
  const fs::path sweep_dir = fresh_dir("ua_single_sweep");
  CHECK(run_cli("run " + cfg.string() + " --out-dir " + run_dir.string()).exit_code == 0);
  CHECK(run_cli("sweep " + cfg.string() + " --out-dir " + sweep_dir.string()).exit_code == 0);
  const auto run_rows = data_rows(slurp(run_dir / "ua_single_timeseries.csv"));
  const auto sweep_rows = data_rows(slurp(sweep_dir / "ua_single_run1_timeseries.csv"));
  REQUIRE(run_rows.size() > 10);
  CHECK(run_rows == sweep_rows);

  const std::string summary = slurp(sweep_dir / "ua_single_sweep.csv");
  CHECK(data_rows(summary).size() == 2);  // column row + one value
  CHECK(summary.find("# ordering: shrinkage=n/a") != std::string::npos);
}

TEST_CASE("sweep: defective sweep configs exit 2") {
  const fs::path dir = fresh_dir("sweep_bad");
  const std::string out = " --out-dir " + dir.string();

  const fs::path no_key = write_config("ua_nokey.cfg", kUaBody);
  CHECK(run_cli("sweep " + no_key.string() + out).exit_code == 2);

  const fs::path empty = write_config("ua_empty.cfg", std::string(kUaBody) +
                                                          "sweep_key = s0\n"
                                                          "sweep_values = ,\n");
  const auto res = run_cli("sweep " + empty.string() + out);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("sweep_values") != std::string::npos);

  const auto ring = run_cli("sweep " + fixture("ring_degradation.cfg") + out);
  CHECK(ring.exit_code == 2);
  CHECK(ring.output.find("sweep supports processes ua, sr, creep") != std::string::npos);
}

TEST_CASE("config: unknown keys are rejected with the accepted-key list") {
  const fs::path cfg = write_config("ua_bogus.cfg", std::string(kUaBody) + "bogus = 1\n");
  const fs::path dir = fresh_dir("bogus");
  const auto res = run_cli("run " + cfg.string() + " --out-dir " + dir.string());
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("unknown key 'bogus'") != std::string::npos);
  CHECK(res.output.find("accepted keys:") != std::string::npos);
  for (const char* key : {"c1", "c2", "alpha", "horizon", "tol", "sweep_key", "xi0"}) {
    CHECK_MESSAGE(res.output.find(key) != std::string::npos, key);
  }
}

TEST_CASE("config: parse failures exit 2") {
  const fs::path dir = fresh_dir("parse_bad");
  const std::string out = " --out-dir " + dir.string();
  CHECK(run_cli("run /nonexistent/nowhere.cfg" + out).exit_code == 2);

  const fs::path bad_number =
      write_config("ua_badnum.cfg", std::string(kUaBody) + "horizon = fast\n");
  const auto res = run_cli("run " + bad_number.string() + out);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("expected a number") != std::string::npos);

  const fs::path dup =
      write_config("ua_dup.cfg", std::string(kUaBody) + "c1 = 0\n");
  CHECK(run_cli("run " + dup.string() + out).exit_code == 2);

  const fs::path no_eq = write_config("ua_noeq.cfg", std::string(kUaBody) + "horizon\n");
  CHECK(run_cli("run " + no_eq.string() + out).exit_code == 2);

  // Parameter validation failures are configuration defects as well.
  const fs::path bad_s0 = write_config(
      "ua_bads0.cfg", "process = ua\nc1 = -4.8\nc2 = 1\np = -300\nk = 1\ns0 = 0.5\n");
  CHECK(run_cli("run " + bad_s0.string() + out).exit_code == 2);
}

TEST_CASE("varcheck: seeded run passes and reports per-row errors") {
  const fs::path cfg = write_config("varcheck_small.cfg", "process = varcheck\nsamples = 5\n");
  const fs::path dir = fresh_dir("varcheck");
  const auto res = run_cli("varcheck " + cfg.string() + " --out-dir " + dir.string());
  CHECK(res.exit_code == 0);
  for (const char* row : {"volume-energy", "lapse-energy", "shift-norm", "rate-potential",
                          "spatial-curvature", "shift-divergence", "elastic-energy"}) {
    CHECK_MESSAGE(res.output.find(row) != std::string::npos, row);
  }
  const std::string csv = slurp(dir / "varcheck_small_varcheck.csv");
  CHECK(data_rows(csv).size() == 8);  // column row + seven variation rows
  CHECK(csv.find("# seed=1234") != std::string::npos);

  // A different seed still verifies; an absurd tolerance is a numerical fail.
  CHECK(run_cli("varcheck " + cfg.string() + " --seed 7 --out-dir " + dir.string()).exit_code ==
        0);
  const auto strict =
      run_cli("varcheck " + cfg.string() + " --tol 1e-18 --out-dir " + dir.string());
  CHECK(strict.exit_code == 3);
  CHECK(strict.output.find("exceed tolerance") != std::string::npos);

  // The varcheck subcommand refuses non-verification configs.
  CHECK(run_cli("varcheck " + fixture("ua_shrinkage.cfg") + " --out-dir " + dir.string()).exit_code ==
        2);
}

TEST_CASE("run: necking and creep emit their terminal records") {
  const fs::path dir = fresh_dir("terminal");
  const std::string out = " --out-dir " + dir.string();

  CHECK(run_cli("run " + fixture("necking_kink.cfg") + out).exit_code == 0);
  const std::string profile = slurp(dir / "necking_kink_profile.csv");
  CHECK(data_rows(profile).front() == "tau,stretch,rate");
  const std::string nman = slurp(dir / "necking_kink_manifest.txt");
  CHECK(nman.find("matching_defect = ") != std::string::npos);
  CHECK(nman.find("equilibrium_barrier_type = center") != std::string::npos);

  CHECK(run_cli("run " + fixture("creep_lifetimes.cfg") + out).exit_code == 0);
  const std::string cman = slurp(dir / "creep_lifetimes_manifest.txt");
  CHECK(cman.find("reason = ductile-failure") != std::string::npos);
  const std::string csv = slurp(dir / "creep_lifetimes_timeseries.csv");
  CHECK(csv.find("# event: reason=ductile-failure") != std::string::npos);
  CHECK(data_rows(csv).front() == "t,eta,lapse,sigma_zz,j_drift");

  // Unconstrained aging omits the stress column.
  CHECK(run_cli("run " + fixture("ua_shrinkage.cfg") + out).exit_code == 0);
  CHECK(data_rows(slurp(dir / "ua_shrinkage_timeseries.csv")).front() == "t,xi,lapse,j_drift");
}
