#include "aging/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aging/config.hpp"
#include "aging/csv.hpp"
#include "aging/necking.hpp"
#include "aging/processes.hpp"
#include "aging/ring.hpp"
#include "aging/svg.hpp"
#include "aging/varcheck.hpp"
#include "aging/version.hpp"

namespace aging {
namespace {

namespace fs = std::filesystem;

std::string config_stem(const std::string& path) { return fs::path(path).stem().string(); }

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::string trim_copy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

void emit_resolved_header(CsvBuilder& csv, const ConfigReader& reader) {
  csv.comment("aging " + std::string(kVersion));
  for (const auto& [key, value] : reader.resolved()) csv.comment(key + "=" + value);
}

// Flat key = value report next to each CSV; same syntax as the config files.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value) {
    lines_.push_back(key + " = " + value);
  }
  void set(const std::string& key, double value) { set(key, format_field(value)); }
  void set(const std::string& key, long value) { set(key, std::to_string(value)); }
  std::string str() const {
    std::ostringstream os;
    for (const auto& line : lines_) os << line << "\n";
    return os.str();
  }

 private:
  std::vector<std::string> lines_;
};

// A dynamic scenario bundles one closed aging system with its initial state
// and integration window.
struct DynamicScenario {
  ProcessSpec spec;
  ProcessState initial{0.0, 1.0, 0.0};
  ProcessRunOptions run{};
  std::string strain_column;  // "xi" or "eta"
  bool stress_column = false;
};

double effective_tolerance(ConfigReader& reader, const RunnerOptions& opts, double fallback) {
  double tol = reader.number_or("tol", fallback);
  if (opts.tol) {
    tol = *opts.tol;
    reader.record("tol", format_field(tol));
  }
  if (!(tol > 0.0 && tol < 1.0)) {
    throw ConfigError("config " + std::string(reader.origin()) +
                      ": tol must lie in (0, 1), got " + format_field(tol));
  }
  return tol;
}

DynamicScenario make_dynamic(const std::string& process, ConfigReader& reader,
                             const RunnerOptions& opts) {
  DynamicScenario sc;
  if (process == "ua") {
    UnconstrainedAging p;
    p.form.c1 = reader.number("c1");
    p.form.c2 = reader.number("c2");
    p.form.p = reader.number("p");
    p.form.k = reader.number("k");
    p.alpha = reader.number_or("alpha", -1.0);
    sc.spec = p;
    sc.initial = ProcessState{0.0, reader.number_or("s0", 1.0), reader.number_or("xi0", 0.0)};
    sc.run.horizon = reader.number_or("horizon", 1.0);
    sc.strain_column = "xi";
    sc.stress_column = false;
  } else if (process == "sr") {
    StressRelaxation p;
    p.form.q1 = reader.number("q1");
    p.form.q2 = reader.number("q2");
    p.form.b0 = reader.number("b0");
    p.form.b1 = reader.number("b1");
    p.form.a1 = reader.number("a1");
    p.young = reader.number("young");
    p.eta_star = reader.number("eta_star");
    p.rate_scale = reader.number_or("rate_scale", 1.0);
    sc.spec = p;
    sc.initial = ProcessState{0.0, reader.number_or("s0", 1.0), reader.number_or("eta0", 0.0)};
    sc.run.horizon = reader.number_or("horizon", 10.0);
    sc.strain_column = "eta";
    sc.stress_column = true;
  } else if (process == "creep") {
    Creep p;
    p.form.q1 = reader.number("q1");
    p.form.q2 = reader.number("q2");
    p.form.b0 = reader.number("b0");
    p.form.b1 = reader.number("b1");
    p.form.a1 = reader.number("a1");
    p.young = reader.number("young");
    p.area0 = reader.number("area0");
    p.force = reader.number("force");
    p.rate_scale = reader.number_or("rate_scale", 1.0);
    p.compliance = reader.optional_number("compliance");
    p.eta_cap = reader.number_or("eta_cap", 5.0);
    sc.spec = p;
    sc.initial = ProcessState{0.0, reader.number_or("s0", 1.0), reader.number_or("eta0", 0.0)};
    sc.run.horizon = reader.number_or("horizon", 1e9);
    sc.strain_column = "eta";
    sc.stress_column = true;
  } else {
    throw ConfigError("config " + std::string(reader.origin()) + ": unknown process '" + process +
                      "'");
  }
  const double tol = effective_tolerance(reader, opts, 1e-10);
  sc.run.integrator.rel_tol = tol;
  sc.run.integrator.abs_tol = tol * 1e-2;
  return sc;
}

struct DynamicOutcome {
  bool ok = false;
  std::string error;
  std::string reason;
  ProcessState final_state{};
  std::optional<double> sigma_final;
  double j_drift_max = 0.0;
  std::vector<double> chart_t, chart_y;  // per-process primary series
};

const char* chart_quantity(const std::string& process) {
  if (process == "ua") return "relative volume change";
  if (process == "sr") return "sigma_zz";
  return "eta";
}

const char* process_title(const std::string& process) {
  if (process == "ua") return "unconstrained aging";
  if (process == "sr") return "stress relaxation";
  return "creep";
}

// Integrates one scenario and writes <stem>_timeseries.csv, <stem>_manifest.txt
// and <stem>_chart.svg into out_dir.
DynamicOutcome execute_dynamic(const ConfigReader& reader, const DynamicScenario& sc,
                               const std::string& process, const std::string& stem,
                               const RunnerOptions& opts) {
  DynamicOutcome out;
  ProcessResult res;
  try {
    res = run_process(sc.spec, sc.initial, sc.run);
  } catch (const std::invalid_argument&) {
    throw;  // parameter validation failure, configuration defect
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }

  const std::vector<ProcessState> states = res.states();
  const double j0 = first_integral(sc.spec, states.front());
  const double j_scale = std::max(1.0, std::abs(j0));

  CsvBuilder csv;
  emit_resolved_header(csv, reader);
  std::vector<std::string> columns{"t", sc.strain_column, "lapse"};
  if (sc.stress_column) columns.push_back("sigma_zz");
  columns.push_back("j_drift");
  csv.columns(columns);
  for (const ProcessState& st : states) {
    const double drift = (first_integral(sc.spec, st) - j0) / j_scale;
    out.j_drift_max = std::max(out.j_drift_max, std::abs(drift));
    std::vector<double> row{st.time, st.strain, st.lapse};
    if (sc.stress_column) row.push_back(stress_output(sc.spec, st).value_or(0.0));
    row.push_back(drift);
    csv.row(row);
    out.chart_t.push_back(st.time);
    if (process == "ua") {
      out.chart_y.push_back(std::expm1(3.0 * st.strain));
    } else if (process == "sr") {
      out.chart_y.push_back(stress_output(sc.spec, st).value_or(0.0));
    } else {
      out.chart_y.push_back(st.strain);
    }
  }

  out.final_state = states.back();
  out.reason = termination_name(res.reason);
  out.sigma_final = stress_output(sc.spec, out.final_state);
  {
    std::ostringstream ev;
    ev << "event: reason=" << out.reason << " t=" << format_field(out.final_state.time)
       << " lapse=" << format_field(out.final_state.lapse) << " " << sc.strain_column << "="
       << format_field(out.final_state.strain);
    csv.footer(ev.str());
  }
  write_file_atomic(join_path(opts.out_dir, stem + "_timeseries.csv"), csv.str());

  Manifest man;
  man.set("process", process);
  man.set("reason", out.reason);
  man.set("t_final", out.final_state.time);
  man.set("lapse_final", out.final_state.lapse);
  man.set(sc.strain_column + "_final", out.final_state.strain);
  if (out.sigma_final) man.set("sigma_zz_final", *out.sigma_final);
  man.set("j_initial", j0);
  man.set("j_final", first_integral(sc.spec, out.final_state));
  man.set("j_drift_rel_max", out.j_drift_max);
  man.set("steps_accepted", res.trajectory.steps_accepted);
  man.set("steps_rejected", res.trajectory.steps_rejected);
  man.set("samples", static_cast<long>(states.size()));
  if (states.size() >= 3 && out.final_state.time > states.front().time) {
    // Informational energy balance on a coarse uniform resample: the Legendre
    // energy is conserved, so the centered derivative should vanish.
    const int n = 12;
    const double t0 = states.front().time;
    const double dt = (out.final_state.time - t0) / (n - 1);
    std::vector<ProcessState> resampled;
    resampled.reserve(n);
    for (int i = 0; i < n; ++i) resampled.push_back(res.state_at(t0 + dt * i));
    double worst = 0.0;
    for (double r : energy_balance_residual(sc.spec, resampled)) {
      worst = std::max(worst, std::abs(r));
    }
    man.set("energy_residual_max", worst);
  }
  write_file_atomic(join_path(opts.out_dir, stem + "_manifest.txt"), man.str());

  SvgChart chart;
  chart.title = process_title(process);
  chart.x_label = "t";
  chart.y_label = chart_quantity(process);
  chart.series.push_back({"", out.chart_t, out.chart_y});
  write_file_atomic(join_path(opts.out_dir, stem + "_chart.svg"), render_line_chart(chart));

  out.ok = true;
  return out;
}

int do_run_dynamic(ConfigReader& reader, const std::string& process, const std::string& stem,
                   const RunnerOptions& opts) {
  // The sweep keys stay legal under `run` so one file can serve both
  // subcommands; `run` uses the scalar keys as written.
  reader.allow("sweep_key");
  reader.allow("sweep_values");
  const DynamicScenario sc = make_dynamic(process, reader, opts);
  reader.finish();
  const DynamicOutcome out = execute_dynamic(reader, sc, process, stem, opts);
  if (!out.ok) {
    std::cerr << "error: " << process << " run failed: " << out.error << "\n";
    return 3;
  }
  std::cout << process << ": reason=" << out.reason
            << " t_final=" << format_field(out.final_state.time)
            << " lapse_final=" << format_field(out.final_state.lapse) << " " << sc.strain_column
            << "_final=" << format_field(out.final_state.strain)
            << " j_drift=" << format_field(out.j_drift_max) << "\n";
  return 0;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim_copy(item));
  return out;
}

const char* ordering_label(const std::vector<double>& v) {
  if (v.size() < 2) return "n/a";
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    inc = inc && v[i] > v[i - 1];
    dec = dec && v[i] < v[i - 1];
  }
  if (inc) return "strictly-increasing";
  if (dec) return "strictly-decreasing";
  return "neither";
}

int do_sweep(const ConfigMap& base, const std::string& process, const std::string& stem,
             const RunnerOptions& opts) {
  if (process != "ua" && process != "sr" && process != "creep") {
    throw ConfigError("config " + base.origin + ": sweep supports processes ua, sr, creep, got '" +
                      process + "'");
  }
  const auto key_it = base.entries.find("sweep_key");
  const auto values_it = base.entries.find("sweep_values");
  if (key_it == base.entries.end() || values_it == base.entries.end()) {
    throw ConfigError("config " + base.origin + ": sweep requires sweep_key and sweep_values");
  }
  const std::string sweep_key = key_it->second;
  if (sweep_key == "process" || sweep_key == "sweep_key" || sweep_key == "sweep_values") {
    throw ConfigError("config " + base.origin + ": cannot sweep key '" + sweep_key + "'");
  }
  const std::vector<std::string> tokens = split_tokens(values_it->second);
  if (tokens.empty()) {
    throw ConfigError("config " + base.origin + ": sweep_values must be a non-empty list");
  }
  for (const auto& token : tokens) {
    if (token.empty()) {
      throw ConfigError("config " + base.origin + ": sweep_values has an empty element");
    }
    parse_number(token, "config " + base.origin + ", key 'sweep_values'");
  }

  struct SweepRow {
    std::string token;
    double value;
    bool ok;
    std::string reason_or_error;
    ProcessState final_state;
    std::optional<double> sigma_final;
    double j_drift;
    std::string file;
  };
  std::vector<SweepRow> rows;
  SvgChart overlay;
  overlay.title = std::string(process_title(process)) + " sweep over " + sweep_key;
  overlay.x_label = "t";
  overlay.y_label = chart_quantity(process);

  std::string strain_column = "xi";
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    ConfigMap variant = base;
    variant.entries.erase("sweep_key");
    variant.entries.erase("sweep_values");
    variant.entries[sweep_key] = tokens[k];
    ConfigReader reader(variant);
    reader.text("process");
    const DynamicScenario sc = make_dynamic(process, reader, opts);
    reader.finish();
    strain_column = sc.strain_column;

    SweepRow row;
    row.token = tokens[k];
    row.value = parse_number(tokens[k], "sweep value");
    const std::string run_stem = stem + "_run" + std::to_string(k + 1);
    const DynamicOutcome out = execute_dynamic(reader, sc, process, run_stem, opts);
    row.ok = out.ok;
    if (out.ok) {
      row.reason_or_error = out.reason;
      row.final_state = out.final_state;
      row.sigma_final = out.sigma_final;
      row.j_drift = out.j_drift_max;
      row.file = run_stem + "_timeseries.csv";
      overlay.series.push_back({sweep_key + "=" + tokens[k], out.chart_t, out.chart_y});
    } else {
      row.reason_or_error = out.error;
    }
    rows.push_back(std::move(row));
  }

  ConfigReader header_reader(base);
  header_reader.text("process");
  header_reader.text("sweep_key");
  header_reader.text("sweep_values");
  for (const auto& [key, value] : base.entries) header_reader.allow(key);

  CsvBuilder csv;
  emit_resolved_header(csv, header_reader);
  std::vector<std::string> columns{sweep_key, "t_final", "lapse_final", strain_column + "_final"};
  if (process == "ua") {
    columns.push_back("shrinkage");
    columns.push_back("volume_change");
  } else {
    columns.push_back("sigma_zz_final");
  }
  columns.push_back("j_drift");
  csv.columns(columns);

  std::vector<std::vector<double>> outcome_series(columns.size());
  int successes = 0;
  for (const SweepRow& row : rows) {
    if (!row.ok) continue;
    ++successes;
    std::vector<double> fields{row.value, row.final_state.time, row.final_state.lapse,
                               row.final_state.strain};
    if (process == "ua") {
      fields.push_back(-3.0 * row.final_state.strain);
      fields.push_back(std::expm1(3.0 * row.final_state.strain));
    } else {
      fields.push_back(row.sigma_final.value_or(0.0));
    }
    fields.push_back(row.j_drift);
    csv.row(fields);
    for (std::size_t c = 0; c < fields.size(); ++c) outcome_series[c].push_back(fields[c]);
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const SweepRow& row = rows[k];
    std::ostringstream line;
    if (row.ok) {
      line << "run " << k + 1 << ": " << sweep_key << "=" << row.token
           << " reason=" << row.reason_or_error << " file=" << row.file;
    } else {
      line << "failed " << k + 1 << ": " << sweep_key << "=" << row.token
           << " error=" << row.reason_or_error;
    }
    csv.footer(line.str());
  }
  for (std::size_t c = 1; c < columns.size(); ++c) {
    csv.footer("ordering: " + columns[c] + "=" + ordering_label(outcome_series[c]));
  }
  write_file_atomic(join_path(opts.out_dir, stem + "_sweep.csv"), csv.str());
  write_file_atomic(join_path(opts.out_dir, stem + "_sweep.svg"), render_line_chart(overlay));

  for (const SweepRow& row : rows) {
    if (!row.ok) {
      std::cerr << "error: sweep " << sweep_key << "=" << row.token
                << " failed: " << row.reason_or_error << "\n";
    }
  }
  std::cout << "sweep: " << successes << "/" << rows.size() << " runs succeeded\n";
  return successes > 0 ? 0 : 3;
}

int do_necking(ConfigReader& reader, const std::string& stem, const RunnerOptions& opts) {
  NeckingDoubleWell<double> well{};
  well.a = reader.number("well_a");
  well.b = reader.number("well_b");
  well.lambda0 = reader.number_or("lambda0", 1.0);
  well.lambda1 = reader.number("lambda1");
  const DissipativePotential<double> chi =
      QuadraticPotential<double>{reader.number_or("chi_alpha", 1.0)};
  const double offset = reader.number_or("offset", 1e-8);
  reader.finish();

  const std::vector<Equilibrium> eqs = classify_equilibria(well, chi);
  const KinkProfile prof = kink_profile(well, chi, offset);

  CsvBuilder csv;
  emit_resolved_header(csv, reader);
  csv.columns({"tau", "stretch", "rate"});
  for (std::size_t i = 0; i < prof.tau.size(); ++i) {
    csv.row({prof.tau[i], prof.stretch[i], prof.rate[i]});
  }
  csv.footer("event: reason=matched matching_defect=" + format_field(prof.matching_defect));
  write_file_atomic(join_path(opts.out_dir, stem + "_profile.csv"), csv.str());

  Manifest man;
  man.set("process", std::string("necking"));
  man.set("matching_defect", prof.matching_defect);
  man.set("samples", static_cast<long>(prof.tau.size()));
  man.set("stretch_first", prof.stretch.front());
  man.set("stretch_last", prof.stretch.back());
  const char* names[3] = {"left", "barrier", "right"};
  for (int i = 0; i < 3; ++i) {
    man.set(std::string("equilibrium_") + names[i] + "_stretch", eqs[i].stretch);
    man.set(std::string("equilibrium_") + names[i] + "_type",
            eqs[i].type == EquilibriumType::Saddle ? "saddle" : "center");
    man.set(std::string("equilibrium_") + names[i] + "_eig_re", eqs[i].eigenvalue.real());
    man.set(std::string("equilibrium_") + names[i] + "_eig_im", eqs[i].eigenvalue.imag());
  }
  write_file_atomic(join_path(opts.out_dir, stem + "_manifest.txt"), man.str());

  SvgChart chart;
  chart.title = "necking kink profile";
  chart.x_label = "tau";
  chart.y_label = "stretch";
  chart.series.push_back({"", prof.tau, prof.stretch});
  write_file_atomic(join_path(opts.out_dir, stem + "_chart.svg"), render_line_chart(chart));

  std::cout << "necking: samples=" << prof.tau.size()
            << " matching_defect=" << format_field(prof.matching_defect) << "\n";
  return 0;
}

int do_ring(ConfigReader& reader, const std::string& stem, const RunnerOptions& opts) {
  RingSpec spec{};
  spec.young = reader.number("young");
  spec.poisson = reader.number("poisson");
  spec.r_inner = reader.number("r_inner");
  spec.r_interface = reader.number("r_interface");
  spec.r_outer = reader.number("r_outer");
  spec.density_loss = reader.number("density_loss");
  spec.exact_shrinkage = reader.flag_or("exact_shrinkage", true);
  const double grid_raw = reader.number_or("grid_n", 1000.0);
  reader.finish();
  const int grid_n = static_cast<int>(grid_raw);
  if (grid_n < 8 || static_cast<double>(grid_n) != grid_raw) {
    throw ConfigError("config " + std::string(reader.origin()) +
                      ": grid_n must be an integer >= 8");
  }

  const RingStressState st = ring_stress_state(spec);

  CsvBuilder stress_csv;
  emit_resolved_header(stress_csv, reader);
  stress_csv.columns({"r", "sigma_rr", "sigma_hoop"});
  std::vector<double> rg(grid_n), srr(grid_n), shp(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    const double r = spec.r_inner + (spec.r_outer - spec.r_inner) * i / (grid_n - 1);
    rg[i] = r;
    srr[i] = st.sigma_radial(r);
    shp[i] = st.sigma_hoop(r);
    stress_csv.row({r, srr[i], shp[i]});
  }
  for (const std::string& w : st.warnings) stress_csv.footer("warning: " + w);
  write_file_atomic(join_path(opts.out_dir, stem + "_stress.csv"), stress_csv.str());

  const CurvatureProfile final_curv = gauss_curvature(composite_metric(spec, grid_n));
  const CurvatureProfile degraded_curv = gauss_curvature(degraded_metric(spec, grid_n));
  CsvBuilder curv_csv;
  emit_resolved_header(curv_csv, reader);
  curv_csv.columns({"r", "gauss_curvature"});
  for (std::size_t i = 0; i < final_curv.r.size(); ++i) {
    curv_csv.row({final_curv.r[i], final_curv.k[i]});
  }
  write_file_atomic(join_path(opts.out_dir, stem + "_curvature.csv"), curv_csv.str());

  double final_max = 0.0;
  for (double k : final_curv.k) final_max = std::max(final_max, std::abs(k));
  double degraded_max = 0.0;
  for (double k : degraded_curv.k) degraded_max = std::max(degraded_max, std::abs(k));

  Manifest man;
  man.set("process", std::string("ring"));
  man.set("epsilon", st.epsilon);
  man.set("gap_width", st.gap_width);
  man.set("closure_strain", st.closure_strain);
  man.set("sigma_interface", st.sigma_interface);
  man.set("sigma_hoop_inner", st.sigma_hoop_inner);
  man.set("sigma_hoop_outer", st.sigma_hoop_outer);
  man.set("continuity_residual", st.continuity_residual);
  man.set("curvature_final_max", final_max);
  man.set("curvature_degraded_max", degraded_max);
  man.set("warning_count", static_cast<long>(st.warnings.size()));
  for (std::size_t i = 0; i < st.warnings.size(); ++i) {
    man.set("warning_" + std::to_string(i + 1), st.warnings[i]);
  }
  write_file_atomic(join_path(opts.out_dir, stem + "_manifest.txt"), man.str());

  SvgChart chart;
  chart.title = "ring stress profile";
  chart.x_label = "r";
  chart.y_label = "stress";
  chart.series.push_back({"sigma_rr", rg, srr});
  chart.series.push_back({"sigma_hoop", rg, shp});
  write_file_atomic(join_path(opts.out_dir, stem + "_chart.svg"), render_line_chart(chart));

  std::cout << "ring: sigma_interface=" << format_field(st.sigma_interface)
            << " continuity_residual=" << format_field(st.continuity_residual)
            << " curvature_final_max=" << format_field(final_max) << "\n";
  return 0;
}

int do_varcheck(ConfigReader& reader, const std::string& stem, const RunnerOptions& opts) {
  if (reader.has("seed")) {
    throw ConfigError("config " + std::string(reader.origin()) +
                      ": seed is a command-line flag, not a config key");
  }
  const double samples_raw = reader.number_or("samples", 100.0);
  const double tol = effective_tolerance(reader, opts, 1e-6);
  reader.record("seed", std::to_string(opts.seed));
  reader.finish();
  const int samples = static_cast<int>(samples_raw);
  if (samples < 1 || static_cast<double>(samples) != samples_raw) {
    throw ConfigError("config " + std::string(reader.origin()) +
                      ": samples must be a positive integer");
  }

  const std::vector<VarcheckRow> rows = run_varcheck(opts.seed, samples);

  CsvBuilder csv;
  emit_resolved_header(csv, reader);
  csv.columns({"row", "samples", "max_rel_error", "status"});
  std::printf("%-20s %8s  %13s  %s\n", "row", "samples", "max_rel_error", "status");
  int failures = 0;
  for (const VarcheckRow& row : rows) {
    const bool pass = row.max_error <= tol;
    failures += pass ? 0 : 1;
    std::printf("%-20s %8d  %13.3e  %s\n", row.name.c_str(), row.samples, row.max_error,
                pass ? "ok" : "FAIL");
    csv.row_text({row.name, std::to_string(row.samples), format_field(row.max_error),
                  pass ? "ok" : "fail"});
  }
  csv.footer("tolerance: " + format_field(tol));
  write_file_atomic(join_path(opts.out_dir, stem + "_varcheck.csv"), csv.str());

  if (failures > 0) {
    std::cerr << "error: " << failures << " variation row(s) exceed tolerance "
              << format_field(tol) << "\n";
    return 3;
  }
  return 0;
}

int dispatch(const std::string& subcommand, const std::string& config_path,
             const RunnerOptions& opts) {
  const ConfigMap map = parse_config_file(config_path);
  const std::string stem = config_stem(config_path);
  ConfigReader reader(map);
  const std::string process = reader.text("process");

  if (subcommand == "varcheck") {
    if (process != "varcheck") {
      throw ConfigError("config " + map.origin + ": subcommand varcheck requires process=varcheck");
    }
    return do_varcheck(reader, stem, opts);
  }
  if (subcommand == "sweep") return do_sweep(map, process, stem, opts);
  if (subcommand == "run") {
    if (process == "varcheck") return do_varcheck(reader, stem, opts);
    if (process == "necking") return do_necking(reader, stem, opts);
    if (process == "ring") return do_ring(reader, stem, opts);
    return do_run_dynamic(reader, process, stem, opts);
  }
  throw ConfigError("unknown subcommand '" + subcommand + "'");
}

}  // namespace

int run_command(const std::string& subcommand, const std::string& config_path,
                const RunnerOptions& opts) {
  try {
    return dispatch(subcommand, config_path, opts);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace aging
