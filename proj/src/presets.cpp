#include "agingflow/presets.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "agingflow/equilibria.hpp"
#include "agingflow/ode.hpp"
#include "agingflow/scheme.hpp"

#include "json.hpp"

namespace agingflow {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double column_value(const DiagnosticsRecord& r, const std::string& name) {
  if (name == "t") return r.t;
  if (name == "l2_u") return r.l2_u;
  if (name == "h1semi_u") return r.h1semi_u;
  if (name == "l2_tau") return r.l2_tau;
  if (name == "l2_f") return r.l2_f;
  if (name == "linf_tau") return r.linf_tau;
  if (name == "linf_f") return r.linf_f;
  if (name == "mean_tau") return r.mean_tau;
  if (name == "mean_f") return r.mean_f;
  if (name == "l2_tau_fluct") return r.l2_tau_fluct;
  if (name == "l2_combo") return r.l2_combo;
  if (name == "l2_dUdy") return r.l2_dUdy;
  if (name == "energy_homogeneous") return r.energy_homogeneous;
  throw ValidationError("no diagnostics column named " + name);
}

// Sum of one or more columns joined by '+', e.g. "h1semi_u+l2_tau_fluct".
double combo_value(const DiagnosticsRecord& r, const std::string& quantity) {
  double acc = 0.0;
  std::size_t start = 0;
  while (start <= quantity.size()) {
    const std::size_t plus = quantity.find('+', start);
    const std::string part = quantity.substr(
        start, plus == std::string::npos ? std::string::npos : plus - start);
    acc += column_value(r, part);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return acc;
}

std::vector<double> times_of(const std::vector<DiagnosticsRecord>& recs) {
  std::vector<double> t;
  t.reserve(recs.size());
  for (const auto& r : recs) t.push_back(r.t);
  return t;
}

std::vector<double> values_of(const std::vector<DiagnosticsRecord>& recs,
                              const std::string& quantity) {
  std::vector<double> v;
  v.reserve(recs.size());
  for (const auto& r : recs) v.push_back(combo_value(r, quantity));
  return v;
}

std::string join(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open output file: " + path);
  }
  return out;
}

void write_records_csv(const std::string& path,
                       const std::vector<DiagnosticsRecord>& recs) {
  std::ofstream out = open_out(path);
  out << csv_header() << '\n';
  for (const auto& r : recs) out << csv_row(r) << '\n';
}

void write_ode_csv(const std::string& path,
                   const std::vector<OdeState>& series, double tau_inf,
                   double f_inf) {
  std::ofstream out = open_out(path);
  out << "t,tau,f,dist\n";
  for (const auto& s : series) {
    const double dist = std::fabs(s.tau - tau_inf) + std::fabs(s.f - f_inf);
    out << fmt17(s.t) << ',' << fmt17(s.tau) << ',' << fmt17(s.f) << ','
        << fmt17(dist) << '\n';
  }
}

bool rate_check_passes(const RateCheck& c) {
  if (c.tolerance > 0.0) {
    if (std::fabs(c.fitted_rate - c.expected_rate) > c.tolerance) return false;
  } else {
    if (!(c.fitted_rate > 0.0)) return false;
  }
  if (c.residual_limit > 0.0 && c.rms_residual > c.residual_limit) {
    return false;
  }
  return true;
}

RunConfig scaled_config(Scale scale) {
  RunConfig cfg;
  apply_scale(cfg, scale);
  return cfg;
}

PresetReport run_fig_ode(Scale scale, const std::string& out_dir) {
  PresetReport rep;
  rep.name = "fig-ode";
  rep.scale = scale;
  const double tol_frac = scale == Scale::Paper ? 0.025 : 0.05;

  for (double lambda : {0.5, 0.1}) {
    Parameters p;
    p.lambda = lambda;
    const double a = 1.0;
    const SteadyState ss = steady_nonhomogeneous(p, a);
    const StabilityReport stab = linearized_rate(p, a);
    const std::vector<OdeState> traj = ode_run(p, a, 0.5, 0.5, 0.005, 50.0);

    const std::string csv = join(out_dir, "fig-ode-lambda" + fmt(lambda) + ".csv");
    write_ode_csv(csv, traj, ss.tau_inf, ss.f_inf);
    rep.csv_paths.push_back(csv);

    std::vector<double> ts, vs;
    ts.reserve(traj.size());
    vs.reserve(traj.size());
    for (const auto& s : traj) {
      ts.push_back(s.t);
      vs.push_back(std::fabs(s.tau - ss.tau_inf) + std::fabs(s.f - ss.f_inf));
    }
    // The trajectory parks on the scheme's own fixed point a hair away
    // from the analytic one; the raised floor drops that plateau.
    const RateFit fit = fit_exponential(ts, vs, 5.0, 40.0, 1e-12);

    RateCheck check;
    check.run_label = "lambda=" + fmt(lambda);
    check.quantity = "|tau-tau_inf|+|f-f_inf|";
    check.model = FitModel::Exponential;
    check.fitted_rate = fit.rate;
    check.expected_rate = stab.c_r;
    check.tolerance = tol_frac * stab.c_r;
    check.rms_residual = fit.rms_residual;
    check.residual_limit = 0.0;
    check.n_points = fit.n_points;
    check.pass = rate_check_passes(check);
    rep.rate_checks.push_back(check);
  }
  rep.dulac_holds = dulac_condition(Parameters{}, 1.0).holds;
  return rep;
}

PresetReport run_fig_bc0(Scale scale, const std::string& out_dir) {
  PresetReport rep;
  rep.name = "fig-bc0";
  rep.scale = scale;
  const double tol_factor = scale == Scale::Paper ? 0.5 : 1.0;

  RunConfig cfg = scaled_config(scale);
  cfg.ic.kind = IcKind::HomogeneousSine;
  const RunResult res = run(cfg);

  const std::string csv = join(out_dir, "fig-bc0.csv");
  write_records_csv(csv, res.records);
  rep.csv_paths.push_back(csv);

  const double t_hi = cfg.t_end;
  const double t_lo = 0.1 * cfg.t_end;
  const double bl = 1.0 / cfg.params.lambda; // beta/lambda with beta = 1
  const std::vector<double> ts = times_of(res.records);

  struct FitSpec {
    const char* quantity;
    double expected;
    double tolerance;
    double floor;
  };
  // The combo quantities decay through the 1e-14 default floor while
  // still being genuine signal (they are built from differences whose
  // round-off noise sits near 1e-23), hence the lower floor.
  const FitSpec specs[] = {
      {"l2_tau", -bl, 0.2, 1e-14},
      {"linf_f", -1.0, 0.1, 1e-14},
      {"h1semi_u+l2_tau_fluct", -1.0 - bl, 0.3, 1e-22},
      {"l2_combo", -2.0 - bl, 0.5, 1e-22},
  };
  for (const FitSpec& spec : specs) {
    const RateFit fit = fit_power_law(ts, values_of(res.records, spec.quantity),
                                      t_lo, t_hi, spec.floor);
    RateCheck check;
    check.run_label = "beta=1";
    check.quantity = spec.quantity;
    check.model = FitModel::PowerLaw;
    check.fitted_rate = fit.rate;
    check.expected_rate = spec.expected;
    check.tolerance = spec.tolerance * tol_factor;
    check.rms_residual = fit.rms_residual;
    check.residual_limit = 0.0;
    check.n_points = fit.n_points;
    check.pass = rate_check_passes(check);
    rep.rate_checks.push_back(check);
  }
  return rep;
}

PresetReport run_fig_beta(Scale scale, const std::string& out_dir) {
  PresetReport rep;
  rep.name = "fig-beta";
  rep.scale = scale;
  const double tol_factor = scale == Scale::Paper ? 0.5 : 1.0;

  // The extreme supports need the long horizon: their transients
  // outlast the desk T.
  const std::vector<double> betas = scale == Scale::Paper
                                        ? std::vector<double>{0.01, 0.1, 0.6, 0.9, 0.99}
                                        : std::vector<double>{0.1, 0.6, 0.9};
  for (double beta : betas) {
    RunConfig cfg = scaled_config(scale);
    cfg.ic.kind = IcKind::BetaSupport;
    cfg.ic.beta = beta;
    const RunResult res = run(cfg);

    const std::string csv = join(out_dir, "fig-beta-" + fmt(beta) + ".csv");
    write_records_csv(csv, res.records);
    rep.csv_paths.push_back(csv);

    const RateFit fit =
        fit_power_law(times_of(res.records), values_of(res.records, "l2_tau"),
                      0.1 * cfg.t_end, cfg.t_end, 1e-14);
    RateCheck check;
    check.run_label = "beta=" + fmt(beta);
    check.quantity = "l2_tau";
    check.model = FitModel::PowerLaw;
    check.fitted_rate = fit.rate;
    check.expected_rate = -beta / cfg.params.lambda;
    check.tolerance = 0.2 * tol_factor;
    check.rms_residual = fit.rms_residual;
    check.residual_limit = 0.0;
    check.n_points = fit.n_points;
    check.pass = rate_check_passes(check);
    rep.rate_checks.push_back(check);
  }

  // beta = 0 of the sweep: with no fluid cells the power law gives way
  // to plain exponential relaxation, and the mean stress freezes.
  {
    RunConfig cfg = scaled_config(scale);
    cfg.ic.kind = IcKind::ZeroFluidity;
    cfg.t_end = 40.0;
    cfg.record_every = scale == Scale::Paper ? 20 : 10;
    const RunResult res = run(cfg);

    const std::string csv = join(out_dir, "fig-beta-zero.csv");
    write_records_csv(csv, res.records);
    rep.csv_paths.push_back(csv);

    const RateFit fit = fit_exponential(
        times_of(res.records),
        values_of(res.records, "h1semi_u+l2_tau_fluct"), 0.5, 12.0, 1e-14);
    RateCheck check;
    check.run_label = "beta=0";
    check.quantity = "h1semi_u+l2_tau_fluct";
    check.model = FitModel::Exponential;
    check.fitted_rate = fit.rate;
    check.expected_rate = 0.0; // qualitative: any positive rate
    check.tolerance = 0.0;
    check.rms_residual = fit.rms_residual;
    check.residual_limit = 0.1;
    check.n_points = fit.n_points;
    check.pass = rate_check_passes(check);
    rep.rate_checks.push_back(check);

    double drift = 0.0;
    for (const auto& r : res.records) {
      drift = std::max(drift,
                       std::fabs(r.mean_tau - res.records.front().mean_tau));
    }
    ValueCheck vc;
    vc.run_label = "beta=0";
    vc.quantity = "max |mean_tau - mean_tau(0)|";
    vc.value = drift;
    vc.limit = 1e-12;
    vc.pass = drift <= vc.limit;
    rep.value_checks.push_back(vc);
  }
  return rep;
}

PresetReport run_fig_nonhom(Scale scale, const std::string& out_dir) {
  PresetReport rep;
  rep.name = "fig-nonhom";
  rep.scale = scale;

  RunConfig cfg = scaled_config(scale);
  cfg.bc.a = 1.0;
  cfg.ic.kind = IcKind::NonhomogeneousSine;
  cfg.norm_mode = NormMode::RelativeToSteady;
  cfg.t_end = 40.0;
  cfg.record_every = scale == Scale::Paper ? 20 : 10;
  const RunResult res = run(cfg);

  const std::string csv = join(out_dir, "fig-nonhom.csv");
  write_records_csv(csv, res.records);
  rep.csv_paths.push_back(csv);

  // Perturbation norms in relative mode. The individual norms ring
  // (complex eigenvalue pair), their sum stays clean enough to fit.
  const std::string quantity = "h1semi_u+l2_tau_fluct";
  const RateFit fit = fit_exponential(
      times_of(res.records), values_of(res.records, quantity), 5.0, 25.0);
  RateCheck check;
  check.run_label = "a=1";
  check.quantity = quantity;
  check.model = FitModel::Exponential;
  check.fitted_rate = fit.rate;
  check.expected_rate = 0.0; // qualitative: decay, not a specific rate
  check.tolerance = 0.0;
  check.rms_residual = fit.rms_residual;
  check.residual_limit = 0.15;
  check.n_points = fit.n_points;
  check.pass = rate_check_passes(check);
  rep.rate_checks.push_back(check);

  ValueCheck vc;
  vc.run_label = "a=1";
  vc.quantity = "final " + quantity;
  vc.value = combo_value(res.records.back(), quantity);
  vc.limit = 1e-10;
  vc.pass = vc.value <= vc.limit;
  rep.value_checks.push_back(vc);

  rep.dulac_holds = dulac_condition(cfg.params, cfg.bc.a).holds;
  return rep;
}

} // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig-ode", "fig-bc0",
                                                 "fig-beta", "fig-nonhom"};
  return names;
}

PresetReport run_preset(const std::string& name, Scale scale,
                        const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw ValidationError("cannot create output directory: " + out_dir);
  }

  PresetReport rep;
  if (name == "fig-ode") {
    rep = run_fig_ode(scale, out_dir);
  } else if (name == "fig-bc0") {
    rep = run_fig_bc0(scale, out_dir);
  } else if (name == "fig-beta") {
    rep = run_fig_beta(scale, out_dir);
  } else if (name == "fig-nonhom") {
    rep = run_fig_nonhom(scale, out_dir);
  } else {
    throw ValidationError("unknown preset: " + name);
  }

  rep.pass = true;
  for (const auto& c : rep.rate_checks) rep.pass = rep.pass && c.pass;
  for (const auto& c : rep.value_checks) rep.pass = rep.pass && c.pass;
  return rep;
}

std::string preset_summary_json(const PresetReport& report) {
  nlohmann::ordered_json doc;
  doc["preset"] = report.name;
  doc["scale"] = report.scale == Scale::Paper ? "paper" : "desk";
  doc["pass"] = report.pass;
  doc["dulac_holds"] = report.dulac_holds;
  doc["csv"] = report.csv_paths;
  doc["rate_checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.rate_checks) {
    nlohmann::ordered_json j;
    j["run"] = c.run_label;
    j["quantity"] = c.quantity;
    j["model"] = c.model == FitModel::PowerLaw ? "power-law" : "exponential";
    j["fitted_rate"] = c.fitted_rate;
    j["expected_rate"] = c.expected_rate;
    j["tolerance"] = c.tolerance;
    j["rms_residual"] = c.rms_residual;
    j["residual_limit"] = c.residual_limit;
    j["n_points"] = c.n_points;
    j["pass"] = c.pass;
    doc["rate_checks"].push_back(j);
  }
  doc["value_checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.value_checks) {
    nlohmann::ordered_json j;
    j["run"] = c.run_label;
    j["quantity"] = c.quantity;
    j["value"] = c.value;
    j["limit"] = c.limit;
    j["pass"] = c.pass;
    doc["value_checks"].push_back(j);
  }
  return doc.dump(2);
}

} // namespace agingflow
