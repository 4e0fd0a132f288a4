#include "agingflow/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "agingflow/config.hpp"
#include "agingflow/core.hpp"
#include "agingflow/diagnostics.hpp"
#include "agingflow/equilibria.hpp"
#include "agingflow/ode.hpp"
#include "agingflow/presets.hpp"
#include "agingflow/scheme.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace agingflow {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit_records_csv(std::ostream& out,
                      const std::vector<DiagnosticsRecord>& recs) {
  out << csv_header() << '\n';
  for (const auto& r : recs) out << csv_row(r) << '\n';
}

void cmd_run(const std::string& config_path) {
  const RunConfig cfg = load_run_config(config_path);
  const RunResult res = run(cfg);
  if (cfg.output_path.empty()) {
    emit_records_csv(std::cout, res.records);
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
      throw ValidationError("cannot open output file: " + cfg.output_path);
    }
    emit_records_csv(out, res.records);
  }
}

void cmd_steady(const Parameters& p, double a, double beta_inf) {
  validate_parameters(p);
  const SteadyState flowing = steady_nonhomogeneous(p, a);
  const StabilityReport stab = linearized_rate(p, a);
  const DulacResult dulac = dulac_condition(p, a);

  nlohmann::ordered_json doc;
  doc["a"] = a;
  if (beta_inf < 1.0) {
    const SteadyState pw = steady_piecewise(p, a, beta_inf);
    doc["kind"] = "piecewise";
    doc["beta_inf"] = pw.beta_inf;
    doc["u_slope"] = pw.u_slope;
    doc["tau_inf"] = pw.tau_inf;
    doc["f_inf"] = pw.f_inf;
    doc["tau_solid"] = pw.tau_solid;
  } else {
    doc["kind"] = "nonhomogeneous";
    doc["beta_inf"] = flowing.beta_inf;
    doc["u_slope"] = flowing.u_slope;
    doc["tau_inf"] = flowing.tau_inf;
    doc["f_inf"] = flowing.f_inf;
  }
  doc["delta"] = stab.delta;
  doc["c_r"] = stab.c_r;
  doc["eigen_class"] = stab.eigen_class == EigenClass::ComplexPair
                           ? "complex-pair"
                           : "real-negative-pair";
  doc["sigma"] = stab.sigma;
  doc["m_f"] = stab.m_f;
  doc["dulac_lhs"] = dulac.lhs;
  doc["dulac_holds"] = dulac.holds;
  std::cout << doc.dump(2) << '\n';
}

void cmd_ode(const Parameters& p, double a, double tau0, double f0, double dt,
             double t_end) {
  const std::vector<OdeState> traj = ode_run(p, a, tau0, f0, dt, t_end);
  std::cout << "t,tau,f\n";
  for (const auto& s : traj) {
    std::cout << fmt17(s.t) << ',' << fmt17(s.tau) << ',' << fmt17(s.f)
              << '\n';
  }
}

// Minimal CSV reader for the rates subcommand: header line of column
// names, then numeric rows. Returns the named columns summed per row
// ('+' combines columns, matching the preset quantities).
void read_csv_series(const std::string& path, const std::string& column,
                     std::vector<double>& ts, std::vector<double>& vs) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open input file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("input file is empty: " + path);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::map<std::string, std::size_t> index;
  {
    std::stringstream header(line);
    std::string name;
    std::size_t k = 0;
    while (std::getline(header, name, ',')) index[name] = k++;
  }
  if (!index.count("t")) {
    throw ValidationError("input file has no t column: " + path);
  }
  std::vector<std::size_t> wanted;
  {
    std::stringstream spec(column);
    std::string name;
    while (std::getline(spec, name, '+')) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw ValidationError("no column named " + name + " in " + path);
      }
      wanted.push_back(it->second);
    }
  }
  if (wanted.empty()) {
    throw ValidationError("no column requested");
  }

  const std::size_t t_col = index.at("t");
  std::vector<double> row(index.size());
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream cells(line);
    std::string cell;
    std::size_t k = 0;
    while (std::getline(cells, cell, ',')) {
      if (k >= row.size()) break;
      try {
        row[k] = std::stod(cell);
      } catch (const std::exception&) {
        throw ValidationError("non-numeric cell \"" + cell + "\" in " + path);
      }
      ++k;
    }
    if (k != row.size()) {
      throw ValidationError("short row in " + path);
    }
    ts.push_back(row[t_col]);
    double acc = 0.0;
    for (std::size_t w : wanted) acc += row[w];
    vs.push_back(acc);
  }
}

void cmd_rates(const std::string& input, const std::string& column,
               const std::string& model, double lo, double hi, double floor) {
  std::vector<double> ts, vs;
  read_csv_series(input, column, ts, vs);
  const RateFit fit = model == "power"
                          ? fit_power_law(ts, vs, lo, hi, floor)
                          : fit_exponential(ts, vs, lo, hi, floor);
  nlohmann::ordered_json doc;
  doc["model"] =
      fit.model == FitModel::PowerLaw ? "power-law" : "exponential";
  doc["column"] = column;
  doc["rate"] = fit.rate;
  doc["intercept"] = fit.intercept;
  doc["window"] = {fit.t_lo, fit.t_hi};
  doc["rms_residual"] = fit.rms_residual;
  doc["n_points"] = fit.n_points;
  std::cout << doc.dump(2) << '\n';
}

void add_param_flags(CLI::App* cmd, Parameters& p) {
  cmd->add_option("--rho", p.rho, "fluid density");
  cmd->add_option("--eta", p.eta, "solvent viscosity");
  cmd->add_option("--lambda", p.lambda, "stress relaxation time");
  cmd->add_option("--g-mod", p.g_mod, "elastic modulus");
  cmd->add_option("--xi", p.xi, "rejuvenation coefficient");
  cmd->add_option("--nu", p.nu, "aging coefficient");
}

} // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"1D Couette laboratory for an aging non-Newtonian fluid"};
  app.require_subcommand(1);
  int rc = 0;

  // run
  auto* run_cmd = app.add_subcommand("run", "integrate a JSON run config, "
                                            "emit a CSV time series");
  std::string config_path;
  run_cmd->add_option("--config", config_path, "path to the JSON config")
      ->required();
  run_cmd->callback([&] { cmd_run(config_path); });

  // steady
  auto* steady_cmd = app.add_subcommand(
      "steady", "steady state and stability report as JSON");
  Parameters steady_params;
  double steady_a = 1.0;
  double steady_beta = 1.0;
  add_param_flags(steady_cmd, steady_params);
  steady_cmd->add_option("--a", steady_a, "wall speed (must be positive)");
  steady_cmd->add_option("--beta-inf", steady_beta,
                         "fluid-region width for the piecewise state");
  steady_cmd->callback(
      [&] { cmd_steady(steady_params, steady_a, steady_beta); });

  // ode
  auto* ode_cmd =
      app.add_subcommand("ode", "0D trajectory as CSV (columns t,tau,f)");
  Parameters ode_params;
  double ode_a = 1.0, ode_tau0 = 0.5, ode_f0 = 0.5, ode_dt = 0.005,
         ode_tend = 50.0;
  add_param_flags(ode_cmd, ode_params);
  ode_cmd->add_option("--a", ode_a, "imposed shear rate");
  ode_cmd->add_option("--tau0", ode_tau0, "initial stress");
  ode_cmd->add_option("--f0", ode_f0, "initial fluidity (positive)");
  ode_cmd->add_option("--dt", ode_dt, "time step");
  ode_cmd->add_option("--t-end", ode_tend, "final time");
  ode_cmd->callback([&] {
    cmd_ode(ode_params, ode_a, ode_tau0, ode_f0, ode_dt, ode_tend);
  });

  // rates
  auto* rates_cmd = app.add_subcommand(
      "rates", "fit a decay rate to a CSV column, report as JSON");
  std::string rates_input, rates_column, rates_model = "power";
  std::vector<double> rates_window;
  double rates_floor = 1e-14;
  rates_cmd->add_option("--input", rates_input, "CSV file (from run or ode)")
      ->required();
  rates_cmd
      ->add_option("--column", rates_column,
                   "column name, or names joined by + to fit their sum")
      ->required();
  rates_cmd->add_option("--model", rates_model, "power or exp")
      ->check(CLI::IsMember({"power", "exp"}));
  rates_cmd
      ->add_option("--window", rates_window, "fit window t_lo,t_hi")
      ->required()
      ->delimiter(',')
      ->expected(2);
  rates_cmd->add_option("--floor", rates_floor,
                        "drop values at or below this before fitting");
  rates_cmd->callback([&] {
    cmd_rates(rates_input, rates_column, rates_model, rates_window[0],
              rates_window[1], rates_floor);
  });

  // preset
  auto* preset_cmd = app.add_subcommand(
      "preset", "run a canned experiment matrix and check fitted rates");
  std::string preset_name;
  std::string preset_scale = "desk";
  std::string preset_outdir = ".";
  preset_cmd->add_option("name", preset_name, "fig-ode | fig-bc0 | fig-beta | fig-nonhom")
      ->required();
  preset_cmd->add_option("--scale", preset_scale, "desk or paper")
      ->check(CLI::IsMember({"desk", "paper"}));
  preset_cmd->add_option("--out-dir", preset_outdir,
                         "directory for the per-run CSV files");
  preset_cmd->callback([&] {
    const Scale scale =
        preset_scale == "paper" ? Scale::Paper : Scale::Desk;
    const PresetReport rep = run_preset(preset_name, scale, preset_outdir);
    std::cout << preset_summary_json(rep) << '\n';
    if (!rep.pass) rc = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}

} // namespace agingflow
