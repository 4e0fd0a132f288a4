#include "agingflow/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

namespace agingflow {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& path) {
  throw ValidationError("unknown config key: " + path);
}

void check_keys(const json& obj, const std::string& prefix,
                const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      bad_key(prefix.empty() ? item.key() : prefix + "." + item.key());
    }
  }
}

double get_number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ValidationError(std::string(key) + " must be a number");
  }
  return v.get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ValidationError(std::string(key) + " must be an integer");
  }
  return v.get<int>();
}

IcKind parse_ic_kind(const std::string& text) {
  if (text == "homogeneous-sine") return IcKind::HomogeneousSine;
  if (text == "beta-support") return IcKind::BetaSupport;
  if (text == "nonhomogeneous-sine") return IcKind::NonhomogeneousSine;
  if (text == "constant") return IcKind::Constant;
  if (text == "zero-fluidity") return IcKind::ZeroFluidity;
  throw ValidationError("ic.kind must be one of homogeneous-sine, "
                        "beta-support, nonhomogeneous-sine, constant, "
                        "zero-fluidity");
}

} // namespace

void apply_scale(RunConfig& cfg, Scale scale) {
  switch (scale) {
    case Scale::Desk:
      cfg.n_cells = 200;
      cfg.dt = 0.01;
      cfg.t_end = 2000.0;
      cfg.record_every = 100;
      break;
    case Scale::Paper:
      cfg.n_cells = 500;
      cfg.dt = 0.005;
      cfg.t_end = 10000.0;
      cfg.record_every = 200;
      break;
  }
}

void validate_config(const RunConfig& cfg) {
  validate_parameters(cfg.params);
  validate_boundary(cfg.bc);
  if (cfg.n_cells < 2) {
    throw ValidationError("n_cells must be at least 2");
  }
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw ValidationError("dt must be positive");
  }
  if (!(cfg.t_end >= 0.0) || !std::isfinite(cfg.t_end)) {
    throw ValidationError("t_end must be non-negative");
  }
  if (cfg.record_every < 1) {
    throw ValidationError("record_every must be at least 1");
  }
  if (cfg.ic.kind == IcKind::BetaSupport &&
      !(cfg.ic.beta > 0.0 && cfg.ic.beta <= 1.0)) {
    throw ValidationError("ic.beta must lie in (0, 1]");
  }
  if (cfg.ic.f0 < 0.0) {
    throw ValidationError("ic.f0 must be non-negative");
  }
}

RunConfig parse_run_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("config root must be a JSON object");
  }
  check_keys(doc, "", {"scale", "params", "bc", "n_cells", "dt", "t_end",
                       "record_every", "ic", "norm_mode", "output_path"});

  RunConfig cfg;
  apply_scale(cfg, Scale::Desk);
  if (doc.contains("scale")) {
    const std::string s = doc.at("scale").get<std::string>();
    if (s == "desk") {
      apply_scale(cfg, Scale::Desk);
    } else if (s == "paper") {
      apply_scale(cfg, Scale::Paper);
    } else {
      throw ValidationError("scale must be \"desk\" or \"paper\"");
    }
  }

  if (doc.contains("params")) {
    const json& p = doc.at("params");
    check_keys(p, "params", {"rho", "eta", "lambda", "g_mod", "xi", "nu"});
    cfg.params.rho = get_number(p, "rho", cfg.params.rho);
    cfg.params.eta = get_number(p, "eta", cfg.params.eta);
    cfg.params.lambda = get_number(p, "lambda", cfg.params.lambda);
    cfg.params.g_mod = get_number(p, "g_mod", cfg.params.g_mod);
    cfg.params.xi = get_number(p, "xi", cfg.params.xi);
    cfg.params.nu = get_number(p, "nu", cfg.params.nu);
  }
  if (doc.contains("bc")) {
    const json& b = doc.at("bc");
    check_keys(b, "bc", {"a"});
    cfg.bc.a = get_number(b, "a", cfg.bc.a);
  }
  cfg.n_cells = get_int(doc, "n_cells", cfg.n_cells);
  cfg.dt = get_number(doc, "dt", cfg.dt);
  cfg.t_end = get_number(doc, "t_end", cfg.t_end);
  cfg.record_every = get_int(doc, "record_every", cfg.record_every);

  if (doc.contains("ic")) {
    const json& ic = doc.at("ic");
    check_keys(ic, "ic", {"kind", "beta", "u_slope", "tau0", "f0", "u_amp",
                          "tau_amp", "f_amp"});
    if (ic.contains("kind")) {
      cfg.ic.kind = parse_ic_kind(ic.at("kind").get<std::string>());
    }
    cfg.ic.beta = get_number(ic, "beta", cfg.ic.beta);
    cfg.ic.u_slope = get_number(ic, "u_slope", cfg.ic.u_slope);
    cfg.ic.tau0 = get_number(ic, "tau0", cfg.ic.tau0);
    cfg.ic.f0 = get_number(ic, "f0", cfg.ic.f0);
    if (ic.contains("u_amp")) cfg.ic.u_amp = get_number(ic, "u_amp", 0.0);
    if (ic.contains("tau_amp")) cfg.ic.tau_amp = get_number(ic, "tau_amp", 0.0);
    if (ic.contains("f_amp")) cfg.ic.f_amp = get_number(ic, "f_amp", 0.0);
  }

  if (doc.contains("norm_mode")) {
    const std::string m = doc.at("norm_mode").get<std::string>();
    if (m == "absolute") {
      cfg.norm_mode = NormMode::Absolute;
    } else if (m == "relative-to-steady") {
      cfg.norm_mode = NormMode::RelativeToSteady;
    } else {
      throw ValidationError(
          "norm_mode must be \"absolute\" or \"relative-to-steady\"");
    }
  }
  if (doc.contains("output_path")) {
    cfg.output_path = doc.at("output_path").get<std::string>();
  }

  validate_config(cfg);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

} // namespace agingflow
