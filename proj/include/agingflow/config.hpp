#pragma once
// Run configuration and its JSON form. The schema uses lower_snake_case
// keys matching the struct fields; unknown keys are rejected so typos in
// config files fail loudly instead of silently running defaults.

#include <string>

#include "agingflow/core.hpp"

namespace agingflow {

/// Resolution/duration bundles. Desk keeps iteration fast; paper matches
/// the full-scale experiments (h=0.002, dt=0.005, T=10000).
enum class Scale { Desk, Paper };

/// Everything a single simulation needs.
struct RunConfig {
  Parameters params;
  BoundaryCondition bc;
  int n_cells = 200;
  double dt = 0.01;
  double t_end = 2000.0;
  int record_every = 100;
  InitialCondition ic;
  NormMode norm_mode = NormMode::Absolute;
  std::string output_path; ///< empty means stdout
};

/// Applies the grid/step/duration defaults of the given scale.
void apply_scale(RunConfig& cfg, Scale scale);

/// Throws ValidationError on any invariant violation, naming the field.
void validate_config(const RunConfig& cfg);

/// Parses a JSON document. Missing keys take defaults (desk scale unless
/// the document carries "scale": "paper"); unknown keys are an error with
/// the offending path in the message. The result is validated.
RunConfig parse_run_config(const std::string& json_text);

/// parse_run_config on the contents of a file.
RunConfig load_run_config(const std::string& path);

} // namespace agingflow
