#pragma once
// The canned experiment matrix behind `agingflow preset <name>`: each
// preset expands to one or more runs, writes their CSVs, fits decay
// rates and compares them to the theoretical predictions.

#include <string>
#include <vector>

#include "agingflow/config.hpp"
#include "agingflow/diagnostics.hpp"

namespace agingflow {

/// One fitted rate compared against its prediction. For qualitative
/// checks (rate merely required positive) expected_rate holds 0 and
/// tolerance is unused; pass then means rate > 0 and the residual bound.
struct RateCheck {
  std::string run_label;   ///< e.g. "lambda=0.5" or "beta=0.6"
  std::string quantity;    ///< fitted column or combination
  FitModel model = FitModel::PowerLaw;
  double fitted_rate = 0.0;
  double expected_rate = 0.0;
  double tolerance = 0.0;      ///< absolute, on the rate; 0 = qualitative
  double rms_residual = 0.0;
  double residual_limit = 0.0; ///< 0 = not enforced
  int n_points = 0;
  bool pass = false;
};

/// A scalar invariant check attached to a run (e.g. mean-stress drift).
struct ValueCheck {
  std::string run_label;
  std::string quantity;
  double value = 0.0;
  double limit = 0.0; ///< pass iff value <= limit
  bool pass = false;
};

struct PresetReport {
  std::string name;
  Scale scale = Scale::Desk;
  std::vector<std::string> csv_paths;
  std::vector<RateCheck> rate_checks;
  std::vector<ValueCheck> value_checks;
  bool dulac_holds = false; ///< noted for fig-nonhom and fig-ode
  bool pass = false;        ///< all checks passed
};

/// Known preset names, in execution order: "fig-ode", "fig-bc0",
/// "fig-beta", "fig-nonhom".
const std::vector<std::string>& preset_names();

/// Expands and executes a preset, writing one CSV per run into out_dir
/// (created if missing). Throws ValidationError for an unknown name.
/// Desk scale keeps every check tolerance as documented; paper scale
/// runs the full-resolution matrix with the rate tolerances halved.
PresetReport run_preset(const std::string& name, Scale scale,
                        const std::string& out_dir);

/// Serializes a report (runs, fitted vs expected rates, verdicts) as a
/// JSON document.
std::string preset_summary_json(const PresetReport& report);

} // namespace agingflow
