#pragma once
// Norms and monitored quantities per time sample, the support measure
// beta, least-squares rate fitting in log space, and the fluidity
// sandwich bound check.

#include <string>
#include <vector>

#include "agingflow/core.hpp"
#include "agingflow/equilibria.hpp"

namespace agingflow {

/// One sampled row of monitored quantities. mean_tau is the plain
/// spatial average h*sum(tau); l2_tau_fluct the L2 norm of tau minus
/// that average; l2_combo the L2 norm of eta*du/dy + tau - mean_tau;
/// l2_dUdy the L2 norm of du/dy + (tau - mean_tau)/eta (the gradient of
/// the auxiliary field U). energy_homogeneous = G*rho*l2_u^2 +
/// lambda*l2_tau^2, the quantity that decays under resting walls.
struct DiagnosticsRecord {
  double t = 0.0;
  double l2_u = 0.0;
  double h1semi_u = 0.0;
  double l2_tau = 0.0;
  double l2_f = 0.0;
  double linf_tau = 0.0;
  double linf_f = 0.0;
  double mean_tau = 0.0;
  double mean_f = 0.0;
  double l2_tau_fluct = 0.0;
  double l2_combo = 0.0;
  double l2_dUdy = 0.0;
  double energy_homogeneous = 0.0;
};

/// L2 norm of a cellwise-constant field: sqrt(h * sum v_j^2).
double l2_norm_p0(const std::vector<double>& v, const Grid& grid);

/// L2 norm of the piecewise-linear interpolant of nodal values,
/// integrated exactly per element.
double l2_norm_p1(const std::vector<double>& u, const Grid& grid);

/// Computes all monitored quantities for a state. When reference is
/// non-null the norms are of the perturbation (u - u_ref, tau - tau_ref,
/// f - f_ref) evaluated nodewise/cellwise from the steady profile; the
/// combo and dU/dy columns then measure the perturbation fields as well.
DiagnosticsRecord record(const State& state, const Grid& grid,
                         const Parameters& p,
                         const SteadyState* reference = nullptr);

/// Width of the support of a cellwise field: h * #{j : f0[j] > 0}.
/// Throws ValidationError on a negative entry.
double measure_beta(const std::vector<double>& f0, const Grid& grid);

enum class FitModel { PowerLaw, Exponential };

struct RateFit {
  FitModel model = FitModel::PowerLaw;
  double rate = 0.0;      ///< slope vs ln(1+t) (power) or decay rate
                          ///< -slope vs t (exponential)
  double intercept = 0.0; ///< fitted log-intercept
  double t_lo = 0.0;
  double t_hi = 0.0;
  double rms_residual = 0.0; ///< in log space
  int n_points = 0;
};

/// Least-squares line through (ln(1+t), ln v) over t in [t_lo, t_hi].
/// rate is the slope, negative for decay. Values at or below floor are
/// dropped first (round-off plateau); the default floor suits double
/// precision over long horizons, callers fitting quantities that decay
/// through it pass a smaller one. Throws ValidationError if any
/// remaining v is non-positive, or if fewer than 5 points survive.
RateFit fit_power_law(const std::vector<double>& t,
                      const std::vector<double>& v, double t_lo, double t_hi,
                      double floor = 1e-14);

/// Same, regressing ln v on t; rate is minus the slope, so a decaying
/// signal reports a positive rate.
RateFit fit_exponential(const std::vector<double>& t,
                        const std::vector<double>& v, double t_lo,
                        double t_hi, double floor = 1e-14);

struct SandwichResult {
  bool pass = false;
  std::vector<bool> cell_pass;
  int n_checked = 0; ///< sample times after t0
};

/// Verifies the two-sided bound
///   1/(1/f(t0,y) + (1+alpha)(t-t0)) <= f(t,y)
///                                   <= 1/(1/f(t0,y) + (1-alpha)(t-t0))
/// for every sampled t > t0 at cells where f(t0,y) > 0; cells with
/// f(t0,y) = 0 must remain exactly zero. times[k] is the sample time of
/// f_snapshots[k]; t0 must lie within the sampled range and alpha in
/// (0,1).
SandwichResult sandwich_check(const std::vector<double>& times,
                              const std::vector<std::vector<double>>& f_snapshots,
                              double t0, double alpha);

/// Column names of the CSV serialization, comma-joined.
std::string csv_header();

/// One CSV row, 17 significant digits, LF terminated by the caller.
std::string csv_row(const DiagnosticsRecord& r);

} // namespace agingflow
