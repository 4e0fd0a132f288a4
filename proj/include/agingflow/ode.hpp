#pragma once
// The 0D reduction: the same semi-implicit update restricted to scalar
// (tau, f) with a fixed shear a, an independent Runge-Kutta oracle for
// accuracy checks, and the phase-plane region classifier.

#include <vector>

#include "agingflow/core.hpp"

namespace agingflow {

struct OdeState {
  double t = 0.0;
  double tau = 0.0;
  double f = 0.0;
};

/// One semi-implicit step: tau' = tau + (dt/lambda)*(G*a - f*tau), then
/// f' = nonnegative root of nu*dt*f*X^2 + (1 + dt*f*(1 - xi*|tau'|))*X
/// - f = 0. Identical arithmetic to the per-cell PDE update, so a
/// spatially constant PDE state reproduces this step exactly.
OdeState ode_step(const OdeState& s, const Parameters& p, double a,
                  double dt);

/// Trajectory from (tau0, f0), sampled every step, t = 0 to t_end.
/// Requires f0 > 0 and dt > 0; throws DivergenceError on non-finite
/// values.
std::vector<OdeState> ode_run(const Parameters& p, double a, double tau0,
                              double f0, double dt, double t_end);

/// Ground-truth endpoint by classical RK4 with step halving until two
/// successive answers agree within tol (test oracle, not a production
/// path). Throws NumericError if halving reaches the 1e-12 step floor
/// without converging.
OdeState ode_oracle(const Parameters& p, double a, double tau0, double f0,
                    double t_end, double tol);

/// Phase-plane bookkeeping of the boundedness argument. With s = sigma:
/// A3 is f >= s; below that, A1 has f >= (xi*tau - 1)/nu and A2 the
/// complement. Purely diagnostic, never control flow.
enum class Region { A1, A2, A3 };

Region classify_region(const Parameters& p, double a, double tau, double f);

} // namespace agingflow
