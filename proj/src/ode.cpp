#include "agingflow/ode.hpp"

#include <cmath>
#include <string>

#include "agingflow/equilibria.hpp"
#include "agingflow/kernels.hpp"

namespace agingflow {

OdeState ode_step(const OdeState& s, const Parameters& p, double a,
                  double dt) {
  if (!(dt > 0.0)) {
    throw ValidationError("dt must be positive");
  }
  // Same arithmetic as the per-cell PDE kernels with the velocity
  // gradient pinned to a, so a spatially constant PDE state and this
  // step agree to round-off.
  const double m1 = p.g_mod * a;
  const double m2 = s.f * s.tau;
  OdeState next;
  next.tau = s.tau + (dt / p.lambda) * (m1 - m2);
  next.f = s.f;
  kernels::fluidity_update(&next.f, &next.tau, 1, dt, p.nu, p.xi);
  next.t = s.t + dt;
  return next;
}

std::vector<OdeState> ode_run(const Parameters& p, double a, double tau0,
                              double f0, double dt, double t_end) {
  validate_parameters(p);
  if (!(f0 > 0.0)) {
    throw ValidationError("f0 must be positive");
  }
  if (!(dt > 0.0)) {
    throw ValidationError("dt must be positive");
  }
  if (!(t_end >= 0.0)) {
    throw ValidationError("t_end must be non-negative");
  }
  const long long n_steps = std::llround(t_end / dt);
  std::vector<OdeState> series;
  series.reserve(static_cast<std::size_t>(n_steps) + 1);
  series.push_back({0.0, tau0, f0});
  for (long long n = 0; n < n_steps; ++n) {
    OdeState next = ode_step(series.back(), p, a, dt);
    next.t = static_cast<double>(n + 1) * dt;
    if (!std::isfinite(next.tau) || !std::isfinite(next.f)) {
      throw DivergenceError("0D trajectory became non-finite at t=" +
                            std::to_string(next.t));
    }
    series.push_back(next);
  }
  return series;
}

namespace {

struct Derivative {
  double dtau;
  double df;
};

Derivative rhs(const Parameters& p, double a, double tau, double f) {
  return {(p.g_mod * a - f * tau) / p.lambda,
          (-1.0 + p.xi * std::fabs(tau)) * f * f - p.nu * f * f * f};
}

// One classical RK4 pass over [0, t_end] with n equal steps.
OdeState rk4_endpoint(const Parameters& p, double a, double tau0, double f0,
                      double t_end, long long n) {
  const double h = t_end / static_cast<double>(n);
  double tau = tau0;
  double f = f0;
  for (long long k = 0; k < n; ++k) {
    const Derivative k1 = rhs(p, a, tau, f);
    const Derivative k2 = rhs(p, a, tau + 0.5 * h * k1.dtau, f + 0.5 * h * k1.df);
    const Derivative k3 = rhs(p, a, tau + 0.5 * h * k2.dtau, f + 0.5 * h * k2.df);
    const Derivative k4 = rhs(p, a, tau + h * k3.dtau, f + h * k3.df);
    tau += (h / 6.0) * (k1.dtau + 2.0 * k2.dtau + 2.0 * k3.dtau + k4.dtau);
    f += (h / 6.0) * (k1.df + 2.0 * k2.df + 2.0 * k3.df + k4.df);
  }
  return {t_end, tau, f};
}

} // namespace

OdeState ode_oracle(const Parameters& p, double a, double tau0, double f0,
                    double t_end, double tol) {
  validate_parameters(p);
  if (!(f0 > 0.0)) {
    throw ValidationError("f0 must be positive");
  }
  if (!(t_end >= 0.0)) {
    throw ValidationError("t_end must be non-negative");
  }
  if (t_end == 0.0) {
    return {0.0, tau0, f0};
  }
  long long n = 64;
  OdeState prev = rk4_endpoint(p, a, tau0, f0, t_end, n);
  while (true) {
    n *= 2;
    if (t_end / static_cast<double>(n) < 1e-12) {
      throw NumericError("step halving hit the 1e-12 floor before converging");
    }
    const OdeState cur = rk4_endpoint(p, a, tau0, f0, t_end, n);
    const double diff =
        std::fabs(cur.tau - prev.tau) + std::fabs(cur.f - prev.f);
    if (diff < tol) return cur;
    prev = cur;
  }
}

Region classify_region(const Parameters& p, double a, double tau, double f) {
  const double s = sigma(p, a);
  if (f >= s) return Region::A3;
  const double ridge = (p.xi * tau - 1.0) / p.nu;
  return f >= ridge ? Region::A1 : Region::A2;
}

} // namespace agingflow
