#include "agingflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "agingflow/fem1d.hpp"

namespace agingflow {

double l2_norm_p0(const std::vector<double>& v, const Grid& grid) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(grid.h * acc);
}

double l2_norm_p1(const std::vector<double>& u, const Grid& grid) {
  // Exact integral of the squared linear interpolant on each cell:
  // h/3 * (a^2 + a*b + b^2).
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) {
    const double a = u[j];
    const double b = u[j + 1];
    acc += (grid.h / 3.0) * (a * a + a * b + b * b);
  }
  return std::sqrt(acc);
}

DiagnosticsRecord record(const State& state, const Grid& grid,
                         const Parameters& p, const SteadyState* reference) {
  const auto n = static_cast<std::size_t>(grid.n_cells);
  std::vector<double> u = state.u;
  std::vector<double> tau = state.tau;
  std::vector<double> f = state.f;
  if (reference) {
    for (std::size_t i = 0; i <= n; ++i) u[i] -= reference->u_at(grid.node(i));
    for (std::size_t j = 0; j < n; ++j) {
      const double m = grid.midpoint(j);
      tau[j] -= reference->tau_at(m);
      f[j] -= reference->f_at(m);
    }
  }

  const std::vector<double> d = gradient_p1_to_p0(u, grid);

  DiagnosticsRecord r;
  r.t = state.t;
  r.l2_u = l2_norm_p1(u, grid);
  r.h1semi_u = l2_norm_p0(d, grid);
  r.l2_tau = l2_norm_p0(tau, grid);
  r.l2_f = l2_norm_p0(f, grid);
  for (std::size_t j = 0; j < n; ++j) {
    r.linf_tau = std::max(r.linf_tau, std::fabs(tau[j]));
    r.linf_f = std::max(r.linf_f, std::fabs(f[j]));
    r.mean_tau += tau[j];
    r.mean_f += f[j];
  }
  r.mean_tau *= grid.h;
  r.mean_f *= grid.h;

  std::vector<double> fluct(n), combo(n), dudy(n);
  for (std::size_t j = 0; j < n; ++j) {
    fluct[j] = tau[j] - r.mean_tau;
    combo[j] = p.eta * d[j] + fluct[j];
    dudy[j] = d[j] + fluct[j] / p.eta;
  }
  r.l2_tau_fluct = l2_norm_p0(fluct, grid);
  r.l2_combo = l2_norm_p0(combo, grid);
  r.l2_dUdy = l2_norm_p0(dudy, grid);
  r.energy_homogeneous =
      p.g_mod * p.rho * r.l2_u * r.l2_u + p.lambda * r.l2_tau * r.l2_tau;
  return r;
}

double measure_beta(const std::vector<double>& f0, const Grid& grid) {
  std::size_t count = 0;
  for (double v : f0) {
    if (v < 0.0) {
      throw ValidationError("fluidity must be non-negative");
    }
    if (v > 0.0) ++count;
  }
  return grid.h * static_cast<double>(count);
}

namespace {

RateFit fit_log_line(FitModel model, const std::vector<double>& t,
                     const std::vector<double>& v, double t_lo, double t_hi,
                     double floor) {
  if (t.size() != v.size()) {
    throw ValidationError("time and value series differ in length");
  }
  if (!(t_lo < t_hi)) {
    throw ValidationError("fit window must satisfy t_lo < t_hi");
  }
  std::vector<double> xs, ys;
  xs.reserve(t.size());
  ys.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_lo || t[k] > t_hi) continue;
    if (!(t[k] > 0.0)) {
      throw ValidationError("fit window contains a non-positive time");
    }
    if (!(v[k] > 0.0)) {
      throw ValidationError(
          "fit window contains a non-positive value; shrink the window");
    }
    if (v[k] <= floor) continue; // round-off plateau, not signal
    xs.push_back(model == FitModel::PowerLaw ? std::log1p(t[k]) : t[k]);
    ys.push_back(std::log(v[k]));
  }
  const std::size_t m = xs.size();
  if (m < 5) {
    throw ValidationError("fewer than 5 usable points in the fit window");
  }
  double xbar = 0.0, ybar = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    xbar += xs[k];
    ybar += ys[k];
  }
  xbar /= static_cast<double>(m);
  ybar /= static_cast<double>(m);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    sxy += (xs[k] - xbar) * (ys[k] - ybar);
    sxx += (xs[k] - xbar) * (xs[k] - xbar);
  }
  if (sxx == 0.0) {
    throw ValidationError("fit window has no spread in t");
  }
  const double slope = sxy / sxx;
  const double intercept = ybar - slope * xbar;
  double ss = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double res = ys[k] - (intercept + slope * xs[k]);
    ss += res * res;
  }
  RateFit fit;
  fit.model = model;
  fit.rate = model == FitModel::PowerLaw ? slope : -slope;
  fit.intercept = intercept;
  fit.t_lo = t_lo;
  fit.t_hi = t_hi;
  fit.rms_residual = std::sqrt(ss / static_cast<double>(m));
  fit.n_points = static_cast<int>(m);
  return fit;
}

} // namespace

RateFit fit_power_law(const std::vector<double>& t,
                      const std::vector<double>& v, double t_lo, double t_hi,
                      double floor) {
  return fit_log_line(FitModel::PowerLaw, t, v, t_lo, t_hi, floor);
}

RateFit fit_exponential(const std::vector<double>& t,
                        const std::vector<double>& v, double t_lo,
                        double t_hi, double floor) {
  return fit_log_line(FitModel::Exponential, t, v, t_lo, t_hi, floor);
}

SandwichResult sandwich_check(
    const std::vector<double>& times,
    const std::vector<std::vector<double>>& f_snapshots, double t0,
    double alpha) {
  if (times.empty() || times.size() != f_snapshots.size()) {
    throw ValidationError("snapshot series is empty or mismatched");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie in (0, 1)");
  }
  if (t0 < times.front() || t0 > times.back()) {
    throw ValidationError("t0 must lie within the sampled range");
  }
  const std::size_t k0 = static_cast<std::size_t>(
      std::lower_bound(times.begin(), times.end(), t0) - times.begin());
  const std::vector<double>& f0 = f_snapshots[k0];
  const double tb = times[k0];
  const std::size_t n = f0.size();

  SandwichResult res;
  res.cell_pass.assign(n, true);
  for (std::size_t k = k0 + 1; k < times.size(); ++k) {
    const double dt = times[k] - tb;
    const std::vector<double>& fk = f_snapshots[k];
    if (fk.size() != n) {
      throw ValidationError("snapshots differ in cell count");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (f0[j] > 0.0) {
        const double lo = 1.0 / (1.0 / f0[j] + (1.0 + alpha) * dt);
        const double hi = 1.0 / (1.0 / f0[j] + (1.0 - alpha) * dt);
        if (fk[j] < lo || fk[j] > hi) res.cell_pass[j] = false;
      } else if (fk[j] != 0.0) {
        res.cell_pass[j] = false;
      }
    }
    ++res.n_checked;
  }
  res.pass = std::all_of(res.cell_pass.begin(), res.cell_pass.end(),
                         [](bool ok) { return ok; });
  return res;
}

std::string csv_header() {
  return "t,l2_u,h1semi_u,l2_tau,l2_f,linf_tau,linf_f,mean_tau,mean_f,"
         "l2_tau_fluct,l2_combo,l2_dUdy,energy_homogeneous";
}

std::string csv_row(const DiagnosticsRecord& r) {
  const double cols[] = {r.t,      r.l2_u,         r.h1semi_u, r.l2_tau,
                         r.l2_f,   r.linf_tau,     r.linf_f,   r.mean_tau,
                         r.mean_f, r.l2_tau_fluct, r.l2_combo, r.l2_dUdy,
                         r.energy_homogeneous};
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < std::size(cols); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", cols[i]);
    if (i) out += ',';
    out += buf;
  }
  return out;
}

} // namespace agingflow
