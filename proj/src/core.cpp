#include "agingflow/core.hpp"

#include <cmath>

namespace agingflow {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw ValidationError(std::string(name) + " must be positive");
  }
}

} // namespace

const Parameters& validate_parameters(const Parameters& p) {
  require_positive(p.rho, "rho");
  require_positive(p.eta, "eta");
  require_positive(p.lambda, "lambda");
  require_positive(p.g_mod, "g_mod");
  require_positive(p.xi, "xi");
  require_positive(p.nu, "nu");
  return p;
}

void validate_boundary(const BoundaryCondition& bc) {
  if (!(bc.a >= 0.0)) {
    throw ValidationError("a must be non-negative");
  }
  if (!std::isfinite(bc.a)) {
    throw ValidationError("a must be finite");
  }
}

Grid::Grid(int n) {
  if (n < 2) {
    throw ValidationError("n_cells must be at least 2");
  }
  n_cells = n;
  h = 1.0 / n;
}

void validate_state(const State& s, const Grid& grid,
                    const BoundaryCondition& bc) {
  const auto n = static_cast<std::size_t>(grid.n_cells);
  if (s.u.size() != n + 1) {
    throw ValidationError("u must hold one value per node");
  }
  if (s.tau.size() != n) {
    throw ValidationError("tau must hold one value per cell");
  }
  if (s.f.size() != n) {
    throw ValidationError("f must hold one value per cell");
  }
  for (double v : s.u) {
    if (!std::isfinite(v)) throw ValidationError("u contains a non-finite value");
  }
  for (double v : s.tau) {
    if (!std::isfinite(v)) throw ValidationError("tau contains a non-finite value");
  }
  for (double v : s.f) {
    if (!std::isfinite(v)) throw ValidationError("f contains a non-finite value");
    if (v < 0.0) throw ValidationError("f must be non-negative");
  }
  if (s.u.front() != 0.0) {
    throw ValidationError("u(0) must equal 0");
  }
  if (s.u.back() != bc.a) {
    throw ValidationError("u(1) must equal the wall speed a");
  }
}

State build_initial_state(const InitialCondition& ic, const Grid& grid,
                          const BoundaryCondition& bc) {
  validate_boundary(bc);
  const int n = grid.n_cells;
  State s;
  s.t = 0.0;
  s.u.resize(n + 1);
  s.tau.resize(n);
  s.f.resize(n);

  switch (ic.kind) {
    case IcKind::HomogeneousSine: {
      const double ua = ic.u_amp.value_or(0.002);
      const double ta = ic.tau_amp.value_or(0.5);
      const double fa = ic.f_amp.value_or(0.25);
      for (int i = 0; i <= n; ++i) s.u[i] = ua * std::sin(2.0 * kPi * grid.node(i));
      for (int j = 0; j < n; ++j) {
        const double m = grid.midpoint(j);
        s.tau[j] = ta * std::sin(2.0 * kPi * m);
        s.f[j] = fa * (1.0 - std::cos(2.0 * kPi * m));
      }
      break;
    }
    case IcKind::BetaSupport: {
      if (!(ic.beta > 0.0 && ic.beta <= 1.0)) {
        throw ValidationError("beta must lie in (0, 1]");
      }
      const double ua = ic.u_amp.value_or(0.002);
      const double ta = ic.tau_amp.value_or(0.5);
      const double fa = ic.f_amp.value_or(0.5);
      for (int i = 0; i <= n; ++i) s.u[i] = ua * std::sin(2.0 * kPi * grid.node(i));
      for (int j = 0; j < n; ++j) {
        const double m = grid.midpoint(j);
        s.tau[j] = ta * std::sin(2.0 * kPi * m);
        // half-sine bump on [0, beta]; clamp kills the -0/epsilon edge
        s.f[j] = m <= ic.beta ? std::max(0.0, fa * std::sin(kPi * m / ic.beta)) : 0.0;
      }
      break;
    }
    case IcKind::NonhomogeneousSine: {
      // Large perturbation of the flowing steady state: the velocity
      // ramps as sin^2 instead of linearly, stress and fluidity carry an
      // order-one oscillation around 0.5.
      const double ta = ic.tau_amp.value_or(0.25);
      const double fa = ic.f_amp.value_or(0.25);
      for (int i = 0; i <= n; ++i) {
        const double sval = std::sin(0.5 * kPi * grid.node(i));
        s.u[i] = bc.a * sval * sval;
      }
      for (int j = 0; j < n; ++j) {
        const double m = grid.midpoint(j);
        s.tau[j] = 0.5 + ta * std::sin(2.0 * kPi * m);
        s.f[j] = 0.5 + fa * std::sin(2.0 * kPi * m);
      }
      break;
    }
    case IcKind::Constant: {
      if (ic.f0 < 0.0) {
        throw ValidationError("f0 must be non-negative");
      }
      for (int i = 0; i <= n; ++i) s.u[i] = ic.u_slope * grid.node(i);
      for (int j = 0; j < n; ++j) {
        s.tau[j] = ic.tau0;
        s.f[j] = ic.f0;
      }
      break;
    }
    case IcKind::ZeroFluidity: {
      const double ua = ic.u_amp.value_or(0.002);
      const double ta = ic.tau_amp.value_or(0.5);
      for (int i = 0; i <= n; ++i) s.u[i] = ua * std::sin(2.0 * kPi * grid.node(i));
      for (int j = 0; j < n; ++j) {
        s.tau[j] = ta * std::sin(2.0 * kPi * grid.midpoint(j));
        s.f[j] = 0.0;
      }
      break;
    }
  }

  s.u.front() = 0.0;
  s.u.back() = bc.a;
  validate_state(s, grid, bc);
  return s;
}

} // namespace agingflow
