#include "agingflow/scheme.hpp"

#include <cmath>
#include <string>

#include "agingflow/equilibria.hpp"
#include "agingflow/kernels.hpp"

namespace agingflow {

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

[[noreturn]] void diverged(const char* stage, double t) {
  throw DivergenceError(std::string("non-finite value after the ") + stage +
                        " at t=" + std::to_string(t));
}

// Shared core of Stepper::advance and the free step(): one semi-implicit
// step in place. rhs/grad are caller-owned scratch of sizes N-1 and N.
StepReport step_in_place(State& s, const Parameters& p,
                         const BoundaryCondition& bc, double dt,
                         const Grid& grid, const TridiagonalFactors& factors,
                         std::vector<double>& rhs, std::vector<double>& grad) {
  const int n = grid.n_cells;
  const double h = grid.h;
  const double mc = (p.rho / dt) * (h / 6.0);
  const double off = mc - p.eta / h;

  // Momentum: implicit solve against the lagged stress divergence, with
  // the eliminated boundary columns moved to the right-hand side.
  for (int i = 1; i < n; ++i) {
    rhs[i - 1] = mc * (s.u[i - 1] + 4.0 * s.u[i] + s.u[i + 1]) +
                 (s.tau[i] - s.tau[i - 1]);
  }
  rhs.front() -= off * s.u.front();
  rhs.back() -= off * s.u.back();
  const std::vector<double> interior = solve_with_factors(factors, rhs);
  for (int i = 1; i < n; ++i) s.u[i] = interior[i - 1];
  s.u.front() = 0.0;
  s.u.back() = bc.a;
  const double t_new = s.t + dt;
  if (!all_finite(s.u)) diverged("momentum solve", t_new);

  // Stress: explicit, from the fresh velocity gradient and lagged f*tau.
  kernels::gradient(s.u.data(), static_cast<std::size_t>(n), h, grad.data());
  kernels::stress_update(s.tau.data(), grad.data(), s.f.data(),
                         static_cast<std::size_t>(n), dt / p.lambda, p.g_mod);
  if (!all_finite(s.tau)) diverged("stress update", t_new);

  // Fluidity: closed-form nonnegative root per cell.
  kernels::fluidity_update(s.f.data(), s.tau.data(),
                           static_cast<std::size_t>(n), dt, p.nu, p.xi);
  if (!all_finite(s.f)) diverged("fluidity update", t_new);

  s.t = t_new;

  StepReport rep;
  rep.t_new = t_new;
  rep.max_f = s.f[0];
  rep.min_f = s.f[0];
  for (double v : s.f) {
    rep.max_f = std::max(rep.max_f, v);
    rep.min_f = std::min(rep.min_f, v);
  }
  const double l2u = l2_norm_p1(s.u, grid);
  const double l2tau = l2_norm_p0(s.tau, grid);
  rep.energy_homogeneous = p.g_mod * p.rho * l2u * l2u + p.lambda * l2tau * l2tau;
  return rep;
}

} // namespace

Stepper::Stepper(const Parameters& p, const Grid& grid,
                 const BoundaryCondition& bc, double dt)
    : params_(validate_parameters(p)),
      grid_(grid),
      bc_(bc),
      dt_(dt),
      sys_(assemble_momentum_operator(p, grid, dt)),
      factors_(factorize(sys_)),
      rhs_(static_cast<std::size_t>(grid.n_cells - 1)),
      grad_(static_cast<std::size_t>(grid.n_cells)) {
  validate_boundary(bc);
}

StepReport Stepper::advance(State& state) {
  if (state.u.size() != static_cast<std::size_t>(grid_.n_nodes()) ||
      state.tau.size() != static_cast<std::size_t>(grid_.n_cells) ||
      state.f.size() != static_cast<std::size_t>(grid_.n_cells)) {
    throw ValidationError("state does not match the stepper's grid");
  }
  return step_in_place(state, params_, bc_, dt_, grid_, factors_, rhs_, grad_);
}

std::pair<State, StepReport> step(const State& state, const Parameters& p,
                                  const BoundaryCondition& bc, double dt,
                                  const TridiagonalSystem& op) {
  if (state.u.size() < 3) {
    throw ValidationError("state needs at least one interior node");
  }
  const Grid grid(static_cast<int>(state.u.size()) - 1);
  validate_state(state, grid, bc);
  if (op.size() != state.u.size() - 2) {
    throw ValidationError("operator size does not match the state");
  }
  if (!(dt > 0.0)) {
    throw ValidationError("dt must be positive");
  }
  const TridiagonalFactors factors = factorize(op);
  State next = state;
  std::vector<double> rhs(grid.n_cells - 1);
  std::vector<double> grad(grid.n_cells);
  StepReport rep =
      step_in_place(next, validate_parameters(p), bc, dt, grid, factors, rhs, grad);
  return {std::move(next), rep};
}

RunResult run(const RunConfig& config) { return run(config, SampleCallback{}); }

RunResult run(const RunConfig& config, const SampleCallback& on_sample) {
  validate_config(config);
  const Grid grid(config.n_cells);
  State state = build_initial_state(config.ic, grid, config.bc);
  Stepper stepper(config.params, grid, config.bc, config.dt);

  SteadyState reference;
  const SteadyState* ref_ptr = nullptr;
  if (config.norm_mode == NormMode::RelativeToSteady) {
    if (config.bc.a > 0.0) {
      reference = steady_nonhomogeneous(config.params, config.bc.a);
    } else {
      // At rest the steady family is (0, c, 0); measure against the
      // stress level the initial data carries.
      double mean_tau0 = 0.0;
      for (double v : state.tau) mean_tau0 += v;
      reference = steady_homogeneous(grid.h * mean_tau0);
    }
    ref_ptr = &reference;
  }

  const long long n_steps = std::llround(config.t_end / config.dt);

  RunResult result;
  result.records.reserve(
      static_cast<std::size_t>(n_steps / config.record_every) + 1);
  result.records.push_back(record(state, grid, config.params, ref_ptr));
  if (on_sample) on_sample(state, result.records.back());

  for (long long n = 0; n < n_steps; ++n) {
    stepper.advance(state);
    state.t = static_cast<double>(n + 1) * config.dt; // no accumulated drift
    if ((n + 1) % config.record_every == 0) {
      result.records.push_back(record(state, grid, config.params, ref_ptr));
      if (on_sample) on_sample(state, result.records.back());
    }
  }
  result.final_state = std::move(state);
  return result;
}

} // namespace agingflow
