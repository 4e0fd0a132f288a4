#pragma once
// The semi-implicit time stepper: implicit momentum solve against lagged
// stress, explicit stress update from the fresh velocity gradient, and
// the closed-form nonnegative-root fluidity update. Also the run loop
// that samples diagnostics on a fixed cadence.

#include <functional>
#include <utility>
#include <vector>

#include "agingflow/config.hpp"
#include "agingflow/core.hpp"
#include "agingflow/diagnostics.hpp"
#include "agingflow/fem1d.hpp"

namespace agingflow {

struct StepReport {
  double t_new = 0.0;
  double max_f = 0.0;
  double min_f = 0.0;
  int fluidity_root_iterations = 0; ///< always 0: the root is closed form
  double energy_homogeneous = 0.0;  ///< G*rho*|u|^2 + lambda*|tau|^2
};

/// Advances one step of dt. op must be the operator assembled with the
/// same parameters, grid and dt (see assemble_momentum_operator). The
/// three stages run in order: momentum solve (boundary values pinned to
/// 0 and bc.a), cellwise stress update, cellwise fluidity root. Throws
/// DivergenceError naming the stage if a non-finite value appears,
/// NumericError if the solve breaks down.
std::pair<State, StepReport> step(const State& state, const Parameters& p,
                                  const BoundaryCondition& bc, double dt,
                                  const TridiagonalSystem& op);

/// Reusable stepper: factorizes the momentum operator once and keeps the
/// scratch buffers, advancing a state in place. Same numerics as the
/// free function step(), reproduced bit for bit.
class Stepper {
 public:
  Stepper(const Parameters& p, const Grid& grid, const BoundaryCondition& bc,
          double dt);

  StepReport advance(State& state);

  const TridiagonalSystem& system() const { return sys_; }

 private:
  Parameters params_;
  Grid grid_;
  BoundaryCondition bc_;
  double dt_;
  TridiagonalSystem sys_;
  TridiagonalFactors factors_;
  std::vector<double> rhs_;
  std::vector<double> grad_;
};

struct RunResult {
  State final_state;
  std::vector<DiagnosticsRecord> records;
};

/// Called at every sampled instant (including t=0) with the full state
/// and the record just appended.
using SampleCallback =
    std::function<void(const State&, const DiagnosticsRecord&)>;

/// Integrates config from t=0 to t_end with fixed dt, appending a
/// DiagnosticsRecord every record_every steps (plus the initial one). In
/// relative-to-steady mode the norms are of the perturbation from the
/// steady state matching the boundary condition. Step errors are
/// rethrown with the failing time attached.
RunResult run(const RunConfig& config);
RunResult run(const RunConfig& config, const SampleCallback& on_sample);

} // namespace agingflow
