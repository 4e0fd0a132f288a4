#pragma once
// Domain types for a 1D Couette cell of an aging yield-stress fluid on
// y in [0,1]: nodal P1 velocity u, cellwise P0 shear stress tau and
// fluidity f. The fluidity is nonnegative by construction everywhere.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace agingflow {

/// Bad user input (parameters, config files, CLI flags).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical operation failed in a way valid inputs should preclude
/// (zero pivot, non-converging refinement).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A time integration produced non-finite values.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The six model coefficients; all must be strictly positive.
struct Parameters {
  double rho = 0.001;  ///< fluid density
  double eta = 1.0;    ///< solvent viscosity
  double lambda = 0.5; ///< stress relaxation time
  double g_mod = 1.0;  ///< elastic modulus
  double xi = 1.0;     ///< rejuvenation coefficient (stress-induced fluidization)
  double nu = 1.0;     ///< aging coefficient (spontaneous solidification)
};

/// Returns p unchanged; throws ValidationError naming the first
/// non-positive field.
const Parameters& validate_parameters(const Parameters& p);

/// Dirichlet data: u(0) = 0 always, u(1) = a with a >= 0.
/// a = 0 lets the fluid come to rest and solidify; a > 0 drives a
/// permanent shear flow.
struct BoundaryCondition {
  double a = 0.0;
};

void validate_boundary(const BoundaryCondition& bc);

/// Uniform mesh of [0,1] with N cells, nodes y_i = i*h, midpoints
/// y_{j+1/2} = (j+1/2)*h.
struct Grid {
  int n_cells = 0;
  double h = 0.0;

  Grid() = default;
  explicit Grid(int n);

  int n_nodes() const { return n_cells + 1; }
  double node(int i) const { return i * h; }
  double midpoint(int j) const { return (j + 0.5) * h; }
};

/// Discrete unknowns at one time level.
struct State {
  double t = 0.0;
  std::vector<double> u;   ///< N+1 nodal velocities, u[0]=0 and u[N]=a
  std::vector<double> tau; ///< N cell stresses
  std::vector<double> f;   ///< N cell fluidities, all >= 0
};

/// Size and invariant checks (f >= 0, boundary values in place).
void validate_state(const State& s, const Grid& grid, const BoundaryCondition& bc);

enum class IcKind {
  HomogeneousSine,    ///< u=0.002 sin(2 pi y), tau=0.5 sin(2 pi y), f=0.25(1-cos 2 pi y)
  BetaSupport,        ///< same u,tau; f=0.5 sin(pi y/beta) on [0,beta], 0 elsewhere
  NonhomogeneousSine, ///< u=a sin^2(pi y/2), tau=f=0.5+0.25 sin(2 pi y)
  Constant,           ///< u=slope*y, tau and f uniform
  ZeroFluidity,       ///< sine u and tau, f identically zero
};

/// Initial profile selector. The amplitude overrides replace the default
/// oscillation amplitudes of the sine families where they make sense.
struct InitialCondition {
  IcKind kind = IcKind::HomogeneousSine;
  double beta = 1.0;    ///< support fraction, BetaSupport only, in (0,1]
  double u_slope = 0.0; ///< Constant only
  double tau0 = 0.0;    ///< Constant only
  double f0 = 0.0;      ///< Constant only, must be >= 0
  std::optional<double> u_amp;
  std::optional<double> tau_amp;
  std::optional<double> f_amp;
};

/// Samples the selected profile: u at nodes (endpoints forced to 0 and a),
/// tau and f at cell midpoints. Never produces a negative fluidity;
/// requests that would produce one are rejected with ValidationError.
State build_initial_state(const InitialCondition& ic, const Grid& grid,
                          const BoundaryCondition& bc);

enum class NormMode {
  Absolute,         ///< norms of the fields themselves
  RelativeToSteady, ///< norms of the deviation from the steady state
};

} // namespace agingflow
