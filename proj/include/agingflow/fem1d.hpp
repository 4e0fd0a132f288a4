#pragma once
// Discrete operators on the uniform grid: P1 mass/stiffness assembly of
// the momentum operator, the Thomas solve, and the P1/P0 transfer
// operators used by the time stepper. Everything here is a pure function
// of its inputs.

#include <vector>

#include "agingflow/core.hpp"

namespace agingflow {

/// Tridiagonal operator on the interior nodes, A = (rho/dt)*M + eta*K,
/// with the Dirichlet rows eliminated. M is the consistent P1 mass matrix
/// (row stencil h/6*[1,4,1]) and K the stiffness matrix (1/h*[-1,2,-1]).
/// Strictly diagonally dominant for any positive rho, eta, dt, h, which
/// makes the solve pivot-free.
struct TridiagonalSystem {
  std::vector<double> lower; ///< sub-diagonal, lower[0] unused
  std::vector<double> diag;
  std::vector<double> upper; ///< super-diagonal, upper[n-1] unused

  std::size_t size() const { return diag.size(); }
};

/// Precomputed forward-elimination coefficients for repeated solves
/// against the same operator. Stores reciprocals of the eliminated
/// pivots, so solve_with_factors reproduces solve_tridiagonal bit for
/// bit (both multiply by the same inv_diag values).
struct TridiagonalFactors {
  std::vector<double> lower;    ///< copy of the sub-diagonal
  std::vector<double> cprime;   ///< upper[i] * inv_diag[i]
  std::vector<double> inv_diag; ///< 1 / (diag[i] - lower[i]*cprime[i-1])

  std::size_t size() const { return inv_diag.size(); }
};

/// Assembles the interior-node momentum operator for the given grid and
/// time step. The boundary columns are eliminated; their contribution
/// belongs on the right-hand side (see momentum_rhs in the stepper).
/// Requires dt > 0 and a grid with at least one interior node.
TridiagonalSystem assemble_momentum_operator(const Parameters& p,
                                             const Grid& grid, double dt);

/// Thomas factorization. Throws NumericError on a zero or non-finite
/// pivot (cannot happen for diagonally dominant input).
TridiagonalFactors factorize(const TridiagonalSystem& sys);

/// Back-substitution against precomputed factors. rhs.size() must match.
std::vector<double> solve_with_factors(const TridiagonalFactors& factors,
                                       const std::vector<double>& rhs);

/// One-shot solve, equivalent to factorize + solve_with_factors.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys,
                                      const std::vector<double>& rhs);

/// y = A*x. Used by tests to verify solve round-trips.
std::vector<double> apply(const TridiagonalSystem& sys,
                          const std::vector<double>& x);

/// Cellwise derivative of a nodal field: d[j] = (u[j+1] - u[j]) / h.
std::vector<double> gradient_p1_to_p0(const std::vector<double>& u,
                                      const Grid& grid);

/// Weak-form load of the stress divergence against interior P1 hats:
/// load[i] = tau[i] - tau[i-1] for interior node i (tau is cellwise
/// constant, so -integral(tau * phi_i') telescopes to a difference).
/// Boundary hats are excluded; Dirichlet nodes carry no equation.
std::vector<double> stress_divergence_rhs(const std::vector<double>& tau,
                                          const Grid& grid);

} // namespace agingflow
