#pragma once
// Hot per-cell update kernels, in scalar and SIMD variants selected at
// runtime. Every variant is required to produce bit-identical results:
// the operation order per element is pinned (see the contracts below),
// arithmetic is plain IEEE double (the build disables FMA contraction),
// and remainders of vector loops run the scalar code. Equivalence is
// enforced by tests, so a run gives byte-identical output whichever
// variant the dispatcher picks.

#include <cstddef>

namespace agingflow::kernels {

enum class Isa {
  Scalar, ///< portable reference implementation
  Avx2,   ///< x86-64 AVX2 intrinsics
};

/// Variant currently in use.
Isa active_isa();

/// True if the variant can run on this machine and build.
bool isa_available(Isa isa);

/// Forces a variant (throws ValidationError if unavailable). Intended for
/// tests and benchmarking; not thread-safe, call before starting runs.
void select_isa(Isa isa);

/// d[j] = (u[j+1] - u[j]) / h for j = 0..n_cells-1.
void gradient(const double* u, std::size_t n_cells, double h, double* d);

/// tau[j] += c * (g*grad_u[j] - f[j]*tau[j]) with c = dt/lambda, evaluated
/// exactly in this order: m1 = g*grad_u[j]; m2 = f[j]*tau[j];
/// tau[j] = tau[j] + c*(m1 - m2).
void stress_update(double* tau, const double* grad_u, const double* f,
                   std::size_t n_cells, double dt_over_lambda, double g_mod);

/// Replaces f[j] by the unique nonnegative root X of
///   nu*dt*f[j] * X^2 + (1 + dt*f[j]*(1 - xi*|tau[j]|)) * X - f[j] = 0,
/// the implicit aging/rejuvenation balance. The quadratic has one positive
/// and one negative root whenever f[j] > 0; f[j] = 0 maps to 0 exactly.
/// Cancellation-free evaluation: with b the linear coefficient and
/// s = sqrt(b^2 + 4*nu*dt*f^2), the root is 2f/(b+s) when b >= 0 and
/// (s-b)/(2*nu*dt*f) otherwise.
void fluidity_update(double* f, const double* tau, std::size_t n_cells,
                     double dt, double nu, double xi);

} // namespace agingflow::kernels
