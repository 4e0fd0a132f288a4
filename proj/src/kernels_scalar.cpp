// Reference kernels. The SIMD variants replicate these element
// recurrences operation for operation; any change here must be mirrored
// there or the bit-equivalence tests will fail.

#include <cmath>

#include "kernels_internal.hpp"

namespace agingflow::kernels {

void gradient_scalar(const double* u, std::size_t n_cells, double h,
                     double* d) {
  for (std::size_t j = 0; j < n_cells; ++j) {
    d[j] = (u[j + 1] - u[j]) / h;
  }
}

void stress_update_scalar(double* tau, const double* grad_u, const double* f,
                          std::size_t n_cells, double dt_over_lambda,
                          double g_mod) {
  for (std::size_t j = 0; j < n_cells; ++j) {
    const double m1 = g_mod * grad_u[j];
    const double m2 = f[j] * tau[j];
    tau[j] = tau[j] + dt_over_lambda * (m1 - m2);
  }
}

void fluidity_update_scalar(double* f, const double* tau, std::size_t n_cells,
                            double dt, double nu, double xi) {
  const double nu_dt = nu * dt;
  for (std::size_t j = 0; j < n_cells; ++j) {
    const double fp = f[j];
    const double at = std::fabs(tau[j]);
    const double e = 1.0 - xi * at;
    const double b = 1.0 + (dt * fp) * e;
    const double aq = nu_dt * fp;
    const double disc = b * b + 4.0 * (aq * fp);
    const double s = std::sqrt(disc);
    // Nonnegative root of aq*X^2 + b*X - fp = 0, picking the expression
    // that avoids subtracting nearly equal quantities. fp = 0 lands in
    // the first branch and yields exactly 0.
    f[j] = b >= 0.0 ? (2.0 * fp) / (b + s) : (s - b) / (2.0 * aq);
  }
}

} // namespace agingflow::kernels
