#pragma once
// Variant entry points shared between the dispatcher and the per-ISA
// translation units. Not installed; include only from src/.

#include <cstddef>

namespace agingflow::kernels {

void gradient_scalar(const double* u, std::size_t n_cells, double h,
                     double* d);
void stress_update_scalar(double* tau, const double* grad_u, const double* f,
                          std::size_t n_cells, double dt_over_lambda,
                          double g_mod);
void fluidity_update_scalar(double* f, const double* tau, std::size_t n_cells,
                            double dt, double nu, double xi);

#if defined(AGINGFLOW_HAVE_AVX2)
void gradient_avx2(const double* u, std::size_t n_cells, double h, double* d);
void stress_update_avx2(double* tau, const double* grad_u, const double* f,
                        std::size_t n_cells, double dt_over_lambda,
                        double g_mod);
void fluidity_update_avx2(double* f, const double* tau, std::size_t n_cells,
                          double dt, double nu, double xi);
#endif

} // namespace agingflow::kernels
