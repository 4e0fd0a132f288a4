#include "agingflow/kernels.hpp"

#include "agingflow/core.hpp"
#include "kernels_internal.hpp"

namespace agingflow::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(AGINGFLOW_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Isa pick_default() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa g_active = pick_default();

} // namespace

Isa active_isa() { return g_active; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

void select_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw ValidationError("requested kernel variant is not available here");
  }
  g_active = isa;
}

void gradient(const double* u, std::size_t n_cells, double h, double* d) {
#if defined(AGINGFLOW_HAVE_AVX2)
  if (g_active == Isa::Avx2) {
    gradient_avx2(u, n_cells, h, d);
    return;
  }
#endif
  gradient_scalar(u, n_cells, h, d);
}

void stress_update(double* tau, const double* grad_u, const double* f,
                   std::size_t n_cells, double dt_over_lambda, double g_mod) {
#if defined(AGINGFLOW_HAVE_AVX2)
  if (g_active == Isa::Avx2) {
    stress_update_avx2(tau, grad_u, f, n_cells, dt_over_lambda, g_mod);
    return;
  }
#endif
  stress_update_scalar(tau, grad_u, f, n_cells, dt_over_lambda, g_mod);
}

void fluidity_update(double* f, const double* tau, std::size_t n_cells,
                     double dt, double nu, double xi) {
#if defined(AGINGFLOW_HAVE_AVX2)
  if (g_active == Isa::Avx2) {
    fluidity_update_avx2(f, tau, n_cells, dt, nu, xi);
    return;
  }
#endif
  fluidity_update_scalar(f, tau, n_cells, dt, nu, xi);
}

} // namespace agingflow::kernels
