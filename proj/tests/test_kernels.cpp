#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "agingflow/core.hpp"
#include "agingflow/kernels.hpp"

using namespace agingflow;
using kernels::Isa;

namespace {

struct IsaGuard {
  Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::select_isa(saved); }
};

std::vector<double> random_vec(std::mt19937& rng, std::size_t n, double lo,
                               double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

} // namespace

TEST_CASE("gradient kernel differences and scales") {
  std::vector<double> u = {0.0, 1.0, 3.0};
  std::vector<double> d(2);
  kernels::gradient(u.data(), 2, 0.5, d.data());
  CHECK(d[0] == 2.0);
  CHECK(d[1] == 4.0);
}

TEST_CASE("stress kernel relaxes toward elastic loading") {
  std::vector<double> tau = {1.0};
  std::vector<double> grad = {2.0};
  std::vector<double> f = {3.0};
  // tau += c * (g*grad - f*tau) with c = 0.1, g = 2
  kernels::stress_update(tau.data(), grad.data(), f.data(), 1, 0.1, 2.0);
  CHECK(tau[0] == doctest::Approx(1.1).epsilon(1e-15));

  // f = 0 and grad = 0 leaves the stress untouched
  std::vector<double> tau2 = {0.75};
  std::vector<double> zero = {0.0};
  kernels::stress_update(tau2.data(), zero.data(), zero.data(), 1, 0.1, 2.0);
  CHECK(tau2[0] == 0.75);
}

TEST_CASE("fluidity kernel root on a hand-checked cell") {
  // f=1, tau=1, xi=nu=1, dt=0.1: the update quadratic is
  // 0.1 X^2 + X - 1 = 0, positive root 2/(1+sqrt(1.4)).
  std::vector<double> f = {1.0};
  std::vector<double> tau = {1.0};
  kernels::fluidity_update(f.data(), tau.data(), 1, 0.1, 1.0, 1.0);
  CHECK(f[0] == 0.91607978309961591);
}

TEST_CASE("fluidity kernel keeps zero exactly zero and positive positive") {
  std::vector<double> f = {0.0, 0.0};
  std::vector<double> tau = {5.0, -3.0};
  kernels::fluidity_update(f.data(), tau.data(), 2, 0.1, 1.0, 1.0);
  CHECK(f[0] == 0.0);
  CHECK(f[1] == 0.0);

  std::mt19937 rng(77);
  std::uniform_real_distribution<double> fdist(1e-12, 10.0);
  std::uniform_real_distribution<double> tdist(-20.0, 20.0);
  std::uniform_real_distribution<double> pdist(0.05, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    double fv = fdist(rng);
    double tv = tdist(rng);
    double dt = pdist(rng);
    double nu = pdist(rng);
    double xi = pdist(rng);
    kernels::fluidity_update(&fv, &tv, 1, dt, nu, xi);
    CHECK(fv > 0.0);
    CHECK(std::isfinite(fv));
  }
}

TEST_CASE("fluidity root solves its quadratic") {
  // nu*dt*f0*X^2 + (1 + dt*f0*(1 - xi*|tau|))*X - f0 = 0 at the output X
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> fdist(0.01, 5.0);
  std::uniform_real_distribution<double> tdist(-10.0, 10.0);
  std::uniform_real_distribution<double> pdist(0.05, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double f0 = fdist(rng);
    const double tau = tdist(rng);
    const double dt = pdist(rng);
    const double nu = pdist(rng);
    const double xi = pdist(rng);
    double f = f0;
    double t = tau;
    kernels::fluidity_update(&f, &t, 1, dt, nu, xi);
    const double a = nu * dt * f0;
    const double b = 1.0 + dt * f0 * (1.0 - xi * std::fabs(tau));
    const double residual = a * f * f + b * f - f0;
    CHECK(std::fabs(residual) <= 1e-12 * (1.0 + f0));
  }
}

TEST_CASE("kernel variant selection round-trips") {
  IsaGuard guard;
  CHECK(kernels::isa_available(Isa::Scalar));
  kernels::select_isa(Isa::Scalar);
  CHECK(kernels::active_isa() == Isa::Scalar);
  if (kernels::isa_available(Isa::Avx2)) {
    kernels::select_isa(Isa::Avx2);
    CHECK(kernels::active_isa() == Isa::Avx2);
  } else {
    CHECK_THROWS_AS(kernels::select_isa(Isa::Avx2), ValidationError);
  }
}

TEST_CASE("vector and scalar kernels produce identical bits") {
  if (!kernels::isa_available(Isa::Avx2)) {
    MESSAGE("no AVX2 on this machine; equivalence sweep skipped");
    return;
  }
  IsaGuard guard;
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> udist(-2.0, 2.0);
  std::uniform_real_distribution<double> fdist(0.0, 4.0);
  std::uniform_real_distribution<double> tdist(-6.0, 6.0);

  for (std::size_t n = 1; n <= 67; ++n) {
    std::vector<double> u = random_vec(rng, n + 1, -2.0, 2.0);
    std::vector<double> grad_a(n), grad_b(n);
    std::vector<double> tau0 = random_vec(rng, n, -6.0, 6.0);
    std::vector<double> f0 = random_vec(rng, n, 0.0, 4.0);
    if (n % 5 == 0) f0[n / 2] = 0.0; // keep exact zeros in the mix
    const double h = 1.0 / static_cast<double>(n);
    const double c = 0.03;
    const double g = 1.7;
    const double dt = 0.02;
    const double nu = 0.9;
    const double xi = 1.3;

    kernels::select_isa(Isa::Scalar);
    kernels::gradient(u.data(), n, h, grad_a.data());
    std::vector<double> tau_a = tau0;
    kernels::stress_update(tau_a.data(), grad_a.data(), f0.data(), n, c, g);
    std::vector<double> f_a = f0;
    kernels::fluidity_update(f_a.data(), tau_a.data(), n, dt, nu, xi);

    kernels::select_isa(Isa::Avx2);
    kernels::gradient(u.data(), n, h, grad_b.data());
    std::vector<double> tau_b = tau0;
    kernels::stress_update(tau_b.data(), grad_b.data(), f0.data(), n, c, g);
    std::vector<double> f_b = f0;
    kernels::fluidity_update(f_b.data(), tau_b.data(), n, dt, nu, xi);

    CHECK(std::memcmp(grad_a.data(), grad_b.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(tau_a.data(), tau_b.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(f_a.data(), f_b.data(), n * sizeof(double)) == 0);
  }
}
