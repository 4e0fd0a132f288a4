#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "agingflow/core.hpp"

using namespace agingflow;

TEST_CASE("default parameters are valid") {
  Parameters p;
  CHECK_NOTHROW(validate_parameters(p));
  CHECK(p.rho == 0.001);
  CHECK(p.eta == 1.0);
  CHECK(p.lambda == 0.5);
  CHECK(p.g_mod == 1.0);
  CHECK(p.xi == 1.0);
  CHECK(p.nu == 1.0);
}

TEST_CASE("non-positive parameters are rejected by name") {
  Parameters p;
  p.rho = 0.0;
  CHECK_THROWS_WITH_AS(validate_parameters(p), "rho must be positive",
                       ValidationError);
  p = Parameters{};
  p.nu = -1.0;
  CHECK_THROWS_WITH_AS(validate_parameters(p), "nu must be positive",
                       ValidationError);
  p = Parameters{};
  p.lambda = std::nan("");
  CHECK_THROWS_AS(validate_parameters(p), ValidationError);
}

TEST_CASE("boundary condition accepts rest and shear, rejects the rest") {
  CHECK_NOTHROW(validate_boundary(BoundaryCondition{0.0}));
  CHECK_NOTHROW(validate_boundary(BoundaryCondition{2.5}));
  CHECK_THROWS_AS(validate_boundary(BoundaryCondition{-0.1}), ValidationError);
  CHECK_THROWS_AS(validate_boundary(BoundaryCondition{
                      std::numeric_limits<double>::infinity()}),
                  ValidationError);
}

TEST_CASE("grid geometry") {
  Grid g(4);
  CHECK(g.n_cells == 4);
  CHECK(g.n_nodes() == 5);
  CHECK(g.h == doctest::Approx(0.25));
  CHECK(g.node(2) == doctest::Approx(0.5));
  CHECK(g.midpoint(0) == doctest::Approx(0.125));
  CHECK(g.midpoint(3) == doctest::Approx(0.875));
  CHECK_THROWS_AS(Grid(1), ValidationError);
  CHECK_THROWS_AS(Grid(0), ValidationError);
  CHECK_THROWS_AS(Grid(-3), ValidationError);
}

TEST_CASE("state validation enforces sizes, signs and boundary values") {
  Grid g(4);
  BoundaryCondition bc{1.0};
  State s;
  s.u = {0.0, 0.25, 0.5, 0.75, 1.0};
  s.tau = {0.1, 0.2, 0.3, 0.4};
  s.f = {0.0, 0.1, 0.2, 0.3};
  CHECK_NOTHROW(validate_state(s, g, bc));

  State bad = s;
  bad.u.pop_back();
  CHECK_THROWS_AS(validate_state(bad, g, bc), ValidationError);

  bad = s;
  bad.f[2] = -1e-10;
  CHECK_THROWS_AS(validate_state(bad, g, bc), ValidationError);

  bad = s;
  bad.tau[1] = std::nan("");
  CHECK_THROWS_AS(validate_state(bad, g, bc), ValidationError);

  bad = s;
  bad.u.back() = 0.5; // wall speed mismatch
  CHECK_THROWS_AS(validate_state(bad, g, bc), ValidationError);

  bad = s;
  bad.u.front() = 1e-16;
  CHECK_THROWS_AS(validate_state(bad, g, bc), ValidationError);
}

TEST_CASE("oscillatory initial profile spans the whole gap") {
  Grid g(200);
  BoundaryCondition bc{0.0};
  InitialCondition ic;
  ic.kind = IcKind::HomogeneousSine;
  State s = build_initial_state(ic, g, bc);

  CHECK(s.t == 0.0);
  CHECK(s.u.front() == 0.0);
  CHECK(s.u.back() == 0.0);
  // u(1/4) = 0.002 sin(pi/2)
  CHECK(s.u[50] == doctest::Approx(0.002).epsilon(1e-12));
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(s.f[j] >= 0.0);
    CHECK(s.f[j] > 0.0); // support covers every cell midpoint
  }
  // tau has zero mean by symmetry
  double mean = 0.0;
  for (double v : s.tau) mean += v * g.h;
  CHECK(mean == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("compact-support profile fills exactly the requested fraction") {
  Grid g(200);
  BoundaryCondition bc{0.0};
  InitialCondition ic;
  ic.kind = IcKind::BetaSupport;
  ic.beta = 0.6;
  State s = build_initial_state(ic, g, bc);
  int positive = 0;
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(s.f[j] >= 0.0);
    if (s.f[j] > 0.0) {
      ++positive;
      CHECK(g.midpoint(j) <= 0.6);
    }
  }
  CHECK(positive == 120); // midpoints (j+0.5)/200 up to 0.6

  ic.beta = 0.0;
  CHECK_THROWS_AS(build_initial_state(ic, g, bc), ValidationError);
  ic.beta = 1.5;
  CHECK_THROWS_AS(build_initial_state(ic, g, bc), ValidationError);
}

TEST_CASE("sheared initial profile meets the walls") {
  Grid g(100);
  BoundaryCondition bc{2.0};
  InitialCondition ic;
  ic.kind = IcKind::NonhomogeneousSine;
  State s = build_initial_state(ic, g, bc);
  CHECK(s.u.front() == 0.0);
  CHECK(s.u.back() == 2.0);
  // ramp is monotone and curved, not linear
  CHECK(s.u[50] == doctest::Approx(1.0).epsilon(1e-12)); // sin^2(pi/4) = 1/2
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(s.tau[j] >= 0.25);
    CHECK(s.tau[j] <= 0.75);
    CHECK(s.f[j] >= 0.25);
  }
}

TEST_CASE("constant initial profile is exactly constant") {
  Grid g(16);
  BoundaryCondition bc{1.0};
  InitialCondition ic;
  ic.kind = IcKind::Constant;
  ic.u_slope = 1.0;
  ic.tau0 = 0.5;
  ic.f0 = 0.25;
  State s = build_initial_state(ic, g, bc);
  for (int i = 0; i <= 16; ++i) CHECK(s.u[i] == g.node(i));
  for (int j = 0; j < 16; ++j) {
    CHECK(s.tau[j] == 0.5);
    CHECK(s.f[j] == 0.25);
  }

  ic.f0 = -0.1;
  CHECK_THROWS_AS(build_initial_state(ic, g, bc), ValidationError);
}

TEST_CASE("zero-fluidity profile has f identically zero") {
  Grid g(64);
  BoundaryCondition bc{0.0};
  InitialCondition ic;
  ic.kind = IcKind::ZeroFluidity;
  State s = build_initial_state(ic, g, bc);
  for (double v : s.f) CHECK(v == 0.0);
  // stress oscillation is still there
  double linf = 0.0;
  for (double v : s.tau) linf = std::max(linf, std::fabs(v));
  CHECK(linf == doctest::Approx(0.5).epsilon(1e-2));
}

TEST_CASE("amplitude overrides rescale the oscillations") {
  Grid g(32);
  BoundaryCondition bc{0.0};
  InitialCondition ic;
  ic.kind = IcKind::HomogeneousSine;
  ic.tau_amp = 0.05;
  ic.f_amp = 1.0;
  State s = build_initial_state(ic, g, bc);
  double tau_max = 0.0, f_max = 0.0;
  for (int j = 0; j < 32; ++j) {
    tau_max = std::max(tau_max, std::fabs(s.tau[j]));
    f_max = std::max(f_max, s.f[j]);
  }
  CHECK(tau_max <= 0.05 + 1e-15);
  CHECK(f_max == doctest::Approx(2.0).epsilon(1e-2)); // 1 - cos peaks at 2
}
