#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "agingflow/equilibria.hpp"
#include "agingflow/ode.hpp"

using namespace agingflow;

TEST_CASE("the flowing steady point is a fixed point of the step") {
  Parameters p;
  SteadyState eq = steady_nonhomogeneous(p, 1.0);
  OdeState s;
  s.tau = eq.tau_inf;
  s.f = eq.f_inf;
  OdeState next = ode_step(s, p, 1.0, 0.01);
  CHECK(next.tau == doctest::Approx(eq.tau_inf).epsilon(1e-14));
  CHECK(next.f == doctest::Approx(eq.f_inf).epsilon(1e-14));
  CHECK(next.t == doctest::Approx(0.01).epsilon(1e-15));

  // iterate: stays put for a thousand steps
  OdeState cur = s;
  for (int n = 0; n < 1000; ++n) cur = ode_step(cur, p, 1.0, 0.01);
  CHECK(cur.tau == doctest::Approx(eq.tau_inf).epsilon(1e-12));
  CHECK(cur.f == doctest::Approx(eq.f_inf).epsilon(1e-12));
}

TEST_CASE("zero fluidity loads stress elastically and stays solid") {
  Parameters p;
  OdeState s;
  s.tau = 0.25;
  s.f = 0.0;
  OdeState next = ode_step(s, p, 2.0, 0.1);
  // tau' = tau + (dt/lambda) * G * a = 0.25 + 0.2 * 2
  CHECK(next.tau == doctest::Approx(0.65).epsilon(1e-15));
  CHECK(next.f == 0.0);
}

TEST_CASE("hand-checked step from rest stress") {
  Parameters p; // lambda = 0.5, G = xi = nu = 1
  OdeState s;
  s.tau = 0.0;
  s.f = 1.0;
  OdeState next = ode_step(s, p, 1.0, 0.1);
  // tau' = 0 + 0.2 * (1 - 0) = 0.2
  CHECK(next.tau == doctest::Approx(0.2).epsilon(1e-15));
  // f' solves 0.1 X^2 + (1 + 0.1*(1 - 0.2)) X - 1 = 0
  CHECK(next.f == doctest::Approx(0.85779513886480627).epsilon(1e-15));

  CHECK_THROWS_AS(ode_step(s, p, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(ode_step(s, p, 1.0, -0.1), ValidationError);
}

TEST_CASE("trajectories reach the flowing steady state") {
  Parameters p;
  SteadyState eq = steady_nonhomogeneous(p, 1.0);
  std::vector<OdeState> path = ode_run(p, 1.0, 0.5, 0.5, 0.005, 40.0);
  REQUIRE(path.size() == 8001); // initial sample plus every step
  CHECK(path.front().t == 0.0);
  CHECK(path.front().tau == 0.5);
  CHECK(path.back().t == doctest::Approx(40.0).epsilon(1e-12));
  CHECK(path.back().tau == doctest::Approx(eq.tau_inf).epsilon(1e-6));
  CHECK(path.back().f == doctest::Approx(eq.f_inf).epsilon(1e-6));

  // fluidity stays positive the whole way
  for (const auto& st : path) CHECK(st.f > 0.0);

  CHECK_THROWS_AS(ode_run(p, 1.0, 0.5, 0.0, 0.005, 1.0), ValidationError);
  CHECK_THROWS_AS(ode_run(p, 1.0, 0.5, -1.0, 0.005, 1.0), ValidationError);
  CHECK_THROWS_AS(ode_run(p, 1.0, 0.5, 0.5, 0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(ode_run(p, 1.0, 0.5, 0.5, 0.005, -1.0), ValidationError);
}

TEST_CASE("trajectories stay bounded from rough starts") {
  Parameters p;
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> tdist(-2.0, 4.0);
  std::uniform_real_distribution<double> fdist(0.05, 4.0);
  const double m = fluidity_floor_m_f(p, 1.0, 0.05);
  for (int trial = 0; trial < 20; ++trial) {
    const double tau0 = tdist(rng);
    const double f0 = fdist(rng);
    std::vector<OdeState> path = ode_run(p, 1.0, tau0, f0, 0.01, 30.0);
    double sup_tau = 0.0;
    for (const auto& st : path) {
      sup_tau = std::max(sup_tau, std::fabs(st.tau));
      CHECK(st.f > 0.0);
    }
    // stress never exceeds its loading bound by more than the start
    CHECK(sup_tau <= std::max(std::fabs(tau0), p.g_mod * 1.0 / m) + 1.0);
  }
}

TEST_CASE("endpoint matches the Runge-Kutta oracle") {
  Parameters p;
  OdeState ref = ode_oracle(p, 1.0, 0.5, 0.5, 10.0, 1e-10);
  std::vector<OdeState> path = ode_run(p, 1.0, 0.5, 0.5, 1e-3, 10.0);
  const OdeState& end = path.back();
  // first-order scheme at dt=1e-3: agree to a few times dt
  CHECK(std::fabs(end.tau - ref.tau) <= 1e-2);
  CHECK(std::fabs(end.f - ref.f) <= 1e-2);

  // halving dt roughly halves the endpoint error (first order)
  std::vector<OdeState> half = ode_run(p, 1.0, 0.5, 0.5, 5e-4, 10.0);
  const double e1 = std::fabs(end.tau - ref.tau) + std::fabs(end.f - ref.f);
  const double e2 = std::fabs(half.back().tau - ref.tau) +
                    std::fabs(half.back().f - ref.f);
  CHECK(e2 < e1);
  CHECK(e2 / e1 == doctest::Approx(0.5).epsilon(0.25));

  // the oracle respects fixed points and the trivial horizon
  SteadyState eq = steady_nonhomogeneous(p, 1.0);
  OdeState fixed = ode_oracle(p, 1.0, eq.tau_inf, eq.f_inf, 5.0, 1e-12);
  CHECK(fixed.tau == doctest::Approx(eq.tau_inf).epsilon(1e-10));
  CHECK(fixed.f == doctest::Approx(eq.f_inf).epsilon(1e-10));
  OdeState start = ode_oracle(p, 1.0, 0.3, 0.7, 0.0, 1e-12);
  CHECK(start.tau == 0.3);
  CHECK(start.f == 0.7);
  CHECK(start.t == 0.0);
}

TEST_CASE("convergence does not need the exclusion inequality") {
  // at the defaults the Dulac-type test fails, yet the trajectory still
  // spirals into the fixed point
  Parameters p;
  CHECK(dulac_condition(p, 1.0).holds == false);
  SteadyState eq = steady_nonhomogeneous(p, 1.0);
  std::vector<OdeState> path = ode_run(p, 1.0, 3.0, 2.0, 0.005, 60.0);
  CHECK(std::fabs(path.back().tau - eq.tau_inf) <= 1e-8);
  CHECK(std::fabs(path.back().f - eq.f_inf) <= 1e-8);
}

TEST_CASE("phase-plane regions split at sigma and the nullcline ridge") {
  Parameters p;
  const double s = sigma(p, 1.0); // about 0.4015
  CHECK(classify_region(p, 1.0, 0.5, 0.5) == Region::A3);  // f >= sigma
  CHECK(classify_region(p, 1.0, 0.5, s) == Region::A3);    // boundary in A3
  CHECK(classify_region(p, 1.0, 1.2, 0.3) == Region::A1);  // f >= (xi*tau-1)/nu = 0.2
  CHECK(classify_region(p, 1.0, 1.5, 0.1) == Region::A2);  // below the ridge
  CHECK(classify_region(p, 1.0, 0.5, 0.1) == Region::A1);  // ridge negative
}

TEST_CASE("region visits match the spiral story") {
  Parameters p;
  std::vector<OdeState> path = ode_run(p, 1.0, 0.0, 0.05, 0.005, 40.0);
  bool seen_a3 = false;
  for (const auto& st : path) {
    if (classify_region(p, 1.0, st.tau, st.f) == Region::A3) seen_a3 = true;
  }
  // ends in A3 around the fixed point (f_inf > sigma)
  CHECK(seen_a3);
  CHECK(classify_region(p, 1.0, path.back().tau, path.back().f) == Region::A3);
}
