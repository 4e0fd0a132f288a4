#include "agingflow/equilibria.hpp"

#include <cmath>

namespace agingflow {

namespace {

void require_flowing(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ValidationError("a must be positive");
  }
}

// The squared bracket ((nu*sigma + 1)/xi + 4/xi) that both the Dulac
// inequality and the fluidity floor share.
double floor_bracket(const Parameters& p, double s) {
  return (p.nu * s + 1.0) / p.xi + 4.0 / p.xi;
}

} // namespace

double SteadyState::u_at(double y) const {
  switch (kind) {
    case SteadyKind::Homogeneous:
      return 0.0;
    case SteadyKind::Nonhomogeneous:
      return u_slope * y;
    case SteadyKind::Piecewise:
      return y < beta_inf ? u_slope * y : u_slope * beta_inf;
  }
  return 0.0;
}

double SteadyState::tau_at(double y) const {
  if (kind == SteadyKind::Piecewise && y >= beta_inf) return tau_solid;
  return tau_inf;
}

double SteadyState::f_at(double y) const {
  if (kind == SteadyKind::Homogeneous) return 0.0;
  if (kind == SteadyKind::Piecewise && y >= beta_inf) return 0.0;
  return f_inf;
}

SteadyState steady_homogeneous(double c) {
  if (!std::isfinite(c)) {
    throw ValidationError("the homogeneous stress level must be finite");
  }
  SteadyState ss;
  ss.kind = SteadyKind::Homogeneous;
  ss.tau_inf = c;
  ss.tau_solid = c;
  return ss;
}

SteadyState steady_nonhomogeneous(const Parameters& p, double a) {
  validate_parameters(p);
  require_flowing(a);
  const double ga = p.g_mod * a;
  const double r = std::sqrt(1.0 + 4.0 * p.nu * p.xi * ga);
  SteadyState ss;
  ss.kind = SteadyKind::Nonhomogeneous;
  ss.u_slope = a;
  ss.tau_inf = (r + 1.0) / (2.0 * p.xi);
  // (r - 1)/(2 nu) without the cancellation at small a
  ss.f_inf = 2.0 * p.xi * ga / (r + 1.0);
  ss.beta_inf = 1.0;
  ss.tau_solid = ss.tau_inf;
  return ss;
}

SteadyState steady_piecewise(const Parameters& p, double a, double beta_inf) {
  validate_parameters(p);
  require_flowing(a);
  if (!(beta_inf > 0.0 && beta_inf <= 1.0)) {
    throw ValidationError("beta_inf must lie in (0, 1]");
  }
  if (beta_inf == 1.0) {
    return steady_nonhomogeneous(p, a);
  }
  const double a_eff = a / beta_inf;
  SteadyState ss = steady_nonhomogeneous(p, a_eff);
  ss.kind = SteadyKind::Piecewise;
  ss.beta_inf = beta_inf;
  ss.tau_solid = p.eta * a_eff + ss.tau_inf;
  return ss;
}

double sigma(const Parameters& p, double a) {
  validate_parameters(p);
  require_flowing(a);
  const double ga = p.g_mod * a;
  const SteadyState ss = steady_nonhomogeneous(p, a);
  const double branch1 = 3.0 * ga / (ga * p.nu + 4.0 * ss.tau_inf);
  const double branch2 = 2.0 * ss.f_inf / 3.0; // = (sqrt(1+4 nu xi Ga)-1)/(3 nu)
  return std::min(branch1, branch2);
}

DulacResult dulac_condition(const Parameters& p, double a) {
  const double s = sigma(p, a);
  const double ga = p.g_mod * a;
  const double q = floor_bracket(p, s);
  const double lhs =
      -1.0 / p.lambda - 2.0 +
      2.0 * p.xi * (1.0 + ga) *
          (1.0 / s + (p.lambda * p.xi / (2.0 * ga)) * q * q);
  return {lhs, lhs < 0.0};
}

double fluidity_floor_m_f(const Parameters& p, double a, double f0) {
  if (!(f0 > 0.0)) {
    throw ValidationError("f0 must be positive");
  }
  const double s = sigma(p, a);
  const double ga = p.g_mod * a;
  const double q = floor_bracket(p, s);
  const double denom = std::max(1.0 / f0, 1.0 / s) +
                       (p.lambda * p.xi / (2.0 * ga)) * q * q;
  return 1.0 / denom;
}

StabilityReport linearized_rate(const Parameters& p, double a) {
  const SteadyState ss = steady_nonhomogeneous(p, a);
  const double fi = ss.f_inf;
  const double ti = ss.tau_inf;
  const double trace_part = 1.0 / p.lambda + p.nu * fi;
  const double det_part = p.nu * fi / p.lambda + p.xi * ti / p.lambda;
  StabilityReport rep;
  rep.delta = fi * fi * (trace_part * trace_part - 4.0 * det_part);
  const double half_trace = 0.5 * (fi / p.lambda + p.nu * fi * fi);
  if (rep.delta >= 0.0) {
    rep.c_r = half_trace - 0.5 * std::sqrt(rep.delta);
    rep.eigen_class = EigenClass::RealNegativePair;
  } else {
    rep.c_r = half_trace;
    rep.eigen_class = EigenClass::ComplexPair;
  }
  rep.sigma = sigma(p, a);
  rep.dulac_holds = dulac_condition(p, a).holds;
  rep.m_f = fluidity_floor_m_f(p, a, rep.sigma);
  return rep;
}

} // namespace agingflow
