#pragma once
// Closed-form steady states of the Couette system, the spectral
// convergence rate of the 0D reduction, and the auxiliary quantities
// (sigma, the Dulac-type inequality, the fluidity floor m_f) used in the
// boundedness analysis. Pure functions throughout.

#include "agingflow/core.hpp"

namespace agingflow {

enum class SteadyKind {
  Homogeneous,    ///< a=0 family (u=0, tau=c, f=0)
  Nonhomogeneous, ///< a>0, fluidity positive across the gap
  Piecewise,      ///< a>0, flowing on [0,beta_inf), solid elsewhere
};

/// A stationary solution. For Homogeneous and Nonhomogeneous the fields
/// describe the whole gap (beta_inf = 1, tau_solid = tau_inf). For
/// Piecewise the gap splits at beta_inf: the fluid region [0,beta_inf)
/// carries (u_slope, tau_inf, f_inf), the solid rest has zero velocity
/// gradient, stress tau_solid and zero fluidity.
struct SteadyState {
  SteadyKind kind = SteadyKind::Homogeneous;
  double u_slope = 0.0;   ///< du/dy in the fluid region
  double tau_inf = 0.0;   ///< stress in the fluid region (the constant c
                          ///< when homogeneous)
  double f_inf = 0.0;     ///< fluidity in the fluid region
  double beta_inf = 1.0;  ///< width of the fluid region
  double tau_solid = 0.0; ///< stress in the solid region

  double u_at(double y) const;
  double tau_at(double y) const;
  double f_at(double y) const;
};

/// The rest family (u=0, tau=c, f=0) with a=0.
SteadyState steady_homogeneous(double c);

/// The unique flowing steady state for wall speed a > 0:
/// u(y) = a*y, tau = (sqrt(1+4*nu*xi*G*a)+1)/(2*xi),
/// f = (sqrt(1+4*nu*xi*G*a)-1)/(2*nu). The fluidity is evaluated as
/// 2*xi*G*a/(sqrt(1+4*nu*xi*G*a)+1) to avoid cancellation for small a.
/// Throws ValidationError when a <= 0.
SteadyState steady_nonhomogeneous(const Parameters& p, double a);

/// Partially flowing steady state with prescribed fluid-region width
/// beta_inf in (0, 1]. The fluid region sees the effective shear
/// a/beta_inf; the solid region carries the extra viscous stress
/// eta*a/beta_inf on top of the fluid value. beta_inf = 1 coincides with
/// steady_nonhomogeneous. Throws ValidationError on a <= 0 or beta_inf
/// outside (0, 1].
SteadyState steady_piecewise(const Parameters& p, double a, double beta_inf);

/// Region threshold sigma = min{ 3Ga/(Ga*nu + 4*tau_inf),
/// (sqrt(1+4*nu*xi*G*a)-1)/(3*nu) }. Requires a > 0.
double sigma(const Parameters& p, double a);

struct DulacResult {
  double lhs = 0.0;   ///< evaluated left-hand side of the inequality
  bool holds = false; ///< lhs < 0
};

/// Evaluates the negative-divergence (Dulac) inequality
/// -1/lambda - 2 + 2*xi*(1+Ga)*(1/sigma + (lambda*xi/(2Ga))*
/// ((nu*sigma+1)/xi + 4/xi)^2) < 0 that rules out periodic orbits of the
/// 0D system. It is sufficient, not necessary: at the default parameters
/// it fails while trajectories still converge. Requires a > 0.
DulacResult dulac_condition(const Parameters& p, double a);

/// Lower bound on the fluidity given an initial value f0 > 0:
/// m_f = 1 / ( max{1/f0, 1/sigma}
///             + (lambda*xi/(2Ga)) * ((nu*sigma+1)/xi + 4/xi)^2 ).
/// Requires f0 > 0 and a > 0.
double fluidity_floor_m_f(const Parameters& p, double a, double f0);

enum class EigenClass {
  ComplexPair,      ///< spiral approach, rate = common real part
  RealNegativePair, ///< monotone approach, rate = slower eigenvalue
};

struct StabilityReport {
  double delta = 0.0; ///< discriminant of the 2x2 linearization
  double c_r = 0.0;   ///< exponential convergence rate (> 0)
  EigenClass eigen_class = EigenClass::ComplexPair;
  double sigma = 0.0;
  bool dulac_holds = false;
  double m_f = 0.0; ///< floor with f0 = sigma (its f0-independent value)
};

/// Linearizes the 0D system at the flowing steady state. With
/// Delta = f_inf^2 * ((1/lambda + nu*f_inf)^2
///                   - 4*(nu*f_inf/lambda + xi*tau_inf/lambda)),
/// the rate is C_r = (f_inf/lambda + nu*f_inf^2)/2 - sqrt(Delta)/2 for
/// Delta >= 0 (real-negative-pair) and without the sqrt term otherwise
/// (complex-pair). Delta = 0 counts as real. Requires a > 0.
StabilityReport linearized_rate(const Parameters& p, double a);

} // namespace agingflow
