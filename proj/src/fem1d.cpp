#include "agingflow/fem1d.hpp"

#include <cmath>

#include "agingflow/kernels.hpp"

namespace agingflow {

TridiagonalSystem assemble_momentum_operator(const Parameters& p,
                                             const Grid& grid, double dt) {
  validate_parameters(p);
  if (!(dt > 0.0)) {
    throw ValidationError("dt must be positive");
  }
  const int m = grid.n_cells - 1;
  if (m < 1) {
    throw ValidationError("grid has no interior nodes");
  }
  const double h = grid.h;
  const double diag = (p.rho / dt) * (4.0 * h / 6.0) + p.eta * 2.0 / h;
  const double off = (p.rho / dt) * (h / 6.0) - p.eta / h;
  TridiagonalSystem sys;
  sys.lower.assign(m, off);
  sys.diag.assign(m, diag);
  sys.upper.assign(m, off);
  sys.lower.front() = 0.0;
  sys.upper.back() = 0.0;
  return sys;
}

TridiagonalFactors factorize(const TridiagonalSystem& sys) {
  const std::size_t m = sys.size();
  if (sys.lower.size() != m || sys.upper.size() != m || m == 0) {
    throw ValidationError("tridiagonal bands must have equal nonzero length");
  }
  TridiagonalFactors fac;
  fac.lower = sys.lower;
  fac.cprime.resize(m);
  fac.inv_diag.resize(m);
  double denom = sys.diag[0];
  for (std::size_t i = 0;; ++i) {
    if (denom == 0.0 || !std::isfinite(denom)) {
      throw NumericError("tridiagonal pivot is zero or non-finite");
    }
    fac.inv_diag[i] = 1.0 / denom;
    fac.cprime[i] = sys.upper[i] * fac.inv_diag[i];
    if (i + 1 == m) break;
    denom = sys.diag[i + 1] - sys.lower[i + 1] * fac.cprime[i];
  }
  return fac;
}

std::vector<double> solve_with_factors(const TridiagonalFactors& fac,
                                       const std::vector<double>& rhs) {
  const std::size_t m = fac.size();
  if (rhs.size() != m) {
    throw ValidationError("rhs length does not match the operator");
  }
  std::vector<double> x(m);
  x[0] = rhs[0] * fac.inv_diag[0];
  for (std::size_t i = 1; i < m; ++i) {
    x[i] = (rhs[i] - fac.lower[i] * x[i - 1]) * fac.inv_diag[i];
  }
  for (std::size_t i = m - 1; i-- > 0;) {
    x[i] = x[i] - fac.cprime[i] * x[i + 1];
  }
  return x;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys,
                                      const std::vector<double>& rhs) {
  return solve_with_factors(factorize(sys), rhs);
}

std::vector<double> apply(const TridiagonalSystem& sys,
                          const std::vector<double>& x) {
  const std::size_t m = sys.size();
  if (x.size() != m) {
    throw ValidationError("vector length does not match the operator");
  }
  std::vector<double> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    double v = sys.diag[i] * x[i];
    if (i > 0) v += sys.lower[i] * x[i - 1];
    if (i + 1 < m) v += sys.upper[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

std::vector<double> gradient_p1_to_p0(const std::vector<double>& u,
                                      const Grid& grid) {
  const auto n = static_cast<std::size_t>(grid.n_cells);
  if (u.size() != n + 1) {
    throw ValidationError("u must hold one value per node");
  }
  std::vector<double> d(n);
  kernels::gradient(u.data(), n, grid.h, d.data());
  return d;
}

std::vector<double> stress_divergence_rhs(const std::vector<double>& tau,
                                          const Grid& grid) {
  const auto n = static_cast<std::size_t>(grid.n_cells);
  if (tau.size() != n) {
    throw ValidationError("tau must hold one value per cell");
  }
  std::vector<double> load(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    load[i - 1] = tau[i] - tau[i - 1];
  }
  return load;
}

} // namespace agingflow
