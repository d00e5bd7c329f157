#ifndef AGING_MASS_HPP
#define AGING_MASS_HPP

// Reference mass density transport. In the bulk-degradation case the density
// follows the metric volume directly; on a line with shift it obeys the
// conservation law (rho0 sqrt g)_{,0} = (N rho0 sqrt g)_{,X}.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "aging/adm.hpp"
#include "aging/types.hpp"

namespace aging {

// rho0(T, X) = rho0(0, X) sqrt(|g(0)| / |g(T)|).
template <typename Scalar, typename D0, typename D1>
Scalar mass_density(Scalar initial_density, const Eigen::MatrixBase<D0>& g_initial,
                    const Eigen::MatrixBase<D1>& g_now) {
  using std::sqrt;
  const Mat3<Scalar> g0 = g_initial, g1 = g_now;
  if (!is_spd(g0) || !is_spd(g1))
    throw std::invalid_argument("mass_density: metrics must be SPD");
  return initial_density * sqrt(g0.determinant() / g1.determinant());
}

// Same with the initial metric normalized to |g(0)| = 1.
template <typename Scalar>
Scalar mass_density(Scalar initial_density, const AdmMetric<Scalar>& m) {
  return mass_density(initial_density, Mat3<Scalar>(Mat3<Scalar>::Identity()), m.spatial);
}

// One conservative upwind step of u_t = (N u)_X for u = rho0 sqrt(g) on a
// periodic grid. Interface fluxes are upwinded against the characteristic
// speed -N; total mass telescopes exactly. First order in dx.
inline std::vector<double> mass_density_step_1d(const std::vector<double>& u,
                                                const std::vector<double>& shift,
                                                double dx, double dt) {
  const std::size_t n = u.size();
  if (n < 2 || shift.size() != n)
    throw std::invalid_argument("mass_density_step_1d: need matching grids with n >= 2");
  if (!(dx > 0) || !(dt > 0))
    throw std::invalid_argument("mass_density_step_1d: dx and dt must be positive");
  for (double nv : shift)
    if (std::abs(nv) * dt / dx > 1.0)
      throw std::invalid_argument("mass_density_step_1d: CFL condition |N| dt/dx <= 1 violated");

  std::vector<double> flux(n);  // flux through interface j+1/2
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t jp = (j + 1) % n;
    const double n_face = 0.5 * (shift[j] + shift[jp]);
    flux[j] = n_face >= 0 ? shift[jp] * u[jp] : shift[j] * u[j];
  }
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t jm = (j + n - 1) % n;
    out[j] = u[j] + dt / dx * (flux[j] - flux[jm]);
  }
  return out;
}

}  // namespace aging

#endif
