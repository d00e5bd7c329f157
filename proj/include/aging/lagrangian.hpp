#ifndef AGING_LAGRANGIAN_HPP
#define AGING_LAGRANGIAN_HPP

// Scalar metric Lagrangian and the lapse constraint for homogeneous rod states.

#include <cmath>
#include <stdexcept>
#include <variant>

#include "aging/adm.hpp"
#include "aging/curvature.hpp"
#include "aging/dissipation.hpp"
#include "aging/ground_state.hpp"
#include "aging/types.hpp"

namespace aging {

// Homogeneous rod metric: g = diag(e^{2xi-eta} r^2, e^{2xi-eta} r^2, e^{2xi+2eta}).
// xi is the volumetric log stretch, eta the deviatoric one, axis on the third slot.
template <typename Scalar>
AdmMetric<Scalar> rod_metric(Scalar lapse, Scalar xi, Scalar eta, Scalar radius = Scalar(1)) {
  AdmMetric<Scalar> m;
  m.lapse = lapse;
  m.shift = Vec3<Scalar>::Zero();
  const Scalar cross = std::exp(Scalar(2) * xi - eta) * radius * radius;
  m.spatial = Mat3<Scalar>::Zero();
  m.spatial(0, 0) = cross;
  m.spatial(1, 1) = cross;
  m.spatial(2, 2) = std::exp(Scalar(2) * xi + Scalar(2) * eta);
  validate(m);
  return m;
}

template <typename Scalar>
struct RodState {
  Scalar xi;
  Scalar eta;
  Scalar stretch;  // lateral stretch sqrt(g_11), the necking variable
};

template <typename Scalar>
RodState<Scalar> rod_state(const AdmMetric<Scalar>& m, Scalar radius = Scalar(1)) {
  validate(m);
  RodState<Scalar> out;
  const Scalar r2 = radius * radius;
  out.xi = std::log(m.spatial.determinant() / (r2 * r2)) / Scalar(6);
  out.eta = (std::log(m.spatial(2, 2)) - std::log(m.spatial(0, 0) / r2)) / Scalar(3);
  out.stretch = std::sqrt(m.spatial(0, 0) / r2);
  return out;
}

namespace detail {

template <typename Scalar>
Scalar rod_order_parameter(const GroundStateEnergy<Scalar>& f, const RodState<Scalar>& rs) {
  return std::visit(
      [&](const auto& form) -> Scalar {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, UAPolynomial<Scalar>>)
          return rs.xi;
        else if constexpr (std::is_same_v<T, SRPolynomial<Scalar>>)
          return rs.eta;
        else if constexpr (std::is_same_v<T, NeckingDoubleWell<Scalar>>)
          return rs.stretch;
        else
          throw std::invalid_argument("ground-state form has no rod order parameter");
      },
      f);
}

template <typename Scalar>
RateSelector rod_rate_selector(const GroundStateEnergy<Scalar>& f) {
  if (std::holds_alternative<SRPolynomial<Scalar>>(f)) return RateSelector::Deviatoric;
  return RateSelector::Volumetric;
}

}  // namespace detail

// L_m = F(S, q) + chi(K) + alpha (div N)^2 + beta R, evaluated on a rod state.
// The scalar rate fed to chi is Tr K / 6 (volumetric forms) or the deviatoric
// invariant (stress-relaxation form).
template <typename Scalar>
Scalar metric_lagrangian(const GroundStateEnergy<Scalar>& f, const DissipativePotential<Scalar>& chi,
                         Scalar alpha, Scalar beta, const AdmMetric<Scalar>& m,
                         const ExtrinsicCurvature<Scalar>& k, Scalar div_shift,
                         Scalar scalar_curvature) {
  validate(f);
  validate(chi);
  const RodState<Scalar> rs = rod_state(m);
  const Scalar q = detail::rod_order_parameter(f, rs);
  const RateSelector sel = detail::rod_rate_selector(f);
  return ground_value(f, m.lapse, q) + chi_on_curvature(chi, k, sel) +
         alpha * div_shift * div_shift + beta * scalar_curvature;
}

// Lapse constraint: d/dS (S L_m) = f restricted to a rod state,
//   (F + S dF/dS) + (chi - chi_K : K) + beta R - f.
// Vanishes identically along admissible closed-system trajectories.
template <typename Scalar>
Scalar constraint_residual(const GroundStateEnergy<Scalar>& f,
                           const DissipativePotential<Scalar>& chi, const AdmMetric<Scalar>& m,
                           const ExtrinsicCurvature<Scalar>& k, Scalar scalar_curvature,
                           Scalar free_energy_density, Scalar beta = Scalar(1)) {
  validate(f);
  validate(chi);
  const RodState<Scalar> rs = rod_state(m);
  const Scalar q = detail::rod_order_parameter(f, rs);
  const RateSelector sel = detail::rod_rate_selector(f);
  const Scalar ground = ground_value(f, m.lapse, q) + m.lapse * ground_d_lapse(f, m.lapse, q);
  const Scalar gap = chi_on_curvature(chi, k, sel) - chi_contract_curvature(chi, k, sel);
  return ground + gap + beta * scalar_curvature - free_energy_density;
}

}  // namespace aging

#endif
