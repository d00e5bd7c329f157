#ifndef AGING_STRESS_HPP
#define AGING_STRESS_HPP

// Stress measures of the quadratic strain energy: first/second Piola-Kirchhoff,
// Cauchy, and the 4D Eshelby energy-momentum tensor.

#include <cmath>
#include <stdexcept>

#include "aging/deformation.hpp"
#include "aging/moduli.hpp"
#include "aging/strain.hpp"
#include "aging/types.hpp"

namespace aging {

template <typename Scalar>
struct StressState {
  Mat3<Scalar> first_pk;   // P^I_j = df/d(phi^j_{,I}); row I, col j
  Mat3<Scalar> second_pk;  // S^I_J = P^I_i phi^i_{,J}
  Mat3<Scalar> cauchy;     // sigma_ij, exactly symmetric by construction
  Mat4<Scalar> eshelby;    // b: b^0_0 = f, b^0_J = 0, b^I_0 = -P^I_i phi^i_{,0},
                           //    b^I_J = f delta - S^I_J
  Scalar strain_energy_density;
};

// Analytic derivative of f = (mu/2) Tr(E^2) + (lambda/2) (Tr E)^2 with
// E = (g^{-1} C3(phi) - 1)/2 at fixed g:
//   P = M F^T h,  M = (mu E + lambda Tr E) g^{-1}  (M symmetric).
// g is recovered from the strain set via g = C3 (1 + 2 E_el)^{-1}.
template <typename Scalar>
StressState<Scalar> stress_tensors(const DeformationJet<Scalar>& jet,
                                   const StrainSet<Scalar>& e,
                                   const ElasticModuli<Scalar>& mod) {
  if (e.convention != StrainConvention::Linear)
    throw std::invalid_argument(
        "stress_tensors: analytic first Piola-Kirchhoff requires the Linear convention");
  const Scalar jac = jet.gradient.determinant();
  if (!(jac > 0))
    throw std::invalid_argument("stress_tensors: deformation must be orientation-preserving");

  const Mat3<Scalar> c3 = cauchy_green(jet).spatial;
  const Mat3<Scalar> stretch = Mat3<Scalar>::Identity() + Scalar(2) * e.elastic;
  if (std::abs(stretch.determinant()) < Scalar(1e-14))
    throw std::invalid_argument("stress_tensors: degenerate elastic strain");
  Mat3<Scalar> g = c3 * stretch.inverse();
  g = ((g + g.transpose()) / Scalar(2)).eval();

  const Scalar tr = e.elastic.trace();
  const Mat3<Scalar> m =
      (mod.mu * e.elastic + mod.lambda * tr * Mat3<Scalar>::Identity()) * g.inverse();
  const Mat3<Scalar> hf = jet.ambient * jet.gradient;

  StressState<Scalar> out;
  out.strain_energy_density = strain_energy(e, mod);
  out.first_pk = m * hf.transpose();
  out.second_pk = m * c3;
  out.cauchy = hf * m * hf.transpose() / jac;
  out.eshelby.setZero();
  out.eshelby(0, 0) = out.strain_energy_density;
  out.eshelby.template block<3, 1>(1, 0) = -out.first_pk * jet.velocity;
  out.eshelby.template block<3, 3>(1, 1) =
      out.strain_energy_density * Mat3<Scalar>::Identity() - out.second_pk;
  return out;
}

}  // namespace aging

#endif
