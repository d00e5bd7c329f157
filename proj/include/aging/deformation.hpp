#ifndef AGING_DEFORMATION_HPP
#define AGING_DEFORMATION_HPP

// First jet of the deformation phi: M -> R^3 at a material point, and the
// Cauchy-Green pullbacks built from it.

#include "aging/types.hpp"

namespace aging {

template <typename Scalar>
struct DeformationJet {
  Mat3<Scalar> gradient = Mat3<Scalar>::Identity();  // phi^i_{,I}: row i, col I
  Vec3<Scalar> velocity = Vec3<Scalar>::Zero();      // phi^i_{,0}
  Mat3<Scalar> ambient = Mat3<Scalar>::Identity();   // h_ij
};

template <typename Scalar>
struct CauchyGreen {
  Mat3<Scalar> spatial;     // C_IJ = <phi_,I, phi_,J>_h
  Mat4<Scalar> degenerate;  // 4D pullback; Gram of 4 vectors in R^3, det = 0
};

// C4 = (d phi)^T h (d phi) over (T, X): time-time slot |V|^2_h, mixed slots
// <V, phi_,J>_h, spatial block C_IJ. Rank <= 3 by construction.
template <typename Scalar>
CauchyGreen<Scalar> cauchy_green(const DeformationJet<Scalar>& jet) {
  CauchyGreen<Scalar> out;
  const Vec3<Scalar> hv = jet.ambient * jet.velocity;
  const Mat3<Scalar> hf = jet.ambient * jet.gradient;
  out.spatial = jet.gradient.transpose() * hf;
  out.degenerate(0, 0) = jet.velocity.dot(hv);
  out.degenerate.template block<1, 3>(0, 1) = (jet.gradient.transpose() * hv).transpose();
  out.degenerate.template block<3, 1>(1, 0) = jet.gradient.transpose() * hv;
  out.degenerate.template block<3, 3>(1, 1) = out.spatial;
  return out;
}

}  // namespace aging

#endif
