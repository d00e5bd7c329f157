#ifndef AGING_CURVATURE_HPP
#define AGING_CURVATURE_HPP

// Extrinsic curvature of the constant-T leaves: the aging-rate tensor.

#include <array>

#include "aging/adm.hpp"
#include "aging/types.hpp"

namespace aging {

template <typename Scalar>
struct ExtrinsicCurvature {
  Mat3<Scalar> tensor;  // K^I_J, mixed

  Scalar trace() const { return tensor.trace(); }

  // Tr(dev K)^2 with dev K = K - (Tr K / 3) 1; nonnegative up to roundoff
  // when K is g-symmetric.
  Scalar deviatoric_invariant() const {
    const Mat3<Scalar> dev =
        tensor - Mat3<Scalar>::Identity() * (tensor.trace() / Scalar(3));
    return (dev * dev).trace();
  }
};

// K^I_J = S^{-1} g^{IS} (d_T g - N^K d_K g)_{SJ}. The transport term covers a
// spatially constant shift, which is the case in every closed scenario here;
// dg[k] = d g / d X^k.
template <typename Scalar, typename D>
ExtrinsicCurvature<Scalar> extrinsic_curvature(
    const AdmMetric<Scalar>& m, const Eigen::MatrixBase<D>& g_time_derivative,
    const std::array<Mat3<Scalar>, 3>& g_space_derivatives) {
  validate(m);
  Mat3<Scalar> rate = g_time_derivative;
  for (int k = 0; k < 3; ++k) rate -= m.shift[k] * g_space_derivatives[k];
  ExtrinsicCurvature<Scalar> out;
  out.tensor = m.spatial.llt().solve(rate) / m.lapse;
  return out;
}

// Bulk-degradation case (no shift): K = S^{-1} g^{-1} d_T g.
template <typename Scalar, typename D>
ExtrinsicCurvature<Scalar> extrinsic_curvature(const AdmMetric<Scalar>& m,
                                               const Eigen::MatrixBase<D>& g_time_derivative) {
  const std::array<Mat3<Scalar>, 3> no_gradient = {Mat3<Scalar>::Zero(), Mat3<Scalar>::Zero(),
                                                   Mat3<Scalar>::Zero()};
  return extrinsic_curvature(m, g_time_derivative, no_gradient);
}

// Cylindrical rod with g = diag(e^{2xi-eta}, e^{2xi-eta} R^2, e^{2xi+2eta});
// the axial slot carries the deviatoric rate with the opposite sign pairing:
//   K = S^{-1} diag(2 xi_t - eta_t, 2 xi_t - eta_t, 2 xi_t + 2 eta_t),
//   Tr K = 6 xi_t / S,  Tr(dev K)^2 = 6 eta_t^2 / S^2.
template <typename Scalar>
ExtrinsicCurvature<Scalar> rod_extrinsic_curvature(Scalar lapse, Scalar xi_t, Scalar eta_t) {
  ExtrinsicCurvature<Scalar> out;
  out.tensor = Vec3<Scalar>(Scalar(2) * xi_t - eta_t, Scalar(2) * xi_t - eta_t,
                            Scalar(2) * (xi_t + eta_t))
                   .asDiagonal();
  out.tensor /= lapse;
  return out;
}

}  // namespace aging

#endif
