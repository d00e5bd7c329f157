#ifndef AGING_ADM_HPP
#define AGING_ADM_HPP

// ADM decomposition of the 4D material metric: lapse S, shift N^I, spatial
// metric g_IJ. Index order is (T, X^1, X^2, X^3); the signature is fully
// Riemannian.

#include <cmath>
#include <stdexcept>

#include "aging/types.hpp"

namespace aging {

template <typename Scalar>
struct AdmMetric {
  Scalar lapse = Scalar(1);
  Vec3<Scalar> shift = Vec3<Scalar>::Zero();
  Mat3<Scalar> spatial = Mat3<Scalar>::Identity();
};

template <typename Scalar>
void validate(const AdmMetric<Scalar>& m) {
  if (!(m.lapse > Scalar(0)))
    throw std::invalid_argument("AdmMetric: lapse must be positive");
  if (!is_spd(m.spatial))
    throw std::invalid_argument("AdmMetric: spatial metric must be symmetric positive definite");
}

template <typename Scalar>
struct AdmAssembly {
  Mat4<Scalar> metric;    // G_00 = N_A N^A + S^2, G_0I = N_I, G_IJ = g_IJ
  Mat4<Scalar> inverse;   // closed form, no 4x4 factorization
  Scalar sqrt_det;        // sqrt|G| = S sqrt|g|
};

template <typename Scalar>
AdmAssembly<Scalar> adm_assemble(const AdmMetric<Scalar>& m) {
  using std::sqrt;
  validate(m);
  const Scalar s = m.lapse;
  const Mat3<Scalar>& g = m.spatial;
  const Vec3<Scalar> n_low = g * m.shift;  // N_I

  AdmAssembly<Scalar> out;
  out.metric(0, 0) = m.shift.dot(n_low) + s * s;
  out.metric.template block<1, 3>(0, 1) = n_low.transpose();
  out.metric.template block<3, 1>(1, 0) = n_low;
  out.metric.template block<3, 3>(1, 1) = g;

  const Scalar inv_s2 = Scalar(1) / (s * s);
  const Mat3<Scalar> g_inv = g.inverse();
  out.inverse(0, 0) = inv_s2;
  out.inverse.template block<1, 3>(0, 1) = -inv_s2 * m.shift.transpose();
  out.inverse.template block<3, 1>(1, 0) = -inv_s2 * m.shift;
  out.inverse.template block<3, 3>(1, 1) =
      g_inv + inv_s2 * (m.shift * m.shift.transpose());

  out.sqrt_det = s * sqrt(g.determinant());
  return out;
}

template <typename Scalar>
struct FlowVector {
  Vec4<Scalar> vector;  // u = (1/S, -N^I/S)
  Vec4<Scalar> coform;  // u_flat = G u = (S, 0, 0, 0)
};

// Unit material flow: G(u, u) = 1 and the coform annihilates spatial
// directions, both exact in the ADM parametrization.
template <typename Scalar>
FlowVector<Scalar> flow_vector(const AdmMetric<Scalar>& m) {
  validate(m);
  FlowVector<Scalar> out;
  out.vector[0] = Scalar(1) / m.lapse;
  out.vector.template tail<3>() = -m.shift / m.lapse;
  out.coform.setZero();
  out.coform[0] = m.lapse;
  return out;
}

}  // namespace aging

#endif
