#ifndef AGING_STRAIN_HPP
#define AGING_STRAIN_HPP

// Elastic / inelastic / total strain decompositions against the evolving
// spatial metric g and a reference metric g0. All three strains are mixed
// (1,1) tensors.

#include <stdexcept>

#include "aging/adm.hpp"
#include "aging/deformation.hpp"
#include "aging/lie.hpp"
#include "aging/types.hpp"

namespace aging {

enum class StrainConvention { Linear, Logarithmic };

template <typename Scalar>
struct StrainSet {
  Mat3<Scalar> elastic;
  Mat3<Scalar> inelastic;
  Mat3<Scalar> total;
  StrainConvention convention = StrainConvention::Linear;
  Mat3<Scalar> reference = Mat3<Scalar>::Identity();  // g0 used for the split
};

// Linear convention:
//   E_el = (g^{-1} C3 - 1)/2,  E_in = (1 - g^{-1} g0)/2,
//   E_tot = g^{-1}(C3 - g0)/2 = E_el + E_in (additivity is exact).
template <typename Scalar, typename D>
StrainSet<Scalar> strain_linear(const AdmMetric<Scalar>& m,
                                const DeformationJet<Scalar>& jet,
                                const Eigen::MatrixBase<D>& g0_expr) {
  validate(m);
  const Mat3<Scalar> g0 = g0_expr;
  if (!is_spd(g0)) throw std::invalid_argument("strain_linear: reference metric must be SPD");
  const Mat3<Scalar> c3 = cauchy_green(jet).spatial;
  Eigen::LLT<Mat3<Scalar>> llt(m.spatial);
  StrainSet<Scalar> out;
  out.convention = StrainConvention::Linear;
  out.reference = g0;
  out.elastic = (llt.solve(c3) - Mat3<Scalar>::Identity()) / Scalar(2);
  out.inelastic = (Mat3<Scalar>::Identity() - llt.solve(g0)) / Scalar(2);
  out.total = llt.solve(Mat3<Scalar>(c3 - g0)) / Scalar(2);
  return out;
}

// Mixed time column of the linear elastic strain,
//   E^I_0 = (g^{IK} <phi_,0, phi_,K>_h - N^I)/2.
// Vanishes together with the spatial block exactly when g = C3(phi) and the
// shift matches the convected velocity.
template <typename Scalar>
Vec3<Scalar> elastic_time_column(const AdmMetric<Scalar>& m,
                                 const DeformationJet<Scalar>& jet) {
  validate(m);
  const Vec3<Scalar> mixed = jet.gradient.transpose() * (jet.ambient * jet.velocity);
  return (m.spatial.llt().solve(mixed) - m.shift) / Scalar(2);
}

// Logarithmic convention:
//   E_el = log(g^{-1} C3)/2, E_in = log(g0^{-1} g)/2, E_tot = log(g0^{-1} C3)/2.
// Additivity holds only to second order (the factors do not commute).
template <typename Scalar, typename D>
StrainSet<Scalar> strain_log(const AdmMetric<Scalar>& m,
                             const DeformationJet<Scalar>& jet,
                             const Eigen::MatrixBase<D>& g0_expr) {
  validate(m);
  const Mat3<Scalar> g0 = g0_expr;
  if (!is_spd(g0)) throw std::invalid_argument("strain_log: reference metric must be SPD");
  const Mat3<Scalar> c3 = cauchy_green(jet).spatial;
  if (!is_spd(c3))
    throw std::invalid_argument("strain_log: degenerate deformation gradient");
  StrainSet<Scalar> out;
  out.convention = StrainConvention::Logarithmic;
  out.reference = g0;
  out.elastic = log_similarity(m.spatial, c3) / Scalar(2);
  out.inelastic = log_similarity(g0, m.spatial) / Scalar(2);
  out.total = log_similarity(g0, c3) / Scalar(2);
  return out;
}

}  // namespace aging

#endif
