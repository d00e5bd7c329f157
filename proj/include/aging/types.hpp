#ifndef AGING_TYPES_HPP
#define AGING_TYPES_HPP

// Common dense types. Everything downstream is templated on the scalar and
// uses fixed-size Eigen matrices; no dynamic allocation in the math core.

#include <Eigen/Dense>

namespace aging {

template <typename Scalar> using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar> using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar> using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar> using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

// Symmetry up to roundoff plus a successful Cholesky factorization.
template <typename Scalar>
bool is_spd(const Mat3<Scalar>& a) {
  const Scalar scale = Scalar(1) + a.cwiseAbs().maxCoeff();
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale) return false;
  Eigen::LLT<Mat3<Scalar>> llt(a);
  return llt.info() == Eigen::Success;
}

}  // namespace aging

#endif
