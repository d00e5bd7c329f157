#ifndef AGING_LIE_HPP
#define AGING_LIE_HPP

// Matrix functions on symmetric positive definite matrices via self-adjoint
// eigendecomposition, and the similarity-symmetrized logarithm of a product
// of two SPD matrices.

#include <cmath>
#include <stdexcept>

#include "aging/types.hpp"

namespace aging {

namespace detail {

template <typename Scalar, typename F>
Mat3<Scalar> spd_apply(const Mat3<Scalar>& a, F&& f, const char* what) {
  Eigen::SelfAdjointEigenSolver<Mat3<Scalar>> es(a);
  if (es.info() != Eigen::Success)
    throw std::invalid_argument(std::string(what) + ": eigendecomposition failed");
  Vec3<Scalar> w = es.eigenvalues();
  for (int i = 0; i < 3; ++i) {
    if (!(w[i] > Scalar(0)))
      throw std::invalid_argument(std::string(what) + ": matrix is not positive definite");
    w[i] = f(w[i]);
  }
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace detail

template <typename Scalar>
Mat3<Scalar> spd_sqrt(const Mat3<Scalar>& a) {
  using std::sqrt;
  return detail::spd_apply(a, [](Scalar w) { return sqrt(w); }, "spd_sqrt");
}

template <typename Scalar>
Mat3<Scalar> spd_inv_sqrt(const Mat3<Scalar>& a) {
  using std::sqrt;
  return detail::spd_apply(a, [](Scalar w) { return Scalar(1) / sqrt(w); }, "spd_inv_sqrt");
}

template <typename Scalar>
Mat3<Scalar> spd_log(const Mat3<Scalar>& a) {
  using std::log;
  return detail::spd_apply(a, [](Scalar w) { return log(w); }, "spd_log");
}

template <typename Scalar>
Mat3<Scalar> sym_exp(const Mat3<Scalar>& a) {
  using std::exp;
  Eigen::SelfAdjointEigenSolver<Mat3<Scalar>> es(a);
  Vec3<Scalar> w = es.eigenvalues();
  for (int i = 0; i < 3; ++i) w[i] = exp(w[i]);
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

// log(A^{-1} B) for SPD A, B. A^{-1} B is similar to the SPD matrix
// A^{-1/2} B A^{-1/2}, so the log is real:
//   log(A^{-1} B) = A^{-1/2} log(A^{-1/2} B A^{-1/2}) A^{1/2}.
template <typename Scalar>
Mat3<Scalar> log_similarity(const Mat3<Scalar>& a, const Mat3<Scalar>& b) {
  const Mat3<Scalar> r = spd_inv_sqrt(a);
  const Mat3<Scalar> core = spd_log(Mat3<Scalar>(r * b * r));
  return r * core * spd_sqrt(a);
}

}  // namespace aging

#endif
