#ifndef AGING_SPECTRAL_HPP
#define AGING_SPECTRAL_HPP

// Fourier collocation on uniform periodic grids: differentiation matrices and
// trapezoid quadrature. Exact on band-limited fields, spectrally accurate on
// smooth ones.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace aging {

// D_{jk} = (1/2) (-1)^{j-k} cot((j-k) pi / n) scaled to the given period.
// Even n only; the matrix is antisymmetric, so summation by parts against the
// uniform trapezoid weights is exact.
inline Eigen::MatrixXd spectral_diff_matrix(int n, double period) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("spectral_diff_matrix: need an even node count >= 4");
  if (!(period > 0)) throw std::invalid_argument("spectral_diff_matrix: period must be positive");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  const double pi = std::acos(-1.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      const int m = j - k;
      const double sign = m % 2 == 0 ? 1.0 : -1.0;
      d(j, k) = 0.5 * sign / std::tan(m * pi / n) * (2.0 * pi / period);
    }
  return d;
}

}  // namespace aging

#endif
