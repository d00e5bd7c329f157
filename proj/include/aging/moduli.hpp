#ifndef AGING_MODULI_HPP
#define AGING_MODULI_HPP

// Isotropic elastic moduli bookkeeping and the quadratic strain energy.

#include <cmath>
#include <stdexcept>

#include "aging/strain.hpp"
#include "aging/types.hpp"

namespace aging {

template <typename Scalar>
struct ElasticModuli {
  Scalar mu;          // shear Lame
  Scalar lambda;      // second Lame
  Scalar bulk_k;      // K = lambda + 2 mu / 3
  Scalar young_y;     // Y = mu (3 lambda + 2 mu) / (lambda + mu)
  Scalar poisson_nu;  // nu = lambda / (2 (lambda + mu))

  static ElasticModuli from_lame(Scalar mu, Scalar lambda) {
    if (!(mu > 0) || !(lambda + mu > 0))
      throw std::invalid_argument("ElasticModuli: requires mu > 0 and lambda + mu > 0");
    ElasticModuli m;
    m.mu = mu;
    m.lambda = lambda;
    m.bulk_k = lambda + Scalar(2) / Scalar(3) * mu;
    m.young_y = mu * (Scalar(3) * lambda + Scalar(2) * mu) / (lambda + mu);
    m.poisson_nu = lambda / (Scalar(2) * (lambda + mu));
    return m;
  }

  static ElasticModuli from_young_poisson(Scalar y, Scalar nu) {
    if (!(y > 0) || !(nu > Scalar(-1)) || !(nu < Scalar(0.5)))
      throw std::invalid_argument("ElasticModuli: requires Y > 0 and -1 < nu < 1/2");
    const Scalar mu = y / (Scalar(2) * (Scalar(1) + nu));
    const Scalar lambda = y * nu / ((Scalar(1) + nu) * (Scalar(1) - Scalar(2) * nu));
    return from_lame(mu, lambda);
  }
};

// f = (mu/2) Tr(E_el^2) + (lambda/2) (Tr E_el)^2 on the (1,1) elastic strain.
template <typename Scalar>
Scalar strain_energy(const StrainSet<Scalar>& e, const ElasticModuli<Scalar>& mod) {
  const Scalar tr = e.elastic.trace();
  const Scalar tr2 = (e.elastic * e.elastic).trace();
  return mod.mu / Scalar(2) * tr2 + mod.lambda / Scalar(2) * tr * tr;
}

// Rod variables: f = (K/2) eps_v^2 + (3 mu / 2) eps_d^2.
template <typename Scalar>
Scalar strain_energy_rod(Scalar eps_v, Scalar eps_d, const ElasticModuli<Scalar>& mod) {
  return mod.bulk_k / Scalar(2) * eps_v * eps_v +
         Scalar(3) * mod.mu / Scalar(2) * eps_d * eps_d;
}

}  // namespace aging

#endif
