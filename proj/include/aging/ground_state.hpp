#ifndef AGING_GROUND_STATE_HPP
#define AGING_GROUND_STATE_HPP

// Ground-state (cohesive) energy forms F. The rod-facing forms evaluate on
// (S, strain_var); the 1D forms on a scalar strain; the invariant-based form
// lives in elasticity.hpp and evaluates on a 3x3 inelastic strain.

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include "aging/types.hpp"

namespace aging {

// F(S, xi) = c1 + c2 S + p xi / S + k xi^2, c1 < 0 < c2, p < 0 < k.
template <typename Scalar>
struct UAPolynomial {
  Scalar c1, c2, p, k;

  Scalar value(Scalar s, Scalar xi) const { return c1 + c2 * s + p * xi / s + k * xi * xi; }
  Scalar d_lapse(Scalar s, Scalar xi) const { return c2 - p * xi / (s * s); }
};

// F(S, eta) = (q1 + q2 S) + eta (b0 / S + b1 + a1 eta), q1, q2, b0, a1 < 0.
template <typename Scalar>
struct SRPolynomial {
  Scalar q1, q2, b0, b1, a1;

  Scalar value(Scalar s, Scalar eta) const {
    return q1 + q2 * s + eta * (b0 / s + b1 + a1 * eta);
  }
  Scalar d_lapse(Scalar s, Scalar eta) const { return q2 - eta * b0 / (s * s); }
};

// Double well F(lam) = (lam - lam0)^2 (a + b (lam - lam1)^2). Under the drawing
// load f/A0 = a the effective potential is Fbar = b (lam - lam0)^2 (lam - lam1)^2.
template <typename Scalar>
struct NeckingDoubleWell {
  Scalar a, b;
  Scalar lambda0 = Scalar(1);
  Scalar lambda1;

  Scalar value(Scalar lam) const {
    const Scalar u = lam - lambda0, v = lam - lambda1;
    return u * u * (a + b * v * v);
  }
  Scalar reduced(Scalar lam) const {
    const Scalar u = lam - lambda0, v = lam - lambda1;
    return b * u * u * v * v;
  }
  Scalar reduced_d(Scalar lam) const {
    const Scalar u = lam - lambda0, v = lam - lambda1;
    return Scalar(2) * b * u * v * (u + v);
  }
  Scalar reduced_dd(Scalar lam) const {
    const Scalar u = lam - lambda0, v = lam - lambda1;
    return Scalar(2) * b * ((u + v) * (u + v) + Scalar(2) * u * v);
  }
};

// F(E) = F0 + (c4/2) E^2 (E + 1/Q)^2 + c2 E^2, stored so the uniform
// Y = F''/2 convention reproduces the stated well moduli
// Y0 = c2 + (c4/2) Q^{-2} and Y1 - Y0 = 3 c4 (1 + Q^2).
template <typename Scalar>
struct TwoPhase1D {
  Scalar f0, c2, c4, q;

  Scalar value(Scalar e) const {
    const Scalar w = e + Scalar(1) / q;
    return f0 + c4 / Scalar(2) * e * e * w * w + c2 * e * e;
  }
  Scalar second_derivative(Scalar e) const {
    return Scalar(6) * c4 * e * e + Scalar(6) * (c4 / q) * e + c4 / (q * q) + Scalar(2) * c2;
  }
  Scalar youngs(Scalar e) const { return second_derivative(e) / Scalar(2); }
};

// F(E) = F0 + c E^2, so Y = F''/2 = c.
template <typename Scalar>
struct Classical1D {
  Scalar f0, c;

  Scalar value(Scalar e) const { return f0 + c * e * e; }
  Scalar second_derivative(Scalar) const { return Scalar(2) * c; }
  Scalar youngs(Scalar) const { return c; }
};

template <typename Scalar>
using GroundStateEnergy = std::variant<UAPolynomial<Scalar>, SRPolynomial<Scalar>,
                                       NeckingDoubleWell<Scalar>, TwoPhase1D<Scalar>,
                                       Classical1D<Scalar>>;

template <typename Scalar>
void validate(const UAPolynomial<Scalar>& f) {
  if (!(f.c1 < 0 && f.c2 > 0 && f.p < 0 && f.k > 0))
    throw std::invalid_argument("UAPolynomial: requires c1 < 0 < c2 and p < 0 < k");
}

template <typename Scalar>
void validate(const SRPolynomial<Scalar>& f) {
  if (!(f.q1 < 0 && f.q2 < 0 && f.b0 < 0 && f.a1 < 0))
    throw std::invalid_argument("SRPolynomial: requires q1, q2, b0, a1 < 0");
}

template <typename Scalar>
void validate(const NeckingDoubleWell<Scalar>& f) {
  if (!(f.lambda1 > f.lambda0 && f.lambda0 > 0))
    throw std::invalid_argument("NeckingDoubleWell: requires lambda1 > lambda0 > 0");
  if (!(f.a > 0 && f.b > 0))
    throw std::invalid_argument("NeckingDoubleWell: requires a, b > 0");
}

template <typename Scalar>
void validate(const TwoPhase1D<Scalar>& f) {
  if (!(f.c4 > 0 && f.q > 0))
    throw std::invalid_argument("TwoPhase1D: requires c4 > 0 and Q > 0");
}

template <typename Scalar>
void validate(const Classical1D<Scalar>& f) {
  if (!(f.c > 0)) throw std::invalid_argument("Classical1D: requires c > 0");
}

template <typename Scalar>
void validate(const GroundStateEnergy<Scalar>& f) {
  std::visit([](const auto& form) { validate(form); }, f);
}

// Rod-facing evaluation: F(S, q) with q = xi (UA) or eta (SR); other forms are
// not functions of the lapse.
template <typename Scalar>
Scalar ground_value(const GroundStateEnergy<Scalar>& f, Scalar s, Scalar q) {
  return std::visit(
      [&](const auto& form) -> Scalar {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, UAPolynomial<Scalar>> ||
                      std::is_same_v<T, SRPolynomial<Scalar>>)
          return form.value(s, q);
        else if constexpr (std::is_same_v<T, NeckingDoubleWell<Scalar>>)
          return form.value(q);
        else
          return form.value(q);
      },
      f);
}

template <typename Scalar>
Scalar ground_d_lapse(const GroundStateEnergy<Scalar>& f, Scalar s, Scalar q) {
  return std::visit(
      [&](const auto& form) -> Scalar {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, UAPolynomial<Scalar>> ||
                      std::is_same_v<T, SRPolynomial<Scalar>>)
          return form.d_lapse(s, q);
        else
          return Scalar(0);
      },
      f);
}

}  // namespace aging

#endif
