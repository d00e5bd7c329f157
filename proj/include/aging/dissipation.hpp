#ifndef AGING_DISSIPATION_HPP
#define AGING_DISSIPATION_HPP

// Dissipative potential chi of the aging-rate tensor K, evaluated through one
// of two scalar rate invariants, plus the Dorn rate response psi and its
// inverse used by the relaxation/creep systems.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <variant>

#include "aging/curvature.hpp"
#include "aging/types.hpp"

namespace aging {

// chi(x) = alpha x^2. alpha may be negative (the unconstrained-aging section
// takes alpha = -1).
template <typename Scalar>
struct QuadraticPotential {
  Scalar alpha;

  Scalar value(Scalar x) const { return alpha * x * x; }
  Scalar derivative(Scalar x) const { return Scalar(2) * alpha * x; }
  Scalar second(Scalar) const { return Scalar(2) * alpha; }
  // x chi'(x) - chi(x).
  Scalar legendre_gap(Scalar x) const { return alpha * x * x; }
};

// Dorn form, continued by 0 for non-positive rates:
//   chi(x) = c x + (x/(beta D)) ln(x/D) - (1/beta)(1 + x/D) ln(1 + x/D).
template <typename Scalar>
struct DornPotential {
  Scalar c, beta, d;

  Scalar value(Scalar x) const {
    using std::log;
    if (!(x > 0)) return Scalar(0);
    return c * x + x / (beta * d) * log(x / d) - (Scalar(1) + x / d) / beta * log(Scalar(1) + x / d);
  }
  // chi'(x) = c + (1/(beta D)) ln(x / (D + x)); diverges as x -> 0+.
  Scalar derivative(Scalar x) const {
    using std::log;
    if (!(x > 0)) throw std::domain_error("DornPotential: derivative needs a positive rate");
    return c + log(x / (d + x)) / (beta * d);
  }
  // x chi'(x) - chi(x) = (1/beta) ln(1 + x/D); the c term cancels.
  Scalar legendre_gap(Scalar x) const {
    using std::log1p;
    if (!(x > 0)) return Scalar(0);
    return log1p(x / d) / beta;
  }
};

template <typename Scalar>
using DissipativePotential = std::variant<QuadraticPotential<Scalar>, DornPotential<Scalar>>;

template <typename Scalar>
void validate(const QuadraticPotential<Scalar>&) {}  // any alpha is admissible

template <typename Scalar>
void validate(const DornPotential<Scalar>& p) {
  if (!(p.d > 0 && p.beta > 0))
    throw std::invalid_argument("DornPotential: requires D > 0 and beta > 0");
}

template <typename Scalar>
void validate(const DissipativePotential<Scalar>& pot) {
  std::visit([](const auto& p) { validate(p); }, pot);
}

template <typename Scalar>
Scalar chi_value(const DissipativePotential<Scalar>& pot, Scalar x) {
  return std::visit([&](const auto& p) { return p.value(x); }, pot);
}

template <typename Scalar>
Scalar chi_derivative(const DissipativePotential<Scalar>& pot, Scalar x) {
  return std::visit([&](const auto& p) { return p.derivative(x); }, pot);
}

template <typename Scalar>
Scalar chi_legendre_gap(const DissipativePotential<Scalar>& pot, Scalar x) {
  return std::visit([&](const auto& p) { return p.legendre_gap(x); }, pot);
}

// chi''(0), where finite: needed by the necking classification.
template <typename Scalar>
std::optional<Scalar> chi_second_at_zero(const DissipativePotential<Scalar>& pot) {
  if (const auto* q = std::get_if<QuadraticPotential<Scalar>>(&pot))
    return Scalar(2) * q->alpha;
  return std::nullopt;  // Dorn: chi'' blows up at 0
}

// Scalar rate argument extracted from K. Volumetric: Tr K / 6 (isotropic
// aging); Deviatoric: sqrt(Tr(dev K)^2 / 6) (shape-change-driven aging).
enum class RateSelector { Volumetric, Deviatoric };

template <typename Scalar>
Scalar rate_argument(const ExtrinsicCurvature<Scalar>& k, RateSelector sel) {
  using std::sqrt;
  if (sel == RateSelector::Volumetric) return k.trace() / Scalar(6);
  const Scalar dev2 = k.deviatoric_invariant();
  return sqrt(dev2 > 0 ? dev2 / Scalar(6) : Scalar(0));
}

template <typename Scalar>
Scalar chi_on_curvature(const DissipativePotential<Scalar>& pot,
                        const ExtrinsicCurvature<Scalar>& k, RateSelector sel) {
  return chi_value(pot, rate_argument(k, sel));
}

// The contraction (d chi / d K) : K. For both selectors it collapses to
// x chi'(x) at the selected invariant x.
template <typename Scalar>
Scalar chi_contract_curvature(const DissipativePotential<Scalar>& pot,
                              const ExtrinsicCurvature<Scalar>& k, RateSelector sel) {
  const Scalar x = rate_argument(k, sel);
  return x == Scalar(0) ? Scalar(0) : x * chi_derivative(pot, x);
}

// Rate response psi(x) = (e^{Dx} - 1)_+ and its inverse on the active branch,
// psi^{-1}(y) = ln(1 + y)/D for y > 0 and 0 otherwise.
template <typename Scalar>
Scalar psi_inverse(Scalar d, Scalar y) {
  using std::log1p;
  return y > 0 ? log1p(y) / d : Scalar(0);
}

template <typename Scalar>
Scalar psi_inverse(const DissipativePotential<Scalar>& pot, Scalar y) {
  const auto* dorn = std::get_if<DornPotential<Scalar>>(&pot);
  if (!dorn) throw std::invalid_argument("psi_inverse: rate response is Dorn-derived");
  return psi_inverse(dorn->d, y);
}

}  // namespace aging

#endif
