#ifndef AGING_ELASTICITY_HPP
#define AGING_ELASTICITY_HPP

// Ground-state elastic moduli: exact stress and tangent tensors of an
// invariant-based energy F(I1, I2, I3) evaluated at a finite inelastic strain.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "aging/types.hpp"

namespace aging {

// Third invariant convention: I3 = Tr(E^3) or I3 = det(E).
enum class ThirdInvariant { MomentCubic, Determinant };

template <typename Scalar>
Mat3<Scalar> adjugate(const Mat3<Scalar>& p) {
  // Cayley-Hamilton: adj(P) = P^2 - Tr(P) P + ((Tr P)^2 - Tr(P^2))/2 * 1.
  const Scalar tr = p.trace();
  const Scalar tr2 = (p * p).trace();
  return (p * p - tr * p + (tr * tr - tr2) / Scalar(2) * Mat3<Scalar>::Identity()).eval();
}

template <typename Scalar>
std::array<Scalar, 3> strain_invariants(const Mat3<Scalar>& e, ThirdInvariant third) {
  const Scalar i1 = e.trace();
  const Scalar i2 = (e * e).trace();
  const Scalar i3 =
      third == ThirdInvariant::MomentCubic ? Scalar((e * e * e).trace()) : e.determinant();
  return {i1, i2, i3};
}

// Polynomial energy F = sum coeff * I1^a I2^b I3^c.
template <typename Scalar>
struct InvariantBased {
  struct Term {
    int a, b, c;
    Scalar coeff;
  };
  std::vector<Term> terms;
  ThirdInvariant third = ThirdInvariant::MomentCubic;

  Scalar value(const std::array<Scalar, 3>& i) const { return partial(0, 0, 0, i); }

  // Mixed partial d^{da+db+dc} F / dI1^da dI2^db dI3^dc.
  Scalar partial(int da, int db, int dc, const std::array<Scalar, 3>& i) const {
    auto falling = [](int n, int k) {
      Scalar f(1);
      for (int j = 0; j < k; ++j) f *= Scalar(n - j);
      return f;
    };
    auto ipow = [](Scalar x, int n) {
      Scalar r(1);
      for (int j = 0; j < n; ++j) r *= x;
      return r;
    };
    Scalar sum(0);
    for (const Term& t : terms) {
      if (t.a < da || t.b < db || t.c < dc) continue;
      sum += t.coeff * falling(t.a, da) * falling(t.b, db) * falling(t.c, dc) *
             ipow(i[0], t.a - da) * ipow(i[1], t.b - db) * ipow(i[2], t.c - dc);
    }
    return sum;
  }

  Scalar value_at(const Mat3<Scalar>& e) const { return value(strain_invariants(e, third)); }
};

template <typename Scalar>
void validate(const InvariantBased<Scalar>& f) {
  for (const auto& t : f.terms)
    if (t.a < 0 || t.b < 0 || t.c < 0)
      throw std::invalid_argument("invariant-based energy: negative exponent");
}

// Fourth-order tangent, stored dense; e(A,B,C,D) pairs with P(A,B) P(C,D) and is
// symmetric under (A,B)<->(C,D) by construction.
template <typename Scalar>
struct ElasticityTensor {
  std::array<Scalar, 81> v{};

  Scalar& at(int a, int b, int c, int d) { return v[((a * 3 + b) * 3 + c) * 3 + d]; }
  const Scalar& at(int a, int b, int c, int d) const { return v[((a * 3 + b) * 3 + c) * 3 + d]; }

  Scalar quad(const Mat3<Scalar>& p) const {
    Scalar sum(0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) sum += at(a, b, c, d) * p(a, b) * p(c, d);
    return sum;
  }
};

template <typename Scalar>
struct GroundStateModuli {
  Mat3<Scalar> stress;        // C = dF/dE at the inelastic strain
  ElasticityTensor<Scalar> tangent;  // e = d^2 F/dE^2, exact
};

// Exact first and second derivatives of F(I1,I2,I3) in E. Gradient matrices of
// the invariants are M1 = 1, M2 = 2E, M3 = 3E^2 (moment) or adj(E) (det); the
// curvature of the invariants themselves adds delta/E patterns.
template <typename Scalar>
GroundStateModuli<Scalar> moduli_from_ground_state(const InvariantBased<Scalar>& f,
                                                   const Mat3<Scalar>& e_in) {
  validate(f);
  const auto inv = strain_invariants(e_in, f.third);
  const Scalar f1 = f.partial(1, 0, 0, inv);
  const Scalar f2 = f.partial(0, 1, 0, inv);
  const Scalar f3 = f.partial(0, 0, 1, inv);

  GroundStateModuli<Scalar> out;
  const Mat3<Scalar> id = Mat3<Scalar>::Identity();
  const Mat3<Scalar> e2 = e_in * e_in;
  std::array<Mat3<Scalar>, 3> grad = {id, Scalar(2) * e_in,
                                      f.third == ThirdInvariant::MomentCubic
                                          ? Mat3<Scalar>(Scalar(3) * e2)
                                          : adjugate(e_in)};
  out.stress = f1 * grad[0] + f2 * grad[1] + f3 * grad[2];

  ElasticityTensor<Scalar>& t = out.tangent;
  // Cross terms F_ij Tr(M_i P) Tr(M_j P) over all ordered pairs.
  std::array<std::array<int, 3>, 3> orders = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar fij = f.partial(orders[i][0] + orders[j][0], orders[i][1] + orders[j][1],
                                   orders[i][2] + orders[j][2], inv);
      if (fij == Scalar(0)) continue;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) t.at(a, b, c, d) += fij * grad[i](b, a) * grad[j](d, c);
    }
  // Invariant curvature: d^2 I2 = 2 Tr(P^2).
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) t.at(a, b, b, a) += Scalar(2) * f2;
  if (f.third == ThirdInvariant::MomentCubic) {
    // d^2 I3 = 6 Tr(E P^2), symmetrized over the pair swap.
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d)
            t.at(a, b, c, d) +=
                Scalar(3) * f3 * ((b == c ? e_in(d, a) : Scalar(0)) + (d == a ? e_in(b, c) : Scalar(0)));
  } else {
    // d^2 det = 2 Tr(adj(P) E) expanded in delta/E patterns.
    const Scalar tre = e_in.trace();
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            Scalar term(0);
            if (a == b && c == d) term += tre;
            if (a == d && b == c) term -= tre;
            if (a == b) term -= e_in(d, c);
            if (c == d) term -= e_in(b, a);
            if (b == c) term += e_in(d, a);
            if (d == a) term += e_in(b, c);
            t.at(a, b, c, d) += f3 * term;
          }
  }
  return out;
}

// Least-squares fit of the isotropic pattern 2 mu d(BC) d(DA) + lambda d(AB) d(CD);
// residual is the max deviation entrywise.
template <typename Scalar>
struct IsotropicFit {
  Scalar mu;
  Scalar lambda;
  Scalar residual;
};

template <typename Scalar>
IsotropicFit<Scalar> isotropic_projection(const ElasticityTensor<Scalar>& t) {
  Scalar s1(0), s2(0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      s1 += t.at(a, a, b, b);
      s2 += t.at(a, b, b, a);
    }
  IsotropicFit<Scalar> fit;
  fit.mu = (Scalar(3) * s2 - s1) / Scalar(48);
  fit.lambda = (Scalar(3) * s1 - s2) / Scalar(24);
  fit.residual = Scalar(0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const Scalar iso = Scalar(2) * fit.mu * Scalar(b == c && d == a) +
                             fit.lambda * Scalar(a == b && c == d);
          fit.residual = std::max(fit.residual, std::abs(t.at(a, b, c, d) - iso));
        }
  return fit;
}

}  // namespace aging

#endif
