#ifndef AGING_NECKING_HPP
#define AGING_NECKING_HPP

// Kink solutions of the drawn-rod stretch equation. With the double-well
// reduced potential Fbar and a rate potential chi of finite curvature c at
// rest, the stretch profile obeys
//   lam_tt = lam_t^2 / lam + lam^2 Fbar'(lam) / (4 c),
// whose equilibria are the two wells (saddles) and the barrier top (center),
// connected by a heteroclinic kink with the exact orbit
//   v(lam) = lam sqrt(Fbar(lam) / (2 c)).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "aging/dissipation.hpp"
#include "aging/ground_state.hpp"
#include "aging/integrate.hpp"
#include "aging/types.hpp"

namespace aging {

// Finite, positive curvature of chi at rest; the Dorn form has none and is
// rejected, as is a degenerate quadratic.
inline double necking_rate_curvature(const DissipativePotential<double>& chi) {
  const auto c = chi_second_at_zero(chi);
  if (!c)
    throw std::invalid_argument(
        "necking: rate potential has no finite curvature at rest");
  if (!(*c > 0))
    throw std::invalid_argument("necking: rate curvature at rest must be positive");
  return *c;
}

// Right-hand side of the first-order system y = (lam, v).
inline Vec2<double> necking_rhs(const NeckingDoubleWell<double>& well,
                                const DissipativePotential<double>& chi,
                                const Vec2<double>& y) {
  const double c = necking_rate_curvature(chi);
  const double lam = y[0], v = y[1];
  if (!(lam > 0)) throw std::domain_error("necking: stretch must stay positive");
  return {v, v * v / lam + lam * lam * well.reduced_d(lam) / (4.0 * c)};
}

enum class EquilibriumType { Saddle, Center };

struct Equilibrium {
  double stretch;
  EquilibriumType type;
  std::complex<double> eigenvalue;  // principal eigenvalue of the linearization
};

// The three rest points lam0 < (lam0+lam1)/2 < lam1 with their linearized
// eigenvalues +-sqrt(lam*^2 Fbar''(lam*) / (4 c)).
inline std::vector<Equilibrium> classify_equilibria(const NeckingDoubleWell<double>& well,
                                                    const DissipativePotential<double>& chi) {
  validate(well);
  const double c = necking_rate_curvature(chi);
  std::vector<Equilibrium> out;
  for (const double lam :
       {well.lambda0, 0.5 * (well.lambda0 + well.lambda1), well.lambda1}) {
    const double w = lam * lam * well.reduced_dd(lam) / (4.0 * c);
    Equilibrium eq;
    eq.stretch = lam;
    if (w >= 0) {
      eq.type = EquilibriumType::Saddle;
      eq.eigenvalue = std::sqrt(w);
    } else {
      eq.type = EquilibriumType::Center;
      eq.eigenvalue = std::complex<double>(0.0, std::sqrt(-w));
    }
    out.push_back(eq);
  }
  return out;
}

// Exact kink orbit in the (lam, v) plane.
inline double kink_orbit_rate(const NeckingDoubleWell<double>& well,
                              const DissipativePotential<double>& chi, double lam) {
  const double c = necking_rate_curvature(chi);
  return lam * std::sqrt(well.reduced(lam) / (2.0 * c));
}

struct KinkProfile {
  std::vector<double> tau;      // shifted so the barrier crossing sits at tau = 0
  std::vector<double> stretch;  // monotone, lambda0 + offset -> lambda1 - offset
  std::vector<double> rate;
  double matching_defect;  // forward/backward shooting mismatch at the barrier
};

// Bidirectional shooting: the forward orbit leaves the unstable manifold of
// lambda0 and runs to the barrier; the stable-manifold approach to lambda1 is
// produced as the forward orbit of the (tau, v) -> (-tau, -v) reversed state
// and flipped back. A single end-to-end orbit cannot work here: the shooting
// error grows like e^{mu tau} off the far saddle, so each half is integrated
// away from its own saddle only and the two are matched at the barrier.
inline KinkProfile kink_profile(const NeckingDoubleWell<double>& well,
                                const DissipativePotential<double>& chi,
                                double offset = 1e-8) {
  validate(well);
  if (!(offset > 0 && offset < 0.1 * (well.lambda1 - well.lambda0)))
    throw std::invalid_argument("necking: manifold offset out of range");

  const auto eqs = classify_equilibria(well, chi);
  const double mid = eqs[1].stretch;
  const double slope0 = eqs[0].eigenvalue.real();
  const double slope1 = eqs[2].eigenvalue.real();
  if (!(slope0 > 0 && slope1 > 0))
    throw std::invalid_argument("necking: wells must be saddle points");

  using State = Vec2<double>;
  const auto rhs = [&](double, const State& y) { return necking_rhs(well, chi, y); };
  IntegratorOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-14;

  // Generous horizon: the saddle departure takes ~ log(1/offset) / slope.
  const double span =
      4.0 * (std::log(1.0 / offset) + 2.0) * (1.0 / slope0 + 1.0 / slope1);

  const auto shoot = [&](double lam_start, double v_start) {
    std::vector<EventSpec<State>> at_barrier;
    const double sign = v_start > 0 ? 1.0 : -1.0;
    at_barrier.push_back({[mid, sign](double, const State& y) {
                            return sign * (mid - y[0]);
                          },
                          TerminationReason::StoppingCurve});
    auto traj = integrate_dopri5(rhs, 0.0, State(lam_start, v_start), span, opts, at_barrier);
    if (traj.reason != TerminationReason::StoppingCurve)
      throw std::runtime_error("necking: shooting orbit failed to reach the barrier");
    return traj;
  };

  const auto fwd = shoot(well.lambda0 + offset, slope0 * offset);
  const auto bwd = shoot(well.lambda1 - offset, -slope1 * offset);

  KinkProfile out;
  out.matching_defect = std::abs(fwd.final_state()[1] - (-bwd.final_state()[1]));

  const std::size_t nf = fwd.times.size(), nb = bwd.times.size();
  out.tau.reserve(nf + nb - 1);
  out.stretch.reserve(nf + nb - 1);
  out.rate.reserve(nf + nb - 1);
  const double t_mid_f = fwd.final_time(), t_mid_b = bwd.final_time();
  for (std::size_t i = 0; i < nf; ++i) {
    out.tau.push_back(fwd.times[i] - t_mid_f);
    out.stretch.push_back(fwd.states[i][0]);
    out.rate.push_back(fwd.states[i][1]);
  }
  // Second half: reverse the backward orbit, skipping its barrier endpoint.
  for (std::size_t i = nb - 1; i-- > 0;) {
    out.tau.push_back(t_mid_b - bwd.times[i]);
    out.stretch.push_back(bwd.states[i][0]);
    out.rate.push_back(-bwd.states[i][1]);
  }
  return out;
}

}  // namespace aging

#endif
