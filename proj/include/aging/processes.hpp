#ifndef AGING_PROCESSES_HPP
#define AGING_PROCESSES_HPP

// Closed homogeneous-rod aging systems: unconstrained aging, stress
// relaxation, and creep. Each system evolves (S, q) where S is the lapse and
// q the active strain variable (xi volumetric, eta deviatoric), carries a
// first integral J, and terminates on its own admissibility boundary.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "aging/curvature.hpp"
#include "aging/dissipation.hpp"
#include "aging/ground_state.hpp"
#include "aging/integrate.hpp"
#include "aging/lagrangian.hpp"
#include "aging/types.hpp"

namespace aging {

struct ProcessState {
  double time;
  double lapse;   // S >= 1
  double strain;  // xi (unconstrained aging) or eta (relaxation, creep)
};

inline void validate(const ProcessState& st) {
  if (!(st.lapse >= 1.0))
    throw std::invalid_argument("ProcessState: lapse must be at least 1");
  if (!std::isfinite(st.time) || !std::isfinite(st.strain))
    throw std::invalid_argument("ProcessState: non-finite entry");
}

// Volumetric aging against F(S, xi) with chi = alpha x^2, alpha < 0. The
// closure picks the root with xi decreasing (densification) and S growing.
struct UnconstrainedAging {
  UAPolynomial<double> form;
  double alpha = -1.0;
};

// Deviatoric relaxation of a frozen elastic strain eta_star through the Dorn
// rate response with scale D.
struct StressRelaxation {
  SRPolynomial<double> form;
  double young;       // uniaxial modulus Y
  double eta_star;    // imposed elastic strain, eta(0) relaxes toward it
  double rate_scale;  // Dorn D
};

// Dead-load creep at constant force; compliance defaults to 1/(2 Y A0^2) so
// the stored term equals sigma^2 / (2Y) at eta = 0.
struct Creep {
  SRPolynomial<double> form;
  double young;       // Y
  double area0;       // reference cross-section A0
  double force;       // applied dead load
  double rate_scale;  // Dorn D
  std::optional<double> compliance = std::nullopt;  // Lambda
  double eta_cap = 5.0;                             // ductile failure strain

  double lambda() const {
    return compliance ? *compliance : 1.0 / (2.0 * young * area0 * area0);
  }
};

using ProcessSpec = std::variant<UnconstrainedAging, StressRelaxation, Creep>;

inline void validate(const UnconstrainedAging& p) {
  validate(p.form);
  if (!(p.alpha < 0))
    throw std::invalid_argument("UnconstrainedAging: requires alpha < 0");
}

inline void validate(const StressRelaxation& p) {
  validate(p.form);
  if (!(p.young > 0)) throw std::invalid_argument("StressRelaxation: requires Y > 0");
  if (!(p.eta_star > 0))
    throw std::invalid_argument("StressRelaxation: requires eta_star > 0");
  if (!(p.rate_scale > 0))
    throw std::invalid_argument("StressRelaxation: requires D > 0");
}

inline void validate(const Creep& p) {
  validate(p.form);
  if (!(p.young > 0 && p.area0 > 0))
    throw std::invalid_argument("Creep: requires Y > 0 and A0 > 0");
  if (!(p.force >= 0)) throw std::invalid_argument("Creep: requires force >= 0");
  if (!(p.rate_scale > 0)) throw std::invalid_argument("Creep: requires D > 0");
  if (!(p.lambda() >= 0)) throw std::invalid_argument("Creep: requires Lambda >= 0");
  if (!(p.eta_cap > 0)) throw std::invalid_argument("Creep: requires eta_cap > 0");
}

inline void validate(const ProcessSpec& spec) {
  std::visit([](const auto& p) { validate(p); }, spec);
}

// --- driving scalars ---------------------------------------------------

// Argument of the square root in the unconstrained closure,
// (c1 + 2 c2 S + k xi^2) / alpha; admissible while nonnegative.
inline double ua_rate_argument(const UnconstrainedAging& p, double s, double xi) {
  return (p.form.c1 + 2.0 * p.form.c2 * s + p.form.k * xi * xi) / p.alpha;
}

// The stopping curve S*(xi): admissibility is S <= S*(xi).
inline double ua_stopping_lapse(const UnconstrainedAging& p, double xi) {
  return -(p.form.c1 + p.form.k * xi * xi) / (2.0 * p.form.c2);
}

// Relaxation driving y = 2 q2 S + q1 + b1 eta + a1 eta^2 + (Y/2)(eta*-eta)^2;
// the rate deactivates as y -> 0.
inline double sr_driving(const StressRelaxation& p, double s, double eta) {
  const double de = p.eta_star - eta;
  return 2.0 * p.form.q2 * s + p.form.q1 + p.form.b1 * eta + p.form.a1 * eta * eta +
         0.5 * p.young * de * de;
}

// Creep driving: the loaded analogue, with the dead-load work and stored
// compliance terms in place of the frozen elastic well.
inline double creep_driving(const Creep& p, double s, double eta) {
  const double sig0 = p.force / p.area0;
  const double ex = std::exp(eta);
  return sig0 * (ex - 1.0) + p.lambda() * p.force * p.force * ex * ex + p.form.q1 +
         2.0 * p.form.q2 * s + p.form.b1 * eta + p.form.a1 * eta * eta;
}

// Initiation margin: creep proceeds only if the driving is positive at the
// initial state.
inline double creep_threshold_margin(const Creep& p, const ProcessState& st) {
  return creep_driving(p, st.lapse, st.strain);
}

// --- rates ---------------------------------------------------------------

struct ProcessRates {
  double lapse_rate;
  double strain_rate;
};

inline ProcessRates process_rates(const UnconstrainedAging& p, const ProcessState& st) {
  const double root = std::sqrt(std::max(0.0, ua_rate_argument(p, st.lapse, st.strain)));
  return {-p.form.p / (2.0 * p.form.c2) * root, -st.lapse * root};
}

inline ProcessRates process_rates(const StressRelaxation& p, const ProcessState& st) {
  const double x = psi_inverse(p.rate_scale, sr_driving(p, st.lapse, st.strain));
  return {p.form.b0 / (2.0 * p.form.q2) * x, st.lapse * x};
}

inline ProcessRates process_rates(const Creep& p, const ProcessState& st) {
  const double x = psi_inverse(p.rate_scale, creep_driving(p, st.lapse, st.strain));
  return {p.form.b0 / (2.0 * p.form.q2) * x, st.lapse * x};
}

inline ProcessRates process_rates(const ProcessSpec& spec, const ProcessState& st) {
  return std::visit([&](const auto& p) { return process_rates(p, st); }, spec);
}

// --- conserved and output quantities --------------------------------------

// First integral of the closed flow: J = c2 S^2 - p xi (unconstrained) and
// J = b0 eta - q2 S^2 (relaxation, creep).
inline double first_integral(const ProcessSpec& spec, const ProcessState& st) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UnconstrainedAging>)
          return p.form.c2 * st.lapse * st.lapse - p.form.p * st.strain;
        else
          return p.form.b0 * st.strain - p.form.q2 * st.lapse * st.lapse;
      },
      spec);
}

// Legendre energy of the reduced system, E = S^2 dF/dS. Equal to +J for the
// unconstrained form and -J for the relaxation/creep form; conserved along
// every closed flow here.
inline double legendre_energy(const ProcessSpec& spec, const ProcessState& st) {
  return std::visit(
      [&](const auto& p) {
        return st.lapse * st.lapse * p.form.d_lapse(st.lapse, st.strain);
      },
      spec);
}

// Uniaxial stress where the process defines one: relaxation sigma = Y (eta*-eta),
// creep sigma = (force/A0) e^eta. The unconstrained flow is stress-free.
inline std::optional<double> stress_output(const ProcessSpec& spec, const ProcessState& st) {
  return std::visit(
      [&](const auto& p) -> std::optional<double> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StressRelaxation>)
          return p.young * (p.eta_star - st.strain);
        else if constexpr (std::is_same_v<T, Creep>)
          return p.force / p.area0 * std::exp(st.strain);
        else
          return std::nullopt;
      },
      spec);
}

// Stored elastic free energy density entering the driving scalar.
inline double elastic_free_energy(const ProcessSpec& spec, const ProcessState& st) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StressRelaxation>) {
          const double de = p.eta_star - st.strain;
          return 0.5 * p.young * de * de;
        } else if constexpr (std::is_same_v<T, Creep>) {
          const double ex = std::exp(st.strain);
          return p.lambda() * p.force * p.force * ex * ex;
        } else {
          return 0.0;
        }
      },
      spec);
}

// The rod metric and aging-rate tensor realized by a process state, for
// cross-checks against the field-level machinery.
struct RodKinematics {
  AdmMetric<double> metric;
  ExtrinsicCurvature<double> curvature;
};

inline RodKinematics rod_kinematics(const ProcessSpec& spec, const ProcessState& st) {
  const ProcessRates r = process_rates(spec, st);
  const bool volumetric = std::holds_alternative<UnconstrainedAging>(spec);
  RodKinematics out;
  if (volumetric) {
    out.metric = rod_metric(st.lapse, st.strain, 0.0);
    out.curvature = rod_extrinsic_curvature(st.lapse, r.strain_rate, 0.0);
  } else {
    out.metric = rod_metric(st.lapse, 0.0, st.strain);
    out.curvature = rod_extrinsic_curvature(st.lapse, 0.0, r.strain_rate);
  }
  return out;
}

// --- time evolution --------------------------------------------------------

struct ProcessRunOptions {
  double horizon = 1.0;
  IntegratorOptions integrator{};
  double stopping_floor = 1e-12;  // unconstrained terminal threshold on the root argument
  double rate_floor = 1e-8;       // relaxation deactivation threshold on the driving
};

struct ProcessResult {
  Trajectory<Vec2<double>> trajectory;  // state vector (S, q)
  TerminationReason reason = TerminationReason::Horizon;

  ProcessState state_at(double t) const {
    const Vec2<double> y = trajectory.state_at(t);
    return {t, y[0], y[1]};
  }
  ProcessState final_state() const {
    return {trajectory.final_time(), trajectory.final_state()[0],
            trajectory.final_state()[1]};
  }
  std::vector<ProcessState> states() const {
    std::vector<ProcessState> out;
    out.reserve(trajectory.times.size());
    for (std::size_t i = 0; i < trajectory.times.size(); ++i)
      out.push_back(
          {trajectory.times[i], trajectory.states[i][0], trajectory.states[i][1]});
    return out;
  }
};

inline ProcessResult run_process(const ProcessSpec& spec, const ProcessState& initial,
                                 const ProcessRunOptions& opts = {}) {
  validate(spec);
  validate(initial);
  using State = Vec2<double>;

  auto rhs = [&spec](double t, const State& y) {
    const ProcessRates r = process_rates(spec, ProcessState{t, y[0], y[1]});
    return State(r.lapse_rate, r.strain_rate);
  };

  std::vector<EventSpec<State>> events;
  bool initiated = true;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UnconstrainedAging>) {
          initiated = ua_rate_argument(p, initial.lapse, initial.strain) > opts.stopping_floor;
          events.push_back({[&p, floor = opts.stopping_floor](double, const State& y) {
                              return ua_rate_argument(p, y[0], y[1]) - floor;
                            },
                            TerminationReason::StoppingCurve});
        } else if constexpr (std::is_same_v<T, StressRelaxation>) {
          initiated = sr_driving(p, initial.lapse, initial.strain) > opts.rate_floor;
          events.push_back({[&p, floor = opts.rate_floor](double, const State& y) {
                              return sr_driving(p, y[0], y[1]) - floor;
                            },
                            TerminationReason::RateDeactivation});
        } else {
          initiated = creep_threshold_margin(p, initial) > 0.0;
          events.push_back({[&p](double, const State& y) { return p.eta_cap - y[1]; },
                            TerminationReason::DuctileFailure});
          events.push_back({[&p, floor = opts.stopping_floor](double, const State& y) {
                              return creep_driving(p, y[0], y[1]) - floor;
                            },
                            TerminationReason::RateDeactivation});
        }
      },
      spec);

  ProcessResult out;
  if (!initiated) {
    out.trajectory.times.push_back(initial.time);
    out.trajectory.states.push_back(State(initial.lapse, initial.strain));
    out.trajectory.reason = TerminationReason::NotInitiated;
    out.reason = TerminationReason::NotInitiated;
    return out;
  }

  out.trajectory = integrate_dopri5(rhs, initial.time, State(initial.lapse, initial.strain),
                                    initial.time + opts.horizon, opts.integrator, events);
  out.reason = out.trajectory.reason;
  return out;
}

// Central-difference balance check of the conserved Legendre energy over a
// sampled trajectory; returns the interior residuals dE/dt.
inline std::vector<double> energy_balance_residual(const ProcessSpec& spec,
                                                   const std::vector<ProcessState>& series) {
  if (series.size() < 3)
    throw std::invalid_argument("energy_balance_residual: needs at least 3 samples");
  std::vector<double> out;
  out.reserve(series.size() - 2);
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    const double dt = series[i + 1].time - series[i - 1].time;
    if (!(dt > 0))
      throw std::invalid_argument("energy_balance_residual: times must increase");
    out.push_back((legendre_energy(spec, series[i + 1]) - legendre_energy(spec, series[i - 1])) /
                  dt);
  }
  return out;
}

}  // namespace aging

#endif
