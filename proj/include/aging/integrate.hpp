#ifndef AGING_INTEGRATE_HPP
#define AGING_INTEGRATE_HPP

// Explicit Dormand-Prince 5(4) integration with FSAL, PI step control, a
// fourth-order dense interpolant per accepted step, and terminal events
// located by bisection on the dense output.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace aging {

enum class TerminationReason {
  Horizon,           // reached the requested end time
  StoppingCurve,     // trajectory met the admissibility boundary
  RateDeactivation,  // driving rate dropped below threshold
  DuctileFailure,    // strain exceeded the failure cap
  NotInitiated,      // threshold test failed before any evolution
  BoundaryContact    // step size underflow at a non-smooth boundary
};

inline const char* termination_name(TerminationReason r) {
  switch (r) {
    case TerminationReason::Horizon: return "horizon";
    case TerminationReason::StoppingCurve: return "stopping-curve";
    case TerminationReason::RateDeactivation: return "rate-deactivation";
    case TerminationReason::DuctileFailure: return "ductile-failure";
    case TerminationReason::NotInitiated: return "not-initiated";
    case TerminationReason::BoundaryContact: return "boundary-contact";
  }
  return "unknown";
}

struct IntegratorOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 20000000;
};

template <typename State>
struct EventSpec {
  std::function<double(double, const State&)> value;  // fires when value <= 0
  TerminationReason reason;
};

// Quartic interpolant over one accepted step, exact at both endpoints.
template <typename State>
struct DenseStep {
  double t, h;
  State r1, r2, r3, r4, r5;

  State eval(double time) const {
    const double theta = (time - t) / h;
    return r1 + theta * (r2 + (1.0 - theta) * (r3 + theta * (r4 + (1.0 - theta) * r5)));
  }
};

template <typename State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<DenseStep<State>> dense;
  TerminationReason reason = TerminationReason::Horizon;
  long steps_accepted = 0;
  long steps_rejected = 0;

  double final_time() const { return times.back(); }
  const State& final_state() const { return states.back(); }

  // Dense evaluation anywhere inside the integrated span.
  State state_at(double time) const {
    if (dense.empty() || time <= times.front()) return states.front();
    if (time >= times.back()) return states.back();
    std::size_t lo = 0, hi = dense.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (dense[mid].t <= time) lo = mid;
      else hi = mid - 1;
    }
    return dense[lo].eval(time);
  }
};

template <typename State, typename Rhs>
Trajectory<State> integrate_dopri5(const Rhs& rhs, double t0, const State& y0, double t1,
                                   const IntegratorOptions& opts = {},
                                   const std::vector<EventSpec<State>>& events = {}) {
  if (!(t1 >= t0)) throw std::invalid_argument("integrate_dopri5: horizon precedes start");

  // Dormand-Prince RK5(4)7M tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                   d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                   d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

  Trajectory<State> out;
  out.times.push_back(t0);
  out.states.push_back(y0);

  std::vector<double> event_prev(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    event_prev[i] = events[i].value(t0, y0);
    if (event_prev[i] <= 0.0) {  // already past the boundary: fire immediately
      out.reason = events[i].reason;
      return out;
    }
  }
  if (t1 == t0) return out;

  double t = t0;
  State y = y0;
  State k1 = rhs(t, y);

  // Initial step size: match the local scale of y and f.
  auto scaled_norm = [&](const State& v, const State& ref) {
    double sum = 0.0;
    for (int i = 0; i < v.size(); ++i) {
      const double sc = opts.abs_tol + opts.rel_tol * std::abs(ref[i]);
      sum += (v[i] / sc) * (v[i] / sc);
    }
    return std::sqrt(sum / v.size());
  };
  double h;
  {
    const double d0 = scaled_norm(y, y), dd1 = scaled_norm(k1, y);
    double h0 = (d0 < 1e-5 || dd1 < 1e-5) ? 1e-6 : 0.01 * d0 / dd1;
    h0 = std::min(h0, t1 - t0);
    const State y1 = y + h0 * k1;
    const State f1 = rhs(t + h0, y1);
    const double d2 = scaled_norm(State(f1 - k1), y) / h0;
    double h1 = std::max(dd1, d2) <= 1e-15
                    ? std::max(1e-6, h0 * 1e-3)
                    : std::pow(0.01 / std::max(dd1, d2), 0.2);
    h = std::min({100.0 * h0, h1, t1 - t0, opts.max_step});
  }

  double facold = 1e-4;
  constexpr double safety = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;

  for (long step = 0; step < opts.max_steps; ++step) {
    if (t >= t1) break;
    h = std::min(h, t1 - t);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      out.reason = TerminationReason::BoundaryContact;
      return out;
    }

    const State k2 = rhs(t + c2 * h, State(y + h * (a21 * k1)));
    const State k3 = rhs(t + c3 * h, State(y + h * (a31 * k1 + a32 * k2)));
    const State k4 = rhs(t + c4 * h, State(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
    const State k5 = rhs(t + c5 * h, State(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
    const State k6 =
        rhs(t + h, State(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
    const State ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const State k7 = rhs(t + h, ynew);

    const State errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double err = 0.0;
    for (int i = 0; i < y.size(); ++i) {
      const double sc =
          opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (errv[i] / sc) * (errv[i] / sc);
    }
    err = std::sqrt(err / y.size());
    if (!std::isfinite(err)) throw std::runtime_error("integrate_dopri5: non-finite step");

    if (err <= 1.0) {
      // Accept; assemble the dense interpolant before advancing.
      DenseStep<State> ds;
      ds.t = t;
      ds.h = h;
      ds.r1 = y;
      ds.r2 = ynew - y;
      ds.r3 = h * k1 - ds.r2;
      ds.r4 = ds.r2 - h * k7 - ds.r3;
      ds.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      out.dense.push_back(ds);

      const double tnew = t + h;
      bool fired = false;
      for (std::size_t i = 0; i < events.size() && !fired; ++i) {
        const double vnew = events[i].value(tnew, ynew);
        if (event_prev[i] > 0.0 && vnew <= 0.0) {
          // Bisect the crossing on the dense output to 1e-10 in time (or the
          // double-precision floor when the times are large).
          double lo = t, hi = tnew;
          const double ttol = std::max(
              1e-10, 8.0 * std::numeric_limits<double>::epsilon() * std::abs(tnew));
          while (hi - lo > ttol) {
            const double mid = 0.5 * (lo + hi);
            if (events[i].value(mid, ds.eval(mid)) > 0.0) lo = mid;
            else hi = mid;
          }
          const State yev = ds.eval(hi);
          out.times.push_back(hi);
          out.states.push_back(yev);
          out.reason = events[i].reason;
          out.steps_accepted = step + 1;
          fired = true;
        }
        event_prev[i] = vnew;
      }
      if (fired) return out;

      t = tnew;
      y = ynew;
      k1 = k7;  // FSAL
      out.times.push_back(t);
      out.states.push_back(y);
      ++out.steps_accepted;

      const double fac11 = std::pow(std::max(err, 1e-16), expo1);
      double fac = fac11 / std::pow(facold, beta);
      fac = std::max(0.1, std::min(10.0, safety / fac));
      h = std::min(h * fac, opts.max_step);
      facold = std::max(err, 1e-4);
    } else {
      ++out.steps_rejected;
      const double fac11 = std::pow(err, expo1);
      h *= std::max(0.1, safety / fac11);
    }
  }
  if (t < t1) throw std::runtime_error("integrate_dopri5: step budget exhausted");
  out.reason = TerminationReason::Horizon;
  return out;
}

}  // namespace aging

#endif
