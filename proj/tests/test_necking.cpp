#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "aging/necking.hpp"

using namespace aging;
using State = Vec2<double>;

namespace {

// Hessian entry d a / d lambda at a rest point, one Richardson sweep over
// central differences of the acceleration.
double fd_restoring(const NeckingDoubleWell<double>& well,
                    const DissipativePotential<double>& chi, double lam, double h) {
  const auto accel = [&](double l) { return necking_rhs(well, chi, State(l, 0.0))[1]; };
  const auto diff = [&](double step) {
    return (accel(lam + step) - accel(lam - step)) / (2.0 * step);
  };
  return (4.0 * diff(h / 2) - diff(h)) / 3.0;
}

}  // namespace

TEST_CASE("necking: rate-potential admissibility") {
  const NeckingDoubleWell<double> well{0.5, 1.0, 1.0, 2.0};
  const DissipativePotential<double> dorn = DornPotential<double>{1.0, 2.0, 1.0};
  CHECK_THROWS_AS(necking_rhs(well, dorn, State(1.2, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(classify_equilibria(well, dorn), std::invalid_argument);
  CHECK_THROWS_AS(kink_profile(well, dorn), std::invalid_argument);

  const DissipativePotential<double> flat = QuadraticPotential<double>{0.0};
  CHECK_THROWS_AS(classify_equilibria(well, flat), std::invalid_argument);
  const DissipativePotential<double> inverted = QuadraticPotential<double>{-1.0};
  CHECK_THROWS_AS(kink_profile(well, inverted), std::invalid_argument);

  const DissipativePotential<double> ok = QuadraticPotential<double>{1.0};
  CHECK_THROWS_AS(kink_profile(well, ok, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kink_profile(well, ok, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(necking_rhs(well, ok, State(-1.0, 0.0)), std::domain_error);

  CHECK_THROWS_AS(validate(NeckingDoubleWell<double>{0.5, 1.0, 2.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(NeckingDoubleWell<double>{0.5, -1.0, 1.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("necking: frozen acceleration and reversibility") {
  const NeckingDoubleWell<double> well{0.5, 1.0, 1.0, 2.0};
  const DissipativePotential<double> chi = QuadraticPotential<double>{1.0};  // chi'' = 2

  // lam_tt = v^2/lam + lam^2 Fbar' / 8 for the unit quadratic potential.
  const double lam = 1.2, v = 0.3;
  const double expected = v * v / lam + lam * lam * well.reduced_d(lam) / 8.0;
  CHECK(necking_rhs(well, chi, State(lam, v))[1] ==
        doctest::Approx(expected).epsilon(1e-15));
  CHECK(necking_rhs(well, chi, State(lam, v))[0] == v);

  // Invariance under (tau, v) -> (-tau, -v).
  const State fwd = necking_rhs(well, chi, State(lam, v));
  const State rev = necking_rhs(well, chi, State(lam, -v));
  CHECK(rev[1] == doctest::Approx(fwd[1]).epsilon(1e-15));
  CHECK(rev[0] == -fwd[0]);
}

TEST_CASE("necking: equilibrium classification against finite differences") {
  const NeckingDoubleWell<double> well{0.5, 1.0, 1.0, 2.0};
  const DissipativePotential<double> chi = QuadraticPotential<double>{1.0};
  const auto eqs = classify_equilibria(well, chi);
  REQUIRE(eqs.size() == 3);

  CHECK(eqs[0].stretch == 1.0);
  CHECK(eqs[1].stretch == 1.5);
  CHECK(eqs[2].stretch == 2.0);
  CHECK(eqs[0].type == EquilibriumType::Saddle);
  CHECK(eqs[1].type == EquilibriumType::Center);
  CHECK(eqs[2].type == EquilibriumType::Saddle);

  // Closed forms: +-sqrt(lam^2 Fbar'' / (4 chi''(0))).
  CHECK(eqs[0].eigenvalue.real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eqs[2].eigenvalue.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eqs[1].eigenvalue.real() == 0.0);
  CHECK(eqs[1].eigenvalue.imag() ==
        doctest::Approx(std::sqrt(0.28125)).epsilon(1e-14));

  for (const auto& eq : eqs) {
    // Rest point: zero acceleration.
    CHECK(std::abs(necking_rhs(well, chi, State(eq.stretch, 0.0))[1]) <= 1e-14);
    // The linearization [[0,1],[w,0]] has eigenvalues +-sqrt(w); compare the
    // analytic eigenvalue against the finite-difference restoring coefficient.
    const double w_fd = fd_restoring(well, chi, eq.stretch, 1e-4);
    const std::complex<double> mu = eq.eigenvalue;
    CHECK(std::abs(mu * mu - w_fd) <= 1e-10);
  }
}

TEST_CASE("necking: kink profile shoots between the wells") {
  const NeckingDoubleWell<double> well{0.5, 1.0, 1.0, 2.0};
  const DissipativePotential<double> chi = QuadraticPotential<double>{1.0};
  const auto kink = kink_profile(well, chi);

  SUBCASE("matching defect and endpoints") {
    CHECK(kink.matching_defect <= 1e-8);
    CHECK(std::abs(kink.stretch.front() - well.lambda0) <= 1e-6);
    CHECK(std::abs(kink.stretch.back() - well.lambda1) <= 1e-6);
  }

  SUBCASE("monotone stretch with the barrier crossing at tau = 0") {
    for (std::size_t i = 1; i < kink.stretch.size(); ++i)
      CHECK(kink.stretch[i] > kink.stretch[i - 1]);
    bool bracketed = false;
    for (std::size_t i = 1; i < kink.tau.size(); ++i)
      if (kink.tau[i - 1] <= 0.0 && kink.tau[i] >= 0.0) {
        bracketed = true;
        CHECK(kink.stretch[i - 1] <= 1.5 + 1e-9);
        CHECK(kink.stretch[i] >= 1.5 - 1e-9);
      }
    CHECK(bracketed);
  }

  SUBCASE("orbit follows the exact first integral") {
    for (std::size_t i = 0; i < kink.stretch.size(); ++i) {
      const double lam = kink.stretch[i];
      if (lam < well.lambda0 + 1e-6 || lam > well.lambda1 - 1e-6) continue;
      CHECK(std::abs(kink.rate[i] - kink_orbit_rate(well, chi, lam)) <= 1e-9);
    }
  }
}

TEST_CASE("necking: asymmetric well and stiffer rate potential") {
  const NeckingDoubleWell<double> well{1.2, 0.7, 0.8, 2.6};
  const DissipativePotential<double> chi = QuadraticPotential<double>{2.0};
  const auto eqs = classify_equilibria(well, chi);
  CHECK(eqs[1].stretch == doctest::Approx(1.7).epsilon(1e-15));
  for (const auto& eq : eqs) {
    const double w_fd = fd_restoring(well, chi, eq.stretch, 1e-4);
    CHECK(std::abs(eq.eigenvalue * eq.eigenvalue - w_fd) <= 1e-9);
  }

  const auto kink = kink_profile(well, chi);
  CHECK(kink.matching_defect <= 1e-8);
  CHECK(std::abs(kink.stretch.front() - 0.8) <= 1e-6);
  CHECK(std::abs(kink.stretch.back() - 2.6) <= 1e-6);
  for (std::size_t i = 0; i < kink.stretch.size(); ++i) {
    const double lam = kink.stretch[i];
    if (lam < 0.8 + 1e-6 || lam > 2.6 - 1e-6) continue;
    CHECK(std::abs(kink.rate[i] - kink_orbit_rate(well, chi, lam)) <= 1e-8);
  }
}
