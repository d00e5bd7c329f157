#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "aging/curvature.hpp"
#include "aging/dissipation.hpp"
#include "aging/elasticity.hpp"
#include "aging/ground_state.hpp"
#include "aging/lagrangian.hpp"
#include "aging/moduli.hpp"
#include "aging/strain.hpp"
#include "aging/stress.hpp"
#include "test_util.hpp"

using namespace aging;
using aging_test::random_mat;
using aging_test::random_spd;
using aging_test::random_sym;
using aging_test::random_vec;

using Mat3d = Mat3<double>;
using Vec3d = Vec3<double>;

TEST_CASE("moduli: lame conversions and validation") {
  const auto m = ElasticModuli<double>::from_lame(1.0, 1.0);
  CHECK(m.bulk_k == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(m.young_y == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(m.poisson_nu == doctest::Approx(0.25).epsilon(1e-15));

  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> unif(0.1, 10.0);
  for (int s = 0; s < 200; ++s) {
    const double mu = unif(rng);
    const double lambda = unif(rng) - 0.5 * mu;  // allows mildly negative lambda
    const auto a = ElasticModuli<double>::from_lame(mu, lambda);
    const auto b = ElasticModuli<double>::from_young_poisson(a.young_y, a.poisson_nu);
    CHECK(b.mu == doctest::Approx(mu).epsilon(1e-12));
    CHECK(b.lambda == doctest::Approx(lambda).epsilon(1e-12));
  }

  CHECK_THROWS_AS(ElasticModuli<double>::from_lame(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ElasticModuli<double>::from_lame(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ElasticModuli<double>::from_young_poisson(-1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(ElasticModuli<double>::from_young_poisson(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("strain energy: pinned values") {
  const auto mod = ElasticModuli<double>::from_lame(1.0, 1.0);

  StrainSet<double> zero;
  zero.elastic = Mat3d::Zero();
  zero.inelastic = Mat3d::Zero();
  zero.total = Mat3d::Zero();
  CHECK(strain_energy(zero, mod) == 0.0);

  StrainSet<double> iso = zero;
  const double eps = 0.1;
  iso.elastic = eps * Mat3d::Identity();
  CHECK(strain_energy(iso, mod) == doctest::Approx(6.0 * eps * eps).epsilon(1e-14));

  CHECK(strain_energy_rod(0.0, 0.01, ElasticModuli<double>::from_lame(1.0, 2.0)) ==
        doctest::Approx(1.5e-4).epsilon(1e-14));
}

TEST_CASE("dissipation: dorn identities and continuation") {
  const DornPotential<double> dorn{0.7, 2.0, 1.5};
  validate(dorn);

  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> unif(1e-6, 50.0);
  for (int s = 0; s < 200; ++s) {
    const double x = unif(rng);
    const double gap = x * dorn.derivative(x) - dorn.value(x);
    CHECK(gap == doctest::Approx(dorn.legendre_gap(x)).epsilon(1e-11));
    CHECK(dorn.legendre_gap(x) == doctest::Approx(std::log1p(x / dorn.d) / dorn.beta).epsilon(1e-14));
  }

  CHECK(dorn.value(0.0) == 0.0);
  CHECK(dorn.value(-1.0) == 0.0);
  CHECK(dorn.legendre_gap(-1.0) == 0.0);
  CHECK_THROWS_AS(dorn.derivative(0.0), std::domain_error);
  CHECK_THROWS_AS(validate(DornPotential<double>{0.0, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(DornPotential<double>{0.0, 1.0, 0.0}), std::invalid_argument);

  const DissipativePotential<double> quad = QuadraticPotential<double>{-1.0};
  const DissipativePotential<double> asdorn = dorn;
  CHECK(chi_second_at_zero(quad).value() == doctest::Approx(-2.0));
  CHECK(!chi_second_at_zero(asdorn).has_value());

  // psi^{-1} inverts y = e^{D x} - 1 on the active branch and clamps below it.
  for (int s = 0; s < 100; ++s) {
    const double y = unif(rng);
    const double x = psi_inverse(dorn.d, y);
    CHECK(std::expm1(dorn.d * x) == doctest::Approx(y).epsilon(1e-12));
  }
  CHECK(psi_inverse(dorn.d, 0.0) == 0.0);
  CHECK(psi_inverse(dorn.d, -3.0) == 0.0);
  CHECK(psi_inverse(asdorn, 1.0) == doctest::Approx(std::log(2.0) / dorn.d).epsilon(1e-14));
  CHECK_THROWS_AS(psi_inverse(quad, 1.0), std::invalid_argument);
}

TEST_CASE("dissipation: rate selectors on rod curvature") {
  const double s = 2.0, xi_t = 0.3, eta_t = -0.2;
  const auto k = rod_extrinsic_curvature(s, xi_t, eta_t);
  CHECK(rate_argument(k, RateSelector::Volumetric) == doctest::Approx(xi_t / s).epsilon(1e-14));
  CHECK(rate_argument(k, RateSelector::Deviatoric) ==
        doctest::Approx(std::abs(eta_t) / s).epsilon(1e-13));

  const DissipativePotential<double> quad = QuadraticPotential<double>{0.7};
  const double x = xi_t / s;
  CHECK(chi_on_curvature(quad, k, RateSelector::Volumetric) ==
        doctest::Approx(0.7 * x * x).epsilon(1e-13));
  CHECK(chi_contract_curvature(quad, k, RateSelector::Volumetric) ==
        doctest::Approx(2.0 * 0.7 * x * x).epsilon(1e-13));
  const auto still = rod_extrinsic_curvature(s, 0.0, 0.0);
  CHECK(chi_contract_curvature(quad, still, RateSelector::Volumetric) == 0.0);
}

namespace {

// f as a function of the deformation gradient at frozen g, g0.
double energy_of_gradient(const AdmMetric<double>& m, DeformationJet<double> jet,
                          const Mat3d& g0, const ElasticModuli<double>& mod,
                          const Mat3d& gradient) {
  jet.gradient = gradient;
  return strain_energy(strain_linear(m, jet, g0), mod);
}

}  // namespace

TEST_CASE("stress: zero state and rejection") {
  const AdmMetric<double> m;
  DeformationJet<double> jet;
  const auto e = strain_linear(m, jet, Mat3d(Mat3d::Identity()));
  const auto mod = ElasticModuli<double>::from_lame(1.0, 1.0);
  const auto st = stress_tensors(jet, e, mod);
  CHECK(st.first_pk.norm() == 0.0);
  CHECK(st.second_pk.norm() == 0.0);
  CHECK(st.cauchy.norm() == 0.0);
  CHECK(st.eshelby.norm() == 0.0);
  CHECK(st.strain_energy_density == 0.0);

  auto logset = e;
  logset.convention = StrainConvention::Logarithmic;
  CHECK_THROWS_AS(stress_tensors(jet, logset, mod), std::invalid_argument);

  DeformationJet<double> flipped;
  flipped.gradient = Mat3d::Identity();
  flipped.gradient(0, 0) = -1.0;
  CHECK_THROWS_AS(stress_tensors(flipped, e, mod), std::invalid_argument);
}

TEST_CASE("stress: analytic first Piola-Kirchhoff matches finite differences") {
  std::mt19937_64 rng(73);
  int accepted = 0;
  while (accepted < 60) {
    DeformationJet<double> jet;
    jet.gradient = Mat3d::Identity() + random_mat(rng, 0.4);
    if (jet.gradient.determinant() < 0.3) continue;
    ++accepted;
    jet.velocity = random_vec(rng, 0.5);
    jet.ambient = accepted % 2 == 0 ? Mat3d(Mat3d::Identity()) : random_spd(rng, 0.5, 2.0);

    AdmMetric<double> m;
    m.spatial = random_spd(rng, 0.5, 2.0);
    const Mat3d g0 = random_spd(rng, 0.5, 2.0);
    const auto mod = ElasticModuli<double>::from_lame(1.3, 0.8);
    const auto e = strain_linear(m, jet, g0);
    const auto st = stress_tensors(jet, e, mod);

    const double scale = 1.0 + st.first_pk.norm();
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        const double h = 1e-6;
        Mat3d up = jet.gradient, dn = jet.gradient;
        up(j, i) += h;
        dn(j, i) -= h;
        const double fd = (energy_of_gradient(m, jet, g0, mod, up) -
                           energy_of_gradient(m, jet, g0, mod, dn)) /
                          (2.0 * h);
        CHECK(std::abs(st.first_pk(i, j) - fd) / scale < 2e-7);
      }
  }
}

TEST_CASE("stress: symmetries and eshelby block structure") {
  std::mt19937_64 rng(74);
  int accepted = 0;
  while (accepted < 100) {
    DeformationJet<double> jet;
    jet.gradient = Mat3d::Identity() + random_mat(rng, 0.4);
    if (jet.gradient.determinant() < 0.3) continue;
    ++accepted;
    jet.velocity = random_vec(rng, 0.5);
    jet.ambient = random_spd(rng, 0.5, 2.0);

    AdmMetric<double> m;
    m.spatial = random_spd(rng, 0.5, 2.0);
    const Mat3d g0 = random_spd(rng, 0.5, 2.0);
    const auto mod = ElasticModuli<double>::from_lame(1.1, 0.6);
    const auto e = strain_linear(m, jet, g0);
    const auto st = stress_tensors(jet, e, mod);
    const double f = st.strain_energy_density;

    // Cauchy stress is symmetric by construction.
    CHECK((st.cauchy - st.cauchy.transpose()).norm() <= 1e-13 * (1.0 + st.cauchy.norm()));

    // Spatial eshelby block closes the trace identity b + S = f * 1.
    const Mat3d spatial = st.eshelby.block<3, 3>(1, 1);
    CHECK((spatial + st.second_pk - f * Mat3d::Identity()).norm() <=
          1e-14 * (1.0 + st.second_pk.norm()));

    // Time row and column.
    CHECK(st.eshelby(0, 0) == f);
    CHECK(st.eshelby(0, 1) == 0.0);
    CHECK(st.eshelby(0, 2) == 0.0);
    CHECK(st.eshelby(0, 3) == 0.0);
    const Vec3d pv = st.first_pk * jet.velocity;
    CHECK((st.eshelby.block<3, 1>(1, 0) + pv).norm() <= 1e-14 * (1.0 + pv.norm()));

    // C-symmetry of the material stress: C (f 1 - S) is symmetric.
    const Mat3d c3 = cauchy_green(jet).spatial;
    const Mat3d cb = c3 * (f * Mat3d::Identity() - st.second_pk);
    CHECK((cb - cb.transpose()).norm() <= 1e-10 * (1.0 + cb.norm()));

    // Second Piola-Kirchhoff contracts the first against the gradient.
    CHECK((st.second_pk - st.first_pk * jet.gradient).norm() <=
          1e-13 * (1.0 + st.second_pk.norm()));
  }
}

TEST_CASE("lagrangian: rod metric round trip") {
  std::mt19937_64 rng(75);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  for (int s = 0; s < 100; ++s) {
    const double lapse = 1.0 + 0.5 * std::abs(unif(rng));
    const double xi = unif(rng), eta = unif(rng);
    const double radius = 1.0 + 0.3 * std::abs(unif(rng));
    const auto m = rod_metric(lapse, xi, eta, radius);
    const auto rs = rod_state(m, radius);
    CHECK(rs.xi == doctest::Approx(xi).epsilon(1e-13));
    CHECK(rs.eta == doctest::Approx(eta).epsilon(1e-13));
    CHECK(rs.stretch == doctest::Approx(std::exp(xi - eta / 2.0)).epsilon(1e-13));
  }
}

TEST_CASE("lagrangian: pinned evaluations") {
  const GroundStateEnergy<double> ua = UAPolynomial<double>{-2.0, 1.0, -1.0, 1.0};
  const DissipativePotential<double> quad = QuadraticPotential<double>{-1.0};

  // Homogeneous swelling at unit lapse: L = c1 + c2 + alpha * (xi_t)^2.
  const auto m1 = rod_metric(1.0, 0.0, 0.0);
  const auto k1 = rod_extrinsic_curvature(1.0, 0.1, 0.0);
  CHECK(metric_lagrangian(ua, quad, 0.0, 0.0, m1, k1, 0.0, 0.0) ==
        doctest::Approx(-2.0 + 1.0 - 0.01).epsilon(1e-13));

  // Double well evaluated at its root contributes nothing.
  const GroundStateEnergy<double> well = NeckingDoubleWell<double>{1.0, 1.0, 1.0, 2.0};
  const auto still = rod_extrinsic_curvature(1.0, 0.0, 0.0);
  CHECK(metric_lagrangian(well, quad, 2.0, 0.5, m1, still, 0.3, 0.7) ==
        doctest::Approx(2.0 * 0.09 + 0.5 * 0.7).epsilon(1e-13));

  // Shift-divergence and curvature couplings are additive and exact.
  const double base = metric_lagrangian(ua, quad, 1.7, 0.4, m1, k1, 0.0, 0.0);
  CHECK(metric_lagrangian(ua, quad, 1.7, 0.4, m1, k1, 0.25, -0.6) - base ==
        doctest::Approx(1.7 * 0.0625 + 0.4 * (-0.6)).epsilon(1e-13));

  // Deviatoric selector: the SR form ignores the volumetric rate.
  const GroundStateEnergy<double> sr = SRPolynomial<double>{-0.2, -0.5, -0.5, -10.0, -45.0};
  const auto m2 = rod_metric(2.0, 0.05, 0.1);
  const auto kvol = rod_extrinsic_curvature(2.0, 0.4, 0.0);
  const auto kdev = rod_extrinsic_curvature(2.0, 0.4, 0.2);
  const SRPolynomial<double> srf = std::get<SRPolynomial<double>>(sr);
  CHECK(metric_lagrangian(sr, quad, 0.0, 0.0, m2, kvol, 0.0, 0.0) ==
        doctest::Approx(srf.value(2.0, 0.1)).epsilon(1e-12));
  CHECK(metric_lagrangian(sr, quad, 0.0, 0.0, m2, kdev, 0.0, 0.0) ==
        doctest::Approx(srf.value(2.0, 0.1) - 0.01).epsilon(1e-12));

  // 1D forms carry no rod interpretation.
  const GroundStateEnergy<double> twop = TwoPhase1D<double>{0.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(metric_lagrangian(twop, quad, 0.0, 0.0, m1, k1, 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("constraint residual: rest state and free energy offset") {
  const GroundStateEnergy<double> ua = UAPolynomial<double>{-2.0, 1.0, -1.0, 1.0};
  const DissipativePotential<double> quad = QuadraticPotential<double>{-1.0};
  const auto m = rod_metric(1.0, 0.0, 0.0);  // F + S dF/dS = c1 + 2 c2 = 0
  const auto k0 = rod_extrinsic_curvature(1.0, 0.0, 0.0);
  CHECK(constraint_residual(ua, quad, m, k0, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(constraint_residual(ua, quad, m, k0, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("constraint residual: vanishes along the closed swelling flow") {
  const UAPolynomial<double> f{-4.8, 1.0, -300.0, 1.0};
  const GroundStateEnergy<double> ua = f;
  const DissipativePotential<double> quad = QuadraticPotential<double>{-1.0};
  std::mt19937_64 rng(76);
  std::uniform_real_distribution<double> us(1.0, 2.3);
  std::uniform_real_distribution<double> uxi(-0.1, 0.1);
  for (int s = 0; s < 200; ++s) {
    const double lapse = us(rng);
    const double xi = uxi(rng);
    const double arg = -(f.c1 + 2.0 * f.c2 * lapse + f.k * xi * xi);
    REQUIRE(arg > 0.0);
    const double xi_t = -lapse * std::sqrt(arg);
    const auto m = rod_metric(lapse, xi, 0.0);
    const auto k = rod_extrinsic_curvature(lapse, xi_t, 0.0);
    CHECK(std::abs(constraint_residual(ua, quad, m, k, 0.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("elasticity: 1d youngs moduli") {
  const Classical1D<double> cl{0.3, 2.5};
  CHECK(cl.youngs(0.0) == 2.5);
  CHECK(cl.youngs(0.7) == 2.5);
  CHECK_THROWS_AS(validate(Classical1D<double>{0.0, -1.0}), std::invalid_argument);

  const TwoPhase1D<double> tp{0.1, 0.8, 1.7, 2.5};
  validate(tp);
  CHECK(tp.youngs(0.0) == doctest::Approx(tp.c2 + 0.5 * tp.c4 / (tp.q * tp.q)).epsilon(1e-14));
  const double gap = tp.youngs(tp.q) - tp.youngs(0.0);
  CHECK(gap == doctest::Approx(3.0 * tp.c4 * (1.0 + tp.q * tp.q)).epsilon(1e-13));
  // Stored energy is consistent with the modulus convention Y = F''/2.
  for (const double e0 : {0.0, tp.q, -0.3, 0.6}) {
    const double h = 1e-4;
    const double fd2 = (tp.value(e0 + h) - 2.0 * tp.value(e0) + tp.value(e0 - h)) / (h * h);
    CHECK(tp.youngs(e0) == doctest::Approx(fd2 / 2.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(validate(TwoPhase1D<double>{0.0, 1.0, -1.0, 1.0}), std::invalid_argument);
}

namespace {

InvariantBased<double> random_invariant_energy(std::mt19937_64& rng, ThirdInvariant third) {
  std::uniform_int_distribution<int> ex(0, 2);
  std::uniform_int_distribution<int> ex3(0, 1);
  std::uniform_real_distribution<double> co(-1.0, 1.0);
  InvariantBased<double> f;
  f.third = third;
  for (int t = 0; t < 5; ++t) f.terms.push_back({ex(rng), ex(rng), ex3(rng), co(rng)});
  return f;
}

}  // namespace

TEST_CASE("elasticity: adjugate identity") {
  std::mt19937_64 rng(77);
  for (int s = 0; s < 100; ++s) {
    const Mat3d a = random_mat(rng, 1.0);
    const Mat3d prod = adjugate(a) * a;
    CHECK((prod - a.determinant() * Mat3d::Identity()).norm() <= 1e-12 * (1.0 + prod.norm()));
  }
}

TEST_CASE("elasticity: exact tangent matches finite differences") {
  std::mt19937_64 rng(78);
  for (const auto third : {ThirdInvariant::MomentCubic, ThirdInvariant::Determinant}) {
    for (int s = 0; s < 40; ++s) {
      const auto f = random_invariant_energy(rng, third);
      const Mat3d e_in = random_sym(rng, 0.3);
      const auto gm = moduli_from_ground_state(f, e_in);

      for (int dir = 0; dir < 4; ++dir) {
        const Mat3d p = random_sym(rng, 1.0);

        // First derivative: d/dt F(E + t P) = Tr(C P).
        const double h1 = 1e-5;
        const double fd1 =
            (f.value_at(e_in + h1 * p) - f.value_at(e_in - h1 * p)) / (2.0 * h1);
        const double an1 = (gm.stress.transpose() * p).trace();
        CHECK(std::abs(an1 - fd1) <= 1e-8 * (1.0 + std::abs(an1)));

        // Second derivative: d2/dt2 F(E + t P) = e : P : P, with one Richardson
        // sweep to cancel the h^2 truncation term.
        auto second_diff = [&](double h) {
          return (f.value_at(e_in + h * p) - 2.0 * f.value_at(e_in) +
                  f.value_at(e_in - h * p)) /
                 (h * h);
        };
        const double h2 = 2e-3;
        const double fd2 = (4.0 * second_diff(h2 / 2.0) - second_diff(h2)) / 3.0;
        const double an2 = gm.tangent.quad(p);
        CHECK(std::abs(an2 - fd2) <= 1e-6 * (1.0 + std::abs(an2)));
      }

      // Pair-swap symmetry is exact by construction.
      double worst = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d)
              worst = std::max(worst,
                               std::abs(gm.tangent.at(a, b, c, d) - gm.tangent.at(c, d, a, b)));
      CHECK(worst <= 1e-14);
    }
  }
}

TEST_CASE("elasticity: quadratic isotropic energy reproduces its moduli") {
  // F = mu I2 + (lambda/2) I1^2 at E = 0: tangent is exactly isotropic with
  // mu = F_2 and lambda = F_{11}.
  const double mu = 1.3, lambda = 0.7;
  InvariantBased<double> f;
  f.terms = {{0, 1, 0, mu}, {2, 0, 0, lambda / 2.0}};
  const auto gm = moduli_from_ground_state(f, Mat3d(Mat3d::Zero()));
  CHECK(gm.stress.norm() == 0.0);
  const auto fit = isotropic_projection(gm.tangent);
  CHECK(fit.mu == doctest::Approx(mu).epsilon(1e-14));
  CHECK(fit.lambda == doctest::Approx(lambda).epsilon(1e-14));
  CHECK(fit.residual <= 1e-14);
}

TEST_CASE("elasticity: isotropy survives a conformal inelastic strain") {
  // At E = h * 1 every gradient matrix is proportional to 1, so the tangent
  // stays isotropic; the fitted shear picks up the cubic correction 3 F3 h.
  const double mu = 1.1, lambda = 0.5, gamma = 0.4, h = 0.1;
  InvariantBased<double> f;
  f.third = ThirdInvariant::MomentCubic;
  f.terms = {{0, 1, 0, mu}, {2, 0, 0, lambda / 2.0}, {0, 0, 1, gamma}, {3, 0, 0, 0.2}};
  const auto gm = moduli_from_ground_state(f, Mat3d(h * Mat3d::Identity()));
  const auto fit = isotropic_projection(gm.tangent);
  CHECK(fit.residual <= 1e-10);
  CHECK(fit.mu == doctest::Approx(mu + 3.0 * gamma * h).epsilon(1e-12));

  // A generic inelastic strain breaks the pattern.
  InvariantBased<double> g;
  g.third = ThirdInvariant::MomentCubic;
  g.terms = {{0, 0, 1, 1.0}};
  const Mat3d skewed = Vec3d(0.1, 0.2, 0.3).asDiagonal();
  const auto fit2 = isotropic_projection(moduli_from_ground_state(g, skewed).tangent);
  CHECK(fit2.residual > 1e-4);
}
