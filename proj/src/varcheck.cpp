#include "aging/varcheck.hpp"

#include <cmath>

namespace aging {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Random band-limited scalar field on the 2-torus: base plus harmonics up to
// (1, 2) in (t, x), bounded total amplitude.
Field<double> random_scalar_field(const VariationGrid& g, std::mt19937_64& rng, double base,
                                  double amp) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  struct Harmonic {
    int kt, kx;
    double a, phi;
  };
  std::vector<Harmonic> modes;
  for (int kt = 0; kt <= 1; ++kt)
    for (int kx = 0; kx <= 2; ++kx) {
      if (kt == 0 && kx == 0) continue;
      modes.push_back({kt, kx, coeff(rng) * amp / 7.0, phase(rng)});
    }
  Field<double> out(g.size(), base);
  for (int it = 0; it < g.nt; ++it)
    for (int ix = 0; ix < g.nx; ++ix) {
      const double t = g.time_at(it), x = g.space_at(ix);
      double v = base;
      for (const auto& m : modes)
        v += m.a * std::cos(2.0 * kPi * (m.kt * t / g.period_t + m.kx * x / g.period_x) + m.phi);
      out[g.idx(it, ix)] = v;
    }
  return out;
}

double min_eigenvalue(const Field<Mat3d>& f) {
  double lo = std::numeric_limits<double>::max();
  for (const auto& m : f) {
    Eigen::SelfAdjointEigenSolver<Mat3d> es(m);
    lo = std::min(lo, es.eigenvalues().minCoeff());
  }
  return lo;
}

}  // namespace

VariationFields random_variation_fields(const VariationGrid& grid, std::mt19937_64& rng) {
  VariationFields f;
  f.lapse = random_scalar_field(grid, rng, 1.1, 0.2);
  f.rho0 = random_scalar_field(grid, rng, 1.0, 0.25);

  f.shift.assign(grid.size(), Vec3d::Zero());
  for (int a = 0; a < 3; ++a) {
    const auto comp = random_scalar_field(grid, rng, 0.0, 0.15);
    for (int i = 0; i < grid.size(); ++i) f.shift[i](a) = comp[i];
  }

  // SPD metric: random well-conditioned base plus small symmetric harmonics.
  for (;;) {
    std::uniform_real_distribution<double> eig(0.9, 1.4);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat3d a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = gauss(rng);
    const Mat3d q = Eigen::HouseholderQR<Mat3d>(a).householderQ();
    const Mat3d base =
        q * Vec3d(eig(rng), eig(rng), eig(rng)).asDiagonal() * q.transpose();
    f.spatial.assign(grid.size(), base);
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c) {
        const auto comp = random_scalar_field(grid, rng, 0.0, 0.12);
        for (int i = 0; i < grid.size(); ++i) {
          f.spatial[i](r, c) += comp[i];
          if (c != r) f.spatial[i](c, r) += comp[i];
        }
      }
    if (min_eigenvalue(f.spatial) > 0.3) break;
  }

  // Orientation-preserving deformation gradient near the identity.
  for (;;) {
    f.defgrad.assign(grid.size(), Mat3d::Identity());
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        const auto comp = random_scalar_field(grid, rng, 0.0, 0.12);
        for (int i = 0; i < grid.size(); ++i) f.defgrad[i](r, c) += comp[i];
      }
    double lo = std::numeric_limits<double>::max();
    for (const auto& m : f.defgrad) lo = std::min(lo, m.determinant());
    if (lo > 0.4) break;
  }
  return f;
}

VariationParams random_variation_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.3, 1.0);
  std::uniform_real_distribution<double> sym(-0.5, 0.5);
  VariationParams p;
  p.poly = {sym(rng), unif(rng), sym(rng)};
  p.c1 = unif(rng);
  p.c2 = unif(rng);
  p.beta = unif(rng);
  p.mu = unif(rng);
  p.lambda = sym(rng) + 0.6;
  return p;
}

namespace {

// Symmetric basis matrices: diagonal E_AA, then E_AB + E_BA off the diagonal.
Mat3d sym_basis(int k) {
  static const std::array<std::pair<int, int>, 6> pairs = {
      {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
  Mat3d p = Mat3d::Zero();
  const auto [a, b] = pairs[static_cast<std::size_t>(k)];
  p(a, b) = 1.0;
  p(b, a) = 1.0;
  return p;
}

void apply_perturbation(VariationFields& f, int node, int component, double eps) {
  if (component == 0)
    f.lapse[static_cast<std::size_t>(node)] += eps;
  else if (component <= 3)
    f.shift[static_cast<std::size_t>(node)](component - 1) += eps;
  else
    f.spatial[static_cast<std::size_t>(node)] += eps * sym_basis(component - 4);
}

}  // namespace

VariationProbe probe_variation(VariationRow row, const VariationGrid& grid,
                               const VariationFields& fields, const VariationParams& params,
                               const VariationDensity& analytic, int node, int component) {
  const auto idx = static_cast<std::size_t>(node);
  double pred_density = 0.0;
  if (component == 0)
    pred_density = analytic.lapse[idx];
  else if (component <= 3)
    pred_density = analytic.shift[idx](component - 1);
  else {
    const Mat3d p = sym_basis(component - 4);
    pred_density = (analytic.spatial[idx].array() * p.array()).sum();
  }
  const double measure = fields.rho0[idx] * fields.lapse[idx] *
                         std::sqrt(fields.spatial[idx].determinant()) * grid.weight();

  const auto diff = [&](double h) {
    VariationFields up = fields, dn = fields;
    apply_perturbation(up, node, component, h);
    apply_perturbation(dn, node, component, -h);
    return (action_value(row, grid, up, params) - action_value(row, grid, dn, params)) /
           (2.0 * h);
  };
  const double h = 1e-4;
  const double fd = (4.0 * diff(h / 2.0) - diff(h)) / 3.0;

  VariationProbe out;
  out.fd = fd;
  out.predicted = measure * pred_density;
  out.error = std::abs(out.fd - out.predicted) / (1.0 + std::abs(out.predicted));
  return out;
}

std::vector<VarcheckRow> run_varcheck(std::uint64_t seed, int samples_per_row) {
  std::mt19937_64 rng(seed);
  const VariationGrid grid = make_grid(16, 32, 3.0, 2.0);
  const VariationFields fields = random_variation_fields(grid, rng);
  const VariationParams params = random_variation_params(rng);

  std::uniform_int_distribution<int> node_pick(0, grid.size() - 1);
  std::uniform_int_distribution<int> comp_pick(0, 9);

  std::vector<VarcheckRow> report;
  for (const VariationRow row : kAllVariationRows) {
    const VariationDensity analytic = analytic_variation(row, grid, fields, params);
    double worst = 0.0;
    for (int s = 0; s < samples_per_row; ++s) {
      const auto probe = probe_variation(row, grid, fields, params, analytic, node_pick(rng),
                                         comp_pick(rng));
      worst = std::max(worst, probe.error);
    }
    report.push_back({row_name(row), samples_per_row, worst});
  }
  return report;
}

}  // namespace aging
