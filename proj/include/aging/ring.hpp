#ifndef AGING_RING_HPP
#define AGING_RING_HPP

// Chemically degraded annulus: an inner band loses the mass fraction j,
// shrinks isotropically, and is pulled back into contact elastically. The
// stress state is the classic shrink-fit profile; the final configuration is
// realized as a composite radial map whose pulled-back metric is flat, while
// the intermediate degraded metric carries a curvature defect at the
// interface.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "aging/types.hpp"

namespace aging {

struct RingSpec {
  double young;         // Y
  double poisson;       // nu, biaxial modulus Y / (1 - nu)
  double r_inner;       // R_i
  double r_interface;   // R_d, outer edge of the degraded band
  double r_outer;       // R_o
  double density_loss;  // j, fraction of mass removed in the inner band
  bool exact_shrinkage = true;
};

inline void validate(const RingSpec& s) {
  if (!(s.young > 0)) throw std::invalid_argument("RingSpec: requires Y > 0");
  if (!(s.poisson > -1.0 && s.poisson < 1.0))
    throw std::invalid_argument("RingSpec: requires -1 < nu < 1");
  if (!(s.r_inner > 0 && s.r_inner < s.r_interface && s.r_interface < s.r_outer))
    throw std::invalid_argument("RingSpec: requires 0 < R_i < R_d < R_o");
  if (!(std::abs(s.density_loss) < 0.05))
    throw std::invalid_argument("RingSpec: density loss must stay below 5%");
}

// Linear shrinkage from the lost mass fraction: the degraded band keeps its
// density by contracting, (1+eps)^{3/2} = 1 - j on the two-dimensional slice.
// Exact form eps = (1-j)^{2/3} - 1; first order eps = -(2/3) j.
inline double shrinkage_from_density(double j, bool exact = true) {
  if (!(std::abs(j) < 0.05))
    throw std::invalid_argument("shrinkage_from_density: density loss must stay below 5%");
  return exact ? std::cbrt((1.0 - j) * (1.0 - j)) - 1.0 : -2.0 / 3.0 * j;
}

// Width of the annular gap opened at the interface before elastic closure.
inline double interface_gap(const RingSpec& s) {
  validate(s);
  return -shrinkage_from_density(s.density_loss, s.exact_shrinkage) * s.r_interface;
}

struct RingStressState {
  double epsilon;           // shrinkage strain of the degraded band
  double gap_width;         // w = -eps R_d
  double closure_strain;    // e = 1/(1+eps) - 1, biaxial stretch closing the gap
  double sigma_interface;   // s = Y/(1-nu) (2/3) j, radial tension at R_d
  double sigma_hoop_inner;  // uniform hoop tension in the degraded band
  double sigma_hoop_outer;  // uniform hoop compression in the intact band
  double continuity_residual;  // radial stress jump at the interface
  std::vector<std::string> warnings;

  double r_inner, r_interface, r_outer;

  // Piecewise-linear radial stress, zero on both free surfaces.
  double sigma_radial(double r) const {
    if (r <= r_inner || r >= r_outer) return 0.0;
    if (r <= r_interface)
      return sigma_interface * (r - r_inner) / (r_interface - r_inner);
    return sigma_interface * (r_outer - r) / (r_outer - r_interface);
  }
  double sigma_hoop(double r) const {
    return r <= r_interface ? sigma_hoop_inner : sigma_hoop_outer;
  }
};

inline RingStressState ring_stress_state(const RingSpec& s) {
  validate(s);
  RingStressState out;
  out.r_inner = s.r_inner;
  out.r_interface = s.r_interface;
  out.r_outer = s.r_outer;
  out.epsilon = shrinkage_from_density(s.density_loss, s.exact_shrinkage);
  out.gap_width = -out.epsilon * s.r_interface;
  out.closure_strain = 1.0 / (1.0 + out.epsilon) - 1.0;
  out.sigma_interface = s.young / (1.0 - s.poisson) * (2.0 / 3.0) * s.density_loss;
  out.sigma_hoop_inner = out.sigma_interface;
  const double t = s.r_outer - s.r_inner;
  const double t_d = s.r_interface - s.r_inner;
  out.sigma_hoop_outer = -out.sigma_interface * t_d / (t - t_d);

  // The two independent linear branches meet at the interface by force
  // balance; report the realized jump.
  const double inner_at_rd = out.sigma_interface * (s.r_interface - s.r_inner) / t_d;
  const double outer_at_rd =
      out.sigma_interface * (s.r_outer - s.r_interface) / (t - t_d);
  out.continuity_residual = inner_at_rd - outer_at_rd;

  if (t_d / s.r_interface > 0.2)
    out.warnings.push_back("degraded band is thick relative to its radius");
  if (t / (0.5 * (s.r_inner + s.r_outer)) > 0.2)
    out.warnings.push_back("annulus is thick relative to its mean radius");
  return out;
}

// Radial surface metric diag(g_rr(r), g_tt(r)) sampled on a uniform grid.
struct RadialMetric {
  std::vector<double> r, g_rr, g_tt;
};

// Intermediate degraded metric: isotropic (1+eps) contraction inside R_d,
// intact outside; discontinuous at the interface.
inline RadialMetric degraded_metric(const RingSpec& s, int n) {
  validate(s);
  if (n < 8) throw std::invalid_argument("degraded_metric: grid too coarse");
  const double eps = shrinkage_from_density(s.density_loss, s.exact_shrinkage);
  RadialMetric m;
  for (int i = 0; i < n; ++i) {
    const double r = s.r_inner + (s.r_outer - s.r_inner) * i / (n - 1);
    const bool degraded = r <= s.r_interface;
    m.r.push_back(r);
    m.g_rr.push_back(degraded ? 1.0 + eps : 1.0);
    m.g_tt.push_back(degraded ? (1.0 + eps) * (1.0 + eps) * r * r : r * r);
  }
  return m;
}

// Final configuration as the composite map T(r) = c(r) r: shrinkage followed
// by the elastic closure, c = (1+e)(1+eps) inside and 1 outside. The radial
// derivative is taken by central differences so the pulled-back metric
// diag(T'^2, T^2) is what a measurement on the sampled map would see.
inline RadialMetric composite_metric(const RingSpec& s, int n) {
  validate(s);
  if (n < 8) throw std::invalid_argument("composite_metric: grid too coarse");
  const double eps = shrinkage_from_density(s.density_loss, s.exact_shrinkage);
  const double closure = 1.0 / (1.0 + eps) - 1.0;
  const double c_in = (1.0 + closure) * (1.0 + eps);

  const double h = (s.r_outer - s.r_inner) / (n - 1);
  std::vector<double> r(n), map(n);
  for (int i = 0; i < n; ++i) {
    r[i] = s.r_inner + h * i;
    map[i] = (r[i] <= s.r_interface ? c_in : 1.0) * r[i];
  }
  RadialMetric m;
  for (int i = 1; i + 1 < n; ++i) {
    const double dmap = (map[i + 1] - map[i - 1]) / (2.0 * h);
    m.r.push_back(r[i]);
    m.g_rr.push_back(dmap * dmap);
    m.g_tt.push_back(map[i] * map[i]);
  }
  return m;
}

// Discrete Gauss curvature of diag(A(r), W(r)):
//   K = -(1 / (2 sqrt(A W))) d/dr [ W' / sqrt(A W) ],
// with both derivatives central; returned on the doubly-interior points.
struct CurvatureProfile {
  std::vector<double> r, k;
};

inline CurvatureProfile gauss_curvature(const RadialMetric& m) {
  const std::size_t n = m.r.size();
  if (n < 5) throw std::invalid_argument("gauss_curvature: grid too coarse");
  std::vector<double> flux(n, 0.0);  // W' / sqrt(A W)
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double wp = (m.g_tt[i + 1] - m.g_tt[i - 1]) / (m.r[i + 1] - m.r[i - 1]);
    flux[i] = wp / std::sqrt(m.g_rr[i] * m.g_tt[i]);
  }
  CurvatureProfile out;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double dflux = (flux[i + 1] - flux[i - 1]) / (m.r[i + 1] - m.r[i - 1]);
    out.r.push_back(m.r[i]);
    out.k.push_back(-dflux / (2.0 * std::sqrt(m.g_rr[i] * m.g_tt[i])));
  }
  return out;
}

}  // namespace aging

#endif
