#ifndef AGING_VARIATIONS_HPP
#define AGING_VARIATIONS_HPP

// First variations of the action A = integral of rho0 S sqrt(g) L over the
// (T, X^1) 2-torus, one row per admissible Lagrangian density L. Each row
// supplies the density L and the analytic variation fields (V_S, V_N, V_g)
// defined through
//   delta A = integral rho0 S sqrt(g) (V_S dS + V_N,I dN^I + V_g^{AB} dg_AB).
// Fields depend on time and one spatial coordinate; tensor algebra is full 3D.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "aging/spectral.hpp"
#include "aging/types.hpp"

namespace aging {

using Mat3d = Mat3<double>;
using Vec3d = Vec3<double>;

struct VariationGrid {
  int nt, nx;
  double period_t, period_x;
  Eigen::MatrixXd dt, dx;

  int size() const { return nt * nx; }
  int idx(int it, int ix) const { return it * nx + ix; }
  double weight() const { return (period_t / nt) * (period_x / nx); }
  double time_at(int it) const { return period_t * it / nt; }
  double space_at(int ix) const { return period_x * ix / nx; }
};

inline VariationGrid make_grid(int nt, int nx, double period_t, double period_x) {
  return {nt, nx, period_t, period_x, spectral_diff_matrix(nt, period_t),
          spectral_diff_matrix(nx, period_x)};
}

template <typename T>
using Field = std::vector<T>;

namespace detail {
template <typename T>
Field<T> zero_like(const Field<T>& f) {
  return Field<T>(f.size(), T(f.front() * 0.0));
}
}  // namespace detail

template <typename T>
Field<T> d_time(const VariationGrid& g, const Field<T>& f) {
  Field<T> out = detail::zero_like(f);
  for (int it = 0; it < g.nt; ++it)
    for (int jt = 0; jt < g.nt; ++jt) {
      const double c = g.dt(it, jt);
      if (c == 0.0) continue;
      for (int ix = 0; ix < g.nx; ++ix) out[g.idx(it, ix)] += c * f[g.idx(jt, ix)];
    }
  return out;
}

template <typename T>
Field<T> d_space(const VariationGrid& g, const Field<T>& f) {
  Field<T> out = detail::zero_like(f);
  for (int it = 0; it < g.nt; ++it)
    for (int ix = 0; ix < g.nx; ++ix)
      for (int jx = 0; jx < g.nx; ++jx) {
        const double c = g.dx(ix, jx);
        if (c != 0.0) out[g.idx(it, ix)] += c * f[g.idx(it, jx)];
      }
  return out;
}

struct VariationFields {
  Field<double> lapse;
  Field<double> rho0;
  Field<Vec3d> shift;
  Field<Mat3d> spatial;
  Field<Mat3d> defgrad;  // deformation gradient, elastic row only
};

enum class VariationRow {
  VolumeEnergy,      // L = f(det g)
  LapseEnergy,       // L = f(S)
  ShiftNorm,         // L = |N|^2_g
  RatePotential,     // L = chi(K), K the full transported metric rate
  SpatialCurvature,  // L = beta R(g)
  ShiftDivergence,   // L = div_g N
  ElasticEnergy      // L = f(E_el) at a frozen deformation
};

inline const char* row_name(VariationRow row) {
  switch (row) {
    case VariationRow::VolumeEnergy: return "volume-energy";
    case VariationRow::LapseEnergy: return "lapse-energy";
    case VariationRow::ShiftNorm: return "shift-norm";
    case VariationRow::RatePotential: return "rate-potential";
    case VariationRow::SpatialCurvature: return "spatial-curvature";
    case VariationRow::ShiftDivergence: return "shift-divergence";
    case VariationRow::ElasticEnergy: return "elastic-energy";
  }
  return "unknown";
}

constexpr std::array<VariationRow, 7> kAllVariationRows = {
    VariationRow::VolumeEnergy,    VariationRow::LapseEnergy,
    VariationRow::ShiftNorm,       VariationRow::RatePotential,
    VariationRow::SpatialCurvature, VariationRow::ShiftDivergence,
    VariationRow::ElasticEnergy};

struct VariationParams {
  std::array<double, 3> poly{0.0, 0.0, 0.0};  // f(x) = p0 + p1 x + p2 x^2
  double c1 = 0.0, c2 = 0.0;                  // chi(K) = c1 (Tr K)^2 + c2 Tr(K^2)
  double beta = 1.0;                          // curvature coupling
  double mu = 1.0, lambda = 1.0;              // elastic row moduli
};

struct VariationDensity {
  Field<double> lapse;
  Field<Vec3d> shift;
  Field<Mat3d> spatial;
};

namespace detail {

inline double poly_value(const std::array<double, 3>& p, double x) {
  return p[0] + x * (p[1] + x * p[2]);
}
inline double poly_derivative(const std::array<double, 3>& p, double x) {
  return p[1] + 2.0 * p[2] * x;
}

// Metric rate with the full transport of the shift,
//   K = S^{-1} g^{-1} (dg/dt - L_N g).
struct RateData {
  Field<Mat3d> rate;      // K per node
  Field<Mat3d> gradient;  // X^J_I = dchi/dK^I_J stored as X(J, I)
};

inline Mat3d shift_gradient_matrix(const Vec3d& dnx) {
  Mat3d dn = Mat3d::Zero();
  dn.row(0) = dnx.transpose();  // dn(S, A) = d_S N^A, only X^1 derivatives
  return dn;
}

inline RateData compute_rate(const VariationGrid& g, const VariationFields& f,
                             const VariationParams& p) {
  const Field<Mat3d> gdot = d_time(g, f.spatial);
  const Field<Mat3d> dgx = d_space(g, f.spatial);
  const Field<Vec3d> dnx = d_space(g, f.shift);
  RateData out;
  out.rate.resize(f.spatial.size());
  out.gradient.resize(f.spatial.size());
  for (std::size_t i = 0; i < f.spatial.size(); ++i) {
    const Mat3d& gm = f.spatial[i];
    const Mat3d dn = shift_gradient_matrix(dnx[i]);
    const Mat3d lie = f.shift[i](0) * dgx[i] + dn * gm + gm * dn.transpose();
    const Mat3d k = gm.inverse() * (gdot[i] - lie) / f.lapse[i];
    out.rate[i] = k;
    out.gradient[i] = 2.0 * p.c1 * k.trace() * Mat3d::Identity() + 2.0 * p.c2 * k;
  }
  return out;
}

inline double chi_of_rate(const VariationParams& p, const Mat3d& k) {
  const double tr = k.trace();
  return p.c1 * tr * tr + p.c2 * (k * k).trace();
}

// Christoffel symbols, Ricci tensor, and scalar curvature of the spatial
// metric field (spatial dependence along X^1 only, tensors full 3D).
struct CurvatureData {
  std::vector<std::array<Mat3d, 3>> christoffel;  // [node][E](C, D) = Gamma^E_CD
  Field<Mat3d> ricci;
  Field<double> scalar;
};

inline CurvatureData compute_curvature(const VariationGrid& g, const Field<Mat3d>& spatial) {
  const Field<Mat3d> dgx = d_space(g, spatial);
  const int n = static_cast<int>(spatial.size());
  CurvatureData out;
  out.christoffel.resize(n);
  out.ricci.assign(n, Mat3d::Zero());
  out.scalar.assign(n, 0.0);

  std::array<Field<Mat3d>, 3> chr;  // per upper index, for spectral derivatives
  for (auto& c : chr) c.assign(n, Mat3d::Zero());
  Field<Vec3d> contracted(n, Vec3d::Zero());  // Gamma^A_{AB}

  for (int i = 0; i < n; ++i) {
    const Mat3d ginv = spatial[i].inverse();
    std::array<Mat3d, 3> dg = {dgx[i], Mat3d::Zero(), Mat3d::Zero()};
    for (int e = 0; e < 3; ++e)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double sum = 0.0;
          for (int f2 = 0; f2 < 3; ++f2)
            sum += ginv(e, f2) * (dg[c](f2, d) + dg[d](f2, c) - dg[f2](c, d));
          out.christoffel[i][e](c, d) = 0.5 * sum;
        }
    for (int e = 0; e < 3; ++e) chr[e][i] = out.christoffel[i][e];
    for (int b = 0; b < 3; ++b) {
      double sum = 0.0;
      for (int a = 0; a < 3; ++a) sum += out.christoffel[i][a](a, b);
      contracted[i](b) = sum;
    }
  }

  const Field<Mat3d> dchr0 = d_space(g, chr[0]);  // only Gamma^{E=0} needs d_A with A = 0
  const Field<Vec3d> dcontr = d_space(g, contracted);

  for (int i = 0; i < n; ++i) {
    Mat3d ric = Mat3d::Zero();
    for (int b = 0; b < 3; ++b)
      for (int d = 0; d < 3; ++d) {
        double r = dchr0[i](d, b);                  // sum_A d_A Gamma^A_{DB}
        if (d == 0) r -= dcontr[i](b);              // d_D Gamma^A_{AB}
        for (int e = 0; e < 3; ++e) {
          r += contracted[i](e) * out.christoffel[i][e](d, b);
          for (int a = 0; a < 3; ++a)
            r -= out.christoffel[i][a](d, e) * out.christoffel[i][e](a, b);
        }
        ric(b, d) = r;
      }
    out.ricci[i] = ric;
    out.scalar[i] = (spatial[i].inverse() * ric).trace();
  }
  return out;
}

// Elastic strain response at a frozen deformation: E = (g^{-1} C - 1)/2,
// W^J_I = mu E^J_I + lambda Tr(E) delta, stored as W(J, I).
struct ElasticData {
  double energy;
  Mat3d response;  // W
  Mat3d cauchy_green;
};

inline ElasticData elastic_point(const VariationParams& p, const Mat3d& gm, const Mat3d& fgrad) {
  ElasticData out;
  out.cauchy_green = fgrad.transpose() * fgrad;
  const Mat3d e = (gm.inverse() * out.cauchy_green - Mat3d::Identity()) / 2.0;
  const double tr = e.trace();
  out.energy = 0.5 * p.mu * (e * e).trace() + 0.5 * p.lambda * tr * tr;
  out.response = p.mu * e + p.lambda * tr * Mat3d::Identity();
  return out;
}

}  // namespace detail

// Lagrangian density L per node for the given row.
inline Field<double> action_density(VariationRow row, const VariationGrid& g,
                                    const VariationFields& f, const VariationParams& p) {
  const int n = static_cast<int>(f.spatial.size());
  Field<double> out(n, 0.0);
  switch (row) {
    case VariationRow::VolumeEnergy:
      for (int i = 0; i < n; ++i) out[i] = detail::poly_value(p.poly, f.spatial[i].determinant());
      return out;
    case VariationRow::LapseEnergy:
      for (int i = 0; i < n; ++i) out[i] = detail::poly_value(p.poly, f.lapse[i]);
      return out;
    case VariationRow::ShiftNorm:
      for (int i = 0; i < n; ++i) out[i] = f.shift[i].dot(f.spatial[i] * f.shift[i]);
      return out;
    case VariationRow::RatePotential: {
      const auto rate = detail::compute_rate(g, f, p);
      for (int i = 0; i < n; ++i) out[i] = detail::chi_of_rate(p, rate.rate[i]);
      return out;
    }
    case VariationRow::SpatialCurvature: {
      const auto curv = detail::compute_curvature(g, f.spatial);
      for (int i = 0; i < n; ++i) out[i] = p.beta * curv.scalar[i];
      return out;
    }
    case VariationRow::ShiftDivergence: {
      Field<double> flux(n, 0.0);
      for (int i = 0; i < n; ++i)
        flux[i] = std::sqrt(f.spatial[i].determinant()) * f.shift[i](0);
      const Field<double> dflux = d_space(g, flux);
      for (int i = 0; i < n; ++i) out[i] = dflux[i] / std::sqrt(f.spatial[i].determinant());
      return out;
    }
    case VariationRow::ElasticEnergy:
      for (int i = 0; i < n; ++i)
        out[i] = detail::elastic_point(p, f.spatial[i], f.defgrad[i]).energy;
      return out;
  }
  throw std::invalid_argument("action_density: unknown row");
}

// A = sum of rho0 S sqrt(g) L over nodes times the cell weight.
inline double action_value(VariationRow row, const VariationGrid& g, const VariationFields& f,
                           const VariationParams& p) {
  const Field<double> dens = action_density(row, g, f, p);
  double sum = 0.0;
  for (std::size_t i = 0; i < dens.size(); ++i)
    sum += f.rho0[i] * f.lapse[i] * std::sqrt(f.spatial[i].determinant()) * dens[i];
  return sum * g.weight();
}

// Analytic variation fields for the given row.
inline VariationDensity analytic_variation(VariationRow row, const VariationGrid& g,
                                           const VariationFields& f, const VariationParams& p) {
  const int n = static_cast<int>(f.spatial.size());
  VariationDensity out;
  out.lapse.assign(n, 0.0);
  out.shift.assign(n, Vec3d::Zero());
  out.spatial.assign(n, Mat3d::Zero());

  switch (row) {
    case VariationRow::VolumeEnergy:
      for (int i = 0; i < n; ++i) {
        const double det = f.spatial[i].determinant();
        const double fv = detail::poly_value(p.poly, det);
        const Mat3d ginv = f.spatial[i].inverse();
        out.lapse[i] = fv / f.lapse[i];
        out.spatial[i] = (detail::poly_derivative(p.poly, det) * det + 0.5 * fv) * ginv;
      }
      return out;

    case VariationRow::LapseEnergy:
      for (int i = 0; i < n; ++i) {
        const double fv = detail::poly_value(p.poly, f.lapse[i]);
        out.lapse[i] = detail::poly_derivative(p.poly, f.lapse[i]) + fv / f.lapse[i];
        out.spatial[i] = 0.5 * fv * f.spatial[i].inverse();
      }
      return out;

    case VariationRow::ShiftNorm:
      for (int i = 0; i < n; ++i) {
        const Vec3d nlow = f.spatial[i] * f.shift[i];
        const double norm2 = f.shift[i].dot(nlow);
        out.lapse[i] = norm2 / f.lapse[i];
        out.shift[i] = 2.0 * nlow;
        out.spatial[i] = f.shift[i] * f.shift[i].transpose() +
                         0.5 * norm2 * f.spatial[i].inverse();
      }
      return out;

    case VariationRow::RatePotential: {
      const auto rate = detail::compute_rate(g, f, p);
      const Field<Mat3d> dgx = d_space(g, f.spatial);
      const Field<Vec3d> dnx = d_space(g, f.shift);

      // Composite densities whose derivatives enter the shift and metric rows.
      Field<Mat3d> ydens(n), ybg(n), xdens(n), yadv(n);
      Field<double> wgt(n);
      for (int i = 0; i < n; ++i) {
        const Mat3d ginv = f.spatial[i].inverse();
        const Mat3d y = ginv * rate.gradient[i].transpose();  // Y^{SJ}, symmetric
        const double r = f.rho0[i] * std::sqrt(f.spatial[i].determinant());
        wgt[i] = r * f.lapse[i];
        ydens[i] = r * y;
        ybg[i] = r * y * f.spatial[i];
        xdens[i] = r * rate.gradient[i];
        yadv[i] = r * f.shift[i](0) * y;
      }
      const Field<Mat3d> dt_ydens = d_time(g, ydens);
      const Field<Mat3d> dx_ybg = d_space(g, ybg);
      const Field<Mat3d> dx_xdens = d_space(g, xdens);
      const Field<Mat3d> dx_yadv = d_space(g, yadv);

      for (int i = 0; i < n; ++i) {
        const Mat3d& k = rate.rate[i];
        const Mat3d& x = rate.gradient[i];
        const Mat3d ginv = f.spatial[i].inverse();
        const Mat3d y = ginv * x.transpose();
        const Mat3d dn = detail::shift_gradient_matrix(dnx[i]);
        const double s = f.lapse[i];
        const double chi = detail::chi_of_rate(p, k);

        out.lapse[i] = (chi - (x * k).trace()) / s;

        for (int m = 0; m < 3; ++m) {
          const Mat3d dgm = m == 0 ? dgx[i] : Mat3d(Mat3d::Zero());
          out.shift[i](m) = -(x * ginv * dgm).trace() / s +
                            (dx_ybg[i](0, m) + dx_xdens[i](0, m)) / wgt[i];
        }

        Mat3d t = -y * k.transpose();
        const Mat3d piece = y * dn;
        t -= (piece + piece.transpose()) / s;
        t += (-dt_ydens[i] + dx_yadv[i]) / wgt[i];
        out.spatial[i] = 0.5 * (t + t.transpose()) + 0.5 * chi * ginv;
      }
      return out;
    }

    case VariationRow::SpatialCurvature: {
      const auto curv = detail::compute_curvature(g, f.spatial);
      // Weight W = beta rho0 S and its covariant second derivatives.
      Field<double> w(n, 0.0);
      for (int i = 0; i < n; ++i) w[i] = p.beta * f.rho0[i] * f.lapse[i];
      const Field<double> dw = d_space(g, w);
      const Field<double> ddw = d_space(g, dw);
      for (int i = 0; i < n; ++i) {
        const Mat3d ginv = f.spatial[i].inverse();
        Mat3d hess = Mat3d::Zero();
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            double h = (c == 0 && d == 0) ? ddw[i] : 0.0;
            h -= curv.christoffel[i][0](c, d) * dw[i];  // only d_0 W is nonzero
            hess(c, d) = h;
          }
        const Mat3d hess_up = ginv * hess * ginv;
        const double lap = (ginv * hess).trace();
        const Mat3d ric_up = ginv * curv.ricci[i] * ginv;
        out.lapse[i] = p.beta * curv.scalar[i] / f.lapse[i];
        out.spatial[i] = p.beta * (0.5 * curv.scalar[i] * ginv - ric_up) +
                         (hess_up - lap * ginv) / (f.rho0[i] * f.lapse[i]);
      }
      return out;
    }

    case VariationRow::ShiftDivergence: {
      Field<double> rs(n, 0.0);
      for (int i = 0; i < n; ++i) rs[i] = f.rho0[i] * f.lapse[i];
      const Field<double> drs = d_space(g, rs);
      const Field<double> dens = action_density(row, g, f, p);
      for (int i = 0; i < n; ++i) {
        const double dlog = drs[i] / rs[i];  // d_1 ln(rho0 S)
        out.lapse[i] = dens[i] / f.lapse[i];
        out.shift[i] = Vec3d(-dlog, 0.0, 0.0);
        out.spatial[i] = -0.5 * f.shift[i](0) * dlog * f.spatial[i].inverse();
      }
      return out;
    }

    case VariationRow::ElasticEnergy:
      for (int i = 0; i < n; ++i) {
        const auto el = detail::elastic_point(p, f.spatial[i], f.defgrad[i]);
        const Mat3d ginv = f.spatial[i].inverse();
        Mat3d t = Mat3d::Zero();
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            double sum = 0.0;
            for (int s = 0; s < 3; ++s)
              for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                  sum += ginv(b, s) * el.cauchy_green(s, j) * el.response(j, k) * ginv(k, a);
            t(a, b) = sum;
          }
        out.lapse[i] = el.energy / f.lapse[i];
        out.spatial[i] = 0.5 * el.energy * ginv - 0.25 * (t + t.transpose());
      }
      return out;
  }
  throw std::invalid_argument("analytic_variation: unknown row");
}

}  // namespace aging

#endif
