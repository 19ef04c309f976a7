#include "clup/rdt_first.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "clup/errors.hpp"
#include "clup/gaussian.hpp"
#include "clup/numerics.hpp"

namespace clup {

namespace {
constexpr double kPi = 3.14159265358979323846;

// exp(-0.5 t^2) * poly, guarded so t -> inf gives 0 instead of inf * 0
inline double exp_half_sq(double t) {
  double a = -0.5 * t * t;
  return a < -745.0 ? 0.0 : std::exp(a);
}
}  // namespace

double I11(double gamma, double nu) {
  if (gamma <= 0) throw DomainError("I11: gamma must be > 0");
  double t = 4 * gamma + nu;
  return -(exp_half_sq(t) * (nu - 4 * gamma)
           + std::sqrt(kPi / 2) * (nu * nu + 1) * std::erf(t / kSqrt2)
           - std::sqrt(kPi / 2) * (nu * nu + 1) * std::erf(nu / kSqrt2)
           - exp_half_sq(nu) * nu) /
         (4 * kSqrt2Pi * gamma);
}

double I21(double gamma, double nu) {
  if (gamma <= 0) throw DomainError("I21: gamma must be > 0");
  double t = 4 * gamma + nu;
  return (4 * gamma + 2 * nu) * 0.5 * std::erfc(t / kSqrt2) - 2 * exp_half_sq(t) / kSqrt2Pi;
}

double expected_f_box1(double gamma, double nu, double rho) {
  return rho * (I11(gamma, nu) + I21(gamma, nu)) +
         (1 - rho) * (I11(gamma, -nu) + I21(gamma, -nu));
}

double xi_rd1(const FirstIterParams& p, double c1z, double s1, double gamma, double nu) {
  if (gamma <= 0) throw DomainError("xi_rd1: gamma must be > 0");
  if (c1z < 0) throw DomainError("xi_rd1: c1z must be >= 0");
  return std::sqrt(p.alpha) * std::sqrt(c1z + p.sigma * p.sigma) +
         expected_f_box1(gamma, nu, p.rho) - nu * s1 - gamma * c1z;
}

namespace {

// one-branch moments of the clamp z = min(max(0, -(h+nu)/2g), 2)
inline double s_x1(double g, double v) {
  return -v / 2 / g * (0.5 * std::erfc(v / kSqrt2) - 0.5 * std::erfc((v + 4 * g) / kSqrt2)) +
         1 / 2 / g / kSqrt2Pi * (exp_half_sq(v) - exp_half_sq(4 * g + v));
}
inline double s_xsq1(double g, double v) { return -I11(g, v) / g; }
inline double s_x2(double g, double v) { return 2 * (0.5 * std::erfc((4 * g + v) / kSqrt2)); }
inline double s_xsq2(double g, double v) { return 2 * s_x2(g, v); }

struct GradGV {
  double dg;  // d xi / d gamma = E z^2 - c1z
  double dv;  // d xi / d nu    = E x0 z - s1
};

GradGV xi_gradient(double g, double v, double rho, double c1z, double s1) {
  double ezsq = rho * (s_xsq1(g, v) + s_xsq2(g, v)) + (1 - rho) * (s_xsq1(g, -v) + s_xsq2(g, -v));
  double ex0z = rho * (s_x1(g, v) + s_x2(g, v)) - (1 - rho) * (s_x1(g, -v) + s_x2(g, -v));
  return {ezsq - c1z, ex0z - s1};
}

// Max over (gamma, nu) of the concave xi at fixed (c1z, s1): damped Newton on the
// analytic gradient with a finite-difference Hessian, Nelder-Mead style fallback
// handled by halving the step until xi improves.
struct GV {
  double g, v;
};

GV max_gamma_nu(const FirstIterParams& p, double c1z, double s1, GV start, double tol = 1e-11) {
  double lg = std::log(start.g), v = start.v;
  auto value = [&](double lgi, double vi) { return xi_rd1(p, c1z, s1, std::exp(lgi), vi); };
  for (int it = 0; it < 200; ++it) {
    double g = std::exp(lg);
    GradGV grad = xi_gradient(g, v, p.rho, c1z, s1);
    double glg = grad.dg * g;  // chain rule for log-gamma
    if (std::abs(glg) < tol && std::abs(grad.dv) < tol) break;
    const double h = 1e-6;
    GradGV gp = xi_gradient(std::exp(lg + h), v, p.rho, c1z, s1);
    GradGV gm = xi_gradient(std::exp(lg - h), v, p.rho, c1z, s1);
    GradGV vp = xi_gradient(g, v + h, p.rho, c1z, s1);
    GradGV vm = xi_gradient(g, v - h, p.rho, c1z, s1);
    double h11 = (gp.dg * std::exp(lg + h) - gm.dg * std::exp(lg - h)) / (2 * h);
    double h12 = (vp.dg * g - vm.dg * g) / (2 * h);
    double h22 = (vp.dv - vm.dv) / (2 * h);
    // solve H d = -grad for the concave max (H should be negative definite)
    double det = h11 * h22 - h12 * h12;
    double dlg, dv;
    if (std::abs(det) < 1e-18) {
      dlg = glg * 1e-2;
      dv = grad.dv * 1e-2;
    } else {
      dlg = -(h22 * glg - h12 * grad.dv) / det;
      dv = -(h11 * grad.dv - h12 * glg) / det;
    }
    double f0 = value(lg, v);
    double step = 1.0;
    for (int ls = 0; ls < 60; ++ls) {
      double lgn = lg + step * dlg, vn = v + step * dv;
      if (value(lgn, vn) >= f0 - 1e-15) {
        lg = lgn;
        v = vn;
        break;
      }
      step *= 0.5;
      if (ls == 59) {  // gradient ascent as last resort
        lg += 1e-3 * glg;
        v += 1e-3 * grad.dv;
      }
    }
  }
  return {std::exp(lg), v};
}

}  // namespace

ZhatMoments zhat_quantiles(double gamma, double nu, double rho) {
  if (gamma <= 0) throw DomainError("zhat_quantiles: gamma must be > 0");
  double ez = rho * (s_x1(gamma, nu) + s_x2(gamma, nu)) +
              (1 - rho) * (s_x1(gamma, -nu) + s_x2(gamma, -nu));
  double ezsq = rho * (s_xsq1(gamma, nu) + s_xsq2(gamma, nu)) +
                (1 - rho) * (s_xsq1(gamma, -nu) + s_xsq2(gamma, -nu));
  double p_err = 1.0 - (rho * 0.5 * std::erfc((-2 * gamma - nu) / kSqrt2) +
                        (1 - rho) * 0.5 * std::erfc((-2 * gamma + nu) / kSqrt2));
  return {ez, ezsq, p_err};
}

double expected_x0z(double gamma, double nu, double rho) {
  return rho * (s_x1(gamma, nu) + s_x2(gamma, nu)) -
         (1 - rho) * (s_x1(gamma, -nu) + s_x2(gamma, -nu));
}

InnerSaddle first_level_value(const FirstIterParams& p, double s1) {
  GV warm{1.0, 0.5};
  auto level = [&](double c1z) {
    warm = max_gamma_nu(p, c1z, s1, warm);
    return xi_rd1(p, c1z, s1, warm.g, warm.v);
  };
  // coarse scan guards against golden-section landing in a shoulder
  double best_c = 1e-4, best_f = level(1e-4);
  for (double c = 0.05; c <= 4.0; c += 0.05) {
    double f = level(c);
    if (f < best_f) {
      best_f = f;
      best_c = c;
    }
  }
  double lo = std::max(1e-6, best_c - 0.05), hi = std::min(4.0, best_c + 0.05);
  double fmin;
  double c1z = brent_minimize(level, lo, hi, 1e-12, 200, &fmin);
  GV gv = max_gamma_nu(p, c1z, s1, warm);
  return {xi_rd1(p, c1z, s1, gv.g, gv.v), c1z, gv.g, gv.v};
}

TheoryFirst solve_first(const FirstIterParams& p) {
  if (p.r <= 0) throw DomainError("solve_first: r must be > 0");
  auto F = [&](double s1) { return first_level_value(p, s1).value - p.r; };
  // bracket grown from s1 = 0 downward; F decreases in s1 near the root
  double hi = 0.0, fhi = F(hi);
  if (fhi > 0) throw RadiusUnreachable("solve_first: level exceeds r already at s1 = 0");
  double lo = -0.05, flo = F(lo);
  while (flo < 0) {
    hi = lo;
    fhi = flo;
    lo *= 2;
    if (lo < -8.0) throw RadiusUnreachable("solve_first: no root for F(s1) = r in bracket");
    flo = F(lo);
  }
  double s1 = bisect_root(F, lo, hi, flo, fhi, 1e-13);
  InnerSaddle sad = first_level_value(p, s1);

  TheoryFirst out;
  out.params = p;
  out.s1_hat = s1;
  out.c1z_hat = sad.c1z;
  out.gamma_hat = sad.gamma;
  out.nu_hat = sad.nu;
  out.xi = sad.value;
  ZhatMoments zm = zhat_quantiles(sad.gamma, sad.nu, p.rho);
  out.p_err = zm.p_err;
  out.d1 = 1.0 - zm.ez;
  out.d2 = zm.ezsq + 2.0 * out.d1 - 1.0;
  out.s_hat = (2.0 * p.rho - 1.0) - s1;
  return out;
}

}  // namespace clup
