#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "clup/errors.hpp"

namespace clup {

// Brent minimizer on [a, b] (golden sections with parabolic steps).
template <typename F>
double brent_minimize(F&& f, double a, double b, double tol = 1e-10, int max_iter = 200,
                      double* fmin_out = nullptr) {
  const double gold = 0.3819660112501051;
  double x = a + gold * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    double m = 0.5 * (a + b);
    double tol1 = tol * std::abs(x) + 1e-15;
    double tol2 = 2 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
    double p = 0, q = 0, r = 0;
    bool parab = false;
    if (std::abs(e) > tol1) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2 * (q - r);
      if (q > 0) p = -p;
      q = std::abs(q);
      if (std::abs(p) < std::abs(0.5 * q * e) && p > q * (a - x) && p < q * (b - x)) {
        e = d;
        d = p / q;
        parab = true;
      }
    }
    if (!parab) {
      e = (x < m) ? b - x : a - x;
      d = gold * e;
    }
    double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
    double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw; w = x; fw = fx; x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw; w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  if (fmin_out) *fmin_out = fx;
  return x;
}

// Bisection root of f on [lo, hi]; requires a sign change.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double flo, double fhi,
                   double xtol = 1e-12, int max_iter = 200) {
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  for (int it = 0; it < max_iter && (hi - lo) > xtol * (1 + std::abs(lo) + std::abs(hi)); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid; flo = fm;
    } else {
      hi = mid; fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace clup
