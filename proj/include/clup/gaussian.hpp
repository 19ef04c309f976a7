#pragma once

#include <cmath>
#include <limits>

namespace clup {

inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kSqrt2Pi = 2.5066282746310005024;

inline double norm_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

// Moments of the standard Gaussian over a segment [a, b]:
//   m0 = int phi,  m1 = int h phi,  m2 = int h^2 phi
// so that int (c0 + c1 h + c2 h^2) phi(h) dh = c0 m0 + c1 m1 + c2 m2.
struct SegmentMoments {
  double m0, m1, m2;
};

inline SegmentMoments gauss_segment_moments(double a, double b) {
  double Fa = norm_cdf(a), Fb = norm_cdf(b);
  double fa = std::isinf(a) ? 0.0 : norm_pdf(a);
  double fb = std::isinf(b) ? 0.0 : norm_pdf(b);
  double afa = std::isinf(a) ? 0.0 : a * fa;
  double bfb = std::isinf(b) ? 0.0 : b * fb;
  return {Fb - Fa, fa - fb, (Fb - Fa) + afa - bfb};
}

}  // namespace clup
