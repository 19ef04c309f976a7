#pragma once

#include <stdexcept>
#include <string>

namespace clup {

struct InvalidDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleRadius : std::runtime_error {
  double r, rho_min;
  InfeasibleRadius(double r_, double rho_min_)
      : std::runtime_error("radius " + std::to_string(r_) +
                           " below minimal achievable residual " + std::to_string(rho_min_)),
        r(r_), rho_min(rho_min_) {}
};
struct NoConvergence : std::runtime_error {
  int iterations;
  explicit NoConvergence(int iters, const std::string& what_)
      : std::runtime_error(what_), iterations(iters) {}
};
struct RadiusUnreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SaddleNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QuadratureUnderResolved : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CovarianceNotPSD : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LevelSetMiss : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientRuns : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct KeyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace clup
