#pragma once

#include <cstdint>

namespace clup {

struct FirstIterParams {
  double alpha = 0.8;
  double sigma = 0.0;   // noise scale, 1/sigma^2 is the SNR
  double rho = 0.5;     // fraction of initial signs agreeing with x_sol
  double r = 0.1594;    // radius level for the saddle
};

// Output of the first-iteration saddle: critical {p_err, s_hat, d2, d1}
// plus the auxiliary multipliers. s1_hat keeps the sign of the minimized
// variable (negative at the usual operating points); s_hat is the realized
// objective alignment E (x^0)' x^(1,s) = (2 rho - 1) - s1_hat.
struct TheoryFirst {
  double nu_hat = 0.0;
  double gamma_hat = 0.0;
  double c1z_hat = 0.0;
  double s1_hat = 0.0;
  double xi = 0.0;
  double p_err = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double s_hat = 0.0;
  FirstIterParams params;
};

// Closed-form pieces of E f_box per Gaussian integration of the clamp branches.
double I11(double gamma, double nu);
double I21(double gamma, double nu);

// E f_box,1 mixed over the two initial-sign branches.
double expected_f_box1(double gamma, double nu, double rho);

double xi_rd1(const FirstIterParams& p, double c1z, double s1, double gamma, double nu);

// sqrt(n)-scaled moments of the optimizing clamp: E z, E z^2, and the
// error probability P(z > 1).
struct ZhatMoments {
  double ez;     // sqrt(n) E z_i
  double ezsq;   // n E z_i^2
  double p_err;
};
ZhatMoments zhat_quantiles(double gamma, double nu, double rho);

// E (x^0)' z, needed for the s1 stationarity check.
double expected_x0z(double gamma, double nu, double rho);

// min_{0<=c1z<=4} max_{gamma,nu} xi_rd1 at fixed s1; optimizers returned.
struct InnerSaddle {
  double value;
  double c1z;
  double gamma;
  double nu;
};
InnerSaddle first_level_value(const FirstIterParams& p, double s1);

TheoryFirst solve_first(const FirstIterParams& p);

}  // namespace clup
