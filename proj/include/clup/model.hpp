#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <variant>

namespace clup {

// One random instance of y = A x_sol + sigma v with x_sol in {+-1/sqrt(n)}^n.
struct SystemInstance {
  int n = 0;
  int m = 0;
  double alpha = 0.0;
  double sigma = 0.0;
  Eigen::MatrixXd A;
  Eigen::VectorXd x_sol;
  Eigen::VectorXd v;
  Eigen::VectorXd y;
};

struct RandomSignInit {
  std::uint64_t seed = 0;
};
struct FixedVectorInit {
  Eigen::VectorXd x0;
};
struct AgreementFractionInit {
  double rho = 0.5;
};
using InitSpec = std::variant<RandomSignInit, FixedVectorInit, AgreementFractionInit>;

struct ClupConfig {
  double r_plt = 0.1226;   // plateau radius; external input (alpha=0.8, 13 dB default)
  double r_sc = 1.3;       // radius scaling, r = r_sc * r_plt
  double snr_db = 13.0;    // 1/sigma^2 in dB
  int max_iters = 6;
  double inner_tol = 1e-8;
  double convergence_tol = 0.0;  // 0 disables the |ds| stop; paper runs fixed iterations
  std::uint64_t seed = 0;
  InitSpec init = AgreementFractionInit{0.5};
  bool warm_start = true;

  double radius() const { return r_sc * r_plt; }
  double sigma() const { return std::pow(10.0, -snr_db / 20.0); }
};

SystemInstance generate_instance(int n, double alpha, double sigma, std::uint64_t seed);

Eigen::VectorXd make_initial(const ClupConfig& config, const SystemInstance& instance);

// Flat key=value config file (keys: n, alpha, snr_db, r_plt, r_sc, max_iters,
// seed, reps, init, rho). Unknown keys rejected.
struct FileConfig {
  ClupConfig clup;
  int n = 400;
  double alpha = 0.8;
  int reps = 1;
};
FileConfig read_config_file(const std::string& path);

// Column-major CSV dump of an instance (documented in the README) and its inverse.
void save_instance_csv(const SystemInstance& inst, const std::string& path);
SystemInstance load_instance_csv(const std::string& path);

}  // namespace clup
