#pragma once

#include <Eigen/Dense>

#include "clup/errors.hpp"

namespace clup {

// Gauss-Hermite rule for the probabilists' weight exp(-x^2/2)/sqrt(2*pi),
// computed by Golub-Welsch on the Jacobi matrix. Weights sum to 1.
struct GaussHermite {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  explicit GaussHermite(int n) {
    if (n < 1) throw DomainError("GaussHermite: need n >= 1 nodes");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
      double b = std::sqrt(static_cast<double>(i));  // probabilists' recurrence
      J(i, i - 1) = b;
      J(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes = es.eigenvalues();
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
      double v = es.eigenvectors()(0, i);
      weights[i] = v * v;  // mu0 = 1 for the normalized weight
    }
  }
};

// Tensor rule for E f(H, H1) with (H, H1) independent standard normals.
struct GaussQuadrature2D {
  Eigen::VectorXd nodes;    // per-axis nodes
  Eigen::VectorXd weights;  // per-axis weights (sum to 1)
  int node_count;

  explicit GaussQuadrature2D(int per_axis) : node_count(per_axis) {
    GaussHermite gh(per_axis);
    nodes = gh.nodes;
    weights = gh.weights;
  }

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int i = 0; i < node_count; ++i) {
      double inner = 0.0;
      for (int j = 0; j < node_count; ++j) inner += weights[j] * f(nodes[i], nodes[j]);
      acc += weights[i] * inner;
    }
    return acc;
  }

  double weight_sum() const {
    double s = 0.0;
    for (int i = 0; i < node_count; ++i)
      for (int j = 0; j < node_count; ++j) s += weights[i] * weights[j];
    return s;
  }
};

}  // namespace clup
