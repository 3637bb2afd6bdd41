#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "fedkernel/kernel.hpp"

namespace fedkernel {

/// One client's local data. theta_star holds the true local model in feature
/// coordinates, i.e. f_i^*(x) = phi(x).theta_star.
struct ClientData {
  MatrixXd x;          // n_i x input_dim covariates
  VectorXd y;          // n_i responses
  VectorXd theta_star; // length feature_dim; empty when unknown

  Eigen::Index size() const { return x.rows(); }
};

/// The full federation: M clients plus the kernel they share.
struct FederatedDataset {
  KernelSpec kernel = KernelSpec::linear(1);
  std::vector<ClientData> clients;
  double sigma = 0.0;          // noise scale used at generation time
  std::uint64_t seed = 0;      // generator seed, echoed for provenance
  double recommended_eta = 0;  // 0 = generator has no stepsize advice

  Eigen::Index total_size() const {
    Eigen::Index n = 0;
    for (const auto& c : clients) n += c.size();
    return n;
  }

  /// w_i = n_i / N.
  VectorXd weights() const {
    const double n = static_cast<double>(total_size());
    VectorXd w(clients.size());
    for (std::size_t i = 0; i < clients.size(); ++i)
      w[static_cast<Eigen::Index>(i)] = static_cast<double>(clients[i].size()) / n;
    return w;
  }

  bool has_true_models() const {
    for (const auto& c : clients)
      if (c.theta_star.size() == 0) return false;
    return !clients.empty();
  }

  /// Throws ConfigError when a structural invariant is broken
  /// (empty client, weight sum off, inconsistent dimensions).
  void validate() const;
};

/// All responses stacked client by client.
VectorXd stacked_responses(const FederatedDataset& data);

/// f_i^*(x_i) stacked client by client (the noise-free responses).
VectorXd stacked_true_values(const FederatedDataset& data);

/// All covariates stacked client by client, one row per point.
MatrixXd stacked_covariates(const FederatedDataset& data);

}  // namespace fedkernel
