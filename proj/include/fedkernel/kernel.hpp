#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "fedkernel/common.hpp"

namespace fedkernel {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Finite-rank kernel k(x,z) = phi(x).phi(z). Three families:
///  - linear:   phi(x) = x on d-dimensional inputs
///  - monomial: phi(x) = [1, x, ..., x^p] on scalar inputs
///  - explicit: any user-supplied feature evaluation of dimension d
class KernelSpec {
 public:
  enum class Family { kLinear, kMonomial, kExplicit };

  static KernelSpec linear(int input_dim);
  static KernelSpec monomial(int degree);
  static KernelSpec finite_rank(int input_dim, int feature_dim,
                                std::function<VectorXd(const VectorXd&)> features,
                                std::string name = "explicit");

  Family family() const { return family_; }
  int input_dim() const { return input_dim_; }
  int feature_dim() const { return feature_dim_; }
  int degree() const { return degree_; }
  const std::string& name() const { return name_; }

  /// phi(x) as a length-feature_dim vector.
  VectorXd features(const VectorXd& x) const;

 private:
  KernelSpec() = default;
  Family family_ = Family::kLinear;
  int input_dim_ = 0;
  int feature_dim_ = 0;
  int degree_ = 0;  // monomial only
  std::string name_;
  std::function<VectorXd(const VectorXd&)> fn_;
};

/// Normalized Gram matrix: entries(j,l) = k(x_j, x_l) / n. The normalization
/// constant is kept explicit because local blocks divide by n_i while the
/// global matrix divides by N; mixing the two silently is the classic bug.
struct GramMatrix {
  MatrixXd entries;
  int n = 0;

  MatrixXd unnormalized() const { return entries * static_cast<double>(n); }
};

double eval_kernel(const KernelSpec& spec, const VectorXd& x, const VectorXd& z);

/// points: one row per input point.
GramMatrix gram(const KernelSpec& spec, const MatrixXd& points);

/// Row j = phi(points.row(j)); satisfies gram = (1/n) Phi Phi^T.
MatrixXd feature_matrix(const KernelSpec& spec, const MatrixXd& points);

/// ||f||_H for f = <phi, theta> in a finite-rank RKHS.
double rkhs_norm(const VectorXd& theta);

}  // namespace fedkernel
