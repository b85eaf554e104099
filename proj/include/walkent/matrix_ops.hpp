#pragma once

#include <stdexcept>

#include <Eigen/Dense>

namespace walkent {

/// Entrywise (Hadamard) product; shapes must match.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> schur_product(
    const Eigen::MatrixBase<Derived>& x, const Eigen::MatrixBase<Derived>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("schur_product: shape mismatch");
  return x.cwiseProduct(y);
}

/// Block-structured Kronecker product; block (i,j) is x(i,j) * y.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> kronecker_product(
    const Eigen::MatrixBase<Derived>& x, const Eigen::MatrixBase<Derived>& y) {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

}  // namespace walkent
