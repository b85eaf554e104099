#include "walkent/communicability.hpp"

#include <cmath>
#include <stdexcept>

namespace walkent {
namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0))
    throw std::invalid_argument("beta must be nonnegative");
  if (beta > kMaxBeta)
    throw std::invalid_argument("beta above the supported exponential range");
}

}  // namespace

Communicability communicability(const Graph& g, double beta) {
  check_beta(beta);
  const Spectrum s = adjacency_spectrum(g);
  const Vector weights = (beta * s.eigenvalues.array()).exp();
  Matrix m = s.eigenvectors * weights.asDiagonal() * s.eigenvectors.transpose();
  m = ((m + m.transpose()) / 2.0).eval();
  return {beta, std::move(m)};
}

double partition_function(const Graph& g, double beta) {
  check_beta(beta);
  const Spectrum s = adjacency_spectrum(g);
  return (beta * s.eigenvalues.array()).exp().sum();
}

double average_energy(const Graph& g, double beta) {
  check_beta(beta);
  const Spectrum s = adjacency_spectrum(g);
  // Shifted by lambda_1 so the ratio stays finite at any beta in range.
  const Eigen::ArrayXd w = (beta * (s.eigenvalues.array() - s.eigenvalues[0])).exp();
  return -(s.eigenvalues.array() * w).sum() / w.sum();
}

}  // namespace walkent
