#pragma once

#include "walkent/spectrum.hpp"

namespace walkent {

/// Largest inverse temperature the raw-exponential operations accept.
/// e^{beta lambda_1} strains double precision past this point; the
/// zero-temperature closed forms in entropy.hpp cover the far regime.
inline constexpr double kMaxBeta = 50.0;

/// The matrix e^{beta A}: entry (p,q) weights all p->q walks of length k
/// by beta^k / k!. Symmetric positive definite; diagonal >= 1.
struct Communicability {
  double beta = 0.0;
  Matrix matrix;
};

/// Computed spectrally as Phi e^{beta Lambda} Phi^T. beta in [0, kMaxBeta].
Communicability communicability(const Graph& g, double beta);

/// Z(beta) = tr e^{beta A} = sum_j e^{beta lambda_j}.
double partition_function(const Graph& g, double beta);

/// <E> = -(1/Z) dZ/dbeta = -sum_j lambda_j e^{beta lambda_j} / Z.
double average_energy(const Graph& g, double beta);

}  // namespace walkent
