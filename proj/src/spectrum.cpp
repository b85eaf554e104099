#include "walkent/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace walkent {

Spectrum sym_eig(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("sym_eig: matrix is not square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw std::invalid_argument("sym_eig: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.transpose()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("sym_eig: eigendecomposition failed");

  const int n = static_cast<int>(m.rows());
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    s.eigenvalues[j] = solver.eigenvalues()[n - 1 - j];
    s.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    int lead = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(s.eigenvectors(i, j)) > std::abs(s.eigenvectors(lead, j))) lead = i;
    if (s.eigenvectors(lead, j) < 0) s.eigenvectors.col(j) = -s.eigenvectors.col(j);
  }
  return s;
}

Spectrum adjacency_spectrum(const Graph& g) { return sym_eig(g.adjacency()); }

Vector ipr(const Spectrum& s) {
  const int n = s.size();
  Vector out(n);
  for (int j = 0; j < n; ++j) {
    const double p4 = s.eigenvectors.col(j).array().square().square().sum();
    out[j] = 1.0 / p4;
  }
  return out;
}

double mean_ipr(const Spectrum& s) { return ipr(s).mean(); }

}  // namespace walkent
