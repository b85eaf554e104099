#pragma once

#include "walkent/graph.hpp"

namespace walkent {

/// Eigendecomposition of a real symmetric matrix. Eigenvalues are sorted
/// descending; eigenvector columns are orthonormal and column j pairs with
/// eigenvalues[j]. Sign convention: the largest-magnitude entry of each
/// column is made positive (ties broken by lowest index), which leaves the
/// principal eigenvector of a connected graph entrywise positive.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Throws if the input deviates from symmetry by more than 1e-12.
Spectrum sym_eig(const Matrix& m);

Spectrum adjacency_spectrum(const Graph& g);

/// Inverse participation ratio per eigenstate: 1 / sum_p phi_j(p)^4.
/// 1 = fully localized, n = fully delocalized.
Vector ipr(const Spectrum& s);
double mean_ipr(const Spectrum& s);

}  // namespace walkent
