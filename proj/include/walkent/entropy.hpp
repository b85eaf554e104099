#pragma once

#include "walkent/graph.hpp"
#include "walkent/spectrum.hpp"

namespace walkent {

/// Probability of drawing, among all closed walks at inverse temperature
/// beta, one that starts and ends at node i: p_i = (e^{beta A})_ii / Z.
struct NodeProbabilities {
  double beta = 0.0;
  Vector p;
};

/// Probability that a walk in the line graph sits at edge v = {i, j}:
/// p_v = (e^{beta A})_ij / D, D = sum over edges = tr(A e^{beta A}) / 2.
struct EdgeProbabilities {
  double beta = 0.0;
  EdgeList edges;
  Vector p;
};

// All entropies are in bits. The probability vectors are evaluated with
// exponentials shifted by lambda_1, so beta may exceed the raw
// communicability range without overflow.

NodeProbabilities node_walk_probabilities(const Graph& g, double beta);
NodeProbabilities node_walk_probabilities(const Spectrum& s, double beta);

/// Shannon entropy of the closed-walk node distribution; at most log2 n,
/// attained for every beta exactly on walk-regular graphs.
double walk_entropy(const Graph& g, double beta);
double walk_entropy(const Spectrum& s, double beta);

/// beta -> infinity limit: entropy of the squared eigenvector centrality.
/// Connected input only (the principal eigenvector must be simple).
double zero_temp_walk_entropy(const Graph& g);

EdgeProbabilities edge_walk_probabilities(const Graph& g, double beta);

/// Shannon entropy of the edge distribution; at most log2 m.
double edge_walk_entropy(const Graph& g, double beta);

/// Node walk entropy of the line graph itself.
double line_walk_entropy_direct(const Graph& g, double beta);

/// beta -> infinity limit of edge_walk_entropy: entropy of
/// q_ij = 2 phi_1(i) phi_1(j) / lambda_1 over edges. Connected, m >= 1.
double zero_temp_edge_entropy(const Graph& g);

enum class VnNormalization {
  Trace,  // density matrix L / tr(L); eigenvalues form a distribution
  Raw,    // raw Laplacian eigenvalues, as sometimes written
};

/// -sum mu_j log2 mu_j over Laplacian eigenvalues (0 log 0 = 0).
double von_neumann_entropy(const Graph& g,
                           VnNormalization norm = VnNormalization::Trace);

/// Shannon entropy of the eigenvalue-indexed distribution
/// p_j = e^{beta lambda_j} / Z.
double spectral_shannon_entropy(const Graph& g, double beta = 1.0);

/// Walk-entropy additivity probe for the Kronecker product. When both
/// factors are walk-regular the difference vanishes and the product is
/// walk-regular again.
struct TensorEntropyReport {
  double product_entropy = 0.0;
  double sum_of_entropies = 0.0;
  double difference = 0.0;
  bool g_walk_regular = false;
  bool h_walk_regular = false;
  bool product_walk_regular = false;
};

TensorEntropyReport walk_entropy_tensor_check(const Graph& g, const Graph& h,
                                              double beta);

}  // namespace walkent
