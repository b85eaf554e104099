#include "walkent/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "walkent/regularity.hpp"
#include "walkent/transforms.hpp"

namespace walkent {
namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
}

double shannon_bits(const Vector& p) {
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) s -= p[i] * std::log2(p[i]);
  return s;
}

// e^{beta (lambda_j - lambda_1)}: bounded by 1, so any beta >= 0 is safe.
Eigen::ArrayXd shifted_weights(const Spectrum& s, double beta) {
  return (beta * (s.eigenvalues.array() - s.eigenvalues[0])).exp();
}

}  // namespace

NodeProbabilities node_walk_probabilities(const Spectrum& s, double beta) {
  check_beta(beta);
  const Eigen::ArrayXd w = shifted_weights(s, beta);
  const Vector diag =
      (s.eigenvectors.array().square().rowwise() * w.transpose()).rowwise().sum();
  return {beta, diag / w.sum()};
}

NodeProbabilities node_walk_probabilities(const Graph& g, double beta) {
  return node_walk_probabilities(adjacency_spectrum(g), beta);
}

double walk_entropy(const Spectrum& s, double beta) {
  return shannon_bits(node_walk_probabilities(s, beta).p);
}

double walk_entropy(const Graph& g, double beta) {
  return walk_entropy(adjacency_spectrum(g), beta);
}

double zero_temp_walk_entropy(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("zero_temp_walk_entropy: graph must be connected");
  const Spectrum s = adjacency_spectrum(g);
  Vector q = s.eigenvectors.col(0).array().square();
  q /= q.sum();
  return shannon_bits(q);
}

EdgeProbabilities edge_walk_probabilities(const Graph& g, double beta) {
  check_beta(beta);
  if (g.edge_count() == 0)
    throw std::invalid_argument("edge_walk_probabilities: edgeless graph");
  EdgeList edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (beta == 0.0) {
    // Continuous limit: (e^{beta A})_ij ~ beta on each edge, so the
    // distribution tends to uniform as beta -> 0.
    return {beta, std::move(edges), Vector::Constant(m, 1.0 / m)};
  }
  const Spectrum s = adjacency_spectrum(g);
  const Eigen::ArrayXd w = shifted_weights(s, beta);
  Vector num(m);
  for (int v = 0; v < m; ++v) {
    const auto& [i, j] = edges[v];
    num[v] = (s.eigenvectors.row(i).array() * s.eigenvectors.row(j).array() *
              w.transpose())
                 .sum();
  }
  return {beta, std::move(edges), num / num.sum()};
}

double edge_walk_entropy(const Graph& g, double beta) {
  return shannon_bits(edge_walk_probabilities(g, beta).p);
}

double line_walk_entropy_direct(const Graph& g, double beta) {
  return walk_entropy(line_graph(g).graph, beta);
}

double zero_temp_edge_entropy(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("zero_temp_edge_entropy: graph must be connected");
  if (g.edge_count() == 0)
    throw std::invalid_argument("zero_temp_edge_entropy: edgeless graph");
  const Spectrum s = adjacency_spectrum(g);
  const Vector& phi = s.eigenvectors.col(0);
  const EdgeList edges = g.edges();
  Vector q(edges.size());
  for (std::size_t v = 0; v < edges.size(); ++v)
    q[static_cast<int>(v)] = 2.0 * phi[edges[v].first] * phi[edges[v].second] /
                             s.eigenvalues[0];
  q /= q.sum();
  return shannon_bits(q);
}

double von_neumann_entropy(const Graph& g, VnNormalization norm) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("von_neumann_entropy: edgeless graph");
  const Spectrum s = sym_eig(laplacian(g));
  Vector mu = s.eigenvalues;
  if (norm == VnNormalization::Trace) mu /= 2.0 * g.edge_count();
  double out = 0.0;
  for (int j = 0; j < mu.size(); ++j)
    if (mu[j] > 0.0) out -= mu[j] * std::log2(mu[j]);
  return out;
}

double spectral_shannon_entropy(const Graph& g, double beta) {
  check_beta(beta);
  const Spectrum s = adjacency_spectrum(g);
  const Eigen::ArrayXd w = shifted_weights(s, beta);
  return shannon_bits(Vector(w / w.sum()));
}

TensorEntropyReport walk_entropy_tensor_check(const Graph& g, const Graph& h,
                                              double beta) {
  if (!g.is_connected() || !h.is_connected())
    throw std::invalid_argument("walk_entropy_tensor_check: factors must be connected");
  const Graph product = tensor_product(g, h);
  TensorEntropyReport r;
  r.product_entropy = walk_entropy(product, beta);
  r.sum_of_entropies = walk_entropy(g, beta) + walk_entropy(h, beta);
  r.difference = r.product_entropy - r.sum_of_entropies;
  r.g_walk_regular = is_walk_regular(g);
  r.h_walk_regular = is_walk_regular(h);
  r.product_walk_regular = is_walk_regular(product);
  return r;
}

}  // namespace walkent
