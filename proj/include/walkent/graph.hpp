#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace walkent {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Unordered node pair stored as (i, j) with i < j.
using Edge = std::pair<int, int>;
/// Edges in lexicographic order; index doubles as the line-graph node label.
using EdgeList = std::vector<Edge>;

/// Simple undirected graph: symmetric adjacency, zero diagonal, no
/// multiedges. Nodes are 0-based.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const EdgeList& edges);

  int node_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);

  int degree(int p) const;
  std::vector<int> degrees() const;
  bool is_regular() const;
  bool is_connected() const;

  EdgeList edges() const;

  Matrix adjacency() const;
  IntMatrix adjacency_int() const;

  /// Labeled equality (same node count, identical adjacency).
  bool operator==(const Graph& other) const = default;

 private:
  void check_node(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;  // row-major n*n, 0/1
};

// Named constructions used by the CLI and test corpus.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // center is node 0
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace walkent
