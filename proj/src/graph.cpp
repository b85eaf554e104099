#include "walkent/graph.hpp"

#include <stdexcept>

namespace walkent {

Graph::Graph(int n) : n_(n), m_(0), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw std::invalid_argument("Graph: node count must be positive");
}

Graph Graph::from_edges(int n, const EdgeList& edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::check_node(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: node index out of range");
}

bool Graph::has_edge(int i, int j) const {
  check_node(i);
  check_node(j);
  return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

void Graph::add_edge(int i, int j) {
  check_node(i);
  check_node(j);
  if (i == j) throw std::invalid_argument("Graph: self-loops are not allowed");
  auto& a = adj_[static_cast<std::size_t>(i) * n_ + j];
  if (a) return;
  a = 1;
  adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
  ++m_;
}

int Graph::degree(int p) const {
  check_node(p);
  int d = 0;
  for (int q = 0; q < n_; ++q) d += adj_[static_cast<std::size_t>(p) * n_ + q];
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int p = 0; p < n_; ++p) d[p] = degree(p);
  return d;
}

bool Graph::is_regular() const {
  if (n_ <= 1) return true;
  const int d0 = degree(0);
  for (int p = 1; p < n_; ++p)
    if (degree(p) != d0) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<std::uint8_t> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (adj_[static_cast<std::size_t>(v) * n_ + w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[static_cast<std::size_t>(i) * n_ + j]) out.emplace_back(i, j);
  return out;
}

Matrix Graph::adjacency() const {
  Matrix a = Matrix::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      a(i, j) = adj_[static_cast<std::size_t>(i) * n_ + j];
  return a;
}

IntMatrix Graph::adjacency_int() const {
  IntMatrix a = IntMatrix::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      a(i, j) = adj_[static_cast<std::size_t>(i) * n_ + j];
  return a;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 nodes");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star_graph: need at least 1 leaf");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: empty side");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.node_count() + b.node_count());
  for (const auto& [i, j] : a.edges()) g.add_edge(i, j);
  const int off = a.node_count();
  for (const auto& [i, j] : b.edges()) g.add_edge(off + i, off + j);
  return g;
}

}  // namespace walkent
