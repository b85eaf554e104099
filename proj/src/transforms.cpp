#include "walkent/transforms.hpp"

#include <stdexcept>

namespace walkent {

LineGraphResult line_graph(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("line_graph: edgeless graph");
  const EdgeList edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Graph lg(m);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      const auto& [a, b] = edges[u];
      const auto& [c, d] = edges[v];
      if (a == c || a == d || b == c || b == d) lg.add_edge(u, v);
    }
  }
  return {std::move(lg), edges};
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const int ng = g.node_count(), nh = h.node_count();
  if (ng < 1 || nh < 1)
    throw std::invalid_argument("tensor_product: empty factor");
  Graph out(ng * nh);
  const EdgeList ge = g.edges(), he = h.edges();
  for (const auto& [a, c] : ge) {
    for (const auto& [b, d] : he) {
      out.add_edge(a * nh + b, c * nh + d);
      out.add_edge(a * nh + d, c * nh + b);
    }
  }
  return out;
}

Matrix laplacian(const Graph& g) {
  const int n = g.node_count();
  Matrix l = -g.adjacency();
  for (int p = 0; p < n; ++p) l(p, p) = g.degree(p);
  return l;
}

}  // namespace walkent
