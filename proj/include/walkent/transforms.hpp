#pragma once

#include "walkent/graph.hpp"

namespace walkent {

struct LineGraphResult {
  Graph graph;     // one node per edge of the source graph
  EdgeList edges;  // node v of the line graph <-> edges[v] of the source
};

/// Nodes of L(G) are G's edges (lexicographic order); two nodes are
/// adjacent iff the edges share an endpoint. Throws for edgeless input.
LineGraphResult line_graph(const Graph& g);

/// Kronecker-product graph: (a,b) ~ (c,d) iff a~c in g and b~d in h.
/// Node (a,b) maps to a * h.node_count() + b.
Graph tensor_product(const Graph& g, const Graph& h);

/// L = D - A.
Matrix laplacian(const Graph& g);

}  // namespace walkent
