#pragma once

#include <cstdint>
#include <vector>

#include "walkent/graph.hpp"

namespace walkent {

/// Exact closed-walk counts: rows[k][p] = (A^k)_pp for k = 0..kmax.
/// Row 0 is all ones, row 1 all zeros, row 2 the degree vector.
struct DiagPowerProfile {
  std::vector<std::vector<std::int64_t>> rows;
};

/// Integer matrix powers; throws std::overflow_error if a count leaves
/// the 64-bit range.
DiagPowerProfile diag_power_profile(const Graph& g, int kmax);

/// (A^k)_pp constant over nodes for every k <= n-1. The bound suffices:
/// A^k for k >= n is a rational combination of lower powers
/// (Cayley-Hamilton), and constancy is linear in A^k.
bool is_walk_regular(const Graph& g);

/// (A^k)_ij constant over edges (i,j) for every k <= n-1; the edge-level
/// analogue used for line graphs. Throws for edgeless input.
bool is_edge_walk_regular(const Graph& g);

enum class GraphClass { WalkRegular, RegularNotWalkRegular, NonRegular };

GraphClass classify(const Graph& g);
const char* to_string(GraphClass c);

/// Tensor-product probe for walk-regular line graphs: edge-level flags of
/// both inputs, the edge-level flag of L(g) (x) L(h), and the direct node
/// flag of its line graph. When both inputs pass, both product flags must.
struct LineTensorReport {
  bool g_edge_walk_regular = false;
  bool h_edge_walk_regular = false;
  bool product_edge_walk_regular = false;
  bool product_line_walk_regular = false;
};

LineTensorReport line_walk_regular_tensor_check(const Graph& g, const Graph& h);

}  // namespace walkent
