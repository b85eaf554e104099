#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "walkent/graph.hpp"

namespace walkent {

/// Largest node count the packed-triangle canonical machinery accepts
/// (55 upper-triangle bits at n = 11).
inline constexpr int kMaxCanonicalNodes = 11;

/// Upper-triangle adjacency packed column-wise, pair (0,1) in the most
/// significant bit, so numeric order on codes equals lexicographic order
/// on the bit strings (and on the graph6 body).
std::uint64_t triangle_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// Minimal triangle code over all n! relabelings, found by depth-first
/// assignment with incumbent pruning (candidates visited in ascending
/// degree order).
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

/// True iff the graph's own code is already minimal. Exits early on the
/// first relabeling that beats it.
bool is_canonical(const Graph& g);

/// Degree-sequence prefilter, then canonical code comparison.
bool are_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected graphs on n
/// nodes, yielded in canonical-code order. n in [1, 7]; n = 7 scans all
/// 2^21 labelings and takes noticeably longer.
void enumerate_connected(int n, const std::function<void(const Graph&)>& yield);
std::vector<Graph> enumerate_connected(int n);

/// Same scan without the connectivity filter.
void enumerate_all(int n, const std::function<void(const Graph&)>& yield);

}  // namespace walkent
