#include "walkent/regularity.hpp"

#include <limits>
#include <stdexcept>

#include "walkent/transforms.hpp"

namespace walkent {
namespace {

// Walk counts grow like lambda_1^k, which bursts 64 bits already for
// modest tensor products; the iteration runs on 128-bit integers with
// checked adds instead.
using WalkCount = __int128;

[[noreturn]] void overflow() {
  throw std::overflow_error("walk count exceeds the integer range");
}

// Row-major n*n walk-count matrix advanced one adjacency multiplication
// at a time: next(i,j) = sum of cur(i,k) over neighbors k of j. A is 0/1,
// so only checked additions are needed.
class PowerIterator {
 public:
  explicit PowerIterator(const Graph& g)
      : n_(g.node_count()), neighbors_(n_), cur_(static_cast<std::size_t>(n_) * n_, 0) {
    for (const auto& [i, j] : g.edges()) {
      neighbors_[i].push_back(j);
      neighbors_[j].push_back(i);
    }
    for (int i = 0; i < n_; ++i) cur_[idx(i, i)] = 1;
  }

  void advance() {
    std::vector<WalkCount> next(cur_.size(), 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        WalkCount acc = 0;
        for (const int k : neighbors_[j])
          if (__builtin_add_overflow(acc, cur_[idx(i, k)], &acc)) overflow();
        next[idx(i, j)] = acc;
      }
    }
    cur_ = std::move(next);
  }

  WalkCount at(int i, int j) const { return cur_[idx(i, j)]; }
  int size() const { return n_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<WalkCount> cur_;
};

}  // namespace

DiagPowerProfile diag_power_profile(const Graph& g, int kmax) {
  if (kmax < 0) throw std::invalid_argument("diag_power_profile: kmax must be >= 0");
  const int n = g.node_count();
  DiagPowerProfile profile;
  profile.rows.reserve(kmax + 1);
  PowerIterator power(g);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) power.advance();
    std::vector<std::int64_t> row(n);
    for (int p = 0; p < n; ++p) {
      const WalkCount c = power.at(p, p);
      if (c > std::numeric_limits<std::int64_t>::max()) overflow();
      row[p] = static_cast<std::int64_t>(c);
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

bool is_walk_regular(const Graph& g) {
  const int n = g.node_count();
  PowerIterator power(g);
  for (int k = 1; k <= n - 1; ++k) {
    power.advance();
    if (k < 2) continue;  // diag(A^0) and diag(A) are constant on any graph
    const WalkCount first = power.at(0, 0);
    for (int p = 1; p < n; ++p)
      if (power.at(p, p) != first) return false;
  }
  return true;
}

bool is_edge_walk_regular(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("is_edge_walk_regular: edgeless graph");
  const int n = g.node_count();
  const EdgeList edges = g.edges();
  PowerIterator power(g);
  for (int k = 1; k <= n - 1; ++k) {
    power.advance();
    const WalkCount first = power.at(edges[0].first, edges[0].second);
    for (const auto& [i, j] : edges)
      if (power.at(i, j) != first) return false;
  }
  return true;
}

GraphClass classify(const Graph& g) {
  if (is_walk_regular(g)) return GraphClass::WalkRegular;
  if (g.is_regular()) return GraphClass::RegularNotWalkRegular;
  return GraphClass::NonRegular;
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::WalkRegular: return "WalkRegular";
    case GraphClass::RegularNotWalkRegular: return "RegularNotWalkRegular";
    case GraphClass::NonRegular: return "NonRegular";
  }
  return "?";
}

LineTensorReport line_walk_regular_tensor_check(const Graph& g, const Graph& h) {
  LineTensorReport r;
  r.g_edge_walk_regular = is_edge_walk_regular(g);
  r.h_edge_walk_regular = is_edge_walk_regular(h);
  const Graph product = tensor_product(line_graph(g).graph, line_graph(h).graph);
  r.product_edge_walk_regular = is_edge_walk_regular(product);
  r.product_line_walk_regular = is_walk_regular(line_graph(product).graph);
  return r;
}

}  // namespace walkent
