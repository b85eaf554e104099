#include "walkent/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace walkent {
namespace {

struct PackedGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxCanonicalNodes> rows{};  // bit j of rows[i]
};

PackedGraph pack(const Graph& g) {
  const int n = g.node_count();
  if (n < 1 || n > kMaxCanonicalNodes)
    throw std::invalid_argument("canonical: node count outside [1, " +
                                std::to_string(kMaxCanonicalNodes) + "]");
  PackedGraph p;
  p.n = n;
  for (const auto& [i, j] : g.edges()) {
    p.rows[i] |= static_cast<std::uint16_t>(1u << j);
    p.rows[j] |= static_cast<std::uint16_t>(1u << i);
  }
  return p;
}

std::uint64_t code_of(const PackedGraph& p) {
  std::uint64_t code = 0;
  for (int j = 1; j < p.n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((p.rows[i] >> j) & 1u);
  return code;
}

bool packed_connected(const PackedGraph& p) {
  const std::uint32_t all = (1u << p.n) - 1;
  std::uint32_t reach = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= p.rows[v];
    }
    next &= ~reach;
    reach |= next;
    frontier = next;
  }
  return reach == all;
}

// Depth-first relabeling search over the packed triangle code. Positions
// are filled left to right; a branch dies as soon as its code prefix
// exceeds the incumbent. Candidates are visited in ascending degree order
// so small incumbents appear early.
class CodeSearch {
 public:
  explicit CodeSearch(const PackedGraph& g) : g_(g), bits_total_(g.n * (g.n - 1) / 2) {
    std::array<int, kMaxCanonicalNodes> deg{};
    for (int v = 0; v < g_.n; ++v) deg[v] = std::popcount(g_.rows[v]);
    for (int v = 0; v < g_.n; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.begin() + g_.n,
              [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
  }

  std::uint64_t minimize() {
    best_ = code_of(g_);
    strict_ = false;
    descend(0, 0);
    return best_;
  }

  /// True iff some relabeling yields a code strictly below the graph's own.
  bool beats_identity() {
    best_ = code_of(g_);
    strict_ = true;
    found_smaller_ = false;
    descend(0, 0);
    return found_smaller_;
  }

 private:
  void descend(int depth, std::uint64_t prefix) {
    if (depth == g_.n) {
      if (prefix < best_) best_ = prefix;
      return;
    }
    const int bits_after = (depth + 1) * depth / 2;
    const int shift = bits_total_ - bits_after;
    for (int c = 0; c < g_.n; ++c) {
      const int v = order_[c];
      if (used_ & (1u << v)) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < depth; ++i)
        column = (column << 1) | ((g_.rows[v] >> perm_[i]) & 1u);
      const std::uint64_t next = (prefix << depth) | column;
      // best_ may shrink while this loop runs, so the bar is re-read
      // per candidate.
      const std::uint64_t incumbent_prefix = best_ >> shift;
      if (next > incumbent_prefix) continue;
      if (strict_ && next < incumbent_prefix) {
        found_smaller_ = true;
        return;
      }
      used_ |= 1u << v;
      perm_[depth] = static_cast<std::uint8_t>(v);
      descend(depth + 1, next);
      used_ &= ~(1u << v);
      if (found_smaller_) return;
    }
  }

  const PackedGraph& g_;
  int bits_total_;
  std::uint64_t best_ = 0;
  bool strict_ = false;
  bool found_smaller_ = false;
  std::uint32_t used_ = 0;
  std::array<std::uint8_t, kMaxCanonicalNodes> perm_{};
  std::array<std::uint8_t, kMaxCanonicalNodes> order_{};
};

void enumerate_impl(int n, bool connected_only,
                    const std::function<void(const Graph&)>& yield) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumerate: n outside [1, 7]");
  const int bits = n * (n - 1) / 2;

  std::array<std::pair<int, int>, 21> pairs{};
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs[k++] = {i, j};

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    PackedGraph p;
    p.n = n;
    for (int b = 0; b < bits; ++b) {
      if ((mask >> (bits - 1 - b)) & 1u) {
        const auto [i, j] = pairs[b];
        p.rows[i] |= static_cast<std::uint16_t>(1u << j);
        p.rows[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
    if (connected_only && !packed_connected(p)) continue;
    if (CodeSearch(p).beats_identity()) continue;
    yield(graph_from_code(n, mask));
  }
}

}  // namespace

std::uint64_t triangle_code(const Graph& g) { return code_of(pack(g)); }

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxCanonicalNodes)
    throw std::invalid_argument("graph_from_code: node count outside range");
  Graph g(n);
  const int bits = n * (n - 1) / 2;
  int b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if ((code >> (bits - 1 - b)) & 1u) g.add_edge(i, j);
  return g;
}

std::uint64_t canonical_code(const Graph& g) {
  const PackedGraph p = pack(g);
  return CodeSearch(p).minimize();
}

Graph canonical_form(const Graph& g) {
  return graph_from_code(g.node_count(), canonical_code(g));
}

bool is_canonical(const Graph& g) {
  const PackedGraph p = pack(g);
  return !CodeSearch(p).beats_identity();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
    return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& yield) {
  enumerate_impl(n, true, yield);
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  enumerate_impl(n, true, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void enumerate_all(int n, const std::function<void(const Graph&)>& yield) {
  enumerate_impl(n, false, yield);
}

}  // namespace walkent
