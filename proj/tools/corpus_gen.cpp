// Builds the connected-graph corpora under data/ (one graph6 line per
// isomorphism class, canonical-code order). Works one node count at a
// time by attaching a fresh node to every representative one size down:
// every connected graph keeps a non-cut node, so extending connected
// (n-1)-node representatives by a nonempty neighbor subset reaches every
// class on n nodes. Deduplication is by canonical code.
//
// Usage: walkent-corpus-gen N [outfile]

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "walkent/canonical.hpp"
#include "walkent/graph6.hpp"

namespace {

std::vector<std::uint64_t> connected_codes(int n) {
  if (n == 1) return {0};
  std::vector<std::uint64_t> out;
  std::unordered_set<std::uint64_t> seen;
  for (const std::uint64_t base : connected_codes(n - 1)) {
    const walkent::Graph g = walkent::graph_from_code(n - 1, base);
    for (unsigned subset = 1; subset < (1u << (n - 1)); ++subset) {
      walkent::Graph ext(n);
      for (const auto& [i, j] : g.edges()) ext.add_edge(i, j);
      for (int v = 0; v < n - 1; ++v)
        if ((subset >> v) & 1u) ext.add_edge(v, n - 1);
      const std::uint64_t code = walkent::canonical_code(ext);
      if (seen.insert(code).second) out.push_back(code);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::cerr << "usage: walkent-corpus-gen N [outfile]\n";
    return 1;
  }
  const int n = std::stoi(argv[1]);
  if (n < 1 || n > walkent::kMaxCanonicalNodes) {
    std::cerr << "N outside [1, " << walkent::kMaxCanonicalNodes << "]\n";
    return 1;
  }

  const auto codes = connected_codes(n);
  std::cerr << "connected classes on " << n << " nodes: " << codes.size() << "\n";

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (argc == 3) {
    file.open(argv[2]);
    if (!file) {
      std::cerr << "cannot open " << argv[2] << "\n";
      return 1;
    }
    out = &file;
  }
  for (const std::uint64_t code : codes)
    *out << walkent::write_graph6(walkent::graph_from_code(n, code)) << "\n";
  return 0;
}
