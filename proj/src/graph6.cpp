#include "walkent/graph6.hpp"

#include <istream>
#include <string>

namespace walkent {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr int kMaxShortN = 62;
constexpr const char* kHeader = ">>graph6<<";

std::string with_offset(const std::string& message, std::size_t offset) {
  return message + " (byte " + std::to_string(offset) + ")";
}

}  // namespace

Graph6ParseError::Graph6ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(with_offset(message, offset)), offset_(offset) {}

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw Graph6ParseError("graph6: empty input", 0);

  const unsigned char c0 = static_cast<unsigned char>(text[0]);
  if (c0 == kMaxByte)
    throw Graph6ParseError("graph6: long form (n > 62) not supported", 0);
  if (c0 < kBias || c0 > kBias + kMaxShortN)
    throw Graph6ParseError("graph6: malformed length byte", 0);
  const int n = c0 - kBias;
  if (n == 0) throw Graph6ParseError("graph6: graph must have at least one node", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body)
    throw Graph6ParseError("graph6: truncated body", text.size());
  if (text.size() > 1 + body)
    throw Graph6ParseError("graph6: trailing characters", 1 + body);

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t at = 1 + bit / 6;
      const unsigned char c = static_cast<unsigned char>(text[at]);
      if (c < kBias || c > kMaxByte)
        throw Graph6ParseError("graph6: character out of range", at);
      const int group = c - kBias;
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits up to the 6-bit boundary must be zero.
  for (; bit < body * 6; ++bit) {
    const std::size_t at = 1 + bit / 6;
    const unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > kMaxByte)
      throw Graph6ParseError("graph6: character out of range", at);
    if (((c - kBias) >> (5 - bit % 6)) & 1)
      throw Graph6ParseError("graph6: nonzero padding bits", at);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.node_count();
  if (n < 1 || n > kMaxShortN)
    throw std::invalid_argument("write_graph6: node count outside [1, 62]");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(kBias + n));

  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  return out;
}

bool is_graph6_header_line(const std::string& line) {
  return line.rfind(kHeader, 0) == 0;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || is_graph6_header_line(line)) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6ParseError& e) {
      throw Graph6ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                             e.offset());
    }
  }
  return out;
}

}  // namespace walkent
