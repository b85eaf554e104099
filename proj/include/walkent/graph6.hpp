#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkent/graph.hpp"

namespace walkent {

/// Raised on malformed graph6 input; `offset` is the byte position of the
/// offending character within the line.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decode one short-form graph6 string (printable ASCII 63..126, n <= 62).
/// Upper-triangle bits are read column-wise: (0,1), (0,2), (1,2), (0,3), ...
Graph parse_graph6(const std::string& text);

/// Encode with canonical zero padding to the 6-bit boundary. n must be in
/// [1, 62] (short form).
std::string write_graph6(const Graph& g);

/// One graph per line; blank lines and ">>graph6<<" header lines are
/// skipped. Throws Graph6ParseError annotated with the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// True for lines the stream readers ignore.
bool is_graph6_header_line(const std::string& line);

}  // namespace walkent
