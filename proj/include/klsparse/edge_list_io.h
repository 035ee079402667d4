#ifndef KLSPARSE_EDGE_LIST_IO_H_
#define KLSPARSE_EDGE_LIST_IO_H_

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "klsparse/graph.h"

namespace klsparse {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format:
//
//   # comment lines start with '#'; blank lines are skipped
//   n m
//   u v [w]      (m lines, 0-based ids, optional real weight, default 1)
//
// Throws ParseError naming the offending line.
WeightedMultigraph ParseEdgeList(std::istream& in);
WeightedMultigraph ParseEdgeList(std::string_view text);

// Writes the header and every edge with its weight; parses back to the same
// graph.
std::string SerializeEdgeList(const WeightedMultigraph& g);

// Shortest decimal text that reads back to exactly `w`.
std::string FormatWeight(double w);

}  // namespace klsparse

#endif  // KLSPARSE_EDGE_LIST_IO_H_
