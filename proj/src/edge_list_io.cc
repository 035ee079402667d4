#include "klsparse/edge_list_io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace klsparse {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view token) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

WeightedMultigraph ParseEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long expected = 0;
  WeightedMultigraph g;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> tokens = Tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
      std::optional<int> n = ParseNumber<int>(tokens[0]);
      std::optional<long long> m = ParseNumber<long long>(tokens[1]);
      if (!n || *n < 0) throw ParseError(line_no, "invalid vertex count");
      if (!m || *m < 0) throw ParseError(line_no, "invalid edge count");
      g = WeightedMultigraph(*n);
      expected = *m;
      have_header = true;
      continue;
    }

    if (g.num_edges() >= expected) {
      throw ParseError(line_no, "more than " + std::to_string(expected) +
                                    " edge lines");
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected \"u v [w]\"");
    }
    std::optional<int> u = ParseNumber<int>(tokens[0]);
    std::optional<int> v = ParseNumber<int>(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "invalid vertex id");
    double w = 1.0;
    if (tokens.size() == 3) {
      std::optional<double> parsed = ParseNumber<double>(tokens[2]);
      if (!parsed || !std::isfinite(*parsed)) {
        throw ParseError(line_no, "invalid weight");
      }
      w = *parsed;
    }
    if (*u < 0 || *v < 0 || *u >= g.num_vertices() || *v >= g.num_vertices()) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (*u == *v) throw ParseError(line_no, "loop edge");
    g.AddEdge(*u, *v, w);
  }

  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  if (g.num_edges() != expected) {
    throw ParseError(line_no, "expected " + std::to_string(expected) +
                                  " edges, found " +
                                  std::to_string(g.num_edges()));
  }
  return g;
}

WeightedMultigraph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

std::string FormatWeight(double w) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), w);
  return std::string(buffer, ptr);
}

std::string SerializeEdgeList(const WeightedMultigraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           FormatWeight(e.weight) + "\n";
  }
  return out;
}

}  // namespace klsparse
