#pragma once

// BGF: a self-contained text encoding of one bipartite graph.
//
//   p bgf <n_x> <n_y> <m>
//   e <u> <v>            (m lines, u < n_x <= v < n_x + n_y)
//
// ASCII with LF line endings. Canonical output lists edges in lexicographic
// order; the decoder accepts any order but rejects duplicates.

#include <string>
#include <string_view>

#include "rbh/bigraph.hpp"
#include "rbh/detail/lines.hpp"

namespace rbh {

inline std::string encode_graph(const BipartiteGraph& g) {
  std::string out = "p bgf " + std::to_string(g.n_x()) + " " + std::to_string(g.n_y()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

namespace detail {

inline BipartiteGraph read_graph(LineReader& in) {
  const auto header = split_spaces(in.next());
  const auto hline = in.line_number();
  if (header.size() != 5 || header[0] != "p" || header[1] != "bgf") {
    throw ParseError(hline, "expected header 'p bgf <n_x> <n_y> <m>'");
  }
  const auto n_x = parse_count(header[2], hline);
  const auto n_y = parse_count(header[3], hline);
  const auto m = parse_count(header[4], hline);
  if (n_x > BipartiteGraph::kMaxPart || n_y > BipartiteGraph::kMaxPart) {
    throw ParseError(hline, "part sizes above 64 are not supported");
  }
  if (m > n_x * n_y) throw ParseError(hline, "edge count exceeds n_x * n_y");

  BipartiteGraph g(static_cast<int>(n_x), static_cast<int>(n_y));
  for (long long i = 0; i < m; ++i) {
    if (in.at_end()) throw ParseError(in.line_number() + 1, "missing edge line");
    const auto tokens = split_spaces(in.next());
    const auto line = in.line_number();
    if (tokens.size() != 3 || tokens[0] != "e") throw ParseError(line, "expected 'e <u> <v>'");
    const auto u = parse_count(tokens[1], line);
    const auto v = parse_count(tokens[2], line);
    if (u >= n_x || v < n_x || v >= n_x + n_y) {
      throw ParseError(line, "edge endpoints must satisfy u < n_x <= v < n_x + n_y");
    }
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError(line, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

}  // namespace detail

inline BipartiteGraph decode_graph(std::string_view text) {
  detail::LineReader in(text);
  auto g = detail::read_graph(in);
  if (!in.at_end()) throw ParseError(in.line_number() + 1, "trailing content after last edge");
  return g;
}

}  // namespace rbh
