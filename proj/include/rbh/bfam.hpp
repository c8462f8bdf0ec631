#pragma once

// BFAM: an ordered family of BGF graphs on one bipartition.
//
//   p bfam <n_x> <n_y> <k>
//   <BGF block 1>
//   ---
//   <BGF block 2>
//   ...
//
// Witness lines produced by the searches:
//   path v0 v1 ... ; g a0 a1 ...
//   cycle v0 v1 ... ; g a0 a1 ...
//   none

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbh/bgf.hpp"
#include "rbh/rainbow.hpp"

namespace rbh {

inline std::string encode_family(const GraphFamily& family) {
  std::string out = "p bfam " + std::to_string(family.n_x()) + " " + std::to_string(family.n_y()) + " " +
                    std::to_string(family.size()) + "\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i > 0) out += "---\n";
    out += encode_graph(family[i]);
  }
  return out;
}

inline GraphFamily decode_family(std::string_view text) {
  detail::LineReader in(text);
  const auto header = detail::split_spaces(in.next());
  const auto hline = in.line_number();
  if (header.size() != 5 || header[0] != "p" || header[1] != "bfam") {
    throw ParseError(hline, "expected header 'p bfam <n_x> <n_y> <k>'");
  }
  const auto n_x = detail::parse_count(header[2], hline);
  const auto n_y = detail::parse_count(header[3], hline);
  const auto k = detail::parse_count(header[4], hline);
  if (k == 0) throw ParseError(hline, "a family needs at least one graph");

  std::vector<BipartiteGraph> graphs;
  for (long long i = 0; i < k; ++i) {
    if (i > 0) {
      if (in.at_end()) throw ParseError(in.line_number() + 1, "missing '---' separator");
      if (in.next() != "---") throw ParseError(in.line_number(), "expected '---' between graphs");
    }
    if (in.at_end()) throw ParseError(in.line_number() + 1, "missing graph block");
    const auto line = in.line_number() + 1;
    auto g = detail::read_graph(in);
    if (g.n_x() != n_x || g.n_y() != n_y) throw ParseError(line, "graph parts differ from the family header");
    graphs.push_back(std::move(g));
  }
  if (!in.at_end()) throw ParseError(in.line_number() + 1, "trailing content after last graph");
  return GraphFamily(std::move(graphs));
}

inline std::string format_witness(const std::optional<RainbowSubgraph>& w, bool closed) {
  if (!w) return "none";
  std::string out = closed ? "cycle" : "path";
  for (int v : w->vertices) out += " " + std::to_string(v);
  out += " ; g";
  for (int a : w->assignment) out += " " + std::to_string(a);
  return out;
}

}  // namespace rbh
