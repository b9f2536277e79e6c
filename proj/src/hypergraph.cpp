#include "hyper3/hypergraph.hpp"

#include <algorithm>
#include <utility>

namespace hyper3 {

namespace {

// Token for one edge: "{}" for the empty hyperedge, otherwise the sorted
// vertex letters.
std::string edge_token(Hyperedge e) {
  if (e.mask() == 0) return "{}";
  std::string t;
  for (Vertex v : all_vertices)
    if (e.contains(v)) t.push_back(vertex_label(v));
  return t;
}

Hyperedge parse_edge_token(std::string_view token) {
  if (token.empty())
    throw ParseError("malformed token: empty edge token");
  if (token == "{}") return Hyperedge::empty();
  std::uint8_t mask = 0;
  for (char c : token) {
    if (c < 'A' || c > 'C')
      throw ParseError("invalid token \"" + std::string(token) +
                       "\": unknown vertex '" + std::string(1, c) + "'");
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (2 - (c - 'A')));
    if (mask & bit)
      throw ParseError("invalid token \"" + std::string(token) +
                       "\": repeated vertex '" + std::string(1, c) + "'");
    mask |= bit;
  }
  return Hyperedge{mask};
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  if (text.empty()) return Hypergraph{};
  std::uint8_t edges = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = text.find(';', start);
    std::string_view token = text.substr(
        start, sep == std::string_view::npos ? std::string_view::npos
                                             : sep - start);
    Hyperedge e = parse_edge_token(token);
    std::uint8_t bit = static_cast<std::uint8_t>(1u << e.mask());
    if (edges & bit)
      throw ParseError("duplicate edge \"" + std::string(token) + "\"");
    edges |= bit;
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return Hypergraph{edges};
}

std::string format_hypergraph(Hypergraph g) {
  std::vector<std::pair<int, std::string>> tokens;
  for (Hyperedge e : g.edges())
    tokens.emplace_back(e.cardinality(), edge_token(e));
  std::sort(tokens.begin(), tokens.end());
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(';');
    out += tokens[i].second;
  }
  return out;
}

std::vector<Hypergraph> enumerate_all() {
  std::vector<Hypergraph> all;
  all.reserve(256);
  for (int m = 0; m < 256; ++m)
    all.push_back(Hypergraph{static_cast<std::uint8_t>(m)});
  return all;
}

LUClass lu_class_of(Hypergraph g) {
  constexpr Hyperedge complete = Hyperedge::of({Vertex::A, Vertex::B,
                                                Vertex::C});
  if (g.has_edge(complete)) return LUClass::G5;

  constexpr Hyperedge bc = Hyperedge::of({Vertex::B, Vertex::C});
  constexpr Hyperedge ac = Hyperedge::of({Vertex::A, Vertex::C});
  constexpr Hyperedge ab = Hyperedge::of({Vertex::A, Vertex::B});
  const bool has_bc = g.has_edge(bc);
  const bool has_ac = g.has_edge(ac);
  const bool has_ab = g.has_edge(ab);
  const int pair_edges = int(has_bc) + int(has_ac) + int(has_ab);

  if (pair_edges == 0) return LUClass::G0;
  if (pair_edges >= 2) return LUClass::G4;
  if (has_bc) return LUClass::G1;
  if (has_ac) return LUClass::G2;
  return LUClass::G3;
}

bool is_graph(Hypergraph g) {
  for (Hyperedge e : g.edges())
    if (e.cardinality() != 2) return false;
  return true;
}

}  // namespace hyper3
