#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Three-vertex hypergraphs over the fixed vertex set {A, B, C}.
//
// A hyperedge is any subset of {A, B, C} (the empty subset included),
// encoded as a 3-bit mask with A at bit 2, B at bit 1, C at bit 0. A
// hypergraph is a set of hyperedges, encoded as an 8-bit mask whose bit m
// is set iff the hyperedge with vertex mask m is present. There are
// exactly 256 hypergraphs.

namespace hyper3 {

enum class Vertex : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Vertex, 3> all_vertices{Vertex::A, Vertex::B,
                                                    Vertex::C};

// Bit position of a vertex in edge masks and basis indices (A most
// significant).
constexpr int vertex_bit(Vertex v) { return 2 - static_cast<int>(v); }

constexpr char vertex_label(Vertex v) {
  return static_cast<char>('A' + static_cast<int>(v));
}

// Unordered pair of distinct vertices, stored with first < second.
struct VertexPair {
  Vertex first;
  Vertex second;
};

// The three pairs in canonical order AB, AC, BC.
inline constexpr std::array<VertexPair, 3> vertex_pairs{
    VertexPair{Vertex::A, Vertex::B}, VertexPair{Vertex::A, Vertex::C},
    VertexPair{Vertex::B, Vertex::C}};

inline std::string pair_label(VertexPair p) {
  return std::string{vertex_label(p.first), vertex_label(p.second)};
}

// A subset of {A, B, C}. Mask 0 is the empty hyperedge.
class Hyperedge {
 public:
  constexpr Hyperedge() = default;
  constexpr explicit Hyperedge(std::uint8_t mask) : mask_(mask) {
    if (mask > 7) throw std::out_of_range("Hyperedge: mask must be in [0, 7]");
  }

  static constexpr Hyperedge empty() { return Hyperedge{0}; }

  static constexpr Hyperedge of(std::initializer_list<Vertex> vs) {
    std::uint8_t m = 0;
    for (Vertex v : vs) m |= static_cast<std::uint8_t>(1u << vertex_bit(v));
    return Hyperedge{m};
  }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool contains(Vertex v) const {
    return (mask_ >> vertex_bit(v)) & 1u;
  }
  constexpr int cardinality() const {
    return ((mask_ >> 2) & 1) + ((mask_ >> 1) & 1) + (mask_ & 1);
  }

  friend constexpr bool operator==(Hyperedge, Hyperedge) = default;
  friend constexpr auto operator<=>(Hyperedge, Hyperedge) = default;

 private:
  std::uint8_t mask_ = 0;
};

// A set of hyperedges. Immutable after construction.
class Hypergraph {
 public:
  constexpr Hypergraph() = default;
  constexpr explicit Hypergraph(std::uint8_t edge_mask) : edges_(edge_mask) {}

  static constexpr Hypergraph from_edges(std::initializer_list<Hyperedge> es) {
    std::uint8_t m = 0;
    for (Hyperedge e : es) m |= static_cast<std::uint8_t>(1u << e.mask());
    return Hypergraph{m};
  }

  // Bit m set iff the hyperedge with vertex mask m is present.
  constexpr std::uint8_t edge_mask() const { return edges_; }

  constexpr bool has_edge(Hyperedge e) const {
    return (edges_ >> e.mask()) & 1u;
  }

  constexpr int edge_count() const {
    int n = 0;
    for (int m = 0; m < 8; ++m) n += (edges_ >> m) & 1;
    return n;
  }

  // Edges in increasing vertex-mask order.
  std::vector<Hyperedge> edges() const {
    std::vector<Hyperedge> out;
    for (std::uint8_t m = 0; m < 8; ++m)
      if ((edges_ >> m) & 1u) out.push_back(Hyperedge{m});
    return out;
  }

  friend constexpr bool operator==(Hypergraph, Hypergraph) = default;
  friend constexpr auto operator<=>(Hypergraph, Hypergraph) = default;

 private:
  std::uint8_t edges_ = 0;
};

// Local-unitary equivalence classes.
enum class LUClass : std::uint8_t { G0 = 0, G1, G2, G3, G4, G5 };

inline constexpr std::array<LUClass, 6> all_lu_classes{
    LUClass::G0, LUClass::G1, LUClass::G2,
    LUClass::G3, LUClass::G4, LUClass::G5};

constexpr const char* to_string(LUClass c) {
  constexpr const char* names[] = {"G0", "G1", "G2", "G3", "G4", "G5"};
  return names[static_cast<int>(c)];
}

// Raised on malformed hypergraph text; the message names the bad token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses the canonical text form: semicolon-separated edge tokens, each a
// string of distinct letters from {A,B,C} or the literal "{}" for the
// empty hyperedge. The empty string is the edgeless hypergraph. Rejects
// unknown letters, repeated letters, duplicate edges, malformed tokens.
Hypergraph parse_hypergraph(std::string_view text);

// Canonical text form: edges sorted by (cardinality, alphabetical),
// vertices within an edge sorted, "{}" for the empty hyperedge, ';'
// separator, no whitespace. Inverse of parse_hypergraph.
std::string format_hypergraph(Hypergraph g);

// Symmetric difference of the edge sets: g + F.
constexpr Hypergraph edge_sum(Hypergraph g, Hypergraph f) {
  return Hypergraph{static_cast<std::uint8_t>(g.edge_mask() ^ f.edge_mask())};
}

inline Hypergraph edge_sum(Hypergraph g, std::initializer_list<Hyperedge> f) {
  return edge_sum(g, Hypergraph::from_edges(f));
}

// All 256 hypergraphs in increasing edge-mask order.
std::vector<Hypergraph> enumerate_all();

// Structural LU-class membership. The complete edge {A,B,C} dominates;
// otherwise the set of cardinality-2 edges decides. Cardinality-0 and
// cardinality-1 edges never affect the label.
LUClass lu_class_of(Hypergraph g);

// True iff every edge has cardinality exactly 2 (a simple undirected
// graph on {A,B,C}).
bool is_graph(Hypergraph g);

}  // namespace hyper3
