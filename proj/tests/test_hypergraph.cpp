#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hyper3/hypergraph.hpp"

using namespace hyper3;

namespace {
const Hyperedge kEmpty = Hyperedge::empty();
const Hyperedge kA = Hyperedge::of({Vertex::A});
const Hyperedge kAB = Hyperedge::of({Vertex::A, Vertex::B});
const Hyperedge kAC = Hyperedge::of({Vertex::A, Vertex::C});
const Hyperedge kBC = Hyperedge::of({Vertex::B, Vertex::C});
const Hyperedge kABC = Hyperedge::of({Vertex::A, Vertex::B, Vertex::C});
}  // namespace

TEST_CASE("hyperedge masks follow the A=4, B=2, C=1 convention") {
  CHECK(kA.mask() == 4);
  CHECK(kAB.mask() == 6);
  CHECK(kAC.mask() == 5);
  CHECK(kBC.mask() == 3);
  CHECK(kABC.mask() == 7);
  CHECK(kEmpty.mask() == 0);
  CHECK(kEmpty.cardinality() == 0);
  CHECK(kABC.cardinality() == 3);
  CHECK_THROWS_AS(Hyperedge{8}, std::out_of_range);
}

TEST_CASE("parse_hypergraph accepts the documented forms") {
  CHECK(parse_hypergraph("") == Hypergraph{});
  CHECK(parse_hypergraph("BC") == Hypergraph::from_edges({kBC}));
  CHECK(parse_hypergraph("CB;ABC;{}") ==
        Hypergraph::from_edges({kBC, kABC, kEmpty}));
  CHECK(parse_hypergraph("A") == Hypergraph::from_edges({kA}));
  CHECK(parse_hypergraph("{}") == Hypergraph::from_edges({kEmpty}));
  CHECK(parse_hypergraph("BAC") == Hypergraph::from_edges({kABC}));
}

TEST_CASE("parse_hypergraph rejects malformed input") {
  CHECK_THROWS_AS(parse_hypergraph("XY"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("ab"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("AA"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("ABA"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("BC;CB"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("{};{}"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("AB;"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph(";AB"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph(";"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("A B"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("A{}"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("{"), ParseError);

  // The message names the offending token.
  try {
    parse_hypergraph("AB;XY");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("XY") != std::string::npos);
  }
}

TEST_CASE("format_hypergraph emits the canonical order") {
  CHECK(format_hypergraph(Hypergraph::from_edges({kBC, kEmpty, kABC})) ==
        "{};BC;ABC");
  CHECK(format_hypergraph(Hypergraph{}) == "");
  CHECK(format_hypergraph(Hypergraph::from_edges({kAC, kAB})) == "AB;AC");
  CHECK(format_hypergraph(Hypergraph::from_edges({kABC, kA, kBC, kEmpty})) ==
        "{};A;BC;ABC");
}

TEST_CASE("parse/format round-trips on all 256 hypergraphs") {
  for (Hypergraph g : enumerate_all())
    CHECK(parse_hypergraph(format_hypergraph(g)) == g);
}

TEST_CASE("edge_sum is the symmetric difference") {
  CHECK(edge_sum(Hypergraph::from_edges({kBC}), {kBC}) == Hypergraph{});
  CHECK(edge_sum(Hypergraph::from_edges({kA}), {kBC}) ==
        Hypergraph::from_edges({kA, kBC}));
  CHECK(edge_sum(Hypergraph::from_edges({kA, kAB}), {kA, kAC}) ==
        Hypergraph::from_edges({kAB, kAC}));
}

TEST_CASE("edge_sum with the same edge set is an involution") {
  for (Hypergraph g : enumerate_all())
    for (int f = 0; f < 256; ++f) {
      const Hypergraph fs{static_cast<std::uint8_t>(f)};
      CHECK(edge_sum(edge_sum(g, fs), fs) == g);
    }
}

TEST_CASE("enumerate_all yields each hypergraph once, in order") {
  const auto all = enumerate_all();
  REQUIRE(all.size() == 256);
  CHECK(all.front() == Hypergraph{});
  std::set<std::uint8_t> seen;
  int with_complete_edge = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].edge_mask() == i);
    seen.insert(all[i].edge_mask());
    if (all[i].has_edge(kABC)) ++with_complete_edge;
  }
  CHECK(seen.size() == 256);
  CHECK(with_complete_edge == 128);
}

TEST_CASE("lu_class_of matches the structural rule on the examples") {
  CHECK(lu_class_of(parse_hypergraph("BC")) == LUClass::G1);
  CHECK(lu_class_of(parse_hypergraph("AB;AC;ABC")) == LUClass::G5);
  CHECK(lu_class_of(parse_hypergraph("A;B;C;{}")) == LUClass::G0);
  CHECK(lu_class_of(parse_hypergraph("AC")) == LUClass::G2);
  CHECK(lu_class_of(parse_hypergraph("AB")) == LUClass::G3);
  CHECK(lu_class_of(parse_hypergraph("AB;BC")) == LUClass::G4);
  // Low-cardinality edges never change the label.
  CHECK(lu_class_of(parse_hypergraph("{};A;B;C;BC")) == LUClass::G1);
}

TEST_CASE("lu_class_of partitions all 256 into the expected sizes") {
  std::array<int, 6> sizes{};
  for (Hypergraph g : enumerate_all())
    sizes[static_cast<int>(lu_class_of(g))]++;
  CHECK(sizes == std::array<int, 6>{16, 16, 16, 16, 64, 128});
}

TEST_CASE("is_graph recognizes simple undirected graphs") {
  CHECK(is_graph(parse_hypergraph("AB;BC")));
  CHECK(is_graph(Hypergraph{}));
  CHECK_FALSE(is_graph(parse_hypergraph("ABC")));
  CHECK_FALSE(is_graph(parse_hypergraph("A;BC")));
  CHECK_FALSE(is_graph(parse_hypergraph("{}")));
}

TEST_CASE("graphs never land in G5") {
  for (Hypergraph g : enumerate_all())
    if (is_graph(g)) CHECK(lu_class_of(g) != LUClass::G5);
}
