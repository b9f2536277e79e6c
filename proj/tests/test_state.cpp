#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "hyper3/state.hpp"
#include "hyper3/tolerances.hpp"

using namespace hyper3;

namespace {
const double kAmp = 1.0 / std::sqrt(8.0);

StateVector build_with_edge_order(const std::vector<Hyperedge>& order) {
  StateVector s = StateVector::uniform_plus();
  for (Hyperedge e : order) s = apply_hyperedge_gate(s, e);
  return s;
}
}  // namespace

TEST_CASE("boolean_function_of produces the edge monomials") {
  // u(x) = x_A x_B: true exactly at basis indices 6 and 7.
  CHECK(boolean_function_of(parse_hypergraph("AB")).truth_table == 0xC0);
  // u(x) = x_A x_B x_C: true only at index 7.
  CHECK(boolean_function_of(parse_hypergraph("ABC")).truth_table == 0x80);
  // The empty edge contributes the constant 1.
  CHECK(boolean_function_of(parse_hypergraph("{}")).truth_table == 0xFF);
  CHECK(boolean_function_of(Hypergraph{}).truth_table == 0x00);
  // XOR composition: {} + ABC inverts everywhere except index 7.
  CHECK(boolean_function_of(parse_hypergraph("{};ABC")).truth_table == 0x7F);
}

TEST_CASE("apply_hyperedge_gate flips exactly the covered indices") {
  const StateVector u = StateVector::uniform_plus();

  const StateVector s1 = apply_hyperedge_gate(
      u, Hyperedge::of({Vertex::A, Vertex::B, Vertex::C}));
  for (unsigned x = 0; x < state_dim; ++x)
    CHECK(s1[x] == (x == 7 ? -kAmp : kAmp));

  const StateVector s2 = apply_hyperedge_gate(u, Hyperedge::empty());
  for (unsigned x = 0; x < state_dim; ++x) CHECK(s2[x] == -kAmp);

  const StateVector s3 =
      apply_hyperedge_gate(u, Hyperedge::of({Vertex::B, Vertex::C}));
  for (unsigned x = 0; x < state_dim; ++x)
    CHECK(s3[x] == ((x == 3 || x == 7) ? -kAmp : kAmp));
}

TEST_CASE("applying a gate twice is the identity") {
  const StateVector u = StateVector::uniform_plus();
  for (std::uint8_t m = 0; m < 8; ++m) {
    const Hyperedge e{m};
    CHECK(apply_hyperedge_gate(apply_hyperedge_gate(u, e), e) == u);
  }
}

TEST_CASE("build_state_gates matches the documented sign patterns") {
  const StateVector s0 = build_state_gates(Hypergraph{});
  for (unsigned x = 0; x < state_dim; ++x) CHECK(s0[x] == kAmp);

  const StateVector s5 = build_state_gates(parse_hypergraph("ABC"));
  for (unsigned x = 0; x < state_dim; ++x)
    CHECK(s5[x] == (x == 7 ? -kAmp : kAmp));

  const StateVector se = build_state_gates(parse_hypergraph("{}"));
  for (unsigned x = 0; x < state_dim; ++x) CHECK(se[x] == -kAmp);
}

TEST_CASE("build_state_boolean matches the documented sign patterns") {
  const StateVector s1 = build_state_boolean(parse_hypergraph("BC"));
  for (unsigned x = 0; x < state_dim; ++x)
    CHECK(s1[x] == ((x == 3 || x == 7) ? -kAmp : kAmp));

  const StateVector s0 = build_state_boolean(Hypergraph{});
  for (unsigned x = 0; x < state_dim; ++x) CHECK(s0[x] == kAmp);
}

TEST_CASE("gate and boolean construction agree exactly on all 256") {
  for (Hypergraph g : enumerate_all())
    CHECK(build_state_gates(g) == build_state_boolean(g));
}

TEST_CASE("gate order is irrelevant") {
  std::mt19937 rng(20240817);
  for (Hypergraph g : enumerate_all()) {
    const StateVector reference = build_state_gates(g);
    std::vector<Hyperedge> order = g.edges();
    std::reverse(order.begin(), order.end());
    CHECK(build_with_edge_order(order) == reference);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(build_with_edge_order(order) == reference);
  }
}

TEST_CASE("every hypergraph state is normalized with amplitudes 1/(2*sqrt 2)") {
  for (Hypergraph g : enumerate_all()) {
    const StateVector s = build_state_gates(g);
    CHECK(std::abs(s.norm_squared() - 1.0) <= exact_tol);
    for (unsigned x = 0; x < state_dim; ++x)
      CHECK(std::abs(std::abs(s[x]) - kAmp) <= exact_tol);
  }
}

TEST_CASE("gate application preserves normalization") {
  StateVector s = StateVector::uniform_plus();
  for (std::uint8_t m = 0; m < 8; ++m) {
    s = apply_hyperedge_gate(s, Hyperedge{m});
    CHECK(std::abs(s.norm_squared() - 1.0) <= exact_tol);
  }
}

TEST_CASE("the empty edge contributes only a global sign") {
  for (Hypergraph g : enumerate_all()) {
    const Hypergraph flipped = edge_sum(g, {Hyperedge::empty()});
    const StateVector s1 = build_state_gates(g);
    const StateVector s2 = build_state_gates(flipped);
    CHECK(equal_up_to_global_sign(s1, s2));
    CHECK(s1 != s2);  // never equal outright, the sign always differs
  }
}

TEST_CASE("equal_up_to_global_sign distinguishes unrelated states") {
  const StateVector s = build_state_gates(parse_hypergraph("AB;BC"));
  StateVector minus = s;
  for (double& a : minus.amp) a = -a;
  CHECK(equal_up_to_global_sign(s, s));
  CHECK(equal_up_to_global_sign(s, minus));

  const StateVector g0 = build_state_gates(Hypergraph{});
  const StateVector g5 = build_state_gates(parse_hypergraph("ABC"));
  CHECK_FALSE(equal_up_to_global_sign(g0, g5));
}
