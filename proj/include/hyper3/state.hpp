#pragma once

#include <array>
#include <cstdint>

#include "hyper3/hypergraph.hpp"

// Construction of the three-qubit state of a hypergraph, by two routes
// that must agree exactly: applying one diagonal sign gate per hyperedge
// to the uniform superposition, and writing the sign pattern of the
// hypergraph's Boolean function directly. All amplitudes are real.

namespace hyper3 {

inline constexpr unsigned state_dim = 8;

// Basis index with qubit A most significant.
constexpr unsigned basis_index(unsigned x_a, unsigned x_b, unsigned x_c) {
  return 4 * x_a + 2 * x_b + x_c;
}

// Truth table of a 3-input Boolean function; entry at basis index x.
struct BooleanFn3 {
  std::uint8_t truth_table = 0;

  constexpr bool value(unsigned x) const { return (truth_table >> x) & 1u; }
};

// 8 real amplitudes over the computational basis, index as basis_index.
// Hypergraph states have every amplitude equal to ±1/(2√2).
struct StateVector {
  std::array<double, state_dim> amp{};

  double& operator[](unsigned i) { return amp[i]; }
  double operator[](unsigned i) const { return amp[i]; }

  double norm_squared() const {
    double n = 0.0;
    for (double a : amp) n += a * a;
    return n;
  }

  // |+>^3: all amplitudes 1/(2√2).
  static StateVector uniform_plus();

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

// The Boolean function of g: XOR over edges e of the monomial on e's
// vertices, where the empty edge contributes the constant 1.
BooleanFn3 boolean_function_of(Hypergraph g);

// Flips the sign of every amplitude whose basis index has bit 1 on all
// vertices of e. The empty edge flips every amplitude (a global sign).
StateVector apply_hyperedge_gate(const StateVector& s, Hyperedge e);

// Gate route: uniform superposition, then one gate per edge. The gates
// are diagonal, so edge order is irrelevant.
StateVector build_state_gates(Hypergraph g);

// Sign-pattern route: amplitude at x is (-1)^{u(x)} / (2√2).
StateVector build_state_boolean(Hypergraph g);

// True iff s1 = s2 or s1 = -s2 entrywise within tolerance.
bool equal_up_to_global_sign(const StateVector& s1, const StateVector& s2);

}  // namespace hyper3
