#include "hyper3/state.hpp"

#include <cmath>

#include "hyper3/tolerances.hpp"

namespace hyper3 {

StateVector StateVector::uniform_plus() {
  const double a = 1.0 / std::sqrt(8.0);
  StateVector s;
  s.amp.fill(a);
  return s;
}

BooleanFn3 boolean_function_of(Hypergraph g) {
  BooleanFn3 u;
  for (unsigned x = 0; x < state_dim; ++x) {
    unsigned bit = 0;
    for (Hyperedge e : g.edges())
      bit ^= ((x & e.mask()) == e.mask()) ? 1u : 0u;
    u.truth_table |= static_cast<std::uint8_t>(bit << x);
  }
  return u;
}

StateVector apply_hyperedge_gate(const StateVector& s, Hyperedge e) {
  StateVector out = s;
  for (unsigned x = 0; x < state_dim; ++x)
    if ((x & e.mask()) == e.mask()) out.amp[x] = -out.amp[x];
  return out;
}

StateVector build_state_gates(Hypergraph g) {
  StateVector s = StateVector::uniform_plus();
  for (Hyperedge e : g.edges()) s = apply_hyperedge_gate(s, e);
  return s;
}

StateVector build_state_boolean(Hypergraph g) {
  const BooleanFn3 u = boolean_function_of(g);
  const double a = 1.0 / std::sqrt(8.0);
  StateVector s;
  for (unsigned x = 0; x < state_dim; ++x) s.amp[x] = u.value(x) ? -a : a;
  return s;
}

bool equal_up_to_global_sign(const StateVector& s1, const StateVector& s2) {
  bool same = true, opposite = true;
  for (unsigned x = 0; x < state_dim; ++x) {
    same = same && std::abs(s1[x] - s2[x]) <= exact_tol;
    opposite = opposite && std::abs(s1[x] + s2[x]) <= exact_tol;
  }
  return same || opposite;
}

}  // namespace hyper3
