#pragma once

#include "hyper3/hypergraph.hpp"
#include "hyper3/linalg.hpp"
#include "hyper3/state.hpp"

// Entanglement measures of pure three-qubit states: local entropic
// measures, pairwise concurrence, one-vs-rest concurrence, the 3-tangle,
// and the Schmidt measure of hypergraph states. A Fingerprint packs the
// seven values that characterize one state.

namespace hyper3 {

// (E2_A, E2_B, E2_C, tau, C_AB, C_AC, C_BC).
struct Fingerprint {
  double e2_a = 0.0;
  double e2_b = 0.0;
  double e2_c = 0.0;
  double tau = 0.0;
  double c_ab = 0.0;
  double c_ac = 0.0;
  double c_bc = 0.0;

  double entropic(Vertex q) const {
    switch (q) {
      case Vertex::A: return e2_a;
      case Vertex::B: return e2_b;
      default: return e2_c;
    }
  }

  // Pairwise concurrence by canonical pair index (AB, AC, BC).
  double concurrence(int pair_index) const {
    switch (pair_index) {
      case 0: return c_ab;
      case 1: return c_ac;
      default: return c_bc;
    }
  }
};

// sigma_y (x) sigma_y: real, symmetric, self-inverse.
inline constexpr Mat4 spin_flip_matrix{{0, 0, 0, -1,   //
                                        0, 0, 1, 0,    //
                                        0, 1, 0, 0,    //
                                        -1, 0, 0, 0}};

// Antisymmetric tensor, eps[0][1] = -eps[1][0] = 1.
inline constexpr double epsilon_tensor[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};

// Smallest eigenvalue of the single-qubit reduced density matrix,
// clamped to its mathematical range [0, 1/2].
double entropic_measure(const StateVector& s, Vertex q);

// S rho S with S the spin-flip matrix (real states, so conjugation is a
// no-op).
Mat4 spin_flip(const Mat4& rho);

// Pairwise concurrence max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}
// where l_i are the eigenvalues of sqrt(rho)*rho_tilde*sqrt(rho) in
// decreasing order (the same spectrum as rho*rho_tilde). The sqrt(l_i)
// are obtained as |eigenvalues| of the symmetric matrix
// sqrt(rho)*S*sqrt(rho), whose square is that product.
double concurrence_pair(const StateVector& s, Vertex x, Vertex y);

inline double concurrence_pair(const StateVector& s, VertexPair p) {
  return concurrence_pair(s, p.first, p.second);
}

// One-vs-rest concurrence 2*sqrt(E2*(1 - E2)), equal to 2*sqrt(det rho_q).
double concurrence_one_rest(const StateVector& s, Vertex q);

// Residual tangle: 4*|hyperdeterminant| of the amplitude tensor, via
// epsilon-tensor contractions of its two C-slices. Equals
// C_{X(YZ)}^2 - C_XY^2 - C_XZ^2 at any pivot X, and is invariant under
// qubit permutations.
double three_tangle(const StateVector& s);

// Schmidt measure of the hypergraph state: 0 for the fully-product class
// G0, 1 otherwise.
int schmidt_measure(Hypergraph g);

Fingerprint fingerprint(const StateVector& s);
Fingerprint fingerprint(Hypergraph g);

}  // namespace hyper3
