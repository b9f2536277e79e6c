#include "hyper3/measures.hpp"

#include <algorithm>
#include <cmath>

namespace hyper3 {

double entropic_measure(const StateVector& s, Vertex q) {
  const auto eigs = jacobi_eigen_sym(reduced_density_one(s, q));
  return std::clamp(eigs[1], 0.0, 0.5);
}

Mat4 spin_flip(const Mat4& rho) {
  return spin_flip_matrix * rho * spin_flip_matrix;
}

double concurrence_pair(const StateVector& s, Vertex x, Vertex y) {
  const Mat4 rho = reduced_density_pair(s, x, y);
  const Mat4 root = sqrt_psd(rho);
  // Q = sqrt(rho) S sqrt(rho) is symmetric and Q^2 = sqrt(rho) *
  // rho_tilde * sqrt(rho), so |eig(Q)| are the sqrt(l_i) directly.
  const Mat4 q = root * spin_flip_matrix * root;
  std::array<double, 4> roots = jacobi_eigen_sym(q);
  for (double& r : roots) r = std::abs(r);
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double concurrence_one_rest(const StateVector& s, Vertex q) {
  const double e2 = entropic_measure(s, q);
  return 2.0 * std::sqrt(e2 * (1.0 - e2));
}

double three_tangle(const StateVector& s) {
  // Amplitude a(i,j,k) with k the qubit-C value; slice_k(i,j) = a(i,j,k).
  const auto a = [&s](unsigned i, unsigned j, unsigned k) {
    return s[basis_index(i, j, k)];
  };
  double det0 = 0.0, det1 = 0.0, mixed = 0.0;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned i2 = 0; i2 < 2; ++i2)
      for (unsigned j = 0; j < 2; ++j)
        for (unsigned j2 = 0; j2 < 2; ++j2) {
          const double e = epsilon_tensor[i][i2] * epsilon_tensor[j][j2];
          if (e == 0.0) continue;
          det0 += e * a(i, j, 0) * a(i2, j2, 0);
          det1 += e * a(i, j, 1) * a(i2, j2, 1);
          mixed += e * a(i, j, 0) * a(i2, j2, 1);
        }
  det0 *= 0.5;
  det1 *= 0.5;
  const double hyperdet = mixed * mixed - 4.0 * det0 * det1;
  return 4.0 * std::abs(hyperdet);
}

int schmidt_measure(Hypergraph g) {
  return lu_class_of(g) == LUClass::G0 ? 0 : 1;
}

Fingerprint fingerprint(const StateVector& s) {
  Fingerprint f;
  f.e2_a = entropic_measure(s, Vertex::A);
  f.e2_b = entropic_measure(s, Vertex::B);
  f.e2_c = entropic_measure(s, Vertex::C);
  f.tau = three_tangle(s);
  f.c_ab = concurrence_pair(s, Vertex::A, Vertex::B);
  f.c_ac = concurrence_pair(s, Vertex::A, Vertex::C);
  f.c_bc = concurrence_pair(s, Vertex::B, Vertex::C);
  return f;
}

Fingerprint fingerprint(Hypergraph g) {
  return fingerprint(build_state_gates(g));
}

}  // namespace hyper3
