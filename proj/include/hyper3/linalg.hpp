#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hyper3/hypergraph.hpp"
#include "hyper3/state.hpp"
#include "hyper3/tolerances.hpp"

// Self-contained fixed-size real linear algebra: 2x2 and 4x4 matrices,
// partial traces of pure three-qubit states, a cyclic Jacobi eigensolver
// for symmetric matrices, and a PSD matrix square root.

namespace hyper3 {

template <std::size_t N>
struct SquareMatrix {
  std::array<double, N * N> a{};

  constexpr double& operator()(std::size_t i, std::size_t j) {
    return a[i * N + j];
  }
  constexpr double operator()(std::size_t i, std::size_t j) const {
    return a[i * N + j];
  }

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  constexpr double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  friend constexpr bool operator==(const SquareMatrix&,
                                   const SquareMatrix&) = default;
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

template <std::size_t N>
constexpr SquareMatrix<N> operator*(const SquareMatrix<N>& l,
                                    const SquareMatrix<N>& r) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < N; ++k) s += l(i, k) * r(k, j);
      out(i, j) = s;
    }
  return out;
}

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& l, const SquareMatrix<N>& r) {
  double m = 0.0;
  for (std::size_t i = 0; i < N * N; ++i)
    m = std::max(m, std::abs(l.a[i] - r.a[i]));
  return m;
}

template <std::size_t N>
double max_asymmetry(const SquareMatrix<N>& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  return worst;
}

template <std::size_t N>
double offdiag_frobenius(const SquareMatrix<N>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;  // descending
  SquareMatrix<N> vectors;       // column k pairs with values[k]
};

// Cyclic Jacobi diagonalization of a symmetric matrix. Sweeps rotate
// every (p, q) pair until the off-diagonal Frobenius norm is below
// jacobi_offdiag_target, up to jacobi_max_sweeps sweeps. Throws
// std::invalid_argument if the input asymmetry exceeds symmetry_tol.
template <std::size_t N>
EigenSystem<N> jacobi_eigensystem(const SquareMatrix<N>& input) {
  if (max_asymmetry(input) > symmetry_tol)
    throw std::invalid_argument("jacobi_eigensystem: matrix not symmetric");

  SquareMatrix<N> m = input;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      m(i, j) = m(j, i) = 0.5 * (input(i, j) + input(j, i));

  SquareMatrix<N> v = SquareMatrix<N>::identity();
  bool converged = false;
  for (int sweep = 0; sweep < jacobi_max_sweeps; ++sweep) {
    if (offdiag_frobenius(m) < jacobi_offdiag_target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const double mpq = m(p, q);
        if (mpq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * mpq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        m(p, p) -= t * mpq;
        m(q, q) += t * mpq;
        m(p, q) = m(q, p) = 0.0;
        for (std::size_t r = 0; r < N; ++r) {
          if (r == p || r == q) continue;
          const double mrp = m(r, p), mrq = m(r, q);
          m(r, p) = m(p, r) = c * mrp - s * mrq;
          m(r, q) = m(q, r) = s * mrp + c * mrq;
        }
        for (std::size_t r = 0; r < N; ++r) {
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
  }
  if (!converged && offdiag_frobenius(m) >= jacobi_offdiag_target)
    throw std::runtime_error("jacobi_eigensystem: no convergence");

  EigenSystem<N> out;
  std::array<std::size_t, N> order;
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  for (std::size_t i = 0; i < N; ++i)  // selection sort, descending
    for (std::size_t j = i + 1; j < N; ++j)
      if (m(order[j], order[j]) > m(order[i], order[i]))
        std::swap(order[i], order[j]);
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = m(order[k], order[k]);
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

// Eigenvalues of a symmetric matrix in descending order.
template <std::size_t N>
std::array<double, N> jacobi_eigen_sym(const SquareMatrix<N>& m) {
  return jacobi_eigensystem(m).values;
}

// Symmetric PSD square root via eigendecomposition. Eigenvalues in
// [-psd_clamp_tol, 0) are clamped to 0; more negative ones are an error.
template <std::size_t N>
SquareMatrix<N> sqrt_psd(const SquareMatrix<N>& m) {
  const EigenSystem<N> es = jacobi_eigensystem(m);
  std::array<double, N> roots;
  for (std::size_t k = 0; k < N; ++k) {
    double lambda = es.values[k];
    if (lambda < -psd_clamp_tol)
      throw std::invalid_argument("sqrt_psd: matrix not PSD");
    roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < N; ++k)
        s += es.vectors(i, k) * roots[k] * es.vectors(j, k);
      out(i, j) = s;
    }
  return out;
}

// Single-qubit reduced density matrix of a pure state: the 2x2 marginal
// on q, summing out the other two qubits.
Mat2 reduced_density_one(const StateVector& s, Vertex q);

// Two-qubit reduced density matrix; rows/columns indexed 2*x_first +
// x_second with the pair in A < B < C order regardless of call order.
Mat4 reduced_density_pair(const StateVector& s, Vertex q1, Vertex q2);

inline Mat4 reduced_density_pair(const StateVector& s, VertexPair p) {
  return reduced_density_pair(s, p.first, p.second);
}

}  // namespace hyper3
