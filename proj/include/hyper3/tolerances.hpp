#pragma once

// Numeric thresholds used across the library and its test suites.
// Three tiers: exactness checks on structured inputs, iterative-solver
// outputs, and end-to-end measure comparisons.

namespace hyper3 {

// Exactness tolerance for structured quantities (normalization, trace,
// PSD checks on reduced density matrices).
inline constexpr double exact_tol = 1e-12;

// Tolerance for iterative-solver outputs (Jacobi eigenvalues, matrix
// square roots) and their defining identities.
inline constexpr double solver_tol = 1e-10;

// Absolute tolerance for entanglement-measure comparisons. All ground
// truth values are small rationals, far from this boundary.
inline constexpr double measure_tol = 1e-9;

// A measure below this threshold counts as vanishing (classification
// decisions, entangled-graph edges). The smallest nonzero ground-truth
// value is 1/4.
inline constexpr double zero_measure_threshold = 1e-9;

// Jacobi iteration: stop once the off-diagonal Frobenius norm drops
// below this, or give up after the sweep limit.
inline constexpr double jacobi_offdiag_target = 1e-14;
inline constexpr int jacobi_max_sweeps = 50;

// Maximum tolerated asymmetry of a matrix handed to the symmetric
// eigensolver.
inline constexpr double symmetry_tol = 1e-10;

// Eigenvalues of a nominally PSD matrix in [-psd_clamp_tol, 0) are
// treated as 0; anything more negative is an error.
inline constexpr double psd_clamp_tol = 1e-10;

}  // namespace hyper3
