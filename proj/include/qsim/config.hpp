#pragma once

#include <cstddef>

namespace qsim::config {

// Largest register the dense representation will materialize. Matrices are
// bounded by max_dim() x max_dim(). Default is 12 qubits (4096 x 4096).
std::size_t max_qubits() noexcept;
void set_max_qubits(std::size_t n);
std::size_t max_dim() noexcept;

} // namespace qsim::config

namespace qsim::tol {

// Structural certificates (unitarity, hermiticity, trace) and state
// normalization checks.
inline constexpr double structural = 1e-10;

// Eigenvalues with |lambda| at or below this are treated as exact zeros
// before any logarithm; absorbs roundoff from 2^n-dimensional products.
inline constexpr double eigen_clip = 1e-12;

// Probabilities below this contribute nothing to entropy sums.
inline constexpr double prob_floor = 1e-15;

} // namespace qsim::tol
