#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "qsim/complex_matrix.hpp"

// Low-level dense kernels. Every kernel computes each output element as an
// independent sum with a fixed summation order, so the parallel path is
// bit-identical to the serial one; parallelism only distributes output
// elements across threads.
namespace qsim::kernels {

enum class Exec {
    automatic, // parallel when the work size clears a threshold
    serial,
    parallel,
};

/// True when the library was compiled with OpenMP support.
bool openmp_enabled() noexcept;

/// y = M x, M is rows x cols row-major.
void matvec(std::span<const Complex> m, std::size_t rows, std::size_t cols,
            std::span<const Complex> x, std::span<Complex> y,
            Exec exec = Exec::automatic);

/// out = A B with A (ar x ac), B (ac x bc); out must hold ar*bc entries.
void matmul(std::span<const Complex> a, std::size_t ar, std::size_t ac,
            std::span<const Complex> b, std::size_t bc,
            std::span<Complex> out, Exec exec = Exec::automatic);

/// Kronecker product: out is (ar*br) x (ac*bc); block (i,j) is a(i,j)*B.
void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc,
          std::span<Complex> out, Exec exec = Exec::automatic);

/// Partial trace of |amps><amps| keeping the (0-based, ascending) qubit
/// positions in `keep`; `rho` must hold 4^keep.size() entries (row-major).
/// Qubit 0 is the most significant bit of the basis index.
void partial_trace(std::span<const Complex> amps, std::size_t n_qubits,
                   std::span<const std::size_t> keep, std::span<Complex> rho,
                   Exec exec = Exec::automatic);

/// Diagonal of the partial trace: marginal probabilities on `keep`.
void marginal(std::span<const Complex> amps, std::size_t n_qubits,
              std::span<const std::size_t> keep, std::span<double> probs,
              Exec exec = Exec::automatic);

} // namespace qsim::kernels
