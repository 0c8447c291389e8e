#pragma once

#include <string>

#include "qsim/complex_matrix.hpp"
#include "qsim/truth_table.hpp"

namespace qsim {

/// k-fold tensor power of the Walsh-Hadamard transform; order 2^k, every
/// entry is +-2^(-k/2).
ComplexMatrix hadamard_power(std::size_t k);

/// Quantum Fourier transform of order 2^n:
/// entry (i,j) = 2^(-n/2) exp(2 pi J i j / 2^n) with 0-based i, j.
ComplexMatrix qft(std::size_t n);

/// Permutation unitary for (x, y) -> (x, y XOR f(x)); order
/// 2^(n_in + n_out). Self-inverse.
ComplexMatrix oracle_from_truth_table(const TruthTable& f);

/// Diagonal +-1 oracle flipping the sign of the single marked basis state.
ComplexMatrix phase_oracle(std::size_t n, const std::string& marked);

/// Inversion about the average on n qubits: D = 2A - I with A the
/// all-entries-2^(-n) matrix. Fixes the uniform state.
ComplexMatrix diffusion(std::size_t n);

/// The three stages every algorithm gate here is composed of, applied in
/// superposition -> entanglement -> interference order.
struct GatePlan {
    ComplexMatrix superposition;
    ComplexMatrix entanglement;
    ComplexMatrix interference;
};

/// interference * entanglement * superposition. Validates that the stages
/// are unitary and dimensionally compatible.
ComplexMatrix compose_gate_plan(const GatePlan& plan);

/// H^(n+1), U_F, H^n (x) I for a single-output oracle on n inputs.
GatePlan deutsch_jozsa_plan(const TruthTable& f);

/// QFT_n (x) I_n, U_F, QFT_n (x) I_n for an n-bit to n-bit oracle.
GatePlan shor_plan(const TruthTable& f);

} // namespace qsim
