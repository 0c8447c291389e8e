#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsim/complex_matrix.hpp"

namespace qsim {

/// Basis index <-> bit-string helpers. Qubit 1 is the most significant bit
/// of the index, matching left-to-right tensor order |i1 i2 ... in>.
std::string index_to_bits(std::size_t index, std::size_t width);
std::size_t bits_to_index(const std::string& bits);

/// Normalized pure state of n qubits over the computational basis.
class StateVector {
  public:
    /// Validates dim == 2^n and unit norm; unnormalized input is rejected.
    StateVector(std::size_t n_qubits, ComplexVector amplitudes);

    /// |bits>, e.g. basis(4, "0001").
    static StateVector basis(std::size_t n_qubits, const std::string& bits);

    /// Normalizes the given amplitudes first. Intended for fixtures where
    /// hand-written coefficients carry an implicit normalization factor.
    static StateVector normalized(std::size_t n_qubits, ComplexVector raw);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.dim(); }
    const ComplexVector& amplitudes() const noexcept { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

  private:
    std::size_t n_qubits_;
    ComplexVector amps_;
};

/// Subset T of qubit positions, 1-based, stored sorted ascending.
class QubitSubset {
  public:
    QubitSubset(std::initializer_list<std::size_t> indices);
    explicit QubitSubset(std::vector<std::size_t> indices);

    /// {first, first+1, ..., last}.
    static QubitSubset range(std::size_t first, std::size_t last);

    std::size_t size() const noexcept { return indices_.size(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    bool contains(std::size_t qubit) const;

    /// Throws std::invalid_argument unless every index is in [1, n_qubits].
    void validate_for(std::size_t n_qubits) const;

  private:
    std::vector<std::size_t> indices_;
};

/// Density operator on a register of `n_qubits` qubits; construction
/// enforces hermiticity, unit trace and positive semidefiniteness.
class DensityMatrix {
  public:
    DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

  private:
    std::size_t n_qubits_;
    ComplexMatrix matrix_;
};

/// Finite probability distribution with outcome labels. States produce
/// bit-string labels; ad hoc distributions fall back to decimal labels.
class ProbabilityDistribution {
  public:
    ProbabilityDistribution(std::vector<double> probabilities, std::vector<std::string> labels);

    /// Labels are bit-strings of width n_bits; probabilities.size() must be
    /// 2^n_bits.
    static ProbabilityDistribution over_bits(std::size_t n_bits, std::vector<double> probabilities);

    /// Decimal labels "0", "1", ...
    static ProbabilityDistribution from_values(std::vector<double> probabilities);

    static ProbabilityDistribution uniform(std::size_t n_outcomes);

    std::size_t size() const noexcept { return p_.size(); }
    double prob(std::size_t i) const { return p_[i]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<double>& values() const noexcept { return p_; }

  private:
    std::vector<double> p_;
    std::vector<std::string> labels_;
};

/// Marginal Born distribution over the qubits in t.
ProbabilityDistribution born_distribution(const StateVector& s, const QubitSubset& t);

/// Reduced density matrix on t: the partial trace of |s><s| over the
/// complement of t.
DensityMatrix reduce(const StateVector& s, const QubitSubset& t);

/// Unnormalized components of a state split on one qubit's value. The
/// squared norms (weights) of the two branches sum to 1.
struct BranchDecomposition {
    ComplexVector branch0; // remaining qubits, pivot fixed to 0
    ComplexVector branch1;
    double weight0;
    double weight1;
};

BranchDecomposition branch_decompose(const StateVector& s, std::size_t pivot_qubit);

} // namespace qsim
