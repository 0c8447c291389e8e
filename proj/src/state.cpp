#include "qsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qsim/config.hpp"
#include "qsim/errors.hpp"
#include "qsim/kernels.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

std::string index_to_bits(std::size_t index, std::size_t width) {
    std::string bits(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((index >> (width - 1 - i)) & 1u) bits[i] = '1';
    }
    return bits;
}

std::size_t bits_to_index(const std::string& bits) {
    if (bits.empty()) throw std::invalid_argument("empty bit-string");
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bad bit-string \"" + bits + "\": expected only 0/1");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return index;
}

namespace {

void check_register_width(std::size_t n_qubits) {
    if (n_qubits == 0) throw std::invalid_argument("register must have at least one qubit");
    if (n_qubits > config::max_qubits()) {
        throw instance_too_large("register of " + std::to_string(n_qubits) +
                                 " qubits exceeds the " + std::to_string(config::max_qubits()) +
                                 "-qubit ceiling");
    }
}

// Subset indices as 0-based positions for the kernels.
std::vector<std::size_t> to_positions(const QubitSubset& t) {
    std::vector<std::size_t> pos;
    pos.reserve(t.size());
    for (std::size_t q : t.indices()) pos.push_back(q - 1);
    return pos;
}

} // namespace

StateVector::StateVector(std::size_t n_qubits, ComplexVector amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_register_width(n_qubits);
    if (amps_.dim() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("state of " + std::to_string(n_qubits) + " qubits needs " +
                                    std::to_string(std::size_t{1} << n_qubits) +
                                    " amplitudes, got " + std::to_string(amps_.dim()));
    }
    if (!amps_.is_finite()) throw std::invalid_argument("state amplitudes must be finite");
    if (std::abs(amps_.norm_squared() - 1.0) > tol::structural) {
        throw std::invalid_argument("state vector is not normalized (|norm^2 - 1| = " +
                                    std::to_string(std::abs(amps_.norm_squared() - 1.0)) + ")");
    }
}

StateVector StateVector::basis(std::size_t n_qubits, const std::string& bits) {
    check_register_width(n_qubits);
    if (bits.size() != n_qubits) {
        throw std::invalid_argument("bit-string \"" + bits + "\" does not match " +
                                    std::to_string(n_qubits) + " qubits");
    }
    ComplexVector amps(std::size_t{1} << n_qubits);
    amps[bits_to_index(bits)] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::normalized(std::size_t n_qubits, ComplexVector raw) {
    if (!raw.is_finite()) throw std::invalid_argument("state amplitudes must be finite");
    const double norm = raw.norm();
    if (norm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    for (std::size_t i = 0; i < raw.dim(); ++i) raw[i] /= norm;
    return StateVector(n_qubits, std::move(raw));
}

QubitSubset::QubitSubset(std::initializer_list<std::size_t> indices)
    : QubitSubset(std::vector<std::size_t>(indices)) {}

QubitSubset::QubitSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("qubit subset must be nonempty");
    std::sort(indices_.begin(), indices_.end());
    if (indices_.front() == 0) throw std::invalid_argument("qubit indices are 1-based");
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw std::invalid_argument("duplicate qubit index in subset");
    }
}

QubitSubset QubitSubset::range(std::size_t first, std::size_t last) {
    if (first == 0 || last < first) throw std::invalid_argument("bad qubit range");
    std::vector<std::size_t> idx(last - first + 1);
    std::iota(idx.begin(), idx.end(), first);
    return QubitSubset(std::move(idx));
}

bool QubitSubset::contains(std::size_t qubit) const {
    return std::binary_search(indices_.begin(), indices_.end(), qubit);
}

void QubitSubset::validate_for(std::size_t n_qubits) const {
    if (indices_.back() > n_qubits) {
        throw std::invalid_argument("qubit index " + std::to_string(indices_.back()) +
                                    " outside register of " + std::to_string(n_qubits) +
                                    " qubits");
    }
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    check_register_width(n_qubits);
    if (matrix_.rows() != (std::size_t{1} << n_qubits) || !matrix_.is_square()) {
        throw std::invalid_argument("density matrix of " + std::to_string(n_qubits) +
                                    " qubits must have order " +
                                    std::to_string(std::size_t{1} << n_qubits));
    }
    if (!check_density(matrix_, tol::structural)) {
        throw internal_error("density matrix invariants violated");
    }
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probabilities,
                                                 std::vector<std::string> labels)
    : p_(std::move(probabilities)), labels_(std::move(labels)) {
    if (p_.empty()) throw std::invalid_argument("distribution must have at least one outcome");
    if (p_.size() != labels_.size()) {
        throw std::invalid_argument("distribution labels do not match probabilities");
    }
    double total = 0.0;
    for (double& v : p_) {
        if (!std::isfinite(v) || v < -tol::structural) {
            throw internal_error("negative or non-finite probability");
        }
        v = std::max(v, 0.0);
        total += v;
    }
    if (std::abs(total - 1.0) > tol::structural) {
        throw internal_error("distribution does not sum to 1 (sum = " + std::to_string(total) +
                             ")");
    }
}

ProbabilityDistribution ProbabilityDistribution::over_bits(std::size_t n_bits,
                                                           std::vector<double> probabilities) {
    if (probabilities.size() != (std::size_t{1} << n_bits)) {
        throw std::invalid_argument("expected 2^" + std::to_string(n_bits) + " probabilities");
    }
    std::vector<std::string> labels(probabilities.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = index_to_bits(i, n_bits);
    return ProbabilityDistribution(std::move(probabilities), std::move(labels));
}

ProbabilityDistribution ProbabilityDistribution::from_values(std::vector<double> probabilities) {
    std::vector<std::string> labels(probabilities.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = std::to_string(i);
    return ProbabilityDistribution(std::move(probabilities), std::move(labels));
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t n_outcomes) {
    return from_values(std::vector<double>(n_outcomes, 1.0 / static_cast<double>(n_outcomes)));
}

ProbabilityDistribution born_distribution(const StateVector& s, const QubitSubset& t) {
    t.validate_for(s.n_qubits());
    const auto pos = to_positions(t);
    std::vector<double> probs(std::size_t{1} << t.size());
    kernels::marginal(s.amplitudes().span(), s.n_qubits(), pos, probs);
    return ProbabilityDistribution::over_bits(t.size(), std::move(probs));
}

DensityMatrix reduce(const StateVector& s, const QubitSubset& t) {
    t.validate_for(s.n_qubits());
    const auto pos = to_positions(t);
    const std::size_t dim = std::size_t{1} << t.size();
    ComplexMatrix rho(dim, dim);
    kernels::partial_trace(s.amplitudes().span(), s.n_qubits(), pos, rho.span());
    return DensityMatrix(t.size(), std::move(rho));
}

BranchDecomposition branch_decompose(const StateVector& s, std::size_t pivot_qubit) {
    if (pivot_qubit == 0 || pivot_qubit > s.n_qubits()) {
        throw std::invalid_argument("pivot qubit " + std::to_string(pivot_qubit) +
                                    " outside register of " + std::to_string(s.n_qubits()) +
                                    " qubits");
    }
    if (s.n_qubits() == 1) {
        // Branches over "the remaining qubits" degenerate to scalars.
        BranchDecomposition out{ComplexVector(1), ComplexVector(1), 0.0, 0.0};
        out.branch0[0] = s[0];
        out.branch1[0] = s[1];
        out.weight0 = std::norm(s[0]);
        out.weight1 = std::norm(s[1]);
        return out;
    }

    const std::size_t n = s.n_qubits();
    const std::size_t pivot_bit = std::size_t{1} << (n - pivot_qubit);
    const std::size_t sub_dim = std::size_t{1} << (n - 1);
    BranchDecomposition out{ComplexVector(sub_dim), ComplexVector(sub_dim), 0.0, 0.0};

    const std::size_t low_mask = pivot_bit - 1;
    for (std::size_t sub = 0; sub < sub_dim; ++sub) {
        // Re-insert the pivot bit position into the compressed index.
        const std::size_t high = (sub & ~low_mask) << 1;
        const std::size_t full = high | (sub & low_mask);
        out.branch0[sub] = s[full];
        out.branch1[sub] = s[full | pivot_bit];
        out.weight0 += std::norm(out.branch0[sub]);
        out.weight1 += std::norm(out.branch1[sub]);
    }
    return out;
}

} // namespace qsim
