#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsim/state.hpp"
#include "qsim/truth_table.hpp"

namespace qsim {

/// Shannon entropy (bits) of the measurement distribution on the qubits in
/// t: -sum p log2 p over the diagonal of the reduced density matrix.
double shannon_subset(const StateVector& s, const QubitSubset& t);

/// von Neumann entropy (bits): -sum lambda log2 lambda over the clipped
/// eigenvalues of rho.
double von_neumann(const DensityMatrix& rho);

/// 1 - (shannon - von_neumann) / |t|, clamped to [0, 1]. Equals 1 exactly
/// when the two entropies coincide on t.
double intelligence(const StateVector& s, const QubitSubset& t);

/// Mean per-qubit Shannon-minus-von-Neumann gap over the given qubits.
double mean_noise(const StateVector& s, const QubitSubset& qubits);

/// Correlation coefficient of a single-output truth table with respect to
/// input bit j (1-based): the average over the other input bits of
/// (-1)^(f(...,0,...) + f(...,1,...)). Lies in [-1, 1]; after the oracle,
/// qubit j's von Neumann entropy is the binary entropy of (1 + alpha)/2.
double alpha_coefficient(const TruthTable& f, std::size_t j);

/// Binary entropy of the eigenvalue pair ((1+alpha)/2, (1-alpha)/2), bits.
double binary_entropy_from_alpha(double alpha);

/// Entropy of a full distribution in the given log base (default bits).
double shannon_full(const ProbabilityDistribution& p, double base = 2.0);

/// Renyi entropy of order q (q > 0, q != 1), natural log by default.
double renyi(const ProbabilityDistribution& p, double q, double base = 0.0);
double renyi(const DensityMatrix& rho, double q, double base = 0.0);

/// Tsallis entropy of order q (q > 0, q != 1).
double tsallis(const ProbabilityDistribution& p, double q);
double tsallis(const DensityMatrix& rho, double q);

/// Kullback-Leibler divergence, natural log by default. Returns +infinity
/// when the support condition fails (p puts weight where q has none).
double relative_entropy(const ProbabilityDistribution& p, const ProbabilityDistribution& q,
                        double base = 0.0);
/// Quantum relative entropy Tr rho (ln rho - ln sigma); +infinity when
/// sigma's kernel intersects rho's support.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double base = 0.0);

/// Holevo accessible-information bound S(sum p_i rho_i) - sum p_i S(rho_i)
/// in bits, for an arbitrary finite ensemble.
double holevo_accessible(const std::vector<DensityMatrix>& states,
                         const ProbabilityDistribution& priors);

/// Two Hermitian observables and the pure state they are evaluated in.
struct ObservablePair {
    ComplexMatrix a;
    ComplexMatrix b;
    StateVector state;

    ObservablePair(ComplexMatrix a, ComplexMatrix b, StateVector state);
};

/// Schroedinger-Robertson uncertainty data for one (A, B, state) triple:
///   var_a * var_b >= commutator_term + covariance^2
/// with commutator_term = |<[A,B]>|^2 / 4 and covariance the symmetrized
/// correlation <{A,B}>/2 - <A><B>. States achieving equality are the
/// intelligent states of the relation.
struct UncertaintyReport {
    double var_a;
    double var_b;
    double commutator_term;
    double covariance;
    bool is_intelligent;

    double lhs() const { return var_a * var_b; }
    double rhs() const { return commutator_term + covariance * covariance; }
    double slack() const { return lhs() - rhs(); }
};

UncertaintyReport uncertainty_check(const ObservablePair& obs);

/// Label of the most probable outcome on t; ties break toward the lowest
/// basis index.
std::string select_intelligent_state(const StateVector& s, const QubitSubset& t);

/// Per-subset entropy bundle recorded at every algorithm step.
struct EntropyRecord {
    QubitSubset subset;
    double shannon_bits = 0.0;
    double von_neumann_bits = 0.0;
    double intelligence = 1.0;
    double noise_bits = 0.0;
    std::optional<double> alpha; // single-qubit oracle diagnostic

    static EntropyRecord measure(const StateVector& s, const QubitSubset& t);
};

} // namespace qsim
