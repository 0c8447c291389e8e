#include "qsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qsim/config.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

namespace {

constexpr double kLog2 = 0.6931471805599453094; // ln 2

double log_in_base(double x, double base) {
    // base 0 selects the natural log.
    if (base == 0.0) return std::log(x);
    if (base == 2.0) return std::log2(x);
    return std::log(x) / std::log(base);
}

// -sum p log p with the 0 log 0 := 0 convention, in the given base.
double entropy_of(const std::vector<double>& p, double base) {
    double acc = 0.0;
    for (double v : p) {
        if (v > tol::prob_floor) acc -= v * log_in_base(v, base);
    }
    return std::max(acc, 0.0);
}

std::vector<double> clipped_eigenvalues(const DensityMatrix& rho) {
    std::vector<double> lambda = hermitian_eig(rho.matrix()).eigenvalues;
    for (double& v : lambda) {
        if (std::abs(v) <= tol::eigen_clip) v = 0.0;
        v = std::max(v, 0.0);
    }
    return lambda;
}

void check_order(double q) {
    if (!(q > 0.0) || q == 1.0) {
        throw std::invalid_argument("entropy order q must be positive and different from 1");
    }
}

double power_sum(const std::vector<double>& p, double q) {
    double acc = 0.0;
    for (double v : p) {
        if (v > 0.0) acc += std::pow(v, q);
    }
    return acc;
}

Complex expectation(const ComplexMatrix& op, const ComplexVector& psi) {
    const ComplexVector applied = apply(op, psi);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < psi.dim(); ++i) acc += std::conj(psi[i]) * applied[i];
    return acc;
}

} // namespace

double shannon_subset(const StateVector& s, const QubitSubset& t) {
    const ProbabilityDistribution p = born_distribution(s, t);
    return entropy_of(p.values(), 2.0);
}

double von_neumann(const DensityMatrix& rho) {
    return entropy_of(clipped_eigenvalues(rho), 2.0);
}

double intelligence(const StateVector& s, const QubitSubset& t) {
    const double gap = shannon_subset(s, t) - von_neumann(reduce(s, t));
    const double j = 1.0 - gap / static_cast<double>(t.size());
    return std::clamp(j, 0.0, 1.0);
}

double mean_noise(const StateVector& s, const QubitSubset& qubits) {
    double acc = 0.0;
    for (std::size_t q : qubits.indices()) {
        const QubitSubset single{q};
        const double gap = shannon_subset(s, single) - von_neumann(reduce(s, single));
        acc += std::max(gap, 0.0);
    }
    return acc / static_cast<double>(qubits.size());
}

double alpha_coefficient(const TruthTable& f, std::size_t j) {
    if (f.n_out() != 1) {
        throw std::invalid_argument("alpha coefficient is defined for single-output tables");
    }
    if (j == 0 || j > f.n_in()) {
        throw std::invalid_argument("qubit index " + std::to_string(j) + " outside the " +
                                    std::to_string(f.n_in()) + " input bits");
    }
    const std::size_t n = f.n_in();
    const std::size_t bit = std::size_t{1} << (n - j); // input bit j, MSB first
    const std::size_t dim = std::size_t{1} << n;
    long sum = 0;
    for (std::size_t x = 0; x < dim; ++x) {
        if (x & bit) continue; // enumerate settings of the other bits only
        const bool flip = ((f.value(x) + f.value(x | bit)) & 1u) != 0;
        sum += flip ? -1 : 1;
    }
    return static_cast<double>(sum) / static_cast<double>(dim / 2);
}

double binary_entropy_from_alpha(double alpha) {
    const double p = 0.5 * (1.0 + alpha);
    double acc = 0.0;
    if (p > tol::prob_floor) acc -= p * std::log2(p);
    if (1.0 - p > tol::prob_floor) acc -= (1.0 - p) * std::log2(1.0 - p);
    return acc;
}

double shannon_full(const ProbabilityDistribution& p, double base) {
    return entropy_of(p.values(), base);
}

double renyi(const ProbabilityDistribution& p, double q, double base) {
    check_order(q);
    return log_in_base(power_sum(p.values(), q), base) / (1.0 - q);
}

double renyi(const DensityMatrix& rho, double q, double base) {
    check_order(q);
    return log_in_base(power_sum(clipped_eigenvalues(rho), q), base) / (1.0 - q);
}

double tsallis(const ProbabilityDistribution& p, double q) {
    check_order(q);
    return (1.0 - power_sum(p.values(), q)) / (q - 1.0);
}

double tsallis(const DensityMatrix& rho, double q) {
    check_order(q);
    return (1.0 - power_sum(clipped_eigenvalues(rho), q)) / (q - 1.0);
}

double relative_entropy(const ProbabilityDistribution& p, const ProbabilityDistribution& q,
                        double base) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("relative entropy needs equal outcome counts");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double pi = p.prob(i);
        if (pi <= tol::prob_floor) continue;
        if (q.prob(i) <= tol::prob_floor) return std::numeric_limits<double>::infinity();
        acc += pi * log_in_base(pi / q.prob(i), base);
    }
    return std::max(acc, 0.0);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double base) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("relative entropy needs equal dimensions");
    }
    const Spectrum rho_spec = hermitian_eig(rho.matrix());
    const Spectrum sigma_spec = hermitian_eig(sigma.matrix());

    // Tr rho ln rho over rho's clipped spectrum.
    double tr_rho_ln_rho = 0.0;
    for (double v : rho_spec.eigenvalues) {
        if (v > tol::eigen_clip) tr_rho_ln_rho += v * std::log(v);
    }

    // Tr rho ln sigma expanded in sigma's eigenbasis; a kernel vector of
    // sigma carrying rho-weight means the divergence diverges.
    double tr_rho_ln_sigma = 0.0;
    const std::size_t dim = sigma.dim();
    for (std::size_t j = 0; j < dim; ++j) {
        ComplexVector u(dim);
        for (std::size_t i = 0; i < dim; ++i) u[i] = sigma_spec.eigenvectors(i, j);
        const double weight = expectation(rho.matrix(), u).real();
        const double mu = sigma_spec.eigenvalues[j];
        if (mu > tol::eigen_clip) {
            tr_rho_ln_sigma += weight * std::log(mu);
        } else if (weight > 1e-10) {
            return std::numeric_limits<double>::infinity();
        }
    }

    double nats = tr_rho_ln_rho - tr_rho_ln_sigma;
    nats = std::max(nats, 0.0);
    return (base == 0.0) ? nats : nats / std::log(base);
}

double holevo_accessible(const std::vector<DensityMatrix>& states,
                         const ProbabilityDistribution& priors) {
    if (states.empty()) throw std::invalid_argument("Holevo bound needs at least one state");
    if (states.size() != priors.size()) {
        throw std::invalid_argument("priors do not match the number of states");
    }
    const std::size_t dim = states.front().dim();
    ComplexMatrix average(dim, dim);
    double mean_entropy = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].dim() != dim) {
            throw std::invalid_argument("Holevo bound needs states of one dimension");
        }
        average += Complex{priors.prob(i), 0.0} * states[i].matrix();
        mean_entropy += priors.prob(i) * von_neumann(states[i]);
    }
    const double mixture_entropy = entropy_of(
        [&average] {
            std::vector<double> lambda = hermitian_eig(average).eigenvalues;
            for (double& v : lambda) v = std::max(v, 0.0);
            return lambda;
        }(),
        2.0);
    return std::max(mixture_entropy - mean_entropy, 0.0);
}

ObservablePair::ObservablePair(ComplexMatrix a_in, ComplexMatrix b_in, StateVector state_in)
    : a(std::move(a_in)), b(std::move(b_in)), state(std::move(state_in)) {
    auto hermitian = [](const ComplexMatrix& m) {
        if (!m.is_square()) return false;
        return max_abs_diff(m, m.adjoint()) <= tol::structural;
    };
    if (!hermitian(a) || !hermitian(b)) {
        throw std::invalid_argument("observables must be Hermitian");
    }
    if (a.rows() != state.dim() || b.rows() != state.dim()) {
        throw std::invalid_argument("observable dimensions do not match the state");
    }
}

UncertaintyReport uncertainty_check(const ObservablePair& obs) {
    const ComplexVector& psi = obs.state.amplitudes();
    const double mean_a = expectation(obs.a, psi).real();
    const double mean_b = expectation(obs.b, psi).real();
    const double mean_a2 = expectation(matmul(obs.a, obs.a), psi).real();
    const double mean_b2 = expectation(matmul(obs.b, obs.b), psi).real();

    const ComplexMatrix ab = matmul(obs.a, obs.b);
    const ComplexMatrix ba = matmul(obs.b, obs.a);
    const Complex mean_comm = expectation(ab - ba, psi);
    const double mean_anti = expectation(ab + ba, psi).real();

    UncertaintyReport report{};
    report.var_a = std::max(mean_a2 - mean_a * mean_a, 0.0);
    report.var_b = std::max(mean_b2 - mean_b * mean_b, 0.0);
    report.commutator_term = 0.25 * std::norm(mean_comm);
    report.covariance = 0.5 * mean_anti - mean_a * mean_b;
    report.is_intelligent = std::abs(report.slack()) <= 1e-8;
    return report;
}

std::string select_intelligent_state(const StateVector& s, const QubitSubset& t) {
    const ProbabilityDistribution p = born_distribution(s, t);
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p.prob(i) > p.prob(best)) best = i;
    }
    return p.label(best);
}

EntropyRecord EntropyRecord::measure(const StateVector& s, const QubitSubset& t) {
    EntropyRecord record{t};
    record.shannon_bits = shannon_subset(s, t);
    record.von_neumann_bits = von_neumann(reduce(s, t));
    record.noise_bits = std::max(record.shannon_bits - record.von_neumann_bits, 0.0);
    record.intelligence =
        std::clamp(1.0 - record.noise_bits / static_cast<double>(t.size()), 0.0, 1.0);
    return record;
}

} // namespace qsim
