#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsim/measures.hpp"
#include "qsim/state.hpp"
#include "qsim/truth_table.hpp"

namespace qsim {

enum class Algorithm { deutsch, deutsch_jozsa, shor, grover };
enum class StepLabel { input, superposition, entanglement, interference };

/// Whether iterative traces record both sub-steps of every iteration
/// (oracle and diffusion) or only the completed iteration.
enum class Granularity { per_iteration, per_substep };

std::string to_string(Algorithm a);
std::string to_string(StepLabel l);
std::string to_string(Granularity g);
Algorithm algorithm_from_string(const std::string& name);

struct AlgorithmConfig {
    Algorithm algorithm = Algorithm::grover;
    std::size_t n = 0;                      // source register width
    std::optional<TruthTable> oracle;       // table-driven algorithms
    std::string marked;                     // inline Grover oracle
    std::size_t max_iterations = 1;
    std::optional<QubitSubset> analysis_subset; // default: first register
    Granularity granularity = Granularity::per_substep;
};

/// One recorded step: the state right after the labelled operator, entropy
/// records per qubit and for the analysis subset, and the subset's Born
/// distribution.
struct StepRecord {
    StepLabel label;
    StateVector state;
    std::vector<EntropyRecord> per_qubit;
    EntropyRecord subset;
    ProbabilityDistribution distribution;
};

struct StepTrace {
    std::size_t iteration_index = 0;
    std::vector<StepRecord> steps;
};

struct RunResult {
    std::vector<StepTrace> trace;
    std::string chosen_outcome;
    std::size_t stop_iteration = 0;
    std::string verdict;
};

/// Single-qubit promise decision: verdict "constant" or "balanced", with a
/// deterministic first-qubit outcome.
RunResult run_deutsch(const TruthTable& f,
                      const std::optional<QubitSubset>& analysis_subset = std::nullopt);

/// n-qubit promise decision via H / U_F / H(x)I. Verdict is "constant" when
/// the all-zeros first-register outcome carries more than half the weight
/// (exactly 1 or 0 under the promise).
RunResult run_deutsch_jozsa(const TruthTable& f,
                            const std::optional<QubitSubset>& analysis_subset = std::nullopt);

/// Period finding via QFT / U_F / QFT on 2n qubits. Verdict is the decimal
/// period when the output distribution has the uniform comb structure, else
/// "aperiodic".
RunResult run_shor_period(const TruthTable& f,
                          const std::optional<QubitSubset>& analysis_subset = std::nullopt);

/// Period from observed first-register peaks: 2^n / gcd(peaks, 2^n).
/// nullopt when every peak is zero (no period information).
std::optional<std::size_t> extract_period(const std::vector<std::size_t>& peaks, std::size_t n);

/// k iterations of the search loop on n source qubits plus one target
/// qubit; marked is the sought bit-string.
RunResult run_grover(std::size_t n, const std::string& marked, std::size_t iterations,
                     Granularity granularity = Granularity::per_substep,
                     const std::optional<QubitSubset>& analysis_subset = std::nullopt);

/// Runs the configured iterative algorithm for k = 0..max_iterations,
/// recording the first-register Shannon entropy per k, and stops at the
/// global minimum over the horizon (ties toward the smallest k). The chosen
/// outcome is the maximum-probability label at the stopping point.
RunResult termination_scan(const AlgorithmConfig& config);

/// Closed-form success probability sin^2((2k+1) asin(2^(-n/2))).
double grover_success_probability(std::size_t n, std::size_t k);

/// Oracle-call lower bound ((1 - p_error)/(2 pi) + 1/(pi log2 N)) sqrt(N).
double grover_lower_bound(std::size_t n_items, double p_error);

/// Scan horizon ceil(pi/4 sqrt(2^n)) + 3, covering the analytic optimum.
std::size_t default_grover_horizon(std::size_t n);

/// Holevo accessible information between the first-qubit output states of
/// f's class and the opposite class, for a first-qubit input of the given
/// purity (Tr rho^2 = (1 + w^2)/2 with mixing weight w). 1 for the ideal
/// pure input, 0 for the fully mixed one.
double holevo_deutsch_efficiency(const TruthTable& f, double input_purity = 1.0);

} // namespace qsim
