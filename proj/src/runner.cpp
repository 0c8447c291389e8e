#include "qsim/runner.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qsim/config.hpp"
#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::deutsch: return "deutsch";
        case Algorithm::deutsch_jozsa: return "deutsch-jozsa";
        case Algorithm::shor: return "shor";
        case Algorithm::grover: return "grover";
    }
    return "?";
}

std::string to_string(StepLabel l) {
    switch (l) {
        case StepLabel::input: return "input";
        case StepLabel::superposition: return "superposition";
        case StepLabel::entanglement: return "entanglement";
        case StepLabel::interference: return "interference";
    }
    return "?";
}

std::string to_string(Granularity g) {
    return g == Granularity::per_substep ? "substep" : "iter";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "deutsch") return Algorithm::deutsch;
    if (name == "deutsch-jozsa") return Algorithm::deutsch_jozsa;
    if (name == "shor") return Algorithm::shor;
    if (name == "grover") return Algorithm::grover;
    throw std::invalid_argument("unknown algorithm \"" + name +
                                "\" (expected deutsch, deutsch-jozsa, shor or grover)");
}

namespace {

StateVector next_state(const ComplexMatrix& gate, const StateVector& s, StepLabel label) {
    ComplexVector amps = apply(gate, s.amplitudes());
    try {
        return StateVector(s.n_qubits(), std::move(amps));
    } catch (const std::invalid_argument& e) {
        throw internal_error("state invariant violated after " + to_string(label) + ": " +
                             e.what());
    }
}

StepRecord make_record(StepLabel label, StateVector state, const QubitSubset& subset,
                       const std::vector<double>& alphas) {
    EntropyRecord subset_record = EntropyRecord::measure(state, subset);
    ProbabilityDistribution distribution = born_distribution(state, subset);
    std::vector<EntropyRecord> per_qubit;
    per_qubit.reserve(state.n_qubits());
    for (std::size_t q = 1; q <= state.n_qubits(); ++q) {
        EntropyRecord r = EntropyRecord::measure(state, QubitSubset{q});
        if (q <= alphas.size()) r.alpha = alphas[q - 1];
        per_qubit.push_back(std::move(r));
    }
    return StepRecord{label, std::move(state), std::move(per_qubit), std::move(subset_record),
                      std::move(distribution)};
}

QubitSubset first_register(std::size_t n) { return QubitSubset::range(1, n); }

QubitSubset resolve_subset(const std::optional<QubitSubset>& requested, std::size_t n_source,
                           std::size_t n_total) {
    if (requested) {
        requested->validate_for(n_total);
        return *requested;
    }
    return first_register(n_source);
}

// Single application of a superposition / oracle / interference pipeline,
// recorded as two trace groups: the prepared register (0 oracle calls) and
// the completed gate (1 call).
RunResult run_three_stage(const GatePlan& plan, const StateVector& input,
                          const QubitSubset& subset, const std::vector<double>& alphas) {
    RunResult result;
    StepTrace prepare{0, {}};
    prepare.steps.push_back(make_record(StepLabel::input, input, subset, alphas));
    StateVector state = next_state(plan.superposition, input, StepLabel::superposition);
    prepare.steps.push_back(make_record(StepLabel::superposition, state, subset, alphas));
    result.trace.push_back(std::move(prepare));

    StepTrace gate{1, {}};
    state = next_state(plan.entanglement, state, StepLabel::entanglement);
    gate.steps.push_back(make_record(StepLabel::entanglement, state, subset, alphas));
    state = next_state(plan.interference, state, StepLabel::interference);
    gate.steps.push_back(make_record(StepLabel::interference, state, subset, alphas));
    result.trace.push_back(std::move(gate));

    result.stop_iteration = 1;
    return result;
}

const StepRecord& final_step(const RunResult& result) {
    return result.trace.back().steps.back();
}

} // namespace

RunResult run_deutsch(const TruthTable& f, const std::optional<QubitSubset>& analysis_subset) {
    if (f.n_in() != 1 || f.n_out() != 1) {
        throw std::invalid_argument("single-qubit decision needs a 1-bit to 1-bit function");
    }
    const QubitSubset subset = resolve_subset(analysis_subset, 1, 2);
    const std::vector<double> alphas{alpha_coefficient(f, 1)};
    RunResult result =
        run_three_stage(deutsch_jozsa_plan(f), StateVector::basis(2, "01"), subset, alphas);
    const StepRecord& output = final_step(result);
    const QubitSubset first{1};
    result.verdict = born_distribution(output.state, first).prob(0) > 0.5 ? "constant"
                                                                          : "balanced";
    result.chosen_outcome = select_intelligent_state(output.state, first);
    return result;
}

RunResult run_deutsch_jozsa(const TruthTable& f,
                            const std::optional<QubitSubset>& analysis_subset) {
    if (f.n_out() != 1) {
        throw std::invalid_argument("decision oracle must have a single output bit");
    }
    const std::size_t n = f.n_in();
    const QubitSubset subset = resolve_subset(analysis_subset, n, n + 1);
    std::vector<double> alphas(n);
    for (std::size_t j = 1; j <= n; ++j) alphas[j - 1] = alpha_coefficient(f, j);

    RunResult result = run_three_stage(deutsch_jozsa_plan(f),
                                       StateVector::basis(n + 1, std::string(n, '0') + "1"),
                                       subset, alphas);
    const StepRecord& output = final_step(result);
    const QubitSubset first = first_register(n);
    const double p_zero = born_distribution(output.state, first).prob(0);
    result.verdict = p_zero > 0.5 ? "constant" : "balanced";
    result.chosen_outcome = select_intelligent_state(output.state, first);
    return result;
}

RunResult run_shor_period(const TruthTable& f,
                          const std::optional<QubitSubset>& analysis_subset) {
    if (f.n_in() != f.n_out()) {
        throw std::invalid_argument("period-finding oracle must map n bits to n bits");
    }
    const std::size_t n = f.n_in();
    const QubitSubset subset = resolve_subset(analysis_subset, n, 2 * n);
    RunResult result = run_three_stage(
        shor_plan(f), StateVector::basis(2 * n, std::string(2 * n, '0')), subset, {});

    // A function of period r puts the output weight uniformly on the r
    // multiples of 2^n / r. Anything else is reported, not accepted.
    const StepRecord& output = final_step(result);
    const QubitSubset first = first_register(n);
    const ProbabilityDistribution dist = born_distribution(output.state, first);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::size_t> support;
    for (std::size_t x = 0; x < dim; ++x) {
        if (dist.prob(x) > 1e-9) support.push_back(x);
    }

    std::optional<std::size_t> period;
    if (support.size() == 1 && support.front() == 0) {
        period = 1; // all weight at zero: constant f
    } else {
        period = extract_period(support, n);
    }
    bool peaked = period.has_value() && support.size() == *period;
    if (peaked) {
        const double expected = 1.0 / static_cast<double>(*period);
        for (std::size_t x : support) {
            if (std::abs(dist.prob(x) - expected) > 1e-6) peaked = false;
        }
    }
    result.verdict = peaked ? std::to_string(*period) : "aperiodic";
    result.chosen_outcome = select_intelligent_state(output.state, first);
    return result;
}

std::optional<std::size_t> extract_period(const std::vector<std::size_t>& peaks, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    std::size_t g = dim;
    bool informative = false;
    for (std::size_t x : peaks) {
        if (x >= dim) {
            throw std::invalid_argument("peak " + std::to_string(x) +
                                        " outside the first register range");
        }
        if (x != 0) {
            g = std::gcd(g, x);
            informative = true;
        }
    }
    if (!informative) return std::nullopt; // zeros carry no period information
    return dim / g;
}

namespace {

// Shared fixtures of the search loop: the XOR oracle on n+1 qubits and the
// inversion-about-average operator extended by an identity on the target.
struct GroverLoop {
    std::size_t n;
    ComplexMatrix oracle;
    ComplexMatrix diffusion_op;
    QubitSubset subset;

    GroverLoop(std::size_t n_in, const std::string& marked,
               const std::optional<QubitSubset>& requested)
        : n(n_in),
          oracle(ComplexMatrix::identity(1)),
          diffusion_op(ComplexMatrix::identity(1)),
          subset(resolve_subset(requested, n_in, n_in + 1)) {
        if (marked.size() != n) {
            throw std::invalid_argument("marked string \"" + marked + "\" does not match n = " +
                                        std::to_string(n));
        }
        const std::size_t idx = bits_to_index(marked);
        oracle = oracle_from_truth_table(TruthTable::from_function(
            n, 1, [idx](std::uint64_t x) -> std::uint64_t { return x == idx ? 1 : 0; }));
        diffusion_op = tensor_product(diffusion(n), ComplexMatrix::identity(2));
    }
};

std::string resolve_marked(const AlgorithmConfig& config) {
    if (!config.marked.empty()) return config.marked;
    if (config.oracle) {
        // Indicator-function oracle: single output bit, 1 on exactly one input.
        const TruthTable& f = *config.oracle;
        if (f.n_out() != 1) {
            throw std::invalid_argument("search oracle must have a single output bit");
        }
        std::optional<std::size_t> marked;
        for (std::size_t x = 0; x < f.domain_size(); ++x) {
            if (f.value(x) == 1) {
                if (marked) {
                    throw std::invalid_argument("search oracle marks more than one item");
                }
                marked = x;
            }
        }
        if (!marked) throw std::invalid_argument("search oracle marks no item");
        return index_to_bits(*marked, f.n_in());
    }
    throw std::invalid_argument("search needs --marked or an indicator oracle");
}

} // namespace

RunResult run_grover(std::size_t n, const std::string& marked, std::size_t iterations,
                     Granularity granularity, const std::optional<QubitSubset>& analysis_subset) {
    GroverLoop loop(n, marked, analysis_subset);
    RunResult result;

    const StateVector input = StateVector::basis(n + 1, std::string(n, '0') + "1");
    StepTrace prepare{0, {}};
    prepare.steps.push_back(make_record(StepLabel::input, input, loop.subset, {}));
    StateVector state = next_state(hadamard_power(n + 1), input, StepLabel::superposition);
    prepare.steps.push_back(make_record(StepLabel::superposition, state, loop.subset, {}));
    result.trace.push_back(std::move(prepare));

    for (std::size_t k = 1; k <= iterations; ++k) {
        StepTrace iter{k, {}};
        state = next_state(loop.oracle, state, StepLabel::entanglement);
        if (granularity == Granularity::per_substep) {
            iter.steps.push_back(make_record(StepLabel::entanglement, state, loop.subset, {}));
        }
        state = next_state(loop.diffusion_op, state, StepLabel::interference);
        iter.steps.push_back(make_record(StepLabel::interference, state, loop.subset, {}));
        result.trace.push_back(std::move(iter));
    }

    result.stop_iteration = iterations;
    result.chosen_outcome = select_intelligent_state(state, first_register(n));
    result.verdict = result.chosen_outcome;
    return result;
}

RunResult termination_scan(const AlgorithmConfig& config) {
    if (config.algorithm != Algorithm::grover) {
        throw std::invalid_argument("termination scan applies to the iterative search only");
    }
    const std::string marked = resolve_marked(config);
    const std::size_t n = config.n != 0 ? config.n : marked.size();
    const std::size_t horizon =
        config.max_iterations != 0 ? config.max_iterations : default_grover_horizon(n);
    GroverLoop loop(n, marked, config.analysis_subset);

    RunResult result;
    const StateVector input = StateVector::basis(n + 1, std::string(n, '0') + "1");
    StepTrace prepare{0, {}};
    prepare.steps.push_back(make_record(StepLabel::input, input, loop.subset, {}));
    StateVector state = next_state(hadamard_power(n + 1), input, StepLabel::superposition);
    prepare.steps.push_back(make_record(StepLabel::superposition, state, loop.subset, {}));

    double best_entropy = shannon_full(prepare.steps.back().distribution);
    std::string best_label = select_intelligent_state(state, loop.subset);
    std::size_t best_k = 0;
    result.trace.push_back(std::move(prepare));

    for (std::size_t k = 1; k <= horizon; ++k) {
        StepTrace iter{k, {}};
        state = next_state(loop.oracle, state, StepLabel::entanglement);
        if (config.granularity == Granularity::per_substep) {
            iter.steps.push_back(make_record(StepLabel::entanglement, state, loop.subset, {}));
        }
        state = next_state(loop.diffusion_op, state, StepLabel::interference);
        iter.steps.push_back(make_record(StepLabel::interference, state, loop.subset, {}));

        const double entropy = shannon_full(iter.steps.back().distribution);
        // Earliest k wins ties; improvements below 1e-12 count as ties so
        // roundoff cannot move the stopping point.
        if (entropy < best_entropy - 1e-12) {
            best_entropy = entropy;
            best_k = k;
            best_label = select_intelligent_state(state, loop.subset);
        }
        result.trace.push_back(std::move(iter));
    }

    result.stop_iteration = best_k;
    result.chosen_outcome = best_label;
    result.verdict = best_label;
    return result;
}

double grover_success_probability(std::size_t n, std::size_t k) {
    const double theta = std::asin(std::pow(2.0, -0.5 * static_cast<double>(n)));
    const double s = std::sin(static_cast<double>(2 * k + 1) * theta);
    return s * s;
}

double grover_lower_bound(std::size_t n_items, double p_error) {
    if (n_items < 2) throw std::invalid_argument("search space must have at least 2 items");
    if (p_error < 0.0 || p_error >= 1.0) {
        throw std::invalid_argument("error probability must lie in [0, 1)");
    }
    const double N = static_cast<double>(n_items);
    return ((1.0 - p_error) / (2.0 * std::numbers::pi) +
            1.0 / (std::numbers::pi * std::log2(N))) *
           std::sqrt(N);
}

std::size_t default_grover_horizon(std::size_t n) {
    const double N = std::pow(2.0, static_cast<double>(n));
    return static_cast<std::size_t>(std::ceil(std::numbers::pi / 4.0 * std::sqrt(N))) + 3;
}

double holevo_deutsch_efficiency(const TruthTable& f, double input_purity) {
    if (f.n_in() != 1 || f.n_out() != 1) {
        throw std::invalid_argument("efficiency is defined for 1-bit functions");
    }
    if (input_purity < 0.5 || input_purity > 1.0) {
        throw std::invalid_argument("single-qubit purity lies in [0.5, 1]");
    }
    // First-qubit input of the requested purity along the |+> axis:
    // rho = w |+><+| + (1 - w) I/2 with Tr rho^2 = (1 + w^2)/2.
    const double w = std::sqrt(2.0 * input_purity - 1.0);
    ComplexMatrix rho_in(2, 2);
    rho_in(0, 0) = rho_in(1, 1) = 0.5;
    rho_in(0, 1) = rho_in(1, 0) = 0.5 * w;

    // The oracle kicks the phase (-1)^g(x) back onto the first qubit.
    auto output_for = [&rho_in](const TruthTable& g) {
        ComplexMatrix phase(2, 2);
        phase(0, 0) = g.value(0) ? -1.0 : 1.0;
        phase(1, 1) = g.value(1) ? -1.0 : 1.0;
        return DensityMatrix(1, matmul(phase, matmul(rho_in, phase.adjoint())));
    };

    const TruthTable opposite =
        f.is_constant() ? TruthTable::from_function(1, 1, [](std::uint64_t x) { return x; })
                        : TruthTable::constant(1, 0);
    const std::vector<DensityMatrix> pair{output_for(f), output_for(opposite)};
    return holevo_accessible(pair, ProbabilityDistribution::from_values({0.5, 0.5}));
}

} // namespace qsim
