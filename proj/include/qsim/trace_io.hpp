#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsim/runner.hpp"

namespace qsim {

/// Echo of the request that produced a document, kept so exported traces
/// are self-describing.
struct RequestEcho {
    std::string algorithm;
    std::size_t n = 0;
    std::string oracle;       // file path or inline marked string
    std::size_t iterations = 0;
    bool scan = false;
    std::vector<std::size_t> subset;
    std::string granularity;
};

/// Serialized step: entropy summaries and the subset distribution, no raw
/// amplitudes.
struct StepDocument {
    std::string label;
    std::size_t iteration = 0;
    std::vector<double> per_qubit_shannon;
    std::vector<double> per_qubit_von_neumann;
    std::vector<double> per_qubit_intelligence;
    std::vector<double> per_qubit_noise;
    std::vector<double> per_qubit_alpha; // empty unless the run records it
    std::vector<std::size_t> subset;
    double subset_shannon = 0.0;
    double subset_von_neumann = 0.0;
    double subset_intelligence = 0.0;
    double subset_noise = 0.0;
    std::map<std::string, double> distribution;
};

struct TraceDocument {
    std::string schema_version = "1";
    RequestEcho request;
    std::vector<StepDocument> steps;
    std::string verdict;
    std::size_t stop_iteration = 0;
    std::string chosen_outcome;
};

TraceDocument make_document(const RequestEcho& request, const RunResult& result);

std::string to_json_string(const TraceDocument& doc);
TraceDocument parse_document(const std::string& json_text);

/// CSV series `step,label,shannon,von_neumann,intelligence`, one row per
/// recorded step, 12 significant digits, locale-independent.
std::string emit_plot_series(const TraceDocument& doc);

/// Fixed-width text table: Step | Shannon per-qubit (sum) | vN per-qubit |
/// J_T. Deterministic across runs.
std::string render_table(const TraceDocument& doc);

/// Locale-independent shortest/fixed formatting helpers.
std::string format_double(double v, int significant_digits = 12);

} // namespace qsim
