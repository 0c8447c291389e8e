#include "qsim/gates.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsim/config.hpp"
#include "qsim/errors.hpp"
#include "qsim/linalg.hpp"
#include "qsim/state.hpp"

namespace qsim {

namespace {

void check_register(std::size_t k, const char* what) {
    if (k == 0) throw std::invalid_argument(std::string(what) + ": need at least one qubit");
    if (k > config::max_qubits()) {
        throw instance_too_large(std::string(what) + " on " + std::to_string(k) +
                                 " qubits exceeds the " + std::to_string(config::max_qubits()) +
                                 "-qubit ceiling");
    }
}

} // namespace

ComplexMatrix hadamard_power(std::size_t k) {
    check_register(k, "hadamard_power");
    const std::size_t dim = std::size_t{1} << k;
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(k));
    ComplexMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // Walsh sign (-1)^(i . j) with the bitwise dot product.
            const bool negative = (std::popcount(i & j) & 1) != 0;
            h(i, j) = negative ? -scale : scale;
        }
    }
    return h;
}

ComplexMatrix qft(std::size_t n) {
    check_register(n, "qft");
    const std::size_t dim = std::size_t{1} << n;
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(dim);
    ComplexMatrix f(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // Reduce i*j mod 2^n before multiplying to keep the angle small.
            const double angle = step * static_cast<double>((i * j) % dim);
            f(i, j) = Complex{scale * std::cos(angle), scale * std::sin(angle)};
        }
    }
    return f;
}

ComplexMatrix oracle_from_truth_table(const TruthTable& f) {
    const std::size_t total_bits = f.n_in() + f.n_out();
    check_register(total_bits, "oracle_from_truth_table");
    const std::size_t dim = std::size_t{1} << total_bits;
    const std::size_t out_mask = (std::size_t{1} << f.n_out()) - 1;
    ComplexMatrix u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t x = col >> f.n_out();
        const std::size_t y = col & out_mask;
        const std::size_t row = (x << f.n_out()) | (y ^ static_cast<std::size_t>(f.value(x)));
        u(row, col) = 1.0;
    }
    return u;
}

ComplexMatrix phase_oracle(std::size_t n, const std::string& marked) {
    check_register(n, "phase_oracle");
    if (marked.size() != n) {
        throw std::invalid_argument("marked string \"" + marked + "\" does not match " +
                                    std::to_string(n) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t target = bits_to_index(marked);
    ComplexMatrix u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        u(i, i) = (i == target) ? -1.0 : 1.0;
    }
    return u;
}

ComplexMatrix diffusion(std::size_t n) {
    check_register(n, "diffusion");
    const std::size_t dim = std::size_t{1} << n;
    const double b = 2.0 / static_cast<double>(dim);
    ComplexMatrix d(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            d(i, j) = (i == j) ? b - 1.0 : b;
        }
    }
    return d;
}

ComplexMatrix compose_gate_plan(const GatePlan& plan) {
    if (!plan.superposition.is_square() || !plan.entanglement.is_square() ||
        !plan.interference.is_square() ||
        plan.superposition.rows() != plan.entanglement.rows() ||
        plan.entanglement.rows() != plan.interference.rows()) {
        throw std::invalid_argument("gate plan stages must be square matrices of one order");
    }
    if (!check_unitary(plan.superposition) || !check_unitary(plan.entanglement) ||
        !check_unitary(plan.interference)) {
        throw std::invalid_argument("gate plan stage is not unitary");
    }
    return matmul(plan.interference, matmul(plan.entanglement, plan.superposition));
}

GatePlan deutsch_jozsa_plan(const TruthTable& f) {
    if (f.n_out() != 1) {
        throw std::invalid_argument("decision oracle must have a single output bit");
    }
    const std::size_t n = f.n_in();
    GatePlan plan;
    plan.superposition = hadamard_power(n + 1);
    plan.entanglement = oracle_from_truth_table(f);
    plan.interference = tensor_product(hadamard_power(n), ComplexMatrix::identity(2));
    return plan;
}

GatePlan shor_plan(const TruthTable& f) {
    if (f.n_in() != f.n_out()) {
        throw std::invalid_argument("period-finding oracle must map n bits to n bits");
    }
    const std::size_t n = f.n_in();
    const ComplexMatrix stage =
        tensor_product(qft(n), ComplexMatrix::identity(std::size_t{1} << n));
    GatePlan plan;
    plan.superposition = stage;
    plan.entanglement = oracle_from_truth_table(f);
    plan.interference = stage;
    return plan;
}

} // namespace qsim
