#include "qsim/kernels.hpp"

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsim::kernels {

namespace {

// Work sizes below this run serially even in automatic mode; thread fan-out
// costs more than the loop at small dimensions.
constexpr std::uint64_t kParallelThreshold = 1u << 21;

bool use_parallel(Exec exec, std::uint64_t work) {
#ifdef _OPENMP
    if (exec == Exec::parallel) return true;
    if (exec == Exec::automatic) return work >= kParallelThreshold;
    return false;
#else
    (void)exec;
    (void)work;
    return false;
#endif
}

// Index maps for partial traces: entry i of the returned table is the full
// basis-index contribution of sub-index i placed on the given (0-based,
// ascending) qubit positions. Qubit 0 carries the highest bit weight.
std::vector<std::size_t> placement_table(std::span<const std::size_t> positions,
                                         std::size_t n_qubits) {
    const std::size_t k = positions.size();
    std::vector<std::size_t> table(std::size_t{1} << k, 0);
    for (std::size_t sub = 0; sub < table.size(); ++sub) {
        std::size_t full = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((sub >> (k - 1 - i)) & 1u) {
                full |= std::size_t{1} << (n_qubits - 1 - positions[i]);
            }
        }
        table[sub] = full;
    }
    return table;
}

std::vector<std::size_t> complement_positions(std::span<const std::size_t> keep,
                                              std::size_t n_qubits) {
    std::vector<std::size_t> drop;
    drop.reserve(n_qubits - keep.size());
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < n_qubits; ++pos) {
        if (next < keep.size() && keep[next] == pos) {
            ++next;
        } else {
            drop.push_back(pos);
        }
    }
    return drop;
}

} // namespace

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

void matvec(std::span<const Complex> m, std::size_t rows, std::size_t cols,
            std::span<const Complex> x, std::span<Complex> y, Exec exec) {
    const bool par = use_parallel(exec, std::uint64_t(rows) * cols);
    const std::int64_t r = static_cast<std::int64_t>(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (std::int64_t i = 0; i < r; ++i) {
        const Complex* row = m.data() + static_cast<std::size_t>(i) * cols;
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < cols; ++k) {
            acc += row[k] * x[k];
        }
        y[static_cast<std::size_t>(i)] = acc;
    }
#ifndef _OPENMP
    (void)par;
#endif
}

void matmul(std::span<const Complex> a, std::size_t ar, std::size_t ac,
            std::span<const Complex> b, std::size_t bc,
            std::span<Complex> out, Exec exec) {
    const bool par = use_parallel(exec, std::uint64_t(ar) * ac * bc);
    const std::int64_t r = static_cast<std::int64_t>(ar);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (std::int64_t i = 0; i < r; ++i) {
        Complex* out_row = out.data() + static_cast<std::size_t>(i) * bc;
        for (std::size_t j = 0; j < bc; ++j) {
            out_row[j] = Complex{0.0, 0.0};
        }
        // ikj order: cache-friendly on b while keeping the per-element
        // accumulation order fixed (k ascending), so results do not depend
        // on the thread count.
        const Complex* a_row = a.data() + static_cast<std::size_t>(i) * ac;
        for (std::size_t k = 0; k < ac; ++k) {
            const Complex aik = a_row[k];
            if (aik == Complex{0.0, 0.0}) continue;
            const Complex* b_row = b.data() + k * bc;
            for (std::size_t j = 0; j < bc; ++j) {
                out_row[j] += aik * b_row[j];
            }
        }
    }
#ifndef _OPENMP
    (void)par;
#endif
}

void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc,
          std::span<Complex> out, Exec exec) {
    const std::size_t out_cols = ac * bc;
    const bool par = use_parallel(exec, std::uint64_t(ar) * ac * br * bc);
    const std::int64_t rows = static_cast<std::int64_t>(ar * br);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (std::int64_t row = 0; row < rows; ++row) {
        const std::size_t ia = static_cast<std::size_t>(row) / br;
        const std::size_t ib = static_cast<std::size_t>(row) % br;
        const Complex* a_row = a.data() + ia * ac;
        const Complex* b_row = b.data() + ib * bc;
        Complex* out_row = out.data() + static_cast<std::size_t>(row) * out_cols;
        for (std::size_t ja = 0; ja < ac; ++ja) {
            const Complex aij = a_row[ja];
            Complex* block = out_row + ja * bc;
            for (std::size_t jb = 0; jb < bc; ++jb) {
                block[jb] = aij * b_row[jb];
            }
        }
    }
#ifndef _OPENMP
    (void)par;
#endif
}

void partial_trace(std::span<const Complex> amps, std::size_t n_qubits,
                   std::span<const std::size_t> keep, std::span<Complex> rho,
                   Exec exec) {
    const std::size_t k = keep.size();
    const std::size_t dim_keep = std::size_t{1} << k;
    const auto keep_map = placement_table(keep, n_qubits);
    const auto drop = complement_positions(keep, n_qubits);
    const auto drop_map = placement_table(drop, n_qubits);
    const std::size_t dim_drop = drop_map.size();

    const bool par = use_parallel(exec, std::uint64_t(dim_keep) * dim_keep * dim_drop);
    const std::int64_t dk = static_cast<std::int64_t>(dim_keep);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (std::int64_t a = 0; a < dk; ++a) {
        const std::size_t base_a = keep_map[static_cast<std::size_t>(a)];
        for (std::size_t b = 0; b < dim_keep; ++b) {
            const std::size_t base_b = keep_map[b];
            Complex acc{0.0, 0.0};
            for (std::size_t e = 0; e < dim_drop; ++e) {
                acc += amps[base_a + drop_map[e]] * std::conj(amps[base_b + drop_map[e]]);
            }
            rho[static_cast<std::size_t>(a) * dim_keep + b] = acc;
        }
    }
#ifndef _OPENMP
    (void)par;
#endif
}

void marginal(std::span<const Complex> amps, std::size_t n_qubits,
              std::span<const std::size_t> keep, std::span<double> probs,
              Exec exec) {
    const std::size_t k = keep.size();
    const std::size_t dim_keep = std::size_t{1} << k;
    const auto keep_map = placement_table(keep, n_qubits);
    const auto drop = complement_positions(keep, n_qubits);
    const auto drop_map = placement_table(drop, n_qubits);

    const bool par = use_parallel(exec, std::uint64_t(dim_keep) * drop_map.size());
    const std::int64_t dk = static_cast<std::int64_t>(dim_keep);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (std::int64_t a = 0; a < dk; ++a) {
        const std::size_t base = keep_map[static_cast<std::size_t>(a)];
        double acc = 0.0;
        for (const std::size_t offset : drop_map) {
            acc += std::norm(amps[base + offset]);
        }
        probs[static_cast<std::size_t>(a)] = acc;
    }
#ifndef _OPENMP
    (void)par;
#endif
}

} // namespace qsim::kernels
