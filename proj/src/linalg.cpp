#include "qsim/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsim/errors.hpp"
#include "qsim/kernels.hpp"

namespace qsim {

namespace config {

namespace {
std::atomic<std::size_t> g_max_qubits{12};
}

std::size_t max_qubits() noexcept { return g_max_qubits.load(); }

void set_max_qubits(std::size_t n) {
    if (n == 0 || n > 30) {
        throw std::invalid_argument("qubit ceiling must be in [1, 30]");
    }
    g_max_qubits.store(n);
}

std::size_t max_dim() noexcept { return std::size_t{1} << max_qubits(); }

} // namespace config

ComplexVector::ComplexVector(std::size_t dim) : data_(dim) {
    if (dim == 0) throw std::invalid_argument("vector dimension must be >= 1");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : data_(entries) {
    if (data_.empty()) throw std::invalid_argument("vector dimension must be >= 1");
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
    if (data_.empty()) throw std::invalid_argument("vector dimension must be >= 1");
}

double ComplexVector::norm_squared() const {
    double acc = 0.0;
    for (const Complex& c : data_) acc += std::norm(c);
    return acc;
}

double ComplexVector::norm() const { return std::sqrt(norm_squared()); }

bool ComplexVector::is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be >= 1");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    if (r == 0) throw std::invalid_argument("matrix dimensions must be >= 1");
    const std::size_t c = rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged rows in matrix literal");
        std::size_t j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in +");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in -");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& v : data_) v *= scalar;
    return *this;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch in max_abs_diff");
    }
    double worst = 0.0;
    const auto sa = a.span();
    const auto sb = b.span();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        worst = std::max(worst, std::abs(sa[i] - sb[i]));
    }
    return worst;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("vector length mismatch in max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    const std::size_t cap = config::max_dim();
    if (rows > cap || cols > cap) {
        throw instance_too_large("tensor product result " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + " exceeds the " +
                                 std::to_string(config::max_qubits()) + "-qubit ceiling");
    }
    ComplexMatrix out(rows, cols);
    kernels::kron(a.span(), a.rows(), a.cols(), b.span(), b.rows(), b.cols(), out.span());
    return out;
}

ComplexVector apply(const ComplexMatrix& u, const ComplexVector& v) {
    if (u.cols() != v.dim()) {
        throw std::invalid_argument("apply: matrix has " + std::to_string(u.cols()) +
                                    " columns but vector has dimension " +
                                    std::to_string(v.dim()));
    }
    ComplexVector out(u.rows());
    kernels::matvec(u.span(), u.rows(), u.cols(), v.span(), out.span());
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions " + std::to_string(a.cols()) +
                                    " and " + std::to_string(b.rows()) + " differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    kernels::matmul(a.span(), a.rows(), a.cols(), b.span(), b.cols(), out.span());
    return out;
}

namespace {

double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

double off_diagonal_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j) acc += std::norm(m(i, j));
        }
    }
    return std::sqrt(acc);
}

} // namespace

Spectrum hermitian_eig(const ComplexMatrix& m, double hermiticity_tol) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_eig: matrix is not square");
    if (!m.is_finite()) throw std::invalid_argument("hermitian_eig: non-finite entries");
    if (hermiticity_defect(m) > hermiticity_tol) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within tolerance");
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Exact symmetrization removes the sub-tolerance defect up front.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex{a(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
    scale = std::max(scale, off_diagonal_norm(a));
    if (scale == 0.0) scale = 1.0;

    // Cyclic Jacobi sweeps with complex rotations; quadratic convergence
    // once the off-diagonal mass is small.
    constexpr int kMaxSweeps = 64;
    const double stop = 1e-15 * scale * static_cast<double>(n);
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq <= 1e-300) continue;
                const Complex phase = a(p, q) / apq;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * apq);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex spq = s * phase;

                // Right multiply by J: columns p and q of A and V.
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(spq) * aiq;
                    a(i, q) = spq * aip + c * aiq;
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = c * vip - std::conj(spq) * viq;
                    v(i, q) = spq * vip + c * viq;
                }
                // Left multiply by J^dagger: rows p and q of A.
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = c * apj - spq * aqj;
                    a(q, j) = std::conj(spq) * apj + c * aqj;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
            }
        }
    }
    if (sweep == kMaxSweeps && off_diagonal_norm(a) > 1e-10 * scale * static_cast<double>(n)) {
        throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        spec.eigenvalues[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) {
            spec.eigenvectors(row, col) = v(row, order[col]);
        }
    }
    return spec;
}

bool check_unitary(const ComplexMatrix& m, double tolerance) {
    if (!m.is_square()) throw std::invalid_argument("check_unitary: matrix is not square");
    if (!m.is_finite()) return false;
    const ComplexMatrix gram = matmul(m.adjoint(), m);
    return max_abs_diff(gram, ComplexMatrix::identity(m.rows())) <= tolerance;
}

bool check_density(const ComplexMatrix& m, double tolerance) {
    if (!m.is_square()) throw std::invalid_argument("check_density: matrix is not square");
    if (!m.is_finite()) return false;
    if (hermiticity_defect(m) > tolerance) return false;
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > tolerance) return false;
    const Spectrum spec = hermitian_eig(m, tolerance);
    return spec.eigenvalues.empty() || spec.eigenvalues.back() >= -tolerance;
}

} // namespace qsim
