#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsim {

using Complex = std::complex<double>;

/// Dense complex vector. Entries must stay finite; dimension is fixed at
/// construction.
class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim);
    ComplexVector(std::initializer_list<Complex> entries);
    explicit ComplexVector(std::vector<Complex> entries);

    std::size_t dim() const noexcept { return data_.size(); }
    Complex& operator[](std::size_t i) { return data_[i]; }
    const Complex& operator[](std::size_t i) const { return data_[i]; }

    std::span<const Complex> span() const noexcept { return data_; }
    std::span<Complex> span() noexcept { return data_; }

    double norm() const;
    double norm_squared() const;
    bool is_finite() const;

  private:
    std::vector<Complex> data_;
};

/// Dense row-major complex matrix, 0-based indexing.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);
    /// Build from explicit rows; all rows must share one length.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> span() const noexcept { return data_; }
    std::span<Complex> span() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Eigendecomposition of a Hermitian matrix: real eigenvalues sorted
/// descending, eigenvectors as the matching columns.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Largest |entry| of a - b; both operands must share dimensions.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);

} // namespace qsim
