#pragma once

#include "qsim/complex_matrix.hpp"
#include "qsim/config.hpp"

namespace qsim {

/// Kronecker product a (x) b. Throws instance_too_large when the result
/// would exceed the configured dimension ceiling.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product u v. Throws std::invalid_argument on a dimension
/// mismatch.
ComplexVector apply(const ComplexMatrix& u, const ComplexVector& v);

/// Matrix product a b.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.
/// Eigenvalues come back sorted descending; the reconstruction
/// V diag(lambda) V^dagger matches the input to about 1e-12 in max-abs
/// norm for well-scaled inputs. Throws std::invalid_argument when the
/// matrix is not Hermitian within `hermiticity_tol`, std::runtime_error
/// when the sweep fails to converge.
Spectrum hermitian_eig(const ComplexMatrix& m, double hermiticity_tol = tol::structural);

/// Max-abs entry of (m^dagger m - I) at most `tolerance`.
bool check_unitary(const ComplexMatrix& m, double tolerance = tol::structural);

/// Hermitian, unit trace, and eigenvalues >= -tolerance.
bool check_density(const ComplexMatrix& m, double tolerance = tol::structural);

} // namespace qsim
