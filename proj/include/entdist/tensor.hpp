#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entdist/dims.hpp"

namespace entdist {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Real spectrum of a Hermitian matrix, sorted descending.
using HermitianSpectrum = std::vector<double>;

inline constexpr double kEqTol = 1e-12;    // entrywise matrix equality
inline constexpr double kHermTol = 1e-10;  // Hermiticity acceptance
inline constexpr double kEigZero = 1e-10;  // eigenvalues below this count as zero

bool approx_equal(const Matrix& a, const Matrix& b, double tol = kEqTol);
bool is_hermitian(const Matrix& m, double tol = kHermTol);

Matrix kron(const Matrix& a, const Matrix& b);

// Reduced operator on `keep` (original relative order preserved).
Matrix partial_trace(const Matrix& rho, const Dims& dims, const std::vector<int>& keep);

// Transposes the tensor factors listed in `transposed`, leaves the rest alone.
Matrix partial_transpose(const Matrix& rho, const Dims& dims, const std::vector<int>& transposed);

// Rejects non-Hermitian input. Descending order.
HermitianSpectrum hermitian_eigenvalues(const Matrix& m);

// Spectrum plus eigenvectors (columns), eigenvalues descending.
std::pair<HermitianSpectrum, Matrix> hermitian_eigensystem(const Matrix& m);

// Sum of |eigenvalue| for Hermitian m.
double trace_norm(const Matrix& m);

// (U_emb) rho (U_emb)^dagger where U_emb acts as `op` on `targets` (in the
// given order) and as identity elsewhere.
Matrix apply_local(const Matrix& rho, const Matrix& op, const std::vector<int>& targets,
                   const Dims& dims);

// State re-expressed with factor i moved to position perm[i].
std::pair<Matrix, Dims> permute_subsystems(const Matrix& rho, const Dims& dims,
                                           const std::vector<int>& perm);

// Common 2x2 blocks.
Matrix identity2();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

} // namespace entdist
