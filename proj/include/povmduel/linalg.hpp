#pragma once
// Spectral decompositions and tensor-algebra primitives on CMatrix.
//
// Eigen/SVD work is done with Jacobi-type sweeps: cyclic two-sided Jacobi for
// Hermitian matrices and one-sided Jacobi for singular values. Both reduce to
// the mix2 kernel on contiguous rows, and one-sided Jacobi keeps tiny singular
// values accurate to machine precision, which the rank-deficiency scans rely
// on.

#include <cstddef>
#include <utility>
#include <vector>

#include "povmduel/cmatrix.hpp"

namespace povmduel::linalg {

struct HermitianEigenSystem {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // unitary, columns are eigenvectors
};

struct NormalEigenSystem {
  std::vector<cd> eigenvalues;
  CMatrix eigenvectors;  // unitary, columns are eigenvectors
};

// Eigendecomposition of a Hermitian matrix. The input must satisfy
// ||A - A^dagger||_F <= 1e-8 * max(1, ||A||_F); it is symmetrized as
// (A + A^dagger)/2 before the sweeps.
HermitianEigenSystem hermitian_eig(const CMatrix& a);

// Eigendecomposition of a normal matrix (used on unitaries UE). Splits A into
// commuting Hermitian parts, diagonalizes the real part and resolves each
// degenerate cluster with the imaginary part.
NormalEigenSystem normal_eig(const CMatrix& a, double normality_tol = 1e-8);

// Singular values, descending, count = min(rows, cols).
std::vector<double> svd_values(const CMatrix& a);

double trace_norm(const CMatrix& a);     // sum of singular values, square input
double operator_norm(const CMatrix& a);  // largest singular value

// Trace over the first tensor factor of a (d1*d2)x(d1*d2) matrix on
// system_1 (x) system_2; returns the d2 x d2 marginal.
CMatrix partial_trace_first(const CMatrix& a, std::size_t d1, std::size_t d2);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// |X>> with |(|i><j|)>> = |i>|j>, i.e. row-major flattening.
std::vector<cd> vectorize(const CMatrix& x);

std::vector<cd> diag_extract(const CMatrix& c);
CMatrix diag_embed(const std::vector<cd>& v);

// Hermitian PSD square root; eigenvalues below -1e-10 are an error, small
// negative ones are clipped to zero.
CMatrix matrix_sqrt_psd(const CMatrix& a);

// |A| = sqrt(A^dagger A) for Hermitian A, via eigendecomposition.
CMatrix hermitian_abs(const CMatrix& a);

}  // namespace povmduel::linalg
