#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace antiq {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Default tolerances: exact constructions vs derived identities.
inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolDerived = 1e-10;
// Scale-aware PSD slack: min eig >= -kPsdSlack * dim * max|eig|.
inline constexpr double kPsdSlack = 1e-9;

bool is_hermitian(const Mat& a, double tol = kTolExact);

// Eigenvalues of a Hermitian matrix, ascending.
RVec hermitian_eigenvalues(const Mat& h);

double min_eigenvalue(const Mat& h);

// Scale-aware positive semidefiniteness test.
bool is_psd(const Mat& h, double slack = kPsdSlack);

// Square root of a Hermitian PSD matrix. Eigenvalues inside the scale-aware
// slack band are clamped to zero; genuinely negative spectrum throws.
Mat sqrt_psd(const Mat& h, double slack = kPsdSlack);

Mat kron(const Mat& a, const Mat& b);

// Row-major vectorization: v(|i><j|) = |i>|j>, i.e. v(A)[(i,j)] = A(i,j).
Vec vec_rowmajor(const Mat& a);
Mat unvec_rowmajor(const Vec& v, int rows, int cols);

// Hilbert-Schmidt inner product <A,B> = Tr(A^dag B).
cplx hs_inner(const Mat& a, const Mat& b);

// Tr(A*B) without forming the product.
cplx trace_prod(const Mat& a, const Mat& b);

// Singular values of sqrt(rho)*sqrt(sigma), descending.
RVec root_cross_singular_values(const Mat& rho, const Mat& sigma);

}  // namespace antiq
