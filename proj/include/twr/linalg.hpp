#pragma once

#include <complex>

#include <Eigen/Dense>

namespace twr {

using cplx = std::complex<double>;

/// Dense complex matrix. Column-major storage, so vec() is a reshape.
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Kronecker product, dims (a.rows*b.rows, a.cols*b.cols).
CMat kron(const CMat& a, const CMat& b);

/// Stacks the columns of `a` top to bottom into a (rows*cols) x 1 vector.
CMat vec(const CMat& a);

/// Inverse of vec(): reshapes a column vector into rows x cols.
CMat unvec(const CMat& v, Eigen::Index rows, Eigen::Index cols);

/// Hermitian inverse square root through an eigendecomposition, eigenvalues
/// clamped to at least `eps`. Throws NotHermitian when the relative
/// Hermitian defect exceeds 1e-8.
CMat herm_inv_sqrt(const CMat& a, double eps = 1e-12);

/// Hermitian square root, same conventions as herm_inv_sqrt.
CMat herm_sqrt(const CMat& a, double eps = 0.0);

/// Inverse by fully pivoted LU. Throws Singular when the smallest pivot
/// falls below 1e-12 * ||a||_F.
CMat inverse(const CMat& a);

/// Solves a x = b with the same singularity rule as inverse().
CMat solve(const CMat& a, const CMat& b);

inline CMat conj_transpose(const CMat& a) { return a.adjoint(); }
inline cplx trace(const CMat& a) { return a.trace(); }
inline double frobenius_norm(const CMat& a) { return a.norm(); }

CMat identity(Eigen::Index n);

/// Normalized n x n DFT matrix, F F^H = I.
CMat dft_matrix(Eigen::Index n);

}  // namespace twr
