#include "twr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twr/error.hpp"

namespace twr {

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMat vec(const CMat& a) {
    return a.reshaped(a.size(), 1);
}

CMat unvec(const CMat& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols)
        throw DimensionMismatch("unvec: size " + std::to_string(v.size()) + " != " +
                                std::to_string(rows) + "x" + std::to_string(cols));
    return v.reshaped(rows, cols);
}

namespace {

Eigen::SelfAdjointEigenSolver<CMat> hermitian_eigen(const CMat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("hermitian matrix must be square");
    const double scale = a.norm();
    if (scale > 0.0 && (a - a.adjoint()).norm() / scale > 1e-8)
        throw NotHermitian("matrix is not Hermitian within 1e-8");
    return Eigen::SelfAdjointEigenSolver<CMat>(a);
}

}  // namespace

CMat herm_inv_sqrt(const CMat& a, double eps) {
    const auto es = hermitian_eigen(a);
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(eps).cwiseSqrt().cwiseInverse();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

CMat herm_sqrt(const CMat& a, double eps) {
    const auto es = hermitian_eigen(a);
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(eps).cwiseSqrt();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

Eigen::FullPivLU<CMat> checked_lu(const CMat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
    Eigen::FullPivLU<CMat> lu(a);
    const double tol = 1e-12 * a.norm();
    const auto& m = lu.matrixLU();
    double min_pivot = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m.rows(); ++i) min_pivot = std::min(min_pivot, std::abs(m(i, i)));
    if (a.size() == 0 || !(min_pivot > tol)) throw Singular("matrix is singular to working precision");
    return lu;
}

}  // namespace

CMat inverse(const CMat& a) {
    return checked_lu(a).inverse();
}

CMat solve(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row mismatch");
    return checked_lu(a).solve(b);
}

CMat identity(Eigen::Index n) {
    return CMat::Identity(n, n);
}

CMat dft_matrix(Eigen::Index n) {
    CMat f(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            const double phase = -2.0 * std::numbers::pi * static_cast<double>(r * c % n) / static_cast<double>(n);
            f(r, c) = std::polar(norm, phase);
        }
    return f;
}

}  // namespace twr
