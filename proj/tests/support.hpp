#pragma once

#include <cstdint>

#include "twr/linalg.hpp"
#include "twr/rng.hpp"

namespace twr::test {

inline RngStream stream(std::uint64_t seed, std::uint64_t id = 0) { return RngStream(seed, id); }

inline CMat random_matrix(Eigen::Index rows, Eigen::Index cols, RngStream& rng) {
    CMat m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
    return m;
}

/// Random Hermitian positive definite matrix, B B^H + shift I.
inline CMat random_hpd(Eigen::Index n, RngStream& rng, double shift = 0.5) {
    const CMat b = random_matrix(n, n, rng);
    return b * b.adjoint() + shift * CMat::Identity(n, n);
}

inline double max_abs_diff(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace twr::test
