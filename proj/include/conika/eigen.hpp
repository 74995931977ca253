// Copyright 2026 The conika authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file eigen.hpp
 * Complex Hermitian eigensolver via cyclic Jacobi rotations.
 *
 * Each rotation annihilates one off-diagonal pair with a phased Givens
 * rotation; sweeps repeat until the off-diagonal Frobenius norm drops
 * below 1e-12 · ‖A‖_F. Convergence is quadratic once the matrix is
 * nearly diagonal, so the 100-sweep cap is generous for the sizes this
 * library handles (≤ 169×169).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "complex_matrix.hpp"

namespace conika {

struct Eigensystem {
    std::vector<double> eigenvalues; ///< sorted descending
    ComplexMatrix eigenvectors;      ///< orthonormal columns, column i pairs with eigenvalues[i]
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

} // namespace detail

/**
 * Diagonalize a Hermitian matrix.
 *
 * @param a input matrix, Hermitian within hermiticity_tol (relative Frobenius)
 * @return eigenvalues in descending order with matching orthonormal columns
 * @throws std::invalid_argument if the input is not Hermitian
 * @throws std::runtime_error on non-convergence, reporting the residual
 */
inline Eigensystem hermitian_eigensystem(const ComplexMatrix &a,
                                         double hermiticity_tol = 1e-10) {
    a.require_square("hermitian_eigensystem");
    if (!a.is_hermitian(hermiticity_tol)) {
        throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian "
                                    "within tolerance");
    }

    const std::size_t n = a.rows();
    // Work on the Hermitian average so rounding asymmetry in the input
    // cannot leak into the iteration.
    ComplexMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm_a = w.frobenius_norm();
    const double target = 1e-12 * norm_a;
    constexpr int max_sweeps = 100;

    double off = detail::off_diagonal_norm(w);
    int sweep = 0;
    while (off > target && norm_a > 0.0) {
        if (++sweep > max_sweeps) {
            throw std::runtime_error(
                "hermitian_eigensystem: no convergence after 100 sweeps; "
                "off-diagonal residual " +
                detail::format_double(off));
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cx apq = w(p, q);
                const double m = std::abs(apq);
                if (m <= target / (10.0 * static_cast<double>(n))) {
                    continue;
                }
                const double alpha = w(p, p).real();
                const double gamma = w(q, q).real();
                const cx phase = apq / m; // e^{i phi}
                const double theta = (gamma - alpha) / (2.0 * m);
                const double sign_theta = theta >= 0.0 ? 1.0 : -1.0;
                const double t =
                    -sign_theta / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- J† A J with J[p][p]=c, J[p][q]=-s, J[q][p]=conj(phase)·s,
                // J[q][q]=conj(phase)·c.
                const cx phase_conj = std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cx wp = w(k, p);
                    const cx wq = w(k, q);
                    w(k, p) = c * wp + s * phase_conj * wq;
                    w(k, q) = -s * wp + c * phase_conj * wq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cx wp = w(p, k);
                    const cx wq = w(q, k);
                    w(p, k) = c * wp + s * phase * wq;
                    w(q, k) = -s * wp + c * phase * wq;
                }
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                w(p, p) = cx(w(p, p).real(), 0.0);
                w(q, q) = cx(w(q, q).real(), 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    const cx vp = v(k, p);
                    const cx vq = v(k, q);
                    v(k, p) = c * vp + s * phase_conj * vq;
                    v(k, q) = -s * vp + c * phase_conj * vq;
                }
            }
        }
        off = detail::off_diagonal_norm(w);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return w(i, i).real() > w(j, j).real();
    });

    Eigensystem result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        result.eigenvalues[c] = w(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) {
            result.eigenvectors(r, c) = v(r, order[c]);
        }
    }
    return result;
}

/// Positive semi-definite test: smallest eigenvalue ≥ −tol. Implies the
/// matrix is Hermitian.
inline bool is_psd(const ComplexMatrix &a, double tol = 1e-9) {
    if (!a.is_hermitian(std::max(tol, 1e-10))) {
        return false;
    }
    const Eigensystem eig = hermitian_eigensystem(a, std::max(tol, 1e-10));
    return eig.eigenvalues.empty() || eig.eigenvalues.back() >= -tol;
}

} // namespace conika
