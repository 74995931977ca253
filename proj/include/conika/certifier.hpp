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
 * @file certifier.hpp
 * Conical 2-design certification. A POVM {E_α} is a conical 2-design when
 *
 *     Σ_α E_α ⊗ E_α = k_s·Π_sym + k_a·Π_asym,   k_s > k_a ≥ 0.
 *
 * The certifier projects N = Σ E⊗E onto the two subspaces, reports the
 * weights and the Frobenius residual of the decomposition, and renders
 * the verdicts. k_a = 0 (the projective case) occurs exactly when every
 * element has rank 1, which rank_profile exposes.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "complex_matrix.hpp"
#include "eigen.hpp"
#include "linalg.hpp"
#include "povm.hpp"

namespace conika {

struct DesignCertificate {
    double k_s = 0.0;
    double k_a = 0.0;
    double k_plus = 0.0;  ///< (k_s + k_a)/2
    double k_minus = 0.0; ///< (k_s − k_a)/2
    double design_residual = 0.0; ///< ‖N − k_sΠ_sym − k_aΠ_asym‖_F
    double povm_residual = 0.0;   ///< ‖ΣE − I‖_F
    bool is_conical_design = false;
    bool is_projective_design = false;
};

/// N = Σ_α E_α ⊗ E_α on H ⊗ H.
inline ComplexMatrix design_sum(const Povm &p) {
    ComplexMatrix n(p.dim * p.dim, p.dim * p.dim);
    for (const auto &e : p.elements) {
        n += tensor_product(e, e);
    }
    return n;
}

/**
 * Extract (k_s, k_a) and the decomposition residual from Σ E⊗E.
 *
 * k_s = 2·Tr(N·Π_sym)/(d(d+1)) and k_a = 2·Tr(N·Π_asym)/(d(d−1)) are the
 * orthogonal-projection coefficients; the verdict demands the residual
 * within tol, k_s − k_a > tol, and k_a ≥ −tol. The strictness margin on
 * k_s − k_a keeps a degenerate set (N ∝ I) from certifying; the slack on
 * k_a admits rounding noise only, since PSD elements force k_a ≥ 0.
 */
inline DesignCertificate certify(const Povm &p, double tol = 1e-9) {
    const std::size_t d = p.dim;
    const ComplexMatrix n = design_sum(p);
    const auto [sym, asym] = sym_asym_projectors(d);

    DesignCertificate cert;
    cert.k_s = 2.0 * trace_product(n, sym).real() /
               static_cast<double>(d * (d + 1));
    cert.k_a = 2.0 * trace_product(n, asym).real() /
               static_cast<double>(d * (d - 1));
    cert.k_plus = 0.5 * (cert.k_s + cert.k_a);
    cert.k_minus = 0.5 * (cert.k_s - cert.k_a);

    ComplexMatrix residual = n;
    residual -= sym * cx{cert.k_s, 0.0};
    residual -= asym * cx{cert.k_a, 0.0};
    cert.design_residual = residual.frobenius_norm();
    cert.povm_residual = povm_sum_residual(p);

    cert.is_conical_design = cert.design_residual <= tol &&
                             cert.k_s - cert.k_a > tol && cert.k_a >= -tol;
    cert.is_projective_design =
        cert.is_conical_design && std::abs(cert.k_a) <= tol;
    return cert;
}

/// Numerical rank of each element: eigenvalues above tol·‖E‖_F.
inline std::vector<std::size_t> rank_profile(const Povm &p, double tol = 1e-9) {
    std::vector<std::size_t> ranks;
    ranks.reserve(p.elements.size());
    for (const auto &e : p.elements) {
        const double scale = e.frobenius_norm();
        const Eigensystem eig = hermitian_eigensystem(e);
        std::size_t r = 0;
        for (const double mu : eig.eigenvalues) {
            if (mu > tol * scale) {
                ++r;
            }
        }
        ranks.push_back(r);
    }
    return ranks;
}

} // namespace conika
