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
 * @file entanglement.hpp
 * Pure bipartite states and the probability-vector route to the
 * concurrence.
 *
 * For a POVM {E_α} and pure state |Ψ⟩ on H ⊗ H, the outcome table of the
 * product measurement is p_{α,β} = ⟨Ψ|E_α ⊗ E_β|Ψ⟩. When the POVM is a
 * conical 2-design with weights (k_s, k_a), the Euclidean norm ‖p⃗‖
 * determines the concurrence:
 *
 *     C(|Ψ⟩) = 2·√( (k_s² − ‖p⃗‖²) / (k_s² − k_a²) ),
 *
 * and ‖p⃗‖ itself is a function of the Schmidt coefficients alone:
 *
 *     ‖p⃗‖² = (k_s² + k_a²)/2 + (k_s² − k_a²)/2 · Σ_r λ_r⁴.
 *
 * The direct route C = √(2 − 2Tr(ρ²)) through the reduced density matrix
 * is provided as an independent cross-check.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "certifier.hpp"
#include "complex_matrix.hpp"
#include "eigen.hpp"
#include "linalg.hpp"
#include "povm.hpp"
#include "random.hpp"

namespace conika {

/// Pure state on H ⊗ H stored by its d×d coefficient matrix:
/// |Ψ⟩ = Σ_{ij} M[i][j] |e_i⟩ ⊗ |e_j⟩.
struct BipartiteState {
    std::size_t dim = 0;
    ComplexMatrix coefficients;

    double norm() const { return coefficients.frobenius_norm(); }
};

namespace detail {

inline void require_state(const BipartiteState &s, const char *what) {
    if (s.dim < 2 || s.coefficients.rows() != s.dim ||
        s.coefficients.cols() != s.dim) {
        throw std::invalid_argument(std::string(what) +
                                    ": coefficient matrix must be d×d with d ≥ 2");
    }
    const double n = s.norm();
    if (std::abs(n * n - 1.0) > 1e-9) {
        throw std::invalid_argument(std::string(what) +
                                    ": state is not normalized (‖M‖² = " +
                                    detail::format_double(n * n) + ")");
    }
}

} // namespace detail

/// Outcome table of the product measurement E_α ⊗ E_β together with its
/// Euclidean norm.
struct ProbabilityTable {
    std::size_t m = 0;
    std::vector<double> values; ///< row-major m×m, values[α·m + β]
    double norm = 0.0;

    double operator()(std::size_t alpha, std::size_t beta) const {
        return values[alpha * m + beta];
    }
};

/// View a d²-dimensional state vector as a bipartite coefficient matrix.
inline BipartiteState bipartite_from_vector(const StateVector &v, std::size_t d) {
    if (v.dim() != d * d) {
        throw std::invalid_argument("bipartite_from_vector: vector dimension is not d²");
    }
    BipartiteState s;
    s.dim = d;
    s.coefficients = ComplexMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            s.coefficients(i, j) = v.amplitudes[i * d + j];
        }
    }
    return s;
}

/// Coefficient matrix I/√d: all Schmidt coefficients equal.
inline BipartiteState max_entangled_bipartite(std::size_t d) {
    return bipartite_from_vector(max_entangled_state(d), d);
}

/// Haar-uniform pure bipartite state (Gaussian coefficients, normalized).
inline BipartiteState random_bipartite_state(std::size_t d, std::uint64_t seed) {
    BipartiteState s;
    s.dim = d;
    s.coefficients = ComplexMatrix(d, d);
    SeededRng rng(seed);
    for (auto &e : s.coefficients.entries()) {
        e = rng.gaussian_complex();
    }
    const double nrm = s.coefficients.frobenius_norm();
    s.coefficients *= cx{1.0 / nrm, 0.0};
    return s;
}

/// Schmidt coefficients λ_r ≥ 0 in descending order, Σλ² = 1. The λ_r²
/// are the eigenvalues of M·M†.
inline std::vector<double> schmidt_coefficients(const BipartiteState &s) {
    detail::require_state(s, "schmidt_coefficients");
    const ComplexMatrix rho = s.coefficients * s.coefficients.adjoint();
    const Eigensystem eig = hermitian_eigensystem(rho);
    std::vector<double> lambdas;
    lambdas.reserve(eig.eigenvalues.size());
    for (const double mu : eig.eigenvalues) {
        lambdas.push_back(std::sqrt(std::max(0.0, mu)));
    }
    return lambdas;
}

/**
 * p_{α,β} = ⟨Ψ|E_α ⊗ E_β|Ψ⟩ for every ordered pair of POVM elements.
 * Computed as Tr((M†E_αM) ∘ E_β) with ∘ the entrywise contraction, which
 * is the same bilinear form with the d⁴ sum factored through M once.
 */
inline ProbabilityTable probability_vector(const Povm &p, const BipartiteState &s) {
    detail::require_state(s, "probability_vector");
    if (p.dim != s.dim) {
        throw std::invalid_argument("probability_vector: POVM dimension " +
                                    std::to_string(p.dim) +
                                    " does not match state dimension " +
                                    std::to_string(s.dim));
    }
    const std::size_t m = p.size();
    const std::size_t d = p.dim;
    const ComplexMatrix m_adj = s.coefficients.adjoint();

    std::vector<ComplexMatrix> contracted;
    contracted.reserve(m);
    for (const auto &e : p.elements) {
        contracted.push_back(m_adj * e * s.coefficients);
    }

    ProbabilityTable table;
    table.m = m;
    table.values.resize(m * m);
    double sum_sq = 0.0;
    for (std::size_t alpha = 0; alpha < m; ++alpha) {
        for (std::size_t beta = 0; beta < m; ++beta) {
            cx acc = 0.0;
            const auto &a = contracted[alpha];
            const auto &f = p.elements[beta];
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t l = 0; l < d; ++l) {
                    acc += a(j, l) * f(j, l);
                }
            }
            const double value = acc.real();
            table.values[alpha * m + beta] = value;
            sum_sq += value * value;
        }
    }
    table.norm = std::sqrt(sum_sq);
    return table;
}

/// ‖p⃗‖ predicted from Schmidt data alone:
/// ‖p⃗‖² = (k_s²+k_a²)/2 + (k_s²−k_a²)/2 · Σλ⁴. Requires k_s > k_a ≥ 0
/// and Σλ² = 1.
inline double pnorm_from_schmidt(double k_s, double k_a,
                                 std::span<const double> lambdas) {
    double sum4 = 0.0;
    for (const double l : lambdas) {
        sum4 += l * l * l * l;
    }
    const double ks2 = k_s * k_s;
    const double ka2 = k_a * k_a;
    return std::sqrt(0.5 * (ks2 + ka2) + 0.5 * (ks2 - ka2) * sum4);
}

/// Concurrence through the reduced density matrix: C = √(2 − 2Tr(ρ²)),
/// ρ = M·M†. Zero exactly on product states; √(2−2/d) at maximal
/// entanglement.
inline double concurrence_oracle(const BipartiteState &s) {
    detail::require_state(s, "concurrence_oracle");
    const ComplexMatrix rho = s.coefficients * s.coefficients.adjoint();
    const double purity = trace_product(rho, rho).real();
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * purity));
}

/**
 * Concurrence from the probability-vector norm of a certified conical
 * 2-design: C = 2·√((k_s² − ‖p⃗‖²)/(k_s² − k_a²)). Product states sit on
 * the boundary ‖p⃗‖ = k_s, so radicand values in [−tol, 0] clamp to zero.
 *
 * @throws std::invalid_argument when the certificate is not a conical design
 * @throws std::domain_error when pnorm > k_s + tol or the radicand falls
 *         below −tol (the POVM/state inputs are inconsistent with a
 *         conical design)
 */
inline double design_concurrence(const DesignCertificate &cert, double pnorm,
                                 double tol = 1e-9) {
    if (!cert.is_conical_design) {
        throw std::invalid_argument(
            "design_concurrence: certificate does not attest a conical 2-design");
    }
    if (pnorm > cert.k_s + tol) {
        throw std::domain_error("design_concurrence: ‖p⃗‖ = " +
                                detail::format_double(pnorm) + " exceeds k_s = " +
                                detail::format_double(cert.k_s));
    }
    const double denom = cert.k_s * cert.k_s - cert.k_a * cert.k_a;
    double radicand = (cert.k_s * cert.k_s - pnorm * pnorm) / denom;
    if (radicand < -tol) {
        throw std::domain_error("design_concurrence: negative radicand " +
                                detail::format_double(radicand));
    }
    radicand = std::max(0.0, radicand);
    return 2.0 * std::sqrt(radicand);
}

/**
 * ‖p⃗‖ evaluated along a local unitary orbit: trial i draws Haar unitaries
 * (U_i, V_i) keyed by (seed, i) and measures the transformed state
 * (U_i ⊗ V_i)|Ψ⟩, whose coefficient matrix is U·M·Vᵀ. For a conical
 * 2-design the returned norms agree to within solver noise; for other
 * POVMs they spread.
 */
inline std::vector<double> local_unitary_orbit_norms(const Povm &p,
                                                     const BipartiteState &s,
                                                     std::size_t trials,
                                                     std::uint64_t seed) {
    detail::require_state(s, "local_unitary_orbit_norms");
    if (trials < 1) {
        throw std::invalid_argument("local_unitary_orbit_norms: trials must be ≥ 1");
    }
    std::vector<double> norms;
    norms.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        const ComplexMatrix u = haar_random_unitary(s.dim, derive_seed(seed, 2 * i));
        const ComplexMatrix v =
            haar_random_unitary(s.dim, derive_seed(seed, 2 * i + 1));
        BipartiteState moved;
        moved.dim = s.dim;
        moved.coefficients = u * s.coefficients * v.transpose();
        norms.push_back(probability_vector(p, moved).norm);
    }
    return norms;
}

} // namespace conika
