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
 * @file witnesses.hpp
 * Entanglement witnesses built from a conical 2-design.
 *
 * With k_± = (k_s ± k_a)/2, the design operator and its partial transpose
 * take closed forms
 *
 *     N     = k₊·I + k₋·W_12,
 *     N^PT  = k₊·I + d·k₋·|Φ+⟩⟨Φ+|,
 *
 * whose extreme expectation values over product states (s±) and over all
 * pure states (e±) are known exactly:
 *
 *     N:    s⁻ = k₊,  s⁺ = k₊+k₋,  e⁻ = k₊−k₋,  e⁺ = k₊+k₋
 *     N^PT: s⁻ = k₊,  s⁺ = k₊+k₋,  e⁻ = k₊,     e⁺ = k₊+d·k₋
 *
 * N detects entanglement from below only, N^PT from above only. The
 * see-saw optimizer certifies the s± values numerically, independent of
 * the closed forms. detect_quadratic implements the nonlinear criterion
 * with bound k₋·√((1−Tr ρ₁²)(1−Tr ρ₂²)).
 *
 * Notation: some treatments write c_±(A) for the extremes over all pure
 * states and c^s_±(A) for the extremes over separable ones; those are the
 * e± and s± of this module.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#include "certifier.hpp"
#include "complex_matrix.hpp"
#include "eigen.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace conika {

struct WitnessReport {
    double s_minus_N = 0.0;
    double s_plus_N = 0.0;
    double e_minus_N = 0.0;
    double e_plus_N = 0.0;
    double s_minus_NPT = 0.0;
    double s_plus_NPT = 0.0;
    double e_minus_NPT = 0.0;
    double e_plus_NPT = 0.0;
    double numeric_s_minus_N = std::numeric_limits<double>::quiet_NaN();
    double numeric_s_plus_N = std::numeric_limits<double>::quiet_NaN();
    double numeric_s_minus_NPT = std::numeric_limits<double>::quiet_NaN();
    double numeric_s_plus_NPT = std::numeric_limits<double>::quiet_NaN();
};

struct DensityMatrix {
    std::size_t dim = 0; ///< total space dimension D
    ComplexMatrix matrix;
};

struct WitnessOperators {
    ComplexMatrix n;
    ComplexMatrix n_pt;
    ComplexMatrix witness_below; ///< N − s_N⁻·I = k₋·W_12
    ComplexMatrix witness_above; ///< s_NPT⁺·I − N^PT = k₋·(I − d|Φ+⟩⟨Φ+|)
};

namespace detail {

inline void require_design(const DesignCertificate &cert, const char *what) {
    if (!cert.is_conical_design) {
        throw std::invalid_argument(std::string(what) +
                                    ": certificate does not attest a conical 2-design");
    }
}

inline void require_density_dims(const DensityMatrix &rho, std::size_t d,
                                 const char *what) {
    if (rho.dim != d * d || rho.matrix.rows() != rho.dim ||
        rho.matrix.cols() != rho.dim) {
        throw std::invalid_argument(std::string(what) +
                                    ": density matrix must be d²×d² with d=" +
                                    std::to_string(d));
    }
}

/// Contract the second factor: out[i][k] = Σ_{j,l} A[(i,j),(k,l)] φ̄_j φ_l.
inline ComplexMatrix contract_second(const ComplexMatrix &a, const StateVector &phi) {
    const std::size_t d = phi.dim();
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            cx s = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const cx pj = std::conj(phi.amplitudes[j]);
                for (std::size_t l = 0; l < d; ++l) {
                    s += pj * a(i * d + j, k * d + l) * phi.amplitudes[l];
                }
            }
            out(i, k) = s;
        }
    }
    return out;
}

/// Contract the first factor: out[j][l] = Σ_{i,k} A[(i,j),(k,l)] ψ̄_i ψ_k.
inline ComplexMatrix contract_first(const ComplexMatrix &a, const StateVector &psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix out(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
            cx s = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                const cx pi = std::conj(psi.amplitudes[i]);
                for (std::size_t k = 0; k < d; ++k) {
                    s += pi * a(i * d + j, k * d + l) * psi.amplitudes[k];
                }
            }
            out(j, l) = s;
        }
    }
    return out;
}

inline StateVector eigvec_column(const Eigensystem &eig, std::size_t col) {
    StateVector v(eig.eigenvectors.rows());
    for (std::size_t r = 0; r < v.dim(); ++r) {
        v.amplitudes[r] = eig.eigenvectors(r, col);
    }
    return v;
}

} // namespace detail

/// Build N, N^PT and the two witness operators from a certificate.
inline WitnessOperators witness_operators(const DesignCertificate &cert,
                                          std::size_t d) {
    detail::require_design(cert, "witness_operators");
    const double kp = cert.k_plus;
    const double km = cert.k_minus;
    const ComplexMatrix id = ComplexMatrix::identity(d * d);
    const ComplexMatrix w = swap_operator(d);
    const StateVector phi = max_entangled_state(d);
    const ComplexMatrix phi_proj = outer_product(phi, phi);

    WitnessOperators ops;
    ops.n = id * cx{kp, 0.0} + w * cx{km, 0.0};
    ops.n_pt = id * cx{kp, 0.0} + phi_proj * cx{static_cast<double>(d) * km, 0.0};
    ops.witness_below = w * cx{km, 0.0};
    ops.witness_above = id * cx{km, 0.0} - phi_proj * cx{static_cast<double>(d) * km, 0.0};
    return ops;
}

/// Fill the eight analytic bounds; the numeric fields stay NaN until a
/// see-saw run supplies them.
inline WitnessReport analytic_bounds(const DesignCertificate &cert, std::size_t d) {
    detail::require_design(cert, "analytic_bounds");
    const double kp = cert.k_plus;
    const double km = cert.k_minus;
    WitnessReport r;
    r.s_minus_N = kp;
    r.s_plus_N = kp + km;
    r.e_minus_N = kp - km;
    r.e_plus_N = kp + km;
    r.s_minus_NPT = kp;
    r.s_plus_NPT = kp + km;
    r.e_minus_NPT = kp;
    r.e_plus_NPT = kp + static_cast<double>(d) * km;
    return r;
}

/// Global extremes of ⟨Ψ|A|Ψ⟩ over all pure states: the extremal
/// eigenvalues.
inline std::pair<double, double> extremal_pure(const ComplexMatrix &a) {
    if (!a.is_hermitian()) {
        throw std::invalid_argument("extremal_pure: operator is not Hermitian");
    }
    const Eigensystem eig = hermitian_eigensystem(a);
    return {eig.eigenvalues.back(), eig.eigenvalues.front()};
}

/**
 * Extremes of ⟨ψ⊗φ|A|ψ⊗φ⟩ over product states by alternating see-saw:
 * with φ fixed, A contracts to a d×d operator whose extremal eigenvector
 * is the optimal ψ, and vice versa. The objective is monotone along each
 * alternation, so every restart converges to a local extremum; restarts
 * are keyed by (seed, restart index) and reduced by min/max.
 *
 * @return {best minimum, best maximum} found
 */
inline std::pair<double, double> seesaw_extremal_product(const ComplexMatrix &a,
                                                         std::size_t d,
                                                         std::size_t restarts = 32,
                                                         std::size_t iters = 200,
                                                         std::uint64_t seed = 0) {
    if (!a.is_square() || a.rows() != d * d) {
        throw std::invalid_argument("seesaw_extremal_product: operator must be d²×d²");
    }
    if (!a.is_hermitian()) {
        throw std::invalid_argument("seesaw_extremal_product: operator is not Hermitian");
    }
    if (restarts < 1 || iters < 1) {
        throw std::invalid_argument("seesaw_extremal_product: restarts and iters must be ≥ 1");
    }

    double best_min = std::numeric_limits<double>::infinity();
    double best_max = -std::numeric_limits<double>::infinity();

    for (int mode = 0; mode < 2; ++mode) {
        const bool maximize = mode == 1;
        for (std::size_t r = 0; r < restarts; ++r) {
            StateVector psi =
                random_state_vector(d, derive_seed(seed, 4 * r + 2 * mode));
            StateVector phi =
                random_state_vector(d, derive_seed(seed, 4 * r + 2 * mode + 1));
            double objective = maximize ? -std::numeric_limits<double>::infinity()
                                        : std::numeric_limits<double>::infinity();
            for (std::size_t it = 0; it < iters; ++it) {
                const Eigensystem e1 =
                    hermitian_eigensystem(detail::contract_second(a, phi));
                psi = detail::eigvec_column(e1, maximize ? 0 : d - 1);
                const Eigensystem e2 =
                    hermitian_eigensystem(detail::contract_first(a, psi));
                phi = detail::eigvec_column(e2, maximize ? 0 : d - 1);
                const double value =
                    maximize ? e2.eigenvalues.front() : e2.eigenvalues.back();
                if (std::abs(value - objective) < 1e-12) {
                    objective = value;
                    break;
                }
                objective = value;
            }
            best_min = std::min(best_min, objective);
            best_max = std::max(best_max, objective);
        }
    }
    return {best_min, best_max};
}

/// Analytic bounds plus see-saw certification of the four s± values.
inline WitnessReport witness_report(const DesignCertificate &cert, std::size_t d,
                                    std::size_t restarts = 32, std::size_t iters = 200,
                                    std::uint64_t seed = 0) {
    WitnessReport r = analytic_bounds(cert, d);
    const WitnessOperators ops = witness_operators(cert, d);
    const auto [n_min, n_max] = seesaw_extremal_product(ops.n, d, restarts, iters,
                                                        derive_seed(seed, 101));
    const auto [pt_min, pt_max] = seesaw_extremal_product(ops.n_pt, d, restarts, iters,
                                                          derive_seed(seed, 202));
    r.numeric_s_minus_N = n_min;
    r.numeric_s_plus_N = n_max;
    r.numeric_s_minus_NPT = pt_min;
    r.numeric_s_plus_NPT = pt_max;
    return r;
}

/**
 * Linear detection: below = [Tr(ρN) < s_N⁻], above = [Tr(ρN^PT) > s_NPT⁺].
 * Either flag certifies entanglement. Comparisons carry a 1e-12 absolute
 * margin so that states sitting exactly on a bound do not flag.
 */
inline std::pair<bool, bool> detect_linear(const DensityMatrix &rho,
                                           const DesignCertificate &cert,
                                           std::size_t d) {
    detail::require_design(cert, "detect_linear");
    detail::require_density_dims(rho, d, "detect_linear");
    constexpr double margin = 1e-12;
    const WitnessOperators ops = witness_operators(cert, d);
    const double t_n = trace_product(rho.matrix, ops.n).real();
    const double t_pt = trace_product(rho.matrix, ops.n_pt).real();
    const bool below = t_n < cert.k_plus - margin;
    const bool above = t_pt > cert.k_plus + cert.k_minus + margin;
    return {below, above};
}

/**
 * Quadratic detection: entangled when either |Tr(N(ρ − ρ₁⊗ρ₂))| or
 * |Tr(N^PT(ρ − ρ₁⊗ρ₂))| exceeds k₋·√((1−Tr ρ₁²)(1−Tr ρ₂²)) by more than
 * 1e-12, with ρ₁, ρ₂ the reduced states. The inequality is non-strict on
 * separable states, so exact equality must not flag.
 */
inline bool detect_quadratic(const DensityMatrix &rho, const DesignCertificate &cert,
                             std::size_t d) {
    detail::require_design(cert, "detect_quadratic");
    detail::require_density_dims(rho, d, "detect_quadratic");
    const WitnessOperators ops = witness_operators(cert, d);
    const ComplexMatrix rho1 = partial_trace(rho.matrix, d, 2);
    const ComplexMatrix rho2 = partial_trace(rho.matrix, d, 1);
    ComplexMatrix deviation = rho.matrix;
    deviation -= tensor_product(rho1, rho2);

    const double lhs = std::max(std::abs(trace_product(ops.n, deviation).real()),
                                std::abs(trace_product(ops.n_pt, deviation).real()));
    const double purity1 = trace_product(rho1, rho1).real();
    const double purity2 = trace_product(rho2, rho2).real();
    const double bound = cert.k_minus * std::sqrt(std::max(0.0, 1.0 - purity1) *
                                                  std::max(0.0, 1.0 - purity2));
    return lhs > bound + 1e-12;
}

/// Werner state ρ_W = 2(1−p)/(d(d+1))·Π_sym + 2p/(d(d−1))·Π_asym,
/// entangled exactly when p > 1/2. Satisfies Tr(ρ_W·W_12) = 1 − 2p.
inline DensityMatrix werner_state(std::size_t d, double p) {
    if (d < 2) {
        throw std::invalid_argument("werner_state: d must be at least 2");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("werner_state: p must lie in [0,1], got " +
                                    std::to_string(p));
    }
    const auto [sym, asym] = sym_asym_projectors(d);
    DensityMatrix rho;
    rho.dim = d * d;
    rho.matrix = sym * cx{2.0 * (1.0 - p) / static_cast<double>(d * (d + 1)), 0.0} +
                 asym * cx{2.0 * p / static_cast<double>(d * (d - 1)), 0.0};
    return rho;
}

/// Mixture of `mixture` Haar-random pure states with uniform-simplex
/// weights. Full rank generically, deterministic under seed.
inline DensityMatrix random_density_matrix(std::size_t dim, std::size_t mixture,
                                           std::uint64_t seed) {
    if (dim < 2 || mixture < 1) {
        throw std::invalid_argument("random_density_matrix: need dim ≥ 2, mixture ≥ 1");
    }
    SeededRng rng(derive_seed(seed, 7));
    std::vector<double> weights(mixture);
    double total = 0.0;
    for (auto &w : weights) {
        w = -std::log(rng.uniform_positive());
        total += w;
    }
    DensityMatrix rho;
    rho.dim = dim;
    rho.matrix = ComplexMatrix(dim, dim);
    for (std::size_t k = 0; k < mixture; ++k) {
        const StateVector psi = random_state_vector(dim, derive_seed(seed, 100 + k));
        rho.matrix += outer_product(psi, psi) * cx{weights[k] / total, 0.0};
    }
    return rho;
}

} // namespace conika
