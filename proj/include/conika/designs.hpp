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
 * @file designs.hpp
 * Concrete POVM constructions:
 *
 *  - full sets of mutually unbiased bases for prime d (Ivanovic /
 *    Wootters–Fields phases for odd primes, the Pauli eigenbases for d=2),
 *  - SIC POVMs from Weyl–Heisenberg orbits of a fiducial vector, with
 *    exact built-in fiducials for d=2 and d=3,
 *  - depolarized (arbitrary-rank) variants of any POVM,
 *  - a single orthonormal basis as the standard negative control.
 */
#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "complex_matrix.hpp"
#include "linalg.hpp"
#include "povm.hpp"

namespace conika {

namespace detail {

inline bool is_prime(std::size_t n) {
    if (n < 2) {
        return false;
    }
    for (std::size_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

inline std::string format_parameter(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return buf;
}

} // namespace detail

/// Cyclic shift X: X|j⟩ = |j+1 mod d⟩.
inline ComplexMatrix shift_operator(std::size_t d) {
    ComplexMatrix x(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        x((j + 1) % d, j) = 1.0;
    }
    return x;
}

/// Clock Z = diag(ω^j), ω = exp(2πi/d).
inline ComplexMatrix clock_operator(std::size_t d) {
    ComplexMatrix z(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        z(j, j) = std::polar(1.0, 2.0 * 3.14159265358979323846 *
                                      static_cast<double>(j) /
                                      static_cast<double>(d));
    }
    return z;
}

/**
 * Full set of d+1 mutually unbiased bases for prime d, packaged as the
 * d(d+1)-element POVM of projectors each weighted 1/(d+1).
 *
 * d=2 uses the computational, X and Y eigenbases. Odd primes use the
 * computational basis plus the d bases with components
 * exp(2πi(b·j² + m·j)/d)/√d (basis b, vector m, component j).
 */
inline Povm mub_full_set(std::size_t d) {
    if (!detail::is_prime(d) || d > 13) {
        throw std::invalid_argument("mub_full_set: d must be a prime in [2,13], got " +
                                    std::to_string(d));
    }
    const double w = 1.0 / static_cast<double>(d + 1);
    Povm p;
    p.dim = d;
    p.label = "mub:d=" + std::to_string(d);

    std::vector<StateVector> vectors;
    // computational basis
    for (std::size_t m = 0; m < d; ++m) {
        StateVector v(d);
        v.amplitudes[m] = 1.0;
        vectors.push_back(std::move(v));
    }
    if (d == 2) {
        const double r = 1.0 / std::sqrt(2.0);
        vectors.push_back(StateVector{{cx{r, 0}, cx{r, 0}}});   // X +1
        vectors.push_back(StateVector{{cx{r, 0}, cx{-r, 0}}});  // X -1
        vectors.push_back(StateVector{{cx{r, 0}, cx{0, r}}});   // Y +1
        vectors.push_back(StateVector{{cx{r, 0}, cx{0, -r}}});  // Y -1
    } else {
        const double amp = 1.0 / std::sqrt(static_cast<double>(d));
        for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t m = 0; m < d; ++m) {
                StateVector v(d);
                for (std::size_t j = 0; j < d; ++j) {
                    const std::size_t phase_idx = (b * j * j + m * j) % d;
                    v.amplitudes[j] =
                        std::polar(amp, 2.0 * 3.14159265358979323846 *
                                            static_cast<double>(phase_idx) /
                                            static_cast<double>(d));
                }
                vectors.push_back(std::move(v));
            }
        }
    }
    for (const auto &v : vectors) {
        p.elements.push_back(outer_product(v, v) * cx{w, 0.0});
    }
    return p;
}

/**
 * Weyl–Heisenberg orbit of a fiducial vector: the d² operators
 * (X^j Z^k)|ψ⟩⟨ψ|(X^j Z^k)†/d. The orbit is accepted only when it is a
 * genuine SIC: elements sum to the identity within 1e-8 and all pairwise
 * overlaps satisfy |⟨ψ_i|ψ_j⟩|² = 1/(d+1) within 1e-8.
 *
 * @throws std::runtime_error reporting the equiangularity and sum residuals
 *         when the fiducial does not generate a SIC
 */
inline Povm sic_from_fiducial(const StateVector &fiducial) {
    const std::size_t d = fiducial.dim();
    if (d < 2) {
        throw std::invalid_argument("sic_from_fiducial: dimension must be at least 2");
    }
    if (!fiducial.is_normalized(1e-9)) {
        throw std::invalid_argument("sic_from_fiducial: fiducial is not normalized");
    }

    std::vector<StateVector> orbit;
    orbit.reserve(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            StateVector s(d);
            for (std::size_t l = 0; l < d; ++l) {
                const std::size_t src = (l + d - j % d) % d;
                const std::size_t phase_idx = (k * src) % d;
                s.amplitudes[l] =
                    std::polar(1.0, 2.0 * 3.14159265358979323846 *
                                        static_cast<double>(phase_idx) /
                                        static_cast<double>(d)) *
                    fiducial.amplitudes[src];
            }
            orbit.push_back(std::move(s));
        }
    }

    const double target = 1.0 / static_cast<double>(d + 1);
    double equiangularity_residual = 0.0;
    for (std::size_t a = 0; a < orbit.size(); ++a) {
        for (std::size_t b = a + 1; b < orbit.size(); ++b) {
            const double overlap = std::norm(inner_product(orbit[a], orbit[b]));
            equiangularity_residual =
                std::max(equiangularity_residual, std::abs(overlap - target));
        }
    }

    Povm p;
    p.dim = d;
    p.label = "sic-fiducial:d=" + std::to_string(d);
    const cx scale{1.0 / static_cast<double>(d), 0.0};
    for (const auto &s : orbit) {
        p.elements.push_back(outer_product(s, s) * scale);
    }
    const double sum_residual = povm_sum_residual(p);

    if (sum_residual > 1e-8 || equiangularity_residual > 1e-8) {
        throw std::runtime_error(
            "sic_from_fiducial: orbit is not a SIC POVM (equiangularity residual " +
            detail::format_double(equiangularity_residual) +
            ", sum-to-identity residual " + detail::format_double(sum_residual) + ")");
    }
    return p;
}

/// SIC POVM from the built-in exact fiducials: Bloch vector (1,1,1)/√3
/// for d=2, amplitudes (0,1,−1)/√2 for d=3.
inline Povm sic_povm(std::size_t d) {
    StateVector fiducial;
    if (d == 2) {
        const double theta = std::acos(1.0 / std::sqrt(3.0));
        fiducial = StateVector{{cx{std::cos(theta / 2.0), 0.0},
                                std::polar(std::sin(theta / 2.0),
                                           3.14159265358979323846 / 4.0)}};
    } else if (d == 3) {
        const double r = 1.0 / std::sqrt(2.0);
        fiducial = StateVector{{cx{0.0, 0.0}, cx{r, 0.0}, cx{-r, 0.0}}};
    } else {
        throw std::invalid_argument(
            "sic_povm: built-in fiducials cover d=2 and d=3 only; supply your own "
            "fiducial through sic_from_fiducial for other dimensions");
    }
    Povm p = sic_from_fiducial(fiducial);
    p.label = "sic:d=" + std::to_string(d);
    return p;
}

/**
 * Depolarize a POVM: E'_α = t·E_α + (1−t)·Tr(E_α)·I/d. The output is
 * always a POVM; applied to a conical 2-design with equal-trace elements
 * it yields a conical 2-design with strictly positive antisymmetric
 * weight for t < 1.
 */
inline Povm depolarize(const Povm &p, double t) {
    if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument("depolarize: t must lie in (0,1], got " +
                                    detail::format_parameter(t));
    }
    Povm out;
    out.dim = p.dim;
    out.label = p.label + "|depol(t=" + detail::format_parameter(t) + ")";
    const ComplexMatrix id = ComplexMatrix::identity(p.dim);
    for (const auto &e : p.elements) {
        ComplexMatrix smeared = e * cx{t, 0.0};
        const double tr = e.trace().real();
        smeared += id * cx{(1.0 - t) * tr / static_cast<double>(p.dim), 0.0};
        out.elements.push_back(std::move(smeared));
    }
    return out;
}

/// Single orthonormal basis {|e_j⟩⟨e_j|}: a valid POVM that is not a
/// conical 2-design. Negative control for the certifier.
inline Povm basis_povm(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("basis_povm: d must be at least 2");
    }
    Povm p;
    p.dim = d;
    p.label = "basis:d=" + std::to_string(d);
    for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix e(d, d);
        e(j, j) = 1.0;
        p.elements.push_back(std::move(e));
    }
    return p;
}

/**
 * Named catalogue entries for scripting: "sic", "mub", "basis", or the
 * depolarized forms "sic-depol:t=0.5" / "mub-depol:t=0.25". A leading
 * "builtin:" prefix is accepted and ignored.
 */
inline Povm builtin_design(const std::string &name, std::size_t d) {
    std::string n = name;
    if (n.rfind("builtin:", 0) == 0) {
        n = n.substr(8);
    }
    const auto parse_t = [](const std::string &s, const char *what) {
        const std::string prefix = ":t=";
        const auto pos = s.find(prefix);
        if (pos == std::string::npos) {
            throw std::invalid_argument(std::string(what) +
                                        ": expected a parameter of the form :t=0.5");
        }
        return std::stod(s.substr(pos + prefix.size()));
    };
    if (n == "sic") {
        return sic_povm(d);
    }
    if (n == "mub") {
        return mub_full_set(d);
    }
    if (n == "basis") {
        return basis_povm(d);
    }
    if (n.rfind("sic-depol", 0) == 0) {
        return depolarize(sic_povm(d), parse_t(n, "sic-depol"));
    }
    if (n.rfind("mub-depol", 0) == 0) {
        return depolarize(mub_full_set(d), parse_t(n, "mub-depol"));
    }
    throw std::invalid_argument(
        "builtin_design: unknown name \"" + name +
        "\"; valid names are sic, mub, basis, sic-depol:t=<t>, mub-depol:t=<t>");
}

} // namespace conika
