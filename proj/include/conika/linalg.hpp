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
 * @file linalg.hpp
 * Tensor-structure operations on H ⊗ H plus the canonical operators the
 * library is built around: the swap W_12, the symmetric/antisymmetric
 * projectors, and the maximally entangled state.
 *
 * A bipartite index (i,j) maps to the flat row i·d + j throughout.
 */
#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "complex_matrix.hpp"

namespace conika {

/// Kronecker product. (a ⊗ b)[i·p+k][j·q+l] = a[i][j] · b[k][l] for b of
/// shape p×q.
inline ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cx aij = a(i, j);
            if (aij == cx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

namespace detail {

inline void require_bipartite(const ComplexMatrix &a, std::size_t d, const char *what) {
    if (d < 1 || !a.is_square() || a.rows() != d * d) {
        throw std::invalid_argument(std::string(what) + ": matrix must be d²×d² with d=" +
                                    std::to_string(d) + ", got " +
                                    std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()));
    }
}

} // namespace detail

/// Transpose on the second tensor factor relative to the computational
/// basis: out[(i,l),(k,j)] = a[(i,j),(k,l)].
inline ComplexMatrix partial_transpose(const ComplexMatrix &a, std::size_t d) {
    detail::require_bipartite(a, d, "partial_transpose");
    ComplexMatrix out(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    out(i * d + l, k * d + j) = a(i * d + j, k * d + l);
                }
            }
        }
    }
    return out;
}

/// Trace out one factor of a d²×d² operator. subsystem selects the factor
/// that is traced away (1 or 2); the returned d×d operator acts on the
/// remaining factor.
inline ComplexMatrix partial_trace(const ComplexMatrix &a, std::size_t d,
                                   int subsystem) {
    detail::require_bipartite(a, d, "partial_trace");
    if (subsystem != 1 && subsystem != 2) {
        throw std::invalid_argument("partial_trace: subsystem must be 1 or 2");
    }
    ComplexMatrix out(d, d);
    if (subsystem == 2) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                cx s = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    s += a(i * d + j, k * d + j);
                }
                out(i, k) = s;
            }
        }
    } else {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                cx s = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    s += a(i * d + j, i * d + l);
                }
                out(j, l) = s;
            }
        }
    }
    return out;
}

/// Swap unitary W_12 on H ⊗ H: W(x ⊗ y) = y ⊗ x.
inline ComplexMatrix swap_operator(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("swap_operator: d must be at least 2");
    }
    ComplexMatrix w(d * d, d * d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            w(l * d + k, k * d + l) = 1.0;
        }
    }
    return w;
}

/// Projectors onto the symmetric and antisymmetric subspaces:
/// Π_sym = (I + W_12)/2 and Π_asym = (I − W_12)/2.
inline std::pair<ComplexMatrix, ComplexMatrix> sym_asym_projectors(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("sym_asym_projectors: d must be at least 2");
    }
    const ComplexMatrix w = swap_operator(d);
    const ComplexMatrix id = ComplexMatrix::identity(d * d);
    ComplexMatrix sym = id;
    sym += w;
    sym *= cx{0.5, 0.0};
    ComplexMatrix asym = id;
    asym -= w;
    asym *= cx{0.5, 0.0};
    return {std::move(sym), std::move(asym)};
}

/// |Φ+⟩ = (1/√d) Σ_j e_j ⊗ e_j as a d²-dimensional vector.
inline StateVector max_entangled_state(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("max_entangled_state: d must be at least 2");
    }
    StateVector v(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
        v.amplitudes[j * d + j] = amp;
    }
    return v;
}

/// |u⟩⟨v|.
inline ComplexMatrix outer_product(const StateVector &u, const StateVector &v) {
    ComplexMatrix m(u.dim(), v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            m(i, j) = u.amplitudes[i] * std::conj(v.amplitudes[j]);
        }
    }
    return m;
}

/// Matrix–vector product A·v.
inline StateVector apply(const ComplexMatrix &a, const StateVector &v) {
    if (a.cols() != v.dim()) {
        throw std::invalid_argument("apply: dimension mismatch");
    }
    StateVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * v.amplitudes[j];
        }
        out.amplitudes[i] = s;
    }
    return out;
}

/// ⟨u|v⟩ with the conjugation on the left argument.
inline cx inner_product(const StateVector &u, const StateVector &v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cx s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        s += std::conj(u.amplitudes[i]) * v.amplitudes[i];
    }
    return s;
}

/// Tr(A·B) without forming the product.
inline cx trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw std::invalid_argument("trace_product: dimension mismatch");
    }
    cx s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * b(j, i);
        }
    }
    return s;
}

/// ⟨v|A|v⟩, returned as its real part (A is expected Hermitian).
inline double real_expectation(const ComplexMatrix &a, const StateVector &v) {
    const StateVector av = apply(a, v);
    return inner_product(v, av).real();
}

} // namespace conika
