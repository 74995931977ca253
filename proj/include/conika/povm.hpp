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
 * @file povm.hpp
 * Positive operator-valued measures: an ordered list of PSD operators on
 * a d-dimensional space summing to the identity.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex_matrix.hpp"
#include "eigen.hpp"

namespace conika {

struct Povm {
    std::size_t dim = 0;
    std::string label;
    std::vector<ComplexMatrix> elements;

    std::size_t size() const { return elements.size(); }
};

/// Frobenius norm of Σ_α E_α − I.
inline double povm_sum_residual(const Povm &p) {
    ComplexMatrix sum(p.dim, p.dim);
    for (const auto &e : p.elements) {
        sum += e;
    }
    sum -= ComplexMatrix::identity(p.dim);
    return sum.frobenius_norm();
}

/**
 * Check the POVM invariants: every element d×d Hermitian (within
 * hermitian_tol) and PSD (within psd_tol), elements summing to the
 * identity (within sum_tol, Frobenius).
 *
 * @throws std::invalid_argument describing the first violated invariant
 */
inline void validate_povm(const Povm &p, double hermitian_tol = 1e-10,
                          double psd_tol = 1e-9, double sum_tol = 1e-9) {
    if (p.dim < 1) {
        throw std::invalid_argument("Povm: dim must be positive");
    }
    if (p.elements.empty()) {
        throw std::invalid_argument("Povm: element list is empty");
    }
    for (std::size_t a = 0; a < p.elements.size(); ++a) {
        const auto &e = p.elements[a];
        if (e.rows() != p.dim || e.cols() != p.dim) {
            throw std::invalid_argument("Povm: element " + std::to_string(a) +
                                        " is not " + std::to_string(p.dim) + "x" +
                                        std::to_string(p.dim));
        }
        if (!e.is_hermitian(hermitian_tol)) {
            throw std::invalid_argument("Povm: element " + std::to_string(a) +
                                        " is not Hermitian within tolerance");
        }
        if (!is_psd(e, psd_tol)) {
            throw std::invalid_argument("Povm: element " + std::to_string(a) +
                                        " is not positive semi-definite within "
                                        "tolerance");
        }
    }
    const double res = povm_sum_residual(p);
    if (res > sum_tol) {
        throw std::invalid_argument(
            "Povm: elements do not sum to the identity (residual " +
            detail::format_double(res) + ")");
    }
}

inline bool is_valid_povm(const Povm &p, double hermitian_tol = 1e-10,
                          double psd_tol = 1e-9, double sum_tol = 1e-9) {
    try {
        validate_povm(p, hermitian_tol, psd_tol, sum_tol);
        return true;
    } catch (const std::invalid_argument &) {
        return false;
    }
}

} // namespace conika
