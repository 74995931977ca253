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
 * @file random.hpp
 * Seeded randomness. All stochastic routines in the library take an
 * explicit 64-bit seed and are reproducible bit-for-bit: the generator is
 * mt19937_64 (pinned by the C++ standard) and the Gaussian transform is
 * an explicit Box–Muller, so no implementation-defined distribution code
 * is involved.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "complex_matrix.hpp"

namespace conika {

/// Mix a base seed with a stream index (splitmix64 finalizer). Used to key
/// independent trials so they can run in any order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1].
    double uniform_positive() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box–Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_positive();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    cx gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return cx{re, im};
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/**
 * Haar-distributed random unitary: complex Gaussian matrix followed by
 * modified Gram–Schmidt (two passes). MGS is the QR factorization whose
 * triangular factor has a real positive diagonal, which is exactly the
 * phase convention that makes the result Haar.
 */
inline ComplexMatrix haar_random_unitary(std::size_t d, std::uint64_t seed) {
    if (d < 2) {
        throw std::invalid_argument("haar_random_unitary: d must be at least 2");
    }
    SeededRng rng(seed);
    ComplexMatrix g(d, d);
    for (auto &e : g.entries()) {
        e = rng.gaussian_complex();
    }

    for (std::size_t j = 0; j < d; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                cx proj = 0.0;
                for (std::size_t r = 0; r < d; ++r) {
                    proj += std::conj(g(r, i)) * g(r, j);
                }
                for (std::size_t r = 0; r < d; ++r) {
                    g(r, j) -= proj * g(r, i);
                }
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            nrm += std::norm(g(r, j));
        }
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < d; ++r) {
            g(r, j) /= nrm;
        }
    }
    return g;
}

/// Haar-uniform pure state: Gaussian amplitudes, normalized.
inline StateVector random_state_vector(std::size_t dim, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("random_state_vector: dim must be positive");
    }
    SeededRng rng(seed);
    StateVector v(dim);
    for (auto &a : v.amplitudes) {
        a = rng.gaussian_complex();
    }
    const double nrm = v.norm();
    for (auto &a : v.amplitudes) {
        a /= nrm;
    }
    return v;
}

} // namespace conika
