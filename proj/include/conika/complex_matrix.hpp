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
 * @file complex_matrix.hpp
 * Dense complex matrices and state vectors. Row-major storage, double
 * precision. These are the carriers for every operator and state in the
 * library; all sizes here are desk scale (at most a few hundred rows),
 * so the arithmetic is plain loops without any BLAS dependency.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace conika {

using cx = std::complex<double>;

namespace detail {

/// %g formatting for diagnostics; std::to_string flattens small values to 0.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace detail

class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    /// Zero-initialized rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cx &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cx &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::vector<cx> &entries() { return entries_; }
    const std::vector<cx> &entries() const { return entries_; }

    ComplexMatrix &operator+=(const ComplexMatrix &other) {
        require_same_shape(other, "operator+=");
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] += other.entries_[k];
        }
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &other) {
        require_same_shape(other, "operator-=");
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] -= other.entries_[k];
        }
        return *this;
    }

    ComplexMatrix &operator*=(cx scale) {
        for (auto &e : entries_) {
            e *= scale;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        a += b;
        return a;
    }

    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        a -= b;
        return a;
    }

    friend ComplexMatrix operator*(ComplexMatrix a, cx scale) {
        a *= scale;
        return a;
    }

    friend ComplexMatrix operator*(cx scale, ComplexMatrix a) {
        a *= scale;
        return a;
    }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument(
                "ComplexMatrix multiply: inner dimensions differ (" +
                std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) + ")");
        }
        ComplexMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cx aik = a(i, k);
                if (aik == cx{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                m(j, i) = std::conj((*this)(i, j));
            }
        }
        return m;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                m(j, i) = (*this)(i, j);
            }
        }
        return m;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            m.entries_[k] = std::conj(entries_[k]);
        }
        return m;
    }

    cx trace() const {
        require_square("trace");
        cx t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto &e : entries_) {
            s += std::norm(e);
        }
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto &e : entries_) {
            m = std::max(m, std::abs(e));
        }
        return m;
    }

    /// ‖A − A†‖_F ≤ tol · max(1, ‖A‖_F). Non-square matrices are never
    /// Hermitian.
    bool is_hermitian(double tol = 1e-10) const {
        if (!is_square()) {
            return false;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
            }
        }
        return std::sqrt(s) <= tol * std::max(1.0, frobenius_norm());
    }

    /// ‖A†A − I‖_F ≤ tol.
    bool is_unitary(double tol = 1e-10) const {
        if (!is_square()) {
            return false;
        }
        ComplexMatrix g = adjoint() * (*this);
        g -= identity(rows_);
        return g.frobenius_norm() <= tol;
    }

    void require_square(const char *what) const {
        if (!is_square()) {
            throw std::invalid_argument(std::string(what) + ": matrix is " +
                                        std::to_string(rows_) + "x" +
                                        std::to_string(cols_) + ", expected square");
        }
    }

  private:
    void require_same_shape(const ComplexMatrix &other, const char *what) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument(std::string(what) + ": shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> entries_;
};

/// Pure state amplitudes over the computational basis.
struct StateVector {
    std::vector<cx> amplitudes;

    StateVector() = default;
    explicit StateVector(std::size_t dim) : amplitudes(dim) {}
    explicit StateVector(std::vector<cx> amps) : amplitudes(std::move(amps)) {}

    std::size_t dim() const { return amplitudes.size(); }

    double norm() const {
        double s = 0.0;
        for (const auto &a : amplitudes) {
            s += std::norm(a);
        }
        return std::sqrt(s);
    }

    /// |‖v‖² − 1| ≤ tol.
    bool is_normalized(double tol = 1e-10) const {
        double s = 0.0;
        for (const auto &a : amplitudes) {
            s += std::norm(a);
        }
        return std::abs(s - 1.0) <= tol;
    }
};

} // namespace conika
