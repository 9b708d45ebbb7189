// Copyright 2026 The qrac-sim Authors

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
 * @file dense_oracle.hpp
 * Test-only reference implementation of the quantum protocols using dense
 * matrices built directly from the operator definitions. Shares no code with
 * the structural implementation under include/qrac.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace qrac_test {

using cplx = std::complex<double>;

struct Matrix {
    std::size_t n;
    std::vector<cplx> a; // row-major

    explicit Matrix(std::size_t dim) : n(dim), a(dim * dim) {}
    cplx &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline Matrix operator*(const Matrix &x, const Matrix &y) {
    Matrix r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k)
            for (std::size_t j = 0; j < x.n; ++j)
                r(i, j) += x(i, k) * y(k, j);
    return r;
}

inline std::vector<cplx> operator*(const Matrix &m, const std::vector<cplx> &v) {
    std::vector<cplx> r(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            r[i] += m(i, j) * v[j];
    return r;
}

inline Matrix power(const Matrix &m, std::size_t p) {
    Matrix r = Matrix::identity(m.n);
    for (std::size_t i = 0; i < p; ++i) {
        r = r * m;
    }
    return r;
}

inline cplx omega(std::size_t dim) {
    return std::exp(cplx(0.0, 2.0 * std::numbers::pi / static_cast<double>(dim)));
}

/// X = sum_k |k+1><k|.
inline Matrix dense_shift(std::size_t dim) {
    Matrix x(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        x((k + 1) % dim, k) = 1.0;
    }
    return x;
}

/// Z = sum_k omega^k |k><k|.
inline Matrix dense_clock(std::size_t dim) {
    Matrix z(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        z(k, k) = std::pow(omega(dim), static_cast<double>(k));
    }
    return z;
}

/// Column l is |e_l>.
inline Matrix dense_fourier(std::size_t dim) {
    Matrix f(dim);
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l)
            f(k, l) = std::pow(omega(dim), static_cast<double>(k * l)) /
                      std::sqrt(static_cast<double>(dim));
    return f;
}

/// |0> + |e_0>, normalized numerically.
inline std::vector<cplx> dense_anchor(std::size_t dim) {
    const Matrix f = dense_fourier(dim);
    std::vector<cplx> v(dim);
    double norm2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        v[k] = f(k, 0) + (k == 0 ? 1.0 : 0.0);
        norm2 += std::norm(v[k]);
    }
    for (auto &c : v) {
        c /= std::sqrt(norm2);
    }
    return v;
}

struct DenseResult {
    double average;
    double worst_input; ///< min over (x1, x2) of the mean over questions
    double worst_pair;  ///< min over (x1, x2, y)
};

/// Brute-force success of the (restricted) protocol. `literal` selects the
/// both-or-nothing gating.
inline DenseResult dense_protocol_success(std::size_t d, std::size_t dp, bool literal) {
    const Matrix x = dense_shift(dp);
    const Matrix z = dense_clock(dp);
    const Matrix f = dense_fourier(dp);
    const auto psi = dense_anchor(dp);
    double sum = 0.0;
    double worst_input = 1.0;
    double worst_pair = 1.0;
    for (std::size_t x1 = 0; x1 < d; ++x1) {
        for (std::size_t x2 = 0; x2 < d; ++x2) {
            Matrix u = Matrix::identity(dp);
            const bool in1 = x1 < dp;
            const bool in2 = x2 < dp;
            if (literal) {
                if (in1 && in2) {
                    u = power(x, x1) * power(z, x2);
                }
            } else {
                u = (in1 ? power(x, x1) : Matrix::identity(dp)) *
                    (in2 ? power(z, x2) : Matrix::identity(dp));
            }
            const auto state = u * psi;
            double input_sum = 0.0;
            for (int y = 0; y < 2; ++y) {
                const std::size_t target = y == 0 ? x1 : x2;
                double success = 0.0;
                for (std::size_t l = 0; l < dp; ++l) {
                    cplx amp = 0.0;
                    for (std::size_t k = 0; k < dp; ++k) {
                        const cplx bra = y == 0 ? (k == l ? 1.0 : 0.0) : std::conj(f(k, l));
                        amp += bra * state[k];
                    }
                    const double p = std::norm(amp);
                    if (l != 0) {
                        success += l == target ? p : 0.0;
                    } else {
                        const bool in_set = target == 0 || target >= dp;
                        success += in_set ? p / static_cast<double>(d - dp + 1) : 0.0;
                    }
                }
                sum += success;
                input_sum += success;
                worst_pair = std::min(worst_pair, success);
            }
            worst_input = std::min(worst_input, input_sum / 2.0);
        }
    }
    return {sum / static_cast<double>(2 * d * d), worst_input, worst_pair};
}

/// Uniformly random unit vector (Gaussian components).
inline std::vector<cplx> random_amplitudes(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(dim);
    double n2 = 0.0;
    for (auto &c : v) {
        c = {g(rng), g(rng)};
        n2 += std::norm(c);
    }
    for (auto &c : v) {
        c /= std::sqrt(n2);
    }
    return v;
}

} // namespace qrac_test
