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
 * @file qudit.hpp
 * Exact state-vector algebra for a single qudit: amplitudes, the generalized
 * Pauli shift/clock operators, computational and Fourier bases, and Born-rule
 * outcome probabilities.
 *
 * Operators are applied structurally (index permutation or diagonal phase),
 * never through dense matrices.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace qrac {

using Amplitude = std::complex<double>;

/// Tolerance for norm, orthogonality and probability-sum checks.
inline constexpr double kTolerance = 1e-12;

namespace detail {

inline void require_dimension(std::size_t dim, const char *what) {
    if (dim == 0) {
        throw InvalidDimension(std::string(what) + ": dimension must be >= 1");
    }
}

/// Reduces any integer exponent into {0, ..., dim-1}.
[[nodiscard]] inline std::size_t reduce_power(std::int64_t power,
                                              std::size_t dim) {
    const auto m = static_cast<std::int64_t>(dim);
    return static_cast<std::size_t>(((power % m) + m) % m);
}

} // namespace detail

/**
 * @brief omega^power with omega = exp(2 pi i / dim).
 *
 * The exponent is reduced modulo dim first. Quarter turns are returned
 * exactly so that e.g. dim=2 gives -1+0i and dim=4 gives 0+1i.
 */
[[nodiscard]] inline Amplitude unit_root_power(std::size_t dim,
                                               std::int64_t power) {
    detail::require_dimension(dim, "unit_root_power");
    const std::size_t k = detail::reduce_power(power, dim);
    if ((4 * k) % dim == 0) {
        switch ((4 * k) / dim) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(dim);
    return {std::cos(angle), std::sin(angle)};
}

/// The primitive root of unity exp(2 pi i / dim).
[[nodiscard]] inline Amplitude root_of_unity(std::size_t dim) {
    return unit_root_power(dim, 1);
}

/**
 * @brief Unit-norm pure state of a qudit.
 *
 * Construction checks that the amplitude list is non-empty, finite and
 * normalized within kTolerance.
 */
class StateVector {
  public:
    explicit StateVector(std::vector<Amplitude> amps) : amps_(std::move(amps)) {
        detail::require_dimension(amps_.size(), "StateVector");
        double total = 0.0;
        for (const auto &a : amps_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                throw InvalidValue("StateVector: non-finite amplitude");
            }
            total += std::norm(a);
        }
        if (std::abs(total - 1.0) > kTolerance) {
            throw InvalidValue("StateVector: squared norm " +
                               std::to_string(total) + " is not 1");
        }
    }

    /// Rescales an arbitrary non-zero amplitude list to unit norm.
    [[nodiscard]] static StateVector normalized(std::vector<Amplitude> amps) {
        double total = 0.0;
        for (const auto &a : amps) {
            total += std::norm(a);
        }
        if (!(total > 0.0) || !std::isfinite(total)) {
            throw InvalidValue("StateVector::normalized: zero or non-finite vector");
        }
        const double scale = 1.0 / std::sqrt(total);
        for (auto &a : amps) {
            a *= scale;
        }
        return StateVector(std::move(amps));
    }

    /// The computational basis state |index>.
    [[nodiscard]] static StateVector basis_state(std::size_t dim,
                                                 std::size_t index) {
        detail::require_dimension(dim, "basis_state");
        if (index >= dim) {
            throw OutOfRange("basis_state: index " + std::to_string(index) +
                             " >= dimension " + std::to_string(dim));
        }
        std::vector<Amplitude> amps(dim);
        amps[index] = 1.0;
        return StateVector(std::move(amps));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Amplitude &operator[](std::size_t k) const {
        return amps_[k];
    }

    [[nodiscard]] double norm() const {
        double total = 0.0;
        for (const auto &a : amps_) {
            total += std::norm(a);
        }
        return std::sqrt(total);
    }

  private:
    std::vector<Amplitude> amps_;
};

/// <bra|ket>, conjugate-linear in the first argument.
[[nodiscard]] inline Amplitude inner_product(const StateVector &bra,
                                             const StateVector &ket) {
    if (bra.dim() != ket.dim()) {
        throw DimensionMismatch("inner_product: dimensions " +
                                std::to_string(bra.dim()) + " and " +
                                std::to_string(ket.dim()));
    }
    Amplitude acc{0.0, 0.0};
    for (std::size_t k = 0; k < bra.dim(); ++k) {
        acc += std::conj(bra[k]) * ket[k];
    }
    return acc;
}

/**
 * @brief Ordered orthonormal basis of C^dim.
 *
 * The constructor verifies completeness (dim vectors) and that the Gram
 * matrix is the identity within kTolerance.
 */
class OrthonormalBasis {
  public:
    explicit OrthonormalBasis(std::vector<StateVector> vectors)
        : vectors_(std::move(vectors)) {
        detail::require_dimension(vectors_.size(), "OrthonormalBasis");
        const std::size_t dim = vectors_.front().dim();
        if (vectors_.size() != dim) {
            throw InvalidValue("OrthonormalBasis: " +
                               std::to_string(vectors_.size()) +
                               " vectors for dimension " + std::to_string(dim));
        }
        for (const auto &v : vectors_) {
            if (v.dim() != dim) {
                throw DimensionMismatch("OrthonormalBasis: mixed dimensions");
            }
        }
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                if (std::abs(inner_product(vectors_[i], vectors_[j])) >
                    kTolerance) {
                    throw InvalidValue("OrthonormalBasis: vectors " +
                                       std::to_string(i) + " and " +
                                       std::to_string(j) +
                                       " are not orthogonal");
                }
            }
        }
    }

    [[nodiscard]] std::size_t dim() const noexcept { return vectors_.size(); }
    [[nodiscard]] const StateVector &operator[](std::size_t l) const {
        return vectors_[l];
    }
    [[nodiscard]] auto begin() const noexcept { return vectors_.begin(); }
    [[nodiscard]] auto end() const noexcept { return vectors_.end(); }

  private:
    std::vector<StateVector> vectors_;
};

/// {|0>, ..., |dim-1>}.
[[nodiscard]] inline OrthonormalBasis computational_basis(std::size_t dim) {
    detail::require_dimension(dim, "computational_basis");
    std::vector<StateVector> vectors;
    vectors.reserve(dim);
    for (std::size_t l = 0; l < dim; ++l) {
        vectors.push_back(StateVector::basis_state(dim, l));
    }
    return OrthonormalBasis(std::move(vectors));
}

/// |e_l> has amplitude omega^{k l} / sqrt(dim) at index k.
[[nodiscard]] inline OrthonormalBasis fourier_basis(std::size_t dim) {
    detail::require_dimension(dim, "fourier_basis");
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<StateVector> vectors;
    vectors.reserve(dim);
    for (std::size_t l = 0; l < dim; ++l) {
        std::vector<Amplitude> amps(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            amps[k] = scale * unit_root_power(
                                  dim, static_cast<std::int64_t>((k * l) % dim));
        }
        vectors.emplace_back(std::move(amps));
    }
    return OrthonormalBasis(std::move(vectors));
}

enum class PauliKind { Shift, Clock };

/**
 * @brief A power of the shift (X) or clock (Z) operator on C^dim.
 *
 * X|k> = |k+1 mod dim>, Z|k> = omega^k |k>. The power may be any integer;
 * it is reduced modulo dim on application.
 */
struct PauliPower {
    PauliKind kind;
    std::int64_t power;
    std::size_t dim;
};

[[nodiscard]] inline PauliPower shift(std::size_t dim, std::int64_t power = 1) {
    return {PauliKind::Shift, power, dim};
}
[[nodiscard]] inline PauliPower clock(std::size_t dim, std::int64_t power = 1) {
    return {PauliKind::Clock, power, dim};
}

[[nodiscard]] inline StateVector apply_pauli(const StateVector &state,
                                             const PauliPower &op) {
    const std::size_t dim = state.dim();
    if (op.dim != dim) {
        throw DimensionMismatch("apply_pauli: operator dimension " +
                                std::to_string(op.dim) + " on state of dimension " +
                                std::to_string(dim));
    }
    const std::size_t p = detail::reduce_power(op.power, dim);
    std::vector<Amplitude> out(dim);
    if (op.kind == PauliKind::Shift) {
        for (std::size_t k = 0; k < dim; ++k) {
            out[(k + p) % dim] = state[k];
        }
    } else {
        for (std::size_t k = 0; k < dim; ++k) {
            out[k] = unit_root_power(dim, static_cast<std::int64_t>((k * p) % dim)) *
                     state[k];
        }
    }
    return StateVector(std::move(out));
}

/// (|0> + |e_0>) / sqrt(2 + 2/sqrt(dim)), the encoding of the all-zero string.
[[nodiscard]] inline StateVector anchor_state(std::size_t dim) {
    detail::require_dimension(dim, "anchor_state");
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dim));
    const double norm = std::sqrt(2.0 + 2.0 * inv_sqrt);
    std::vector<Amplitude> amps(dim, Amplitude{inv_sqrt / norm, 0.0});
    amps[0] = Amplitude{(1.0 + inv_sqrt) / norm, 0.0};
    return StateVector(std::move(amps));
}

/// Outcome probabilities |<basis_l|state>|^2 of a projective measurement.
[[nodiscard]] inline std::vector<double>
born_distribution(const StateVector &state, const OrthonormalBasis &basis) {
    if (state.dim() != basis.dim()) {
        throw DimensionMismatch("born_distribution: state dimension " +
                                std::to_string(state.dim()) + ", basis dimension " +
                                std::to_string(basis.dim()));
    }
    std::vector<double> probs;
    probs.reserve(basis.dim());
    for (const auto &v : basis) {
        probs.push_back(std::norm(inner_product(v, state)));
    }
    return probs;
}

} // namespace qrac
