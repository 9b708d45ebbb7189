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
 * @file quantum_protocol.hpp
 * The [(2,d)->1] quantum random access code and its restricted-dimension
 * variant, where a d'-level system (d' <= d) carries a pair of d-level dits.
 *
 * Encoding: x1 x2 -> X^{x1} Z^{x2} |psi00> in C^{d'}, with each exponent
 * gated off when its dit does not fit in {0, ..., d'-1}. Decoding: the
 * computational basis answers question 1 and the Fourier basis question 2.
 * Outcome l >= 1 is reported as l; outcome 0 is replaced by a uniform guess
 * from {0, d', ..., d-1}.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qudit.hpp"
#include "report.hpp"

namespace qrac {

/**
 * @brief When the shift/clock exponents are applied in the restricted code.
 *
 * IndependentGating applies Z^{x2} iff x2 < d' and X^{x1} iff x1 < d'.
 * LiteralBothOrNothing applies X^{x1} Z^{x2} only when both dits are below
 * d' and leaves |psi00> untouched otherwise. Only IndependentGating attains
 * (d'/2d)(1 + 1/sqrt(d')); the literal rule is kept for comparison.
 */
enum class GatingVariant { IndependentGating, LiteralBothOrNothing };

[[nodiscard]] inline const char *to_string(GatingVariant v) noexcept {
    return v == GatingVariant::IndependentGating ? "independent" : "literal";
}

/// Alphabet size d, quantum dimension d' and gating rule of one protocol.
class ProtocolSpec {
  public:
    ProtocolSpec(std::size_t d, std::size_t d_prime,
                 GatingVariant variant = GatingVariant::IndependentGating)
        : d_(d), d_prime_(d_prime), variant_(variant) {
        if (d == 0 || d_prime == 0) {
            throw InvalidDimension("ProtocolSpec: d and d' must be >= 1");
        }
        if (d_prime > d) {
            throw OutOfRange("ProtocolSpec: d' = " + std::to_string(d_prime) +
                             " exceeds d = " + std::to_string(d));
        }
    }

    /// The unrestricted protocol, d' = d.
    [[nodiscard]] static ProtocolSpec full(std::size_t d) { return {d, d}; }

    [[nodiscard]] std::size_t d() const noexcept { return d_; }
    [[nodiscard]] std::size_t d_prime() const noexcept { return d_prime_; }
    [[nodiscard]] std::size_t r() const noexcept { return d_ - d_prime_; }
    [[nodiscard]] GatingVariant variant() const noexcept { return variant_; }

  private:
    std::size_t d_;
    std::size_t d_prime_;
    GatingVariant variant_;
};

/// Finite distribution over answers in {0, ..., d-1}.
struct GuessDistribution {
    std::vector<std::pair<std::size_t, double>> support;

    [[nodiscard]] double probability_of(std::size_t answer) const noexcept {
        double p = 0.0;
        for (const auto &[a, w] : support) {
            if (a == answer) {
                p += w;
            }
        }
        return p;
    }
};

namespace detail {

inline void require_dit(std::size_t x, std::size_t d, const char *what) {
    if (x >= d) {
        throw OutOfRange(std::string(what) + ": dit " + std::to_string(x) +
                         " outside {0.." + std::to_string(d - 1) + "}");
    }
}

inline void require_question(std::size_t y) {
    if (y != 1 && y != 2) {
        throw OutOfRange("question must be 1 or 2, got " + std::to_string(y));
    }
}

} // namespace detail

/// X^{x1} Z^{x2} |psi00> in C^d (clock applied first).
[[nodiscard]] inline StateVector encode_full(std::size_t d, std::size_t x1,
                                             std::size_t x2) {
    detail::require_dimension(d, "encode_full");
    detail::require_dit(x1, d, "encode_full");
    detail::require_dit(x2, d, "encode_full");
    const auto z = apply_pauli(anchor_state(d),
                               clock(d, static_cast<std::int64_t>(x2)));
    return apply_pauli(z, shift(d, static_cast<std::int64_t>(x1)));
}

/// Gated encoding into C^{d'}; every constant is built in dimension d'.
[[nodiscard]] inline StateVector encode_restricted(const ProtocolSpec &spec,
                                                   std::size_t x1,
                                                   std::size_t x2) {
    const std::size_t d = spec.d();
    const std::size_t dp = spec.d_prime();
    detail::require_dit(x1, d, "encode_restricted");
    detail::require_dit(x2, d, "encode_restricted");

    bool apply_shift = x1 < dp;
    bool apply_clock = x2 < dp;
    if (spec.variant() == GatingVariant::LiteralBothOrNothing) {
        apply_shift = apply_clock = apply_shift && apply_clock;
    }
    StateVector state = anchor_state(dp);
    if (apply_clock) {
        state = apply_pauli(state, clock(dp, static_cast<std::int64_t>(x2)));
    }
    if (apply_shift) {
        state = apply_pauli(state, shift(dp, static_cast<std::int64_t>(x1)));
    }
    return state;
}

/// Computational basis for question 1, Fourier basis for question 2.
[[nodiscard]] inline OrthonormalBasis decoding_basis(std::size_t d_prime,
                                                     std::size_t y) {
    detail::require_question(y);
    return y == 1 ? computational_basis(d_prime) : fourier_basis(d_prime);
}

/// Bob's guess after seeing measurement outcome `outcome` in C^{d'}.
[[nodiscard]] inline GuessDistribution
guess_from_outcome(std::size_t outcome, const ProtocolSpec &spec) {
    if (outcome >= spec.d_prime()) {
        throw OutOfRange("guess_from_outcome: outcome " + std::to_string(outcome) +
                         " >= d' = " + std::to_string(spec.d_prime()));
    }
    GuessDistribution guess;
    if (outcome != 0) {
        guess.support.emplace_back(outcome, 1.0);
        return guess;
    }
    // {0, d', d'+1, ..., d-1}: r + 1 equally likely answers.
    const double w = 1.0 / static_cast<double>(spec.r() + 1);
    guess.support.emplace_back(0, w);
    for (std::size_t a = spec.d_prime(); a < spec.d(); ++a) {
        guess.support.emplace_back(a, w);
    }
    return guess;
}

/**
 * @brief Precomputed decoding data for one ProtocolSpec.
 *
 * Holds both measurement bases and the per-outcome guess distributions so
 * that repeated per-input queries do not rebuild them.
 */
class QuantumRac {
  public:
    explicit QuantumRac(const ProtocolSpec &spec)
        : spec_(spec), bases_{decoding_basis(spec.d_prime(), 1),
                              decoding_basis(spec.d_prime(), 2)} {
        guesses_.reserve(spec.d_prime());
        for (std::size_t l = 0; l < spec.d_prime(); ++l) {
            guesses_.push_back(guess_from_outcome(l, spec));
        }
    }

    [[nodiscard]] const ProtocolSpec &spec() const noexcept { return spec_; }

    [[nodiscard]] StateVector encode(std::size_t x1, std::size_t x2) const {
        return encode_restricted(spec_, x1, x2);
    }

    [[nodiscard]] const OrthonormalBasis &basis(std::size_t y) const {
        detail::require_question(y);
        return bases_[y - 1];
    }

    [[nodiscard]] const GuessDistribution &guess(std::size_t outcome) const {
        return guesses_.at(outcome);
    }

    /// Born distribution of the question-y measurement on the encoded state.
    [[nodiscard]] std::vector<double>
    outcome_distribution(std::size_t x1, std::size_t x2, std::size_t y) const {
        detail::require_question(y);
        return born_distribution(encode(x1, x2), bases_[y - 1]);
    }

    /// Distribution of Bob's final answer, outcome statistics composed with
    /// the guess rule. Indexed by answer in {0, ..., d-1}.
    [[nodiscard]] std::vector<double>
    answer_distribution(std::size_t x1, std::size_t x2, std::size_t y) const {
        const auto outcomes = outcome_distribution(x1, x2, y);
        std::vector<double> answers(spec_.d(), 0.0);
        for (std::size_t l = 0; l < outcomes.size(); ++l) {
            for (const auto &[a, w] : guesses_[l].support) {
                answers[a] += outcomes[l] * w;
            }
        }
        return answers;
    }

  private:
    ProtocolSpec spec_;
    OrthonormalBasis bases_[2];
    std::vector<GuessDistribution> guesses_;
};

/// Exact success statistics by enumerating every (x1, x2, y).
[[nodiscard]] inline SuccessReport exact_success(const ProtocolSpec &spec) {
    const QuantumRac rac(spec);
    const std::size_t d = spec.d();
    std::vector<double> table;
    table.reserve(2 * d * d);
    for (std::size_t x1 = 0; x1 < d; ++x1) {
        for (std::size_t x2 = 0; x2 < d; ++x2) {
            const auto state = rac.encode(x1, x2);
            for (std::size_t y = 1; y <= 2; ++y) {
                const std::size_t target = y == 1 ? x1 : x2;
                const auto outcomes =
                    born_distribution(state, rac.basis(y));
                double success = 0.0;
                for (std::size_t l = 0; l < outcomes.size(); ++l) {
                    success += outcomes[l] * rac.guess(l).probability_of(target);
                }
                table.push_back(success);
            }
        }
    }
    return SuccessReport::from_per_input(2, d, std::move(table));
}

/// (1 + 1/sqrt(d)) / 2.
[[nodiscard]] inline double closed_form_full(std::size_t d) {
    detail::require_dimension(d, "closed_form_full");
    return 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
}

/// ((d - r) / 2d) (1 + 1/sqrt(d - r)).
[[nodiscard]] inline double closed_form_restricted(std::size_t d, std::size_t r) {
    detail::require_dimension(d, "closed_form_restricted");
    if (r >= d) {
        throw OutOfRange("closed_form_restricted: r = " + std::to_string(r) +
                         " must be < d = " + std::to_string(d));
    }
    const auto dp = static_cast<double>(d - r);
    return dp / (2.0 * static_cast<double>(d)) * (1.0 + 1.0 / std::sqrt(dp));
}

} // namespace qrac
