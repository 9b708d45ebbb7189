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
 * @file simulator.hpp
 * Seeded Monte Carlo play of a random access code: draw the input string and
 * question uniformly, run encode -> measure -> guess, and score the answer.
 *
 * Randomness comes from std::mt19937_64, whose output sequence is fixed by the
 * C++ standard. Integers and reals are derived from its raw 64-bit output
 * without the implementation-defined std:: distributions, so a given seed
 * produces the same trial stream on every platform.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "classical_protocol.hpp"
#include "quantum_protocol.hpp"

namespace qrac {

struct TrialConfig {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0; ///< sqrt(mean (1 - mean) / trials)
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;

    friend bool operator==(const Estimate &, const Estimate &) = default;
};

class TrialRng {
  public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound), by rejection of the biased low range.
    std::uint64_t uniform_index(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t v = engine_();
            if (v >= threshold) {
                return v % bound;
            }
        }
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

namespace detail {

/// First index whose cumulative weight exceeds u; the last index absorbs
/// any rounding shortfall.
[[nodiscard]] inline std::size_t sample_cdf(const std::vector<double> &cdf, double u) {
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        if (u < cdf[i]) {
            return i;
        }
    }
    return cdf.size() - 1;
}

[[nodiscard]] inline std::vector<double> cumulative(const std::vector<double> &p) {
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    return cdf;
}

[[nodiscard]] inline Estimate make_estimate(std::uint64_t successes, std::uint64_t trials) {
    Estimate e;
    e.trials = trials;
    e.successes = successes;
    e.mean = static_cast<double>(successes) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials));
    return e;
}

inline void require_trials(const TrialConfig &config) {
    if (config.trials == 0) {
        throw OutOfRange("simulate: trials must be >= 1");
    }
}

} // namespace detail

/// One sampled round of the quantum game. y is 1 or 2.
struct QuantumRound {
    std::size_t x1;
    std::size_t x2;
    std::size_t y;
    std::size_t outcome;
    std::size_t answer;
};

/**
 * @brief Samples rounds of a quantum RAC.
 *
 * Outcome distributions are computed exactly per (x1, x2, y) on first use and
 * sampled by inverse CDF afterwards.
 */
class QuantumSampler {
  public:
    explicit QuantumSampler(const ProtocolSpec &spec)
        : rac_(spec), outcome_cdf_(2 * spec.d() * spec.d()) {
        guess_cdf_.reserve(spec.d_prime());
        for (std::size_t l = 0; l < spec.d_prime(); ++l) {
            std::vector<double> w;
            for (const auto &[a, p] : rac_.guess(l).support) {
                w.push_back(p);
            }
            guess_cdf_.push_back(detail::cumulative(w));
        }
    }

    QuantumRound play(TrialRng &rng) {
        const std::size_t d = rac_.spec().d();
        QuantumRound round{};
        round.x1 = rng.uniform_index(d);
        round.x2 = rng.uniform_index(d);
        round.y = 1 + rng.uniform_index(2);
        auto &cdf = outcome_cdf_[(round.x1 * d + round.x2) * 2 + (round.y - 1)];
        if (cdf.empty()) {
            cdf = detail::cumulative(rac_.outcome_distribution(round.x1, round.x2, round.y));
        }
        round.outcome = detail::sample_cdf(cdf, rng.uniform01());
        const auto &guess = rac_.guess(round.outcome);
        if (guess.support.size() == 1) {
            round.answer = guess.support.front().first;
        } else {
            const auto pick = detail::sample_cdf(guess_cdf_[round.outcome], rng.uniform01());
            round.answer = guess.support[pick].first;
        }
        return round;
    }

    [[nodiscard]] const QuantumRac &rac() const noexcept { return rac_; }

  private:
    QuantumRac rac_;
    std::vector<std::vector<double>> outcome_cdf_;
    std::vector<std::vector<double>> guess_cdf_;
};

[[nodiscard]] inline Estimate simulate(const ProtocolSpec &spec, const TrialConfig &config) {
    detail::require_trials(config);
    QuantumSampler sampler(spec);
    TrialRng rng(config.seed);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const auto round = sampler.play(rng);
        successes += round.answer == (round.y == 1 ? round.x1 : round.x2) ? 1 : 0;
    }
    return detail::make_estimate(successes, config.trials);
}

[[nodiscard]] inline Estimate simulate(const ClassicalTask &task,
                                       const DeterministicStrategy &strategy,
                                       const TrialConfig &config) {
    detail::require_trials(config);
    validate_strategy(task, strategy);
    TrialRng rng(config.seed);
    std::vector<std::size_t> x(task.n());
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        for (auto &xi : x) {
            xi = rng.uniform_index(task.d());
        }
        const std::size_t y = rng.uniform_index(task.n());
        const std::size_t m = strategy.encoder[string_index(x, task.d())];
        successes += strategy.decoders[y][m] == x[y] ? 1 : 0;
    }
    return detail::make_estimate(successes, config.trials);
}

} // namespace qrac
