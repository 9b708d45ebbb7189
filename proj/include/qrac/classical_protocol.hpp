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
 * @file classical_protocol.hpp
 * Classical [(n,d)->1] random access codes: exact evaluation of deterministic
 * strategies, the majority-encoding identity-decoding code, closed forms for
 * n = 2, 3 and an exhaustive optimality search for small (n, d).
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"

namespace qrac {

/// An [(n,d)->1] task: n dits over an alphabet of size d, one dit sent.
class ClassicalTask {
  public:
    ClassicalTask(std::size_t n, std::size_t d) : n_(n), d_(d) {
        if (n == 0) {
            throw InvalidDimension("ClassicalTask: n must be >= 1");
        }
        if (d < 2) {
            throw InvalidDimension("ClassicalTask: d must be >= 2");
        }
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t d() const noexcept { return d_; }
    [[nodiscard]] std::size_t input_count() const { return string_count(n_, d_); }

    friend bool operator==(const ClassicalTask &, const ClassicalTask &) = default;

  private:
    std::size_t n_;
    std::size_t d_;
};

/**
 * @brief Encoder table over all d^n inputs plus one decoder per question.
 *
 * encoder[string_index(x)] is the message m; decoders[y][m] is the answer to
 * question y (0-based) on message m.
 */
struct DeterministicStrategy {
    std::vector<std::size_t> encoder;
    std::vector<std::vector<std::size_t>> decoders;

    friend bool operator==(const DeterministicStrategy &,
                           const DeterministicStrategy &) = default;
};

/// Throws InvalidValue unless every table is total and in range for `task`.
inline void validate_strategy(const ClassicalTask &task,
                              const DeterministicStrategy &s) {
    const std::size_t d = task.d();
    if (s.encoder.size() != task.input_count()) {
        throw InvalidValue("strategy: encoder has " + std::to_string(s.encoder.size()) +
                           " entries, expected " + std::to_string(task.input_count()));
    }
    if (s.decoders.size() != task.n()) {
        throw InvalidValue("strategy: " + std::to_string(s.decoders.size()) +
                           " decoders, expected " + std::to_string(task.n()));
    }
    for (const auto m : s.encoder) {
        if (m >= d) {
            throw InvalidValue("strategy: message " + std::to_string(m) + " out of range");
        }
    }
    for (const auto &dec : s.decoders) {
        if (dec.size() != d) {
            throw InvalidValue("strategy: decoder table must have " +
                               std::to_string(d) + " entries");
        }
        for (const auto a : dec) {
            if (a >= d) {
                throw InvalidValue("strategy: answer " + std::to_string(a) +
                                   " out of range");
            }
        }
    }
}

/// Number of correctly answered (input, question) pairs, out of n * d^n.
[[nodiscard]] inline std::uint64_t success_count(const ClassicalTask &task,
                                                 const DeterministicStrategy &s) {
    validate_strategy(task, s);
    std::uint64_t correct = 0;
    for (std::size_t i = 0; i < task.input_count(); ++i) {
        const auto x = string_digits(i, task.n(), task.d());
        const std::size_t m = s.encoder[i];
        for (std::size_t y = 0; y < task.n(); ++y) {
            correct += s.decoders[y][m] == x[y] ? 1 : 0;
        }
    }
    return correct;
}

[[nodiscard]] inline SuccessReport evaluate_strategy(const ClassicalTask &task,
                                                     const DeterministicStrategy &s) {
    validate_strategy(task, s);
    std::vector<double> table;
    table.reserve(task.input_count() * task.n());
    for (std::size_t i = 0; i < task.input_count(); ++i) {
        const auto x = string_digits(i, task.n(), task.d());
        const std::size_t m = s.encoder[i];
        for (std::size_t y = 0; y < task.n(); ++y) {
            table.push_back(s.decoders[y][m] == x[y] ? 1.0 : 0.0);
        }
    }
    return SuccessReport::from_per_input(task.n(), task.d(), std::move(table));
}

/// Sends the most frequent dit (earliest position wins ties); decoders are
/// the identity.
[[nodiscard]] inline DeterministicStrategy
majority_identity_strategy(const ClassicalTask &task) {
    const std::size_t n = task.n();
    const std::size_t d = task.d();
    DeterministicStrategy s;
    s.encoder.resize(task.input_count());
    std::vector<std::size_t> counts(d);
    for (std::size_t i = 0; i < task.input_count(); ++i) {
        const auto x = string_digits(i, n, d);
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto xi : x) {
            ++counts[xi];
        }
        std::size_t best = x[0];
        for (const auto xi : x) {
            if (counts[xi] > counts[best]) {
                best = xi;
            }
        }
        s.encoder[i] = best;
    }
    std::vector<std::size_t> identity(d);
    for (std::size_t m = 0; m < d; ++m) {
        identity[m] = m;
    }
    s.decoders.assign(n, identity);
    return s;
}

/// (1 + 1/d)/2 for n = 2, (1 + 3/d - 1/d^2)/3 for n = 3.
[[nodiscard]] inline double closed_form_classical(std::size_t n, std::size_t d) {
    if (d < 2) {
        throw InvalidDimension("closed_form_classical: d must be >= 2");
    }
    const auto dd = static_cast<double>(d);
    if (n == 2) {
        return 0.5 * (1.0 + 1.0 / dd);
    }
    if (n == 3) {
        return (1.0 + 3.0 / dd - 1.0 / (dd * dd)) / 3.0;
    }
    throw Unsupported("closed_form_classical: no closed form for n = " +
                      std::to_string(n));
}

/// Limits on the exhaustive classical search.
struct OracleBudget {
    /// Maximum number of decoder tuples to examine.
    std::uint64_t max_tuples = 10'000'000;
    /// Enumerate the first decoder only up to relabeling of messages
    /// (nondecreasing tables), dividing the work by up to d!.
    bool symmetry_reduction = false;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct OracleResult {
    double optimum = 0.0;
    std::uint64_t correct = 0; ///< numerator of optimum
    std::uint64_t total = 0;   ///< denominator n * d^n
    DeterministicStrategy witness;
    std::uint64_t strategies_examined = 0;
    bool symmetry_reduced = false;
};

namespace detail {

[[nodiscard]] inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

[[nodiscard]] inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r = saturating_mul(r, base);
    }
    return r;
}

/// Number of nondecreasing maps {0..d-1} -> {0..d-1}, C(2d-1, d).
[[nodiscard]] inline std::uint64_t nondecreasing_count(std::size_t d) {
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= d; ++i) {
        // c = C(d-1+i, i), exact at every step
        c = saturating_mul(c, d - 1 + i) / i;
    }
    return c;
}

/// All first-decoder candidates in lexicographic order.
[[nodiscard]] inline std::vector<std::vector<std::size_t>>
first_decoder_candidates(std::size_t d, bool nondecreasing_only) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> table(d, 0);
    while (true) {
        out.push_back(table);
        std::size_t p = d;
        while (p-- > 0) {
            if (++table[p] < d) {
                break;
            }
            table[p] = 0;
        }
        if (p == static_cast<std::size_t>(-1)) {
            break;
        }
        if (nondecreasing_only) {
            for (std::size_t q = p + 1; q < d; ++q) {
                table[q] = table[p];
            }
        }
    }
    return out;
}

/**
 * @brief Sum over inputs x of max_m sum_y [D_y(m) = x_y].
 *
 * hits[y * d + v] is the bitmask of messages m with D_y(m) = v. Walks inputs
 * in odometer order keeping, per prefix length, the masks of messages that
 * agree with at least k of the fixed dits.
 */
class GreedyScorer {
  public:
    GreedyScorer(std::size_t n, std::size_t d)
        : n_(n), d_(d), x_(n), ge_((n + 1) * (n + 1)) {
        all_ = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    }

    [[nodiscard]] std::uint64_t score(const std::vector<std::uint64_t> &hits) {
        std::fill(x_.begin(), x_.end(), 0);
        std::fill(ge_.begin(), ge_.end(), 0);
        ge_[0] = all_;
        for (std::size_t level = 0; level < n_; ++level) {
            extend(hits, level);
        }
        std::uint64_t total = 0;
        while (true) {
            const std::uint64_t *last = &ge_[n_ * (n_ + 1)];
            std::size_t k = n_;
            while (k > 0 && last[k] == 0) {
                --k;
            }
            total += k;
            std::size_t p = n_;
            while (p-- > 0) {
                if (++x_[p] < d_) {
                    break;
                }
                x_[p] = 0;
            }
            if (p == static_cast<std::size_t>(-1)) {
                return total;
            }
            for (std::size_t level = p; level < n_; ++level) {
                extend(hits, level);
            }
        }
    }

  private:
    void extend(const std::vector<std::uint64_t> &hits, std::size_t level) {
        const std::uint64_t mask = hits[level * d_ + x_[level]];
        const std::uint64_t *g = &ge_[level * (n_ + 1)];
        std::uint64_t *next = &ge_[(level + 1) * (n_ + 1)];
        next[0] = all_;
        for (std::size_t k = 1; k <= level + 1; ++k) {
            next[k] = g[k] | (g[k - 1] & mask);
        }
    }

    std::size_t n_;
    std::size_t d_;
    std::uint64_t all_;
    std::vector<std::size_t> x_;
    std::vector<std::uint64_t> ge_;
};

struct SearchPartial {
    std::uint64_t best = 0;
    bool found = false;
    std::vector<std::vector<std::size_t>> decoders;
    std::uint64_t examined = 0;
};

/// Exhausts decoders 2..n for every first decoder in [begin, end).
inline SearchPartial search_range(std::size_t n, std::size_t d,
                                  const std::vector<std::vector<std::size_t>> &firsts,
                                  std::size_t begin, std::size_t end) {
    SearchPartial part;
    GreedyScorer scorer(n, d);
    std::vector<std::vector<std::size_t>> dec(n, std::vector<std::size_t>(d, 0));
    std::vector<std::uint64_t> hits(n * d, 0);

    for (std::size_t f = begin; f < end; ++f) {
        dec[0] = firsts[f];
        std::fill(hits.begin(), hits.end(), 0);
        for (std::size_t y = 0; y < n; ++y) {
            if (y > 0) {
                std::fill(dec[y].begin(), dec[y].end(), 0);
            }
            for (std::size_t m = 0; m < d; ++m) {
                hits[y * d + dec[y][m]] |= std::uint64_t{1} << m;
            }
        }
        while (true) {
            const std::uint64_t total = scorer.score(hits);
            ++part.examined;
            if (!part.found || total > part.best) {
                part.best = total;
                part.found = true;
                part.decoders = dec;
            }
            // Odometer over decoders 1..n-1, last message fastest.
            bool advanced = false;
            for (std::size_t y = n; y-- > 1 && !advanced;) {
                for (std::size_t m = d; m-- > 0;) {
                    const std::uint64_t bit = std::uint64_t{1} << m;
                    hits[y * d + dec[y][m]] &= ~bit;
                    if (++dec[y][m] < d) {
                        hits[y * d + dec[y][m]] |= bit;
                        advanced = true;
                        break;
                    }
                    dec[y][m] = 0;
                    hits[y * d] |= bit;
                }
            }
            if (!advanced) {
                break;
            }
        }
    }
    return part;
}

} // namespace detail

/// Encoder that maximizes the number of correct answers for fixed decoders,
/// choosing the smallest such message per input.
[[nodiscard]] inline std::vector<std::size_t>
greedy_encoder(const ClassicalTask &task,
               const std::vector<std::vector<std::size_t>> &decoders) {
    std::vector<std::size_t> encoder(task.input_count());
    for (std::size_t i = 0; i < task.input_count(); ++i) {
        const auto x = string_digits(i, task.n(), task.d());
        std::size_t best_m = 0;
        std::size_t best_score = 0;
        for (std::size_t m = 0; m < task.d(); ++m) {
            std::size_t score = 0;
            for (std::size_t y = 0; y < task.n(); ++y) {
                score += decoders[y][m] == x[y] ? 1 : 0;
            }
            if (score > best_score) {
                best_score = score;
                best_m = m;
            }
        }
        encoder[i] = best_m;
    }
    return encoder;
}

/// Decoder tuples the search will examine under `budget`.
[[nodiscard]] inline std::uint64_t oracle_required_tuples(const ClassicalTask &task,
                                                          bool symmetry_reduction) {
    const std::uint64_t tables = detail::saturating_pow(task.d(), task.d());
    const std::uint64_t first =
        symmetry_reduction ? detail::nondecreasing_count(task.d()) : tables;
    return detail::saturating_mul(first, detail::saturating_pow(tables, task.n() - 1));
}

/**
 * @brief Exact optimum over all deterministic strategies.
 *
 * Only decoder tuples are enumerated: for fixed decoders the best encoder
 * picks, independently per input, a message agreeing with the most dits.
 * The witness is the lexicographically smallest optimal decoder tuple.
 * Throws InfeasibleSize when the tuple count exceeds budget.max_tuples.
 */
[[nodiscard]] inline OracleResult
optimal_classical_bruteforce(const ClassicalTask &task, const OracleBudget &budget = {}) {
    const std::size_t n = task.n();
    const std::size_t d = task.d();
    const std::uint64_t required = oracle_required_tuples(task, budget.symmetry_reduction);
    if (d > 64 || required > budget.max_tuples) {
        throw InfeasibleSize(required, budget.max_tuples);
    }

    const auto firsts = detail::first_decoder_candidates(d, budget.symmetry_reduction);
    unsigned workers = budget.threads != 0 ? budget.threads
                                           : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, firsts.size()));

    std::vector<detail::SearchPartial> parts(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (firsts.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(firsts.size(), w * chunk);
            const std::size_t end = std::min(firsts.size(), begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                parts[w] = detail::search_range(n, d, firsts, begin, end);
            });
        }
    }

    // Chunks are contiguous in lexicographic order, so the earliest chunk
    // holding the maximum holds the lexicographically smallest witness.
    OracleResult result;
    const detail::SearchPartial *winner = nullptr;
    for (const auto &part : parts) {
        result.strategies_examined += part.examined;
        if (part.found && (winner == nullptr || part.best > winner->best)) {
            winner = &part;
        }
    }
    result.correct = winner->best;
    result.total = static_cast<std::uint64_t>(n) * task.input_count();
    result.optimum = static_cast<double>(result.correct) / static_cast<double>(result.total);
    result.witness.decoders = winner->decoders;
    result.witness.encoder = greedy_encoder(task, winner->decoders);
    result.symmetry_reduced = budget.symmetry_reduction;
    return result;
}

/// Average success of a shared-randomness mixture of deterministic strategies.
[[nodiscard]] inline double
mixture_value(const ClassicalTask &task,
              const std::vector<std::pair<DeterministicStrategy, double>> &strategies) {
    if (strategies.empty()) {
        throw InvalidValue("mixture_value: empty mixture");
    }
    double weight_sum = 0.0;
    for (const auto &[s, w] : strategies) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw InvalidValue("mixture_value: weights must be finite and nonnegative");
        }
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-12) {
        throw InvalidValue("mixture_value: weights sum to " + std::to_string(weight_sum));
    }
    double value = 0.0;
    for (const auto &[s, w] : strategies) {
        value += w * evaluate_strategy(task, s).average;
    }
    return value;
}

} // namespace qrac
