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
 * @file advantage.hpp
 * When does a d'-level quantum encoding beat the best d-level classical code
 * for [(2,d)->1]? With r = d - d', the restricted quantum value exceeds
 * (1 + 1/d)/2 exactly when d > r^2 + 3r + 1.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "classical_protocol.hpp"
#include "quantum_protocol.hpp"

namespace qrac {

namespace detail {

inline void require_r_below_d(std::size_t d, std::size_t r, const char *what) {
    if (r >= d) {
        throw OutOfRange(std::string(what) + ": r = " + std::to_string(r) +
                         " must be < d = " + std::to_string(d));
    }
}

[[nodiscard]] inline std::size_t isqrt(std::size_t v) {
    std::size_t s = 0;
    while ((s + 1) * (s + 1) <= v) {
        ++s;
    }
    return s;
}

} // namespace detail

/**
 * @brief Exact ordering of the restricted quantum value against the classical
 * optimum (1 + 1/d)/2.
 *
 * Multiplying both by 2d leaves (d-r) + sqrt(d-r) against d + 1, i.e.
 * sqrt(d-r) against r + 1, so the comparison reduces to the integers d - r
 * and (r+1)^2. Returns equal at the boundary d = r^2 + 3r + 1.
 */
[[nodiscard]] inline std::strong_ordering compare_restricted_to_classical(std::size_t d,
                                                                          std::size_t r) {
    detail::require_r_below_d(d, r, "compare_restricted_to_classical");
    return (d - r) <=> (r + 1) * (r + 1);
}

/// d > r^2 + 3r + 1 (strict: ties are not an advantage).
[[nodiscard]] inline bool advantage_holds(std::size_t d, std::size_t r) {
    detail::require_r_below_d(d, r, "advantage_holds");
    return d > r * r + 3 * r + 1;
}

/// Largest r >= 0 with d > r^2 + 3r + 1; 0 means no restricted advantage.
[[nodiscard]] inline std::size_t r_max(std::size_t d) {
    if (d < 2) {
        throw InvalidDimension("r_max: d must be >= 2");
    }
    std::size_t r = 0;
    while (d > (r + 1) * (r + 1) + 3 * (r + 1) + 1) {
        ++r;
    }
    return r;
}

/**
 * @brief floor((-3 + sqrt(4d + 5)) / 2), the closed-form upper end of the
 * advantage range.
 *
 * Agrees with r_max except when 4d + 5 is a perfect square (d = 5, 11, 19,
 * 29, ...), where d = r^2 + 3r + 1 is a tie and the expression overshoots
 * by one.
 */
[[nodiscard]] inline std::size_t r_max_floor_expression(std::size_t d) {
    if (d < 2) {
        throw InvalidDimension("r_max_floor_expression: d must be >= 2");
    }
    return (detail::isqrt(4 * d + 5) - 3) / 2;
}

struct AdvantageRow {
    std::size_t d = 0;
    std::size_t d_prime = 0;
    std::size_t r_max = 0;
    double p_classical = 0.0;
    double p_quantum_full = 0.0;
    double p_quantum_restricted = 0.0; ///< closed form at r = r_max
    double ratio = 0.0;                ///< p_quantum_restricted / p_classical
    /// Born-rule enumeration of the restricted protocol at r = r_max, when run.
    std::optional<double> p_enumerated;
};

struct ScanOptions {
    /// Rows with d <= this bound are also enumerated exactly.
    std::size_t enumerate_up_to = 32;
};

[[nodiscard]] inline AdvantageRow advantage_row(std::size_t d, const ScanOptions &opts = {}) {
    AdvantageRow row;
    row.d = d;
    row.r_max = r_max(d);
    row.d_prime = d - row.r_max;
    row.p_classical = closed_form_classical(2, d);
    row.p_quantum_full = closed_form_full(d);
    row.p_quantum_restricted = closed_form_restricted(d, row.r_max);
    row.ratio = row.p_quantum_restricted / row.p_classical;
    if (d <= opts.enumerate_up_to) {
        row.p_enumerated = exact_success(ProtocolSpec(d, row.d_prime)).average;
    }
    return row;
}

/// One row per d in [d_min, d_max], ordered by d.
[[nodiscard]] inline std::vector<AdvantageRow> scan(std::size_t d_min, std::size_t d_max,
                                                    const ScanOptions &opts = {}) {
    if (d_min < 2 || d_min > d_max) {
        throw OutOfRange("scan: need 2 <= d_min <= d_max, got " + std::to_string(d_min) +
                         ".." + std::to_string(d_max));
    }
    std::vector<AdvantageRow> rows;
    rows.reserve(d_max - d_min + 1);
    for (std::size_t d = d_min; d <= d_max; ++d) {
        rows.push_back(advantage_row(d, opts));
    }
    return rows;
}

/// The d in [d_min, d_max] maximizing closed_form_full(d) / closed_form_classical(2, d).
[[nodiscard]] inline std::size_t best_full_ratio_dimension(std::size_t d_min,
                                                           std::size_t d_max) {
    if (d_min < 2 || d_min > d_max) {
        throw OutOfRange("best_full_ratio_dimension: need 2 <= d_min <= d_max");
    }
    std::size_t best = d_min;
    double best_ratio = 0.0;
    for (std::size_t d = d_min; d <= d_max; ++d) {
        const double ratio = closed_form_full(d) / closed_form_classical(2, d);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = d;
        }
    }
    return best;
}

} // namespace qrac
