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
 * @file report.hpp
 * Success statistics shared by the quantum and classical protocols.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace qrac {

/// Number of strings of length n over an alphabet of size d (d^n).
[[nodiscard]] inline std::size_t string_count(std::size_t n, std::size_t d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= d;
    }
    return count;
}

/// Row-major index of a dit string, first dit most significant.
[[nodiscard]] inline std::size_t string_index(std::span<const std::size_t> x,
                                              std::size_t d) {
    std::size_t index = 0;
    for (const auto xi : x) {
        if (xi >= d) {
            throw OutOfRange("dit " + std::to_string(xi) +
                             " outside alphabet of size " + std::to_string(d));
        }
        index = index * d + xi;
    }
    return index;
}

/// Inverse of string_index.
[[nodiscard]] inline std::vector<std::size_t>
string_digits(std::size_t index, std::size_t n, std::size_t d) {
    std::vector<std::size_t> x(n);
    for (std::size_t i = n; i-- > 0;) {
        x[i] = index % d;
        index /= d;
    }
    return x;
}

/**
 * @brief Average, worst-case and per-(input, question) success probability.
 *
 * per_input is laid out as [input][question] with inputs in string_index
 * order and questions 0-based (question q asks for dit x_{q+1}).
 *
 * worst_case is the minimum over input strings of the success probability
 * with the question drawn uniformly; worst_pair is the minimum over single
 * (input, question) entries. A deterministic "send x1" code has worst_case
 * 1/2 but worst_pair 0.
 */
struct SuccessReport {
    std::size_t n = 0;
    std::size_t d = 0;
    double average = 0.0;
    double worst_case = 0.0;
    double worst_pair = 0.0;
    std::vector<double> per_input;

    [[nodiscard]] double at(std::size_t input, std::size_t question) const {
        return per_input.at(input * n + question);
    }

    /// Builds a report from a filled per-input matrix.
    [[nodiscard]] static SuccessReport from_per_input(std::size_t n,
                                                      std::size_t d,
                                                      std::vector<double> table) {
        if (table.size() != string_count(n, d) * n || table.empty()) {
            throw InvalidValue("SuccessReport: per-input table has wrong size");
        }
        SuccessReport report;
        report.n = n;
        report.d = d;
        report.average = std::accumulate(table.begin(), table.end(), 0.0) /
                         static_cast<double>(table.size());
        report.worst_pair = *std::min_element(table.begin(), table.end());
        report.worst_case = 1.0;
        for (std::size_t i = 0; i < table.size(); i += n) {
            double row = 0.0;
            for (std::size_t q = 0; q < n; ++q) {
                row += table[i + q];
            }
            report.worst_case = std::min(report.worst_case, row / static_cast<double>(n));
        }
        report.per_input = std::move(table);
        return report;
    }
};

} // namespace qrac
