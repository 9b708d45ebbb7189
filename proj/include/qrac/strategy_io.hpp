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
 * @file strategy_io.hpp
 * Plain-text strategy tables.
 *
 *     n d
 *     x_1 ... x_n m        (d^n lines, one per input)
 *     m answer             (n blocks of d lines, one block per question)
 *
 * Tokens are separated by single spaces and lines end in LF. The writer emits
 * inputs and messages in increasing order; the reader accepts any order as
 * long as each input and each (question, message) appears exactly once.
 * Blank lines and lines starting with '#' are ignored on input.
 */
#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "classical_protocol.hpp"

namespace qrac {

inline void write_strategy(std::ostream &out, const ClassicalTask &task,
                           const DeterministicStrategy &s) {
    validate_strategy(task, s);
    out << task.n() << ' ' << task.d() << '\n';
    for (std::size_t i = 0; i < task.input_count(); ++i) {
        for (const auto xi : string_digits(i, task.n(), task.d())) {
            out << xi << ' ';
        }
        out << s.encoder[i] << '\n';
    }
    for (const auto &dec : s.decoders) {
        for (std::size_t m = 0; m < task.d(); ++m) {
            out << m << ' ' << dec[m] << '\n';
        }
    }
}

[[nodiscard]] inline std::string strategy_to_string(const ClassicalTask &task,
                                                    const DeterministicStrategy &s) {
    std::ostringstream out;
    write_strategy(out, task, s);
    return out.str();
}

namespace detail {

class LineReader {
  public:
    explicit LineReader(std::istream &in) : in_(in) {}

    /// Next non-blank, non-comment line split into unsigned integers.
    std::vector<std::size_t> next(std::size_t expected_tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
                continue;
            }
            std::istringstream fields(line);
            std::vector<std::size_t> values;
            std::string tok;
            while (fields >> tok) {
                if (tok.find_first_not_of("0123456789") != std::string::npos ||
                    tok.size() > 9) {
                    fail("expected a nonnegative integer, got '" + tok + "'");
                }
                values.push_back(std::stoul(tok));
            }
            if (values.size() != expected_tokens) {
                fail("expected " + std::to_string(expected_tokens) + " fields, got " +
                     std::to_string(values.size()));
            }
            return values;
        }
        fail("unexpected end of input");
        return {};
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError("strategy table line " + std::to_string(line_no_) + ": " + msg);
    }

    void expect_end() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') {
                fail("trailing content");
            }
        }
    }

  private:
    std::istream &in_;
    std::size_t line_no_ = 0;
};

} // namespace detail

/// Parses a table; ranges and totality are checked.
[[nodiscard]] inline std::pair<ClassicalTask, DeterministicStrategy>
read_strategy(std::istream &in) {
    detail::LineReader reader(in);
    const auto header = reader.next(2);
    if (header[0] == 0 || header[1] < 2) {
        reader.fail("header needs n >= 1 and d >= 2");
    }
    const ClassicalTask task(header[0], header[1]);
    if (task.input_count() > 10'000'000 / task.n()) {
        reader.fail("table too large");
    }
    const std::size_t n = task.n();
    const std::size_t d = task.d();
    const auto missing = static_cast<std::size_t>(-1);

    DeterministicStrategy s;
    s.encoder.assign(task.input_count(), missing);
    for (std::size_t row = 0; row < task.input_count(); ++row) {
        const auto fields = reader.next(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (fields[k] >= d) {
                reader.fail("value " + std::to_string(fields[k]) + " outside alphabet");
            }
        }
        const std::size_t i = string_index(std::span(fields).first(n), d);
        if (s.encoder[i] != missing) {
            reader.fail("duplicate input row");
        }
        s.encoder[i] = fields[n];
    }
    s.decoders.assign(n, std::vector<std::size_t>(d, missing));
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t row = 0; row < d; ++row) {
            const auto fields = reader.next(2);
            if (fields[0] >= d || fields[1] >= d) {
                reader.fail("decoder entry outside alphabet");
            }
            if (s.decoders[y][fields[0]] != missing) {
                reader.fail("duplicate decoder row for message " + std::to_string(fields[0]));
            }
            s.decoders[y][fields[0]] = fields[1];
        }
    }
    reader.expect_end();
    return {task, std::move(s)};
}

} // namespace qrac
