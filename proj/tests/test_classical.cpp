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

#include <algorithm>
#include <chrono>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "qrac/classical_protocol.hpp"

using namespace qrac;
using Catch::Approx;

namespace {

DeterministicStrategy send_first_identity(const ClassicalTask &task) {
    DeterministicStrategy s;
    for (std::size_t i = 0; i < task.input_count(); ++i) {
        s.encoder.push_back(string_digits(i, task.n(), task.d())[0]);
    }
    std::vector<std::size_t> id(task.d());
    for (std::size_t m = 0; m < task.d(); ++m) {
        id[m] = m;
    }
    s.decoders.assign(task.n(), id);
    return s;
}

DeterministicStrategy random_strategy(const ClassicalTask &task, std::mt19937_64 &rng) {
    DeterministicStrategy s;
    s.encoder.resize(task.input_count());
    for (auto &m : s.encoder) {
        m = rng() % task.d();
    }
    s.decoders.assign(task.n(), std::vector<std::size_t>(task.d()));
    for (auto &dec : s.decoders) {
        for (auto &a : dec) {
            a = rng() % task.d();
        }
    }
    return s;
}

/// Majority encoder whose tie-break among equally frequent dits is chosen by
/// `pick` (given the tied values in increasing order).
template <class Pick>
DeterministicStrategy majority_with_tiebreak(const ClassicalTask &task, Pick pick) {
    DeterministicStrategy s = majority_identity_strategy(task);
    for (std::size_t i = 0; i < task.input_count(); ++i) {
        const auto x = string_digits(i, task.n(), task.d());
        std::vector<std::size_t> counts(task.d());
        for (const auto xi : x) {
            ++counts[xi];
        }
        const auto top = *std::max_element(counts.begin(), counts.end());
        std::vector<std::size_t> tied;
        for (std::size_t v = 0; v < task.d(); ++v) {
            if (counts[v] == top) {
                tied.push_back(v);
            }
        }
        s.encoder[i] = pick(tied, x);
    }
    return s;
}

/// Optimum over every encoder table and every decoder tuple. Only viable for
/// tiny (n, d); independent of the greedy-encoder reduction.
double full_strategy_enumeration(const ClassicalTask &task) {
    const std::size_t inputs = task.input_count();
    const std::size_t d = task.d();
    const std::size_t n = task.n();
    std::uint64_t best = 0;
    std::vector<std::size_t> enc(inputs, 0);
    std::vector<std::size_t> dec(n * d, 0);
    const auto advance = [d](std::vector<std::size_t> &digits) {
        for (std::size_t p = digits.size(); p-- > 0;) {
            if (++digits[p] < d) {
                return true;
            }
            digits[p] = 0;
        }
        return false;
    };
    do {
        do {
            std::uint64_t correct = 0;
            for (std::size_t i = 0; i < inputs; ++i) {
                const auto x = string_digits(i, n, d);
                for (std::size_t y = 0; y < n; ++y) {
                    correct += dec[y * d + enc[i]] == x[y] ? 1 : 0;
                }
            }
            best = std::max(best, correct);
        } while (advance(dec));
    } while (advance(enc));
    return static_cast<double>(best) / static_cast<double>(n * inputs);
}

} // namespace

TEST_CASE("ClassicalTask validation", "[classical]") {
    CHECK_THROWS_AS(ClassicalTask(0, 2), InvalidDimension);
    CHECK_THROWS_AS(ClassicalTask(2, 1), InvalidDimension);
    CHECK(ClassicalTask(3, 4).input_count() == 64);
}

TEST_CASE("evaluate_strategy", "[classical]") {
    const ClassicalTask qubit(2, 2);
    SECTION("send x1, identity decoders: average 3/4, worst 1/2") {
        const auto rep = evaluate_strategy(qubit, send_first_identity(qubit));
        CHECK(rep.average == 0.75);
        CHECK(rep.worst_case == 0.5);
        CHECK(rep.worst_pair == 0.0);
        CHECK(success_count(qubit, send_first_identity(qubit)) == 6);
    }
    SECTION("constant strategy scores 1/d") {
        for (std::size_t d = 2; d <= 6; ++d) {
            const ClassicalTask task(2, d);
            DeterministicStrategy s;
            s.encoder.assign(task.input_count(), 0);
            s.decoders.assign(2, std::vector<std::size_t>(d, 0));
            REQUIRE(evaluate_strategy(task, s).average == Approx(1.0 / double(d)).margin(1e-15));
        }
    }
    SECTION("malformed tables are rejected") {
        auto s = send_first_identity(qubit);
        s.encoder.pop_back();
        CHECK_THROWS_AS(evaluate_strategy(qubit, s), InvalidValue);
        s = send_first_identity(qubit);
        s.decoders[1][0] = 2;
        CHECK_THROWS_AS(evaluate_strategy(qubit, s), InvalidValue);
        s = send_first_identity(qubit);
        s.decoders.pop_back();
        CHECK_THROWS_AS(evaluate_strategy(qubit, s), InvalidValue);
    }
    SECTION("averages and worst cases lie in [0, 1]; majority-identity in [1/d, 1]") {
        std::mt19937_64 rng(11);
        for (int c = 0; c < 300; ++c) {
            const ClassicalTask task(1 + rng() % 3, 2 + rng() % 4);
            const auto rep = evaluate_strategy(task, random_strategy(task, rng));
            REQUIRE(rep.average >= 0.0);
            REQUIRE(rep.average <= 1.0);
            REQUIRE(rep.worst_case <= rep.average);
            const auto maj = evaluate_strategy(task, majority_identity_strategy(task));
            REQUIRE(maj.average >= 1.0 / double(task.d()) - 1e-15);
        }
    }
}

TEST_CASE("majority_identity_strategy", "[classical]") {
    const ClassicalTask t2(2, 6);
    const auto s2 = majority_identity_strategy(t2);
    const std::size_t x33[] = {3, 3};
    const std::size_t x14[] = {1, 4};
    const std::size_t x41[] = {4, 1};
    CHECK(s2.encoder[string_index(x33, 6)] == 3);
    CHECK(s2.encoder[string_index(x14, 6)] == 1);
    CHECK(s2.encoder[string_index(x41, 6)] == 4);
    const ClassicalTask t3(3, 6);
    const std::size_t x252[] = {2, 5, 2};
    const std::size_t x525[] = {5, 2, 5};
    const std::size_t x123[] = {1, 2, 3};
    const auto s3 = majority_identity_strategy(t3);
    CHECK(s3.encoder[string_index(x252, 6)] == 2);
    CHECK(s3.encoder[string_index(x525, 6)] == 5);
    CHECK(s3.encoder[string_index(x123, 6)] == 1);

    SECTION("average is invariant to the tie-break rule") {
        for (std::size_t n = 2; n <= 4; ++n) {
            for (std::size_t d = 2; d <= 6; ++d) {
                const ClassicalTask task(n, d);
                const auto base = success_count(task, majority_identity_strategy(task));
                const auto lowest = majority_with_tiebreak(
                    task, [](const auto &tied, const auto &) { return tied.front(); });
                const auto highest = majority_with_tiebreak(
                    task, [](const auto &tied, const auto &) { return tied.back(); });
                const auto last_pos = majority_with_tiebreak(task, [](const auto &tied, const auto &x) {
                    for (std::size_t p = x.size(); p-- > 0;) {
                        if (std::find(tied.begin(), tied.end(), x[p]) != tied.end()) {
                            return x[p];
                        }
                    }
                    return tied.front();
                });
                REQUIRE(success_count(task, lowest) == base);
                REQUIRE(success_count(task, highest) == base);
                REQUIRE(success_count(task, last_pos) == base);
            }
        }
    }
}

TEST_CASE("closed_form_classical", "[classical]") {
    CHECK(closed_form_classical(2, 2) == 0.75);
    CHECK(closed_form_classical(2, 6) == Approx(7.0 / 12.0).margin(1e-15));
    CHECK(closed_form_classical(3, 2) == Approx(0.75).margin(1e-15));
    CHECK(closed_form_classical(3, 3) == Approx(17.0 / 27.0).margin(1e-15));
    CHECK_THROWS_AS(closed_form_classical(4, 3), Unsupported);
    CHECK_THROWS_AS(closed_form_classical(1, 3), Unsupported);

    SECTION("majority-identity reaches the closed form exactly, d = 2..64") {
        for (std::size_t d = 2; d <= 64; ++d) {
            const ClassicalTask t2(2, d);
            const ClassicalTask t3(3, d);
            REQUIRE(success_count(t2, majority_identity_strategy(t2)) == d * (d + 1));
            REQUIRE(success_count(t3, majority_identity_strategy(t3)) == d * (d * d + 3 * d - 1));
            REQUIRE(evaluate_strategy(t2, majority_identity_strategy(t2)).average ==
                    Approx(closed_form_classical(2, d)).margin(1e-12));
        }
    }
}

TEST_CASE("optimal_classical_bruteforce", "[classical][oracle]") {
    SECTION("reference optima") {
        const auto r22 = optimal_classical_bruteforce(ClassicalTask(2, 2));
        CHECK(r22.optimum == 0.75);
        CHECK(r22.strategies_examined == 16);
        const auto r24 = optimal_classical_bruteforce(ClassicalTask(2, 4));
        CHECK(r24.optimum == 0.625);
        CHECK(r24.strategies_examined == 65536);
        const auto r33 = optimal_classical_bruteforce(ClassicalTask(3, 3));
        CHECK(r33.correct * 27 == 17 * r33.total);
        CHECK(r33.strategies_examined == 19683);
    }
    SECTION("witness attains the optimum and is lexicographically smallest") {
        for (const auto &[n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}, {1, 3}}) {
            const ClassicalTask task(n, d);
            const auto res = optimal_classical_bruteforce(task);
            REQUIRE(success_count(task, res.witness) == res.correct);
            // The all-zero decoder tuple scores at most the identity tuple, so
            // the smallest optimal tuple must start from a non-constant decoder
            // whenever the optimum beats 1/d.
            bool smaller_found = false;
            std::vector<std::size_t> flat(n * d, 0);
            std::vector<std::size_t> witness_flat;
            for (const auto &dec : res.witness.decoders) {
                witness_flat.insert(witness_flat.end(), dec.begin(), dec.end());
            }
            while (flat < witness_flat) {
                std::vector<std::vector<std::size_t>> decs(n);
                for (std::size_t y = 0; y < std::size_t(n); ++y) {
                    decs[y].assign(flat.begin() + y * d, flat.begin() + (y + 1) * d);
                }
                DeterministicStrategy s{greedy_encoder(task, decs), decs};
                smaller_found = smaller_found || success_count(task, s) >= res.correct;
                for (std::size_t p = flat.size(); p-- > 0;) {
                    if (++flat[p] < std::size_t(d)) {
                        break;
                    }
                    flat[p] = 0;
                }
            }
            REQUIRE_FALSE(smaller_found);
        }
    }
    SECTION("greedy-encoder reduction is lossless against full enumeration") {
        CHECK(full_strategy_enumeration(ClassicalTask(2, 2)) == 0.75);
        CHECK(full_strategy_enumeration(ClassicalTask(2, 2)) ==
              optimal_classical_bruteforce(ClassicalTask(2, 2)).optimum);
        CHECK(full_strategy_enumeration(ClassicalTask(3, 2)) ==
              optimal_classical_bruteforce(ClassicalTask(3, 2)).optimum);
    }
    SECTION("symmetry reduction finds the same optimum and witness") {
        for (const auto &[n, d] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
            const ClassicalTask task(n, d);
            const auto full = optimal_classical_bruteforce(task);
            const auto reduced = optimal_classical_bruteforce(task, OracleBudget{10'000'000, true, 0});
            REQUIRE(reduced.correct == full.correct);
            REQUIRE(reduced.witness == full.witness);
            REQUIRE(reduced.strategies_examined < full.strategies_examined);
            REQUIRE(reduced.strategies_examined == oracle_required_tuples(task, true));
        }
    }
    SECTION("worker count does not change the result") {
        const ClassicalTask task(2, 4);
        const auto one = optimal_classical_bruteforce(task, OracleBudget{10'000'000, false, 1});
        const auto many = optimal_classical_bruteforce(task, OracleBudget{10'000'000, false, 7});
        CHECK(one.witness == many.witness);
        CHECK(one.correct == many.correct);
        CHECK(one.strategies_examined == many.strategies_examined);
    }
    SECTION("budget") {
        CHECK(oracle_required_tuples(ClassicalTask(2, 5), false) == 9'765'625);
        CHECK(oracle_required_tuples(ClassicalTask(2, 6), false) == 2'176'782'336ULL);
        CHECK(oracle_required_tuples(ClassicalTask(2, 6), true) == 462ULL * 46'656ULL);
        try {
            (void)optimal_classical_bruteforce(ClassicalTask(2, 6));
            FAIL("expected InfeasibleSize");
        } catch (const InfeasibleSize &e) {
            CHECK(e.required() == 2'176'782'336ULL);
            CHECK(std::string(e.what()).find("2176782336") != std::string::npos);
        }
        CHECK_THROWS_AS(optimal_classical_bruteforce(ClassicalTask(4, 4)), InfeasibleSize);
    }
}

TEST_CASE("mixture_value", "[classical]") {
    const ClassicalTask task(2, 3);
    const auto maj = majority_identity_strategy(task);
    DeterministicStrategy zero{std::vector<std::size_t>(9, 0), {{0, 0, 0}, {0, 0, 0}}};
    const double a = evaluate_strategy(task, maj).average;
    const double b = evaluate_strategy(task, zero).average;
    CHECK(mixture_value(task, {{maj, 1.0}}) == a);
    CHECK(mixture_value(task, {{maj, 0.5}, {zero, 0.5}}) == Approx((a + b) / 2).margin(1e-15));
    CHECK_THROWS_AS(mixture_value(task, {{maj, 0.7}}), InvalidValue);
    CHECK_THROWS_AS(mixture_value(task, {{maj, 1.5}, {zero, -0.5}}), InvalidValue);
    CHECK_THROWS_AS(mixture_value(task, {}), InvalidValue);

    SECTION("random mixtures never beat the deterministic optimum") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double opt = optimal_classical_bruteforce(task).optimum;
        for (int c = 0; c < 1000; ++c) {
            const std::size_t k = 1 + rng() % 4;
            std::vector<std::pair<DeterministicStrategy, double>> mix;
            double total = 0.0;
            double best_component = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                auto s = c % 3 == 0 ? maj : random_strategy(task, rng);
                best_component = std::max(best_component, evaluate_strategy(task, s).average);
                const double w = u(rng) + 1e-3;
                mix.emplace_back(std::move(s), w);
                total += w;
            }
            double wsum = 0.0;
            for (std::size_t i = 0; i + 1 < mix.size(); ++i) {
                mix[i].second /= total;
                wsum += mix[i].second;
            }
            mix.back().second = 1.0 - wsum;
            const double v = mixture_value(task, mix);
            REQUIRE(v <= best_component + 1e-12);
            REQUIRE(v <= opt + 1e-12);
        }
    }
}
