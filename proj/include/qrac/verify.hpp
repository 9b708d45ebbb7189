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
 * @file verify.hpp
 * Cross-checks of every closed form against exhaustive enumeration. Backs
 * the `qrac verify` command.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "advantage.hpp"
#include "classical_protocol.hpp"
#include "quantum_protocol.hpp"

namespace qrac {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyOptions {
    std::size_t quantum_d_max = 32;
    std::size_t classical_d_max = 64;
    /// Also run the (n=2, d=5) exhaustive search (about 10M decoder pairs).
    bool include_slow = false;
};

namespace detail {

class CheckBuilder {
  public:
    explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

    template <class Msg> void fail(const Msg &msg) {
        if (result_.passed) {
            std::ostringstream out;
            out << msg;
            result_.detail = out.str();
        }
        result_.passed = false;
    }

    void close_enough(double got, double want, double tol, const std::string &where) {
        if (!(std::abs(got - want) <= tol)) {
            std::ostringstream out;
            out.precision(17);
            out << where << ": got " << got << ", expected " << want;
            fail(out.str());
        }
    }

    CheckResult done(std::string ok_detail) {
        if (result_.passed) {
            result_.detail = std::move(ok_detail);
        }
        return result_;
    }

  private:
    CheckResult result_;
};

} // namespace detail

[[nodiscard]] inline std::vector<CheckResult> run_verification(const VerifyOptions &opts = {}) {
    std::vector<CheckResult> out;
    const std::size_t qmax = opts.quantum_d_max;

    {
        detail::CheckBuilder c("full protocol enumeration = (1+1/sqrt d)/2, worst = average");
        for (std::size_t d = 2; d <= qmax; ++d) {
            const auto rep = exact_success(ProtocolSpec::full(d));
            const std::string where = "d=" + std::to_string(d);
            c.close_enough(rep.average, closed_form_full(d), kTolerance, where);
            c.close_enough(rep.worst_case, rep.average, kTolerance, where + " worst");
        }
        out.push_back(c.done("d=2.." + std::to_string(qmax)));
    }
    {
        detail::CheckBuilder c("restricted independent gating = ((d-r)/2d)(1+1/sqrt(d-r))");
        for (std::size_t d = 2; d <= qmax; ++d) {
            for (std::size_t r = 1; r + 1 < d; ++r) {
                const auto rep = exact_success(ProtocolSpec(d, d - r));
                c.close_enough(rep.average, closed_form_restricted(d, r), kTolerance,
                               "d=" + std::to_string(d) + " r=" + std::to_string(r));
            }
        }
        out.push_back(c.done("d=2.." + std::to_string(qmax) + ", 1<=r<d-1"));
    }
    {
        detail::CheckBuilder c("literal both-or-nothing gating < independent gating");
        for (std::size_t d = 2; d <= qmax; ++d) {
            // d' = 1 makes both rules the identity, so stop at d' = 2.
            for (std::size_t r = 1; r + 1 < d; ++r) {
                const double lit =
                    exact_success(ProtocolSpec(d, d - r, GatingVariant::LiteralBothOrNothing))
                        .average;
                const double ind = exact_success(ProtocolSpec(d, d - r)).average;
                if (!(lit < ind)) {
                    c.fail("d=" + std::to_string(d) + " r=" + std::to_string(r));
                }
            }
        }
        out.push_back(c.done("d=3.." + std::to_string(qmax) + ", 1<=r<d-1"));
    }
    {
        detail::CheckBuilder c("majority-identity counts = closed forms (n=2,3), exact");
        for (std::size_t d = 2; d <= opts.classical_d_max; ++d) {
            const ClassicalTask t2(2, d);
            const ClassicalTask t3(3, d);
            const auto c2 = success_count(t2, majority_identity_strategy(t2));
            const auto c3 = success_count(t3, majority_identity_strategy(t3));
            // (d+1)/(2d) * 2d^2 and (d^2+3d-1)/(3d^2) * 3d^3
            if (c2 != d * (d + 1)) {
                c.fail("n=2 d=" + std::to_string(d));
            }
            if (c3 != d * (d * d + 3 * d - 1)) {
                c.fail("n=3 d=" + std::to_string(d));
            }
        }
        out.push_back(c.done("d=2.." + std::to_string(opts.classical_d_max)));
    }
    {
        detail::CheckBuilder c("exhaustive classical optimum = closed form");
        std::vector<std::pair<std::size_t, std::size_t>> cases{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
        if (opts.include_slow) {
            cases.emplace_back(2, 5);
        }
        std::string covered;
        for (const auto &[n, d] : cases) {
            const auto res = optimal_classical_bruteforce(ClassicalTask(n, d));
            c.close_enough(res.optimum, closed_form_classical(n, d), kTolerance,
                           "n=" + std::to_string(n) + " d=" + std::to_string(d));
            covered += (covered.empty() ? "" : " ") + std::string("(") + std::to_string(n) + "," +
                       std::to_string(d) + ")";
        }
        out.push_back(c.done(covered));
    }
    {
        detail::CheckBuilder c("advantage condition d > r^2+3r+1 matches closed forms");
        for (std::size_t d = 2; d <= 200; ++d) {
            for (std::size_t r = 0; r < d; ++r) {
                const double diff = closed_form_restricted(d, r) - closed_form_classical(2, d);
                const auto ord = compare_restricted_to_classical(d, r);
                const bool ok = ord == std::strong_ordering::equal ? std::abs(diff) <= 1e-15
                                : ord == std::strong_ordering::greater ? diff > 0
                                                                        : diff < 0;
                if (!ok || advantage_holds(d, r) != (ord == std::strong_ordering::greater)) {
                    c.fail("d=" + std::to_string(d) + " r=" + std::to_string(r));
                }
            }
        }
        out.push_back(c.done("d=2..200, 0<=r<d"));
    }
    {
        detail::CheckBuilder c("r_max staircase: 0 on 2..5, 1 on 6..11, 2 on 12..19");
        for (std::size_t d = 2; d <= 19; ++d) {
            const std::size_t want = d <= 5 ? 0 : d <= 11 ? 1 : 2;
            if (r_max(d) != want) {
                c.fail("d=" + std::to_string(d));
            }
        }
        out.push_back(c.done("d=2..19"));
    }
    {
        detail::CheckBuilder c("full-protocol advantage ratio peaks at d=6");
        const auto best = best_full_ratio_dimension(2, 1000);
        if (best != 6) {
            c.fail("argmax d=" + std::to_string(best));
        }
        out.push_back(c.done("d=2..1000"));
    }
    return out;
}

} // namespace qrac
