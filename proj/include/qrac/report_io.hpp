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
 * @file report_io.hpp
 * Deterministic text, CSV and JSON rendering of reports.
 *
 * Human-readable and CSV output prints probabilities with 7 significant
 * digits; JSON carries full double precision. Field order is fixed and lines
 * end in LF, so identical inputs give byte-identical output.
 */
#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "advantage.hpp"
#include "classical_protocol.hpp"
#include "quantum_protocol.hpp"
#include "simulator.hpp"
#include "strategy_io.hpp"
#include "version.hpp"

namespace qrac {

using Json = nlohmann::ordered_json;

/// 7 significant digits, trailing zeros kept ("0.7500000").
[[nodiscard]] inline std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%#.7g", p);
    return buf;
}

inline constexpr const char *kScanCsvHeader =
    "d,dprime,r_max,p_classical,p_quantum_full,p_quantum_restricted,ratio";

[[nodiscard]] inline std::string scan_csv(const std::vector<AdvantageRow> &rows) {
    std::ostringstream out;
    out << kScanCsvHeader << '\n';
    for (const auto &row : rows) {
        out << row.d << ',' << row.d_prime << ',' << row.r_max << ','
            << format_probability(row.p_classical) << ','
            << format_probability(row.p_quantum_full) << ','
            << format_probability(row.p_quantum_restricted) << ','
            << format_probability(row.ratio) << '\n';
    }
    return out.str();
}

/// Common provenance block: tool version, parameters and value sources.
[[nodiscard]] inline Json provenance(const std::string &command, Json parameters,
                                     std::vector<std::string> closed_form,
                                     std::vector<std::string> enumerated) {
    Json p;
    p["artifact"] = "qrac-sim";
    p["version"] = kVersion;
    p["command"] = command;
    p["parameters"] = std::move(parameters);
    p["closed_form"] = std::move(closed_form);
    p["enumerated"] = std::move(enumerated);
    return p;
}

[[nodiscard]] inline Json success_report_json(const SuccessReport &r) {
    Json j;
    j["average"] = r.average;
    j["worst_case"] = r.worst_case;
    j["worst_pair"] = r.worst_pair;
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.per_input.size() / r.n; ++i) {
        Json row;
        row["x"] = string_digits(i, r.n, r.d);
        std::vector<double> per_question(r.per_input.begin() + static_cast<long>(i * r.n),
                                         r.per_input.begin() + static_cast<long>((i + 1) * r.n));
        row["success"] = per_question;
        rows.push_back(std::move(row));
    }
    j["per_input"] = std::move(rows);
    return j;
}

[[nodiscard]] inline Json quantum_exact_json(const ProtocolSpec &spec, const SuccessReport &r) {
    Json params;
    params["task"] = spec.d_prime() == spec.d() ? "full" : "restricted";
    params["d"] = spec.d();
    params["dprime"] = spec.d_prime();
    params["r"] = spec.r();
    params["variant"] = spec.variant() == GatingVariant::IndependentGating ? "canonical" : "literal";
    Json j;
    j["provenance"] = provenance("exact", params, {"closed_form_restricted"},
                                 {"average", "worst_case", "worst_pair", "per_input"});
    j["average"] = r.average;
    j["worst_case"] = r.worst_case;
    j["worst_pair"] = r.worst_pair;
    j["closed_form_restricted"] = closed_form_restricted(spec.d(), spec.r());
    j["report"] = success_report_json(r);
    return j;
}

[[nodiscard]] inline Json classical_exact_json(const ClassicalTask &task, const SuccessReport &r,
                                               std::uint64_t correct) {
    Json params;
    params["task"] = "classical";
    params["n"] = task.n();
    params["d"] = task.d();
    Json j;
    std::vector<std::string> closed;
    if (task.n() == 2 || task.n() == 3) {
        closed.emplace_back("closed_form_classical");
    }
    j["provenance"] = provenance("exact", params, closed, {"average", "worst_case", "worst_pair", "per_input"});
    j["average"] = r.average;
    j["worst_case"] = r.worst_case;
    j["worst_pair"] = r.worst_pair;
    j["correct"] = correct;
    j["total"] = static_cast<std::uint64_t>(task.n()) * task.input_count();
    if (task.n() == 2 || task.n() == 3) {
        j["closed_form_classical"] = closed_form_classical(task.n(), task.d());
    }
    j["report"] = success_report_json(r);
    return j;
}

[[nodiscard]] inline Json scan_json(const std::vector<AdvantageRow> &rows) {
    Json params;
    params["dmin"] = rows.empty() ? 0 : rows.front().d;
    params["dmax"] = rows.empty() ? 0 : rows.back().d;
    Json j;
    j["provenance"] = provenance("scan", params,
                                 {"p_classical", "p_quantum_full", "p_quantum_restricted", "ratio"},
                                 {"p_enumerated"});
    Json out = Json::array();
    for (const auto &row : rows) {
        Json r;
        r["d"] = row.d;
        r["dprime"] = row.d_prime;
        r["r_max"] = row.r_max;
        r["p_classical"] = row.p_classical;
        r["p_quantum_full"] = row.p_quantum_full;
        r["p_quantum_restricted"] = row.p_quantum_restricted;
        r["ratio"] = row.ratio;
        r["p_enumerated"] = row.p_enumerated ? Json(*row.p_enumerated) : Json(nullptr);
        out.push_back(std::move(r));
    }
    j["rows"] = std::move(out);
    return j;
}

[[nodiscard]] inline Json oracle_json(const ClassicalTask &task, const OracleResult &res) {
    Json params;
    params["n"] = task.n();
    params["d"] = task.d();
    params["symmetry_reduction"] = res.symmetry_reduced;
    Json j;
    j["provenance"] = provenance("oracle", params,
                                 (task.n() == 2 || task.n() == 3)
                                     ? std::vector<std::string>{"closed_form_classical"}
                                     : std::vector<std::string>{},
                                 {"optimum", "witness"});
    j["optimum"] = res.optimum;
    j["correct"] = res.correct;
    j["total"] = res.total;
    j["strategies_examined"] = res.strategies_examined;
    if (task.n() == 2 || task.n() == 3) {
        j["closed_form_classical"] = closed_form_classical(task.n(), task.d());
    }
    j["witness"]["encoder"] = res.witness.encoder;
    j["witness"]["decoders"] = res.witness.decoders;
    j["witness"]["table"] = strategy_to_string(task, res.witness);
    return j;
}

[[nodiscard]] inline Json estimate_json(const std::string &protocol, Json parameters,
                                        const TrialConfig &config, const Estimate &e,
                                        double exact) {
    parameters["protocol"] = protocol;
    parameters["trials"] = config.trials;
    parameters["seed"] = config.seed;
    Json j;
    j["provenance"] = provenance("simulate", std::move(parameters), {}, {"exact"});
    j["mean"] = e.mean;
    j["stderr"] = e.std_error;
    j["trials"] = e.trials;
    j["successes"] = e.successes;
    j["exact"] = exact;
    return j;
}

/// JSON text with two-space indentation and a trailing LF.
[[nodiscard]] inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace qrac
