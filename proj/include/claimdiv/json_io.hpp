// Copyright 2026 The claimdiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "claimdiv/errors.hpp"
#include "claimdiv/games.hpp"
#include "claimdiv/interval.hpp"
#include "claimdiv/problems.hpp"
#include "claimdiv/rules.hpp"

namespace claimdiv {

using Json = nlohmann::ordered_json;

// --- intervals: two-element arrays [lo, hi] ---

inline Json to_json(const Interval& a) { return Json::array({a.lo(), a.hi()}); }

inline Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ProblemValidationError("interval must be a [lo, hi] array");
    }
    return Interval(j[0].get<double>(), j[1].get<double>());
}

// --- allocations ---

inline Json to_json(const std::vector<double>& x) {
    Json out = Json::array();
    for (double v : x) out.push_back(v);
    return out;
}

inline Json to_json(const std::vector<Interval>& x) {
    Json out = Json::array();
    for (const Interval& v : x) out.push_back(to_json(v));
    return out;
}

// --- problems ---

inline Json to_json(const BankruptcyProblem& p) {
    return Json{{"estate", p.estate()}, {"claims", p.claims()}};
}

inline Json to_json(const IntervalClaimsProblem& p) {
    return Json{{"estate", p.estate()}, {"claims", to_json(p.claims())}};
}

inline Json to_json(const IntervalProblem& p) {
    return Json{{"estate", to_json(p.estate())}, {"claims", to_json(p.claims())}};
}

using AnyProblem =
    std::variant<BankruptcyProblem, IntervalClaimsProblem, IntervalProblem>;

/// Problem files distinguish crisp and interval shapes by the JSON type of
/// the estate and claim entries; mixed claim shapes normalize to degenerate
/// intervals.
inline AnyProblem problem_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("estate") || !j.contains("claims") ||
        !j["claims"].is_array() || j["claims"].empty()) {
        throw ProblemValidationError(
            "problem must be {\"estate\": ..., \"claims\": [...]}");
    }
    bool any_interval_claim = false;
    for (const Json& c : j["claims"]) {
        if (c.is_array()) {
            any_interval_claim = true;
        } else if (!c.is_number()) {
            throw ProblemValidationError("claims must be numbers or [lo, hi] arrays");
        }
    }
    auto claim_intervals = [&j]() {
        std::vector<Interval> claims;
        for (const Json& c : j["claims"]) {
            claims.push_back(c.is_array() ? interval_from_json(c)
                                          : Interval(c.get<double>()));
        }
        return claims;
    };
    if (j["estate"].is_array()) {
        return IntervalProblem(interval_from_json(j["estate"]), claim_intervals());
    }
    if (!j["estate"].is_number()) {
        throw ProblemValidationError("estate must be a number or a [lo, hi] array");
    }
    const double estate = j["estate"].get<double>();
    if (!any_interval_claim) {
        std::vector<double> claims;
        for (const Json& c : j["claims"]) claims.push_back(c.get<double>());
        return BankruptcyProblem(estate, std::move(claims));
    }
    return IntervalClaimsProblem(estate, claim_intervals());
}

// --- games: values keyed by comma-separated player lists, players from 1 ---

namespace detail {

inline std::string coalition_key(CoalitionMask mask) {
    std::string key;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1u) {
            if (!key.empty()) key += ",";
            key += std::to_string(i + 1);
        }
    }
    return key;
}

inline CoalitionMask coalition_from_key(const std::string& key, std::size_t n) {
    CoalitionMask mask = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t next = key.find(',', pos);
        if (next == std::string::npos) next = key.size();
        const unsigned long player = std::stoul(key.substr(pos, next - pos));
        if (player < 1 || player > n) {
            throw ProblemValidationError("player " + std::to_string(player) +
                                         " outside 1.." + std::to_string(n));
        }
        mask |= static_cast<CoalitionMask>(1u << (player - 1));
        pos = next + 1;
    }
    return mask;
}

} // namespace detail

inline Json to_json(const CoalitionGame& g) {
    Json values = Json::object();
    for (CoalitionMask mask = 1; mask <= g.grand_coalition(); ++mask) {
        values[detail::coalition_key(mask)] = g.value(mask);
    }
    return Json{{"n", g.players()}, {"values", values}};
}

inline Json to_json(const IntervalGame& g) {
    Json values = Json::object();
    for (CoalitionMask mask = 1; mask <= g.grand_coalition(); ++mask) {
        values[detail::coalition_key(mask)] = to_json(g.value(mask));
    }
    return Json{{"n", g.players()}, {"values", values}};
}

inline IntervalGame interval_game_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("values") ||
        !j["n"].is_number_unsigned() || !j["values"].is_object()) {
        throw ProblemValidationError(
            "game must be {\"n\": int, \"values\": {...}}");
    }
    const std::size_t n = j["n"].get<std::size_t>();
    detail::check_player_count(n);
    const std::size_t count = (std::size_t{1} << n) - 1;
    std::vector<Interval> values(count, Interval(0.0, 0.0));
    std::vector<bool> seen(count, false);
    for (const auto& [key, value] : j["values"].items()) {
        const CoalitionMask mask = detail::coalition_from_key(key, n);
        values[mask - 1] = value.is_array() ? interval_from_json(value)
                                            : Interval(value.get<double>());
        seen[mask - 1] = true;
    }
    for (bool s : seen) {
        if (!s) {
            throw ProblemValidationError("game values must cover every coalition");
        }
    }
    return IntervalGame(n, std::move(values));
}

} // namespace claimdiv
