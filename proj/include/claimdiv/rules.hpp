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

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "claimdiv/errors.hpp"
#include "claimdiv/problems.hpp"

namespace claimdiv {

using Allocation = std::vector<double>;

enum class RuleId { PROP, CEA, CEL, TAL };

inline constexpr RuleId kAllRules[] = {RuleId::PROP, RuleId::CEA, RuleId::CEL,
                                       RuleId::TAL};

inline std::string to_string(RuleId rule) {
    switch (rule) {
        case RuleId::PROP: return "prop";
        case RuleId::CEA: return "cea";
        case RuleId::CEL: return "cel";
        case RuleId::TAL: return "tal";
    }
    return "?";
}

inline RuleId rule_from_string(const std::string& token) {
    if (token == "prop") return RuleId::PROP;
    if (token == "cea") return RuleId::CEA;
    if (token == "cel") return RuleId::CEL;
    if (token == "tal") return RuleId::TAL;
    throw Error("unknown rule '" + token + "'");
}

namespace detail {

// Level a with sum_i min(d_i, a) == amount, found by sorting the claims and
// walking the breakpoints of the piecewise-linear sum. Requires
// 0 <= amount <= sum(d); no iterative approximation involved.
inline double equal_awards_level(double amount, std::vector<double> claims) {
    std::sort(claims.begin(), claims.end());
    const std::size_t n = claims.size();
    double remaining = amount;
    double level = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double width = claims[k] - level;
        const double capacity = width * static_cast<double>(n - k);
        if (remaining <= capacity) {
            return level + remaining / static_cast<double>(n - k);
        }
        remaining -= capacity;
        level = claims[k];
    }
    // amount == sum(d) up to rounding dust: every claim is met in full.
    return level;
}

inline std::vector<double> halved(const std::vector<double>& claims) {
    std::vector<double> out;
    out.reserve(claims.size());
    for (double d : claims) out.push_back(d / 2.0);
    return out;
}

} // namespace detail

/// Proportional split: x_i = E * d_i / sum(d).
inline Allocation rule_prop(const BankruptcyProblem& p) {
    const double total = p.total_claims();
    if (total == 0.0) {
        if (p.estate() > 0.0) {
            throw DegenerateProblem("positive estate with zero total claims");
        }
        return Allocation(p.size(), 0.0);
    }
    Allocation x;
    x.reserve(p.size());
    for (double d : p.claims()) x.push_back(p.estate() * d / total);
    return x;
}

/// Constrained equal awards: x_i = min(d_i, a) with sum(x) == E.
inline Allocation rule_cea(const BankruptcyProblem& p) {
    const double a = detail::equal_awards_level(p.estate(), p.claims());
    Allocation x;
    x.reserve(p.size());
    for (double d : p.claims()) x.push_back(std::min(d, a));
    return x;
}

/// Constrained equal losses: x_i = max(d_i - b, 0) with sum(x) == E.
/// Dual of CEA: the loss level b is the awards level for the total loss
/// sum(d) - E, since max(d_i - b, 0) = d_i - min(d_i, b).
inline Allocation rule_cel(const BankruptcyProblem& p) {
    const double b = detail::equal_awards_level(p.total_claims() - p.estate(),
                                                p.claims());
    Allocation x;
    x.reserve(p.size());
    for (double d : p.claims()) x.push_back(std::max(d - b, 0.0));
    return x;
}

/// Talmudic rule: CEA on half-claims while E <= sum(d)/2, otherwise
/// half-claims plus CEL of the surplus on half-claims.
inline Allocation rule_tal(const BankruptcyProblem& p) {
    const double total = p.total_claims();
    const std::vector<double> half = detail::halved(p.claims());
    if (p.estate() <= total / 2.0) {
        return rule_cea(BankruptcyProblem(p.estate(), half));
    }
    Allocation x = rule_cel(BankruptcyProblem(p.estate() - total / 2.0, half));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += half[i];
    return x;
}

inline Allocation apply_rule(RuleId rule, const BankruptcyProblem& p) {
    switch (rule) {
        case RuleId::PROP: return rule_prop(p);
        case RuleId::CEA: return rule_cea(p);
        case RuleId::CEL: return rule_cel(p);
        case RuleId::TAL: return rule_tal(p);
    }
    throw Error("unreachable rule dispatch");
}

/// Replace every claim by min(claim, estate).
inline BankruptcyProblem truncate_claims(const BankruptcyProblem& p) {
    std::vector<double> capped;
    capped.reserve(p.size());
    for (double d : p.claims()) capped.push_back(std::min(d, p.estate()));
    return BankruptcyProblem(p.estate(), std::move(capped));
}

/// Truncation invariance at one instance: the rule ignores the part of any
/// claim exceeding the estate. This is the characterization of rules
/// obtainable as solutions of the associated coalition game.
inline bool is_game_theoretic_at(RuleId rule, const BankruptcyProblem& p,
                                 double tol = kTolerance) {
    const Allocation full = apply_rule(rule, p);
    const Allocation capped = apply_rule(rule, truncate_claims(p));
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (!approx_equal(full[i], capped[i], tol)) return false;
    }
    return true;
}

/// Finite grid of axis perturbations: values v0 + k*step for |k*step| <= span.
struct MonotonicityGrid {
    double step = 0.5;
    double span = 2.0;
};

struct MonotonicityViolation {
    // Axis index: 0 is the estate, 1..n are the claims.
    std::size_t axis = 0;
    std::size_t player = 0;       // component of the allocation that moved
    double axis_value_from = 0.0; // adjacent grid values along the axis
    double axis_value_to = 0.0;
    double drop = 0.0;            // magnitude of the violation
};

struct MonotonicityReport {
    RuleId rule = RuleId::PROP;
    std::vector<MonotonicityViolation> violations;
    std::size_t evaluations = 0;

    bool passed() const { return violations.empty(); }
};

/// Samples the rule along every axis of a perturbation grid around `base`
/// and records wherever a payoff moves against the expected direction:
/// payoffs never fall when the estate or one's own claim grows, and never
/// rise when somebody else's claim grows. Invalid grid points are skipped.
inline MonotonicityReport check_monotonicity(RuleId rule,
                                             const BankruptcyProblem& base,
                                             const MonotonicityGrid& grid,
                                             double tol = kTolerance) {
    MonotonicityReport report;
    report.rule = rule;
    const std::size_t n = base.size();
    const int steps = static_cast<int>(grid.span / grid.step);

    // axis 0: estate; axis 1..n: claim of player axis-1.
    for (std::size_t axis = 0; axis <= n; ++axis) {
        bool have_prev = false;
        double prev_value = 0.0;
        Allocation prev_alloc;
        for (int k = -steps; k <= steps; ++k) {
            double estate = base.estate();
            std::vector<double> claims = base.claims();
            const double delta = static_cast<double>(k) * grid.step;
            double axis_value = 0.0;
            if (axis == 0) {
                estate += delta;
                axis_value = estate;
            } else {
                claims[axis - 1] += delta;
                axis_value = claims[axis - 1];
            }
            double total = 0.0;
            for (double d : claims) total += d;
            const bool valid = estate >= 0.0 && estate <= total &&
                               *std::min_element(claims.begin(), claims.end()) >= 0.0;
            if (!valid) {
                continue;
            }
            const Allocation alloc =
                apply_rule(rule, BankruptcyProblem(estate, claims));
            ++report.evaluations;
            if (have_prev) {
                for (std::size_t i = 0; i < n; ++i) {
                    const double change = alloc[i] - prev_alloc[i];
                    // Own payoff may not fall along the estate or own-claim
                    // axis; it may not rise along another player's axis.
                    const bool own_axis = axis == 0 || axis == i + 1;
                    const double drop = own_axis ? -change : change;
                    if (drop > tol) {
                        report.violations.push_back(MonotonicityViolation{
                            axis, i, prev_value, axis_value, drop});
                    }
                }
            }
            have_prev = true;
            prev_value = axis_value;
            prev_alloc = alloc;
        }
    }
    return report;
}

} // namespace claimdiv
