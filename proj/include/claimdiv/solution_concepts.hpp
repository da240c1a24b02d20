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
#include <vector>

#include "claimdiv/errors.hpp"
#include "claimdiv/games.hpp"
#include "claimdiv/interval_rules.hpp"
#include "claimdiv/rules.hpp"

namespace claimdiv {

/// Per-player marginal contributions to the grand coalition, and the same
/// corrected by an equal share of any shortfall so the corrected vectors
/// cover the grand-coalition value.
struct MarginalVectors {
    std::vector<double> m_hi; // hi(N) - lo(N \ {i})
    std::vector<double> m_lo; // lo(N) - hi(N \ {i})
    std::vector<double> k_hi; // m_hi plus equal share of (hi(N) - sum m_hi)_+
    std::vector<double> k_lo;
};

inline MarginalVectors marginal_vectors(const IntervalGame& w) {
    const std::size_t n = w.players();
    if (n < 2) {
        throw UnsupportedGame("marginal vectors need at least two players");
    }
    const CoalitionMask full = w.grand_coalition();
    MarginalVectors mv;
    mv.m_hi.reserve(n);
    mv.m_lo.reserve(n);
    double sum_hi = 0.0;
    double sum_lo = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const CoalitionMask rest = full ^ static_cast<CoalitionMask>(1u << i);
        mv.m_hi.push_back(w.value(full).hi() - w.value(rest).lo());
        mv.m_lo.push_back(w.value(full).lo() - w.value(rest).hi());
        sum_hi += mv.m_hi.back();
        sum_lo += mv.m_lo.back();
    }
    const double share_hi =
        std::max(w.value(full).hi() - sum_hi, 0.0) / static_cast<double>(n);
    const double share_lo =
        std::max(w.value(full).lo() - sum_lo, 0.0) / static_cast<double>(n);
    mv.k_hi = mv.m_hi;
    mv.k_lo = mv.m_lo;
    for (std::size_t i = 0; i < n; ++i) {
        mv.k_hi[i] += share_hi;
        mv.k_lo[i] += share_lo;
    }
    return mv;
}

namespace detail {

inline BankruptcyProblem corner_problem_or_throw(double estate,
                                                 std::vector<double> claims) {
    double total = 0.0;
    for (double d : claims) {
        if (d < 0.0) {
            throw NotABankruptcyInstance("corner claim is negative");
        }
        total += d;
    }
    if (estate < 0.0 || estate > total) {
        throw NotABankruptcyInstance("corner estate exceeds corner claims");
    }
    return BankruptcyProblem(estate, std::move(claims));
}

} // namespace detail

/// Interval solution obtained by evaluating the crisp rule on two corner
/// problems built from the corrected marginal vectors: the low corner pairs
/// the low grand-coalition value with (k_lo_i, k_hi_everyone_else), the high
/// corner the opposite. Defined for any interval game whose corner problems
/// are genuine bankruptcy problems; otherwise NotABankruptcyInstance.
inline IntervalAllocation g_f(RuleId rule, const IntervalGame& w) {
    const std::size_t n = w.players();
    if (n < 2) {
        throw UnsupportedGame("solution concept needs at least two players");
    }
    const MarginalVectors mv = marginal_vectors(w);
    const double estate_lo = w.value(w.grand_coalition()).lo();
    const double estate_hi = w.value(w.grand_coalition()).hi();

    IntervalAllocation rewards;
    rewards.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> claims_lo = mv.k_hi;
        claims_lo[i] = mv.k_lo[i];
        std::vector<double> claims_hi = mv.k_lo;
        claims_hi[i] = mv.k_hi[i];
        double lo = apply_rule(
            rule, detail::corner_problem_or_throw(estate_lo, std::move(claims_lo)))[i];
        double hi = apply_rule(
            rule, detail::corner_problem_or_throw(estate_hi, std::move(claims_hi)))[i];
        if (lo > hi) {
            // rounding dust on equal corners is reordered; a real inversion
            // means the game is outside the bankruptcy domain
            if (lo - hi > kTolerance) {
                throw NotABankruptcyInstance(
                    "corner evaluations do not form an interval");
            }
            std::swap(lo, hi);
        }
        rewards.emplace_back(lo, hi);
    }
    return rewards;
}

/// Equality chain relating the game-based solution to the truncated and
/// plain interval rules on one problem. The first link holds for every
/// rule; the second holds exactly when the rule is truncation invariant.
struct TheoremReport {
    RuleId rule = RuleId::TAL;
    double estate = 0.0;                // inputs, kept for serialization
    std::vector<Interval> claims;
    IntervalAllocation game_solution;   // g_f on the interval game
    IntervalAllocation truncated_rule;  // rule on claims capped at the estate
    IntervalAllocation plain_rule;      // rule on the claims as given
    bool game_eq_truncated = false;
    bool truncated_eq_plain = false;
    bool game_eq_plain = false;
    double max_deviation = 0.0; // largest endpoint gap across the chain

    bool chain_holds() const {
        return game_eq_truncated && truncated_eq_plain && game_eq_plain;
    }
};

namespace detail {

inline double max_endpoint_gap(const IntervalAllocation& a,
                               const IntervalAllocation& b) {
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        gap = std::max({gap, std::abs(a[i].lo() - b[i].lo()),
                        std::abs(a[i].hi() - b[i].hi())});
    }
    return gap;
}

inline bool allocations_close(const IntervalAllocation& a,
                              const IntervalAllocation& b, double tol) {
    return max_endpoint_gap(a, b) <= tol;
}

} // namespace detail

inline TheoremReport verify_theorem_int5(RuleId rule, const IntervalClaimsProblem& p,
                                         double tol = kTolerance) {
    TheoremReport report;
    report.rule = rule;
    report.estate = p.estate();
    report.claims = p.claims();
    report.game_solution = g_f(rule, interval_bankruptcy_game(p));
    report.truncated_rule = truncated_interval_rule(rule, p);
    report.plain_rule = interval_rule(rule, p);
    report.game_eq_truncated =
        detail::allocations_close(report.game_solution, report.truncated_rule, tol);
    report.truncated_eq_plain =
        detail::allocations_close(report.truncated_rule, report.plain_rule, tol);
    report.game_eq_plain =
        detail::allocations_close(report.game_solution, report.plain_rule, tol);
    report.max_deviation = std::max(
        {detail::max_endpoint_gap(report.game_solution, report.truncated_rule),
         detail::max_endpoint_gap(report.truncated_rule, report.plain_rule),
         detail::max_endpoint_gap(report.game_solution, report.plain_rule)});
    return report;
}

} // namespace claimdiv
