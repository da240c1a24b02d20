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

#include <cstddef>
#include <random>
#include <vector>

#include "claimdiv/interval.hpp"
#include "claimdiv/problems.hpp"
#include "claimdiv/random.hpp"
#include "claimdiv/rules.hpp"

namespace claimdiv {

using IntervalAllocation = std::vector<Interval>;

namespace detail {

// Claim vector for the corner in which player i stands at `own` while
// everyone else stands at the opposite bound.
inline std::vector<double> corner_claims(const std::vector<Interval>& claims,
                                         std::size_t i, bool own_upper) {
    std::vector<double> out;
    out.reserve(claims.size());
    for (std::size_t j = 0; j < claims.size(); ++j) {
        if (j == i) {
            out.push_back(own_upper ? claims[j].hi() : claims[j].lo());
        } else {
            out.push_back(own_upper ? claims[j].lo() : claims[j].hi());
        }
    }
    return out;
}

// Corner payoffs that coincide in exact arithmetic can come back from the
// two evaluations in either order, off by rounding dust. Reorder inversions
// within tolerance; anything larger is a genuine monotonicity breach and
// surfaces as a ConstructionError.
inline Interval corner_interval(double lo, double hi) {
    if (lo > hi && lo - hi <= kTolerance) return Interval(hi, lo);
    return Interval(lo, hi);
}

inline IntervalAllocation corner_interval_rule(RuleId rule, double estate_lo,
                                               double estate_hi,
                                               const std::vector<Interval>& claims) {
    IntervalAllocation rewards;
    rewards.reserve(claims.size());
    for (std::size_t i = 0; i < claims.size(); ++i) {
        const double lo = apply_rule(
            rule, BankruptcyProblem(estate_lo, corner_claims(claims, i, false)))[i];
        const double hi = apply_rule(
            rule, BankruptcyProblem(estate_hi, corner_claims(claims, i, true)))[i];
        rewards.push_back(corner_interval(lo, hi));
    }
    return rewards;
}

} // namespace detail

/// Reward interval per player: the low endpoint plays one's own lower claim
/// against everyone else's upper claims, the high endpoint the opposite
/// corner, both at the same estate.
inline IntervalAllocation interval_rule(RuleId rule, const IntervalClaimsProblem& p) {
    return detail::corner_interval_rule(rule, p.estate(), p.estate(), p.claims());
}

/// As interval_rule, with the low corner at the low estate and the high
/// corner at the high estate.
inline IntervalAllocation interval_rule_interval_estate(RuleId rule,
                                                        const IntervalProblem& p) {
    return detail::corner_interval_rule(rule, p.estate().lo(), p.estate().hi(),
                                        p.claims());
}

/// The interval rule of the problem with claims capped at the estate.
inline IntervalAllocation truncated_interval_rule(RuleId rule,
                                                  const IntervalClaimsProblem& p) {
    return interval_rule(rule, p.truncated());
}

/// Rewards are nonnegative and no better than the claims.
inline bool check_reasonable(const IntervalAllocation& rewards,
                             const std::vector<Interval>& claims,
                             double tol = kTolerance) {
    if (rewards.size() != claims.size()) {
        throw DimensionMismatch("allocation and claims sizes differ");
    }
    for (std::size_t i = 0; i < rewards.size(); ++i) {
        if (rewards[i].lo() < -tol) return false;
        if (!weakly_better(claims[i], rewards[i], tol)) return false;
    }
    return true;
}

inline bool check_reasonable(const IntervalAllocation& rewards,
                             const IntervalClaimsProblem& p, double tol = kTolerance) {
    return check_reasonable(rewards, p.claims(), tol);
}

inline bool check_reasonable(const IntervalAllocation& rewards,
                             const IntervalProblem& p, double tol = kTolerance) {
    return check_reasonable(rewards, p.claims(), tol);
}

/// The reward-sum interval covers every admissible estate value. For a
/// crisp estate this is plain membership of E in the sum.
inline bool check_weakly_efficient(const IntervalAllocation& rewards,
                                   const Interval& estate, double tol = kTolerance) {
    Interval sum(0.0, 0.0);
    for (const Interval& r : rewards) sum = add(sum, r);
    return sum.lo() <= estate.lo() + tol && estate.hi() <= sum.hi() + tol;
}

inline bool check_weakly_efficient(const IntervalAllocation& rewards, double estate,
                                   double tol = kTolerance) {
    return check_weakly_efficient(rewards, Interval(estate), tol);
}

struct TightnessViolation {
    std::size_t player = 0;
    double estate = 0.0;
    std::vector<double> selection;
    double payoff = 0.0;   // crisp payoff that escaped the reward interval
    double deviation = 0.0;
};

struct TightnessReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double max_corner_deviation = 0.0;
    std::vector<TightnessViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// Checks that the reward intervals are exactly the selection ranges:
/// (a) both endpoints are attained by the designated corner selections,
/// re-evaluated through the crisp rule, and (b) `samples` random interior
/// selections all pay inside the intervals.
inline TightnessReport check_corner_tightness(RuleId rule, const IntervalProblem& p,
                                              std::size_t samples,
                                              std::mt19937_64& rng,
                                              double tol = kTolerance) {
    TightnessReport report;
    report.samples = samples;
    const IntervalAllocation rewards = interval_rule_interval_estate(rule, p);
    const std::size_t n = p.size();

    // (a) corner attainment
    for (std::size_t i = 0; i < n; ++i) {
        const double at_lo = apply_rule(
            rule, BankruptcyProblem(p.estate().lo(),
                                    detail::corner_claims(p.claims(), i, false)))[i];
        const double at_hi = apply_rule(
            rule, BankruptcyProblem(p.estate().hi(),
                                    detail::corner_claims(p.claims(), i, true)))[i];
        const double dev_lo = std::abs(at_lo - rewards[i].lo());
        const double dev_hi = std::abs(at_hi - rewards[i].hi());
        report.max_corner_deviation =
            std::max({report.max_corner_deviation, dev_lo, dev_hi});
        if (dev_lo > tol) {
            report.violations.push_back(TightnessViolation{
                i, p.estate().lo(), detail::corner_claims(p.claims(), i, false),
                at_lo, dev_lo});
        }
        if (dev_hi > tol) {
            report.violations.push_back(TightnessViolation{
                i, p.estate().hi(), detail::corner_claims(p.claims(), i, true),
                at_hi, dev_hi});
        }
    }

    // (b) interior selections
    for (std::size_t s = 0; s < samples; ++s) {
        const double estate = uniform_in(rng, p.estate().lo(), p.estate().hi());
        std::vector<double> selection;
        selection.reserve(n);
        for (const Interval& d : p.claims()) {
            selection.push_back(uniform_in(rng, d.lo(), d.hi()));
        }
        const Allocation payoff = apply_rule(rule, BankruptcyProblem(estate, selection));
        for (std::size_t i = 0; i < n; ++i) {
            if (!contains(rewards[i], payoff[i], tol)) {
                const double dev = payoff[i] < rewards[i].lo()
                                       ? rewards[i].lo() - payoff[i]
                                       : payoff[i] - rewards[i].hi();
                report.violations.push_back(
                    TightnessViolation{i, estate, selection, payoff[i], dev});
            }
        }
    }
    return report;
}

inline TightnessReport check_corner_tightness(RuleId rule,
                                              const IntervalClaimsProblem& p,
                                              std::size_t samples,
                                              std::mt19937_64& rng,
                                              double tol = kTolerance) {
    const IntervalProblem lifted(Interval(p.estate()), p.claims());
    return check_corner_tightness(rule, lifted, samples, rng, tol);
}

} // namespace claimdiv
