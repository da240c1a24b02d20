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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "claimdiv/errors.hpp"
#include "claimdiv/interval.hpp"
#include "claimdiv/problems.hpp"

namespace claimdiv {

using CoalitionMask = std::uint32_t;

inline constexpr std::size_t kMaxPlayers = 20;

namespace detail {

inline void check_player_count(std::size_t n) {
    if (n < 1 || n > kMaxPlayers) {
        throw ProblemValidationError("player count " + std::to_string(n) +
                                     " outside [1, " +
                                     std::to_string(kMaxPlayers) + "]");
    }
}

// s[mask] = sum of claims[i] over i in mask, accumulated in bit order so the
// summation pattern is identical across claim vectors of the same length.
inline std::vector<double> subset_sums(const std::vector<double>& values) {
    const std::size_t size = std::size_t{1} << values.size();
    std::vector<double> sums(size, 0.0);
    for (CoalitionMask mask = 1; mask < size; ++mask) {
        const int low = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + values[static_cast<std::size_t>(low)];
    }
    return sums;
}

} // namespace detail

/// Transferable-utility game on n players: one nonnegative value per
/// nonempty coalition, stored densely and indexed by bitmask (player i is
/// bit i). The empty coalition is implicitly worth 0.
class CoalitionGame {
public:
    CoalitionGame(std::size_t n, std::vector<double> values)
        : n_(n), values_(std::move(values)) {
        detail::check_player_count(n_);
        if (values_.size() != (std::size_t{1} << n_) - 1) {
            throw DimensionMismatch("expected 2^n - 1 coalition values");
        }
        for (double v : values_) {
            if (v < 0.0) {
                throw ConstructionError("coalition values must be nonnegative");
            }
        }
    }

    std::size_t players() const { return n_; }
    CoalitionMask grand_coalition() const {
        return static_cast<CoalitionMask>((std::size_t{1} << n_) - 1);
    }

    double value(CoalitionMask coalition) const {
        if (coalition == 0) return 0.0;
        return values_.at(coalition - 1);
    }

    const std::vector<double>& values() const { return values_; }

private:
    std::size_t n_;
    std::vector<double> values_; // index mask - 1
};

/// Game whose coalition values are closed intervals.
class IntervalGame {
public:
    IntervalGame(std::size_t n, std::vector<Interval> values)
        : n_(n), values_(std::move(values)) {
        detail::check_player_count(n_);
        if (values_.size() != (std::size_t{1} << n_) - 1) {
            throw DimensionMismatch("expected 2^n - 1 coalition values");
        }
    }

    std::size_t players() const { return n_; }
    CoalitionMask grand_coalition() const {
        return static_cast<CoalitionMask>((std::size_t{1} << n_) - 1);
    }

    Interval value(CoalitionMask coalition) const {
        if (coalition == 0) return Interval(0.0, 0.0);
        return values_.at(coalition - 1);
    }

    const std::vector<Interval>& values() const { return values_; }

private:
    std::size_t n_;
    std::vector<Interval> values_;
};

namespace detail {

// v(S) = (estate - sum of claims outside S)_+, the residual guaranteed to S
// once everyone else is paid in full. Complement sums are accumulated
// directly (never as total minus subset) so that values that are zero in
// exact arithmetic come out exactly zero.
inline std::vector<double> bankruptcy_values(double estate,
                                             const std::vector<double>& claims) {
    const std::vector<double> sums = subset_sums(claims);
    const CoalitionMask full =
        static_cast<CoalitionMask>((std::size_t{1} << claims.size()) - 1);
    std::vector<double> values;
    values.reserve(sums.size() - 1);
    for (CoalitionMask mask = 1; mask <= full; ++mask) {
        values.push_back(std::max(estate - sums[full ^ mask], 0.0));
    }
    return values;
}

} // namespace detail

inline CoalitionGame bankruptcy_game(const BankruptcyProblem& p) {
    return CoalitionGame(p.size(), detail::bankruptcy_values(p.estate(), p.claims()));
}

/// Coalition values bracketed by the worst case (everyone outside claims
/// their upper bound) and the best case (their lower bound).
inline IntervalGame interval_bankruptcy_game(const IntervalClaimsProblem& p) {
    const std::vector<double> lo = detail::bankruptcy_values(p.estate(), p.upper_claims());
    const std::vector<double> hi = detail::bankruptcy_values(p.estate(), p.lower_claims());
    std::vector<Interval> values;
    values.reserve(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k) values.emplace_back(lo[k], hi[k]);
    return IntervalGame(p.size(), std::move(values));
}

/// Interval-estate variant: the low endpoint pairs the low estate with the
/// upper claims, the high endpoint the high estate with the lower claims.
inline IntervalGame interval_estate_game(const IntervalProblem& p) {
    const std::vector<double> lo =
        detail::bankruptcy_values(p.estate().lo(), p.upper_claims());
    const std::vector<double> hi =
        detail::bankruptcy_values(p.estate().hi(), p.lower_claims());
    std::vector<Interval> values;
    values.reserve(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k) values.emplace_back(lo[k], hi[k]);
    return IntervalGame(p.size(), std::move(values));
}

/// The interval game of the problem with claims capped at the estate.
inline IntervalGame truncated_interval_game(const IntervalClaimsProblem& p) {
    return interval_bankruptcy_game(p.truncated());
}

/// True when every coalition value of the crisp game lies inside the
/// corresponding interval value.
inline bool selection_contained(const CoalitionGame& crisp, const IntervalGame& iv,
                                double tol = kTolerance) {
    if (crisp.players() != iv.players()) {
        throw DimensionMismatch("player counts differ");
    }
    for (CoalitionMask mask = 1; mask <= crisp.grand_coalition(); ++mask) {
        if (!contains(iv.value(mask), crisp.value(mask), tol)) return false;
    }
    return true;
}

} // namespace claimdiv
