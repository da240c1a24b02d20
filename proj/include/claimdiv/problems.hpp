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
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "claimdiv/errors.hpp"
#include "claimdiv/interval.hpp"

namespace claimdiv {

/// Estate E and claim vector d with E <= sum(d): the claims jointly exceed
/// what there is to divide.
class BankruptcyProblem {
public:
    BankruptcyProblem(double estate, std::vector<double> claims)
        : estate_(estate), claims_(std::move(claims)) {
        if (claims_.empty()) {
            throw ProblemValidationError("at least one claimant required");
        }
        if (estate_ < 0.0) {
            throw ProblemValidationError("estate must be nonnegative");
        }
        double total = 0.0;
        for (double d : claims_) {
            if (d < 0.0) {
                throw ProblemValidationError("claims must be nonnegative");
            }
            total += d;
        }
        if (estate_ > total) {
            throw ProblemValidationError(
                "estate " + std::to_string(estate_) +
                " exceeds total claims " + std::to_string(total));
        }
    }

    double estate() const { return estate_; }
    const std::vector<double>& claims() const { return claims_; }
    std::size_t size() const { return claims_.size(); }

    double total_claims() const {
        return std::accumulate(claims_.begin(), claims_.end(), 0.0);
    }

private:
    double estate_;
    std::vector<double> claims_;
};

/// Crisp estate with interval claims; the estate must not exceed the sum of
/// the lower claims, so every selection is itself a bankruptcy problem.
class IntervalClaimsProblem {
public:
    IntervalClaimsProblem(double estate, std::vector<Interval> claims)
        : estate_(estate), claims_(std::move(claims)) {
        if (claims_.empty()) {
            throw ProblemValidationError("at least one claimant required");
        }
        if (estate_ < 0.0) {
            throw ProblemValidationError("estate must be nonnegative");
        }
        double lower_total = 0.0;
        for (const Interval& d : claims_) lower_total += d.lo();
        if (estate_ > lower_total) {
            throw ProblemValidationError(
                "estate " + std::to_string(estate_) +
                " exceeds total lower claims " + std::to_string(lower_total));
        }
    }

    double estate() const { return estate_; }
    const std::vector<Interval>& claims() const { return claims_; }
    std::size_t size() const { return claims_.size(); }

    std::vector<double> lower_claims() const {
        std::vector<double> out;
        out.reserve(claims_.size());
        for (const Interval& d : claims_) out.push_back(d.lo());
        return out;
    }
    std::vector<double> upper_claims() const {
        std::vector<double> out;
        out.reserve(claims_.size());
        for (const Interval& d : claims_) out.push_back(d.hi());
        return out;
    }

    /// Claims capped componentwise at the estate.
    IntervalClaimsProblem truncated() const {
        std::vector<Interval> capped;
        capped.reserve(claims_.size());
        for (const Interval& d : claims_) capped.push_back(truncate(d, estate_));
        return IntervalClaimsProblem(estate_, std::move(capped));
    }

private:
    double estate_;
    std::vector<Interval> claims_;
};

/// Interval estate with interval claims. Even the upper estate cannot cover
/// the lower claims, so every (estate, claims) selection from the box is a
/// bankruptcy problem.
class IntervalProblem {
public:
    IntervalProblem(Interval estate, std::vector<Interval> claims)
        : estate_(estate), claims_(std::move(claims)) {
        if (claims_.empty()) {
            throw ProblemValidationError("at least one claimant required");
        }
        double lower_total = 0.0;
        for (const Interval& d : claims_) lower_total += d.lo();
        if (estate_.hi() > lower_total) {
            throw ProblemValidationError(
                "upper estate " + std::to_string(estate_.hi()) +
                " exceeds total lower claims " + std::to_string(lower_total));
        }
    }

    const Interval& estate() const { return estate_; }
    const std::vector<Interval>& claims() const { return claims_; }
    std::size_t size() const { return claims_.size(); }

    std::vector<double> lower_claims() const {
        std::vector<double> out;
        out.reserve(claims_.size());
        for (const Interval& d : claims_) out.push_back(d.lo());
        return out;
    }
    std::vector<double> upper_claims() const {
        std::vector<double> out;
        out.reserve(claims_.size());
        for (const Interval& d : claims_) out.push_back(d.hi());
        return out;
    }

private:
    Interval estate_;
    std::vector<Interval> claims_;
};

} // namespace claimdiv
