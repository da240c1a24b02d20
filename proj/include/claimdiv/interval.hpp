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
#include <cmath>
#include <string>

#include "claimdiv/errors.hpp"

namespace claimdiv {

// Global comparison tolerance for membership and approximate equality.
inline constexpr double kTolerance = 1e-9;

/// Closed bounded interval [lo, hi] of nonnegative reals. Degenerate
/// intervals (lo == hi) represent crisp values.
class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}

    explicit Interval(double crisp) : Interval(crisp, crisp) {}

    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo >= 0.0) || !(lo <= hi)) {
            throw ConstructionError("invalid interval [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
        }
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool degenerate() const { return lo_ == hi_; }

    // Exact structural equality; use approx_equal for tolerance comparisons.
    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
};

inline Interval make_interval(double lo, double hi) { return Interval(lo, hi); }

/// Ordered pair [lo, hi] with possibly negative endpoints. Interval
/// subtraction can leave the nonnegative domain, so its result is kept out
/// of the Interval type.
struct SignedInterval {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const SignedInterval&, const SignedInterval&) = default;
};

inline Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }

inline SignedInterval subtract(const Interval& a, const Interval& b) {
    return SignedInterval{a.lo() - b.hi(), a.hi() - b.lo()};
}

inline SignedInterval operator-(const Interval& a, const Interval& b) {
    return subtract(a, b);
}

/// Partial order: a is weakly better than b when both endpoints dominate.
/// Incomparable pairs compare false in both directions.
inline bool weakly_better(const Interval& a, const Interval& b, double tol = 0.0) {
    return a.lo() >= b.lo() - tol && a.hi() >= b.hi() - tol;
}

/// Componentwise cap at c: [min(lo, c), min(hi, c)].
inline Interval truncate(const Interval& a, double c) {
    return Interval(std::min(a.lo(), c), std::min(a.hi(), c));
}

/// Membership with tolerance slack on both endpoints.
inline bool contains(const Interval& a, double x, double tol = kTolerance) {
    return x >= a.lo() - tol && x <= a.hi() + tol;
}

inline bool approx_equal(const Interval& a, const Interval& b, double tol = kTolerance) {
    return std::abs(a.lo() - b.lo()) <= tol && std::abs(a.hi() - b.hi()) <= tol;
}

inline bool approx_equal(double a, double b, double tol = kTolerance) {
    return std::abs(a - b) <= tol;
}

} // namespace claimdiv
