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

// Test-only reference solvers, kept independent of the library's breakpoint
// solvers: levels are located by plain bisection on the monotone sum.

#pragma once

#include <algorithm>
#include <vector>

#include "claimdiv/problems.hpp"

namespace claimdiv::testing {

inline double bisect_level(double target, const std::vector<double>& claims,
                           bool award_side) {
    // award side: sum_i min(d_i, x); loss side: sum_i max(d_i - x, 0)
    auto total_at = [&](double x) {
        double s = 0.0;
        for (double d : claims) {
            s += award_side ? std::min(d, x) : std::max(d - x, 0.0);
        }
        return s;
    };
    double lo = 0.0;
    double hi = *std::max_element(claims.begin(), claims.end()) + 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double s = total_at(mid);
        const bool go_up = award_side ? (s < target) : (s > target);
        (go_up ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> bisection_cea(const BankruptcyProblem& p) {
    if (p.estate() == 0.0) return std::vector<double>(p.size(), 0.0);
    const double a = bisect_level(p.estate(), p.claims(), true);
    std::vector<double> x;
    x.reserve(p.size());
    for (double d : p.claims()) x.push_back(std::min(d, a));
    return x;
}

inline std::vector<double> bisection_cel(const BankruptcyProblem& p) {
    if (p.estate() == 0.0) return std::vector<double>(p.size(), 0.0);
    const double b = bisect_level(p.estate(), p.claims(), false);
    std::vector<double> x;
    x.reserve(p.size());
    for (double d : p.claims()) x.push_back(std::max(d - b, 0.0));
    return x;
}

inline std::vector<double> bisection_tal(const BankruptcyProblem& p) {
    const double total = p.total_claims();
    std::vector<double> half;
    half.reserve(p.size());
    for (double d : p.claims()) half.push_back(d / 2.0);
    if (p.estate() <= total / 2.0) {
        return bisection_cea(BankruptcyProblem(p.estate(), half));
    }
    std::vector<double> x =
        bisection_cel(BankruptcyProblem(p.estate() - total / 2.0, half));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += half[i];
    return x;
}

} // namespace claimdiv::testing
