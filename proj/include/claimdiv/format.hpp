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

#include <cstdio>
#include <string>
#include <vector>

#include "claimdiv/games.hpp"
#include "claimdiv/interval.hpp"

namespace claimdiv {

/// Fixed 9-decimal rendering with trailing zeros (and a bare point) trimmed,
/// so text output stays diff-friendly.
inline std::string format_number(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9f", x);
    std::string out(buffer);
    const auto point = out.find('.');
    if (point != std::string::npos) {
        auto last = out.find_last_not_of('0');
        if (last == point) --last;
        out.erase(last + 1);
    }
    if (out == "-0") out = "0";
    return out;
}

inline std::string format_interval(const Interval& a) {
    return "[" + format_number(a.lo()) + ", " + format_number(a.hi()) + "]";
}

inline std::string format_allocation(const std::vector<double>& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_number(x[i]);
    }
    return out + ")";
}

inline std::string format_allocation(const std::vector<Interval>& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_interval(x[i]);
    }
    return out + ")";
}

/// Coalition rendered as a player list, players numbered
/// from 1: mask 0b101 -> "{1,3}".
inline std::string format_coalition(CoalitionMask mask) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1u) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

} // namespace claimdiv
