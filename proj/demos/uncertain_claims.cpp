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

// Claims known only up to intervals: compute the interval rule, the
// interval game, and the game-based solution, and check they agree for the
// talmudic rule.

#include <iostream>

#include "claimdiv/format.hpp"
#include "claimdiv/interval_rules.hpp"
#include "claimdiv/solution_concepts.hpp"

int main() {
    using namespace claimdiv;

    const IntervalClaimsProblem problem(
        6.0, {Interval(6.0, 7.0), Interval(2.0, 3.0)});

    const IntervalAllocation rewards = interval_rule(RuleId::TAL, problem);
    std::cout << "interval rule:  " << format_allocation(rewards) << "\n";

    const IntervalGame game = interval_bankruptcy_game(problem);
    std::cout << "interval game:\n";
    for (CoalitionMask mask = 1; mask <= game.grand_coalition(); ++mask) {
        std::cout << "  " << format_coalition(mask) << " -> "
                  << format_interval(game.value(mask)) << "\n";
    }

    const IntervalAllocation via_game = g_f(RuleId::TAL, game);
    std::cout << "game solution:  " << format_allocation(via_game) << "\n";
    std::cout << "reasonable:     "
              << (check_reasonable(rewards, problem) ? "yes" : "no") << "\n";
    std::cout << "weakly efficient: "
              << (check_weakly_efficient(rewards, problem.estate()) ? "yes" : "no")
              << "\n";
    return 0;
}
