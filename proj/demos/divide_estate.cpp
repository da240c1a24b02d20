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

// Divide one estate among three creditors with each of the four rules and
// show the associated coalition game.

#include <iostream>

#include "claimdiv/format.hpp"
#include "claimdiv/games.hpp"
#include "claimdiv/rules.hpp"

int main() {
    using namespace claimdiv;

    const BankruptcyProblem problem(200.0, {100.0, 200.0, 300.0});
    std::cout << "estate " << format_number(problem.estate()) << ", claims "
              << format_allocation(problem.claims()) << "\n\n";

    for (RuleId rule : kAllRules) {
        std::cout << to_string(rule) << ": "
                  << format_allocation(apply_rule(rule, problem)) << "\n";
    }

    std::cout << "\ncoalition game:\n";
    const CoalitionGame game = bankruptcy_game(problem);
    for (CoalitionMask mask = 1; mask <= game.grand_coalition(); ++mask) {
        std::cout << "  " << format_coalition(mask) << " -> "
                  << format_number(game.value(mask)) << "\n";
    }
    return 0;
}
