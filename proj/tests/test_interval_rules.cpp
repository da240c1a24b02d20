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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "claimdiv/interval_rules.hpp"
#include "claimdiv/verifier.hpp"
#include "oracles.hpp"

using namespace claimdiv;

namespace {

void check_rewards(const IntervalAllocation& got, const IntervalAllocation& want,
                   double tol = 1e-9) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        INFO("player " << i + 1);
        CHECK(approx_equal(got[i], want[i], tol));
    }
}

} // namespace

TEST_CASE("interval rule at the straddling claims instance") {
    const IntervalClaimsProblem p(6, {Interval(6, 7), Interval(2, 3)});
    check_rewards(interval_rule(RuleId::TAL, p),
                  {Interval(4.5, 5), Interval(1, 1.5)});
    check_rewards(interval_rule(RuleId::CEA, p), {Interval(3, 4), Interval(2, 3)});

    // cross-check the CEA corners against the bisection oracle
    const auto corner_lo = testing::bisection_cea(BankruptcyProblem(6, {6, 3}));
    const auto corner_hi = testing::bisection_cea(BankruptcyProblem(6, {7, 2}));
    CHECK(approx_equal(interval_rule(RuleId::CEA, p)[0],
                       Interval(corner_lo[0], corner_hi[0])));
}

TEST_CASE("degenerate claims reduce to the crisp rule") {
    const IntervalClaimsProblem p(6, {Interval(6, 6), Interval(3, 3)});
    for (RuleId rule : kAllRules) {
        const IntervalAllocation rewards = interval_rule(rule, p);
        const Allocation crisp = apply_rule(rule, BankruptcyProblem(6, {6, 3}));
        for (std::size_t i = 0; i < rewards.size(); ++i) {
            CHECK(rewards[i].lo() == crisp[i]);
            CHECK(rewards[i].hi() == crisp[i]);
        }
    }
}

TEST_CASE("interval-estate rule reproduces the reference scenario") {
    const IntervalProblem a(Interval(6, 8), {Interval(6, 7), Interval(2, 3)});
    check_rewards(interval_rule_interval_estate(RuleId::TAL, a),
                  {Interval(4.5, 6.5), Interval(1, 2.5)});

    const IntervalProblem b(Interval(6, 8), {Interval(6, 7.5), Interval(2, 3)});
    check_rewards(interval_rule_interval_estate(RuleId::TAL, b),
                  {Interval(4.5, 6.75), Interval(1, 2.5)});

    const IntervalProblem crisp(Interval(2, 2), {Interval(1, 1), Interval(1, 1)});
    for (RuleId rule : kAllRules) {
        check_rewards(interval_rule_interval_estate(rule, crisp),
                      {Interval(1, 1), Interval(1, 1)}, 0.0);
    }
}

TEST_CASE("truncated interval rule") {
    const IntervalClaimsProblem p(6, {Interval(6, 7), Interval(2, 3)});
    check_rewards(truncated_interval_rule(RuleId::TAL, p),
                  interval_rule(RuleId::TAL, p), 0.0);

    // the recorded proportional counterexample, lifted to degenerate claims
    const IntervalClaimsProblem cx(1, {Interval(3, 3), Interval(1, 1)});
    check_rewards(truncated_interval_rule(RuleId::PROP, cx),
                  {Interval(0.5, 0.5), Interval(0.5, 0.5)});
    check_rewards(interval_rule(RuleId::PROP, cx),
                  {Interval(0.75, 0.75), Interval(0.25, 0.25)});

    // claims entirely below the estate: truncation is the identity
    const IntervalClaimsProblem low(4, {Interval(3, 4), Interval(2, 3)});
    for (RuleId rule : kAllRules) {
        check_rewards(truncated_interval_rule(rule, low), interval_rule(rule, low),
                      0.0);
    }
}

TEST_CASE("reasonability predicate") {
    const IntervalProblem a(Interval(6, 8), {Interval(6, 7), Interval(2, 3)});
    const IntervalAllocation rewards = interval_rule_interval_estate(RuleId::TAL, a);
    CHECK(check_reasonable(rewards, a));

    CHECK(check_reasonable({Interval(6, 7), Interval(2, 3)}, a.claims()));
    CHECK_FALSE(check_reasonable({Interval(6, 8.5), Interval(2, 3)}, a.claims()));
    CHECK_THROWS_AS(check_reasonable({Interval(1, 2)}, a.claims()),
                    DimensionMismatch);
}

TEST_CASE("weak efficiency predicate") {
    CHECK(check_weakly_efficient({Interval(4.5, 5), Interval(1, 1.5)}, 6.0));
    CHECK_FALSE(check_weakly_efficient({Interval(0, 1), Interval(0, 1)}, 6.0));
    // strong efficiency of a crisp allocation implies weak efficiency
    CHECK(check_weakly_efficient({Interval(4.5, 4.5), Interval(1.5, 1.5)}, 6.0));
    CHECK(check_weakly_efficient({Interval(4.5, 6.5), Interval(1, 2.5)},
                                 Interval(6, 8)));
}

TEST_CASE("corner tightness at the reference instances") {
    std::mt19937_64 rng(61);
    const IntervalProblem a(Interval(6, 8), {Interval(6, 7), Interval(2, 3)});
    CHECK(check_corner_tightness(RuleId::TAL, a, 1000, rng).passed());

    const IntervalClaimsProblem c(6, {Interval(6, 7), Interval(2, 3)});
    CHECK(check_corner_tightness(RuleId::TAL, c, 1000, rng).passed());

    const IntervalProblem degenerate(Interval(2, 2), {Interval(1, 1), Interval(1, 1)});
    for (RuleId rule : kAllRules) {
        CHECK(check_corner_tightness(rule, degenerate, 10, rng).passed());
    }
}

TEST_CASE("interval rules are well formed, reasonable, weakly efficient") {
    InstanceGenerator gen(62);
    for (int i = 0; i < 2000; ++i) {
        const IntervalClaimsProblem p = gen.next_interval_claims_problem();
        for (RuleId rule : kAllRules) {
            const IntervalAllocation rewards = interval_rule(rule, p);
            REQUIRE(rewards.size() == p.size()); // ctor enforced lo <= hi
            REQUIRE(check_reasonable(rewards, p));
            REQUIRE(check_weakly_efficient(rewards, p.estate()));
        }
    }
}

TEST_CASE("interval-estate rules keep the properties") {
    InstanceGenerator gen(63);
    for (int i = 0; i < 2000; ++i) {
        const IntervalProblem p = gen.next_interval_problem();
        for (RuleId rule : kAllRules) {
            const IntervalAllocation rewards = interval_rule_interval_estate(rule, p);
            REQUIRE(check_reasonable(rewards, p));
            REQUIRE(check_weakly_efficient(rewards, p.estate()));
        }
    }
}

TEST_CASE("truncation coincidence for the invariant rules") {
    InstanceGenerator gen(64);
    for (int i = 0; i < 10000; ++i) {
        const IntervalClaimsProblem p = gen.next_interval_claims_problem();
        for (RuleId rule : {RuleId::CEA, RuleId::TAL}) {
            const IntervalAllocation plain = interval_rule(rule, p);
            const IntervalAllocation capped = truncated_interval_rule(rule, p);
            for (std::size_t j = 0; j < plain.size(); ++j) {
                REQUIRE(approx_equal(plain[j], capped[j]));
            }
        }
    }
}

TEST_CASE("truncation coincidence fails for PROP and CEL where claims exceed the estate") {
    const IntervalClaimsProblem cx(1, {Interval(3, 3), Interval(1, 1)});
    for (RuleId rule : {RuleId::PROP, RuleId::CEL}) {
        const IntervalAllocation plain = interval_rule(rule, cx);
        const IntervalAllocation capped = truncated_interval_rule(rule, cx);
        CHECK_FALSE(approx_equal(plain[0], capped[0]));
    }
}

TEST_CASE("random selections pay inside the reward intervals") {
    InstanceGenerator gen(65);
    for (int i = 0; i < 500; ++i) {
        const IntervalProblem p = gen.next_interval_problem();
        for (RuleId rule : kAllRules) {
            const TightnessReport report =
                check_corner_tightness(rule, p, 100, gen.rng());
            REQUIRE(report.passed());
        }
    }
}
