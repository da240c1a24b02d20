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

#include <string>

#include "claimdiv/verifier.hpp"

using namespace claimdiv;

TEST_CASE("property tokens round-trip") {
    for (PropertyId id : kAllProperties) {
        CHECK(property_from_string(to_string(id)) == id);
    }
    CHECK(property_from_string("thm5-truncation") == PropertyId::THM5_TRUNCATION);
    CHECK_THROWS_AS(property_from_string("nope"), UnknownProperty);
}

TEST_CASE("instance generator replays identical streams") {
    InstanceGenerator a(99);
    InstanceGenerator b(99);
    for (int i = 0; i < 200; ++i) {
        const BankruptcyProblem pa = a.next_problem();
        const BankruptcyProblem pb = b.next_problem();
        REQUIRE(pa.estate() == pb.estate());
        REQUIRE(pa.claims() == pb.claims());
    }
    // every emitted instance validates; interval problems keep the basic
    // assumption by construction
    for (int i = 0; i < 200; ++i) {
        const IntervalClaimsProblem p = a.next_interval_claims_problem();
        double lower_total = 0.0;
        for (const Interval& d : p.claims()) lower_total += d.lo();
        REQUIRE(p.estate() <= lower_total);
        const IntervalProblem q = a.next_interval_problem();
        double qlower = 0.0;
        for (const Interval& d : q.claims()) qlower += d.lo();
        REQUIRE(q.estate().hi() <= qlower);
    }
}

TEST_CASE("truncation property passes for the invariant rules") {
    for (RuleId rule : {RuleId::CEA, RuleId::TAL}) {
        const PropertyReport r =
            run_property(PropertyId::THM5_TRUNCATION, rule, 1000, 42);
        INFO(to_text(r));
        CHECK(r.passed());
    }
}

TEST_CASE("truncation property fails for PROP and CEL with the recorded instance") {
    for (RuleId rule : {RuleId::PROP, RuleId::CEL}) {
        const PropertyReport r =
            run_property(PropertyId::THM5_TRUNCATION, rule, 1000, 42);
        CHECK_FALSE(r.passed());
        bool recorded = false;
        for (const PropertyFailure& f : r.failures) {
            if (f.instance["problem"]["estate"] == 1.0 &&
                f.instance["problem"]["claims"] == Json::parse("[3.0,1.0]")) {
                recorded = true;
            }
        }
        CHECK(recorded);
    }
}

TEST_CASE("failure certificates are self-contained") {
    const PropertyReport r = run_property(PropertyId::THM5_TRUNCATION, RuleId::CEL, 50, 7);
    REQUIRE_FALSE(r.passed());
    for (const PropertyFailure& f : r.failures) {
        // re-running the recorded instance reproduces the mismatch
        const Json& pj = f.instance["problem"];
        std::vector<double> claims;
        for (const Json& c : pj["claims"]) claims.push_back(c.get<double>());
        const BankruptcyProblem p(pj["estate"].get<double>(), claims);
        CHECK_FALSE(is_game_theoretic_at(RuleId::CEL, p));
    }
}

TEST_CASE("reports are deterministic") {
    const PropertyReport a = run_property(PropertyId::THM5_TRUNCATION, std::nullopt, 500, 42);
    const PropertyReport b = run_property(PropertyId::THM5_TRUNCATION, std::nullopt, 500, 42);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(to_text(a) == to_text(b));
    const PropertyReport c = run_property(PropertyId::THM5_TRUNCATION, std::nullopt, 500, 43);
    CHECK(to_json(a).dump() != to_json(c).dump());
}

TEST_CASE("games-coincide property passes exactly") {
    const PropertyReport r = run_property(PropertyId::PROP_GAMES_COINCIDE,
                                          std::nullopt, 1000, 42);
    INFO(to_text(r));
    CHECK(r.passed());
    // random trials plus the exhaustive two- and three-claimant integer grid
    CHECK(r.instances > 100000);
}

TEST_CASE("monotonicity property on a small batch") {
    const PropertyReport r =
        run_property(PropertyId::ASSUMPTION1_MONOTONE, std::nullopt, 10, 42);
    INFO(to_text(r));
    CHECK(r.passed());
}

TEST_CASE("chain property holds for every rule on a small batch") {
    for (RuleId rule : kAllRules) {
        const PropertyReport r =
            run_property(PropertyId::THM_INT5_CHAIN, rule, 200, 42);
        INFO(to_text(r));
        CHECK(r.passed());
    }
}

TEST_CASE("reference scenario reproduces") {
    const Example51Report r = reproduce_example_51();
    CHECK(r.rules_differ);
    CHECK(r.games_coincide);
    CHECK(approx_equal(r.rule_a[0], Interval(4.5, 6.5)));
    CHECK(approx_equal(r.rule_a[1], Interval(1, 2.5)));
    CHECK(approx_equal(r.rule_b[0], Interval(4.5, 6.75)));
    CHECK(approx_equal(r.rule_b[1], Interval(1, 2.5)));
    CHECK(r.game_a.value(0b11) == Interval(6, 8));

    const PropertyReport pr =
        run_property(PropertyId::EXAMPLE51_REPRO, std::nullopt, 1, 42);
    CHECK(pr.passed());

    const Json j = to_json(r);
    CHECK(j["rules_differ"] == true);
    CHECK(j["rule_b"][0].dump() == "[4.5,6.75]");
}

TEST_CASE("estate search finds the reference certificate for TAL") {
    const auto certificates =
        search_estate_counterexamples(RuleId::TAL, default_search_grid());
    REQUIRE_FALSE(certificates.empty());
    bool found = false;
    for (const CounterexampleCertificate& c : certificates) {
        const bool has_a = approx_equal(c.problem_a.claims()[0], Interval(6, 7)) ||
                           approx_equal(c.problem_b.claims()[0], Interval(6, 7));
        const bool has_b = approx_equal(c.problem_a.claims()[0], Interval(6, 7.5)) ||
                           approx_equal(c.problem_b.claims()[0], Interval(6, 7.5));
        if (has_a && has_b) {
            found = true;
            CHECK(c.max_rule_deviation > 0.2); // the upper rewards differ by 0.25
            CHECK(c.game.value(0b01) == Interval(3, 6));
        }
    }
    CHECK(found);
}

TEST_CASE("estate search is empty over crisp estates for TAL") {
    const auto certificates =
        search_estate_counterexamples(RuleId::TAL, default_crisp_search_grid());
    CHECK(certificates.empty());
}

TEST_CASE("estate search on the default grid is empty for CEA") {
    // the equal-awards corners are insensitive to the varying upper claim
    // on this grid, so no certificate appears
    const auto certificates =
        search_estate_counterexamples(RuleId::CEA, default_search_grid());
    CHECK(certificates.empty());
}

TEST_CASE("estate search respects the budget") {
    const auto certificates =
        search_estate_counterexamples(RuleId::TAL, default_search_grid(), 0);
    CHECK(certificates.empty());
}

TEST_CASE("estate search property") {
    const PropertyReport r =
        run_property(PropertyId::ESTATE_COUNTEREXAMPLE_SEARCH, std::nullopt, 1, 42);
    INFO(to_text(r));
    CHECK(r.passed());
}

TEST_CASE("search certificates serialize with both problems") {
    const auto certificates =
        search_estate_counterexamples(RuleId::TAL, default_search_grid());
    REQUIRE_FALSE(certificates.empty());
    const Json j = to_json(certificates.front());
    CHECK(j.contains("problem_a"));
    CHECK(j.contains("problem_b"));
    CHECK(j["rule"] == "tal");
    CHECK(j["max_rule_deviation"].get<double>() > 0.0);
}

TEST_CASE("run_property rejects bad arguments") {
    CHECK_THROWS_AS(run_property(PropertyId::THM5_TRUNCATION, std::nullopt, 0, 42),
                    Error);
}

TEST_CASE("the full default suite finishes within a minute") {
    const auto start = std::chrono::steady_clock::now();
    for (PropertyId id : kAllProperties) {
        const PropertyReport r =
            run_property(id, std::nullopt, default_trials(id), 42);
        // the truncation properties legitimately fail for PROP and CEL
        const bool expected_mixed = id == PropertyId::THM5_TRUNCATION ||
                                    id == PropertyId::PROP_TRUNC_RULE_COINCIDE;
        if (!expected_mixed) {
            INFO(to_text(r));
            CHECK(r.passed());
        }
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    CHECK(elapsed.count() < 60.0);
}
