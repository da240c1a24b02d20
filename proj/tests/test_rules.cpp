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

#include <numeric>
#include <random>

#include "claimdiv/rules.hpp"
#include "claimdiv/verifier.hpp"
#include "oracles.hpp"

using namespace claimdiv;
using Catch::Matchers::WithinAbs;

namespace {

void check_allocation(const Allocation& got, const Allocation& want,
                      double tol = 1e-9) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK_THAT(got[i], WithinAbs(want[i], tol));
    }
}

} // namespace

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(BankruptcyProblem(7.0, {3.0, 1.0}), ProblemValidationError);
    CHECK_THROWS_AS(BankruptcyProblem(-1.0, {3.0, 1.0}), ProblemValidationError);
    CHECK_THROWS_AS(BankruptcyProblem(1.0, {-3.0, 5.0}), ProblemValidationError);
    CHECK_THROWS_AS(BankruptcyProblem(1.0, {}), ProblemValidationError);
    CHECK_NOTHROW(BankruptcyProblem(5.0, {5.0})); // single claimant is fine
    CHECK_NOTHROW(BankruptcyProblem(0.0, {0.0, 0.0}));
}

TEST_CASE("proportional rule") {
    check_allocation(rule_prop(BankruptcyProblem(6, {6, 3})), {4, 2});
    check_allocation(rule_prop(BankruptcyProblem(0, {5, 5})), {0, 0});
    check_allocation(rule_prop(BankruptcyProblem(1, {3, 1})), {0.75, 0.25});
    check_allocation(rule_prop(BankruptcyProblem(0, {0, 0})), {0, 0});
}

TEST_CASE("constrained equal awards") {
    check_allocation(rule_cea(BankruptcyProblem(6, {6, 3})), {3, 3});
    check_allocation(rule_cea(BankruptcyProblem(0, {6, 3})), {0, 0});
    check_allocation(rule_cea(BankruptcyProblem(100, {50, 100, 150})),
                     {100.0 / 3, 100.0 / 3, 100.0 / 3});
}

TEST_CASE("constrained equal losses") {
    check_allocation(rule_cel(BankruptcyProblem(1, {3, 1})), {1, 0});
    check_allocation(rule_cel(BankruptcyProblem(4, {3, 1})), {3, 1});
    check_allocation(rule_cel(BankruptcyProblem(1, {1, 1})), {0.5, 0.5});
}

TEST_CASE("talmudic rule") {
    check_allocation(rule_tal(BankruptcyProblem(6, {6, 3})), {4.5, 1.5});
    check_allocation(rule_tal(BankruptcyProblem(8, {7, 2})), {6.5, 1.5});
    check_allocation(rule_tal(BankruptcyProblem(8, {7.5, 2})), {6.75, 1.25});
}

TEST_CASE("talmudic rule is continuous at the halfway estate") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = uniform_index(rng, 1, 5);
        std::vector<double> claims;
        double total = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            claims.push_back(uniform_in(rng, 0.0, 10.0));
            total += claims.back();
        }
        // both branch expressions at E == total/2 give half the claims
        const Allocation at_half = rule_tal(BankruptcyProblem(total / 2.0, claims));
        std::vector<double> half;
        for (double d : claims) half.push_back(d / 2.0);
        check_allocation(at_half, half, 1e-9);
    }
}

TEST_CASE("proportional rule is homogeneous") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const double k = uniform_in(rng, 0.1, 4.0);
        std::vector<double> claims{uniform_in(rng, 0.0, 10.0),
                                   uniform_in(rng, 0.0, 10.0),
                                   uniform_in(rng, 0.0, 10.0)};
        const double total = claims[0] + claims[1] + claims[2];
        const double estate = uniform_in(rng, 0.0, total);
        const Allocation base = rule_prop(BankruptcyProblem(estate, claims));
        std::vector<double> scaled_claims;
        for (double d : claims) scaled_claims.push_back(k * d);
        const Allocation scaled =
            rule_prop(BankruptcyProblem(k * estate, scaled_claims));
        for (std::size_t j = 0; j < base.size(); ++j) {
            CHECK_THAT(scaled[j], WithinAbs(k * base[j], 1e-9));
        }
    }
}

TEST_CASE("every rule is reasonable and efficient on random instances") {
    InstanceGenerator gen(41);
    for (int i = 0; i < 2000; ++i) {
        const BankruptcyProblem p = gen.next_problem();
        for (RuleId rule : kAllRules) {
            const Allocation x = apply_rule(rule, p);
            double sum = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                CHECK(x[j] >= -1e-9);
                CHECK(x[j] <= p.claims()[j] + 1e-9);
                sum += x[j];
            }
            CHECK_THAT(sum, WithinAbs(p.estate(), 1e-9));
        }
    }
}

TEST_CASE("breakpoint solvers agree with the bisection oracle") {
    InstanceGenerator gen(42);
    for (int i = 0; i < 10000; ++i) {
        const BankruptcyProblem p = gen.next_problem();
        check_allocation(rule_cea(p), testing::bisection_cea(p), 1e-9);
        check_allocation(rule_cel(p), testing::bisection_cel(p), 1e-9);
    }
}

TEST_CASE("talmudic rule agrees with the bisection-backed composition") {
    InstanceGenerator gen(43);
    for (int i = 0; i < 2000; ++i) {
        const BankruptcyProblem p = gen.next_problem();
        check_allocation(rule_tal(p), testing::bisection_tal(p), 1e-9);
    }
}

TEST_CASE("claim truncation") {
    const BankruptcyProblem t1 = truncate_claims(BankruptcyProblem(6, {7, 2}));
    check_allocation(t1.claims(), {6, 2}, 0.0);
    const BankruptcyProblem t2 = truncate_claims(BankruptcyProblem(6, {3, 4}));
    check_allocation(t2.claims(), {3, 4}, 0.0);
    const BankruptcyProblem t3 = truncate_claims(BankruptcyProblem(1, {3, 1}));
    check_allocation(t3.claims(), {1, 1}, 0.0);
}

TEST_CASE("truncation invariance at the recorded instances") {
    const BankruptcyProblem p(1, {3, 1});
    CHECK(is_game_theoretic_at(RuleId::TAL, p));
    CHECK_FALSE(is_game_theoretic_at(RuleId::CEL, p));
    CHECK_FALSE(is_game_theoretic_at(RuleId::PROP, p));
}

TEST_CASE("truncation invariance of CEA and TAL on random instances") {
    InstanceGenerator gen(44);
    for (int i = 0; i < 10000; ++i) {
        const BankruptcyProblem p = gen.next_problem();
        CHECK(is_game_theoretic_at(RuleId::CEA, p));
        CHECK(is_game_theoretic_at(RuleId::TAL, p));
    }
}

TEST_CASE("monotonicity grids report no violations for the four rules") {
    const BankruptcyProblem base(6, {6, 3});
    const MonotonicityGrid grid{0.5, 2.0};
    CHECK(check_monotonicity(RuleId::TAL, base, grid).passed());
    CHECK(check_monotonicity(RuleId::PROP, base, grid).passed());
    CHECK(check_monotonicity(RuleId::CEL, base, grid).passed());
    const MonotonicityReport cea =
        check_monotonicity(RuleId::CEA, BankruptcyProblem(0, {6, 3}), grid);
    CHECK(cea.passed());
    CHECK(cea.evaluations > 0);
}
