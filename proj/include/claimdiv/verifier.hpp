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
#include <cctype>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "claimdiv/format.hpp"
#include "claimdiv/games.hpp"
#include "claimdiv/interval_rules.hpp"
#include "claimdiv/json_io.hpp"
#include "claimdiv/problems.hpp"
#include "claimdiv/random.hpp"
#include "claimdiv/rules.hpp"
#include "claimdiv/solution_concepts.hpp"

namespace claimdiv {

// ---------------------------------------------------------------------------
// property catalogue
// ---------------------------------------------------------------------------

enum class PropertyId {
    THM5_TRUNCATION,            // f(E,d) == f(E, d^E) for truncation-invariant rules
    ASSUMPTION1_MONOTONE,       // payoff monotone in estate and claims
    PROP31_TIGHT_WEAKEFF,       // interval rule reasonable, weakly efficient, tight
    PROP_TRUNC_RULE_COINCIDE,   // F(f;E,[d]^E) == F(f;E,[d])
    PROP_SELECTION_CONTAIN,     // crisp games are selections of the interval game
    PROP_GAMES_COINCIDE,        // interval game == its truncated form, exactly
    THM_INT5_CHAIN,             // G^f(w) == F(f;E,[d]^E) == F(f;E,[d])
    THM42_CRISP_TO_INTERVAL,    // G^f realizes the interval rule for invariant rules
    INTERVAL_ESTATE_TIGHT,      // interval-estate rule and game keep the properties
    EXAMPLE51_REPRO,            // the two-situation reference scenario, exactly
    ESTATE_COUNTEREXAMPLE_SEARCH, // same game, different interval-estate rules
};

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::THM5_TRUNCATION,
    PropertyId::ASSUMPTION1_MONOTONE,
    PropertyId::PROP31_TIGHT_WEAKEFF,
    PropertyId::PROP_TRUNC_RULE_COINCIDE,
    PropertyId::PROP_SELECTION_CONTAIN,
    PropertyId::PROP_GAMES_COINCIDE,
    PropertyId::THM_INT5_CHAIN,
    PropertyId::THM42_CRISP_TO_INTERVAL,
    PropertyId::INTERVAL_ESTATE_TIGHT,
    PropertyId::EXAMPLE51_REPRO,
    PropertyId::ESTATE_COUNTEREXAMPLE_SEARCH,
};

inline std::string to_string(PropertyId id) {
    switch (id) {
        case PropertyId::THM5_TRUNCATION: return "THM5_TRUNCATION";
        case PropertyId::ASSUMPTION1_MONOTONE: return "ASSUMPTION1_MONOTONE";
        case PropertyId::PROP31_TIGHT_WEAKEFF: return "PROP31_TIGHT_WEAKEFF";
        case PropertyId::PROP_TRUNC_RULE_COINCIDE: return "PROP_TRUNC_RULE_COINCIDE";
        case PropertyId::PROP_SELECTION_CONTAIN: return "PROP_SELECTION_CONTAIN";
        case PropertyId::PROP_GAMES_COINCIDE: return "PROP_GAMES_COINCIDE";
        case PropertyId::THM_INT5_CHAIN: return "THM_INT5_CHAIN";
        case PropertyId::THM42_CRISP_TO_INTERVAL: return "THM42_CRISP_TO_INTERVAL";
        case PropertyId::INTERVAL_ESTATE_TIGHT: return "INTERVAL_ESTATE_TIGHT";
        case PropertyId::EXAMPLE51_REPRO: return "EXAMPLE51_REPRO";
        case PropertyId::ESTATE_COUNTEREXAMPLE_SEARCH:
            return "ESTATE_COUNTEREXAMPLE_SEARCH";
    }
    return "?";
}

inline PropertyId property_from_string(std::string token) {
    for (char& c : token) {
        if (c == '-') c = '_';
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (PropertyId id : kAllProperties) {
        if (to_string(id) == token) return id;
    }
    throw UnknownProperty("unknown property '" + token + "'");
}

// ---------------------------------------------------------------------------
// instance generation
// ---------------------------------------------------------------------------

/// Seeded stream of valid random instances. Claims are uniform in
/// [0, claim_max], interval widths uniform in [0, width_max], estates
/// uniform below the lower-claim total so every instance validates.
/// Identical seeds replay identical streams.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, std::size_t n_min = 2,
                               std::size_t n_max = 5, double claim_max = 10.0,
                               double width_max = 3.0)
        : rng_(seed), n_min_(n_min), n_max_(n_max), claim_max_(claim_max),
          width_max_(width_max) {}

    BankruptcyProblem next_problem() {
        const std::size_t n = uniform_index(rng_, n_min_, n_max_);
        std::vector<double> claims;
        claims.reserve(n);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            claims.push_back(uniform_in(rng_, 0.0, claim_max_));
            total += claims.back();
        }
        return BankruptcyProblem(uniform_in(rng_, 0.0, total), std::move(claims));
    }

    IntervalClaimsProblem next_interval_claims_problem() {
        auto [claims, lower_total] = next_claims();
        return IntervalClaimsProblem(uniform_in(rng_, 0.0, lower_total),
                                     std::move(claims));
    }

    IntervalProblem next_interval_problem() {
        auto [claims, lower_total] = next_claims();
        double a = uniform_in(rng_, 0.0, lower_total);
        double b = uniform_in(rng_, 0.0, lower_total);
        if (a > b) std::swap(a, b);
        return IntervalProblem(Interval(a, b), std::move(claims));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::pair<std::vector<Interval>, double> next_claims() {
        const std::size_t n = uniform_index(rng_, n_min_, n_max_);
        std::vector<Interval> claims;
        claims.reserve(n);
        double lower_total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double lo = uniform_in(rng_, 0.0, claim_max_);
            claims.emplace_back(lo, lo + uniform_in(rng_, 0.0, width_max_));
            lower_total += lo;
        }
        return {std::move(claims), lower_total};
    }

    std::mt19937_64 rng_;
    std::size_t n_min_;
    std::size_t n_max_;
    double claim_max_;
    double width_max_;
};

// Hand-picked instances prepended to every random batch: zero estate, equal
// claims, one dominant claim, degenerate intervals. The dominant-claim
// instances are the recorded truncation counterexamples for PROP and CEL.

inline std::vector<BankruptcyProblem> edge_problems() {
    return {
        BankruptcyProblem(0.0, {6.0, 3.0}),
        BankruptcyProblem(1.0, {1.0, 1.0}),
        BankruptcyProblem(1.0, {3.0, 1.0}),
        BankruptcyProblem(6.0, {6.0, 3.0}),
        BankruptcyProblem(8.0, {7.0, 2.0}),
        BankruptcyProblem(3.0, {2.0, 2.0, 2.0}),
        BankruptcyProblem(5.0, {5.0}),
    };
}

inline std::vector<IntervalClaimsProblem> edge_interval_claims_problems() {
    return {
        IntervalClaimsProblem(6.0, {Interval(6, 7), Interval(2, 3)}),
        IntervalClaimsProblem(1.0, {Interval(3, 3), Interval(1, 1)}),
        IntervalClaimsProblem(0.0, {Interval(1, 2), Interval(3, 4)}),
        IntervalClaimsProblem(6.0, {Interval(10, 12), Interval(2, 3)}),
        IntervalClaimsProblem(2.0, {Interval(1, 1), Interval(1, 1)}),
        IntervalClaimsProblem(6.0, {Interval(6, 6), Interval(3, 3)}),
    };
}

inline std::vector<IntervalProblem> edge_interval_problems() {
    return {
        IntervalProblem(Interval(6, 8), {Interval(6, 7), Interval(2, 3)}),
        IntervalProblem(Interval(6, 8), {Interval(6, 7.5), Interval(2, 3)}),
        IntervalProblem(Interval(6, 6), {Interval(6, 7), Interval(2, 3)}),
        IntervalProblem(Interval(0, 0), {Interval(1, 2), Interval(3, 4)}),
        IntervalProblem(Interval(2, 2), {Interval(1, 1), Interval(1, 1)}),
    };
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

struct PropertyFailure {
    Json instance;
    Json expected;
    Json actual;
    double deviation = 0.0;
};

/// Outcome of running one property. `failures` holds up to
/// kMaxRecordedFailures certificates in deterministic order;
/// `failure_count` is the full tally. Elapsed time is informational and
/// deliberately left out of the serialized forms, which must be
/// reproducible byte for byte.
struct PropertyReport {
    PropertyId property = PropertyId::THM5_TRUNCATION;
    std::string rule = "all";
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::size_t failure_count = 0;
    std::vector<PropertyFailure> failures;
    std::chrono::duration<double> elapsed{0.0};

    bool passed() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxRecordedFailures = 100;
inline constexpr std::size_t kMcSamples = 1000;

namespace detail {

inline void record_failure(PropertyReport& report, Json instance, Json expected,
                           Json actual, double deviation) {
    ++report.failure_count;
    if (report.failures.size() < kMaxRecordedFailures) {
        report.failures.push_back(PropertyFailure{
            std::move(instance), std::move(expected), std::move(actual), deviation});
    }
}

} // namespace detail

inline Json to_json(const PropertyReport& r) {
    Json failures = Json::array();
    std::vector<const PropertyFailure*> ordered;
    ordered.reserve(r.failures.size());
    for (const PropertyFailure& f : r.failures) ordered.push_back(&f);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const PropertyFailure* a, const PropertyFailure* b) {
                         return a->instance.dump() < b->instance.dump();
                     });
    for (const PropertyFailure* f : ordered) {
        failures.push_back(Json{{"instance", f->instance},
                                {"expected", f->expected},
                                {"actual", f->actual},
                                {"deviation", f->deviation}});
    }
    return Json{{"property", to_string(r.property)},
                {"rule", r.rule},
                {"trials", r.trials},
                {"seed", r.seed},
                {"instances", r.instances},
                {"failure_count", r.failure_count},
                {"failures", failures}};
}

inline std::string to_text(const PropertyReport& r) {
    std::string out = "property " + to_string(r.property) + " rule=" + r.rule +
                      " trials=" + std::to_string(r.trials) +
                      " seed=" + std::to_string(r.seed) + ": " +
                      (r.passed() ? "PASS" : "FAIL") + " (" +
                      std::to_string(r.instances) + " instances, " +
                      std::to_string(r.failure_count) + " failures)\n";
    const Json j = to_json(r);
    for (const Json& f : j["failures"]) {
        out += "  failure: instance=" + f["instance"].dump() +
               " deviation=" + format_number(f["deviation"].get<double>()) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// theorem report serialization
// ---------------------------------------------------------------------------

inline Json to_json(const TheoremReport& r) {
    return Json{{"rule", to_string(r.rule)},
                {"estate", r.estate},
                {"claims", to_json(r.claims)},
                {"game_solution", to_json(r.game_solution)},
                {"truncated_rule", to_json(r.truncated_rule)},
                {"plain_rule", to_json(r.plain_rule)},
                {"game_eq_truncated", r.game_eq_truncated},
                {"truncated_eq_plain", r.truncated_eq_plain},
                {"game_eq_plain", r.game_eq_plain},
                {"max_deviation", r.max_deviation}};
}

// ---------------------------------------------------------------------------
// the two-situation reference scenario
// ---------------------------------------------------------------------------

/// Two interval-estate problems that differ only in one upper claim. Their
/// interval games coincide coalition by coalition, yet the interval rules
/// they induce differ, so no solution concept of the game can reproduce
/// the rule once the estate itself is uncertain.
struct Example51Report {
    IntervalProblem situation_a;
    IntervalProblem situation_b;
    IntervalAllocation rule_a;
    IntervalAllocation rule_b;
    IntervalGame game_a;
    IntervalGame game_b;
    bool rules_differ = false;
    bool games_coincide = false;
};

inline Example51Report reproduce_example_51() {
    const IntervalProblem a(Interval(6, 8), {Interval(6, 7), Interval(2, 3)});
    const IntervalProblem b(Interval(6, 8), {Interval(6, 7.5), Interval(2, 3)});

    Example51Report report{
        a,
        b,
        interval_rule_interval_estate(RuleId::TAL, a),
        interval_rule_interval_estate(RuleId::TAL, b),
        interval_estate_game(a),
        interval_estate_game(b),
        false,
        false,
    };

    const IntervalAllocation expected_a = {Interval(4.5, 6.5), Interval(1, 2.5)};
    const IntervalAllocation expected_b = {Interval(4.5, 6.75), Interval(1, 2.5)};
    const std::vector<Interval> expected_game = {Interval(3, 6), Interval(0, 2),
                                                 Interval(6, 8)};

    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw AssertionFailure(what);
    };
    for (std::size_t i = 0; i < 2; ++i) {
        require(approx_equal(report.rule_a[i], expected_a[i]),
                "situation a, player " + std::to_string(i + 1) + ": got " +
                    format_interval(report.rule_a[i]) + ", expected " +
                    format_interval(expected_a[i]));
        require(approx_equal(report.rule_b[i], expected_b[i]),
                "situation b, player " + std::to_string(i + 1) + ": got " +
                    format_interval(report.rule_b[i]) + ", expected " +
                    format_interval(expected_b[i]));
    }
    for (CoalitionMask mask = 1; mask <= 3; ++mask) {
        require(approx_equal(report.game_a.value(mask), expected_game[mask - 1]),
                "game a, coalition " + format_coalition(mask) + ": got " +
                    format_interval(report.game_a.value(mask)) + ", expected " +
                    format_interval(expected_game[mask - 1]));
        require(report.game_a.value(mask) == report.game_b.value(mask),
                "games differ at coalition " + format_coalition(mask));
    }
    report.games_coincide = true;
    report.rules_differ = !approx_equal(report.rule_a[0], report.rule_b[0]) ||
                          !approx_equal(report.rule_a[1], report.rule_b[1]);
    require(report.rules_differ, "interval rules coincide; they must differ");
    return report;
}

inline Json to_json(const Example51Report& r) {
    return Json{{"situation_a", to_json(r.situation_a)},
                {"situation_b", to_json(r.situation_b)},
                {"rule_a", to_json(r.rule_a)},
                {"rule_b", to_json(r.rule_b)},
                {"game_a", to_json(r.game_a)},
                {"game_b", to_json(r.game_b)},
                {"rules_differ", r.rules_differ},
                {"games_coincide", r.games_coincide}};
}

inline std::string to_text(const Example51Report& r) {
    std::string out;
    out += "situation a: estate " + format_interval(r.situation_a.estate()) +
           ", claims " + format_allocation(r.situation_a.claims()) + "\n";
    out += "  rule = " + format_allocation(r.rule_a) + "\n";
    out += "situation b: estate " + format_interval(r.situation_b.estate()) +
           ", claims " + format_allocation(r.situation_b.claims()) + "\n";
    out += "  rule = " + format_allocation(r.rule_b) + "\n";
    out += "games coincide: " + std::string(r.games_coincide ? "yes" : "no") + "\n";
    for (CoalitionMask mask = 1; mask <= r.game_a.grand_coalition(); ++mask) {
        out += "  " + format_coalition(mask) + " -> " +
               format_interval(r.game_a.value(mask)) + "\n";
    }
    out += "rules differ: " + std::string(r.rules_differ ? "yes" : "no") + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// counterexample search over rational grids
// ---------------------------------------------------------------------------

struct GridRange {
    double min = 0.0;
    double max = 0.0;
};

struct ClaimGrid {
    GridRange lo;
    GridRange hi;
};

/// Rational grid of interval-estate problems: every endpoint ranges over
/// multiples of 1/denominator inside its range. With crisp_only set the
/// estate is degenerate and sweeps the union of both estate ranges.
struct SearchGrid {
    GridRange estate_lo;
    GridRange estate_hi;
    std::vector<ClaimGrid> claims;
    int denominator = 4;
    bool crisp_only = false;
};

/// Grid around the reference scenario: both of its situations are grid
/// points, plus whatever else the quarter steps produce.
inline SearchGrid default_search_grid() {
    SearchGrid grid;
    grid.estate_lo = {6.0, 6.0};
    grid.estate_hi = {8.0, 8.0};
    grid.claims = {ClaimGrid{{6.0, 6.0}, {7.0, 7.5}}, ClaimGrid{{2.0, 2.0}, {3.0, 3.0}}};
    grid.denominator = 4;
    return grid;
}

inline SearchGrid default_crisp_search_grid() {
    SearchGrid grid = default_search_grid();
    grid.crisp_only = true;
    return grid;
}

struct CounterexampleCertificate {
    RuleId rule = RuleId::TAL;
    IntervalProblem problem_a;
    IntervalProblem problem_b;
    IntervalGame game; // shared by both problems, coalition by coalition
    IntervalAllocation rule_a;
    IntervalAllocation rule_b;
    double max_rule_deviation = 0.0;
};

inline Json to_json(const CounterexampleCertificate& c) {
    return Json{{"rule", to_string(c.rule)},
                {"problem_a", to_json(c.problem_a)},
                {"problem_b", to_json(c.problem_b)},
                {"game", to_json(c.game)},
                {"rule_a", to_json(c.rule_a)},
                {"rule_b", to_json(c.rule_b)},
                {"max_rule_deviation", c.max_rule_deviation}};
}

namespace detail {

inline std::vector<double> grid_values(const GridRange& range, int denominator) {
    std::vector<double> values;
    const double step = 1.0 / denominator;
    // first multiple of step at or above range.min
    long long k = static_cast<long long>(std::ceil(range.min * denominator - 1e-12));
    for (; static_cast<double>(k) * step <= range.max + 1e-12; ++k) {
        values.push_back(static_cast<double>(k) * step);
    }
    return values;
}

inline std::vector<Interval> grid_intervals(const ClaimGrid& claim_grid, int denominator) {
    std::vector<Interval> out;
    for (double lo : grid_values(claim_grid.lo, denominator)) {
        for (double hi : grid_values(claim_grid.hi, denominator)) {
            if (lo <= hi && lo >= 0.0) out.emplace_back(lo, hi);
        }
    }
    return out;
}

inline std::vector<IntervalProblem> enumerate_grid(const SearchGrid& grid) {
    std::vector<Interval> estates;
    if (grid.crisp_only) {
        const GridRange span{std::min(grid.estate_lo.min, grid.estate_hi.min),
                             std::max(grid.estate_lo.max, grid.estate_hi.max)};
        for (double e : grid_values(span, grid.denominator)) {
            if (e >= 0.0) estates.emplace_back(e, e);
        }
    } else {
        for (double lo : grid_values(grid.estate_lo, grid.denominator)) {
            for (double hi : grid_values(grid.estate_hi, grid.denominator)) {
                if (lo >= 0.0 && lo <= hi) estates.emplace_back(lo, hi);
            }
        }
    }
    std::vector<std::vector<Interval>> per_claim;
    per_claim.reserve(grid.claims.size());
    for (const ClaimGrid& claim_grid : grid.claims) {
        per_claim.push_back(grid_intervals(claim_grid, grid.denominator));
        if (per_claim.back().empty()) return {};
    }

    std::vector<IntervalProblem> problems;
    std::vector<std::size_t> index(per_claim.size(), 0);
    for (;;) {
        std::vector<Interval> claims;
        claims.reserve(per_claim.size());
        double lower_total = 0.0;
        for (std::size_t i = 0; i < per_claim.size(); ++i) {
            claims.push_back(per_claim[i][index[i]]);
            lower_total += claims.back().lo();
        }
        for (const Interval& estate : estates) {
            if (estate.hi() <= lower_total) {
                problems.emplace_back(estate, claims);
            }
        }
        std::size_t pos = 0;
        while (pos < index.size() && ++index[pos] == per_claim[pos].size()) {
            index[pos] = 0;
            ++pos;
        }
        if (pos == index.size()) break;
    }
    return problems;
}

// Exact key: the game's endpoint list. Grid values are exact binary
// fractions, so equal games match bit for bit.
inline std::vector<double> game_key(const IntervalGame& g) {
    std::vector<double> key;
    key.reserve(2 * g.values().size());
    for (const Interval& v : g.values()) {
        key.push_back(v.lo());
        key.push_back(v.hi());
    }
    return key;
}

} // namespace detail

/// Enumerates grid problems, groups them by their interval-estate game, and
/// emits a certificate for every same-game pair whose interval rules differ
/// beyond tolerance. Stops after `budget` pair comparisons.
inline std::vector<CounterexampleCertificate> search_estate_counterexamples(
    RuleId rule, const SearchGrid& grid, std::size_t budget = 1000000,
    double tol = kTolerance) {
    const std::vector<IntervalProblem> problems = detail::enumerate_grid(grid);
    std::map<std::vector<double>, std::vector<std::size_t>> groups;
    std::vector<IntervalGame> games;
    games.reserve(problems.size());
    for (std::size_t i = 0; i < problems.size(); ++i) {
        games.push_back(interval_estate_game(problems[i]));
        groups[detail::game_key(games.back())].push_back(i);
    }

    std::vector<CounterexampleCertificate> certificates;
    std::size_t comparisons = 0;
    for (const auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        std::vector<IntervalAllocation> rules;
        rules.reserve(members.size());
        for (std::size_t idx : members) {
            rules.push_back(interval_rule_interval_estate(rule, problems[idx]));
        }
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                if (comparisons++ >= budget) return certificates;
                const double gap = detail::max_endpoint_gap(rules[a], rules[b]);
                if (gap > tol) {
                    certificates.push_back(CounterexampleCertificate{
                        rule, problems[members[a]], problems[members[b]],
                        games[members[a]], rules[a], rules[b], gap});
                }
            }
        }
    }
    return certificates;
}

// ---------------------------------------------------------------------------
// property runners
// ---------------------------------------------------------------------------

inline std::size_t default_trials(PropertyId id) {
    switch (id) {
        case PropertyId::THM5_TRUNCATION: return 10000;
        case PropertyId::ASSUMPTION1_MONOTONE: return 50;
        case PropertyId::PROP31_TIGHT_WEAKEFF: return 1000;
        case PropertyId::PROP_TRUNC_RULE_COINCIDE: return 10000;
        case PropertyId::PROP_SELECTION_CONTAIN: return 1000;
        case PropertyId::PROP_GAMES_COINCIDE: return 10000;
        case PropertyId::THM_INT5_CHAIN: return 1000;
        case PropertyId::THM42_CRISP_TO_INTERVAL: return 10000;
        case PropertyId::INTERVAL_ESTATE_TIGHT: return 1000;
        case PropertyId::EXAMPLE51_REPRO: return 1;
        case PropertyId::ESTATE_COUNTEREXAMPLE_SEARCH: return 1;
    }
    return 1000;
}

namespace detail {

inline std::vector<RuleId> rules_to_run(PropertyId id, std::optional<RuleId> rule) {
    if (rule) return {*rule};
    switch (id) {
        // statements about truncation-invariant rules only
        case PropertyId::THM42_CRISP_TO_INTERVAL:
            return {RuleId::CEA, RuleId::TAL};
        case PropertyId::ESTATE_COUNTEREXAMPLE_SEARCH:
            return {RuleId::TAL};
        default:
            return {RuleId::PROP, RuleId::CEA, RuleId::CEL, RuleId::TAL};
    }
}

inline Json instance_json(RuleId rule, const BankruptcyProblem& p) {
    return Json{{"rule", to_string(rule)}, {"problem", to_json(p)}};
}

inline Json instance_json(RuleId rule, const IntervalClaimsProblem& p) {
    return Json{{"rule", to_string(rule)}, {"problem", to_json(p)}};
}

inline Json instance_json(RuleId rule, const IntervalProblem& p) {
    return Json{{"rule", to_string(rule)}, {"problem", to_json(p)}};
}

inline void run_thm5_truncation(PropertyReport& report,
                                const std::vector<RuleId>& rules,
                                std::size_t trials, std::uint64_t seed) {
    std::vector<BankruptcyProblem> instances = edge_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) instances.push_back(gen.next_problem());
    for (RuleId rule : rules) {
        for (const BankruptcyProblem& p : instances) {
            ++report.instances;
            const Allocation plain = apply_rule(rule, p);
            const Allocation capped = apply_rule(rule, truncate_claims(p));
            double gap = 0.0;
            for (std::size_t i = 0; i < plain.size(); ++i) {
                gap = std::max(gap, std::abs(plain[i] - capped[i]));
            }
            if (gap > kTolerance) {
                record_failure(report, instance_json(rule, p), to_json(capped),
                               to_json(plain), gap);
            }
        }
    }
}

inline void run_assumption1_monotone(PropertyReport& report,
                                     const std::vector<RuleId>& rules,
                                     std::size_t trials, std::uint64_t seed) {
    std::vector<BankruptcyProblem> bases = edge_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) bases.push_back(gen.next_problem());
    const MonotonicityGrid grid{0.25, 2.0};
    for (RuleId rule : rules) {
        for (const BankruptcyProblem& base : bases) {
            ++report.instances;
            const MonotonicityReport mono = check_monotonicity(rule, base, grid);
            for (const MonotonicityViolation& v : mono.violations) {
                Json instance = instance_json(rule, base);
                instance["axis"] = v.axis;
                instance["player"] = v.player;
                instance["from"] = v.axis_value_from;
                instance["to"] = v.axis_value_to;
                record_failure(report, std::move(instance), "monotone", "violated",
                               v.drop);
            }
        }
    }
}

inline void run_prop31_tight_weakeff(PropertyReport& report,
                                     const std::vector<RuleId>& rules,
                                     std::size_t trials, std::uint64_t seed) {
    std::vector<IntervalClaimsProblem> instances = edge_interval_claims_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_claims_problem());
    }
    std::size_t counter = 0;
    for (RuleId rule : rules) {
        for (const IntervalClaimsProblem& p : instances) {
            ++report.instances;
            const IntervalAllocation rewards = interval_rule(rule, p);
            if (!check_reasonable(rewards, p)) {
                record_failure(report, instance_json(rule, p), "reasonable",
                               to_json(rewards), 0.0);
            }
            if (!check_weakly_efficient(rewards, p.estate())) {
                record_failure(report, instance_json(rule, p), "weakly efficient",
                               to_json(rewards), 0.0);
            }
            std::mt19937_64 mc(seed ^ (0x9e3779b97f4a7c15ull + counter++));
            const TightnessReport tight =
                check_corner_tightness(rule, p, kMcSamples, mc);
            for (const TightnessViolation& v : tight.violations) {
                Json instance = instance_json(rule, p);
                instance["selection"] = v.selection;
                instance["estate"] = v.estate;
                instance["player"] = v.player;
                record_failure(report, std::move(instance), "contained", v.payoff,
                               v.deviation);
            }
        }
    }
}

inline void run_trunc_rule_coincide(PropertyReport& report,
                                    const std::vector<RuleId>& rules,
                                    std::size_t trials, std::uint64_t seed) {
    std::vector<IntervalClaimsProblem> instances = edge_interval_claims_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_claims_problem());
    }
    for (RuleId rule : rules) {
        for (const IntervalClaimsProblem& p : instances) {
            ++report.instances;
            const IntervalAllocation plain = interval_rule(rule, p);
            const IntervalAllocation capped = truncated_interval_rule(rule, p);
            const double gap = max_endpoint_gap(plain, capped);
            if (gap > kTolerance) {
                record_failure(report, instance_json(rule, p), to_json(capped),
                               to_json(plain), gap);
            }
        }
    }
}

inline void run_selection_contain(PropertyReport& report, std::size_t trials,
                                  std::uint64_t seed) {
    std::vector<IntervalClaimsProblem> instances = edge_interval_claims_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_claims_problem());
    }
    std::size_t counter = 0;
    for (const IntervalClaimsProblem& p : instances) {
        ++report.instances;
        const IntervalGame w = interval_bankruptcy_game(p);
        // corner selections attain the endpoints exactly
        const CoalitionGame at_lower = bankruptcy_game(
            BankruptcyProblem(p.estate(), p.lower_claims()));
        const CoalitionGame at_upper = bankruptcy_game(
            BankruptcyProblem(p.estate(), p.upper_claims()));
        for (CoalitionMask mask = 1; mask <= w.grand_coalition(); ++mask) {
            if (at_lower.value(mask) != w.value(mask).hi() ||
                at_upper.value(mask) != w.value(mask).lo()) {
                Json instance = Json{{"problem", to_json(p)}};
                instance["coalition"] = format_coalition(mask);
                record_failure(report, std::move(instance), to_json(w.value(mask)),
                               Json::array({at_upper.value(mask),
                                            at_lower.value(mask)}),
                               0.0);
            }
        }
        // random interior selections stay inside
        std::mt19937_64 mc(seed ^ (0xbf58476d1ce4e5b9ull + counter++));
        for (std::size_t s = 0; s < kMcSamples; ++s) {
            std::vector<double> selection;
            selection.reserve(p.size());
            for (const Interval& d : p.claims()) {
                selection.push_back(uniform_in(mc, d.lo(), d.hi()));
            }
            const CoalitionGame v =
                bankruptcy_game(BankruptcyProblem(p.estate(), selection));
            if (!selection_contained(v, w)) {
                Json instance = to_json(p);
                instance["selection"] = selection;
                record_failure(report, std::move(instance), "contained",
                               to_json(v), 0.0);
            }
        }
    }
}

inline void run_games_coincide(PropertyReport& report, std::size_t trials,
                               std::uint64_t seed) {
    std::vector<IntervalClaimsProblem> instances = edge_interval_claims_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_claims_problem());
    }
    // exhaustive integer grid, two and three claimants, values up to 6
    for (std::size_t n = 2; n <= 3; ++n) {
        std::vector<Interval> claim_choices;
        for (int lo = 0; lo <= 6; ++lo) {
            for (int hi = lo; hi <= 6; ++hi) claim_choices.emplace_back(lo, hi);
        }
        std::vector<std::size_t> index(n, 0);
        for (;;) {
            std::vector<Interval> claims;
            double lower_total = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                claims.push_back(claim_choices[index[i]]);
                lower_total += claims.back().lo();
            }
            for (int estate = 0; estate <= static_cast<int>(lower_total); ++estate) {
                instances.emplace_back(static_cast<double>(estate), claims);
            }
            std::size_t pos = 0;
            while (pos < index.size() && ++index[pos] == claim_choices.size()) {
                index[pos] = 0;
                ++pos;
            }
            if (pos == index.size()) break;
        }
    }
    for (const IntervalClaimsProblem& p : instances) {
        ++report.instances;
        const IntervalGame plain = interval_bankruptcy_game(p);
        const IntervalGame capped = truncated_interval_game(p);
        for (CoalitionMask mask = 1; mask <= plain.grand_coalition(); ++mask) {
            if (plain.value(mask) != capped.value(mask)) {
                Json instance = to_json(p);
                instance["coalition"] = format_coalition(mask);
                record_failure(report, std::move(instance),
                               to_json(capped.value(mask)),
                               to_json(plain.value(mask)), 0.0);
            }
        }
    }
}

inline void run_thm_int5_chain(PropertyReport& report,
                               const std::vector<RuleId>& rules,
                               std::size_t trials, std::uint64_t seed) {
    std::vector<IntervalClaimsProblem> instances = edge_interval_claims_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_claims_problem());
    }
    for (RuleId rule : rules) {
        const bool invariant_rule = rule == RuleId::CEA || rule == RuleId::TAL;
        for (const IntervalClaimsProblem& p : instances) {
            ++report.instances;
            const TheoremReport r = verify_theorem_int5(rule, p);
            // the game solution must always match the truncated rule; the
            // full chain only for truncation-invariant rules
            const bool ok =
                r.game_eq_truncated && (!invariant_rule || r.chain_holds());
            if (!ok) {
                record_failure(report, instance_json(rule, p),
                               to_json(r.truncated_rule), to_json(r.game_solution),
                               r.max_deviation);
            }
        }
    }
}

inline void run_thm42(PropertyReport& report, const std::vector<RuleId>& rules,
                      std::size_t trials, std::uint64_t seed) {
    std::vector<IntervalClaimsProblem> instances = edge_interval_claims_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_claims_problem());
    }
    for (RuleId rule : rules) {
        for (const IntervalClaimsProblem& p : instances) {
            ++report.instances;
            const IntervalAllocation via_game = g_f(rule, interval_bankruptcy_game(p));
            const IntervalAllocation direct = interval_rule(rule, p);
            const double gap = max_endpoint_gap(via_game, direct);
            if (gap > kTolerance) {
                record_failure(report, instance_json(rule, p), to_json(direct),
                               to_json(via_game), gap);
            }
        }
    }
}

inline void run_interval_estate_tight(PropertyReport& report,
                                      const std::vector<RuleId>& rules,
                                      std::size_t trials, std::uint64_t seed) {
    std::vector<IntervalProblem> instances = edge_interval_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_problem());
    }
    std::size_t counter = 0;
    for (RuleId rule : rules) {
        for (const IntervalProblem& p : instances) {
            ++report.instances;
            const IntervalAllocation rewards = interval_rule_interval_estate(rule, p);
            if (!check_reasonable(rewards, p)) {
                record_failure(report, instance_json(rule, p), "reasonable",
                               to_json(rewards), 0.0);
            }
            if (!check_weakly_efficient(rewards, p.estate())) {
                record_failure(report, instance_json(rule, p), "weakly efficient",
                               to_json(rewards), 0.0);
            }
            std::mt19937_64 mc(seed ^ (0x94d049bb133111ebull + counter++));
            const TightnessReport tight =
                check_corner_tightness(rule, p, kMcSamples, mc);
            for (const TightnessViolation& v : tight.violations) {
                Json instance = instance_json(rule, p);
                instance["selection"] = v.selection;
                instance["estate"] = v.estate;
                instance["player"] = v.player;
                record_failure(report, std::move(instance), "contained", v.payoff,
                               v.deviation);
            }
        }
    }
}

inline void run_interval_estate_game_contain(PropertyReport& report,
                                             std::size_t trials,
                                             std::uint64_t seed) {
    std::vector<IntervalProblem> instances = edge_interval_problems();
    InstanceGenerator gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        instances.push_back(gen.next_interval_problem());
    }
    std::size_t counter = 0;
    for (const IntervalProblem& p : instances) {
        ++report.instances;
        const IntervalGame w = interval_estate_game(p);
        const CoalitionGame at_lo = bankruptcy_game(
            BankruptcyProblem(p.estate().lo(), p.upper_claims()));
        const CoalitionGame at_hi = bankruptcy_game(
            BankruptcyProblem(p.estate().hi(), p.lower_claims()));
        for (CoalitionMask mask = 1; mask <= w.grand_coalition(); ++mask) {
            if (at_lo.value(mask) != w.value(mask).lo() ||
                at_hi.value(mask) != w.value(mask).hi()) {
                Json instance = to_json(p);
                instance["coalition"] = format_coalition(mask);
                record_failure(report, std::move(instance), to_json(w.value(mask)),
                               Json::array({at_lo.value(mask), at_hi.value(mask)}),
                               0.0);
            }
        }
        std::mt19937_64 mc(seed ^ (0xd6e8feb86659fd93ull + counter++));
        for (std::size_t s = 0; s < kMcSamples; ++s) {
            const double estate = uniform_in(mc, p.estate().lo(), p.estate().hi());
            std::vector<double> selection;
            selection.reserve(p.size());
            for (const Interval& d : p.claims()) {
                selection.push_back(uniform_in(mc, d.lo(), d.hi()));
            }
            const CoalitionGame v =
                bankruptcy_game(BankruptcyProblem(estate, selection));
            if (!selection_contained(v, w)) {
                Json instance = to_json(p);
                instance["selection"] = selection;
                instance["estate_selection"] = estate;
                record_failure(report, std::move(instance), "contained", to_json(v),
                               0.0);
            }
        }
    }
}

inline void run_example51(PropertyReport& report) {
    ++report.instances;
    try {
        reproduce_example_51();
    } catch (const AssertionFailure& e) {
        record_failure(report, "reference scenario", "reproduced", e.what(), 0.0);
    }
}

inline void run_estate_search(PropertyReport& report,
                              const std::vector<RuleId>& rules) {
    for (RuleId rule : rules) {
        ++report.instances;
        const bool invariant_rule = rule == RuleId::CEA || rule == RuleId::TAL;
        const auto certificates =
            search_estate_counterexamples(rule, default_search_grid());
        if (rule == RuleId::TAL) {
            const IntervalProblem a(Interval(6, 8), {Interval(6, 7), Interval(2, 3)});
            const IntervalProblem b(Interval(6, 8),
                                    {Interval(6, 7.5), Interval(2, 3)});
            bool found = false;
            for (const CounterexampleCertificate& c : certificates) {
                const bool ab = approx_equal(c.problem_a.claims()[0], a.claims()[0]) &&
                                approx_equal(c.problem_b.claims()[0], b.claims()[0]);
                const bool ba = approx_equal(c.problem_a.claims()[0], b.claims()[0]) &&
                                approx_equal(c.problem_b.claims()[0], a.claims()[0]);
                if (ab || ba) found = true;
            }
            if (!found) {
                record_failure(report, Json{{"rule", to_string(rule)}},
                               "reference certificate found", "absent", 0.0);
            }
        }
        if (invariant_rule) {
            const auto crisp =
                search_estate_counterexamples(rule, default_crisp_search_grid());
            if (!crisp.empty()) {
                record_failure(report, Json{{"rule", to_string(rule)}},
                               "no crisp-estate certificates",
                               to_json(crisp.front()), crisp.size());
            }
        }
    }
}

} // namespace detail

/// Executes one property on `trials` generated instances (plus the fixed
/// edge instances) and returns a deterministic report.
inline PropertyReport run_property(PropertyId id, std::optional<RuleId> rule,
                                   std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw Error("trials must be at least 1");
    PropertyReport report;
    report.property = id;
    report.rule = rule ? to_string(*rule) : "all";
    report.trials = trials;
    report.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<RuleId> rules = detail::rules_to_run(id, rule);
    switch (id) {
        case PropertyId::THM5_TRUNCATION:
            detail::run_thm5_truncation(report, rules, trials, seed);
            break;
        case PropertyId::ASSUMPTION1_MONOTONE:
            detail::run_assumption1_monotone(report, rules, trials, seed);
            break;
        case PropertyId::PROP31_TIGHT_WEAKEFF:
            detail::run_prop31_tight_weakeff(report, rules, trials, seed);
            break;
        case PropertyId::PROP_TRUNC_RULE_COINCIDE:
            detail::run_trunc_rule_coincide(report, rules, trials, seed);
            break;
        case PropertyId::PROP_SELECTION_CONTAIN:
            detail::run_selection_contain(report, trials, seed);
            break;
        case PropertyId::PROP_GAMES_COINCIDE:
            detail::run_games_coincide(report, trials, seed);
            break;
        case PropertyId::THM_INT5_CHAIN:
            detail::run_thm_int5_chain(report, rules, trials, seed);
            break;
        case PropertyId::THM42_CRISP_TO_INTERVAL:
            detail::run_thm42(report, rules, trials, seed);
            break;
        case PropertyId::INTERVAL_ESTATE_TIGHT:
            detail::run_interval_estate_tight(report, rules, trials, seed);
            detail::run_interval_estate_game_contain(report, trials, seed);
            break;
        case PropertyId::EXAMPLE51_REPRO:
            detail::run_example51(report);
            break;
        case PropertyId::ESTATE_COUNTEREXAMPLE_SEARCH:
            detail::run_estate_search(report, rules);
            break;
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace claimdiv
