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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "claimdiv/claimdiv.hpp"

namespace {

using namespace claimdiv;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitFailure = 2;
constexpr int kExitUsage = 3;

Json load_json(const std::string& path_or_inline) {
    if (!path_or_inline.empty() && path_or_inline.front() == '{') {
        return Json::parse(path_or_inline);
    }
    std::ifstream in(path_or_inline);
    if (!in) throw Error("cannot open '" + path_or_inline + "'");
    return Json::parse(in);
}

AnyProblem load_problem(const std::string& path) {
    return problem_from_json(load_json(path));
}

BankruptcyProblem require_crisp(const AnyProblem& any, const std::string& command) {
    if (const auto* p = std::get_if<BankruptcyProblem>(&any)) return *p;
    // degenerate interval data still describes a crisp problem
    if (const auto* p = std::get_if<IntervalClaimsProblem>(&any)) {
        std::vector<double> claims;
        for (const Interval& d : p->claims()) {
            if (!d.degenerate()) {
                throw ProblemValidationError(
                    command + " needs a crisp problem; use interval-" + command);
            }
            claims.push_back(d.lo());
        }
        return BankruptcyProblem(p->estate(), std::move(claims));
    }
    throw ProblemValidationError(command + " needs a crisp problem; use interval-" +
                                 command);
}

SearchGrid grid_from_json(const Json& j) {
    auto range = [](const Json& r) {
        if (!r.is_array() || r.size() != 2) {
            throw ProblemValidationError("grid ranges are [min, max] arrays");
        }
        return GridRange{r[0].get<double>(), r[1].get<double>()};
    };
    SearchGrid grid;
    grid.estate_lo = range(j.at("estate_lo"));
    grid.estate_hi = range(j.at("estate_hi"));
    for (const Json& c : j.at("claims")) {
        grid.claims.push_back(ClaimGrid{range(c.at("lo")), range(c.at("hi"))});
    }
    if (j.contains("denominator")) grid.denominator = j["denominator"].get<int>();
    if (j.contains("crisp_only")) grid.crisp_only = j["crisp_only"].get<bool>();
    return grid;
}

void print_game_text(const Json& values) {
    for (const auto& [key, value] : values.items()) {
        std::string rendered;
        if (value.is_array()) {
            rendered = format_interval(interval_from_json(value));
        } else {
            rendered = format_number(value.get<double>());
        }
        std::cout << "{" << key << "} -> " << rendered << "\n";
    }
}

struct Options {
    std::string rule; // empty = per-command default
    std::string problem_path;
    std::string game_path;
    std::string property;
    std::string grid;
    std::string format = "text";
    std::size_t trials = 0; // 0 = property default
    std::uint64_t seed = 42;
    std::size_t budget = 1000000;
};

int run_solve(const Options& opt) {
    const BankruptcyProblem p = require_crisp(load_problem(opt.problem_path), "solve");
    const Allocation x = apply_rule(rule_from_string(opt.rule), p);
    if (opt.format == "json") {
        std::cout << Json{{"rule", opt.rule},
                          {"problem", to_json(p)},
                          {"allocation", to_json(x)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_allocation(x) << "\n";
    }
    return kExitOk;
}

int run_game(const Options& opt) {
    const BankruptcyProblem p = require_crisp(load_problem(opt.problem_path), "game");
    const Json j = to_json(bankruptcy_game(p));
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        print_game_text(j["values"]);
    }
    return kExitOk;
}

int run_interval_solve(const Options& opt) {
    const AnyProblem any = load_problem(opt.problem_path);
    const RuleId rule = rule_from_string(opt.rule);
    IntervalAllocation rewards;
    Json problem_json;
    if (const auto* p = std::get_if<IntervalProblem>(&any)) {
        rewards = interval_rule_interval_estate(rule, *p);
        problem_json = to_json(*p);
    } else if (const auto* p = std::get_if<IntervalClaimsProblem>(&any)) {
        rewards = interval_rule(rule, *p);
        problem_json = to_json(*p);
    } else {
        const auto& crisp = std::get<BankruptcyProblem>(any);
        std::vector<Interval> claims;
        for (double d : crisp.claims()) claims.emplace_back(d);
        const IntervalClaimsProblem lifted(crisp.estate(), std::move(claims));
        rewards = interval_rule(rule, lifted);
        problem_json = to_json(lifted);
    }
    if (opt.format == "json") {
        std::cout << Json{{"rule", opt.rule},
                          {"problem", problem_json},
                          {"allocation", to_json(rewards)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_allocation(rewards) << "\n";
    }
    return kExitOk;
}

IntervalGame game_for(const AnyProblem& any) {
    if (const auto* p = std::get_if<IntervalProblem>(&any)) {
        return interval_estate_game(*p);
    }
    if (const auto* p = std::get_if<IntervalClaimsProblem>(&any)) {
        return interval_bankruptcy_game(*p);
    }
    const auto& crisp = std::get<BankruptcyProblem>(any);
    std::vector<Interval> claims;
    for (double d : crisp.claims()) claims.emplace_back(d);
    return interval_bankruptcy_game(
        IntervalClaimsProblem(crisp.estate(), std::move(claims)));
}

int run_interval_game(const Options& opt) {
    const Json j = to_json(game_for(load_problem(opt.problem_path)));
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        print_game_text(j["values"]);
    }
    return kExitOk;
}

int run_gf(const Options& opt) {
    const RuleId rule = rule_from_string(opt.rule);
    IntervalGame w = opt.game_path.empty()
                         ? game_for(load_problem(opt.problem_path))
                         : interval_game_from_json(load_json(opt.game_path));
    const IntervalAllocation rewards = g_f(rule, w);
    if (opt.format == "json") {
        std::cout << Json{{"rule", opt.rule},
                          {"game", to_json(w)},
                          {"allocation", to_json(rewards)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_allocation(rewards) << "\n";
    }
    return kExitOk;
}

int run_check(const Options& opt) {
    const PropertyId id = property_from_string(opt.property);
    std::optional<RuleId> rule; // absent or "all": the property's own rule set
    if (!opt.rule.empty() && opt.rule != "all") {
        rule = rule_from_string(opt.rule);
    }
    const std::size_t trials = opt.trials == 0 ? default_trials(id) : opt.trials;
    const PropertyReport report = run_property(id, rule, trials, opt.seed);
    if (opt.format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << to_text(report);
        std::cerr << "elapsed: " << format_number(report.elapsed.count()) << "s\n";
    }
    return report.passed() ? kExitOk : kExitFailure;
}

int run_repro_example(const Options& opt) {
    const Example51Report report = reproduce_example_51();
    if (opt.format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << to_text(report);
    }
    return kExitOk;
}

int run_search(const Options& opt) {
    const RuleId rule = rule_from_string(opt.rule.empty() ? "tal" : opt.rule);
    const SearchGrid grid = opt.grid.empty() ? default_search_grid()
                                             : grid_from_json(load_json(opt.grid));
    const auto certificates = search_estate_counterexamples(rule, grid, opt.budget);
    if (opt.format == "json") {
        Json out = Json::array();
        for (const auto& c : certificates) out.push_back(to_json(c));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << certificates.size() << " certificate(s)\n";
        for (const auto& c : certificates) {
            std::cout << "problem a: " << to_json(c.problem_a).dump()
                      << "\nproblem b: " << to_json(c.problem_b).dump()
                      << "\nrule a: " << format_allocation(c.rule_a)
                      << "\nrule b: " << format_allocation(c.rule_b)
                      << "\nmax deviation: " << format_number(c.max_rule_deviation)
                      << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bankruptcy division rules, interval games, and their verifier"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&opt](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "apply a division rule");
    solve->add_option("--rule", opt.rule, "prop|cea|cel|tal")->required();
    solve->add_option("--problem", opt.problem_path, "problem JSON file")->required();
    add_format(solve);

    CLI::App* game = app.add_subcommand("game", "build the coalition game");
    game->add_option("--problem", opt.problem_path)->required();
    add_format(game);

    CLI::App* isolve = app.add_subcommand("interval-solve", "apply an interval rule");
    isolve->add_option("--rule", opt.rule)->required();
    isolve->add_option("--problem", opt.problem_path)->required();
    add_format(isolve);

    CLI::App* igame = app.add_subcommand("interval-game", "build the interval game");
    igame->add_option("--problem", opt.problem_path)->required();
    add_format(igame);

    CLI::App* gf = app.add_subcommand("gf", "game-based interval solution");
    gf->add_option("--rule", opt.rule)->required();
    gf->add_option("--problem", opt.problem_path, "problem JSON file");
    gf->add_option("--game", opt.game_path, "interval game JSON file");
    add_format(gf);

    CLI::App* check = app.add_subcommand("check", "run a verifier property");
    check->add_option("--property", opt.property)->required();
    check->add_option("--rule", opt.rule, "prop|cea|cel|tal|all (default all)");
    check->add_option("--trials", opt.trials, "random instances (0 = default)");
    check->add_option("--seed", opt.seed);
    add_format(check);

    CLI::App* repro = app.add_subcommand("repro-example",
                                         "reproduce the two-situation scenario");
    add_format(repro);

    CLI::App* search = app.add_subcommand("search",
                                          "search interval-estate counterexamples");
    search->add_option("--rule", opt.rule, "prop|cea|cel|tal (default tal)");
    search->add_option("--grid", opt.grid, "grid JSON (inline or file)");
    search->add_option("--budget", opt.budget, "max pair comparisons");
    add_format(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(solve)) return run_solve(opt);
        if (app.got_subcommand(game)) return run_game(opt);
        if (app.got_subcommand(isolve)) return run_interval_solve(opt);
        if (app.got_subcommand(igame)) return run_interval_game(opt);
        if (app.got_subcommand(gf)) {
            if (opt.problem_path.empty() == opt.game_path.empty()) {
                std::cerr << "gf needs exactly one of --problem or --game\n";
                return kExitUsage;
            }
            return run_gf(opt);
        }
        if (app.got_subcommand(check)) return run_check(opt);
        if (app.got_subcommand(repro)) return run_repro_example(opt);
        if (app.got_subcommand(search)) return run_search(opt);
        std::cerr << app.help();
        return kExitUsage;
    } catch (const AssertionFailure& e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return kExitFailure;
    } catch (const UnknownProperty& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return kExitValidation;
    }
}
