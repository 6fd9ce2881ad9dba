// Command-line front end for the binary voting game solver.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bvg/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"solver for binary voting games and pre-vote negotiation"};
    app.require_subcommand(1);
    app.fallthrough();

    bool machine = false;
    std::uint64_t cap = bvg::default_enumeration_cap;
    app.add_flag("--machine", machine, "tab-separated machine-readable output");
    app.add_option("--cap", cap, "enumeration cap (number of states)");

    std::string game_path;
    std::string profile_text;
    std::vector<std::string> coalitions;
    std::vector<std::string> grid_amounts;
    std::uint64_t seed = 5489;
    int counts = 100;

    CLI::App* aggregate = app.add_subcommand(
        "aggregate", "aggregate one profile and print per-issue acceptors and the outcome");
    aggregate->add_option("--game", game_path, "game file")->required();
    aggregate->add_option("--profile", profile_text, "ballot profile, e.g. 101110000")
        ->required();

    CLI::App* nash = app.add_subcommand(
        "nash", "enumerate pure equilibria with truthfulness and efficiency flags");
    nash->add_option("--game", game_path, "game file")->required();
    nash->add_option("--coalition", coalitions,
                     "coalition to classify against, e.g. 1,2 (repeatable; default: all voters)");

    CLI::App* survive = app.add_subcommand(
        "survive", "classify every equilibrium as surviving negotiation or not");
    survive->add_option("--game", game_path, "game file")->required();
    survive->add_option("--grid", grid_amounts,
                        "restricted-grid oracle cross-check with these amounts, e.g. 1,2,3");

    CLI::App* paradox = app.add_subcommand(
        "paradox", "admissibility of equilibrium outcomes under the integrity constraint");
    paradox->add_option("--game", game_path, "game file")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "run the randomized property suites (and an oracle check with --game)");
    verify->add_option("--game", game_path, "game file for the oracle consistency check");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--counts", counts, "instances per suite (0 skips)");

    CLI11_PARSE(app, argc, argv);

    bvg::command_result result;
    if (*aggregate) {
        result = bvg::run_aggregate(game_path, profile_text, machine, cap);
    } else if (*nash) {
        result = bvg::run_nash(game_path, coalitions, machine, cap);
    } else if (*survive) {
        std::vector<std::string> amounts;
        for (const std::string& chunk : grid_amounts) {
            std::string item;
            std::istringstream is(chunk);
            while (std::getline(is, item, ','))
                if (!item.empty()) amounts.push_back(item);
        }
        result = bvg::run_survive(game_path, machine, cap, amounts);
    } else if (*paradox) {
        result = bvg::run_paradox(game_path, machine, cap);
    } else {
        std::optional<std::string> path;
        if (!game_path.empty()) path = game_path;
        result = bvg::run_verify(path, seed, counts, machine, cap);
    }
    std::cout << result.output;
    return result.exit_code;
}
