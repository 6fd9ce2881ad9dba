#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "bvg/negotiation.hpp"

namespace bvg {

// Randomized property suites mirroring the engine's guarantees. Each suite
// runs `count` random instances from a seeded generator and reports the
// first failure with a witness description. Deterministic for a fixed
// seed. These back the `verify` command and the acceptance checks.

struct suite_result {
    std::string name;
    bool passed = true;
    bool skipped = false;  // count == 0
    int instances = 0;
    std::string witness;  // first failure, human-readable
};

struct suite_options {
    std::uint64_t seed = 5489;
    int count = 100;
    std::uint64_t cap = default_enumeration_cap;

    // Harness self-test hook: inverts the dominance predicate so the
    // truthful-dominance suite must fail with a witness.
    bool mutate_invert_dominance = false;
};

// In constant games under a systematic monotonic rule with cube goals,
// every ballot satisfying a voter's own goal is weakly dominant. Runs on
// majority rules, or on random monotone coalition-family rules.
suite_result truthful_dominance_suite(const suite_options& opts,
                                      bool explicit_family_rules = false);

// For a resilient winning coalition with jointly satisfiable goals, the
// profile where members vote a joint witness and everyone else votes its
// inverse is a Nash equilibrium, truthful and efficient for the coalition.
suite_result coalition_equilibrium_suite(const suite_options& opts);

// Redistribution inside a winning coalition with jointly satisfiable
// goals preserves the coalition's payoff sum at every profile and leaves
// no equilibrium whose outcome violates every member's goal.
suite_result redistribution_suite(const suite_options& opts);

// Every efficient equilibrium of a goal-consistent uniform majority game
// is certified by the commitment construction.
suite_result commitment_suite(const suite_options& opts);

// Every equilibrium leaving some goal-consistent winning coalition
// unsatisfied is refuted, and the refutation locks the coalition to the
// target ballot under iterated elimination.
suite_result deviation_suite(const suite_options& opts);

// Random-game helpers shared by the suites and tests.
formula random_cube_formula(std::mt19937_64& rng, int issues);
rational random_payoff(std::mt19937_64& rng);
aggregator random_monotone_family_rule(std::mt19937_64& rng, const structure& s);

}  // namespace bvg
