#pragma once

// In-memory copies of the bundled example games, shared across test files.

#include "bvg/game.hpp"

namespace bvg::fixtures {

// Three parties, issues W/F/P, goals W, F, !P, constant payoffs. The
// parliament profile (101 110 000) aggregates to 100 under majority.
inline aggregation_game parliament() {
    structure s(3, 3);
    std::vector<goal> goals{
        goal::of(formula::atom(0), 3),
        goal::of(formula::atom(1), 3),
        goal::of(formula::negation(formula::atom(2)), 3),
    };
    return aggregation_game(s, aggregator::majority(s), goals,
                            payoff_table::constant({0, 0, 0}));
}

inline profile parliament_profile() { return profile::parse("101 110 000", structure(3, 3)); }

inline formula parliament_constraint() {
    // W -> (F | P)
    return formula::implication(formula::atom(0),
                                formula::disjunction(formula::atom(1), formula::atom(2)));
}

// Each voter wants their own issue accepted; constant payoffs.
inline aggregation_game own_issue() {
    structure s(3, 3);
    std::vector<goal> goals{
        goal::of(formula::atom(0), 3),
        goal::of(formula::atom(1), 3),
        goal::of(formula::atom(2), 3),
    };
    return aggregation_game(s, aggregator::majority(s), goals,
                            payoff_table::constant({0, 0, 0}));
}

// The mutually blocking truthful profile: each voter accepts only their
// own issue, so nothing passes.
inline profile own_issue_deadlock() { return profile::parse("100 010 001", structure(3, 3)); }

// Issues p/q/t; complete single-model cube goals; voter 3 additionally
// earns 1 whenever the collective outcome is 010. Truthful voting is not
// dominant for voter 3 here.
inline aggregation_game pivotal_payoff() {
    structure s(3, 3);
    auto lit = [](int j, bool pos) {
        return pos ? formula::atom(j) : formula::negation(formula::atom(j));
    };
    auto cube3 = [&](bool p, bool q, bool t) {
        return formula::conjunction(lit(0, p),
                                    formula::conjunction(lit(1, q), lit(2, t)));
    };
    std::vector<goal> goals{
        goal::of(cube3(false, true, false), 3),   // !p & q & !t
        goal::of(cube3(false, false, false), 3),  // !p & !q & !t
        goal::of(cube3(false, false, true), 3),   // !p & !q & t
    };
    std::vector<std::vector<rational>> values(3, std::vector<rational>(8));
    values[2][ballot::from_bits({0, 1, 0}).bits()] = rational(1);
    return aggregation_game(s, aggregator::majority(s), goals,
                            payoff_table::uniform(values));
}

// Five voters over issues p/r; voters 1 and 5 hold opposed two-literal
// goals, everyone else is indifferent.
inline aggregation_game opposed_coalitions() {
    structure s(5, 2);
    std::vector<goal> goals{
        goal::of(formula::conjunction(formula::atom(0), formula::negation(formula::atom(1))), 2),
        goal::of(formula::top(), 2),
        goal::of(formula::top(), 2),
        goal::of(formula::top(), 2),
        goal::of(formula::conjunction(formula::atom(1), formula::negation(formula::atom(0))), 2),
    };
    return aggregation_game(s, aggregator::majority(s), goals,
                            payoff_table::constant({0, 0, 0, 0, 0}));
}

// Constant game where nobody cares: every profile is an equilibrium.
inline aggregation_game indifferent(int voters, int issues) {
    structure s(voters, issues);
    std::vector<goal> goals(voters, goal::of(formula::top(), issues));
    return aggregation_game(s, aggregator::majority(s), goals,
                            payoff_table::constant(std::vector<rational>(voters)));
}

}  // namespace bvg::fixtures
