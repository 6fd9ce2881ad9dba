#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bvg/aggregator.hpp"
#include "bvg/core.hpp"
#include "bvg/formula.hpp"
#include "bvg/rational.hpp"

namespace bvg {

// Per-voter payoffs, exact rationals throughout.
//
//   constant  one value per voter, the same at every profile
//   uniform   one value per voter per collective outcome
//   full      per-profile deltas on top of a base table (sparse)
class payoff_table {
public:
    enum class kind { constant, uniform, full };

    static payoff_table constant(std::vector<rational> per_voter);
    // values[i][outcome_bits], one row per voter covering all 2^m outcomes.
    static payoff_table uniform(std::vector<std::vector<rational>> values);
    static payoff_table full(payoff_table base,
                             std::vector<std::map<std::uint64_t, rational>> deltas);

    kind table_kind() const { return kind_; }
    int voters() const { return voters_; }

    rational value(int voter, std::uint64_t profile_code, std::uint32_t outcome_bits) const;

    const std::vector<rational>& constant_values() const { return constant_; }
    const std::vector<std::vector<rational>>& uniform_values() const { return uniform_; }
    const payoff_table& base() const { return *base_; }
    const std::vector<std::map<std::uint64_t, rational>>& deltas() const { return deltas_; }

private:
    payoff_table() = default;
    kind kind_ = kind::constant;
    int voters_ = 0;
    std::vector<rational> constant_;
    std::vector<std::vector<rational>> uniform_;
    std::shared_ptr<const payoff_table> base_;
    std::vector<std::map<std::uint64_t, rational>> deltas_;
};

// A voter's goal: a propositional formula over the issues, with its cube
// form when the formula is syntactically a conjunction of literals.
// Analyses that rely on cube goals refuse goals where cube_form is empty.
struct goal {
    formula f = formula::top();
    std::optional<goal_cube> cube_form;

    static goal of(formula f, int issues) {
        goal g;
        g.cube_form = as_cube(f, issues);
        g.f = std::move(f);
        return g;
    }
    bool is_cube() const { return cube_form.has_value(); }
};

// A one-shot voting game: every voter submits a ballot, the aggregator
// fixes the collective outcome, and voters rank profiles by goal
// satisfaction of the outcome first and payoff second.
struct aggregation_game {
    structure dims;
    aggregator rule = aggregator::majority(structure(3, 1));
    std::vector<goal> goals;
    payoff_table payoffs = payoff_table::constant({0, 0, 0});

    aggregation_game(structure s, aggregator agg, std::vector<goal> gs, payoff_table pt);

    ballot outcome(const profile& p) const { return rule.apply(p); }
    bool goal_satisfied(int voter, const ballot& outcome_bits) const;
    rational payoff(int voter, const profile& p) const;
    rational payoff(int voter, const profile& p, const ballot& outcome_bits) const;
    bool all_goals_cubes() const;
};

// Quasi-dichotomous preference of voter i between two profiles: outcome
// goal satisfaction decides first, payoff breaks ties. A total preorder.
bool prefers(const aggregation_game& g, int voter, const profile& a, const profile& b);
bool strictly_prefers(const aggregation_game& g, int voter, const profile& a, const profile& b);

bool is_truthful(const aggregation_game& g, int voter, const ballot& b);

struct deviation {
    int voter = -1;
    ballot to;
};

struct nash_result {
    bool nash = false;
    std::optional<deviation> improvement;  // lexicographically first strict improvement
};

nash_result is_nash(const aggregation_game& g, const profile& p);

std::vector<profile> enumerate_nash(const aggregation_game& g,
                                    std::uint64_t cap = default_enumeration_cap);

struct profile_classification {
    bool nash = false;
    coalition truthful_for;  // every voter whose own ballot satisfies their goal
    std::vector<std::pair<coalition, bool>> efficient_for;
    std::vector<std::pair<coalition, bool>> totally_inefficient_for;
};

profile_classification classify_profile(const aggregation_game& g, const profile& p,
                                        std::span<const coalition> queried);

struct dominance_result {
    bool dominant = false;
    // Lexicographically first (context, alternative) where the alternative
    // is strictly preferred; the context is a full profile whose voter-i
    // entry is the candidate ballot.
    std::optional<profile> witness_context;
    std::optional<ballot> witness_better;
};

// Weak dominance of `b` for `voter`: against every opponent context,
// playing b is weakly preferred to every alternative ballot.
dominance_result is_weakly_dominant(const aggregation_game& g, int voter, const ballot& b,
                                    std::uint64_t cap = default_enumeration_cap);

std::vector<ballot> weakly_dominant_ballots(const aggregation_game& g, int voter,
                                            std::uint64_t cap = default_enumeration_cap);

// Iterated elimination of strictly dominated strategies: every round
// simultaneously removes each ballot strictly worse than some surviving
// ballot against all surviving opponent contexts. Pure dominators only.
std::vector<std::vector<ballot>> iesds(const aggregation_game& g,
                                       std::uint64_t cap = default_enumeration_cap);

// The profile of per-voter weakly dominant ballots, when each voter has
// one and all of that voter's dominant ballots induce identical outcomes
// and payoffs against every context; nullopt otherwise.
std::optional<profile> dominant_strategy_equilibrium(const aggregation_game& g,
                                                     std::uint64_t cap = default_enumeration_cap);

// Uniform: payoffs depend on the profile only through the outcome.
// Structural for constant/uniform tables, extensional for full ones.
bool is_uniform(const aggregation_game& g, std::uint64_t cap = default_enumeration_cap);
bool is_constant(const aggregation_game& g, std::uint64_t cap = default_enumeration_cap);

}  // namespace bvg
