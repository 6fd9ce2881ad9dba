#include "bvg/properties.hpp"

#include <algorithm>
#include <sstream>

namespace bvg {

formula random_cube_formula(std::mt19937_64& rng, int issues) {
    std::uniform_int_distribution<int> trit(0, 2);
    std::optional<formula> acc;
    for (int j = issues - 1; j >= 0; --j) {
        int t = trit(rng);
        if (t == 0) continue;
        formula lit = t == 1 ? formula::atom(j) : formula::negation(formula::atom(j));
        acc = acc ? formula::conjunction(lit, std::move(*acc)) : std::move(lit);
    }
    return acc ? *acc : formula::top();
}

namespace {

// A cube the given ballot satisfies: literals drawn from the ballot's bits.
formula random_cube_consistent_with(std::mt19937_64& rng, const ballot& b) {
    std::uniform_int_distribution<int> keep(0, 1);
    std::optional<formula> acc;
    for (int j = b.issues() - 1; j >= 0; --j) {
        if (!keep(rng)) continue;
        formula lit = b.bit(j) ? formula::atom(j) : formula::negation(formula::atom(j));
        acc = acc ? formula::conjunction(lit, std::move(*acc)) : std::move(lit);
    }
    return acc ? *acc : formula::top();
}

ballot random_ballot(std::mt19937_64& rng, int issues) {
    std::uniform_int_distribution<std::uint32_t> bits(0, (std::uint32_t(1) << issues) - 1);
    return ballot(bits(rng), issues);
}

structure random_dims(std::mt19937_64& rng, bool allow_large) {
    std::uniform_int_distribution<int> pick(0, allow_large ? 3 : 1);
    switch (pick(rng)) {
        case 0:
            return structure(3, 2);
        case 1:
            return structure(3, 3);
        case 2:
            return structure(5, 2);
        default:
            return structure(5, 3);
    }
}

coalition random_member(std::mt19937_64& rng, const coalition_family& family) {
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
    return coalition(family.masks()[pick(rng)], family.voters());
}

std::vector<std::vector<rational>> random_uniform_values(std::mt19937_64& rng,
                                                         const structure& s) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 2);
    std::vector<std::vector<rational>> values(s.voters,
                                              std::vector<rational>(s.ballot_space()));
    for (auto& row : values)
        for (auto& v : row) v = rational(num(rng), den(rng));
    return values;
}

std::string describe_game(const aggregation_game& g) {
    std::ostringstream os;
    os << g.dims.voters << " voters, " << g.dims.issues << " issues, goals";
    for (const goal& gl : g.goals) os << " [" << gl.f.to_string() << "]";
    return os.str();
}

}  // namespace

rational random_payoff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 2);
    return rational(num(rng), den(rng));
}

aggregator random_monotone_family_rule(std::mt19937_64& rng, const structure& s) {
    std::uint32_t all = (std::uint32_t(1) << s.voters) - 1;
    std::uniform_int_distribution<std::uint32_t> seed_mask(1, all);
    std::uniform_int_distribution<int> seeds(1, 3);
    std::vector<std::uint32_t> members{all};
    for (int k = seeds(rng); k > 0; --k) members.push_back(seed_mask(rng));
    // Upward closure; ascending order so marks propagate to supersets.
    std::vector<bool> in(all + 1, false);
    for (std::uint32_t m : members) in[m] = true;
    for (std::uint32_t m = 1; m <= all; ++m) {
        if (!in[m]) continue;
        for (int i = 0; i < s.voters; ++i) in[m | (std::uint32_t(1) << i)] = true;
    }
    std::vector<std::uint32_t> closure;
    for (std::uint32_t m = 1; m <= all; ++m)
        if (in[m]) closure.push_back(m);
    return aggregator::explicit_family(s, coalition_family(std::move(closure), s.voters));
}

suite_result truthful_dominance_suite(const suite_options& opts, bool explicit_family_rules) {
    suite_result r;
    r.name = explicit_family_rules ? "truthful-dominance (coalition-family rules)"
                                   : "truthful-dominance (majority)";
    if (opts.count == 0) {
        r.skipped = true;
        return r;
    }
    std::mt19937_64 rng(opts.seed);
    for (int it = 0; it < opts.count; ++it) {
        structure s = random_dims(rng, /*allow_large=*/true);
        aggregator rule = explicit_family_rules ? random_monotone_family_rule(rng, s)
                                                : aggregator::majority(s);
        std::vector<goal> goals;
        for (int i = 0; i < s.voters; ++i)
            goals.push_back(goal::of(random_cube_formula(rng, s.issues), s.issues));
        std::vector<rational> constants;
        for (int i = 0; i < s.voters; ++i) constants.push_back(random_payoff(rng));
        aggregation_game game(s, rule, goals, payoff_table::constant(constants));

        for (int i = 0; i < s.voters; ++i) {
            for (std::uint32_t bits = 0; bits < s.ballot_space(); ++bits) {
                ballot b(bits, s.issues);
                if (!is_truthful(game, i, b)) continue;
                bool dominant = is_weakly_dominant(game, i, b, opts.cap).dominant;
                if (opts.mutate_invert_dominance) dominant = !dominant;
                if (!dominant) {
                    r.passed = false;
                    r.witness = "instance " + std::to_string(it) + ": voter " +
                                std::to_string(i + 1) + " truthful ballot " + b.to_string() +
                                " not weakly dominant; " + describe_game(game);
                    r.instances = it + 1;
                    return r;
                }
            }
        }
        r.instances = it + 1;
    }
    return r;
}

suite_result coalition_equilibrium_suite(const suite_options& opts) {
    suite_result r;
    r.name = "coalition-equilibrium";
    if (opts.count == 0) {
        r.skipped = true;
        return r;
    }
    std::mt19937_64 rng(opts.seed);
    for (int it = 0; it < opts.count; ++it) {
        structure s = random_dims(rng, /*allow_large=*/true);
        aggregator rule = aggregator::majority(s);
        coalition_family resilient = resilient_winning_coalitions(rule, opts.cap);
        coalition c = random_member(rng, resilient);

        ballot seed = random_ballot(rng, s.issues);
        std::vector<goal> goals;
        for (int i = 0; i < s.voters; ++i) {
            formula f = c.contains(i) ? random_cube_consistent_with(rng, seed)
                                      : random_cube_formula(rng, s.issues);
            goals.push_back(goal::of(std::move(f), s.issues));
        }
        aggregation_game game(s, rule, goals,
                              payoff_table::uniform(random_uniform_values(rng, s)));

        std::vector<goal_cube> cubes;
        for (int i : c.members()) cubes.push_back(*game.goals[i].cube_form);
        ballot witness = *cubes_consistent(cubes, s.issues);

        std::vector<ballot> ballots;
        for (int i = 0; i < s.voters; ++i)
            ballots.push_back(c.contains(i) ? witness : inverse_ballot(witness));
        profile constructed(ballots, s);

        std::vector<coalition> queried{c};
        profile_classification cls = classify_profile(game, constructed, queried);
        bool truthful = c.subset_of(cls.truthful_for);
        bool efficient = cls.efficient_for.front().second;
        if (!cls.nash || !truthful || !efficient) {
            r.passed = false;
            r.witness = "instance " + std::to_string(it) + ": coalition " + c.to_string() +
                        ", profile " + constructed.to_string() +
                        (cls.nash ? "" : " is not an equilibrium") +
                        (truthful ? "" : "; not coalition-truthful") +
                        (efficient ? "" : "; not coalition-efficient") + "; " +
                        describe_game(game);
            r.instances = it + 1;
            return r;
        }
        r.instances = it + 1;
    }
    return r;
}

suite_result redistribution_suite(const suite_options& opts) {
    suite_result r;
    r.name = "redistribution";
    if (opts.count == 0) {
        r.skipped = true;
        return r;
    }
    std::mt19937_64 rng(opts.seed);
    for (int it = 0; it < opts.count; ++it) {
        structure s = random_dims(rng, /*allow_large=*/false);
        aggregator rule = aggregator::majority(s);
        coalition c = random_member(rng, winning_coalitions(rule, opts.cap));

        ballot seed = random_ballot(rng, s.issues);
        std::vector<goal> goals;
        for (int i = 0; i < s.voters; ++i) {
            formula f = c.contains(i) ? random_cube_consistent_with(rng, seed)
                                      : random_cube_formula(rng, s.issues);
            goals.push_back(goal::of(std::move(f), s.issues));
        }
        aggregation_game game(s, rule, goals,
                              payoff_table::uniform(random_uniform_values(rng, s)));

        std::vector<goal_cube> cubes;
        for (int i : c.members()) cubes.push_back(*game.goals[i].cube_form);
        ballot b_star = *cubes_consistent(cubes, s.issues);

        aggregation_game modified = redistribute_for_coalition(game, c, b_star, opts.cap);

        // Coalition payoff sum unchanged at every profile, exact equality.
        for (std::uint64_t code = 0; code < s.profile_space(); ++code) {
            profile p(code, s);
            rational before, after;
            for (int i : c.members()) {
                before += game.payoff(i, p);
                after += modified.payoff(i, p);
            }
            if (before != after) {
                r.passed = false;
                r.witness = "instance " + std::to_string(it) + ": coalition sum changed at " +
                            p.to_string() + "; " + describe_game(game);
                r.instances = it + 1;
                return r;
            }
        }

        // No equilibrium may leave every coalition member's goal violated.
        for (const profile& ne : enumerate_nash(modified, opts.cap)) {
            ballot out = modified.outcome(ne);
            bool all_violated = true;
            for (int i : c.members())
                if (modified.goal_satisfied(i, out)) all_violated = false;
            if (all_violated) {
                r.passed = false;
                r.witness = "instance " + std::to_string(it) + ": equilibrium " +
                            ne.to_string() + " leaves coalition " + c.to_string() +
                            " fully unsatisfied; " + describe_game(game);
                r.instances = it + 1;
                return r;
            }
        }
        r.instances = it + 1;
    }
    return r;
}

suite_result commitment_suite(const suite_options& opts) {
    suite_result r;
    r.name = "commitment";
    if (opts.count == 0) {
        r.skipped = true;
        return r;
    }
    std::mt19937_64 rng(opts.seed);
    for (int it = 0; it < opts.count; ++it) {
        structure s = random_dims(rng, /*allow_large=*/false);
        aggregator rule = aggregator::majority(s);

        ballot seed = random_ballot(rng, s.issues);
        std::vector<goal> goals;
        for (int i = 0; i < s.voters; ++i)
            goals.push_back(goal::of(random_cube_consistent_with(rng, seed), s.issues));
        aggregation_game game(s, rule, goals,
                              payoff_table::uniform(random_uniform_values(rng, s)));
        endogenous_game endo(game, opts.cap);

        std::vector<profile> equilibria = enumerate_nash(game, opts.cap);
        std::vector<survival_status> statuses = check_surviving_all(endo, equilibria, opts.cap);

        for (std::size_t k = 0; k < equilibria.size(); ++k) {
            ballot out = game.outcome(equilibria[k]);
            bool efficient = true;
            for (int i = 0; i < s.voters; ++i)
                if (!game.goal_satisfied(i, out)) efficient = false;
            if (!efficient) continue;

            transfer_profile tau = commitment_transfer(game, equilibria[k], opts.cap);
            commitment_check chk =
                verify_commitment(game, equilibria[k], tau, opts.cap, /*check_dominance=*/false);
            if (!chk.ok || !statuses[k].certified()) {
                r.passed = false;
                r.witness = "instance " + std::to_string(it) + ": efficient equilibrium " +
                            equilibria[k].to_string() +
                            (chk.ok ? "" : " failed commitment verification") +
                            (statuses[k].certified() ? "" : " was not certified") + "; " +
                            describe_game(game);
                r.instances = it + 1;
                return r;
            }
        }
        r.instances = it + 1;
    }
    return r;
}

suite_result deviation_suite(const suite_options& opts) {
    suite_result r;
    r.name = "deviation";
    if (opts.count == 0) {
        r.skipped = true;
        return r;
    }
    std::mt19937_64 rng(opts.seed);
    for (int it = 0; it < opts.count; ++it) {
        structure s = random_dims(rng, /*allow_large=*/false);
        aggregator rule = aggregator::majority(s);
        coalition_family winning = winning_coalitions(rule, opts.cap);
        coalition c = random_member(rng, winning);

        ballot seed = random_ballot(rng, s.issues);
        std::vector<goal> goals;
        for (int i = 0; i < s.voters; ++i) {
            formula f = c.contains(i) ? random_cube_consistent_with(rng, seed)
                                      : random_cube_formula(rng, s.issues);
            goals.push_back(goal::of(std::move(f), s.issues));
        }
        aggregation_game game(s, rule, goals,
                              payoff_table::uniform(random_uniform_values(rng, s)));
        endogenous_game endo(game, opts.cap);

        std::vector<profile> equilibria = enumerate_nash(game, opts.cap);
        std::vector<survival_status> statuses = check_surviving_all(endo, equilibria, opts.cap);

        for (std::size_t k = 0; k < equilibria.size(); ++k) {
            ballot out = game.outcome(equilibria[k]);

            // Does some goal-consistent winning coalition go unsatisfied?
            bool refutable = false;
            for (std::uint32_t mask : winning.masks()) {
                coalition cand(mask, s.voters);
                std::vector<goal_cube> cubes;
                for (int i : cand.members()) cubes.push_back(*game.goals[i].cube_form);
                if (!cubes_consistent(cubes, s.issues)) continue;
                for (int i : cand.members())
                    if (!game.goal_satisfied(i, out)) refutable = true;
            }
            if (!refutable) continue;

            const survival_status& st = statuses[k];
            bool locked = false;
            if (st.refuted()) {
                // Independent lock check of the financing witness.
                aggregation_game transferred = apply_transfers(game, st.witness);
                auto surviving = iesds(transferred, opts.cap);
                locked = true;
                for (int j : st.via->members()) {
                    if (j == st.deviator) continue;
                    if (surviving[j].size() != 1 || surviving[j].front() != *st.target)
                        locked = false;
                }
            }
            if (!st.refuted() || !locked) {
                r.passed = false;
                r.witness = "instance " + std::to_string(it) + ": equilibrium " +
                            equilibria[k].to_string() +
                            (st.refuted() ? " witness fails the lock check"
                                          : " was not refuted (" + st.reason + ")") +
                            "; " + describe_game(game);
                r.instances = it + 1;
                return r;
            }
        }
        r.instances = it + 1;
    }
    return r;
}

}  // namespace bvg
