#include "bvg/negotiation.hpp"

#include <algorithm>
#include <sstream>

namespace bvg {

void transfer_profile::set(int payer, std::uint64_t profile_code, int payee,
                           const rational& amount) {
    if (payer == payee)
        throw std::invalid_argument("transfer_profile: self-transfers are rejected");
    if (payer < 0 || payer >= dims_.voters || payee < 0 || payee >= dims_.voters)
        throw std::invalid_argument("transfer_profile: voter out of range");
    if (profile_code >= dims_.profile_space())
        throw std::invalid_argument("transfer_profile: profile code out of range");
    if (amount.is_negative())
        throw std::invalid_argument("transfer_profile: amounts must be nonnegative");
    auto key = std::make_tuple(payer, profile_code, payee);
    if (amount.is_zero())
        entries_.erase(key);
    else
        entries_[key] = amount;
}

void transfer_profile::add(int payer, std::uint64_t profile_code, int payee,
                           const rational& amount) {
    set(payer, profile_code, payee, at(payer, profile_code, payee) + amount);
}

rational transfer_profile::at(int payer, std::uint64_t profile_code, int payee) const {
    auto it = entries_.find(std::make_tuple(payer, profile_code, payee));
    return it == entries_.end() ? rational(0) : it->second;
}

rational transfer_profile::net(int voter, std::uint64_t profile_code) const {
    rational total;
    for (const auto& [key, amount] : entries_) {
        const auto& [payer, code, payee] = key;
        if (code != profile_code) continue;
        if (payee == voter) total += amount;
        if (payer == voter) total -= amount;
    }
    return total;
}

std::string transfer_profile::serialize() const {
    std::ostringstream os;
    for (const auto& [key, amount] : entries_) {
        const auto& [payer, code, payee] = key;
        os << (payer + 1) << ' ' << profile(code, dims_).to_flat_string() << ' ' << (payee + 1)
           << ' ' << amount.to_fraction_string() << '\n';
    }
    return os.str();
}

transfer_profile transfer_profile::deserialize(const std::string& text, const structure& s) {
    transfer_profile tau(s);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int payer, payee;
        std::string bits, amount;
        if (!(ls >> payer >> bits >> payee >> amount))
            throw std::invalid_argument("transfer_profile: malformed record '" + line + "'");
        tau.set(payer - 1, profile::parse(bits, s).code(), payee - 1, rational::parse(amount));
    }
    return tau;
}

aggregation_game apply_transfers(const aggregation_game& game, const transfer_profile& tau) {
    if (tau.dims() != game.dims)
        throw std::invalid_argument("apply_transfers: transfer dimensions mismatch");
    std::vector<std::map<std::uint64_t, rational>> deltas(game.dims.voters);
    for (const auto& [key, amount] : tau.entries()) {
        const auto& [payer, code, payee] = key;
        deltas[payee][code] += amount;
        deltas[payer][code] -= amount;
    }
    return aggregation_game(game.dims, game.rule, game.goals,
                            payoff_table::full(game.payoffs, std::move(deltas)));
}

namespace {

// Per-voter payoff as a function of the collective outcome. Only valid for
// uniform games; full tables are sampled extensionally.
std::vector<std::vector<std::optional<rational>>> outcome_payoffs(const aggregation_game& game,
                                                                  std::uint64_t cap) {
    std::vector<std::vector<std::optional<rational>>> values(
        game.dims.voters, std::vector<std::optional<rational>>(game.dims.ballot_space()));
    switch (game.payoffs.table_kind()) {
        case payoff_table::kind::constant:
            for (int i = 0; i < game.dims.voters; ++i)
                for (std::uint32_t o = 0; o < game.dims.ballot_space(); ++o)
                    values[i][o] = game.payoffs.constant_values()[i];
            break;
        case payoff_table::kind::uniform:
            for (int i = 0; i < game.dims.voters; ++i)
                for (std::uint32_t o = 0; o < game.dims.ballot_space(); ++o)
                    values[i][o] = game.payoffs.uniform_values()[i][o];
            break;
        case payoff_table::kind::full: {
            check_cap(game.dims.profile_space(), cap);
            for (std::uint64_t code = 0; code < game.dims.profile_space(); ++code) {
                profile p(code, game.dims);
                ballot out = game.outcome(p);
                for (int i = 0; i < game.dims.voters; ++i) {
                    rational v = game.payoff(i, p, out);
                    auto& slot = values[i][out.bits()];
                    if (!slot) slot = v;
                }
            }
            break;
        }
    }
    return values;
}

}  // namespace

rational payoff_bound(const aggregation_game& game, std::uint64_t cap) {
    if (!is_uniform(game, cap))
        throw std::invalid_argument("payoff_bound: game is not uniform");
    auto values = outcome_payoffs(game, cap);
    rational max_gap(0);
    for (int i = 0; i < game.dims.voters; ++i) {
        std::optional<rational> lo, hi;
        for (const auto& v : values[i]) {
            if (!v) continue;
            if (!lo || *v < *lo) lo = *v;
            if (!hi || *v > *hi) hi = *v;
        }
        if (lo && hi) {
            rational gap = *hi - *lo;
            if (gap > max_gap) max_gap = gap;
        }
    }
    return max_gap + rational(1);
}

aggregation_game redistribute_for_coalition(const aggregation_game& game, const coalition& c,
                                            const ballot& b_star, std::uint64_t cap) {
    if (!is_uniform(game, cap))
        throw std::invalid_argument("redistribute_for_coalition: game is not uniform");
    if (!is_systematic_and_monotonic(game.rule, cap))
        throw std::invalid_argument(
            "redistribute_for_coalition: aggregator is not systematic and monotonic");
    if (!winning_coalitions(game.rule, cap).contains(c))
        throw std::invalid_argument("redistribute_for_coalition: coalition is not winning");
    for (int i : c.members())
        if (!game.goal_satisfied(i, b_star))
            throw std::invalid_argument(
                "redistribute_for_coalition: ballot does not satisfy the goal of voter " +
                std::to_string(i + 1));
    if (c.empty_set())
        throw std::invalid_argument("redistribute_for_coalition: coalition is empty");
    check_cap(game.dims.profile_space(), cap);

    rational m = payoff_bound(game, cap);
    int sponsor = c.members().front();
    std::vector<std::map<std::uint64_t, rational>> deltas(game.dims.voters);
    for (std::uint64_t code = 0; code < game.dims.profile_space(); ++code) {
        profile p(code, game.dims);
        rational balance;
        for (int j : c.members()) {
            if (j == sponsor) continue;
            if (p.ballot_of(j) == b_star) {
                deltas[j][code] += m;
                balance += m;
            }
        }
        if (!balance.is_zero()) deltas[sponsor][code] -= balance;
    }
    return aggregation_game(game.dims, game.rule, game.goals,
                            payoff_table::full(game.payoffs, std::move(deltas)));
}

transfer_profile commitment_transfer(const aggregation_game& game, const profile& b,
                                     std::uint64_t cap) {
    check_cap(game.dims.profile_space(), cap);
    rational two_m = payoff_bound(game, cap) * rational(2);
    transfer_profile tau(game.dims);
    for (std::uint64_t code = 0; code < game.dims.profile_space(); ++code) {
        profile p(code, game.dims);
        for (int i = 0; i < game.dims.voters; ++i) {
            if (p.ballot_of(i) == b.ballot_of(i)) continue;
            for (int j = 0; j < game.dims.voters; ++j)
                if (j != i) tau.set(i, code, j, two_m);
        }
    }
    return tau;
}

commitment_check verify_commitment(const aggregation_game& game, const profile& b,
                                   const transfer_profile& tau, std::uint64_t cap,
                                   bool check_dominance) {
    commitment_check chk;
    chk.structure_ok = (tau == commitment_transfer(game, b, cap));

    aggregation_game transferred = apply_transfers(game, tau);

    nash_result base_nash = is_nash(game, b);
    chk.nash_in_base = base_nash.nash;
    nash_result trans_nash = is_nash(transferred, b);
    chk.nash_in_transferred = trans_nash.nash;
    if (!trans_nash.nash)
        chk.counter = trans_nash.improvement;
    else if (!base_nash.nash)
        chk.counter = base_nash.improvement;

    ballot out = game.outcome(b);
    chk.efficient = true;
    for (int i = 0; i < game.dims.voters; ++i)
        if (!game.goal_satisfied(i, out)) chk.efficient = false;

    chk.outcome_ok = true;
    if (check_dominance) {
        chk.dominance_checked = true;
        chk.all_committed_ballots_dominant = true;
        for (int i = 0; i < game.dims.voters; ++i) {
            if (!is_weakly_dominant(transferred, i, b.ballot_of(i), cap).dominant) {
                chk.all_committed_ballots_dominant = false;
                chk.non_dominant_voters.push_back(i);
            }
        }
        std::optional<profile> dse = dominant_strategy_equilibrium(transferred, cap);
        if (dse) {
            chk.outcome_ok = (transferred.outcome(*dse) == out);
            chk.unique_dominant_profile =
                chk.all_committed_ballots_dominant && chk.outcome_ok;
        }
    }

    chk.ok = chk.structure_ok && chk.nash_in_transferred && chk.efficient && chk.outcome_ok;
    return chk;
}

transfer_profile deviation_transfer(const aggregation_game& game, int deviator,
                                    const ballot& b_prime, const transfer_profile& tau_star,
                                    std::uint64_t cap) {
    if (deviator < 0 || deviator >= game.dims.voters)
        throw std::invalid_argument("deviation_transfer: deviator out of range");
    if (tau_star.dims() != game.dims)
        throw std::invalid_argument("deviation_transfer: transfer dimensions mismatch");
    check_cap(game.dims.profile_space(), cap);

    transfer_profile tau = tau_star;
    for (int j = 0; j < game.dims.voters; ++j) {
        if (j == deviator) continue;
        // Worst swing of j's total payoff (base plus ambient flows) from
        // switching to b_prime, over every context.
        std::optional<rational> worst;
        for (std::uint64_t code = 0; code < game.dims.profile_space(); ++code) {
            profile stay(code, game.dims);
            if (stay.ballot_of(j) == b_prime) continue;
            profile sw = stay.with_ballot(j, b_prime);
            rational stay_total = game.payoff(j, stay) + tau_star.net(j, stay.code());
            rational switch_total = game.payoff(j, sw) + tau_star.net(j, sw.code());
            rational diff = stay_total - switch_total;
            if (!worst || diff > *worst) worst = diff;
        }
        if (!worst) continue;
        rational bonus = *worst + rational(1);
        if (bonus.is_negative() || bonus.is_zero()) continue;
        for (std::uint64_t code = 0; code < game.dims.profile_space(); ++code) {
            profile p(code, game.dims);
            if (p.ballot_of(j) == b_prime) tau.add(deviator, code, j, bonus);
        }
    }
    return tau;
}

namespace {

std::optional<ballot> coalition_goal_witness(const aggregation_game& game, const coalition& c) {
    std::vector<goal_cube> cubes;
    for (int i : c.members()) cubes.push_back(*game.goals[i].cube_form);
    return cubes_consistent(cubes, game.dims.issues);
}

struct deviation_verification {
    bool ok = false;
    transfer_profile tau;
    std::string failure;
};

// Verifies the financing deviation: after the transfer, every coalition
// member other than the deviator has the target ballot as their unique
// surviving strategy, the transferred game has at least one pure
// equilibrium, and every such equilibrium satisfies the deviator's goal.
deviation_verification verify_deviation(const aggregation_game& game, const coalition& c,
                                        int deviator, const ballot& b_prime, std::uint64_t cap) {
    deviation_verification v;
    v.tau = deviation_transfer(game, deviator, b_prime, transfer_profile(game.dims), cap);
    aggregation_game transferred = apply_transfers(game, v.tau);

    std::vector<std::vector<ballot>> surviving = iesds(transferred, cap);
    for (int j : c.members()) {
        if (j == deviator) continue;
        if (surviving[j].size() != 1 || surviving[j].front() != b_prime) {
            v.failure = "voter " + std::to_string(j + 1) +
                        " is not uniquely locked to the target ballot";
            return v;
        }
    }

    std::vector<profile> equilibria = enumerate_nash(transferred, cap);
    if (equilibria.empty()) {
        v.failure = "transferred game has no pure equilibrium";
        return v;
    }
    for (const profile& q : equilibria) {
        if (!transferred.goal_satisfied(deviator, transferred.outcome(q))) {
            v.failure = "an equilibrium of the transferred game misses the deviator's goal";
            return v;
        }
    }
    v.ok = true;
    return v;
}

struct survival_context {
    coalition_family winning;
    std::map<std::pair<std::uint32_t, int>, deviation_verification> verified;
};

void validate_for_survival(const aggregation_game& game, std::uint64_t cap) {
    if (!game.all_goals_cubes())
        throw std::invalid_argument("check_surviving: every goal must be a cube");
    if (!is_systematic_and_monotonic(game.rule, cap))
        throw std::invalid_argument(
            "check_surviving: aggregator is not systematic and monotonic");
}

survival_status check_one(const endogenous_game& endo, const profile& b, std::uint64_t cap,
                          survival_context& ctx) {
    const aggregation_game& game = endo.base;
    survival_status status;

    if (!is_nash(game, b).nash)
        throw std::invalid_argument(
            "check_surviving: profile is not a Nash equilibrium of the base game");

    ballot out = game.outcome(b);

    // Refutation route: a winning coalition with jointly satisfiable goals
    // that the outcome leaves unsatisfied finances a deviation.
    for (std::uint32_t mask : ctx.winning.masks()) {
        coalition c(mask, game.dims.voters);
        if (c.empty_set()) continue;
        std::optional<ballot> witness = coalition_goal_witness(game, c);
        if (!witness) continue;
        int deviator = -1;
        for (int i : c.members())
            if (!game.goal_satisfied(i, out)) {
                deviator = i;
                break;
            }
        if (deviator < 0) continue;  // coalition fully satisfied

        auto key = std::make_pair(mask, deviator);
        auto it = ctx.verified.find(key);
        if (it == ctx.verified.end())
            it = ctx.verified.emplace(key, verify_deviation(game, c, deviator, *witness, cap))
                     .first;
        if (it->second.ok) {
            status.st = survival_status::state::refuted;
            status.deviator = deviator;
            status.witness = it->second.tau;
            status.target = *witness;
            status.via = c;
            status.reason = "coalition " + c.to_string() +
                            " has jointly satisfiable goals the outcome misses; voter " +
                            std::to_string(deviator + 1) + " finances a deviation to " +
                            witness->to_string();
            return status;
        }
    }

    // Commitment route: an outcome satisfying every goal is sustained.
    bool efficient = true;
    for (int i = 0; i < game.dims.voters; ++i)
        if (!game.goal_satisfied(i, out)) efficient = false;
    if (efficient) {
        transfer_profile tau = commitment_transfer(game, b, cap);
        commitment_check chk = verify_commitment(game, b, tau, cap, /*check_dominance=*/false);
        if (chk.ok) {
            status.st = survival_status::state::certified;
            status.witness = tau;
            status.certificate = chk;
            status.reason = "outcome satisfies every goal; commitment transfers sustain it";
            return status;
        }
        status.reason = "commitment construction failed verification";
        return status;
    }

    status.reason =
        "no construction applies: the profile is efficient for every goal-consistent winning "
        "coalition but some voter's goal is unmet outside any such coalition";
    return status;
}

}  // namespace

survival_status check_surviving(const endogenous_game& endo, const profile& b,
                                std::uint64_t cap) {
    validate_for_survival(endo.base, cap);
    survival_context ctx{winning_coalitions(endo.base.rule, cap), {}};
    return check_one(endo, b, cap, ctx);
}

std::vector<survival_status> check_surviving_all(const endogenous_game& endo,
                                                 std::span<const profile> equilibria,
                                                 std::uint64_t cap) {
    validate_for_survival(endo.base, cap);
    survival_context ctx{winning_coalitions(endo.base.rule, cap), {}};
    std::vector<survival_status> out;
    out.reserve(equilibria.size());
    for (const profile& b : equilibria) out.push_back(check_one(endo, b, cap, ctx));
    return out;
}

// ---------------------------------------------------------------------------
// Restricted-grid oracle

namespace {

struct pattern {
    enum class kind { zero, commitment, reward };
    kind k = kind::zero;
    ballot target;
    rational amount;
};

// Net flow into `voter` at profile p under one pattern per player.
rational pattern_net(const std::vector<pattern>& chosen, int voter, const profile& p) {
    rational net;
    int n = p.voters();
    for (int k = 0; k < n; ++k) {
        const pattern& pat = chosen[k];
        switch (pat.k) {
            case pattern::kind::zero:
                break;
            case pattern::kind::commitment:
                if (p.ballot_of(k) != pat.target) {
                    if (k == voter)
                        net -= pat.amount * rational(n - 1);
                    else
                        net += pat.amount;
                }
                break;
            case pattern::kind::reward:
                if (k == voter) {
                    int takers = 0;
                    for (int j = 0; j < n; ++j)
                        if (j != k && p.ballot_of(j) == pat.target) ++takers;
                    net -= pat.amount * rational(takers);
                } else if (p.ballot_of(voter) == pat.target) {
                    net += pat.amount;
                }
                break;
        }
    }
    return net;
}

transfer_profile materialize(const std::vector<pattern>& chosen, const structure& s) {
    transfer_profile tau(s);
    for (int k = 0; k < s.voters; ++k) {
        const pattern& pat = chosen[k];
        if (pat.k == pattern::kind::zero) continue;
        for (std::uint64_t code = 0; code < s.profile_space(); ++code) {
            profile p(code, s);
            if (pat.k == pattern::kind::commitment) {
                if (p.ballot_of(k) != pat.target)
                    for (int j = 0; j < s.voters; ++j)
                        if (j != k) tau.add(k, code, j, pat.amount);
            } else {
                for (int j = 0; j < s.voters; ++j)
                    if (j != k && p.ballot_of(j) == pat.target) tau.add(k, code, j, pat.amount);
            }
        }
    }
    return tau;
}

}  // namespace

grid_spec grid_spec::defaults(const aggregation_game& game, std::uint64_t cap) {
    grid_spec g;
    rational m = payoff_bound(game, cap);
    g.amounts = {m, m * rational(2), m * rational(3)};
    for (std::uint32_t bits = 0; bits < game.dims.ballot_space(); ++bits) {
        g.commitment_targets.emplace_back(bits, game.dims.issues);
        g.reward_targets.emplace_back(bits, game.dims.issues);
    }
    return g;
}

oracle_result grid_spe_oracle(const endogenous_game& endo, const grid_spec& grid,
                              std::uint64_t cap) {
    const aggregation_game& game = endo.base;
    const structure& s = game.dims;
    check_cap(s.profile_space(), cap);
    for (const rational& a : grid.amounts)
        if (a.is_negative() || a.is_zero())
            throw std::invalid_argument("grid_spe_oracle: pattern amounts must be positive");

    // Per-player strategy menu: zero, then commitments, then rewards.
    // Players outside the support restriction keep only the zero pledge.
    std::vector<pattern> full_menu;
    full_menu.push_back(pattern{});
    for (const ballot& t : grid.commitment_targets)
        for (const rational& a : grid.amounts)
            full_menu.push_back(pattern{pattern::kind::commitment, t, a});
    for (const ballot& t : grid.reward_targets)
        for (const rational& a : grid.amounts)
            full_menu.push_back(pattern{pattern::kind::reward, t, a});

    std::vector<std::vector<pattern>> menus(s.voters, std::vector<pattern>{pattern{}});
    for (int i = 0; i < s.voters; ++i) {
        bool active = grid.active_players.empty() ||
                      std::find(grid.active_players.begin(), grid.active_players.end(), i) !=
                          grid.active_players.end();
        if (active) menus[i] = full_menu;
    }

    std::uint64_t total = 1;
    for (int i = 0; i < s.voters; ++i) {
        if (total > grid.max_transfer_profiles)
            throw cap_exceeded(total, grid.max_transfer_profiles);
        total *= menus[i].size();
    }
    if (total > grid.max_transfer_profiles)
        throw cap_exceeded(total, grid.max_transfer_profiles);

    std::uint64_t space = s.profile_space();
    std::vector<ballot> outcomes;
    outcomes.reserve(space);
    for (std::uint64_t code = 0; code < space; ++code)
        outcomes.push_back(game.outcome(profile(code, s)));
    std::vector<std::vector<char>> sat(s.voters, std::vector<char>(s.ballot_space()));
    for (int i = 0; i < s.voters; ++i)
        for (std::uint32_t o = 0; o < s.ballot_space(); ++o)
            sat[i][o] = game.goal_satisfied(i, ballot(o, s.issues)) ? 1 : 0;

    oracle_result result;
    result.transfer_profiles = total;

    auto choices_of = [&](std::uint64_t flat) {
        std::vector<pattern> chosen(s.voters);
        for (int i = s.voters - 1; i >= 0; --i) {
            chosen[i] = menus[i][flat % menus[i].size()];
            flat /= menus[i].size();
        }
        return chosen;
    };

    // Payoffs of the transferred game at one profile.
    auto total_payoff = [&](const std::vector<pattern>& chosen, int voter, const profile& p) {
        return game.payoff(voter, p, outcomes[p.code()]) + pattern_net(chosen, voter, p);
    };

    // Second stage: lexicographically smallest pure equilibrium, if any.
    auto select_equilibrium = [&](const std::vector<pattern>& chosen) -> std::optional<std::uint64_t> {
        for (std::uint64_t code = 0; code < space; ++code) {
            profile p(code, s);
            bool nash = true;
            for (int i = 0; i < s.voters && nash; ++i) {
                bool s0 = sat[i][outcomes[code].bits()];
                rational p0 = total_payoff(chosen, i, p);
                for (std::uint32_t bits = 0; bits < s.ballot_space() && nash; ++bits) {
                    ballot alt(bits, s.issues);
                    if (alt == p.ballot_of(i)) continue;
                    profile q = p.with_ballot(i, alt);
                    bool s1 = sat[i][outcomes[q.code()].bits()];
                    if (s1 != s0 ? s1 : total_payoff(chosen, i, q) > p0) nash = false;
                }
            }
            if (nash) return code;
        }
        return std::nullopt;
    };

    std::vector<std::optional<std::uint64_t>> selected(total);
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        selected[flat] = select_equilibrium(choices_of(flat));
        if (!selected[flat]) ++result.subgames_without_equilibrium;
    }

    // First stage: keep transfer profiles no player can improve on by a
    // unilateral switch within the menu.
    std::vector<std::uint64_t> radix(s.voters);
    {
        std::uint64_t r = 1;
        for (int i = s.voters - 1; i >= 0; --i) {
            radix[i] = r;
            r *= menus[i].size();
        }
    }
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        if (!selected[flat]) continue;
        std::vector<pattern> chosen = choices_of(flat);
        profile played(*selected[flat], s);
        bool stable = true;
        for (int i = 0; i < s.voters && stable; ++i) {
            std::uint64_t menu_size = menus[i].size();
            std::uint64_t own = (flat / radix[i]) % menu_size;
            bool sat_now = sat[i][outcomes[played.code()].bits()];
            rational pay_now = total_payoff(chosen, i, played);
            for (std::uint64_t alt = 0; alt < menu_size && stable; ++alt) {
                if (alt == own) continue;
                std::uint64_t flat2 = flat - own * radix[i] + alt * radix[i];
                if (!selected[flat2]) {
                    ++result.deviations_into_empty_subgames;
                    continue;
                }
                std::vector<pattern> chosen2 = chosen;
                chosen2[i] = menus[i][alt];
                profile played2(*selected[flat2], s);
                bool sat_then = sat[i][outcomes[played2.code()].bits()];
                bool better = sat_then != sat_now
                                  ? sat_then
                                  : total_payoff(chosen2, i, played2) > pay_now;
                if (better) stable = false;
            }
        }
        if (stable) result.on_path.push_back(oracle_outcome{materialize(chosen, s), played});
    }
    return result;
}

// ---------------------------------------------------------------------------
// Integrity constraints

paradox_report paradox_analysis(const aggregation_game& game, const formula& constraint,
                                std::uint64_t cap) {
    if (constraint.max_atom() >= game.dims.issues)
        throw std::invalid_argument("paradox_analysis: constraint atom exceeds issue count");
    paradox_report report;

    std::vector<profile> equilibria = enumerate_nash(game, cap);
    std::vector<survival_status> statuses;
    try {
        endogenous_game endo(game, cap);
        statuses = check_surviving_all(endo, equilibria, cap);
    } catch (const std::invalid_argument& e) {
        statuses.assign(equilibria.size(), survival_status{});
        for (auto& st : statuses) st.reason = e.what();
    }

    for (std::size_t k = 0; k < equilibria.size(); ++k) {
        paradox_row row;
        row.equilibrium = equilibria[k];
        row.outcome = game.outcome(equilibria[k]);
        row.outcome_admissible = satisfies(row.outcome, constraint);
        std::uint32_t mask = 0;
        for (int i = 0; i < game.dims.voters; ++i)
            if (satisfies(equilibria[k].ballot_of(i), constraint)) mask |= std::uint32_t(1) << i;
        row.admissible_voters = coalition(mask, game.dims.voters);
        row.status = statuses[k];
        report.rows.push_back(std::move(row));
    }

    std::uint32_t responsible = 0;
    for (int i = 0; i < game.dims.voters; ++i)
        if (entails(game.goals[i].f, constraint, game.dims.issues, cap))
            responsible |= std::uint32_t(1) << i;
    report.responsible = coalition(responsible, game.dims.voters);

    bool n_consistent = false;
    for (std::uint32_t bits = 0; bits < game.dims.ballot_space() && !n_consistent; ++bits) {
        ballot b(bits, game.dims.issues);
        bool all = true;
        for (int i = 0; i < game.dims.voters; ++i)
            if (!satisfies(b, game.goals[i].f)) all = false;
        if (all) n_consistent = true;
    }
    report.survivors_guaranteed_admissible = n_consistent && !report.responsible.empty_set();
    return report;
}

}  // namespace bvg
