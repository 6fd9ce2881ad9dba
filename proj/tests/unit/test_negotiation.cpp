#include "bvg/negotiation.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace bvg;

namespace {

const structure s31(3, 1);

// Three voters on one issue; the first two want it accepted.
aggregation_game two_want_one(int third_goal = 0) {
    std::vector<goal> goals{goal::of(formula::atom(0), 1), goal::of(formula::atom(0), 1),
                            goal::of(formula::top(), 1)};
    if (third_goal == 1) goals[2] = goal::of(formula::negation(formula::atom(0)), 1);
    return aggregation_game(s31, aggregator::majority(s31), goals,
                            payoff_table::constant({0, 0, 0}));
}

}  // namespace

TEST_CASE("transfer profiles validate their entries") {
    transfer_profile tau(s31);
    CHECK_THROWS_AS(tau.set(0, 0, 0, rational(1)), std::invalid_argument);   // self
    CHECK_THROWS_AS(tau.set(0, 0, 1, rational(-1)), std::invalid_argument);  // negative
    CHECK_THROWS_AS(tau.set(0, 99, 1, rational(1)), std::invalid_argument);  // bad profile
    tau.set(0, 3, 1, rational(5));
    CHECK(tau.at(0, 3, 1) == rational(5));
    tau.add(0, 3, 1, rational(1, 2));
    CHECK(tau.at(0, 3, 1) == rational(11, 2));
    tau.set(0, 3, 1, rational(0));  // zero entries vanish
    CHECK(tau.empty());
}

TEST_CASE("transfer serialization round-trips") {
    structure s(3, 2);
    transfer_profile tau(s);
    tau.set(0, profile::parse("01 10 11", s).code(), 2, rational(3, 2));
    tau.set(1, profile::parse("00 00 00", s).code(), 0, rational(2));
    std::string text = tau.serialize();
    CHECK(text == "1 011011 3 3/2\n2 000000 1 2/1\n");
    CHECK(transfer_profile::deserialize(text, s) == tau);
}

TEST_CASE("the void transfer changes nothing") {
    aggregation_game g = fixtures::pivotal_payoff();
    aggregation_game after = apply_transfers(g, transfer_profile(g.dims));
    for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
        profile p(code, g.dims);
        for (int i = 0; i < 3; ++i) CHECK(after.payoff(i, p) == g.payoff(i, p));
    }
}

TEST_CASE("a single pledge moves exactly that amount at that profile") {
    aggregation_game g = fixtures::own_issue();
    profile hat = profile::parse("100 010 001", g.dims);
    transfer_profile tau(g.dims);
    tau.set(0, hat.code(), 1, rational(5));
    aggregation_game after = apply_transfers(g, tau);

    CHECK(after.payoff(0, hat) == g.payoff(0, hat) - rational(5));
    CHECK(after.payoff(1, hat) == g.payoff(1, hat) + rational(5));
    CHECK(after.payoff(2, hat) == g.payoff(2, hat));
    for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
        if (code == hat.code()) continue;
        profile p(code, g.dims);
        for (int i = 0; i < 3; ++i) CHECK(after.payoff(i, p) == g.payoff(i, p));
    }
    CHECK(after.payoffs.table_kind() == payoff_table::kind::full);
}

TEST_CASE("transfers conserve the payoff total at every profile") {
    std::mt19937_64 rng(17);
    aggregation_game g = fixtures::pivotal_payoff();
    std::uniform_int_distribution<std::uint64_t> code(0, g.dims.profile_space() - 1);
    std::uniform_int_distribution<int> voter(0, 2);
    std::uniform_int_distribution<int> amount(0, 5);
    for (int round = 0; round < 10; ++round) {
        transfer_profile tau(g.dims);
        for (int k = 0; k < 25; ++k) {
            int payer = voter(rng), payee = voter(rng);
            if (payer == payee) continue;
            tau.add(payer, code(rng), payee, rational(amount(rng), 2));
        }
        aggregation_game after = apply_transfers(g, tau);
        for (std::uint64_t c = 0; c < g.dims.profile_space(); ++c) {
            profile p(c, g.dims);
            rational before_sum, after_sum;
            for (int i = 0; i < 3; ++i) {
                before_sum += g.payoff(i, p);
                after_sum += after.payoff(i, p);
            }
            CHECK(before_sum == after_sum);
        }
    }
}

TEST_CASE("payoff bound over outcomes") {
    CHECK(payoff_bound(fixtures::own_issue()) == rational(1));
    CHECK(payoff_bound(fixtures::pivotal_payoff()) == rational(2));

    structure s(3, 1);
    std::vector<goal> goals(3, goal::of(formula::top(), 1));
    std::vector<std::vector<rational>> values(3, std::vector<rational>(2));
    values[0][0] = rational(-2);
    values[0][1] = rational(3);
    aggregation_game g(s, aggregator::majority(s), goals, payoff_table::uniform(values));
    CHECK(payoff_bound(g) == rational(6));

    // Non-uniform games are rejected by name.
    std::vector<std::map<std::uint64_t, rational>> deltas(3);
    deltas[0][profile::parse("1 1 0", s).code()] = rational(1);
    aggregation_game bad(s, aggregator::majority(s), goals,
                         payoff_table::full(payoff_table::constant({0, 0, 0}), deltas));
    CHECK_THROWS_WITH_AS(payoff_bound(bad), "payoff_bound: game is not uniform",
                         std::invalid_argument);
}

TEST_CASE("redistribution removes the deadlock equilibrium") {
    aggregation_game g = fixtures::own_issue();
    coalition everyone = coalition::full(3);
    ballot target = ballot::ones(3);
    aggregation_game modified = redistribute_for_coalition(g, everyone, target);

    CHECK(is_nash(g, fixtures::own_issue_deadlock()).nash);
    CHECK_FALSE(is_nash(modified, fixtures::own_issue_deadlock()).nash);

    // Coalition sums are untouched profile by profile.
    for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
        profile p(code, g.dims);
        rational before, after;
        for (int i = 0; i < 3; ++i) {
            before += g.payoff(i, p);
            after += modified.payoff(i, p);
        }
        CHECK(before == after);
    }

    // No equilibrium of the modified game leaves every goal violated.
    for (const profile& ne : enumerate_nash(modified)) {
        ballot out = modified.outcome(ne);
        bool all_violated = true;
        for (int i = 0; i < 3; ++i)
            if (modified.goal_satisfied(i, out)) all_violated = false;
        CHECK_FALSE(all_violated);
    }
}

TEST_CASE("redistribution for a dictator coalition is the identity") {
    structure s(3, 1);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < 8; ++m)
        if (m & 1u) masks.push_back(m);  // every set containing voter 1
    aggregator dictator = aggregator::explicit_family(s, coalition_family(masks, 3));
    std::vector<goal> goals{goal::of(formula::atom(0), 1), goal::of(formula::top(), 1),
                            goal::of(formula::top(), 1)};
    aggregation_game g(s, dictator, goals, payoff_table::constant({0, 0, 0}));

    coalition solo = coalition::of({1}, 3);
    CHECK(winning_coalitions(dictator).contains(solo));
    aggregation_game modified = redistribute_for_coalition(g, solo, ballot::ones(1));
    for (std::uint64_t code = 0; code < s.profile_space(); ++code) {
        profile p(code, s);
        for (int i = 0; i < 3; ++i) CHECK(modified.payoff(i, p) == g.payoff(i, p));
    }
}

TEST_CASE("redistribution cannot reach a satisfied sponsor") {
    // Coalition {1,2}, sponsor 1 indifferent (top), member 2 wants p2.
    // After redistribution the profile where only the sponsor is off the
    // target ballot stays an equilibrium with voter 2's goal unmet: the
    // sponsor earns no bonus and has nothing to gain. The guarantee that
    // does hold is the absence of totally unsatisfied coalitions.
    structure s(3, 2);
    std::vector<goal> goals{goal::of(formula::top(), 2), goal::of(formula::atom(1), 2),
                            goal::of(formula::negation(formula::atom(1)), 2)};
    aggregation_game g(s, aggregator::majority(s), goals, payoff_table::constant({0, 0, 0}));
    coalition c = coalition::of({1, 2}, 3);
    ballot target = ballot::from_bits({0, 1});

    aggregation_game modified = redistribute_for_coalition(g, c, target);
    profile stuck = profile::parse("00 01 00", s);
    CHECK(is_nash(modified, stuck).nash);
    ballot out = modified.outcome(stuck);
    CHECK_FALSE(modified.goal_satisfied(1, out));  // not coalition-efficient

    for (const profile& ne : enumerate_nash(modified)) {
        ballot o = modified.outcome(ne);
        bool all_violated = true;
        for (int i : c.members())
            if (modified.goal_satisfied(i, o)) all_violated = false;
        CHECK_FALSE(all_violated);
    }
}

TEST_CASE("redistribution preconditions are reported by name") {
    aggregation_game g = fixtures::own_issue();
    CHECK_THROWS_WITH_AS(
        redistribute_for_coalition(g, coalition::of({1}, 3), ballot::ones(3)),
        "redistribute_for_coalition: coalition is not winning", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        redistribute_for_coalition(g, coalition::full(3), ballot::zeros(3)),
        "redistribute_for_coalition: ballot does not satisfy the goal of voter 1",
        std::invalid_argument);
}

TEST_CASE("commitment pledges fire only off the committed profile") {
    aggregation_game g = fixtures::own_issue();
    profile b = profile::unanimous(ballot::ones(3), g.dims);
    transfer_profile tau = commitment_transfer(g, b);

    for (const auto& [key, amount] : tau.entries()) {
        CHECK(std::get<1>(key) != b.code());
        CHECK(amount == rational(2));  // constant game: M = 1
        profile p(std::get<1>(key), g.dims);
        CHECK(p.ballot_of(std::get<0>(key)) != b.ballot_of(std::get<0>(key)));
    }

    // A lone deviation costs the deviator exactly 2M(n-1) = 4.
    aggregation_game after = apply_transfers(g, tau);
    profile dev = b.with_ballot(0, ballot::zeros(3));
    CHECK(after.payoff(0, dev) == g.payoff(0, dev) - rational(4));
    // ... and pays each bystander 2M.
    CHECK(after.payoff(1, dev) == g.payoff(1, dev) + rational(2));

    // Two simultaneous deviators each pay 2M to everyone and collect 2M
    // from the other deviator.
    profile dev2 = dev.with_ballot(1, ballot::zeros(3));
    CHECK(after.payoff(0, dev2) == g.payoff(0, dev2) - rational(4) + rational(2));
    CHECK(after.payoff(1, dev2) == g.payoff(1, dev2) - rational(4) + rational(2));
    CHECK(after.payoff(2, dev2) == g.payoff(2, dev2) + rational(4));
}

TEST_CASE("commitment verification certifies efficient equilibria") {
    aggregation_game g = fixtures::parliament();
    profile b = profile::unanimous(ballot::from_bits({1, 1, 0}), g.dims);
    REQUIRE(is_nash(g, b).nash);

    transfer_profile tau = commitment_transfer(g, b);
    commitment_check chk = verify_commitment(g, b, tau);
    CHECK(chk.ok);
    CHECK(chk.structure_ok);
    CHECK(chk.nash_in_base);
    CHECK(chk.nash_in_transferred);
    CHECK(chk.efficient);
    // Every committed ballot is truthful here, so the dominance claims
    // hold as well.
    CHECK(chk.all_committed_ballots_dominant);
    CHECK(chk.unique_dominant_profile);
}

TEST_CASE("commitment makes any profile dominant when goals are trivial") {
    // Outcome-dependent payoffs give everyone a reason to deviate from b,
    // yet the 2M penalty dwarfs the gain; with trivial goals the committed
    // ballots become dominant even though b is no base equilibrium.
    structure s(3, 1);
    std::vector<goal> goals(3, goal::of(formula::top(), 1));
    std::vector<std::vector<rational>> values(3, std::vector<rational>(2));
    for (int i = 0; i < 3; ++i) values[i][1] = rational(1);  // outcome 1 pays everyone
    aggregation_game g(s, aggregator::majority(s), goals, payoff_table::uniform(values));

    profile b = profile::parse("1 0 0", s);
    CHECK_FALSE(is_nash(g, b).nash);  // voter 2 flips the outcome to 1

    transfer_profile tau = commitment_transfer(g, b);
    commitment_check chk = verify_commitment(g, b, tau);
    CHECK_FALSE(chk.nash_in_base);
    CHECK(chk.nash_in_transferred);
    CHECK(chk.all_committed_ballots_dominant);
    CHECK(chk.ok);
}

TEST_CASE("the void transfer fails commitment verification with a witness") {
    structure s(3, 1);
    std::vector<goal> goals(3, goal::of(formula::top(), 1));
    std::vector<std::vector<rational>> values(3, std::vector<rational>(2));
    for (int i = 0; i < 3; ++i) values[i][1] = rational(1);
    aggregation_game g(s, aggregator::majority(s), goals, payoff_table::uniform(values));
    profile b = profile::parse("1 0 0", s);

    commitment_check chk = verify_commitment(g, b, transfer_profile(s));
    CHECK_FALSE(chk.ok);
    CHECK_FALSE(chk.structure_ok);
    CHECK_FALSE(chk.nash_in_transferred);
    REQUIRE(chk.counter.has_value());
    CHECK(chk.counter->voter == 1);
    CHECK(chk.counter->to == ballot::from_bits({1}));
}

TEST_CASE("commitment sustains efficient equilibria with untruthful ballots") {
    // All three voters want the issue accepted; the equilibrium where the
    // third votes against it is still efficient. The third's committed
    // ballot is not weakly dominant in the transferred game (a goal flip
    // beats any penalty), yet the commitment still sustains the profile:
    // the dominance claim is reported, not required.
    structure s(3, 1);
    std::vector<goal> goals(3, goal::of(formula::atom(0), 1));
    aggregation_game g(s, aggregator::majority(s), goals, payoff_table::constant({0, 0, 0}));

    profile b = profile::parse("1 1 0", s);
    REQUIRE(is_nash(g, b).nash);

    transfer_profile tau = commitment_transfer(g, b);
    commitment_check chk = verify_commitment(g, b, tau);
    CHECK(chk.ok);
    CHECK(chk.nash_in_transferred);
    CHECK(chk.efficient);
    CHECK(chk.dominance_checked);
    CHECK_FALSE(chk.all_committed_ballots_dominant);
    REQUIRE(chk.non_dominant_voters.size() == 1);
    CHECK(chk.non_dominant_voters.front() == 2);

    endogenous_game endo(g);
    CHECK(check_surviving(endo, b).certified());
}

TEST_CASE("financing deviations lock the coalition to the target") {
    aggregation_game g = fixtures::own_issue();
    profile deadlock = fixtures::own_issue_deadlock();
    REQUIRE(is_nash(g, deadlock).nash);

    ballot target = ballot::ones(3);
    transfer_profile tau = deviation_transfer(g, 0, target, transfer_profile(g.dims));
    aggregation_game after = apply_transfers(g, tau);

    // Everyone other than the financier is uniquely locked to the target.
    std::vector<std::vector<ballot>> surviving = iesds(after);
    for (int j = 1; j < 3; ++j) {
        REQUIRE(surviving[j].size() == 1);
        CHECK(surviving[j].front() == target);
    }

    // Every equilibrium of the financed game satisfies the financier.
    std::vector<profile> equilibria = enumerate_nash(after);
    REQUIRE_FALSE(equilibria.empty());
    for (const profile& q : equilibria)
        CHECK(after.goal_satisfied(0, after.outcome(q)));
}

TEST_CASE("deviation bonuses in a constant game are the unit margin") {
    aggregation_game g = two_want_one();
    ballot target = ballot::ones(1);
    transfer_profile tau = deviation_transfer(g, 0, target, transfer_profile(g.dims));
    // Payoff differences are all zero, so the bonus is exactly 1 = M, paid
    // to each other voter whenever their own ballot is the target.
    for (int j = 1; j < 3; ++j)
        for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
            profile p(code, g.dims);
            rational expected = p.ballot_of(j) == target ? rational(1) : rational(0);
            CHECK(tau.at(0, code, j) == expected);
        }
}

TEST_CASE("deviation bonuses ignore the financier's own ballot") {
    aggregation_game g = fixtures::own_issue();
    transfer_profile tau = deviation_transfer(g, 0, ballot::ones(3), transfer_profile(g.dims));
    for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
        profile p(code, g.dims);
        for (std::uint32_t bits = 0; bits < 8; ++bits) {
            profile q = p.with_ballot(0, ballot(bits, 3));
            for (int j = 1; j < 3; ++j) CHECK(tau.at(0, p.code(), j) == tau.at(0, q.code(), j));
        }
    }
}

TEST_CASE("deviation bonuses clear ambient transfer flows") {
    // Voter 2 already receives a standing payment for voting 0; the
    // financier's bonus must exceed it so the lock still forms.
    aggregation_game g = two_want_one();
    transfer_profile standing(g.dims);
    for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
        profile p(code, g.dims);
        if (p.ballot_of(1) == ballot::zeros(1)) standing.set(2, code, 1, rational(3));
    }
    ballot target = ballot::ones(1);
    transfer_profile tau = deviation_transfer(g, 0, target, standing);
    aggregation_game after = apply_transfers(g, tau);
    std::vector<std::vector<ballot>> surviving = iesds(after);
    REQUIRE(surviving[1].size() == 1);
    CHECK(surviving[1].front() == target);
}

TEST_CASE("survival: the parliament deadlock is refuted by party B") {
    aggregation_game g = fixtures::parliament();
    endogenous_game endo(g);
    profile table = fixtures::parliament_profile();
    REQUIRE(is_nash(g, table).nash);

    survival_status st = check_surviving(endo, table);
    CHECK(st.refuted());
    CHECK(st.deviator == 1);  // party B
    CHECK(*st.target == ballot::from_bits({1, 1, 0}));
    CHECK(*st.via == coalition::of({1, 2}, 3));
}

TEST_CASE("survival: an outcome meeting every goal is certified") {
    aggregation_game g = fixtures::parliament();
    endogenous_game endo(g);
    profile agree = profile::unanimous(ballot::from_bits({1, 1, 0}), g.dims);
    survival_status st = check_surviving(endo, agree);
    CHECK(st.certified());
    CHECK(st.certificate.ok);
    CHECK_FALSE(st.witness.empty());
}

TEST_CASE("survival: full indifference certifies everything") {
    aggregation_game g = fixtures::indifferent(3, 1);
    endogenous_game endo(g);
    for (const profile& ne : enumerate_nash(g))
        CHECK(check_surviving(endo, ne).certified());
}

TEST_CASE("survival: opposed coalitions leave nothing surviving (spot checks)") {
    aggregation_game g = fixtures::opposed_coalitions();
    endogenous_game endo(g);

    profile zeros(0, g.dims);
    REQUIRE(is_nash(g, zeros).nash);
    survival_status st = check_surviving(endo, zeros);
    CHECK(st.refuted());
    CHECK(st.deviator == 0);
    CHECK(*st.target == ballot::from_bits({1, 0}));

    profile pro_r = profile::unanimous(ballot::from_bits({0, 1}), g.dims);
    REQUIRE(is_nash(g, pro_r).nash);
    survival_status st2 = check_surviving(endo, pro_r);
    CHECK(st2.refuted());
    CHECK(st2.deviator == 0);  // voter 1's goal is the one unmet
}

TEST_CASE("survival: statuses are mutually exclusive and grounded") {
    for (const aggregation_game& g :
         {fixtures::parliament(), fixtures::own_issue(), two_want_one(1)}) {
        endogenous_game endo(g);
        std::vector<profile> equilibria = enumerate_nash(g);
        std::vector<survival_status> statuses = check_surviving_all(endo, equilibria);
        coalition_family winning = winning_coalitions(g.rule);
        for (std::size_t k = 0; k < equilibria.size(); ++k) {
            ballot out = g.outcome(equilibria[k]);
            bool efficient = true;
            for (int i = 0; i < g.dims.voters; ++i)
                if (!g.goal_satisfied(i, out)) efficient = false;
            if (statuses[k].certified()) CHECK(efficient);
            if (statuses[k].refuted()) {
                CHECK_FALSE(efficient);
                const coalition& via = *statuses[k].via;
                CHECK(winning.contains(via));
                std::vector<goal_cube> cubes;
                for (int i : via.members()) cubes.push_back(*g.goals[i].cube_form);
                CHECK(cubes_consistent(cubes, g.dims.issues).has_value());
                CHECK_FALSE(g.goal_satisfied(statuses[k].deviator, out));
            }
        }
    }
}

TEST_CASE("survival preconditions are reported by name") {
    aggregation_game g = fixtures::parliament();
    endogenous_game endo(g);
    profile not_ne = profile::parse("000 110 000", g.dims);
    REQUIRE_FALSE(is_nash(g, not_ne).nash);
    CHECK_THROWS_AS(check_surviving(endo, not_ne), std::invalid_argument);

    // Non-cube goals are refused.
    structure s(3, 2);
    std::vector<goal> goals{goal::of(formula::disjunction(formula::atom(0), formula::atom(1)), 2),
                            goal::of(formula::top(), 2), goal::of(formula::top(), 2)};
    aggregation_game general(s, aggregator::majority(s), goals,
                             payoff_table::constant({0, 0, 0}));
    endogenous_game endo2(general);
    CHECK_THROWS_WITH_AS(check_surviving(endo2, profile(0, s)),
                         "check_surviving: every goal must be a cube", std::invalid_argument);
}

TEST_CASE("oracle: a zero-only grid plays the base game's first equilibrium") {
    aggregation_game g = fixtures::indifferent(3, 1);
    endogenous_game endo(g);
    grid_spec grid;  // no amounts: only the zero pledge exists
    oracle_result res = grid_spe_oracle(endo, grid);
    CHECK(res.transfer_profiles == 1);
    REQUIRE(res.on_path.size() == 1);
    CHECK(res.on_path.front().tau.empty());
    CHECK(res.on_path.front().played == profile(0, g.dims));
}

TEST_CASE("oracle: stable paths agree with the survival statuses") {
    aggregation_game g = two_want_one();
    endogenous_game endo(g);
    std::vector<profile> equilibria = enumerate_nash(g);
    std::vector<survival_status> statuses = check_surviving_all(endo, equilibria);

    oracle_result res = grid_spe_oracle(endo, grid_spec::defaults(g));
    REQUIRE_FALSE(res.on_path.empty());
    for (const oracle_outcome& oc : res.on_path)
        for (std::size_t k = 0; k < equilibria.size(); ++k)
            if (equilibria[k] == oc.played) CHECK_FALSE(statuses[k].refuted());
    for (std::size_t k = 0; k < equilibria.size(); ++k) {
        if (!statuses[k].certified()) continue;
        bool reachable = false;
        for (const oracle_outcome& oc : res.on_path)
            if (oc.played == equilibria[k]) reachable = true;
        CHECK(reachable);
    }
}

TEST_CASE("oracle: opposed coalitions have no stable negotiation") {
    aggregation_game g = fixtures::opposed_coalitions();
    endogenous_game endo(g);

    grid_spec grid = grid_spec::defaults(g);
    grid.active_players = {0, 4};
    grid.commitment_targets = {ballot::from_bits({1, 0}), ballot::from_bits({0, 1})};
    grid.reward_targets = grid.commitment_targets;

    oracle_result res = grid_spe_oracle(endo, grid);
    // The two contenders keep outbidding each other within the grid: no
    // first-stage profile is stable, mirroring the unrestricted analysis
    // where no equilibrium survives.
    CHECK(res.on_path.empty());
}

TEST_CASE("paradox analysis of the parliament game") {
    aggregation_game g = fixtures::parliament();
    paradox_report report = paradox_analysis(g, fixtures::parliament_constraint());

    bool saw_table_profile = false;
    for (const paradox_row& row : report.rows) {
        if (row.equilibrium == fixtures::parliament_profile()) {
            saw_table_profile = true;
            CHECK(row.outcome == ballot::from_bits({1, 0, 0}));
            CHECK_FALSE(row.outcome_admissible);
            CHECK(row.admissible_voters == coalition::full(3));  // all ballots admissible
            CHECK(row.status.refuted());
        }
        if (row.status.certified()) CHECK(row.outcome_admissible);
    }
    CHECK(saw_table_profile);
    CHECK(report.responsible == coalition::of({2}, 3));  // party B's goal F entails the constraint
    CHECK(report.survivors_guaranteed_admissible);
}

TEST_CASE("a trivial constraint admits everything") {
    aggregation_game g = fixtures::parliament();
    paradox_report report = paradox_analysis(g, formula::top());
    for (const paradox_row& row : report.rows) {
        CHECK(row.outcome_admissible);
        CHECK(row.admissible_voters == coalition::full(3));
    }
    CHECK(report.responsible == coalition::full(3));
}
