#include "bvg/core.hpp"

#include <map>

#include "bvg/aggregator.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bvg;

namespace {

const structure s33(3, 3);

// The parliament profile: (1,0,1), (1,1,0), (0,0,0).
profile parliament_profile() { return profile::parse("101 110 000", s33); }

}  // namespace

TEST_CASE("ballot and profile bit layout") {
    ballot b = ballot::from_bits({1, 0, 1});
    CHECK(b.bit(0));
    CHECK_FALSE(b.bit(1));
    CHECK(b.bit(2));
    CHECK(b.to_string() == "101");
    CHECK(ballot::parse("1 0 1", 3) == b);

    profile p = parliament_profile();
    CHECK(p.ballot_of(0) == ballot::from_bits({1, 0, 1}));
    CHECK(p.ballot_of(1) == ballot::from_bits({1, 1, 0}));
    CHECK(p.ballot_of(2) == ballot::from_bits({0, 0, 0}));
    CHECK(p.to_flat_string() == "101110000");
    CHECK(p.with_ballot(2, ballot::from_bits({1, 1, 1})).to_flat_string() == "101110111");

    CHECK_THROWS_AS(profile::parse("10111000", s33), std::invalid_argument);
    CHECK_THROWS_AS(ballot::parse("10x", 3), std::invalid_argument);
    CHECK_THROWS_AS(structure(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(structure(1, 2), std::invalid_argument);
}

TEST_CASE("acceptor sets") {
    profile p = parliament_profile();
    CHECK(acceptor_set(p, 0) == coalition::of({1, 2}, 3));  // issue W
    CHECK(acceptor_set(p, 2) == coalition::of({1}, 3));     // issue P
    profile zeros(0, s33);
    for (int j = 0; j < 3; ++j) CHECK(acceptor_set(zeros, j).empty_set());
    CHECK_THROWS_AS(acceptor_set(p, 3), std::invalid_argument);
}

TEST_CASE("majority aggregation of the parliament profile") {
    aggregator maj = aggregator::majority(s33);
    CHECK(maj.apply(parliament_profile()) == ballot::from_bits({1, 0, 0}));
    // Oracle agreement on the whole space.
    for (std::uint64_t code = 0; code < s33.profile_space(); ++code) {
        profile p(code, s33);
        CHECK(maj.apply(p) == oracle::naive_majority(p));
    }
}

TEST_CASE("unanimity under winning-coalition rules") {
    structure s(3, 2);
    std::vector<aggregator> rules;
    rules.push_back(aggregator::majority(s));
    rules.push_back(aggregator::quota(s, {2, 2}));
    rules.push_back(aggregator::explicit_family(
        s, coalition_family::of({coalition::of({1, 2}, 3), coalition::of({1, 3}, 3),
                                 coalition::of({2, 3}, 3), coalition::full(3)},
                                3)));
    for (const aggregator& rule : rules)
        for (std::uint32_t bits = 0; bits < s.ballot_space(); ++bits) {
            ballot b(bits, s.issues);
            CHECK(rule.apply(profile::unanimous(b, s)) == b);
        }
}

TEST_CASE("unanimous quota rule rejects below threshold") {
    // Acceptance counts of the parliament profile are 2, 1, 1; quota 3
    // rejects everything.
    aggregator q = aggregator::quota(s33, {3, 3, 3});
    profile p = parliament_profile();
    int counts[3];
    for (int j = 0; j < 3; ++j) counts[j] = acceptor_set(p, j).size();
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 1);
    CHECK(q.apply(p) == ballot::zeros(3));
}

TEST_CASE("aggregate rejects dimension mismatches") {
    aggregator maj = aggregator::majority(s33);
    profile small(0, structure(3, 2));
    CHECK_THROWS_AS(maj.apply(small), std::invalid_argument);
}

TEST_CASE("winning coalitions of majority match the defining property") {
    for (int n : {3, 5}) {
        structure s(n, 1);
        aggregator maj = aggregator::majority(s);
        coalition_family winning = winning_coalitions(maj);
        auto rule = [&](const profile& p) { return maj.apply(p); };
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
            coalition c(mask, n);
            bool expected = oracle::naive_is_winning(rule, s, c);
            CHECK(winning.contains(mask) == expected);
            CHECK(expected == (c.size() >= (n + 1) / 2));
        }
    }
}

TEST_CASE("explicit families are returned as-is when proper") {
    structure s(3, 1);
    coalition_family fam = coalition_family::of(
        {coalition::of({1, 2}, 3), coalition::of({1, 3}, 3), coalition::of({2, 3}, 3),
         coalition::full(3)},
        3);
    aggregator rule = aggregator::explicit_family(s, fam);
    CHECK(winning_coalitions(rule) == fam);
}

TEST_CASE("resilient winning coalitions") {
    CHECK(resilient_winning_coalitions(aggregator::majority(structure(3, 1))) ==
          coalition_family::of({coalition::full(3)}, 3));

    coalition_family r5 = resilient_winning_coalitions(aggregator::majority(structure(5, 1)));
    for (std::uint32_t mask = 0; mask < 32; ++mask)
        CHECK(r5.contains(mask) == (__builtin_popcount(mask) >= 4));

    // Only the grand coalition wins: nothing is resilient.
    structure s(3, 1);
    aggregator only_n =
        aggregator::explicit_family(s, coalition_family::of({coalition::full(3)}, 3));
    CHECK(resilient_winning_coalitions(only_n).empty());

    // Containment and the one-removal property.
    aggregator maj5 = aggregator::majority(structure(5, 2));
    coalition_family winning = winning_coalitions(maj5);
    coalition_family resilient = resilient_winning_coalitions(maj5);
    for (std::uint32_t mask : resilient.masks()) {
        CHECK(winning.contains(mask));
        coalition c(mask, 5);
        for (int i : c.members()) CHECK(winning.contains(c.without(i).mask()));
    }
}

TEST_CASE("systematicity of standard rules") {
    aggregator maj = aggregator::majority(s33);
    systematicity_result r = is_systematic(maj);
    CHECK(r.systematic);
    CHECK(r.family.contains(coalition::of({1, 2}, 3)));
    CHECK_FALSE(r.family.contains(coalition::of({1}, 3)));
}

TEST_CASE("per-issue quotas break single-family systematicity") {
    structure s(3, 2);
    aggregator q = aggregator::quota(s, {1, 3});
    systematicity_result r = is_systematic(q);
    CHECK_FALSE(r.systematic);
    REQUIRE(r.witness.has_value());
    // The witness pairs carry equal acceptor sets with opposite outcomes.
    const auto& w = *r.witness;
    CHECK(acceptor_set(w.profile_a, w.issue_a) == acceptor_set(w.profile_b, w.issue_b));
    CHECK(q.apply(w.profile_a).bit(w.issue_a) != q.apply(w.profile_b).bit(w.issue_b));
    // Per-issue families are still reported: issue 1 needs one acceptor,
    // issue 2 needs all three.
    REQUIRE(r.per_issue.size() == 2);
    CHECK(r.per_issue[0].contains(coalition::of({2}, 3)));
    CHECK_FALSE(r.per_issue[1].contains(coalition::of({1, 2}, 3)));
    CHECK(r.per_issue[1].contains(coalition::full(3)));

    CHECK_THROWS_AS(winning_coalitions(q), not_systematic);
}

TEST_CASE("a table extensionally equal to majority is systematic") {
    structure s(3, 1);
    aggregator maj = aggregator::majority(s);
    std::map<std::uint64_t, ballot> table;
    for (std::uint64_t code = 0; code < s.profile_space(); ++code)
        table[code] = maj.apply(profile(code, s));
    aggregator tab = aggregator::general_table(s, std::move(table));
    systematicity_result r = is_systematic(tab);
    CHECK(r.systematic);
    CHECK(winning_coalitions(tab) == winning_coalitions(maj));
}

TEST_CASE("monotonicity checker") {
    CHECK(is_monotonic(coalition_family(std::vector<std::uint32_t>{}, 3)).monotonic);

    coalition_family majority_family = winning_coalitions(aggregator::majority(structure(3, 1)));
    CHECK(is_monotonic(majority_family).monotonic);

    monotonicity_result bad =
        is_monotonic(coalition_family::of({coalition::of({1, 2}, 3)}, 3));
    CHECK_FALSE(bad.monotonic);
    CHECK(*bad.witness_member == coalition::of({1, 2}, 3));
    CHECK(*bad.witness_superset == coalition::full(3));

    CHECK_THROWS_AS(
        aggregator::explicit_family(structure(3, 1),
                                    coalition_family::of({coalition::of({1, 2}, 3)}, 3)),
        std::invalid_argument);
}

TEST_CASE("ballot inversion") {
    CHECK(inverse_ballot(ballot::from_bits({1, 0, 0})) == ballot::from_bits({0, 1, 1}));
    CHECK(inverse_ballot(ballot::zeros(3)) == ballot::ones(3));
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        ballot b(bits, 3);
        CHECK(inverse_ballot(inverse_ballot(b)) == b);
    }
}

TEST_CASE("majority is decisive and neutral") {
    for (int n : {3, 5})
        for (int m : {1, 2}) {
            structure s(n, m);
            aggregator maj = aggregator::majority(s);
            for (std::uint64_t code = 0; code < s.profile_space(); ++code) {
                profile p(code, s);
                ballot out = maj.apply(p);
                CHECK(maj.apply(inverse_profile(p)) == inverse_ballot(out));
            }
        }
}

TEST_CASE("systematic rules rebuilt from their family agree everywhere") {
    structure s(3, 2);
    std::vector<aggregator> rules;
    rules.push_back(aggregator::majority(s));
    rules.push_back(aggregator::quota(s, {2, 2}));
    for (const aggregator& rule : rules) {
        systematicity_result r = is_systematic(rule);
        REQUIRE(r.systematic);
        aggregator rebuilt = aggregator::explicit_family(s, r.family);
        for (std::uint64_t code = 0; code < s.profile_space(); ++code) {
            profile p(code, s);
            CHECK(rebuilt.apply(p) == rule.apply(p));
        }
    }
}

TEST_CASE("enumeration caps are enforced") {
    structure big(5, 4);  // 2^20 profiles
    aggregator uneven = aggregator::quota(big, {1, 2, 1, 2});
    CHECK_THROWS_AS(is_systematic(uneven, 1000), cap_exceeded);
    try {
        check_cap(1 << 12, 100);
        FAIL("expected cap_exceeded");
    } catch (const cap_exceeded& e) {
        CHECK(e.required() == 4096);
        CHECK(e.cap() == 100);
    }
}
