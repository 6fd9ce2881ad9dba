#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bvg/core.hpp"

namespace bvg {

// A set of coalitions over a fixed voter count, kept as sorted unique
// masks. Used both for explicit aggregation rules and for the families
// returned by the winning-coalition machinery.
class coalition_family {
public:
    coalition_family() = default;
    coalition_family(std::vector<std::uint32_t> masks, int voters);
    static coalition_family of(std::initializer_list<coalition> cs, int voters);

    int voters() const { return voters_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    bool contains(std::uint32_t mask) const;
    bool contains(const coalition& c) const { return contains(c.mask()); }
    const std::vector<std::uint32_t>& masks() const { return masks_; }

    std::vector<coalition> coalitions() const;
    std::string to_string() const;

    bool operator==(const coalition_family&) const = default;

private:
    std::vector<std::uint32_t> masks_;
    int voters_ = 0;
};

struct monotonicity_result {
    bool monotonic = true;
    // On failure: c is in the family, superset is not.
    std::optional<coalition> witness_member;
    std::optional<coalition> witness_superset;
};

// Closed-under-supersets check; the witness is the lexicographically
// smallest violating (member, member+one voter) pair.
monotonicity_result is_monotonic(const coalition_family& family);

struct systematicity_witness {
    profile profile_a;
    int issue_a = 0;
    profile profile_b;
    int issue_b = 0;
};

struct systematicity_result {
    bool systematic = false;
    coalition_family family;  // acceptance family, when systematic
    std::optional<systematicity_witness> witness;
    // Acceptance family of each issue taken alone, when derivable (quota
    // rules and rules that are issue-wise systematic).
    std::vector<coalition_family> per_issue;
};

class not_systematic : public std::runtime_error {
public:
    explicit not_systematic(systematicity_witness w);
    const systematicity_witness& witness() const { return witness_; }

private:
    systematicity_witness witness_;
};

// An aggregation rule: maps every profile to a collective ballot.
//
//   majority        issue-wise strict majority (odd voter count)
//   quota           per-issue acceptance thresholds in [1, n]
//   explicit_family accept an issue iff its acceptor set is in the family
//                   (the family must pass the monotonicity check)
//   general_table   an arbitrary total map, for exercising the axiom
//                   checkers; negotiation analyses reject it
class aggregator {
public:
    enum class rule { majority, quota, explicit_family, general_table };

    static aggregator majority(const structure& s);
    static aggregator quota(const structure& s, std::vector<int> thresholds);
    static aggregator explicit_family(const structure& s, coalition_family family);
    static aggregator general_table(const structure& s, std::map<std::uint64_t, ballot> table);

    rule kind() const { return kind_; }
    const structure& dims() const { return dims_; }
    const std::vector<int>& thresholds() const { return thresholds_; }
    const coalition_family& family() const { return family_; }

    // Uniform threshold of a quota rule, if all issues share one.
    std::optional<int> uniform_threshold() const;

    ballot apply(const profile& p) const;

    bool operator==(const aggregator&) const = default;

private:
    aggregator() = default;

    rule kind_ = rule::majority;
    structure dims_;
    std::vector<int> thresholds_;
    coalition_family family_;
    std::map<std::uint64_t, ballot> table_;
};

inline ballot aggregate(const aggregator& agg, const profile& p) { return agg.apply(p); }

// Single-family systematicity in the literal sense: one family decides
// every issue. Quota rules with unequal thresholds fail it (the witness is
// found by enumeration) but still report their per-issue families.
systematicity_result is_systematic(const aggregator& agg,
                                   std::uint64_t cap = default_enumeration_cap);

// Two-sided winning coalitions: C forces the outcome of an issue whenever
// exactly the members of C take one side. Throws not_systematic for rules
// without a single acceptance family.
coalition_family winning_coalitions(const aggregator& agg,
                                    std::uint64_t cap = default_enumeration_cap);

// Winning coalitions that stay winning after removing any single member.
coalition_family resilient_winning_coalitions(const aggregator& agg,
                                              std::uint64_t cap = default_enumeration_cap);

// True for rules that are systematic with a monotonic family; the form the
// negotiation results require.
bool is_systematic_and_monotonic(const aggregator& agg,
                                 std::uint64_t cap = default_enumeration_cap);

}  // namespace bvg
