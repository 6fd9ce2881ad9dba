#include "bvg/aggregator.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvg {

coalition_family::coalition_family(std::vector<std::uint32_t> masks, int voters)
    : masks_(std::move(masks)), voters_(voters) {
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
    for (std::uint32_t m : masks_)
        if (m >> voters) throw std::invalid_argument("coalition_family: member out of range");
}

coalition_family coalition_family::of(std::initializer_list<coalition> cs, int voters) {
    std::vector<std::uint32_t> masks;
    for (const coalition& c : cs) masks.push_back(c.mask());
    return coalition_family(std::move(masks), voters);
}

bool coalition_family::contains(std::uint32_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
}

std::vector<coalition> coalition_family::coalitions() const {
    std::vector<coalition> out;
    out.reserve(masks_.size());
    for (std::uint32_t m : masks_) out.emplace_back(m, voters_);
    return out;
}

std::string coalition_family::to_string() const {
    std::string s;
    for (std::uint32_t m : masks_) {
        if (!s.empty()) s += ' ';
        s += coalition(m, voters_).to_string();
    }
    return s.empty() ? "{}" : s;
}

monotonicity_result is_monotonic(const coalition_family& family) {
    monotonicity_result r;
    for (std::uint32_t m : family.masks()) {
        for (int i = 0; i < family.voters(); ++i) {
            std::uint32_t up = m | (std::uint32_t(1) << i);
            if (up != m && !family.contains(up)) {
                r.monotonic = false;
                r.witness_member = coalition(m, family.voters());
                r.witness_superset = coalition(up, family.voters());
                return r;
            }
        }
    }
    return r;
}

not_systematic::not_systematic(systematicity_witness w)
    : std::runtime_error("aggregator is not systematic: issue " +
                         std::to_string(w.issue_a + 1) + " of profile " +
                         w.profile_a.to_string() + " and issue " + std::to_string(w.issue_b + 1) +
                         " of profile " + w.profile_b.to_string() +
                         " have the same acceptor set but different outcomes"),
      witness_(std::move(w)) {}

aggregator aggregator::majority(const structure& s) {
    aggregator a;
    a.kind_ = rule::majority;
    a.dims_ = s;
    return a;
}

aggregator aggregator::quota(const structure& s, std::vector<int> thresholds) {
    if (static_cast<int>(thresholds.size()) != s.issues)
        throw std::invalid_argument("quota: expected one threshold per issue");
    for (int q : thresholds)
        if (q < 1 || q > s.voters)
            throw std::invalid_argument("quota: thresholds must lie in [1, n]");
    aggregator a;
    a.kind_ = rule::quota;
    a.dims_ = s;
    a.thresholds_ = std::move(thresholds);
    return a;
}

aggregator aggregator::explicit_family(const structure& s, coalition_family family) {
    if (family.voters() != s.voters)
        throw std::invalid_argument("explicit_family: voter count mismatch");
    monotonicity_result mono = is_monotonic(family);
    if (!mono.monotonic)
        throw std::invalid_argument(
            "explicit_family: family is not closed under supersets (" +
            mono.witness_member->to_string() + " is in, " + mono.witness_superset->to_string() +
            " is not)");
    aggregator a;
    a.kind_ = rule::explicit_family;
    a.dims_ = s;
    a.family_ = std::move(family);
    return a;
}

aggregator aggregator::general_table(const structure& s, std::map<std::uint64_t, ballot> table) {
    if (table.size() != s.profile_space())
        throw std::invalid_argument("general_table: table must cover every profile");
    aggregator a;
    a.kind_ = rule::general_table;
    a.dims_ = s;
    a.table_ = std::move(table);
    return a;
}

std::optional<int> aggregator::uniform_threshold() const {
    if (kind_ != rule::quota || thresholds_.empty()) return std::nullopt;
    for (int q : thresholds_)
        if (q != thresholds_[0]) return std::nullopt;
    return thresholds_[0];
}

ballot aggregator::apply(const profile& p) const {
    if (p.voters() != dims_.voters || p.issues() != dims_.issues)
        throw std::invalid_argument("aggregate: profile does not match aggregator dimensions");
    switch (kind_) {
        case rule::majority: {
            ballot out = ballot::zeros(dims_.issues);
            for (int j = 0; j < dims_.issues; ++j)
                if (acceptor_set(p, j).size() >= dims_.majority_threshold())
                    out = out.with_bit(j, true);
            return out;
        }
        case rule::quota: {
            ballot out = ballot::zeros(dims_.issues);
            for (int j = 0; j < dims_.issues; ++j)
                if (acceptor_set(p, j).size() >= thresholds_[j]) out = out.with_bit(j, true);
            return out;
        }
        case rule::explicit_family: {
            ballot out = ballot::zeros(dims_.issues);
            for (int j = 0; j < dims_.issues; ++j)
                if (family_.contains(acceptor_set(p, j).mask())) out = out.with_bit(j, true);
            return out;
        }
        case rule::general_table: {
            auto it = table_.find(p.code());
            if (it == table_.end())
                throw std::invalid_argument("aggregate: profile missing from table");
            return it->second;
        }
    }
    throw std::logic_error("aggregate: unknown rule");
}

namespace {

coalition_family size_threshold_family(const structure& s, int min_size) {
    std::vector<std::uint32_t> masks;
    std::uint32_t all = (std::uint32_t(1) << s.voters) - 1;
    for (std::uint32_t m = 0; m <= all; ++m)
        if (__builtin_popcount(m) >= min_size) masks.push_back(m);
    return coalition_family(std::move(masks), s.voters);
}

// Scans every (profile, issue) pair, recording the outcome each acceptor
// set produces. A clash yields the lexicographically smallest witness.
systematicity_result systematic_by_enumeration(const aggregator& agg, std::uint64_t cap) {
    const structure& s = agg.dims();
    check_cap(s.profile_space(), cap);

    systematicity_result r;
    struct seen_entry {
        bool outcome;
        std::uint64_t code;
        int issue;
    };
    std::vector<std::optional<seen_entry>> seen(std::uint64_t(1) << s.voters);
    std::vector<std::vector<std::optional<seen_entry>>> seen_issue(
        s.issues, std::vector<std::optional<seen_entry>>(std::uint64_t(1) << s.voters));

    bool issue_wise_ok = true;
    for (std::uint64_t code = 0; code < s.profile_space(); ++code) {
        profile p(code, s);
        ballot out = agg.apply(p);
        for (int j = 0; j < s.issues; ++j) {
            std::uint32_t acc = acceptor_set(p, j).mask();
            bool val = out.bit(j);
            if (!seen[acc]) {
                seen[acc] = seen_entry{val, code, j};
            } else if (seen[acc]->outcome != val && !r.witness) {
                r.witness = systematicity_witness{profile(seen[acc]->code, s), seen[acc]->issue,
                                                  p, j};
            }
            if (!seen_issue[j][acc]) {
                seen_issue[j][acc] = seen_entry{val, code, j};
            } else if (seen_issue[j][acc]->outcome != val) {
                issue_wise_ok = false;
            }
        }
    }

    r.systematic = !r.witness.has_value();
    if (r.systematic) {
        std::vector<std::uint32_t> masks;
        for (std::uint32_t acc = 0; acc < seen.size(); ++acc)
            if (seen[acc] && seen[acc]->outcome) masks.push_back(acc);
        r.family = coalition_family(std::move(masks), s.voters);
    }
    if (issue_wise_ok) {
        for (int j = 0; j < s.issues; ++j) {
            std::vector<std::uint32_t> masks;
            for (std::uint32_t acc = 0; acc < seen_issue[j].size(); ++acc)
                if (seen_issue[j][acc] && seen_issue[j][acc]->outcome) masks.push_back(acc);
            r.per_issue.emplace_back(std::move(masks), s.voters);
        }
    }
    return r;
}

}  // namespace

systematicity_result is_systematic(const aggregator& agg, std::uint64_t cap) {
    const structure& s = agg.dims();
    check_cap(std::uint64_t(1) << s.voters, cap);
    systematicity_result r;
    switch (agg.kind()) {
        case aggregator::rule::majority:
            r.systematic = true;
            r.family = size_threshold_family(s, s.majority_threshold());
            r.per_issue.assign(s.issues, r.family);
            return r;
        case aggregator::rule::quota: {
            if (auto q = agg.uniform_threshold()) {
                r.systematic = true;
                r.family = size_threshold_family(s, *q);
                r.per_issue.assign(s.issues, r.family);
                return r;
            }
            r = systematic_by_enumeration(agg, cap);
            return r;
        }
        case aggregator::rule::explicit_family:
            r.systematic = true;
            r.family = agg.family();
            r.per_issue.assign(s.issues, r.family);
            return r;
        case aggregator::rule::general_table:
            return systematic_by_enumeration(agg, cap);
    }
    throw std::logic_error("is_systematic: unknown rule");
}

coalition_family winning_coalitions(const aggregator& agg, std::uint64_t cap) {
    systematicity_result sys = is_systematic(agg, cap);
    if (!sys.systematic) throw not_systematic(*sys.witness);
    // C wins iff it forces acceptance (C in the family) and forces
    // rejection when exactly its complement accepts.
    std::vector<std::uint32_t> winning;
    std::uint32_t all = (std::uint32_t(1) << agg.dims().voters) - 1;
    for (std::uint32_t m : sys.family.masks())
        if (!sys.family.contains(~m & all)) winning.push_back(m);
    return coalition_family(std::move(winning), agg.dims().voters);
}

coalition_family resilient_winning_coalitions(const aggregator& agg, std::uint64_t cap) {
    coalition_family win = winning_coalitions(agg, cap);
    std::vector<std::uint32_t> resilient;
    for (std::uint32_t m : win.masks()) {
        bool ok = true;
        for (int i = 0; i < win.voters() && ok; ++i)
            if ((m >> i) & 1u)
                if (!win.contains(m & ~(std::uint32_t(1) << i))) ok = false;
        if (ok) resilient.push_back(m);
    }
    return coalition_family(std::move(resilient), win.voters());
}

bool is_systematic_and_monotonic(const aggregator& agg, std::uint64_t cap) {
    systematicity_result sys = is_systematic(agg, cap);
    if (!sys.systematic) return false;
    return is_monotonic(sys.family).monotonic;
}

}  // namespace bvg
