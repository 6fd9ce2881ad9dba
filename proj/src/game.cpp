#include "bvg/game.hpp"

#include <algorithm>

namespace bvg {

payoff_table payoff_table::constant(std::vector<rational> per_voter) {
    payoff_table t;
    t.kind_ = kind::constant;
    t.voters_ = static_cast<int>(per_voter.size());
    t.constant_ = std::move(per_voter);
    return t;
}

payoff_table payoff_table::uniform(std::vector<std::vector<rational>> values) {
    payoff_table t;
    t.kind_ = kind::uniform;
    t.voters_ = static_cast<int>(values.size());
    if (values.empty()) throw std::invalid_argument("payoff_table: no voters");
    std::size_t outcomes = values.front().size();
    for (const auto& row : values)
        if (row.size() != outcomes)
            throw std::invalid_argument("payoff_table: ragged uniform table");
    t.uniform_ = std::move(values);
    return t;
}

payoff_table payoff_table::full(payoff_table base,
                                std::vector<std::map<std::uint64_t, rational>> deltas) {
    if (static_cast<int>(deltas.size()) != base.voters())
        throw std::invalid_argument("payoff_table: delta row per voter required");
    payoff_table t;
    t.kind_ = kind::full;
    t.voters_ = base.voters();
    t.deltas_ = std::move(deltas);
    t.base_ = std::make_shared<const payoff_table>(std::move(base));
    return t;
}

rational payoff_table::value(int voter, std::uint64_t profile_code,
                             std::uint32_t outcome_bits) const {
    switch (kind_) {
        case kind::constant:
            return constant_.at(voter);
        case kind::uniform:
            return uniform_.at(voter).at(outcome_bits);
        case kind::full: {
            rational v = base_->value(voter, profile_code, outcome_bits);
            const auto& row = deltas_[voter];
            auto it = row.find(profile_code);
            if (it != row.end()) v += it->second;
            return v;
        }
    }
    throw std::logic_error("payoff_table: unknown kind");
}

aggregation_game::aggregation_game(structure s, aggregator agg, std::vector<goal> gs,
                                   payoff_table pt)
    : dims(s), rule(std::move(agg)), goals(std::move(gs)), payoffs(std::move(pt)) {
    if (rule.dims() != dims)
        throw std::invalid_argument("aggregation_game: aggregator dimensions mismatch");
    if (static_cast<int>(goals.size()) != dims.voters)
        throw std::invalid_argument("aggregation_game: one goal per voter required");
    for (const goal& g : goals)
        if (g.f.max_atom() >= dims.issues)
            throw std::invalid_argument("aggregation_game: goal atom exceeds issue count");
    if (payoffs.voters() != dims.voters)
        throw std::invalid_argument("aggregation_game: payoff table voter count mismatch");
    if (payoffs.table_kind() == payoff_table::kind::uniform &&
        payoffs.uniform_values().front().size() != dims.ballot_space())
        throw std::invalid_argument("aggregation_game: uniform table must cover all outcomes");
}

bool aggregation_game::goal_satisfied(int voter, const ballot& out) const {
    const goal& g = goals[voter];
    if (g.cube_form) return g.cube_form->matches(out);
    return satisfies(out, g.f);
}

rational aggregation_game::payoff(int voter, const profile& p) const {
    return payoffs.value(voter, p.code(), rule.apply(p).bits());
}

rational aggregation_game::payoff(int voter, const profile& p, const ballot& out) const {
    return payoffs.value(voter, p.code(), out.bits());
}

bool aggregation_game::all_goals_cubes() const {
    return std::all_of(goals.begin(), goals.end(), [](const goal& g) { return g.is_cube(); });
}

bool prefers(const aggregation_game& g, int voter, const profile& a, const profile& b) {
    ballot oa = g.outcome(a);
    ballot ob = g.outcome(b);
    bool sa = g.goal_satisfied(voter, oa);
    bool sb = g.goal_satisfied(voter, ob);
    if (sa != sb) return sa;
    return g.payoff(voter, a, oa) >= g.payoff(voter, b, ob);
}

bool strictly_prefers(const aggregation_game& g, int voter, const profile& a, const profile& b) {
    ballot oa = g.outcome(a);
    ballot ob = g.outcome(b);
    bool sa = g.goal_satisfied(voter, oa);
    bool sb = g.goal_satisfied(voter, ob);
    if (sa != sb) return sa;
    return g.payoff(voter, a, oa) > g.payoff(voter, b, ob);
}

bool is_truthful(const aggregation_game& g, int voter, const ballot& b) {
    const goal& gl = g.goals[voter];
    if (gl.cube_form) return gl.cube_form->matches(b);
    return satisfies(b, gl.f);
}

nash_result is_nash(const aggregation_game& g, const profile& p) {
    nash_result r;
    ballot out = g.outcome(p);
    for (int i = 0; i < g.dims.voters; ++i) {
        ballot current = p.ballot_of(i);
        bool sat = g.goal_satisfied(i, out);
        rational pay = g.payoff(i, p, out);
        for (std::uint32_t bits = 0; bits < g.dims.ballot_space(); ++bits) {
            ballot alt(bits, g.dims.issues);
            if (alt == current) continue;
            profile q = p.with_ballot(i, alt);
            ballot oq = g.outcome(q);
            bool sq = g.goal_satisfied(i, oq);
            bool strict = sq != sat ? sq : g.payoff(i, q, oq) > pay;
            if (strict) {
                r.nash = false;
                r.improvement = deviation{i, alt};
                return r;
            }
        }
    }
    r.nash = true;
    return r;
}

std::vector<profile> enumerate_nash(const aggregation_game& g, std::uint64_t cap) {
    check_cap(g.dims.profile_space(), cap);
    std::vector<profile> out;
    for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
        profile p(code, g.dims);
        if (is_nash(g, p).nash) out.push_back(p);
    }
    return out;
}

profile_classification classify_profile(const aggregation_game& g, const profile& p,
                                        std::span<const coalition> queried) {
    profile_classification c;
    c.nash = is_nash(g, p).nash;
    std::uint32_t truthful = 0;
    for (int i = 0; i < g.dims.voters; ++i)
        if (is_truthful(g, i, p.ballot_of(i))) truthful |= std::uint32_t(1) << i;
    c.truthful_for = coalition(truthful, g.dims.voters);
    ballot out = g.outcome(p);
    for (const coalition& q : queried) {
        bool eff = true, tot = true;
        for (int i : q.members()) {
            if (!g.goal_satisfied(i, out)) eff = false;
            if (g.goal_satisfied(i, out)) tot = false;
        }
        c.efficient_for.emplace_back(q, eff);
        c.totally_inefficient_for.emplace_back(q, tot);
    }
    return c;
}

namespace {

// Iterates contexts: all assignments of ballots to the voters other than
// `voter`, drawn from per-voter candidate lists. `body` receives a profile
// whose `voter` entry is unspecified and must be overwritten by the caller.
template <typename Body>
void for_each_context(const structure& s, int voter,
                      const std::vector<std::vector<ballot>>& candidates, Body&& body) {
    std::vector<int> idx(s.voters, 0);
    while (true) {
        std::vector<ballot> bs;
        bs.reserve(s.voters);
        for (int i = 0; i < s.voters; ++i)
            bs.push_back(i == voter ? ballot::zeros(s.issues) : candidates[i][idx[i]]);
        body(profile(bs, s));
        int i = s.voters - 1;
        for (; i >= 0; --i) {
            if (i == voter) continue;
            if (++idx[i] < static_cast<int>(candidates[i].size())) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
}

std::vector<std::vector<ballot>> all_ballot_lists(const structure& s) {
    std::vector<ballot> all;
    for (std::uint32_t bits = 0; bits < s.ballot_space(); ++bits) all.emplace_back(bits, s.issues);
    return std::vector<std::vector<ballot>>(s.voters, all);
}

}  // namespace

namespace {

// Contexts for `voter` in ascending profile order: every full-profile code
// whose voter block is zero. Avoids per-iteration allocation.
struct context_range {
    int low_bits;
    std::uint64_t count;
    explicit context_range(const structure& s, int voter)
        : low_bits((s.voters - 1 - voter) * s.issues),
          count(std::uint64_t(1) << ((s.voters - 1) * s.issues)) {}
    std::uint64_t code_at(std::uint64_t k, int issues) const {
        std::uint64_t low = k & ((std::uint64_t(1) << low_bits) - 1);
        std::uint64_t high = k >> low_bits;
        return (high << (low_bits + issues)) | low;
    }
};

}  // namespace

dominance_result is_weakly_dominant(const aggregation_game& g, int voter, const ballot& b,
                                    std::uint64_t cap) {
    check_cap(g.dims.profile_space(), cap);
    dominance_result r;
    r.dominant = true;
    context_range ctxs(g.dims, voter);
    for (std::uint64_t k = 0; k < ctxs.count; ++k) {
        profile mine =
            profile(ctxs.code_at(k, g.dims.issues), g.dims).with_ballot(voter, b);
        ballot om = g.outcome(mine);
        bool sm = g.goal_satisfied(voter, om);
        rational pm = g.payoff(voter, mine, om);
        for (std::uint32_t bits = 0; bits < g.dims.ballot_space(); ++bits) {
            ballot alt(bits, g.dims.issues);
            if (alt == b) continue;
            profile theirs = mine.with_ballot(voter, alt);
            ballot ot = g.outcome(theirs);
            bool st = g.goal_satisfied(voter, ot);
            bool weakly = sm != st ? sm : pm >= g.payoff(voter, theirs, ot);
            if (!weakly) {
                r.dominant = false;
                r.witness_context = mine;
                r.witness_better = alt;
                return r;
            }
        }
    }
    return r;
}

std::vector<ballot> weakly_dominant_ballots(const aggregation_game& g, int voter,
                                            std::uint64_t cap) {
    std::vector<ballot> out;
    for (std::uint32_t bits = 0; bits < g.dims.ballot_space(); ++bits) {
        ballot b(bits, g.dims.issues);
        if (is_weakly_dominant(g, voter, b, cap).dominant) out.push_back(b);
    }
    return out;
}

std::vector<std::vector<ballot>> iesds(const aggregation_game& g, std::uint64_t cap) {
    check_cap(g.dims.profile_space(), cap);
    std::vector<std::vector<ballot>> surviving = all_ballot_lists(g.dims);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<ballot>> next = surviving;
        for (int i = 0; i < g.dims.voters; ++i) {
            std::vector<ballot> keep;
            for (const ballot& b : surviving[i]) {
                bool dominated = false;
                for (const ballot& d : surviving[i]) {
                    if (d == b) continue;
                    bool strict_everywhere = true;
                    for_each_context(g.dims, i, surviving, [&](const profile& ctx) {
                        if (!strict_everywhere) return;
                        profile pb = ctx.with_ballot(i, b);
                        profile pd = ctx.with_ballot(i, d);
                        if (!strictly_prefers(g, i, pd, pb)) strict_everywhere = false;
                    });
                    if (strict_everywhere) {
                        dominated = true;
                        break;
                    }
                }
                if (!dominated) keep.push_back(b);
            }
            if (keep.size() != surviving[i].size()) changed = true;
            next[i] = std::move(keep);
        }
        surviving = std::move(next);
    }
    return surviving;
}

std::optional<profile> dominant_strategy_equilibrium(const aggregation_game& g,
                                                     std::uint64_t cap) {
    std::vector<ballot> picks;
    for (int i = 0; i < g.dims.voters; ++i) {
        std::vector<ballot> dominant = weakly_dominant_ballots(g, i, cap);
        if (dominant.empty()) return std::nullopt;
        const ballot& pick = dominant.front();
        // Every other dominant ballot must be outcome- and payoff-identical
        // against every context, otherwise the equilibrium is not unique.
        context_range ctxs(g.dims, i);
        for (std::size_t k = 1; k < dominant.size(); ++k) {
            for (std::uint64_t c = 0; c < ctxs.count; ++c) {
                profile ctx(ctxs.code_at(c, g.dims.issues), g.dims);
                profile pa = ctx.with_ballot(i, pick);
                profile pb = ctx.with_ballot(i, dominant[k]);
                ballot oa = g.outcome(pa);
                ballot ob = g.outcome(pb);
                if (oa != ob || g.payoff(i, pa, oa) != g.payoff(i, pb, ob))
                    return std::nullopt;
            }
        }
        picks.push_back(pick);
    }
    return profile(picks, g.dims);
}

bool is_uniform(const aggregation_game& g, std::uint64_t cap) {
    switch (g.payoffs.table_kind()) {
        case payoff_table::kind::constant:
        case payoff_table::kind::uniform:
            return true;
        case payoff_table::kind::full: {
            check_cap(g.dims.profile_space(), cap);
            // Extensional: equal outcomes must mean equal payoffs.
            std::vector<std::vector<std::optional<rational>>> seen(
                g.dims.voters, std::vector<std::optional<rational>>(g.dims.ballot_space()));
            for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
                profile p(code, g.dims);
                ballot out = g.outcome(p);
                for (int i = 0; i < g.dims.voters; ++i) {
                    rational v = g.payoff(i, p, out);
                    auto& slot = seen[i][out.bits()];
                    if (!slot)
                        slot = v;
                    else if (*slot != v)
                        return false;
                }
            }
            return true;
        }
    }
    return false;
}

bool is_constant(const aggregation_game& g, std::uint64_t cap) {
    switch (g.payoffs.table_kind()) {
        case payoff_table::kind::constant:
            return true;
        case payoff_table::kind::uniform: {
            for (const auto& row : g.payoffs.uniform_values())
                for (const rational& v : row)
                    if (v != row.front()) return false;
            return true;
        }
        case payoff_table::kind::full: {
            check_cap(g.dims.profile_space(), cap);
            for (int i = 0; i < g.dims.voters; ++i) {
                std::optional<rational> first;
                for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
                    profile p(code, g.dims);
                    rational v = g.payoff(i, p);
                    if (!first)
                        first = v;
                    else if (*first != v)
                        return false;
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace bvg
