#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bvg/game.hpp"

namespace bvg {

// A binding commitment of payoff flows: entry (payer, profile, payee) is
// the nonnegative amount the payer hands the payee should that exact
// ballot profile be played. Absent entries are zero; self-transfers are
// rejected at construction since they cancel in the payoff update.
class transfer_profile {
public:
    transfer_profile() = default;
    explicit transfer_profile(const structure& s) : dims_(s) {}

    const structure& dims() const { return dims_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    void set(int payer, std::uint64_t profile_code, int payee, const rational& amount);
    void add(int payer, std::uint64_t profile_code, int payee, const rational& amount);
    rational at(int payer, std::uint64_t profile_code, int payee) const;

    // Net flow into `voter` at `profile_code` (incoming minus outgoing).
    rational net(int voter, std::uint64_t profile_code) const;

    using entry_map = std::map<std::tuple<int, std::uint64_t, int>, rational>;
    const entry_map& entries() const { return entries_; }

    // One line per nonzero entry: "payer profilebits payee p/q",
    // voters 1-based, profile as the voter-major bit string.
    std::string serialize() const;
    static transfer_profile deserialize(const std::string& text, const structure& s);

    bool operator==(const transfer_profile&) const = default;

private:
    structure dims_;
    entry_map entries_;
};

// The payoff update induced by a transfer profile: each voter's payoff
// gains incoming and loses outgoing amounts at every profile. The result
// carries a full payoff table; uniformity is generally lost.
aggregation_game apply_transfers(const aggregation_game& game, const transfer_profile& tau);

// M = 1 + the largest payoff gap any single voter has between two
// collective outcomes. Requires a uniform game.
rational payoff_bound(const aggregation_game& game, std::uint64_t cap = default_enumeration_cap);

// Reshuffles payoffs inside coalition C so that every member other than
// the sponsor (lowest index in C) earns a bonus of M at each profile where
// their own ballot equals b_star; the sponsor absorbs the balance, so the
// coalition sum is unchanged at every profile. Preconditions (uniform
// game, C winning, systematic monotonic rule, b_star satisfying every
// C-member's goal) are reported by name when violated.
aggregation_game redistribute_for_coalition(const aggregation_game& game, const coalition& c,
                                            const ballot& b_star,
                                            std::uint64_t cap = default_enumeration_cap);

// Each voter pledges 2M to every other voter at every profile where their
// own ballot deviates from b; on b itself all entries are zero.
transfer_profile commitment_transfer(const aggregation_game& game, const profile& b,
                                     std::uint64_t cap = default_enumeration_cap);

struct commitment_check {
    // Verification core: the construction is well-formed and sustains b.
    bool ok = false;
    bool structure_ok = false;      // tau matches the canonical construction
    bool nash_in_base = false;      // b is a Nash equilibrium of the base game
    bool nash_in_transferred = false;
    bool efficient = false;         // outcome satisfies every voter's goal
    bool outcome_ok = false;
    std::optional<deviation> counter;  // improving deviation when a Nash check fails

    // The literal dominance claims, evaluated and reported but not gating
    // `ok`: they fail whenever some committed ballot is not truthful, since
    // a goal flip outweighs any penalty. See the dominance tests.
    bool dominance_checked = false;
    bool all_committed_ballots_dominant = false;
    std::vector<int> non_dominant_voters;
    bool unique_dominant_profile = false;
};

commitment_check verify_commitment(const aggregation_game& game, const profile& b,
                                   const transfer_profile& tau,
                                   std::uint64_t cap = default_enumeration_cap,
                                   bool check_dominance = true);

// The deviator i tops up tau_star with a bonus to every other voter j,
// payable whenever j's own ballot equals b_prime. The bonus exceeds, by
// one, the worst payoff swing j could suffer by switching to b_prime in
// any context (base payoff plus all transfer flows), clamped at zero.
transfer_profile deviation_transfer(const aggregation_game& game, int deviator,
                                    const ballot& b_prime, const transfer_profile& tau_star,
                                    std::uint64_t cap = default_enumeration_cap);

// A two-phase game: simultaneous transfer pledges, then the transferred
// voting game. The base game must be uniform.
struct endogenous_game {
    aggregation_game base;
    explicit endogenous_game(aggregation_game g, std::uint64_t cap = default_enumeration_cap)
        : base(std::move(g)) {
        if (!is_uniform(base, cap))
            throw std::invalid_argument("endogenous_game: base game must be uniform");
    }
};

struct survival_status {
    enum class state { certified, refuted, unknown };
    state st = state::unknown;
    std::string reason;

    // certified: the commitment witness and its verification record.
    transfer_profile witness;
    commitment_check certificate;

    // refuted: the financing deviator, their target ballot, and the
    // coalition whose goals the equilibrium leaves unmet.
    int deviator = -1;
    std::optional<ballot> target;
    std::optional<coalition> via;

    bool certified() const { return st == state::certified; }
    bool refuted() const { return st == state::refuted; }
    bool unknown() const { return st == state::unknown; }
};

// Decides whether the Nash equilibrium b of the base game survives
// rational pre-vote negotiation:
//   refuted    some winning coalition with jointly satisfiable goals is
//              left unsatisfied; a member finances a verified deviation
//              (checked by iterated elimination plus equilibrium scan)
//   certified  b satisfies every goal; the commitment construction
//              verifies
//   unknown    neither construction applies; the unrestricted transfer
//              space is not searched
survival_status check_surviving(const endogenous_game& endo, const profile& b,
                                std::uint64_t cap = default_enumeration_cap);

// Shared-scan variant: statuses for many equilibria of one game, reusing
// the per-coalition deviation verifications.
std::vector<survival_status> check_surviving_all(const endogenous_game& endo,
                                                 std::span<const profile> equilibria,
                                                 std::uint64_t cap = default_enumeration_cap);

// A finite restriction of the transfer space for the brute-force oracle.
// Each player chooses among: the zero transfer; a commitment pattern
// (pay `amount` to everyone whenever own ballot differs from the target);
// or a reward pattern (pay `amount` to each voter whose ballot equals the
// target). Amounts default to {M, 2M, 3M} plus the implicit zero.
struct grid_spec {
    std::vector<rational> amounts;          // nonzero pattern amounts
    std::vector<ballot> commitment_targets; // default: every ballot
    std::vector<ballot> reward_targets;     // default: every ballot
    // Support restriction: players outside this list can only pledge the
    // zero transfer. Empty means everyone is active.
    std::vector<int> active_players;
    std::uint64_t max_transfer_profiles = 1'000'000;

    static grid_spec defaults(const aggregation_game& game,
                              std::uint64_t cap = default_enumeration_cap);
};

struct oracle_outcome {
    transfer_profile tau;
    profile played;
};

struct oracle_result {
    std::vector<oracle_outcome> on_path;
    std::uint64_t transfer_profiles = 0;
    std::uint64_t subgames_without_equilibrium = 0;
    std::uint64_t deviations_into_empty_subgames = 0;  // treated as unprofitable
};

// Backward induction over the restricted two-phase game: after every grid
// transfer profile the lexicographically smallest pure equilibrium of the
// transferred game is played (subgames without one are never deviated
// into); a first-stage profile is stable when no player can improve by
// switching to another grid strategy. Returns all stable paths.
oracle_result grid_spe_oracle(const endogenous_game& endo, const grid_spec& grid,
                              std::uint64_t cap = default_enumeration_cap);

struct paradox_row {
    profile equilibrium;
    ballot outcome;
    bool outcome_admissible = false;
    coalition admissible_voters;  // voters whose own ballot satisfies the constraint
    survival_status status;
};

struct paradox_report {
    std::vector<paradox_row> rows;
    coalition responsible;  // voters whose goal entails the constraint
    // Set when the game is N-consistent and a responsible voter exists: in
    // that case every surviving equilibrium respects the constraint.
    bool survivors_guaranteed_admissible = false;
};

// Admissibility analysis of every pure equilibrium under an integrity
// constraint, with survival statuses and the responsible voters.
paradox_report paradox_analysis(const aggregation_game& game, const formula& constraint,
                                std::uint64_t cap = default_enumeration_cap);

}  // namespace bvg
