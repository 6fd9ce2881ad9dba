#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bvg/core.hpp"

namespace bvg {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A propositional formula over the issue atoms p1..pm, with the constants
// top/bot and the connectives !, &, |, ->. Immutable; shared subtrees are
// fine. Structural equality.
class formula {
public:
    enum class kind { atom, top, bottom, negation, conjunction, disjunction, implication };

    static formula atom(int index);  // 0-based issue index
    static formula top();
    static formula bottom();
    static formula negation(formula f);
    static formula conjunction(formula a, formula b);
    static formula disjunction(formula a, formula b);
    static formula implication(formula a, formula b);

    kind node_kind() const { return node_->k; }
    int atom_index() const { return node_->atom; }
    formula left() const { return formula(node_->lhs); }
    formula right() const { return formula(node_->rhs); }

    int max_atom() const;  // largest 0-based atom index, -1 if none

    bool operator==(const formula& o) const { return equal(node_.get(), o.node_.get()); }

    // Canonical form, minimal parentheses; atoms as issue names when given,
    // else p1..pm. parse_formula(to_string(f)) is structurally f.
    std::string to_string(std::span<const std::string> issue_names = {}) const;

private:
    struct node {
        kind k;
        int atom = -1;
        std::shared_ptr<const node> lhs, rhs;
    };
    explicit formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}
    static bool equal(const node* a, const node* b);
    std::shared_ptr<const node> node_;
    friend class formula_parser;
};

// Grammar (ASCII, whitespace insignificant):
//   implication := disjunction ('->' implication)?
//   disjunction := conjunction ('|' disjunction)?
//   conjunction := unary ('&' conjunction)?
//   unary       := '!' unary | '(' implication ')' | 'top' | 'bot' | atom
// Atoms are p<k> (1-based) or declared issue names. Precedence ! > & > | > ->.
formula parse_formula(std::string_view text, int issues,
                      std::span<const std::string> issue_names = {});

// Standard truth evaluation, b(j)=1 meaning the issue-j atom is true.
bool satisfies(const ballot& b, const formula& f);

// A conjunction of literals as issue-sign masks in ballot bit layout.
// The empty cube is top.
struct goal_cube {
    std::uint32_t positive = 0;
    std::uint32_t negative = 0;
    int issues = 0;

    bool matches(const ballot& b) const {
        return (b.bits() & positive) == positive && (b.bits() & negative) == 0;
    }
    bool empty() const { return positive == 0 && negative == 0; }
    bool operator==(const goal_cube&) const = default;
};

// Succeeds iff f is syntactically a conjunction of literals over distinct
// issues (or top alone).
std::optional<goal_cube> as_cube(const formula& f, int issues);

// A ballot satisfying every cube, or nullopt if two cubes disagree on an
// issue's sign. The witness sets the required literals and fills
// unconstrained issues with 0.
std::optional<ballot> cubes_consistent(std::span<const goal_cube> cubes, int issues);

// Exactly the ballots satisfying f, in ascending order.
std::vector<ballot> models_of(const formula& f, int issues,
                              std::uint64_t cap = default_enumeration_cap);

// Truth-table inclusion: every model of f satisfies g.
bool entails(const formula& f, const formula& g, int issues,
             std::uint64_t cap = default_enumeration_cap);

}  // namespace bvg
