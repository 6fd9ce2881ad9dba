#include "bvg/formula.hpp"

#include <algorithm>
#include <cctype>

namespace bvg {

formula formula::atom(int index) {
    if (index < 0) throw std::invalid_argument("formula: negative atom index");
    auto n = std::make_shared<node>();
    n->k = kind::atom;
    n->atom = index;
    return formula(std::move(n));
}

formula formula::top() {
    auto n = std::make_shared<node>();
    n->k = kind::top;
    return formula(std::move(n));
}

formula formula::bottom() {
    auto n = std::make_shared<node>();
    n->k = kind::bottom;
    return formula(std::move(n));
}

formula formula::negation(formula f) {
    auto n = std::make_shared<node>();
    n->k = kind::negation;
    n->lhs = std::move(f.node_);
    return formula(std::move(n));
}

formula formula::conjunction(formula a, formula b) {
    auto n = std::make_shared<node>();
    n->k = kind::conjunction;
    n->lhs = std::move(a.node_);
    n->rhs = std::move(b.node_);
    return formula(std::move(n));
}

formula formula::disjunction(formula a, formula b) {
    auto n = std::make_shared<node>();
    n->k = kind::disjunction;
    n->lhs = std::move(a.node_);
    n->rhs = std::move(b.node_);
    return formula(std::move(n));
}

formula formula::implication(formula a, formula b) {
    auto n = std::make_shared<node>();
    n->k = kind::implication;
    n->lhs = std::move(a.node_);
    n->rhs = std::move(b.node_);
    return formula(std::move(n));
}

bool formula::equal(const node* a, const node* b) {
    if (a == b) return true;
    if (a->k != b->k) return false;
    switch (a->k) {
        case kind::atom:
            return a->atom == b->atom;
        case kind::top:
        case kind::bottom:
            return true;
        case kind::negation:
            return equal(a->lhs.get(), b->lhs.get());
        default:
            return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
    }
}

int formula::max_atom() const {
    switch (node_kind()) {
        case kind::atom:
            return atom_index();
        case kind::top:
        case kind::bottom:
            return -1;
        case kind::negation:
            return left().max_atom();
        default:
            return std::max(left().max_atom(), right().max_atom());
    }
}

namespace {

int precedence(formula::kind k) {
    switch (k) {
        case formula::kind::implication:
            return 1;
        case formula::kind::disjunction:
            return 2;
        case formula::kind::conjunction:
            return 3;
        default:
            return 4;
    }
}

void print(const formula& f, std::span<const std::string> names, int parent_prec,
           std::string& out) {
    int prec = precedence(f.node_kind());
    bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (f.node_kind()) {
        case formula::kind::atom: {
            int j = f.atom_index();
            if (j < static_cast<int>(names.size()) && !names[j].empty())
                out += names[j];
            else
                out += "p" + std::to_string(j + 1);
            break;
        }
        case formula::kind::top:
            out += "top";
            break;
        case formula::kind::bottom:
            out += "bot";
            break;
        case formula::kind::negation:
            out += '!';
            print(f.left(), names, 4, out);
            break;
        case formula::kind::conjunction:
            print(f.left(), names, prec + 1, out);
            out += " & ";
            print(f.right(), names, prec, out);
            break;
        case formula::kind::disjunction:
            print(f.left(), names, prec + 1, out);
            out += " | ";
            print(f.right(), names, prec, out);
            break;
        case formula::kind::implication:
            print(f.left(), names, prec + 1, out);
            out += " -> ";
            print(f.right(), names, prec, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string formula::to_string(std::span<const std::string> issue_names) const {
    std::string out;
    print(*this, issue_names, 0, out);
    return out;
}

// Recursive-descent parser; & , | and -> associate to the right.
class formula_parser {
public:
    formula_parser(std::string_view text, int issues, std::span<const std::string> names)
        : text_(text), issues_(issues), names_(names) {}

    formula run() {
        formula f = implication();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return f;
    }

private:
    formula implication() {
        formula lhs = disjunction();
        skip_ws();
        if (match("->")) return formula::implication(std::move(lhs), implication());
        return lhs;
    }

    formula disjunction() {
        formula lhs = conjunction();
        skip_ws();
        if (peek() == '|') {
            ++pos_;
            return formula::disjunction(std::move(lhs), disjunction());
        }
        return lhs;
    }

    formula conjunction() {
        formula lhs = unary();
        skip_ws();
        if (peek() == '&') {
            ++pos_;
            return formula::conjunction(std::move(lhs), conjunction());
        }
        return lhs;
    }

    formula unary() {
        skip_ws();
        if (peek() == '!') {
            ++pos_;
            return formula::negation(unary());
        }
        if (peek() == '(') {
            ++pos_;
            formula f = implication();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return f;
        }
        return atom();
    }

    formula atom() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw parse_error("expected an atom", pos_);
        std::string_view word = text_.substr(start, pos_ - start);
        if (word == "top") return formula::top();
        if (word == "bot") return formula::bottom();
        for (std::size_t j = 0; j < names_.size(); ++j)
            if (word == names_[j]) return formula::atom(static_cast<int>(j));
        if (word.size() > 1 && word[0] == 'p' &&
            std::all_of(word.begin() + 1, word.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int k = std::stoi(std::string(word.substr(1)));
            if (k < 1 || k > issues_)
                throw parse_error("atom p" + std::to_string(k) + " is out of range 1.." +
                                      std::to_string(issues_),
                                  start);
            return formula::atom(k - 1);
        }
        throw parse_error("unknown issue name '" + std::string(word) + "'", start);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool match(std::string_view tok) {
        if (text_.substr(pos_).starts_with(tok)) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    int issues_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

formula parse_formula(std::string_view text, int issues,
                      std::span<const std::string> issue_names) {
    return formula_parser(text, issues, issue_names).run();
}

bool satisfies(const ballot& b, const formula& f) {
    switch (f.node_kind()) {
        case formula::kind::atom: {
            int j = f.atom_index();
            if (j >= b.issues())
                throw std::out_of_range("satisfies: atom index " + std::to_string(j + 1) +
                                        " exceeds ballot length " + std::to_string(b.issues()));
            return b.bit(j);
        }
        case formula::kind::top:
            return true;
        case formula::kind::bottom:
            return false;
        case formula::kind::negation:
            return !satisfies(b, f.left());
        case formula::kind::conjunction:
            return satisfies(b, f.left()) && satisfies(b, f.right());
        case formula::kind::disjunction:
            return satisfies(b, f.left()) || satisfies(b, f.right());
        case formula::kind::implication:
            return !satisfies(b, f.left()) || satisfies(b, f.right());
    }
    throw std::logic_error("satisfies: unknown node");
}

namespace {

bool collect_cube(const formula& f, goal_cube& cube) {
    switch (f.node_kind()) {
        case formula::kind::conjunction:
            return collect_cube(f.left(), cube) && collect_cube(f.right(), cube);
        case formula::kind::atom: {
            std::uint32_t bit = std::uint32_t(1) << (cube.issues - 1 - f.atom_index());
            if ((cube.positive | cube.negative) & bit) return false;  // duplicate issue
            cube.positive |= bit;
            return true;
        }
        case formula::kind::negation: {
            if (f.left().node_kind() != formula::kind::atom) return false;
            std::uint32_t bit = std::uint32_t(1) << (cube.issues - 1 - f.left().atom_index());
            if ((cube.positive | cube.negative) & bit) return false;
            cube.negative |= bit;
            return true;
        }
        default:
            return false;
    }
}

}  // namespace

std::optional<goal_cube> as_cube(const formula& f, int issues) {
    if (f.max_atom() >= issues)
        throw std::invalid_argument("as_cube: atom index exceeds issue count");
    goal_cube cube;
    cube.issues = issues;
    if (f.node_kind() == formula::kind::top) return cube;
    if (!collect_cube(f, cube)) return std::nullopt;
    return cube;
}

std::optional<ballot> cubes_consistent(std::span<const goal_cube> cubes, int issues) {
    std::uint32_t pos = 0, neg = 0;
    for (const goal_cube& c : cubes) {
        pos |= c.positive;
        neg |= c.negative;
    }
    if (pos & neg) return std::nullopt;
    return ballot(pos, issues);
}

std::vector<ballot> models_of(const formula& f, int issues, std::uint64_t cap) {
    check_cap(std::uint64_t(1) << issues, cap);
    if (f.max_atom() >= issues)
        throw std::invalid_argument("models_of: atom index exceeds issue count");
    std::vector<ballot> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << issues); ++bits) {
        ballot b(bits, issues);
        if (satisfies(b, f)) out.push_back(b);
    }
    return out;
}

bool entails(const formula& f, const formula& g, int issues, std::uint64_t cap) {
    check_cap(std::uint64_t(1) << issues, cap);
    if (f.max_atom() >= issues || g.max_atom() >= issues)
        throw std::invalid_argument("entails: atom index exceeds issue count");
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << issues); ++bits) {
        ballot b(bits, issues);
        if (satisfies(b, f) && !satisfies(b, g)) return false;
    }
    return true;
}

}  // namespace bvg
