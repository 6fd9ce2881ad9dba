#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bvg/game.hpp"

namespace bvg {

class game_file_error : public std::runtime_error {
public:
    game_file_error(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A parsed game file: the game itself, the declared issue names (empty
// strings where none were declared), and the optional integrity
// constraint.
struct game_document {
    aggregation_game game;
    std::vector<std::string> issue_names;
    std::optional<formula> constraint;

    std::string issue_name(int j) const {
        if (j < static_cast<int>(issue_names.size()) && !issue_names[j].empty())
            return issue_names[j];
        return "p" + std::to_string(j + 1);
    }
};

// Line-oriented format, '#' starts a comment:
//
//   voters 3
//   issues 3 W F P                 # count, then optional names
//   aggregator majority            # | quota q1..qm | coalitions {1,2} ...
//   goal 1 W                       # one formula per voter
//   goal 2 general (W & !F) | (!W & F)   # non-cube goals need 'general'
//   payoffs constant 0 0 0         # | uniform | full [default p/q]
//   payoff 3 010 1                 # uniform/full rows: voter bits value
//   constraint W -> (F | P)        # optional
//
// Rationals are integers or p/q. Voters and issues are 1-based.
game_document parse_game(std::istream& in);
game_document parse_game_text(const std::string& text);
game_document load_game(const std::string& path);

// Canonical form: parsing the output reproduces an identical document.
std::string write_game(const game_document& doc,
                       std::uint64_t cap = default_enumeration_cap);

}  // namespace bvg
