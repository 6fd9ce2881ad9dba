#include "bvg/game_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace bvg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!tok.empty()) out.push_back(std::move(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    if (!tok.empty()) out.push_back(std::move(tok));
    return out;
}

std::string rest_of(const std::vector<std::string>& toks, std::size_t from) {
    std::string s;
    for (std::size_t k = from; k < toks.size(); ++k) {
        if (!s.empty()) s += ' ';
        s += toks[k];
    }
    return s;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw game_file_error("expected an integer, got '" + tok + "'", line);
    }
}

coalition parse_coalition_token(const std::string& tok, int voters, int line) {
    if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
        throw game_file_error("expected a coalition like {1,2}, got '" + tok + "'", line);
    std::uint32_t mask = 0;
    std::string body = tok.substr(1, tok.size() - 2);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        int v = parse_int(item, line);
        if (v < 1 || v > voters)
            throw game_file_error("coalition member " + item + " out of range", line);
        mask |= std::uint32_t(1) << (v - 1);
    }
    return coalition(mask, voters);
}

}  // namespace

game_document parse_game(std::istream& in) {
    std::optional<int> voters, issues;
    std::vector<std::string> names;
    std::optional<aggregator> rule;
    struct goal_decl {
        bool general;
        std::string text;
        int line;
    };
    std::map<int, goal_decl> goal_texts;
    std::optional<std::string> payoff_mode;
    std::vector<rational> constant_values;
    rational full_default;
    struct payoff_row {
        int voter;
        std::string bits;
        rational value;
        int line;
    };
    std::vector<payoff_row> payoff_rows;
    std::optional<std::string> constraint_text;
    int constraint_line = 0;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (head == "voters") {
            if (toks.size() != 2) throw game_file_error("usage: voters <n>", lineno);
            voters = parse_int(toks[1], lineno);
        } else if (head == "issues") {
            if (toks.size() < 2) throw game_file_error("usage: issues <m> [names...]", lineno);
            issues = parse_int(toks[1], lineno);
            names.assign(toks.begin() + 2, toks.end());
            if (!names.empty() && static_cast<int>(names.size()) != *issues)
                throw game_file_error("expected " + std::to_string(*issues) + " issue names",
                                      lineno);
        } else if (head == "aggregator") {
            if (!voters || !issues)
                throw game_file_error("aggregator must follow voters and issues", lineno);
            structure s(*voters, *issues);
            if (toks.size() < 2) throw game_file_error("missing aggregator kind", lineno);
            if (toks[1] == "majority") {
                rule = aggregator::majority(s);
            } else if (toks[1] == "quota") {
                std::vector<int> qs;
                for (std::size_t k = 2; k < toks.size(); ++k)
                    qs.push_back(parse_int(toks[k], lineno));
                try {
                    rule = aggregator::quota(s, std::move(qs));
                } catch (const std::invalid_argument& e) {
                    throw game_file_error(e.what(), lineno);
                }
            } else if (toks[1] == "coalitions") {
                std::vector<std::uint32_t> masks;
                for (std::size_t k = 2; k < toks.size(); ++k)
                    masks.push_back(parse_coalition_token(toks[k], *voters, lineno).mask());
                try {
                    rule = aggregator::explicit_family(
                        s, coalition_family(std::move(masks), *voters));
                } catch (const std::invalid_argument& e) {
                    throw game_file_error(e.what(), lineno);
                }
            } else {
                throw game_file_error("unknown aggregator '" + toks[1] + "'", lineno);
            }
        } else if (head == "goal") {
            if (toks.size() < 3) throw game_file_error("usage: goal <voter> [general] <formula>",
                                                       lineno);
            int v = parse_int(toks[1], lineno);
            bool general = toks[2] == "general";
            std::string text = rest_of(toks, general ? 3 : 2);
            if (text.empty()) throw game_file_error("empty goal formula", lineno);
            goal_texts[v] = goal_decl{general, text, lineno};
        } else if (head == "payoffs") {
            if (toks.size() < 2)
                throw game_file_error("usage: payoffs constant|uniform|full ...", lineno);
            payoff_mode = toks[1];
            if (toks[1] == "constant") {
                for (std::size_t k = 2; k < toks.size(); ++k) {
                    try {
                        constant_values.push_back(rational::parse(toks[k]));
                    } catch (const std::exception& e) {
                        throw game_file_error(e.what(), lineno);
                    }
                }
            } else if (toks[1] == "full") {
                if (toks.size() == 4 && toks[2] == "default") {
                    try {
                        full_default = rational::parse(toks[3]);
                    } catch (const std::exception& e) {
                        throw game_file_error(e.what(), lineno);
                    }
                } else if (toks.size() != 2) {
                    throw game_file_error("usage: payoffs full [default <p/q>]", lineno);
                }
            } else if (toks[1] != "uniform") {
                throw game_file_error("unknown payoff mode '" + toks[1] + "'", lineno);
            }
        } else if (head == "payoff") {
            if (toks.size() != 4)
                throw game_file_error("usage: payoff <voter> <bits> <value>", lineno);
            try {
                payoff_rows.push_back(
                    payoff_row{parse_int(toks[1], lineno), toks[2], rational::parse(toks[3]),
                               lineno});
            } catch (const game_file_error&) {
                throw;
            } catch (const std::exception& e) {
                throw game_file_error(e.what(), lineno);
            }
        } else if (head == "constraint") {
            constraint_text = rest_of(toks, 1);
            constraint_line = lineno;
            if (constraint_text->empty())
                throw game_file_error("empty constraint formula", lineno);
        } else {
            throw game_file_error("unknown directive '" + head + "'", lineno);
        }
    }

    if (!voters) throw game_file_error("missing 'voters' section", lineno);
    if (!issues) throw game_file_error("missing 'issues' section", lineno);
    structure s = [&] {
        try {
            return structure(*voters, *issues);
        } catch (const std::invalid_argument& e) {
            throw game_file_error(e.what(), 1);
        }
    }();
    if (!rule) rule = aggregator::majority(s);

    // Goals: one per voter, cube unless marked general.
    std::vector<goal> goals;
    for (int v = 1; v <= s.voters; ++v) {
        auto it = goal_texts.find(v);
        if (it == goal_texts.end())
            throw game_file_error("missing goal for voter " + std::to_string(v), lineno);
        formula f = [&] {
            try {
                return parse_formula(it->second.text, s.issues, names);
            } catch (const parse_error& e) {
                throw game_file_error("goal " + std::to_string(v) + ": " + e.what(),
                                      it->second.line);
            }
        }();
        goal g = goal::of(std::move(f), s.issues);
        if (!g.is_cube() && !it->second.general)
            throw game_file_error("goal " + std::to_string(v) +
                                      " is not a conjunction of literals; write 'goal " +
                                      std::to_string(v) + " general ...' to allow it",
                                  it->second.line);
        goals.push_back(std::move(g));
    }

    // Payoffs.
    if (!payoff_mode) throw game_file_error("missing 'payoffs' section", lineno);
    payoff_table table = payoff_table::constant(std::vector<rational>(s.voters));
    if (*payoff_mode == "constant") {
        if (static_cast<int>(constant_values.size()) != s.voters)
            throw game_file_error("payoffs constant needs one value per voter", lineno);
        table = payoff_table::constant(constant_values);
    } else if (*payoff_mode == "uniform") {
        std::vector<std::vector<rational>> values(
            s.voters, std::vector<rational>(s.ballot_space()));
        for (const auto& row : payoff_rows) {
            if (row.voter < 1 || row.voter > s.voters)
                throw game_file_error("payoff voter out of range", row.line);
            ballot b = [&] {
                try {
                    return ballot::parse(row.bits, s.issues);
                } catch (const std::invalid_argument& e) {
                    throw game_file_error(e.what(), row.line);
                }
            }();
            values[row.voter - 1][b.bits()] = row.value;
        }
        table = payoff_table::uniform(std::move(values));
    } else {  // full
        std::vector<std::map<std::uint64_t, rational>> deltas(s.voters);
        for (const auto& row : payoff_rows) {
            if (row.voter < 1 || row.voter > s.voters)
                throw game_file_error("payoff voter out of range", row.line);
            profile p = [&] {
                try {
                    return profile::parse(row.bits, s);
                } catch (const std::invalid_argument& e) {
                    throw game_file_error(e.what(), row.line);
                }
            }();
            deltas[row.voter - 1][p.code()] = row.value - full_default;
        }
        table = payoff_table::full(
            payoff_table::constant(std::vector<rational>(s.voters, full_default)),
            std::move(deltas));
    }

    game_document doc{aggregation_game(s, *rule, std::move(goals), std::move(table)),
                      names,
                      std::nullopt};
    if (constraint_text) {
        try {
            doc.constraint = parse_formula(*constraint_text, s.issues, names);
        } catch (const parse_error& e) {
            throw game_file_error(std::string("constraint: ") + e.what(), constraint_line);
        }
    }
    return doc;
}

game_document parse_game_text(const std::string& text) {
    std::istringstream is(text);
    return parse_game(is);
}

game_document load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open game file '" + path + "'");
    return parse_game(in);
}

std::string write_game(const game_document& doc, std::uint64_t cap) {
    const aggregation_game& g = doc.game;
    std::ostringstream os;
    os << "voters " << g.dims.voters << '\n';
    os << "issues " << g.dims.issues;
    for (const std::string& n : doc.issue_names) os << ' ' << n;
    os << '\n';

    os << "aggregator ";
    switch (g.rule.kind()) {
        case aggregator::rule::majority:
            os << "majority";
            break;
        case aggregator::rule::quota:
            os << "quota";
            for (int q : g.rule.thresholds()) os << ' ' << q;
            break;
        case aggregator::rule::explicit_family:
            os << "coalitions " << g.rule.family().to_string();
            break;
        case aggregator::rule::general_table:
            throw std::invalid_argument("write_game: general tables have no file form");
    }
    os << '\n';

    std::span<const std::string> names(doc.issue_names);
    for (int i = 0; i < g.dims.voters; ++i) {
        os << "goal " << (i + 1);
        if (!g.goals[i].is_cube()) os << " general";
        os << ' ' << g.goals[i].f.to_string(names) << '\n';
    }

    switch (g.payoffs.table_kind()) {
        case payoff_table::kind::constant: {
            os << "payoffs constant";
            for (const rational& v : g.payoffs.constant_values()) os << ' ' << v.to_string();
            os << '\n';
            break;
        }
        case payoff_table::kind::uniform: {
            os << "payoffs uniform\n";
            for (int i = 0; i < g.dims.voters; ++i)
                for (std::uint32_t o = 0; o < g.dims.ballot_space(); ++o) {
                    const rational& v = g.payoffs.uniform_values()[i][o];
                    if (!v.is_zero())
                        os << "payoff " << (i + 1) << ' ' << ballot(o, g.dims.issues).to_string()
                           << ' ' << v.to_string() << '\n';
                }
            break;
        }
        case payoff_table::kind::full: {
            check_cap(g.dims.profile_space(), cap);
            os << "payoffs full\n";
            for (int i = 0; i < g.dims.voters; ++i)
                for (std::uint64_t code = 0; code < g.dims.profile_space(); ++code) {
                    profile p(code, g.dims);
                    rational v = g.payoff(i, p);
                    if (!v.is_zero())
                        os << "payoff " << (i + 1) << ' ' << p.to_flat_string() << ' '
                           << v.to_string() << '\n';
                }
            break;
        }
    }

    if (doc.constraint) os << "constraint " << doc.constraint->to_string(names) << '\n';
    return os.str();
}

}  // namespace bvg
