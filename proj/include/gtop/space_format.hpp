#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gtop/errors.hpp"
#include "gtop/space.hpp"

namespace gtop {

/// Parsed form of an on-disk space description. The operation is kept in its
/// source form (rule or explicit table) so that rendering round-trips.
///
/// File grammar (UTF-8, line oriented, '#' starts a comment):
///
///   space Example1
///   points a b c
///   open {}
///   open {a}
///   ...
///   gamma rule intclosure            # or one "gamma {a} = {a c}" per open
///   end
///
/// Rules: identity | closure | intclosure | clintcl
///        | if-contains <point> then <rule> else <rule>
struct SpaceFile {
    Space space;
    std::optional<RuleExpr> rule;  // absent for explicit tables

    [[nodiscard]] bool operator==(const SpaceFile&) const = default;
};

namespace detail {

struct Token {
    enum class Kind { Word, Set, Equals };
    Kind kind;
    std::string word;                // Kind::Word
    std::vector<std::string> items;  // Kind::Set
};

inline std::vector<Token> tokenize_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        if (is_space(line[i])) {
            ++i;
        } else if (line[i] == '{') {
            Token t{Token::Kind::Set, {}, {}};
            ++i;
            std::string item;
            while (i < line.size() && line[i] != '}') {
                if (is_space(line[i])) {
                    if (!item.empty()) t.items.push_back(std::exchange(item, {}));
                } else {
                    item += line[i];
                }
                ++i;
            }
            if (i == line.size()) {
                throw ParseError(ParseError::Code::Syntax, lineno, "unterminated set literal");
            }
            ++i;  // past '}'
            if (!item.empty()) t.items.push_back(std::move(item));
            out.push_back(std::move(t));
        } else if (line[i] == '}') {
            throw ParseError(ParseError::Code::Syntax, lineno, "unmatched '}'");
        } else if (line[i] == '=') {
            out.push_back(Token{Token::Kind::Equals, {}, {}});
            ++i;
        } else {
            std::string word;
            while (i < line.size() && !is_space(line[i]) && line[i] != '{' && line[i] != '}' &&
                   line[i] != '=') {
                word += line[i];
                ++i;
            }
            out.push_back(Token{Token::Kind::Word, std::move(word), {}});
        }
    }
    return out;
}

struct RuleCursor {
    const std::vector<Token>* tokens;
    std::size_t pos;
    int lineno;

    const Token& next(const char* what) {
        if (pos >= tokens->size()) {
            throw ParseError(ParseError::Code::Syntax, lineno,
                             std::string("expected ") + what + " in gamma rule");
        }
        return (*tokens)[pos++];
    }
};

inline int point_index(const std::string& name, const std::vector<std::string>& points,
                       int lineno) {
    auto it = std::find(points.begin(), points.end(), name);
    if (it == points.end()) {
        throw ParseError(ParseError::Code::UnknownPoint, lineno, "unknown point '" + name + "'");
    }
    return static_cast<int>(it - points.begin());
}

inline RuleExpr parse_rule(RuleCursor& cur, const std::vector<std::string>& points) {
    const Token& t = cur.next("a rule");
    if (t.kind != Token::Kind::Word) {
        throw ParseError(ParseError::Code::Syntax, cur.lineno, "expected a rule name");
    }
    if (t.word == "identity") return RuleExpr::identity();
    if (t.word == "closure") return RuleExpr::closure_rule();
    if (t.word == "intclosure") return RuleExpr::int_closure();
    if (t.word == "clintcl") return RuleExpr::cl_int_cl();
    if (t.word == "if-contains") {
        const Token& p = cur.next("a point name");
        if (p.kind != Token::Kind::Word) {
            throw ParseError(ParseError::Code::Syntax, cur.lineno, "expected a point name");
        }
        const int pivot = point_index(p.word, points, cur.lineno);
        const Token& kw_then = cur.next("'then'");
        if (kw_then.kind != Token::Kind::Word || kw_then.word != "then") {
            throw ParseError(ParseError::Code::Syntax, cur.lineno, "expected 'then'");
        }
        RuleExpr then_rule = parse_rule(cur, points);
        const Token& kw_else = cur.next("'else'");
        if (kw_else.kind != Token::Kind::Word || kw_else.word != "else") {
            throw ParseError(ParseError::Code::Syntax, cur.lineno, "expected 'else'");
        }
        RuleExpr else_rule = parse_rule(cur, points);
        return RuleExpr::if_contains(pivot, std::move(then_rule), std::move(else_rule));
    }
    throw ParseError(ParseError::Code::Syntax, cur.lineno, "unknown rule '" + t.word + "'");
}

inline SubSet parse_set(const Token& t, const std::vector<std::string>& points, int lineno) {
    SubSet s = SubSet::empty_set(static_cast<int>(points.size()));
    for (const std::string& item : t.items) s = s.with(point_index(item, points, lineno));
    return s;
}

}  // namespace detail

/// Parses and fully validates one space description. Topology axioms and
/// operation expansiveness are checked; all diagnostics carry the 1-based
/// source line.
inline SpaceFile parse_space_file(const std::string& text) {
    using detail::Token;

    std::string name;
    std::vector<std::string> points;
    std::vector<SubSet> opens;
    std::optional<RuleExpr> rule;
    std::vector<std::pair<SubSet, SubSet>> table;
    bool seen_space = false, seen_points = false, seen_end = false;
    int end_line = 0;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<Token> toks = detail::tokenize_line(line, lineno);
        if (toks.empty()) continue;
        if (seen_end) {
            throw ParseError(ParseError::Code::Syntax, lineno, "content after 'end'");
        }
        if (toks[0].kind != Token::Kind::Word) {
            throw ParseError(ParseError::Code::Syntax, lineno, "expected a directive");
        }
        const std::string& head = toks[0].word;

        if (head == "space") {
            if (seen_space || toks.size() != 2 || toks[1].kind != Token::Kind::Word) {
                throw ParseError(ParseError::Code::Syntax, lineno, "expected one 'space <name>'");
            }
            seen_space = true;
            name = toks[1].word;
        } else if (head == "points") {
            if (!seen_space || seen_points || toks.size() < 2) {
                throw ParseError(ParseError::Code::Syntax, lineno, "expected 'points <p1> <p2> ...'");
            }
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].kind != Token::Kind::Word) {
                    throw ParseError(ParseError::Code::Syntax, lineno, "point names must be words");
                }
                if (std::find(points.begin(), points.end(), toks[i].word) != points.end()) {
                    throw ParseError(ParseError::Code::Syntax, lineno,
                                     "duplicate point '" + toks[i].word + "'");
                }
                points.push_back(toks[i].word);
            }
            if (points.size() > SubSet::max_carrier) {
                throw ParseError(ParseError::Code::Syntax, lineno, "more than 16 points");
            }
            seen_points = true;
        } else if (head == "open") {
            if (!seen_points || toks.size() != 2 || toks[1].kind != Token::Kind::Set) {
                throw ParseError(ParseError::Code::Syntax, lineno, "expected 'open {...}'");
            }
            opens.push_back(detail::parse_set(toks[1], points, lineno));
        } else if (head == "gamma") {
            if (!seen_points || toks.size() < 2) {
                throw ParseError(ParseError::Code::Syntax, lineno, "expected a gamma directive");
            }
            if (toks[1].kind == Token::Kind::Word && toks[1].word == "rule") {
                if (rule || !table.empty()) {
                    throw ParseError(ParseError::Code::Syntax, lineno,
                                     "operation already specified");
                }
                detail::RuleCursor cur{&toks, 2, lineno};
                rule = detail::parse_rule(cur, points);
                if (cur.pos != toks.size()) {
                    throw ParseError(ParseError::Code::Syntax, lineno,
                                     "trailing tokens after rule");
                }
            } else if (toks[1].kind == Token::Kind::Set) {
                if (rule) {
                    throw ParseError(ParseError::Code::Syntax, lineno,
                                     "operation already specified as a rule");
                }
                if (toks.size() != 4 || toks[2].kind != Token::Kind::Equals ||
                    toks[3].kind != Token::Kind::Set) {
                    throw ParseError(ParseError::Code::Syntax, lineno,
                                     "expected 'gamma {...} = {...}'");
                }
                table.emplace_back(detail::parse_set(toks[1], points, lineno),
                                   detail::parse_set(toks[3], points, lineno));
            } else {
                throw ParseError(ParseError::Code::Syntax, lineno,
                                 "expected 'gamma rule <rule>' or 'gamma {...} = {...}'");
            }
        } else if (head == "end") {
            if (toks.size() != 1) {
                throw ParseError(ParseError::Code::Syntax, lineno, "unexpected tokens after 'end'");
            }
            seen_end = true;
            end_line = lineno;
        } else {
            throw ParseError(ParseError::Code::Syntax, lineno, "unknown directive '" + head + "'");
        }
    }
    if (!seen_space || !seen_points || !seen_end) {
        throw ParseError(ParseError::Code::Syntax, lineno,
                         "incomplete space description (need space/points/.../end)");
    }
    if (!rule && table.empty()) {
        throw ParseError(ParseError::Code::OperationInvalid, end_line, "no gamma operation given");
    }

    const int n = static_cast<int>(points.size());
    try {
        Topology topology(SetFamily(n, std::move(opens)), points);
        OperationTable gamma = rule ? OperationTable::from_rule(topology, *rule)
                                    : OperationTable(topology, std::move(table));
        return SpaceFile{Space(std::move(topology), std::move(gamma), name), rule};
    } catch (const TopologyError& e) {
        throw ParseError(ParseError::Code::TopologyInvalid, end_line, e.what());
    } catch (const OperationError& e) {
        throw ParseError(ParseError::Code::OperationInvalid, end_line, e.what());
    }
}

/// Canonical rendering; parse(render(f)) == f for every parsed f.
inline std::string render_space_file(const SpaceFile& f) {
    const Topology& t = f.space.topology;
    std::string out = "space " + (f.space.name.empty() ? std::string("unnamed") : f.space.name) + "\n";
    out += "points";
    for (const std::string& p : t.point_names()) out += " " + p;
    out += "\n";
    for (SubSet o : t.opens()) out += "open " + t.set_to_string(o) + "\n";
    if (f.rule) {
        out += "gamma rule " + f.rule->to_string(t.point_names()) + "\n";
    } else {
        for (const auto& [open, value] : f.space.gamma.entries()) {
            out += "gamma " + t.set_to_string(open) + " = " + t.set_to_string(value) + "\n";
        }
    }
    out += "end\n";
    return out;
}

}  // namespace gtop
