#pragma once

// Line-oriented text formats. Instances: one `alts:` line, then one
// `agent <name> -> <target> [<target> ...]` line per agent; `#` starts a
// comment. Delegations use the same format with exactly one target. Edits are
// `+ u v` / `- u v` lines, bribes are `bribe <agent> -> <target>` lines.
// Serialization is canonical (everything in name order), so
// parse(serialize(g)) == g and serialization is idempotent.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liqdem/delegation_bribery.hpp"
#include "liqdem/election_bribery.hpp"
#include "liqdem/graph.hpp"

namespace liqdem {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

inline void check_name(const std::string& token, int line) {
    if (!token_ok(token)) throw ParseError(line, "invalid name '" + token + "'");
}

}   // namespace detail

/// Syntax-level parse of an instance file. Unknown names, duplicate
/// declarations, and malformed lines are reported with their line number;
/// semantic checks are left to validate_election_graph.
inline RawGraph parse_raw_instance(std::string_view text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing alts line");
    RawGraph raw;
    bool have_alts = false;
    std::vector<std::pair<std::string, int>> declared;   // name, line
    struct AgentLine {
        int line;
        std::vector<std::string> targets;
    };
    std::vector<AgentLine> agent_lines;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "alts:") {
            if (have_alts) throw ParseError(line.number, "duplicate alts line");
            have_alts = true;
            for (std::size_t i = 1; i < t.size(); ++i) {
                detail::check_name(t[i], line.number);
                raw.alternatives.push_back(t[i]);
                declared.push_back({t[i], line.number});
            }
        } else if (t[0] == "agent") {
            if (!have_alts) throw ParseError(line.number, "missing alts line");
            if (t.size() < 4 || t[2] != "->")
                throw ParseError(line.number, "expected: agent <name> -> <target> [<target> ...]");
            detail::check_name(t[1], line.number);
            raw.agent_arcs.push_back({t[1], {t.begin() + 3, t.end()}});
            declared.push_back({t[1], line.number});
            agent_lines.push_back({line.number, {t.begin() + 3, t.end()}});
            for (std::size_t i = 3; i < t.size(); ++i) detail::check_name(t[i], line.number);
        } else {
            throw ParseError(line.number, "unrecognized line '" + t[0] + "'");
        }
    }
    if (!have_alts) throw ParseError(lines.front().number, "missing alts line");
    std::vector<std::string> names;
    for (auto& [n, ln] : declared) names.push_back(n);
    std::sort(names.begin(), names.end());
    {
        std::vector<std::pair<std::string, int>> sorted = declared;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i].first == sorted[i - 1].first)
                throw ParseError(std::max(sorted[i].second, sorted[i - 1].second),
                                 "duplicate declaration of '" + sorted[i].first + "'");
    }
    for (const auto& al : agent_lines)
        for (const auto& target : al.targets)
            if (!std::binary_search(names.begin(), names.end(), target))
                throw ParseError(al.line, "unknown name '" + target + "'");
    return raw;
}

/// Parse plus full validation; throws ParseError or std::invalid_argument.
inline ElectionGraph parse_instance(std::string_view text) {
    auto raw = parse_raw_instance(text);
    auto res = validate_election_graph(raw);
    if (!res.report.ok) {
        std::string msg = "invalid instance";
        for (const auto& v : res.report.violations)
            msg += "\n  [" + std::string(violation_code_name(v.code)) + "] " + v.subject + ": " + v.message;
        throw std::invalid_argument(msg);
    }
    return std::move(*res.graph);
}

inline std::string serialize_instance(const ElectionGraph& g) {
    std::ostringstream out;
    out << "alts:";
    for (Vertex a : g.alternatives()) out << ' ' << g.name(a);
    out << '\n';
    for (Vertex v : g.agents()) {
        out << "agent " << g.name(v) << " ->";
        for (Vertex w : g.successors(v)) out << ' ' << g.name(w);
        out << '\n';
    }
    return out.str();
}

inline DelegationGraph parse_delegation(std::string_view text) {
    auto raw = parse_raw_instance(text);
    for (const auto& [agent, targets] : raw.agent_arcs)
        if (targets.size() != 1)
            throw std::invalid_argument("delegation file: agent " + agent + " must have exactly one target");
    auto res = validate_election_graph(raw);
    if (!res.report.ok) {
        std::string msg = "invalid delegation";
        for (const auto& v : res.report.violations)
            msg += "\n  [" + std::string(violation_code_name(v.code)) + "] " + v.subject + ": " + v.message;
        throw std::invalid_argument(msg);
    }
    const ElectionGraph& g = *res.graph;
    std::vector<Vertex> choice(static_cast<std::size_t>(g.vertex_count()), no_vertex);
    for (Vertex v : g.agents()) choice[static_cast<std::size_t>(v)] = g.successors(v)[0];
    return DelegationGraph(g.universe_ptr(), std::move(choice));
}

inline std::string serialize_delegation(const DelegationGraph& d) {
    std::ostringstream out;
    out << "alts:";
    for (Vertex a : d.alternatives()) out << ' ' << d.name(a);
    out << '\n';
    for (Vertex v : d.agents())
        out << "agent " << d.name(v) << " -> " << d.name(d.choice(v)) << '\n';
    return out.str();
}

/// Edit files are validated against the instance they refer to: additions
/// must be absent from it, deletions present.
inline EditSet parse_edits(std::string_view text, const ElectionGraph& ref) {
    EditSet e;
    for (const auto& line : detail::tokenize(text)) {
        const auto& t = line.tokens;
        if (t.size() != 3 || (t[0] != "+" && t[0] != "-"))
            throw ParseError(line.number, "expected: + <tail> <head> or - <tail> <head>");
        Vertex tail = ref.find(t[1]), head = ref.find(t[2]);
        if (tail == no_vertex) throw ParseError(line.number, "unknown name '" + t[1] + "'");
        if (head == no_vertex) throw ParseError(line.number, "unknown name '" + t[2] + "'");
        bool present = ref.has_arc(tail, head);
        if (t[0] == "+") {
            if (present) throw ParseError(line.number, "added arc already exists in the instance");
            e.additions.push_back({tail, head});
        } else {
            if (!present) throw ParseError(line.number, "deleted arc does not exist in the instance");
            e.deletions.push_back({tail, head});
        }
    }
    std::sort(e.additions.begin(), e.additions.end());
    std::sort(e.deletions.begin(), e.deletions.end());
    return e;
}

inline std::string serialize_edits(const EditSet& e, const ElectionGraph& ref) {
    auto sorted = e;
    std::sort(sorted.additions.begin(), sorted.additions.end());
    std::sort(sorted.deletions.begin(), sorted.deletions.end());
    std::ostringstream out;
    for (const Arc& a : sorted.deletions) out << "- " << ref.name(a.tail) << ' ' << ref.name(a.head) << '\n';
    for (const Arc& a : sorted.additions) out << "+ " << ref.name(a.tail) << ' ' << ref.name(a.head) << '\n';
    return out.str();
}

inline BribeSet parse_bribes(std::string_view text, const DelegationGraph& ref) {
    BribeSet b;
    for (const auto& line : detail::tokenize(text)) {
        const auto& t = line.tokens;
        if (t.size() != 4 || t[0] != "bribe" || t[2] != "->")
            throw ParseError(line.number, "expected: bribe <agent> -> <target>");
        Vertex agent = ref.find(t[1]), target = ref.find(t[3]);
        if (agent == no_vertex || ref.is_alternative(agent))
            throw ParseError(line.number, "'" + t[1] + "' is not an agent of the instance");
        if (target == no_vertex) throw ParseError(line.number, "unknown name '" + t[3] + "'");
        if (target == agent) throw ParseError(line.number, "agent cannot delegate to itself");
        b.rewires.push_back({agent, target});
    }
    std::sort(b.rewires.begin(), b.rewires.end());
    for (std::size_t i = 1; i < b.rewires.size(); ++i)
        if (b.rewires[i].first == b.rewires[i - 1].first)
            throw ParseError(0, "agent '" + ref.name(b.rewires[i].first) + "' bribed twice");
    return b;
}

inline std::string serialize_bribes(const BribeSet& b, const DelegationGraph& ref) {
    auto sorted = b.rewires;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    for (auto [agent, target] : sorted)
        out << "bribe " << ref.name(agent) << " -> " << ref.name(target) << '\n';
    return out.str();
}

}   // namespace liqdem
