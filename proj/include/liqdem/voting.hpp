#pragma once

// Voting rules and per-delegation evaluation: voting power, winner sets, and
// the delegation-subgraph relation. Majority comparisons stay in integers;
// the default rule is 2*vp(s) >= |agents|, the threshold variant is vp >= t.

#include <optional>
#include <stdexcept>
#include <vector>

#include "liqdem/graph.hpp"

namespace liqdem {

struct VotingRule {
    enum class Kind { majority, plurality };
    Kind kind = Kind::majority;
    std::optional<long long> threshold;   // majority only

    static VotingRule majority() { return {Kind::majority, std::nullopt}; }
    static VotingRule majority_with_threshold(long long t) {
        if (t < 0) throw std::invalid_argument("majority threshold must be non-negative");
        return {Kind::majority, t};
    }
    static VotingRule plurality() { return {Kind::plurality, std::nullopt}; }

    bool is_majority() const { return kind == Kind::majority; }

    /// Majority test for a single vote count; plurality needs the whole
    /// vote vector and is handled by winner_set.
    bool majority_satisfied(long long votes, long long n_agents) const {
        if (kind != Kind::majority) throw std::logic_error("majority_satisfied on plurality rule");
        return threshold ? votes >= *threshold : 2 * votes >= n_agents;
    }
};

/// Voting power of every vertex: for agents, the size of the subtree
/// delegating to them (including themselves); for alternatives, the number of
/// agents whose vote arrives there. One pass over the delegation forest.
inline std::vector<long long> voting_power(const DelegationGraph& d) {
    const int n = d.vertex_count();
    std::vector<long long> vp(static_cast<std::size_t>(n), 0);
    // Level order from the alternatives; accumulating deepest-first makes
    // every child finished before its parent.
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Vertex a : d.alternatives()) order.push_back(a);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex c : d.children(order[i])) order.push_back(c);
    for (std::size_t i = order.size(); i-- > 0;) {
        Vertex v = order[i];
        long long own = d.is_alternative(v) ? 0 : 1;
        for (Vertex c : d.children(v)) own += vp[static_cast<std::size_t>(c)];
        vp[static_cast<std::size_t>(v)] = own;
    }
    return vp;
}

/// Alternatives satisfying the rule in delegation d; may be empty under
/// majority and may contain several on ties.
inline std::vector<Vertex> winner_set(const DelegationGraph& d, const VotingRule& rule) {
    auto vp = voting_power(d);
    std::vector<Vertex> winners;
    if (rule.kind == VotingRule::Kind::majority) {
        const long long n_agents = d.agent_count();
        for (Vertex a : d.alternatives())
            if (rule.majority_satisfied(vp[static_cast<std::size_t>(a)], n_agents)) winners.push_back(a);
    } else {
        long long best = 0;
        for (Vertex a : d.alternatives()) best = std::max(best, vp[static_cast<std::size_t>(a)]);
        for (Vertex a : d.alternatives())
            if (vp[static_cast<std::size_t>(a)] == best) winners.push_back(a);
    }
    return winners;
}

/// True iff every chosen arc exists in g and the sink sets coincide.
/// Throws if the vertex sets differ.
inline bool is_delegation_subgraph(const DelegationGraph& d, const ElectionGraph& g) {
    if (!d.universe().same_vertices(g.universe()))
        throw std::invalid_argument("is_delegation_subgraph: vertex sets differ");
    if (!(d.universe() == g.universe())) return false;   // same names, different sink sets
    for (Vertex v : g.agents())
        if (!g.has_arc(v, d.choice(v))) return false;
    return true;
}

/// The alternative each vertex's vote ultimately reaches (alternatives map to
/// themselves).
inline std::vector<Vertex> resolved_sinks(const DelegationGraph& d) {
    const int n = d.vertex_count();
    std::vector<Vertex> sink(static_cast<std::size_t>(n), no_vertex);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Vertex a : d.alternatives()) {
        sink[static_cast<std::size_t>(a)] = a;
        order.push_back(a);
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex c : d.children(order[i])) {
            sink[static_cast<std::size_t>(c)] = sink[static_cast<std::size_t>(order[i])];
            order.push_back(c);
        }
    return sink;
}

}   // namespace liqdem
