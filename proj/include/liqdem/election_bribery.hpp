#pragma once

// Election bribery: edit up to k arcs (or the out-neighborhoods of up to k
// agents) of an election graph so that the target wins in one/in all
// delegations. NP-hard even for two alternatives, so the solvers are exact
// enumerative searches with iterative deepening on the edit cost. The
// restricted mode searches the edit space the problem structure justifies
// (additions straight to the target for One, deletions plus forced
// compensations for All); the exhaustive mode searches arc edits at large.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liqdem/graph.hpp"
#include "liqdem/reach.hpp"
#include "liqdem/voting.hpp"
#include "liqdem/winner.hpp"

namespace liqdem {

enum class Quantifier { one, all };
enum class CostModel { arcs, agents };
enum class Goal { constructive, destructive };
enum class SearchMode { restricted, exhaustive };

/// Arc edits against a fixed election graph: additions must be absent from
/// it, deletions present, and the edited graph must again be a valid election
/// graph with the same sink set.
struct EditSet {
    std::vector<Arc> additions;
    std::vector<Arc> deletions;

    long long arc_cost() const {
        return static_cast<long long>(additions.size() + deletions.size());
    }
    /// Number of distinct agents whose out-arc set changes.
    long long agent_cost() const {
        std::vector<Vertex> tails;
        for (const Arc& a : additions) tails.push_back(a.tail);
        for (const Arc& a : deletions) tails.push_back(a.tail);
        std::sort(tails.begin(), tails.end());
        tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
        return static_cast<long long>(tails.size());
    }
    long long cost(CostModel m) const { return m == CostModel::arcs ? arc_cost() : agent_cost(); }
    bool empty() const { return additions.empty() && deletions.empty(); }

    friend bool operator==(const EditSet&, const EditSet&) = default;
};

/// Applies the edits and revalidates; returns nullopt with a message when the
/// result is not a valid election graph with unchanged sinks.
inline std::optional<ElectionGraph> try_apply_edits(const ElectionGraph& g, const EditSet& e,
                                                    std::string* err = nullptr) {
    auto adj = g.adjacency_copy();
    for (const Arc& a : e.deletions) {
        if (a.tail < 0 || a.tail >= g.vertex_count() || !g.has_arc(a.tail, a.head)) {
            if (err) *err = "deletion of a non-existent arc";
            return std::nullopt;
        }
        auto& s = adj[static_cast<std::size_t>(a.tail)];
        s.erase(std::find(s.begin(), s.end(), a.head));
    }
    for (const Arc& a : e.additions) {
        if (a.tail < 0 || a.tail >= g.vertex_count() || a.head < 0 || a.head >= g.vertex_count()) {
            if (err) *err = "addition with unknown endpoint";
            return std::nullopt;
        }
        if (g.has_arc(a.tail, a.head)) {
            if (err) *err = "addition of an arc already present";
            return std::nullopt;
        }
        adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
    }
    return ElectionGraph::try_build(g.universe_ptr(), std::move(adj), err);
}

inline ElectionGraph apply_edits(const ElectionGraph& g, const EditSet& e) {
    std::string err;
    auto out = try_apply_edits(g, e, &err);
    if (!out) throw std::invalid_argument("apply_edits: " + err);
    return std::move(*out);
}

struct BriberyQuery {
    Vertex target = no_vertex;
    long long budget = 0;
    VotingRule rule = VotingRule::majority();
    Quantifier quantifier = Quantifier::one;
    CostModel cost_model = CostModel::arcs;
    Goal goal = Goal::constructive;
    SearchMode mode = SearchMode::restricted;
    SearchOptions search;
};

struct BriberyResult {
    SearchStatus status = SearchStatus::no;
    std::optional<EditSet> edits;   // minimum-cost solution on yes
    bool yes() const { return status == SearchStatus::yes; }
};

namespace detail {

inline long long rev_agent_count(const ElectionGraph& g, Vertex s, ReachScratch& sc) {
    ElectionView view{&g};
    Vertex src[1] = {s};
    mark_reachers(view, src, sc);
    return count_agents(view, sc);
}

inline long long res_agent_count(const ElectionGraph& g, Vertex s, ReachScratch& a, ReachScratch& b) {
    ElectionView view{&g};
    mark_res_reachers(view, s, a, b);
    return count_agents(view, b);
}

// Decides "s is a rule winner in one/all delegations of g" without building
// certificates. Only Plurality-One with three or more alternatives needs the
// exponential search; with two alternatives plurality and majority coincide.
inline SearchStatus winner_query_holds(const ElectionGraph& g, Vertex s, const VotingRule& rule,
                                       Quantifier quant, const SearchOptions& opt) {
    const long long n = g.agent_count();
    ReachScratch sa, sb;
    if (rule.is_majority()) {
        long long votes = quant == Quantifier::one ? rev_agent_count(g, s, sa)
                                                   : res_agent_count(g, s, sa, sb);
        return rule.majority_satisfied(votes, n) ? SearchStatus::yes : SearchStatus::no;
    }
    if (quant == Quantifier::all) {
        long long lo = res_agent_count(g, s, sa, sb);
        for (Vertex a : g.alternatives()) {
            if (a == s) continue;
            if (rev_agent_count(g, a, sa) > lo) return SearchStatus::no;
        }
        return SearchStatus::yes;
    }
    if (g.alternatives().size() <= 1) return SearchStatus::yes;
    if (g.alternatives().size() == 2) {
        long long hi = rev_agent_count(g, s, sa);
        return 2 * hi >= n ? SearchStatus::yes : SearchStatus::no;
    }
    return one_plurality(g, s, opt).status;
}

inline SearchStatus bribery_goal_holds(const ElectionGraph& g, const BriberyQuery& q) {
    SearchStatus r = winner_query_holds(g, q.target, q.rule, q.quantifier, q.search);
    if (q.goal == Goal::constructive || r == SearchStatus::budget_exhausted) return r;
    // Destructive: prevent the target from being a one/all winner.
    return r == SearchStatus::yes ? SearchStatus::no : SearchStatus::yes;
}

// Lexicographic combination walker: calls fn with each size-m index
// combination from [0, total); fn returns true to stop.
template <class F>
bool for_each_combination(std::size_t total, std::size_t m, F fn) {
    if (m > total) return false;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        if (m == 0) return false;
        std::size_t i = m;
        while (i-- > 0) {
            if (idx[i] + (m - i) < total) {
                ++idx[i];
                for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

struct BriberyScan {
    const ElectionGraph& g;
    const BriberyQuery& q;
    std::optional<EditSet> hit;
    bool exhausted_budget = false;

    // Returns true (stop scanning) when the candidate decides the level.
    bool consider(const EditSet& e) {
        std::string err;
        auto edited = try_apply_edits(g, e, &err);
        if (!edited) return false;
        SearchStatus r = bribery_goal_holds(*edited, q);
        if (r == SearchStatus::budget_exhausted) {
            exhausted_budget = true;
            return true;
        }
        if (r == SearchStatus::yes) {
            hit = e;
            return true;
        }
        return false;
    }
};

// Restricted One: subsets of direct additions (v, target).
inline void scan_restricted_one(BriberyScan& scan, long long cost) {
    const ElectionGraph& g = scan.g;
    std::vector<Vertex> cands;
    for (Vertex v : g.agents())
        if (!g.has_arc(v, scan.q.target)) cands.push_back(v);
    for_each_combination(cands.size(), static_cast<std::size_t>(cost), [&](const std::vector<std::size_t>& idx) {
        EditSet e;
        for (std::size_t i : idx) e.additions.push_back({cands[i], scan.q.target});
        return scan.consider(e);
    });
}

// Restricted All: subsets of arc deletions; an agent losing every out-arc
// gets a compensating arc to the target. Cost is counted under the query's
// model and must hit the level exactly.
inline void scan_restricted_all(BriberyScan& scan, long long cost) {
    const ElectionGraph& g = scan.g;
    std::vector<Arc> arcs;
    for (Vertex v : g.agents())
        for (Vertex w : g.successors(v)) arcs.push_back({v, w});
    const long long max_del = std::min<long long>(cost == 0 ? 0 : static_cast<long long>(arcs.size()), cost);
    for (long long m = (cost == 0 ? 0 : 1); m <= max_del; ++m) {
        bool stop = for_each_combination(arcs.size(), static_cast<std::size_t>(m),
                                         [&](const std::vector<std::size_t>& idx) {
            EditSet e;
            std::vector<long long> deleted(static_cast<std::size_t>(g.vertex_count()), 0);
            for (std::size_t i : idx) {
                e.deletions.push_back(arcs[i]);
                deleted[static_cast<std::size_t>(arcs[i].tail)]++;
            }
            for (std::size_t i : idx) {
                Vertex t = arcs[i].tail;
                if (deleted[static_cast<std::size_t>(t)] != g.out_degree(t)) continue;
                deleted[static_cast<std::size_t>(t)] = 0;   // emit one compensation per agent
                if (g.has_arc(t, scan.q.target)) return false;   // deleting and re-adding is a no-op
                e.additions.push_back({t, scan.q.target});
            }
            if (e.cost(scan.q.cost_model) != cost) return false;
            return scan.consider(e);
        });
        if (stop) return;
        if (cost == 0) break;
    }
}

// Exhaustive, arc cost: combinations of single arc edits (deletions first,
// then additions, each ordered by tail then head).
inline void scan_exhaustive_arcs(BriberyScan& scan, long long cost) {
    const ElectionGraph& g = scan.g;
    struct Edit {
        bool add;
        Arc arc;
    };
    std::vector<Edit> edits;
    for (Vertex v : g.agents())
        for (Vertex w : g.successors(v)) edits.push_back({false, {v, w}});
    for (Vertex v : g.agents())
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (w != v && !g.has_arc(v, w)) edits.push_back({true, {v, w}});
    for_each_combination(edits.size(), static_cast<std::size_t>(cost), [&](const std::vector<std::size_t>& idx) {
        EditSet e;
        for (std::size_t i : idx)
            (edits[i].add ? e.additions : e.deletions).push_back(edits[i].arc);
        return scan.consider(e);
    });
}

// Exhaustive, agent cost: choose the bribed agents, then rewrite each one's
// out-neighborhood as any subset of its original arcs plus at most one new
// arc. Extra simultaneous additions from one agent only widen the delegation
// space and never change any answer, so they are not enumerated; the
// unrestricted oracle cross-checks this.
inline void scan_exhaustive_agents(BriberyScan& scan, long long cost) {
    const ElectionGraph& g = scan.g;
    struct Option {
        unsigned keep_mask;   // bit i set = keep i-th original successor
        Vertex add;           // no_vertex = none
    };
    const auto& agents = g.agents();
    std::vector<std::vector<Option>> options(agents.size());
    for (std::size_t ai = 0; ai < agents.size(); ++ai) {
        Vertex v = agents[ai];
        auto succ = g.successors(v);
        const unsigned full = (1u << succ.size()) - 1u;
        std::vector<Vertex> targets;
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (w != v && !g.has_arc(v, w)) targets.push_back(w);
        for (unsigned mask = 0; mask <= full; ++mask)
            if (mask != full) options[ai].push_back({mask, no_vertex});
        for (Vertex w : targets)
            for (unsigned mask = 0; mask <= full; ++mask) options[ai].push_back({mask, w});
        // empty rewrites (mask 0, no addition) are invalid and rejected by apply
    }
    for_each_combination(agents.size(), static_cast<std::size_t>(cost), [&](const std::vector<std::size_t>& idx) {
        // product over the chosen agents' options
        std::vector<std::size_t> pick(idx.size(), 0);
        while (true) {
            EditSet e;
            for (std::size_t j = 0; j < idx.size(); ++j) {
                Vertex v = agents[idx[j]];
                const Option& o = options[idx[j]][pick[j]];
                auto succ = g.successors(v);
                for (std::size_t b = 0; b < succ.size(); ++b)
                    if (!(o.keep_mask & (1u << b))) e.deletions.push_back({v, succ[b]});
                if (o.add != no_vertex) e.additions.push_back({v, o.add});
            }
            if (e.cost(CostModel::agents) == cost && scan.consider(e)) return true;
            std::size_t j = idx.size();
            while (j-- > 0) {
                if (++pick[j] < options[idx[j]].size()) break;
                pick[j] = 0;
                if (j == 0) return false;
            }
            if (idx.empty()) return false;
        }
    });
}

}   // namespace detail

/// Minimum-cost edit set making the query hold, searched by iterative
/// deepening on cost; absent when impossible within the budget.
inline BriberyResult solve_election_bribery(const ElectionGraph& g, const BriberyQuery& q) {
    detail::require_alternative(g, q.target, "solve_election_bribery");
    if (q.budget < 0) throw std::invalid_argument("solve_election_bribery: negative budget");
    if (q.rule.kind == VotingRule::Kind::plurality && q.rule.threshold)
        throw std::invalid_argument("solve_election_bribery: threshold requires majority rule");
    if (q.goal == Goal::destructive && q.mode == SearchMode::restricted)
        throw std::invalid_argument("solve_election_bribery: destructive goals require exhaustive mode");

    for (long long cost = 0; cost <= q.budget; ++cost) {
        detail::BriberyScan scan{g, q, std::nullopt, false};
        if (cost == 0) {
            scan.consider(EditSet{});
        } else if (q.mode == SearchMode::restricted) {
            if (q.quantifier == Quantifier::one) detail::scan_restricted_one(scan, cost);
            else detail::scan_restricted_all(scan, cost);
        } else if (q.cost_model == CostModel::arcs) {
            detail::scan_exhaustive_arcs(scan, cost);
        } else {
            detail::scan_exhaustive_agents(scan, cost);
        }
        if (scan.exhausted_budget) return {SearchStatus::budget_exhausted, std::nullopt};
        if (scan.hit) return {SearchStatus::yes, std::move(scan.hit)};
    }
    return {SearchStatus::no, std::nullopt};
}

}   // namespace liqdem
