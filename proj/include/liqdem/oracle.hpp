#pragma once

// Ground-truth brute force for small instances: enumerate all delegation
// subgraphs, all edit sets, and all bribe sets, and answer every decision
// problem by exhaustion. Exists to be obviously correct; every fast module is
// property-tested against it. Instances beyond the configured limits are
// rejected loudly rather than truncated.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liqdem/delegation_bribery.hpp"
#include "liqdem/election_bribery.hpp"
#include "liqdem/graph.hpp"
#include "liqdem/voting.hpp"

namespace liqdem {

struct OracleLimits {
    unsigned long long max_delegations = 1ull << 22;
    unsigned long long max_candidates = 1ull << 22;
};

class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline unsigned long long capped_choice_product(const ElectionGraph& g, unsigned long long cap) {
    unsigned long long product = 1;
    for (Vertex v : g.agents()) {
        product *= static_cast<unsigned long long>(g.out_degree(v));
        if (product > cap) return cap + 1;
    }
    return product;
}

}   // namespace detail

/// Visits every delegation subgraph of g exactly once, in lexicographic order
/// of the per-agent choice map. The visitor returns false to stop early.
/// Returns the number of delegations visited.
inline unsigned long long enumerate_delegations(const ElectionGraph& g,
                                                const std::function<bool(const DelegationGraph&)>& visit,
                                                const OracleLimits& limits = {}) {
    if (detail::capped_choice_product(g, limits.max_delegations) > limits.max_delegations)
        throw OracleLimitError("instance too large for oracle: too many choice combinations");
    std::vector<Vertex> branch;
    std::vector<Vertex> choice(static_cast<std::size_t>(g.vertex_count()), no_vertex);
    for (Vertex v : g.agents()) {
        if (g.out_degree(v) == 1) choice[static_cast<std::size_t>(v)] = g.successors(v)[0];
        else branch.push_back(v);
    }
    // An assignment u -> w closes a cycle iff the chain of already fixed
    // choices from w leads back to u.
    auto closes_cycle = [&](Vertex u, Vertex w) {
        Vertex cur = w;
        while (cur != no_vertex) {
            if (cur == u) return true;
            cur = choice[static_cast<std::size_t>(cur)];
        }
        return false;
    };
    unsigned long long count = 0;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (stop) return;
        if (depth == branch.size()) {
            // Forced single arcs can still close cycles; the full choice map
            // is functional and cycle-free here only if the walk says so.
            ++count;
            if (!visit(DelegationGraph::from_valid_choices(g.universe_ptr(), choice))) stop = true;
            return;
        }
        Vertex v = branch[depth];
        for (Vertex w : g.successors(v)) {
            if (closes_cycle(v, w)) continue;
            choice[static_cast<std::size_t>(v)] = w;
            self(self, depth + 1);
            choice[static_cast<std::size_t>(v)] = no_vertex;
            if (stop) return;
        }
    };
    // Pre-fixed single-choice agents may already form a cycle among
    // themselves only if the graph were invalid, which construction excludes.
    rec(rec, 0);
    return count;
}

/// Exact answer to "is s a rule winner in one/all delegations" by full
/// enumeration.
inline bool oracle_winner(const ElectionGraph& g, Vertex s, const VotingRule& rule, Quantifier quant,
                          const OracleLimits& limits = {}) {
    if (s < 0 || s >= g.vertex_count() || !g.is_alternative(s))
        throw std::invalid_argument("oracle_winner: target is not an alternative");
    bool found = false;
    if (quant == Quantifier::one) {
        enumerate_delegations(g, [&](const DelegationGraph& d) {
            auto w = winner_set(d, rule);
            if (std::binary_search(w.begin(), w.end(), s)) {
                found = true;
                return false;
            }
            return true;
        }, limits);
        return found;
    }
    bool all = true;
    enumerate_delegations(g, [&](const DelegationGraph& d) {
        auto w = winner_set(d, rule);
        if (!std::binary_search(w.begin(), w.end(), s)) {
            all = false;
            return false;
        }
        return true;
    }, limits);
    return all;
}

namespace detail {

inline bool oracle_goal_holds(const ElectionGraph& g, const BriberyQuery& q, const OracleLimits& limits) {
    bool wins = oracle_winner(g, q.target, q.rule, q.quantifier, limits);
    // destructive: prevent the target from being a one/all winner
    return q.goal == Goal::constructive ? wins : !wins;
}

}   // namespace detail

/// Exact minimum-cost election bribery by enumerating every valid edit set of
/// cost at most k, unrestricted: any arc deletions and additions under the
/// arc model, any out-neighborhood rewrites of the bribed agents under the
/// agent model.
inline std::optional<EditSet> oracle_election_bribery(const ElectionGraph& g, const BriberyQuery& q,
                                                      const OracleLimits& limits = {}) {
    if (q.target < 0 || q.target >= g.vertex_count() || !g.is_alternative(q.target))
        throw std::invalid_argument("oracle_election_bribery: target is not an alternative");
    if (q.budget < 0) throw std::invalid_argument("oracle_election_bribery: negative budget");

    std::optional<EditSet> hit;
    auto consider = [&](const EditSet& e) {
        auto edited = try_apply_edits(g, e);
        if (!edited) return false;
        if (detail::oracle_goal_holds(*edited, q, limits)) {
            hit = e;
            return true;
        }
        return false;
    };

    if (q.cost_model == CostModel::arcs) {
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
        unsigned long long total = 1, level = 1;
        for (long long c = 1; c <= q.budget; ++c) {
            level *= edits.empty() ? 1 : edits.size();
            total += level;
            if (total > limits.max_candidates)
                throw OracleLimitError("instance too large for oracle: too many edit sets");
        }
        for (long long c = 0; c <= q.budget && !hit; ++c) {
            detail::for_each_combination(edits.size(), static_cast<std::size_t>(c),
                                         [&](const std::vector<std::size_t>& idx) {
                EditSet e;
                for (std::size_t i : idx)
                    (edits[i].add ? e.additions : e.deletions).push_back(edits[i].arc);
                return consider(e);
            });
        }
        return hit;
    }

    // Agent cost model: each bribed agent receives an arbitrary new out-arc
    // set (any non-empty subset of the other vertices, different from the
    // original one).
    const auto& agents = g.agents();
    const int n = g.vertex_count();
    if (n > 20) throw OracleLimitError("instance too large for oracle: agent-model rewrites");
    const unsigned long long per_agent = n > 1 ? (1ull << (n - 1)) - 1 : 1;
    unsigned long long total = 1;
    for (long long c = 0; c < q.budget && c < static_cast<long long>(agents.size()); ++c) {
        total *= static_cast<unsigned long long>(agents.size()) * per_agent;
        if (total > limits.max_candidates)
            throw OracleLimitError("instance too large for oracle: too many rewrites");
    }
    for (long long c = 0; c <= q.budget && !hit; ++c) {
        detail::for_each_combination(agents.size(), static_cast<std::size_t>(c),
                                     [&](const std::vector<std::size_t>& idx) {
            // Every agent's new out-set is encoded as a bitmask over the
            // other vertices in name order.
            std::vector<std::vector<Vertex>> targets(idx.size());
            std::vector<unsigned long long> mask(idx.size(), 1);
            for (std::size_t j = 0; j < idx.size(); ++j)
                for (Vertex w = 0; w < n; ++w)
                    if (w != agents[idx[j]]) targets[j].push_back(w);
            while (true) {
                EditSet e;
                bool changed_all = true;
                for (std::size_t j = 0; j < idx.size(); ++j) {
                    Vertex v = agents[idx[j]];
                    bool changed = false;
                    for (std::size_t b = 0; b < targets[j].size(); ++b) {
                        Vertex w = targets[j][b];
                        bool want = (mask[j] >> b) & 1;
                        bool have = g.has_arc(v, w);
                        if (want && !have) e.additions.push_back({v, w});
                        if (!want && have) e.deletions.push_back({v, w});
                        if (want != have) changed = true;
                    }
                    if (!changed) changed_all = false;
                }
                if (changed_all && consider(e)) return true;
                std::size_t j = idx.size();
                while (j-- > 0) {
                    if (++mask[j] <= (1ull << targets[j].size()) - 1) break;
                    mask[j] = 1;
                    if (j == 0) return false;
                }
                if (idx.empty()) return false;
            }
        });
    }
    return hit;
}

/// Exact delegation bribery by enumerating all rewire sets of at most k
/// agents over all legal targets.
inline std::optional<BribeSet> oracle_delegation_bribery(const DelegationGraph& d, Vertex s, long long k,
                                                         const VotingRule& rule,
                                                         Goal goal = Goal::constructive,
                                                         const OracleLimits& limits = {}) {
    if (s < 0 || s >= d.vertex_count() || !d.is_alternative(s))
        throw std::invalid_argument("oracle_delegation_bribery: target is not an alternative");
    if (k < 0) throw std::invalid_argument("oracle_delegation_bribery: negative budget");
    const auto& agents = d.agents();
    const int n = d.vertex_count();
    unsigned long long total = 1;
    for (long long c = 0; c < k && c < static_cast<long long>(agents.size()); ++c) {
        total *= static_cast<unsigned long long>(agents.size()) * static_cast<unsigned long long>(n);
        if (total > limits.max_candidates)
            throw OracleLimitError("instance too large for oracle: too many rewire sets");
    }
    std::optional<BribeSet> hit;
    auto holds = [&](const DelegationGraph& cand) {
        auto w = winner_set(cand, rule);
        bool wins = std::binary_search(w.begin(), w.end(), s);
        return goal == Goal::constructive ? wins : !wins;
    };
    for (long long c = 0; c <= k && !hit; ++c) {
        detail::for_each_combination(agents.size(), static_cast<std::size_t>(c),
                                     [&](const std::vector<std::size_t>& idx) {
            std::vector<Vertex> pick(idx.size());
            auto advance = [&](std::size_t j) {
                Vertex v = agents[idx[j]];
                Vertex w = pick[j];
                do {
                    ++w;
                } while (w < n && (w == v || w == d.choice(v)));
                pick[j] = w;
                return w < n;
            };
            for (std::size_t j = 0; j < idx.size(); ++j) {
                pick[j] = -1;
                if (!advance(j)) return false;   // no legal target at all
            }
            while (true) {
                auto choice = d.choices();
                BribeSet b;
                for (std::size_t j = 0; j < idx.size(); ++j) {
                    choice[static_cast<std::size_t>(agents[idx[j]])] = pick[j];
                    b.rewires.push_back({agents[idx[j]], pick[j]});
                }
                std::string err;
                auto cand = DelegationGraph::try_build(d.universe_ptr(), std::move(choice), &err);
                if (cand && holds(*cand)) {
                    hit = std::move(b);
                    return true;
                }
                std::size_t j = idx.size();
                while (j-- > 0) {
                    if (advance(j)) break;
                    pick[j] = -1;
                    advance(j);
                    if (j == 0) return false;
                }
                if (idx.empty()) return false;
            }
        });
    }
    return hit;
}

}   // namespace liqdem
