#pragma once

// Delegation bribery: rewire the out-arcs of up to k agents in a fixed
// delegation so that the target wins. Polynomial for both rules: a greedy
// over directly voting agents for majority, and the achievability guess-and-
// verify loop for plurality. All bribes point the chosen agent straight at
// the target; rewiring a delegating agent is never better than rewiring the
// direct voter above it.

#include <optional>
#include <stdexcept>
#include <vector>

#include "liqdem/graph.hpp"
#include "liqdem/voting.hpp"

namespace liqdem {

/// Per-agent rewires against a fixed delegation; each rewire replaces the
/// agent's single out-arc, contributing two to the arc symmetric difference.
struct BribeSet {
    std::vector<std::pair<Vertex, Vertex>> rewires;   // agent -> new target, sorted by agent

    long long size() const { return static_cast<long long>(rewires.size()); }
    friend bool operator==(const BribeSet&, const BribeSet&) = default;
};

inline DelegationGraph apply_bribes(const DelegationGraph& d, const BribeSet& b) {
    auto choice = d.choices();
    for (auto [agent, target] : b.rewires) {
        if (agent < 0 || agent >= d.vertex_count() || d.is_alternative(agent))
            throw std::invalid_argument("apply_bribes: rewired vertex is not an agent");
        if (target < 0 || target >= d.vertex_count() || target == agent)
            throw std::invalid_argument("apply_bribes: bad rewire target");
        choice[static_cast<std::size_t>(agent)] = target;
    }
    return DelegationGraph(d.universe_ptr(), std::move(choice));
}

struct DelegationBriberyOptions {
    /// Restrict bribable agents to those currently voting directly. The
    /// greedy solutions only ever rewire direct voters, so this cannot change
    /// any answer; it narrows the stated problem.
    bool direct_voters_only = false;
};

struct AchievabilityResult {
    long long p = 0;
    bool achievable = false;
    long long bribes_used = 0;
    std::optional<BribeSet> bribe_set;   // present iff achievable
};

namespace detail {

struct DirectVoters {
    std::vector<long long> vp;
    // Direct voters not voting for s, sorted by decreasing voting power with
    // name-order tie-break.
    std::vector<Vertex> candidates;
};

inline DirectVoters direct_voters_desc(const DelegationGraph& d, Vertex s) {
    DirectVoters out;
    out.vp = voting_power(d);
    for (Vertex v : d.agents()) {
        Vertex c = d.choice(v);
        if (d.is_alternative(c) && c != s) out.candidates.push_back(v);
    }
    std::stable_sort(out.candidates.begin(), out.candidates.end(), [&](Vertex a, Vertex b) {
        return out.vp[static_cast<std::size_t>(a)] > out.vp[static_cast<std::size_t>(b)];
    });
    return out;
}

inline void require_delegation_target(const DelegationGraph& d, Vertex s, const char* op) {
    if (s < 0 || s >= d.vertex_count() || !d.is_alternative(s))
        throw std::invalid_argument(std::string(op) + ": target is not an alternative");
}

}   // namespace detail

/// Greedy majority bribery: rewire the highest-powered direct voters toward
/// s; returns the shortest sufficient prefix, or absent if k bribes cannot
/// make s a majority winner.
inline std::optional<BribeSet> bribe_majority(const DelegationGraph& d, Vertex s, long long k,
                                              const VotingRule& rule = VotingRule::majority(),
                                              const DelegationBriberyOptions& = {}) {
    detail::require_delegation_target(d, s, "bribe_majority");
    if (!rule.is_majority()) throw std::invalid_argument("bribe_majority: rule must be majority");
    if (k < 0) throw std::invalid_argument("bribe_majority: negative budget");
    auto dv = detail::direct_voters_desc(d, s);
    const long long n = d.agent_count();
    long long votes = dv.vp[static_cast<std::size_t>(s)];
    BribeSet bribes;
    if (rule.majority_satisfied(votes, n)) return bribes;
    for (Vertex v : dv.candidates) {
        if (bribes.size() == k) break;
        bribes.rewires.push_back({v, s});
        votes += dv.vp[static_cast<std::size_t>(v)];
        if (rule.majority_satisfied(votes, n)) {
            std::sort(bribes.rewires.begin(), bribes.rewires.end());
            return bribes;
        }
    }
    return std::nullopt;
}

/// The two-phase check: can s reach at least p votes while every rival stays
/// at or below p, using at most k rewires? bribes_used reports the exact
/// number needed even when it exceeds k.
inline AchievabilityResult achievable(const DelegationGraph& d, Vertex s, long long p, long long k) {
    detail::require_delegation_target(d, s, "achievable");
    if (p < 0 || p > d.agent_count()) throw std::invalid_argument("achievable: p out of range");
    auto vp = voting_power(d);
    // Direct voters per rival, each list in decreasing vp / name order.
    std::vector<std::vector<Vertex>> per_alt(static_cast<std::size_t>(d.vertex_count()));
    for (Vertex v : d.agents()) {
        Vertex c = d.choice(v);
        if (d.is_alternative(c) && c != s) per_alt[static_cast<std::size_t>(c)].push_back(v);
    }
    for (auto& lst : per_alt)
        std::stable_sort(lst.begin(), lst.end(), [&](Vertex a, Vertex b) {
            return vp[static_cast<std::size_t>(a)] > vp[static_cast<std::size_t>(b)];
        });

    long long s_votes = vp[static_cast<std::size_t>(s)];
    BribeSet bribes;
    std::vector<std::size_t> next(static_cast<std::size_t>(d.vertex_count()), 0);
    // Phase 1: pull every rival down to at most p votes.
    for (Vertex a : d.alternatives()) {
        if (a == s) continue;
        long long votes = vp[static_cast<std::size_t>(a)];
        auto& lst = per_alt[static_cast<std::size_t>(a)];
        while (votes > p) {
            Vertex v = lst[next[static_cast<std::size_t>(a)]++];
            bribes.rewires.push_back({v, s});
            votes -= vp[static_cast<std::size_t>(v)];
            s_votes += vp[static_cast<std::size_t>(v)];
        }
    }
    // Phase 2: lift s to at least p with the strongest remaining direct voters.
    if (s_votes < p) {
        std::vector<Vertex> rest;
        for (Vertex a : d.alternatives()) {
            if (a == s) continue;
            auto& lst = per_alt[static_cast<std::size_t>(a)];
            for (std::size_t i = next[static_cast<std::size_t>(a)]; i < lst.size(); ++i)
                rest.push_back(lst[i]);
        }
        std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
            if (vp[static_cast<std::size_t>(a)] != vp[static_cast<std::size_t>(b)])
                return vp[static_cast<std::size_t>(a)] > vp[static_cast<std::size_t>(b)];
            return a < b;
        });
        for (Vertex v : rest) {
            if (s_votes >= p) break;
            bribes.rewires.push_back({v, s});
            s_votes += vp[static_cast<std::size_t>(v)];
        }
    }
    AchievabilityResult out;
    out.p = p;
    out.bribes_used = bribes.size();
    out.achievable = out.bribes_used <= k;
    if (out.achievable) {
        std::sort(bribes.rewires.begin(), bribes.rewires.end());
        out.bribe_set = std::move(bribes);
    }
    return out;
}

/// Plurality bribery by guess-and-verify over the target vote count p;
/// returns the bribes of the first achievable p. O(|V|^2).
inline std::optional<BribeSet> bribe_plurality(const DelegationGraph& d, Vertex s, long long k,
                                               const DelegationBriberyOptions& = {}) {
    detail::require_delegation_target(d, s, "bribe_plurality");
    if (k < 0) throw std::invalid_argument("bribe_plurality: negative budget");
    const long long n = d.agent_count();
    if (n == 0) return BribeSet{};   // p = 0 is vacuously achievable
    for (long long p = 1; p <= n; ++p) {
        auto r = achievable(d, s, p, k);
        if (r.achievable) return std::move(r.bribe_set);
    }
    return std::nullopt;
}

}   // namespace liqdem
