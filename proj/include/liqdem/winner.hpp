#pragma once

// Winner determination. The All variants and One-Majority are linear-time
// consequences of the vote bounds; One-Plurality and Equal Power Delegation
// are NP-hard and solved exactly by a backtracking search over per-agent arc
// choices with reachability-based admissible pruning.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liqdem/graph.hpp"
#include "liqdem/reach.hpp"
#include "liqdem/voting.hpp"

namespace liqdem {

/// Tight per-alternative vote bounds: lo is what s gets in every delegation,
/// hi what it can get in the best one, each with a delegation achieving it.
struct VoteBounds {
    long long lo = 0;
    long long hi = 0;
    DelegationGraph witness_lo;
    DelegationGraph witness_hi;
};

struct Decision {
    bool answer = false;
    /// All variants: counterexample delegation on "no".
    /// One variants: witness delegation on "yes".
    std::optional<DelegationGraph> certificate;
};

enum class SearchStatus { yes, no, budget_exhausted };

struct SearchOptions {
    std::optional<std::uint64_t> node_budget;   // unlimited when absent
};

struct ExactDecision {
    SearchStatus status = SearchStatus::no;
    std::optional<DelegationGraph> certificate;
    std::uint64_t nodes_expanded = 0;
    bool yes() const { return status == SearchStatus::yes; }
};

namespace detail {

inline void require_alternative(const ElectionGraph& g, Vertex s, const char* op) {
    if (s < 0 || s >= g.vertex_count() || !g.is_alternative(s))
        throw std::invalid_argument(std::string(op) + ": target is not an alternative");
}

// Delegation funneling rev-bfs(s) into s and resolving the rest away from it.
inline DelegationGraph max_votes_witness(const ElectionGraph& g, Vertex s) {
    ReachScratch r;
    ElectionView view{&g};
    Vertex src[1] = {s};
    mark_reachers(view, src, r);
    std::vector<int> group(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : r.queue) group[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> sources;
    sources.push_back(s);
    for (Vertex a : g.alternatives())
        if (a != s) sources.push_back(a);
    return layered_delegation(g, group, sources);
}

// Delegation where only res-rev-bfs(s) votes for s; everyone else resolves
// through the graph induced away from that set.
inline DelegationGraph min_votes_witness(const ElectionGraph& g, Vertex s) {
    ReachScratch blocked, res;
    ElectionView view{&g};
    mark_res_reachers(view, s, blocked, res);
    std::vector<int> group(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : res.queue) group[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> sources;
    sources.push_back(s);
    for (Vertex a : g.alternatives())
        if (a != s) sources.push_back(a);
    return layered_delegation(g, group, sources);
}

// Counterexample for All-Plurality: res-rev-bfs(s) votes s, rev-bfs(rival)
// funnels into the rival, the rest resolves elsewhere. The two sets are
// disjoint, so both bounds are met simultaneously.
inline DelegationGraph rival_beats_witness(const ElectionGraph& g, Vertex s, Vertex rival) {
    ReachScratch blocked, res, rr;
    ElectionView view{&g};
    mark_res_reachers(view, s, blocked, res);
    Vertex src[1] = {rival};
    mark_reachers(view, src, rr);
    std::vector<int> group(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : res.queue) group[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : rr.queue) group[static_cast<std::size_t>(v)] = 2;
    std::vector<Vertex> sources;
    sources.push_back(s);
    sources.push_back(rival);
    for (Vertex a : g.alternatives())
        if (a != s && a != rival) sources.push_back(a);
    return layered_delegation(g, group, sources);
}

}   // namespace detail

inline VoteBounds vote_bounds(const ElectionGraph& g, Vertex s) {
    detail::require_alternative(g, s, "vote_bounds");
    detail::ReachScratch blocked, marks;
    detail::ElectionView view{&g};
    Vertex src[1] = {s};
    detail::mark_reachers(view, src, marks);
    long long hi = detail::count_agents(view, marks);
    detail::mark_res_reachers(view, s, blocked, marks);
    long long lo = detail::count_agents(view, marks);
    return VoteBounds{lo, hi, detail::min_votes_witness(g, s), detail::max_votes_witness(g, s)};
}

/// Does s win under majority in every delegation subgraph? O(|G|).
inline Decision all_majority(const ElectionGraph& g, Vertex s, const VotingRule& rule = VotingRule::majority()) {
    detail::require_alternative(g, s, "all_majority");
    if (!rule.is_majority()) throw std::invalid_argument("all_majority: rule must be majority");
    detail::ReachScratch blocked, marks;
    detail::ElectionView view{&g};
    detail::mark_res_reachers(view, s, blocked, marks);
    long long lo = detail::count_agents(view, marks);
    if (rule.majority_satisfied(lo, g.agent_count())) return {true, std::nullopt};
    return {false, detail::min_votes_witness(g, s)};
}

/// Does s win under plurality (ties allowed) in every delegation subgraph?
/// O(|G| * |S|).
inline Decision all_plurality(const ElectionGraph& g, Vertex s) {
    detail::require_alternative(g, s, "all_plurality");
    detail::ReachScratch blocked, marks;
    detail::ElectionView view{&g};
    detail::mark_res_reachers(view, s, blocked, marks);
    long long lo = detail::count_agents(view, marks);
    for (Vertex a : g.alternatives()) {
        if (a == s) continue;
        Vertex src[1] = {a};
        detail::mark_reachers(view, src, marks);
        if (detail::count_agents(view, marks) > lo)
            return {false, detail::rival_beats_witness(g, s, a)};
    }
    return {true, std::nullopt};
}

/// Does s win under majority in at least one delegation subgraph? O(|G|).
inline Decision one_majority(const ElectionGraph& g, Vertex s, const VotingRule& rule = VotingRule::majority()) {
    detail::require_alternative(g, s, "one_majority");
    if (!rule.is_majority()) throw std::invalid_argument("one_majority: rule must be majority");
    detail::ReachScratch marks;
    detail::ElectionView view{&g};
    Vertex src[1] = {s};
    detail::mark_reachers(view, src, marks);
    long long hi = detail::count_agents(view, marks);
    if (!rule.majority_satisfied(hi, g.agent_count())) return {false, std::nullopt};
    return {true, detail::max_votes_witness(g, s)};
}

namespace detail {

// Reverse view of the election graph with a partial choice map applied:
// fixed agents keep only their chosen arc.
struct PartialView {
    const ElectionGraph* g;
    const std::vector<Vertex>* choice;
    int size() const { return g->vertex_count(); }
    bool is_alternative(Vertex v) const { return g->is_alternative(v); }
    const std::vector<Vertex>& alternatives() const { return g->alternatives(); }
    template <class F>
    void for_each_pred(Vertex v, F f) const {
        for (Vertex p : g->predecessors(v)) {
            Vertex c = (*choice)[static_cast<std::size_t>(p)];
            if (c == no_vertex || c == v) f(p);
        }
    }
};

// Per-alternative optimistic/pessimistic vote counts on a partially fixed
// graph; `covered` is false when some vertex cannot reach any sink anymore
// (the partial state is a dead end).
struct PartialBounds {
    bool covered = false;
    std::vector<long long> lo, hi;   // indexed by position in alternatives()
};

class DelegationSearch {
public:
    explicit DelegationSearch(const ElectionGraph& g) : g_(g) {
        choice_.assign(static_cast<std::size_t>(g.vertex_count()), no_vertex);
        for (Vertex v : g.agents()) {
            auto succ = g.successors(v);
            if (succ.size() == 1) choice_[static_cast<std::size_t>(v)] = succ[0];
            else order_.push_back(v);
        }
        // Decreasing out-degree, ties in name order.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.out_degree(a) > g.out_degree(b); });
    }

    // Goal needs: bool prune(const PartialBounds&), bool accept(const std::vector<long long>& vp).
    template <class Goal>
    ExactDecision run(const Goal& goal, const SearchOptions& opt) {
        budget_ = opt.node_budget;
        nodes_ = 0;
        found_.reset();
        Step r = expand(goal, 0);
        ExactDecision out;
        out.nodes_expanded = nodes_;
        if (r == Step::stop_budget) {
            out.status = SearchStatus::budget_exhausted;
        } else if (found_) {
            out.status = SearchStatus::yes;
            out.certificate = std::move(found_);
        } else {
            out.status = SearchStatus::no;
        }
        return out;
    }

private:
    enum class Step { found, exhausted, stop_budget };

    PartialBounds bounds() {
        PartialView view{&g_, &choice_};
        const auto& alts = g_.alternatives();
        PartialBounds b;
        b.lo.assign(alts.size(), 0);
        b.hi.assign(alts.size(), 0);
        const int n = g_.vertex_count();
        if (static_cast<int>(reach_count_.size()) < n) {
            reach_count_.assign(static_cast<std::size_t>(n), 0);
            last_alt_.assign(static_cast<std::size_t>(n), -1);
        }
        std::fill(reach_count_.begin(), reach_count_.begin() + n, 0);
        long long covered = 0;
        for (std::size_t i = 0; i < alts.size(); ++i) {
            Vertex src[1] = {alts[i]};
            mark_reachers(view, src, scratch_);
            for (Vertex v : scratch_.queue) {
                if (reach_count_[static_cast<std::size_t>(v)]++ == 0) ++covered;
                last_alt_[static_cast<std::size_t>(v)] = static_cast<int>(i);
                if (!g_.is_alternative(v)) b.hi[i]++;
            }
        }
        b.covered = covered == n;
        if (b.covered) {
            for (Vertex v : g_.agents())
                if (reach_count_[static_cast<std::size_t>(v)] == 1)
                    b.lo[static_cast<std::size_t>(last_alt_[static_cast<std::size_t>(v)])]++;
        }
        return b;
    }

    template <class Goal>
    Step expand(const Goal& goal, std::size_t depth) {
        if (budget_ && ++nodes_ > *budget_) return Step::stop_budget;
        if (!budget_) ++nodes_;
        PartialBounds b = bounds();
        if (!b.covered || goal.prune(b)) return Step::exhausted;
        if (depth == order_.size()) {
            auto d = DelegationGraph::from_valid_choices(g_.universe_ptr(), choice_);
            if (goal.accept(voting_power(d))) {
                found_ = std::move(d);
                return Step::found;
            }
            return Step::exhausted;
        }
        Vertex v = order_[depth];
        for (Vertex w : g_.successors(v)) {
            choice_[static_cast<std::size_t>(v)] = w;
            Step r = expand(goal, depth + 1);
            if (r != Step::exhausted) {
                choice_[static_cast<std::size_t>(v)] = no_vertex;
                return r;
            }
        }
        choice_[static_cast<std::size_t>(v)] = no_vertex;
        return Step::exhausted;
    }

    const ElectionGraph& g_;
    std::vector<Vertex> order_;
    std::vector<Vertex> choice_;
    ReachScratch scratch_;
    std::vector<int> reach_count_;
    std::vector<int> last_alt_;
    std::optional<std::uint64_t> budget_;
    std::uint64_t nodes_ = 0;
    std::optional<DelegationGraph> found_;
};

struct PluralityOneGoal {
    const ElectionGraph* g;
    Vertex s;
    std::size_t s_pos;
    bool prune(const PartialBounds& b) const {
        long long rival_floor = 0;
        for (std::size_t i = 0; i < b.lo.size(); ++i)
            if (i != s_pos) rival_floor = std::max(rival_floor, b.lo[i]);
        return b.hi[s_pos] < rival_floor;
    }
    bool accept(const std::vector<long long>& vp) const {
        long long best = 0;
        for (Vertex a : g->alternatives()) best = std::max(best, vp[static_cast<std::size_t>(a)]);
        return vp[static_cast<std::size_t>(s)] == best;
    }
};

struct EqualPowerGoal {
    Vertex s;
    std::size_t s_pos;
    long long half;
    bool prune(const PartialBounds& b) const { return b.hi[s_pos] < half || b.lo[s_pos] > half; }
    bool accept(const std::vector<long long>& vp) const { return vp[static_cast<std::size_t>(s)] == half; }
};

}   // namespace detail

/// Does s win under plurality in at least one delegation subgraph? Exact
/// backtracking search; worst-case exponential. The optional node budget
/// makes the search report budget_exhausted instead of running unbounded.
inline ExactDecision one_plurality(const ElectionGraph& g, Vertex s, const SearchOptions& opt = {}) {
    detail::require_alternative(g, s, "one_plurality");
    const auto& alts = g.alternatives();
    std::size_t s_pos = static_cast<std::size_t>(
        std::lower_bound(alts.begin(), alts.end(), s) - alts.begin());
    detail::DelegationSearch search(g);
    return search.run(detail::PluralityOneGoal{&g, s, s_pos}, opt);
}

struct EqualPowerResult {
    SearchStatus status = SearchStatus::no;
    std::optional<DelegationGraph> delegation;
    bool yes() const { return status == SearchStatus::yes; }
};

/// For a graph with exactly two alternatives: a delegation with equal vote
/// counts, or absent when none exists. Odd agent counts are immediate "no".
inline EqualPowerResult equal_power(const ElectionGraph& g, const SearchOptions& opt = {}) {
    if (g.alternatives().size() != 2)
        throw std::invalid_argument("equal_power: graph must have exactly two alternatives");
    const long long n = g.agent_count();
    if (n % 2 != 0) return {SearchStatus::no, std::nullopt};
    Vertex s = g.alternatives()[0];
    detail::DelegationSearch search(g);
    auto r = search.run(detail::EqualPowerGoal{s, 0, n / 2}, opt);
    return {r.status, std::move(r.certificate)};
}

}   // namespace liqdem
