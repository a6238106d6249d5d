#pragma once

// Reverse-reachability kernels: rev-bfs (who can reach v), res-rev-bfs (who
// can reach s and no other sink), and the layered delegation builder used for
// bound witnesses. The kernels are templated over a reverse-graph view so the
// same code runs on election graphs, delegations, and the solvers' partially
// fixed or edited views.

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "liqdem/graph.hpp"

namespace liqdem {

namespace detail {

// View over a plain ElectionGraph.
struct ElectionView {
    const ElectionGraph* g;
    int size() const { return g->vertex_count(); }
    bool is_alternative(Vertex v) const { return g->is_alternative(v); }
    const std::vector<Vertex>& alternatives() const { return g->alternatives(); }
    template <class F>
    void for_each_pred(Vertex v, F f) const {
        for (Vertex p : g->predecessors(v)) f(p);
    }
};

// View over a delegation: predecessors are the delegating children.
struct DelegationView {
    const DelegationGraph* d;
    int size() const { return d->vertex_count(); }
    bool is_alternative(Vertex v) const { return d->is_alternative(v); }
    const std::vector<Vertex>& alternatives() const { return d->alternatives(); }
    template <class F>
    void for_each_pred(Vertex v, F f) const {
        for (Vertex p : d->children(v)) f(p);
    }
};

// Reusable scratch for the BFS kernels; epoch stamps avoid clearing.
struct ReachScratch {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    std::vector<Vertex> queue;

    void reset(int n) {
        if (static_cast<int>(stamp.size()) < n) stamp.assign(static_cast<std::size_t>(n), 0);
        if (++epoch == 0) {   // stamp wrap-around
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
        queue.clear();
    }
    bool marked(Vertex v) const { return stamp[static_cast<std::size_t>(v)] == epoch; }
    void mark(Vertex v) { stamp[static_cast<std::size_t>(v)] = epoch; }
};

// Marks every vertex that can reach one of `sources`; the queue holds the
// visit order. Runs in O(|V| + |A|).
template <class View>
void mark_reachers(const View& view, std::span<const Vertex> sources, ReachScratch& s) {
    s.reset(view.size());
    for (Vertex v : sources) {
        if (!s.marked(v)) {
            s.mark(v);
            s.queue.push_back(v);
        }
    }
    for (std::size_t i = 0; i < s.queue.size(); ++i)
        view.for_each_pred(s.queue[i], [&](Vertex p) {
            if (!s.marked(p)) {
                s.mark(p);
                s.queue.push_back(p);
            }
        });
}

// Two-phase restricted reverse BFS: first mark everything reaching a sink
// other than s, then walk from s through unmarked vertices only. The result
// queue holds exactly res-rev-bfs(s).
template <class View>
void mark_res_reachers(const View& view, Vertex s, ReachScratch& blocked, ReachScratch& out) {
    std::vector<Vertex> others;
    for (Vertex a : view.alternatives())
        if (a != s) others.push_back(a);
    mark_reachers(view, others, blocked);
    out.reset(view.size());
    if (!blocked.marked(s)) {
        out.mark(s);
        out.queue.push_back(s);
    }
    for (std::size_t i = 0; i < out.queue.size(); ++i)
        view.for_each_pred(out.queue[i], [&](Vertex p) {
            if (!blocked.marked(p) && !out.marked(p)) {
                out.mark(p);
                out.queue.push_back(p);
            }
        });
}

template <class View>
std::vector<Vertex> collect_sorted(const View& view, const ReachScratch& s) {
    std::vector<Vertex> out;
    out.reserve(s.queue.size());
    for (Vertex v = 0; v < view.size(); ++v)
        if (s.marked(v)) out.push_back(v);
    return out;
}

template <class View>
long long count_agents(const View& view, const ReachScratch& s) {
    long long n = 0;
    for (Vertex v : s.queue)
        if (!view.is_alternative(v)) ++n;
    return n;
}

}   // namespace detail

/// Set of vertices with a path to v (including v), in name order.
inline std::vector<Vertex> rev_bfs(const ElectionGraph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("rev_bfs: unknown vertex");
    detail::ElectionView view{&g};
    detail::ReachScratch s;
    Vertex src[1] = {v};
    detail::mark_reachers(view, src, s);
    return detail::collect_sorted(view, s);
}

inline std::vector<Vertex> rev_bfs(const DelegationGraph& d, Vertex v) {
    if (v < 0 || v >= d.vertex_count()) throw std::invalid_argument("rev_bfs: unknown vertex");
    detail::DelegationView view{&d};
    detail::ReachScratch s;
    Vertex src[1] = {v};
    detail::mark_reachers(view, src, s);
    return detail::collect_sorted(view, s);
}

/// Vertices that can reach s and no other alternative, in name order.
inline std::vector<Vertex> res_rev_bfs(const ElectionGraph& g, Vertex s) {
    if (s < 0 || s >= g.vertex_count() || !g.is_alternative(s))
        throw std::invalid_argument("res_rev_bfs: not an alternative");
    detail::ElectionView view{&g};
    detail::ReachScratch blocked, out;
    detail::mark_res_reachers(view, s, blocked, out);
    return detail::collect_sorted(view, out);
}

namespace detail {

// Builds a delegation by breadth-first layering. Every vertex carries a group
// id; sources get distance zero and each agent adopts the successor with the
// smallest (distance, name) within its own group. Group partitions are chosen
// by the callers so that the chosen arcs cannot form a cycle.
inline DelegationGraph layered_delegation(const ElectionGraph& g, std::span<const int> group,
                                          std::span<const Vertex> sources) {
    const int n = g.vertex_count();
    constexpr int unreached = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n), unreached);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (Vertex v : sources) {
        dist[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        for (Vertex p : g.predecessors(v)) {
            if (group[static_cast<std::size_t>(p)] != group[static_cast<std::size_t>(v)]) continue;
            if (dist[static_cast<std::size_t>(p)] != unreached) continue;
            dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push_back(p);
        }
    }
    std::vector<Vertex> choice(static_cast<std::size_t>(n), no_vertex);
    for (Vertex v : g.agents()) {
        Vertex best = no_vertex;
        int best_dist = unreached;
        for (Vertex w : g.successors(v)) {
            if (group[static_cast<std::size_t>(w)] != group[static_cast<std::size_t>(v)]) continue;
            int dw = dist[static_cast<std::size_t>(w)];
            if (dw < best_dist) {   // successors come in name order, first wins ties
                best_dist = dw;
                best = w;
            }
        }
        if (best == no_vertex || best_dist == unreached)
            throw std::logic_error("layered_delegation: agent without a usable successor");
        choice[static_cast<std::size_t>(v)] = best;
    }
    return DelegationGraph::from_valid_choices(g.universe_ptr(), std::move(choice));
}

}   // namespace detail

/// A deterministic delegation subgraph: breadth-first layering from the
/// alternatives, each agent adopting its first discovered sink-ward neighbor
/// in name order. Exists for every valid election graph.
inline DelegationGraph some_delegation(const ElectionGraph& g) {
    std::vector<int> group(static_cast<std::size_t>(g.vertex_count()), 0);
    return detail::layered_delegation(g, group, g.alternatives());
}

}   // namespace liqdem
