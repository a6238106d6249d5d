#pragma once

// Shared helpers for the test suites: small fixture graphs, naive
// reachability, brute-force solvers for the reduction source problems, and
// seeded corpus generation. The brute-force pieces are deliberately
// independent of the library's reachability and search code.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "liqdem/graph.hpp"
#include "liqdem/reductions.hpp"

namespace testutil {

using namespace liqdem;

// Two alternatives c and d; a1 votes c, a2 votes d, a3 approves both a1 and
// a2. The smallest graph where the delegation choice flips the winner.
inline ElectionGraph footnote_graph() {
    return build_election_graph({"c", "d"}, {
        {"a1", {"c"}},
        {"a2", {"d"}},
        {"a3", {"a1", "a2"}},
    });
}

inline DelegationGraph make_delegation(const ElectionGraph& g,
                                       const std::map<std::string, std::string>& choice) {
    std::vector<Vertex> c(static_cast<std::size_t>(g.vertex_count()), no_vertex);
    for (const auto& [agent, target] : choice)
        c[static_cast<std::size_t>(g.find(agent))] = g.find(target);
    return DelegationGraph(g.universe_ptr(), std::move(c));
}

inline std::vector<std::string> names_of(const ElectionGraph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(g.name(v));
    return out;
}

// All-pairs reachability by repeated DFS; the independent oracle for the
// rev-bfs / res-rev-bfs kernels.
inline std::vector<std::vector<bool>> naive_reachability(const ElectionGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> stack{v};
        reach[v][v] = true;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.successors(u))
                if (!reach[v][w]) {
                    reach[v][w] = true;
                    stack.push_back(w);
                }
        }
    }
    return reach;
}

// ---- brute-force solvers for the reduction source problems ----

inline bool brute_force_vertex_cover(const UndirectedGraph& h, long long l) {
    const auto n = h.vertices.size();
    if (l > static_cast<long long>(n)) return false;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        if (static_cast<long long>(__builtin_popcountll(mask)) != l) continue;
        bool covers = true;
        for (const auto& [a, b] : h.edges) {
            auto ia = std::lower_bound(h.vertices.begin(), h.vertices.end(), a) - h.vertices.begin();
            auto ib = std::lower_bound(h.vertices.begin(), h.vertices.end(), b) - h.vertices.begin();
            if (!((mask >> ia) & 1) && !((mask >> ib) & 1)) {
                covers = false;
                break;
            }
        }
        if (covers) return true;
    }
    return false;
}

inline bool is_vertex_cover(const UndirectedGraph& h, const std::vector<std::string>& cover) {
    std::set<std::string> c(cover.begin(), cover.end());
    for (const auto& [a, b] : h.edges)
        if (!c.count(a) && !c.count(b)) return false;
    return true;
}

inline bool brute_force_clique(const UndirectedGraph& h, long long l) {
    const auto n = h.vertices.size();
    if (l > static_cast<long long>(n)) return false;
    std::set<std::pair<std::string, std::string>> edges(h.edges.begin(), h.edges.end());
    auto adjacent = [&](std::size_t i, std::size_t j) {
        auto a = h.vertices[i], b = h.vertices[j];
        if (b < a) std::swap(a, b);
        return edges.count({a, b}) > 0;
    };
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        if (static_cast<long long>(__builtin_popcountll(mask)) != l) continue;
        bool clique = true;
        for (std::size_t i = 0; i < n && clique; ++i)
            for (std::size_t j = i + 1; j < n && clique; ++j)
                if (((mask >> i) & 1) && ((mask >> j) & 1) && !adjacent(i, j)) clique = false;
        if (clique) return true;
    }
    return false;
}

inline bool brute_force_independent_set(const UndirectedGraph& h, long long l) {
    const auto n = h.vertices.size();
    if (l > static_cast<long long>(n)) return false;
    std::set<std::pair<std::string, std::string>> edges(h.edges.begin(), h.edges.end());
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        if (static_cast<long long>(__builtin_popcountll(mask)) != l) continue;
        bool independent = true;
        for (const auto& [a, b] : h.edges) {
            auto ia = std::lower_bound(h.vertices.begin(), h.vertices.end(), a) - h.vertices.begin();
            auto ib = std::lower_bound(h.vertices.begin(), h.vertices.end(), b) - h.vertices.begin();
            if (((mask >> ia) & 1) && ((mask >> ib) & 1)) {
                independent = false;
                break;
            }
        }
        if (independent) return true;
    }
    return false;
}

// ---- corpus helpers ----

// Deterministic random delegation of an acyclic election graph (every choice
// map of a DAG is acyclic).
inline DelegationGraph random_delegation(const ElectionGraph& g, std::uint64_t seed) {
    liqdem::detail::Rng rng{seed * 0x9e3779b97f4a7c15ull + 0x51ed2700dcba4d4bull};
    std::vector<Vertex> choice(static_cast<std::size_t>(g.vertex_count()), no_vertex);
    for (Vertex v : g.agents()) {
        auto succ = g.successors(v);
        choice[static_cast<std::size_t>(v)] = succ[rng.below(succ.size())];
    }
    return DelegationGraph(g.universe_ptr(), std::move(choice));
}

}   // namespace testutil
