#pragma once

// Generators for the hardness-reduction instances (vertex cover to equal
// power, equal power to one-plurality, clique to all-bribery, independent set
// to one-bribery) plus a seeded random instance generator. Every generated
// vertex carries a role tag and a back-reference into the source graph, so
// solutions can be mapped back and the construction's counting can be
// asserted exactly.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "liqdem/graph.hpp"
#include "liqdem/voting.hpp"

namespace liqdem {

/// Simple undirected graph (the H = (W, E) of the reductions): named
/// vertices, normalized edges, no self-loops or parallel edges.
struct UndirectedGraph {
    std::vector<std::string> vertices;                          // sorted
    std::vector<std::pair<std::string, std::string>> edges;     // first < second, sorted

    static UndirectedGraph create(std::vector<std::string> vertices,
                                  std::vector<std::pair<std::string, std::string>> edges) {
        UndirectedGraph h;
        h.vertices = std::move(vertices);
        std::sort(h.vertices.begin(), h.vertices.end());
        if (std::adjacent_find(h.vertices.begin(), h.vertices.end()) != h.vertices.end())
            throw std::invalid_argument("undirected graph: duplicate vertex");
        for (auto& [a, b] : edges) {
            if (a == b) throw std::invalid_argument("undirected graph: self-loop");
            if (!std::binary_search(h.vertices.begin(), h.vertices.end(), a) ||
                !std::binary_search(h.vertices.begin(), h.vertices.end(), b))
                throw std::invalid_argument("undirected graph: edge endpoint not declared");
            if (b < a) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("undirected graph: parallel edge");
        h.edges = std::move(edges);
        return h;
    }

    long long vertex_count() const { return static_cast<long long>(vertices.size()); }
    long long edge_count() const { return static_cast<long long>(edges.size()); }

    long long degree(const std::string& v) const {
        long long d = 0;
        for (const auto& [a, b] : edges) d += (a == v) + (b == v);
        return d;
    }
};

enum class Role { vertex_agent, edge_agent, dummy, filling, subdivision, sink, source };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::vertex_agent: return "vertex-agent";
        case Role::edge_agent: return "edge-agent";
        case Role::dummy: return "dummy";
        case Role::filling: return "filling";
        case Role::subdivision: return "subdivision";
        case Role::sink: return "sink";
        case Role::source: return "source";
    }
    return "unknown";
}

struct VertexTag {
    Role role;
    std::string source_vertex;    // H vertex (vertex agents, dummies) or subdivided tail
    std::string source_vertex2;   // second endpoint (edge agents) / subdivided sink
};

struct ReductionOutput {
    ElectionGraph graph;
    std::string target;                       // designated alternative
    std::optional<long long> budget;          // bribery constructions only
    std::map<std::string, VertexTag> tags;    // partitions the vertex set
    UndirectedGraph source;                   // the padded H
    std::vector<std::string> padded_vertices; // isolated vertices added to H
    bool trivial_no = false;                  // odd-agent equal-power sources
};

namespace detail {

// Deterministic fresh names; collisions (H vertices named like generated
// ones) get a "~<n>" suffix.
struct NameGen {
    std::set<std::string> used;
    std::string fresh(std::string base) {
        if (used.insert(base).second) return base;
        for (int i = 2;; ++i) {
            std::string cand = base + "~" + std::to_string(i);
            if (used.insert(cand).second) return cand;
        }
    }
};

inline UndirectedGraph pad_with_isolated(const UndirectedGraph& h, long long needed_vertices,
                                         std::vector<std::string>* padded) {
    if (h.vertex_count() >= needed_vertices) return h;
    std::set<std::string> used(h.vertices.begin(), h.vertices.end());
    std::vector<std::string> verts = h.vertices;
    long long i = 0;
    while (static_cast<long long>(verts.size()) < needed_vertices) {
        std::string cand = "pad" + std::to_string(i++);
        if (!used.insert(cand).second) continue;
        verts.push_back(cand);
        padded->push_back(cand);
    }
    return UndirectedGraph::create(std::move(verts), h.edges);
}

}   // namespace detail

/// Vertex Cover -> Equal Power Delegation. H is padded with isolated vertices
/// until |W| >= 2l + 1, which keeps the filling count non-negative. The
/// padded instance has a size-l vertex cover iff the output graph has an
/// equal-power delegation. With subdivide, the vertex agents' sink arcs are
/// replaced by length-2 paths (depth 3 instead of 2, no agent with arcs to
/// two sinks); the vote balance is unchanged because each vertex agent
/// contributes one forced voter to each side.
inline ReductionOutput vc_to_equal_power(const UndirectedGraph& h_in, long long l, bool subdivide = false) {
    if (l < 0) throw std::invalid_argument("vc_to_equal_power: negative cover size");
    std::vector<std::string> padded;
    UndirectedGraph h = detail::pad_with_isolated(h_in, 2 * l + 1, &padded);
    const long long W = h.vertex_count(), E = h.edge_count();
    const long long fill = (W - 2 * l) * (W + E) - E;

    detail::NameGen names;
    std::map<std::string, VertexTag> tags;
    std::vector<std::pair<std::string, std::vector<std::string>>> arcs;
    const std::string s = names.fresh("s"), t = names.fresh("t");
    tags[s] = {Role::sink, "", ""};
    tags[t] = {Role::sink, "", ""};

    std::map<std::string, std::string> vname;
    for (const auto& w : h.vertices) {
        vname[w] = names.fresh("v_" + w);
        tags[vname[w]] = {Role::vertex_agent, w, ""};
    }
    for (const auto& w : h.vertices) {
        if (subdivide) {
            std::string ps = names.fresh("sub_" + w + "_s"), pt = names.fresh("sub_" + w + "_t");
            tags[ps] = {Role::subdivision, w, s};
            tags[pt] = {Role::subdivision, w, t};
            arcs.push_back({vname[w], {ps, pt}});
            arcs.push_back({ps, {s}});
            arcs.push_back({pt, {t}});
        } else {
            arcs.push_back({vname[w], {s, t}});
        }
        for (long long i = 0; i < W + E - 1; ++i) {
            std::string d = names.fresh("dum_" + w + "_" + std::to_string(i));
            tags[d] = {Role::dummy, w, ""};
            arcs.push_back({d, {vname[w]}});
        }
    }
    for (const auto& [a, b] : h.edges) {
        std::string u = names.fresh("u_" + a + "_" + b);
        tags[u] = {Role::edge_agent, a, b};
        arcs.push_back({u, {vname[a], vname[b]}});
    }
    for (long long i = 0; i < fill; ++i) {
        std::string f = names.fresh("fill_" + std::to_string(i));
        tags[f] = {Role::filling, "", ""};
        arcs.push_back({f, {t}});
    }
    return ReductionOutput{build_election_graph({s, t}, arcs), s, std::nullopt,
                           std::move(tags), std::move(h), std::move(padded), false};
}

/// Maps an equal-power delegation of a vc_to_equal_power instance back to a
/// vertex cover of the (padded) source graph: the vertices whose vertex
/// agents vote for t.
inline std::vector<std::string> extract_vertex_cover(const ReductionOutput& out, const DelegationGraph& d) {
    if (!(d.universe() == out.graph.universe()))
        throw std::invalid_argument("extract_vertex_cover: delegation is for a different graph");
    auto vp = voting_power(d);
    const auto& alts = out.graph.alternatives();
    if (alts.size() != 2 || vp[static_cast<std::size_t>(alts[0])] != vp[static_cast<std::size_t>(alts[1])])
        throw std::invalid_argument("extract_vertex_cover: not an equal-power delegation");
    Vertex t = out.graph.find("t") != no_vertex && out.graph.is_alternative(out.graph.find("t"))
                   ? out.graph.find("t")
                   : alts[1];
    auto sink = resolved_sinks(d);
    std::vector<std::string> cover;
    for (const auto& [name, tag] : out.tags) {
        if (tag.role != Role::vertex_agent) continue;
        Vertex v = out.graph.find(name);
        if (sink[static_cast<std::size_t>(v)] == t) cover.push_back(tag.source_vertex);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

/// Equal Power Delegation -> One-Plurality: add a third sink r and half the
/// agents as dummies voting for it; r can win iff the two original sinks can
/// split the remaining votes evenly. Odd agent counts are flagged trivial-no
/// (the construction with floor(n/2) dummies is still a no-instance).
inline ReductionOutput epd_to_one_plurality(const ElectionGraph& g) {
    if (g.alternatives().size() != 2)
        throw std::invalid_argument("epd_to_one_plurality: source needs exactly two alternatives");
    const long long n = g.agent_count();
    detail::NameGen names;
    for (Vertex v = 0; v < g.vertex_count(); ++v) names.used.insert(g.name(v));

    std::map<std::string, VertexTag> tags;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        tags[g.name(v)] = {g.is_alternative(v) ? Role::sink : Role::source, "", ""};

    std::string r = names.fresh("r");
    tags[r] = {Role::sink, "", ""};
    std::vector<std::pair<std::string, std::vector<std::string>>> arcs;
    for (Vertex v : g.agents()) {
        std::vector<std::string> targets;
        for (Vertex w : g.successors(v)) targets.push_back(g.name(w));
        arcs.push_back({g.name(v), std::move(targets)});
    }
    for (long long i = 0; i < n / 2; ++i) {
        std::string d = names.fresh("dum_r_" + std::to_string(i));
        tags[d] = {Role::dummy, "", ""};
        arcs.push_back({d, {r}});
    }
    std::vector<std::string> alts;
    for (Vertex a : g.alternatives()) alts.push_back(g.name(a));
    alts.push_back(r);
    return ReductionOutput{build_election_graph(alts, arcs), r, std::nullopt,
                           std::move(tags), UndirectedGraph{}, {}, n % 2 != 0};
}

/// Clique -> All Election Bribery (budget l): padded so that
/// l + C(l,2) <= (|W|+|E|)/2; deleting the t-arcs of a clique's vertex agents
/// locks exactly half of the agents onto s.
inline ReductionOutput clique_to_all_eb(const UndirectedGraph& h_in, long long l) {
    if (l < 0) throw std::invalid_argument("clique_to_all_eb: negative clique size");
    const long long choose2 = l * (l - 1) / 2;
    std::vector<std::string> padded;
    UndirectedGraph h = h_in;
    {
        // pad until |W| + |E| >= 2(l + C(l,2))
        long long need = 2 * (l + choose2) - h.edge_count();
        h = detail::pad_with_isolated(h_in, need, &padded);
    }
    const long long W = h.vertex_count(), E = h.edge_count();
    const long long fill = W + E - 2 * (l + choose2);

    detail::NameGen names;
    std::map<std::string, VertexTag> tags;
    std::vector<std::pair<std::string, std::vector<std::string>>> arcs;
    const std::string s = names.fresh("s"), t = names.fresh("t");
    tags[s] = {Role::sink, "", ""};
    tags[t] = {Role::sink, "", ""};
    std::map<std::string, std::string> vname;
    for (const auto& w : h.vertices) {
        vname[w] = names.fresh("v_" + w);
        tags[vname[w]] = {Role::vertex_agent, w, ""};
        arcs.push_back({vname[w], {s, t}});
    }
    for (const auto& [a, b] : h.edges) {
        std::string u = names.fresh("u_" + a + "_" + b);
        tags[u] = {Role::edge_agent, a, b};
        arcs.push_back({u, {vname[a], vname[b]}});
    }
    for (long long i = 0; i < fill; ++i) {
        std::string f = names.fresh("fill_" + std::to_string(i));
        tags[f] = {Role::filling, "", ""};
        arcs.push_back({f, {s}});
    }
    return ReductionOutput{build_election_graph({s, t}, arcs), s, l,
                           std::move(tags), std::move(h), std::move(padded), false};
}

/// Independent Set -> One Election Bribery (budget l); H must be r-regular
/// with r > 0 (padding would break regularity, so irregular inputs are
/// rejected). When l(r+1) exceeds half of |W|+|E| the filling agents move to
/// t instead of s, as the counting argument requires.
inline ReductionOutput is_to_one_eb(const UndirectedGraph& h, long long l) {
    if (l < 0) throw std::invalid_argument("is_to_one_eb: negative set size");
    if (h.vertex_count() == 0) throw std::invalid_argument("is_to_one_eb: H must be r-regular with r > 0");
    long long r = h.degree(h.vertices.front());
    for (const auto& w : h.vertices)
        if (h.degree(w) != r) throw std::invalid_argument("is_to_one_eb: H is not regular");
    if (r <= 0) throw std::invalid_argument("is_to_one_eb: H must be r-regular with r > 0");

    const long long W = h.vertex_count(), E = h.edge_count();
    const long long diff = W + E - 2 * l * (r + 1);

    detail::NameGen names;
    std::map<std::string, VertexTag> tags;
    std::vector<std::pair<std::string, std::vector<std::string>>> arcs;
    const std::string s = names.fresh("s"), t = names.fresh("t");
    tags[s] = {Role::sink, "", ""};
    tags[t] = {Role::sink, "", ""};
    std::map<std::string, std::string> vname;
    for (const auto& w : h.vertices) {
        vname[w] = names.fresh("v_" + w);
        tags[vname[w]] = {Role::vertex_agent, w, ""};
        arcs.push_back({vname[w], {t}});
    }
    for (const auto& [a, b] : h.edges) {
        std::string u = names.fresh("u_" + a + "_" + b);
        tags[u] = {Role::edge_agent, a, b};
        arcs.push_back({u, {vname[a], vname[b]}});
    }
    const std::string& fill_sink = diff >= 0 ? s : t;
    for (long long i = 0; i < std::abs(diff); ++i) {
        std::string f = names.fresh("fill_" + std::to_string(i));
        tags[f] = {Role::filling, "", ""};
        arcs.push_back({f, {fill_sink}});
    }
    return ReductionOutput{build_election_graph({s, t}, arcs), s, l,
                           std::move(tags), h, {}, false};
}

struct RandomGraphParams {
    long long n_agents = 0;
    int n_alts = 2;
    int max_out_degree = 2;
    bool acyclic = true;
    std::uint64_t seed = 0;
};

namespace detail {

// splitmix-style scramble; kept local so the generated corpora do not depend
// on library-specific distributions.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline std::string padded_number(long long i, int width) {
    std::string s = std::to_string(i);
    if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
    return s;
}

}   // namespace detail

/// Seeded random election graph. Acyclic mode assigns agents random ranks and
/// only permits rank-decreasing arcs; cyclic mode samples freely and gives
/// any stranded agent a direct arc to a random alternative.
inline ElectionGraph random_election_graph(const RandomGraphParams& p) {
    if (p.n_alts < 1) throw std::invalid_argument("random_election_graph: need at least one alternative");
    if (p.max_out_degree < 1) throw std::invalid_argument("random_election_graph: need max out-degree >= 1");
    if (p.n_agents < 0) throw std::invalid_argument("random_election_graph: negative agent count");

    const long long n = p.n_agents;
    const int m = p.n_alts;
    int agent_width = 1, alt_width = 1;
    while (detail::padded_number(n > 0 ? n - 1 : 0, agent_width).size() > static_cast<std::size_t>(agent_width)) ++agent_width;
    while (detail::padded_number(m - 1, alt_width).size() > static_cast<std::size_t>(alt_width)) ++alt_width;

    std::vector<std::string> agent_names, alt_names;
    agent_names.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) agent_names.push_back("a" + detail::padded_number(i, agent_width));
    for (int i = 0; i < m; ++i) alt_names.push_back("s" + detail::padded_number(i, alt_width));
    auto universe = Universe::create(agent_names, alt_names);
    // agents sort before alternatives ('a' < 's'), so agent i has index i and
    // alternative j has index n + j
    auto alt_index = [&](long long j) { return static_cast<Vertex>(n + j); };

    detail::Rng rng{p.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull};
    std::vector<long long> rank(static_cast<std::size_t>(n));
    std::vector<Vertex> agent_at_rank(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) agent_at_rank[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
    for (long long i = n - 1; i > 0; --i) {
        long long j = static_cast<long long>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(agent_at_rank[static_cast<std::size_t>(i)], agent_at_rank[static_cast<std::size_t>(j)]);
    }
    for (long long r = 0; r < n; ++r) rank[static_cast<std::size_t>(agent_at_rank[static_cast<std::size_t>(r)])] = r;

    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(universe->size()));
    for (long long i = 0; i < n; ++i) {
        const long long space = p.acyclic ? m + rank[static_cast<std::size_t>(i)] : m + n - 1;
        const long long want = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(
                                       std::min<long long>(p.max_out_degree, space))));
        auto& out = adj[static_cast<std::size_t>(i)];
        while (static_cast<long long>(out.size()) < want) {
            long long c = static_cast<long long>(rng.below(static_cast<std::uint64_t>(space)));
            Vertex target;
            if (c < m) {
                target = alt_index(c);
            } else if (p.acyclic) {
                target = agent_at_rank[static_cast<std::size_t>(c - m)];
            } else {
                target = static_cast<Vertex>(c - m);
                if (target >= static_cast<Vertex>(i)) ++target;   // skip self
            }
            if (std::find(out.begin(), out.end(), target) == out.end()) out.push_back(target);
        }
        std::sort(out.begin(), out.end());
    }

    if (!p.acyclic && n > 0) {
        // multi-source reverse BFS from the alternatives over the sampled arcs
        std::vector<std::vector<Vertex>> preds(static_cast<std::size_t>(universe->size()));
        for (long long i = 0; i < n; ++i)
            for (Vertex w : adj[static_cast<std::size_t>(i)]) preds[static_cast<std::size_t>(w)].push_back(static_cast<Vertex>(i));
        std::vector<char> ok(static_cast<std::size_t>(universe->size()), 0);
        std::vector<Vertex> queue;
        for (int j = 0; j < m; ++j) {
            ok[static_cast<std::size_t>(alt_index(j))] = 1;
            queue.push_back(alt_index(j));
        }
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (Vertex u : preds[static_cast<std::size_t>(queue[qi])])
                if (!ok[static_cast<std::size_t>(u)]) {
                    ok[static_cast<std::size_t>(u)] = 1;
                    queue.push_back(u);
                }
        for (long long i = 0; i < n; ++i) {
            if (ok[static_cast<std::size_t>(i)]) continue;
            auto& out = adj[static_cast<std::size_t>(i)];
            Vertex fallback = alt_index(static_cast<long long>(rng.below(static_cast<std::uint64_t>(m))));
            if (static_cast<int>(out.size()) >= p.max_out_degree) out.pop_back();
            out.push_back(fallback);
            std::sort(out.begin(), out.end());
        }
    }
    return ElectionGraph(std::move(universe), std::move(adj));
}

}   // namespace liqdem
