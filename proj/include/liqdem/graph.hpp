#pragma once

// Core graph model: election graphs (agents delegating toward alternative
// sinks), delegation subgraphs (one chosen out-arc per agent, acyclic), and
// the validation machinery everything else builds on.
//
// Vertices are identified by whitespace-free string names; all iteration and
// every tie-break downstream follows the name order, so results are
// reproducible byte for byte.

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liqdem {

using Vertex = std::int32_t;
inline constexpr Vertex no_vertex = -1;

struct Arc {
    Vertex tail = no_vertex;
    Vertex head = no_vertex;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable vertex table shared between a graph and everything derived from
/// it (delegations, certificates). Names are kept sorted, so the index order
/// is the name order.
class Universe {
public:
    static std::shared_ptr<const Universe> create(std::vector<std::string> agent_names,
                                                  std::vector<std::string> alternative_names) {
        Universe u;
        u.names_.reserve(agent_names.size() + alternative_names.size());
        for (auto& n : agent_names) u.names_.push_back(std::move(n));
        for (const auto& n : alternative_names) u.names_.push_back(n);
        std::sort(u.names_.begin(), u.names_.end());
        if (std::adjacent_find(u.names_.begin(), u.names_.end()) != u.names_.end())
            throw std::invalid_argument("duplicate vertex name");
        u.is_alt_.assign(u.names_.size(), 0);
        for (const auto& n : alternative_names) u.is_alt_[u.index_of(n)] = 1;
        for (Vertex v = 0; v < static_cast<Vertex>(u.names_.size()); ++v)
            (u.is_alt_[v] ? u.alternatives_ : u.agents_).push_back(v);
        return std::make_shared<const Universe>(std::move(u));
    }

    int size() const { return static_cast<int>(names_.size()); }
    int agent_count() const { return static_cast<int>(agents_.size()); }
    const std::string& name(Vertex v) const { return names_[static_cast<std::size_t>(v)]; }
    bool is_alternative(Vertex v) const { return is_alt_[static_cast<std::size_t>(v)] != 0; }
    const std::vector<Vertex>& alternatives() const { return alternatives_; }
    const std::vector<Vertex>& agents() const { return agents_; }

    /// Index of `name`, or no_vertex if unknown.
    Vertex find(std::string_view name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) return no_vertex;
        return static_cast<Vertex>(it - names_.begin());
    }

    bool operator==(const Universe& o) const { return names_ == o.names_ && is_alt_ == o.is_alt_; }
    bool same_vertices(const Universe& o) const { return names_ == o.names_; }

private:
    Vertex index_of(const std::string& n) const {
        return static_cast<Vertex>(std::lower_bound(names_.begin(), names_.end(), n) - names_.begin());
    }

    std::vector<std::string> names_;
    std::vector<char> is_alt_;
    std::vector<Vertex> alternatives_;
    std::vector<Vertex> agents_;
};

/// Raw, unvalidated graph description: declared alternatives plus one
/// (agent, targets) entry per agent line. This is what the parser and the
/// generators hand to validation.
struct RawGraph {
    std::vector<std::string> alternatives;
    std::vector<std::pair<std::string, std::vector<std::string>>> agent_arcs;
};

enum class ViolationCode {
    empty_name,
    duplicate_declaration,
    unknown_name,
    alternative_out_arc,
    undeclared_sink,   // non-alternative with out-degree zero
    self_loop,
    duplicate_arc,
    no_sink_path,
};

inline const char* violation_code_name(ViolationCode c) {
    switch (c) {
        case ViolationCode::empty_name: return "empty-name";
        case ViolationCode::duplicate_declaration: return "duplicate-declaration";
        case ViolationCode::unknown_name: return "unknown-name";
        case ViolationCode::alternative_out_arc: return "alternative-out-arc";
        case ViolationCode::undeclared_sink: return "undeclared-sink";
        case ViolationCode::self_loop: return "self-loop";
        case ViolationCode::duplicate_arc: return "duplicate-arc";
        case ViolationCode::no_sink_path: return "no-sink-path";
    }
    return "unknown";
}

struct Violation {
    ViolationCode code;
    std::string subject;   // vertex name or "tail->head"
    std::string message;
};

struct GraphStats {
    long long agent_count = 0;
    long long alternative_count = 0;
    int max_out_degree = 0;
    bool is_dag = false;
    std::optional<int> depth;   // longest path length, DAGs only
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
    GraphStats stats;
};

/// A directed graph whose sinks are exactly the declared alternatives and in
/// which every agent has a path to at least one alternative. Immutable after
/// construction and safe to share across threads.
class ElectionGraph {
public:
    ElectionGraph(std::shared_ptr<const Universe> universe, std::vector<std::vector<Vertex>> successors) {
        std::string err;
        auto g = try_build(std::move(universe), std::move(successors), &err);
        if (!g) throw std::invalid_argument("invalid election graph: " + err);
        *this = std::move(*g);
    }

    /// Non-throwing construction; on failure returns nullopt and stores the
    /// first problem found in *err.
    static std::optional<ElectionGraph> try_build(std::shared_ptr<const Universe> universe,
                                                  std::vector<std::vector<Vertex>> successors,
                                                  std::string* err) {
        ElectionGraph g;
        g.u_ = std::move(universe);
        const int n = g.u_->size();
        if (static_cast<int>(successors.size()) != n) {
            if (err) *err = "adjacency size mismatch";
            return std::nullopt;
        }
        std::size_t arcs = 0;
        for (Vertex v = 0; v < n; ++v) {
            auto& succ = successors[static_cast<std::size_t>(v)];
            std::sort(succ.begin(), succ.end());
            if (std::adjacent_find(succ.begin(), succ.end()) != succ.end()) {
                if (err) *err = "duplicate arc from " + g.u_->name(v);
                return std::nullopt;
            }
            for (Vertex w : succ) {
                if (w < 0 || w >= n) {
                    if (err) *err = "arc target out of range";
                    return std::nullopt;
                }
                if (w == v) {
                    if (err) *err = "self-loop at " + g.u_->name(v);
                    return std::nullopt;
                }
            }
            if (g.u_->is_alternative(v) && !succ.empty()) {
                if (err) *err = "alternative " + g.u_->name(v) + " has an out-arc";
                return std::nullopt;
            }
            if (!g.u_->is_alternative(v) && succ.empty()) {
                if (err) *err = "agent " + g.u_->name(v) + " has no out-arc";
                return std::nullopt;
            }
            arcs += succ.size();
        }
        g.succ_off_.assign(static_cast<std::size_t>(n) + 1, 0);
        g.succ_.reserve(arcs);
        for (Vertex v = 0; v < n; ++v) {
            g.succ_off_[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(g.succ_.size());
            for (Vertex w : successors[static_cast<std::size_t>(v)]) g.succ_.push_back(w);
        }
        g.succ_off_[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(g.succ_.size());
        g.build_predecessors();
        if (!g.all_reach_sink()) {
            if (err) *err = "an agent has no path to any alternative";
            return std::nullopt;
        }
        return g;
    }

    const Universe& universe() const { return *u_; }
    const std::shared_ptr<const Universe>& universe_ptr() const { return u_; }
    int vertex_count() const { return u_->size(); }
    int agent_count() const { return u_->agent_count(); }
    long long arc_count() const { return static_cast<long long>(succ_.size()); }

    const std::string& name(Vertex v) const { return u_->name(v); }
    Vertex find(std::string_view name) const { return u_->find(name); }
    bool is_alternative(Vertex v) const { return u_->is_alternative(v); }
    const std::vector<Vertex>& alternatives() const { return u_->alternatives(); }
    const std::vector<Vertex>& agents() const { return u_->agents(); }

    std::span<const Vertex> successors(Vertex v) const {
        return {succ_.data() + succ_off_[static_cast<std::size_t>(v)],
                succ_.data() + succ_off_[static_cast<std::size_t>(v) + 1]};
    }
    std::span<const Vertex> predecessors(Vertex v) const {
        return {pred_.data() + pred_off_[static_cast<std::size_t>(v)],
                pred_.data() + pred_off_[static_cast<std::size_t>(v) + 1]};
    }
    bool has_arc(Vertex u, Vertex v) const {
        auto s = successors(u);
        return std::binary_search(s.begin(), s.end(), v);
    }
    int out_degree(Vertex v) const { return static_cast<int>(successors(v).size()); }

    /// Adjacency as plain vectors, for edit-style rebuilds.
    std::vector<std::vector<Vertex>> adjacency_copy() const {
        std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count()));
        for (Vertex v = 0; v < vertex_count(); ++v) {
            auto s = successors(v);
            adj[static_cast<std::size_t>(v)].assign(s.begin(), s.end());
        }
        return adj;
    }

    bool operator==(const ElectionGraph& o) const {
        return *u_ == *o.u_ && succ_off_ == o.succ_off_ && succ_ == o.succ_;
    }

private:
    ElectionGraph() = default;

    void build_predecessors() {
        const int n = u_->size();
        pred_off_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (Vertex w : succ_) pred_off_[static_cast<std::size_t>(w) + 1]++;
        for (std::size_t i = 1; i < pred_off_.size(); ++i) pred_off_[i] += pred_off_[i - 1];
        pred_.assign(succ_.size(), 0);
        std::vector<std::int64_t> cursor(pred_off_.begin(), pred_off_.end() - 1);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : successors(v)) pred_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(w)]++)] = v;
        // predecessor lists come out sorted because tails are scanned in order
    }

    bool all_reach_sink() const {
        const int n = u_->size();
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> queue;
        queue.reserve(static_cast<std::size_t>(n));
        for (Vertex a : u_->alternatives()) {
            seen[static_cast<std::size_t>(a)] = 1;
            queue.push_back(a);
        }
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex p : predecessors(queue[i]))
                if (!seen[static_cast<std::size_t>(p)]) {
                    seen[static_cast<std::size_t>(p)] = 1;
                    queue.push_back(p);
                }
        return static_cast<int>(queue.size()) == n;
    }

    std::shared_ptr<const Universe> u_;
    std::vector<std::int64_t> succ_off_;
    std::vector<Vertex> succ_;
    std::vector<std::int64_t> pred_off_;
    std::vector<Vertex> pred_;
};

struct ValidationResult {
    ValidationReport report;
    std::optional<ElectionGraph> graph;        // present when ok
    std::vector<std::string> pruned_agents;    // prune mode only
};

/// A chosen delegation: every agent has exactly one successor, the result is
/// acyclic, and the sink set is unchanged. `children(v)` lists the agents
/// delegating directly to v.
class DelegationGraph {
public:
    DelegationGraph(std::shared_ptr<const Universe> universe, std::vector<Vertex> choice) {
        std::string err;
        auto d = try_build(std::move(universe), std::move(choice), &err);
        if (!d) throw std::invalid_argument("invalid delegation graph: " + err);
        *this = std::move(*d);
    }

    static std::optional<DelegationGraph> try_build(std::shared_ptr<const Universe> universe,
                                                    std::vector<Vertex> choice, std::string* err) {
        DelegationGraph d;
        d.u_ = std::move(universe);
        d.choice_ = std::move(choice);
        const int n = d.u_->size();
        if (static_cast<int>(d.choice_.size()) != n) {
            if (err) *err = "choice map size mismatch";
            return std::nullopt;
        }
        for (Vertex v = 0; v < n; ++v) {
            Vertex c = d.choice_[static_cast<std::size_t>(v)];
            if (d.u_->is_alternative(v)) {
                if (c != no_vertex) {
                    if (err) *err = "alternative " + d.u_->name(v) + " has an out-arc";
                    return std::nullopt;
                }
            } else {
                if (c == no_vertex) {
                    if (err) *err = "agent " + d.u_->name(v) + " has no delegation";
                    return std::nullopt;
                }
                if (c < 0 || c >= n || c == v) {
                    if (err) *err = "bad delegation target for " + d.u_->name(v);
                    return std::nullopt;
                }
            }
        }
        if (!d.check_acyclic()) {
            if (err) *err = "delegation contains a cycle";
            return std::nullopt;
        }
        d.build_children();
        return d;
    }

    /// Trusted path for enumerators that maintain acyclicity themselves.
    static DelegationGraph from_valid_choices(std::shared_ptr<const Universe> universe,
                                              std::vector<Vertex> choice) {
        DelegationGraph d;
        d.u_ = std::move(universe);
        d.choice_ = std::move(choice);
        assert(d.check_acyclic());
        d.build_children();
        return d;
    }

    const Universe& universe() const { return *u_; }
    const std::shared_ptr<const Universe>& universe_ptr() const { return u_; }
    int vertex_count() const { return u_->size(); }
    int agent_count() const { return u_->agent_count(); }
    const std::string& name(Vertex v) const { return u_->name(v); }
    Vertex find(std::string_view name) const { return u_->find(name); }
    bool is_alternative(Vertex v) const { return u_->is_alternative(v); }
    const std::vector<Vertex>& alternatives() const { return u_->alternatives(); }
    const std::vector<Vertex>& agents() const { return u_->agents(); }

    Vertex choice(Vertex v) const { return choice_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& choices() const { return choice_; }

    std::span<const Vertex> children(Vertex v) const {
        return {child_.data() + child_off_[static_cast<std::size_t>(v)],
                child_.data() + child_off_[static_cast<std::size_t>(v) + 1]};
    }

    bool operator==(const DelegationGraph& o) const { return *u_ == *o.u_ && choice_ == o.choice_; }

private:
    DelegationGraph() = default;

    bool check_acyclic() const {
        const int n = u_->size();
        // 0 = unvisited, 1 = on current walk, 2 = known to terminate
        std::vector<char> state(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> walk;
        for (Vertex v = 0; v < n; ++v) {
            if (state[static_cast<std::size_t>(v)]) continue;
            walk.clear();
            Vertex cur = v;
            while (cur != no_vertex && state[static_cast<std::size_t>(cur)] == 0) {
                state[static_cast<std::size_t>(cur)] = 1;
                walk.push_back(cur);
                cur = choice_[static_cast<std::size_t>(cur)];
            }
            if (cur != no_vertex && state[static_cast<std::size_t>(cur)] == 1) return false;
            for (Vertex w : walk) state[static_cast<std::size_t>(w)] = 2;
        }
        return true;
    }

    void build_children() {
        const int n = u_->size();
        child_off_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (Vertex v = 0; v < n; ++v) {
            Vertex c = choice_[static_cast<std::size_t>(v)];
            if (c != no_vertex) child_off_[static_cast<std::size_t>(c) + 1]++;
        }
        for (std::size_t i = 1; i < child_off_.size(); ++i) child_off_[i] += child_off_[i - 1];
        child_.assign(static_cast<std::size_t>(child_off_.back()), 0);
        std::vector<std::int64_t> cursor(child_off_.begin(), child_off_.end() - 1);
        for (Vertex v = 0; v < n; ++v) {
            Vertex c = choice_[static_cast<std::size_t>(v)];
            if (c != no_vertex) child_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(c)]++)] = v;
        }
    }

    std::shared_ptr<const Universe> u_;
    std::vector<Vertex> choice_;
    std::vector<std::int64_t> child_off_;
    std::vector<Vertex> child_;
};

namespace detail {

// Resolves a RawGraph's names; used by validation.
struct ResolvedRaw {
    std::shared_ptr<const Universe> universe;
    std::vector<std::vector<Vertex>> successors;   // unsorted, may hold duplicates
};

inline bool token_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
    return s != "->";
}

}   // namespace detail

inline GraphStats graph_stats(const ElectionGraph& g) {
    GraphStats st;
    st.agent_count = g.agent_count();
    st.alternative_count = static_cast<long long>(g.alternatives().size());
    for (Vertex v : g.agents()) st.max_out_degree = std::max(st.max_out_degree, g.out_degree(v));
    // Kahn's algorithm; if it consumes everything the graph is a DAG and the
    // same pass yields the depth.
    const int n = g.vertex_count();
    std::vector<int> outdeg(static_cast<std::size_t>(n));
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        outdeg[static_cast<std::size_t>(v)] = g.out_degree(v);
        if (outdeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    int max_depth = 0;
    std::size_t processed = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        ++processed;
        for (Vertex p : g.predecessors(v)) {
            depth[static_cast<std::size_t>(p)] =
                std::max(depth[static_cast<std::size_t>(p)], depth[static_cast<std::size_t>(v)] + 1);
            if (--outdeg[static_cast<std::size_t>(p)] == 0) queue.push_back(p);
        }
        max_depth = std::max(max_depth, depth[static_cast<std::size_t>(v)]);
    }
    st.is_dag = processed == static_cast<std::size_t>(n);
    if (st.is_dag) st.depth = max_depth;
    return st;
}

/// Checks every ElectionGraph invariant on a raw description and reports all
/// violations. With prune enabled, agents without a sink path are removed
/// (transitively) instead of reported as fatal, and the repaired graph is
/// returned together with the pruned agent names.
inline ValidationResult validate_election_graph(const RawGraph& raw, bool prune = false) {
    ValidationResult res;
    auto& out = res.report;
    auto add = [&](ViolationCode code, std::string subject, std::string message) {
        out.violations.push_back({code, std::move(subject), std::move(message)});
    };

    // Name resolution.
    std::vector<std::string> names;
    for (const auto& a : raw.alternatives) names.push_back(a);
    for (const auto& [agent, _] : raw.agent_arcs) names.push_back(agent);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::vector<std::string> alt_sorted = raw.alternatives;
    std::sort(alt_sorted.begin(), alt_sorted.end());
    for (std::size_t i = 1; i < alt_sorted.size(); ++i)
        if (alt_sorted[i] == alt_sorted[i - 1])
            add(ViolationCode::duplicate_declaration, alt_sorted[i], "alternative declared twice");
    alt_sorted.erase(std::unique(alt_sorted.begin(), alt_sorted.end()), alt_sorted.end());

    auto find_name = [&](const std::string& n) -> Vertex {
        auto it = std::lower_bound(names.begin(), names.end(), n);
        if (it == names.end() || *it != n) return no_vertex;
        return static_cast<Vertex>(it - names.begin());
    };
    auto is_alt_name = [&](const std::string& n) {
        return std::binary_search(alt_sorted.begin(), alt_sorted.end(), n);
    };

    for (const auto& n : names)
        if (!detail::token_ok(n)) add(ViolationCode::empty_name, n, "invalid vertex name");

    const int n_vertices = static_cast<int>(names.size());
    std::vector<std::vector<Vertex>> succ(static_cast<std::size_t>(n_vertices));
    std::vector<char> declared(static_cast<std::size_t>(n_vertices), 0);
    for (const auto& [agent, targets] : raw.agent_arcs) {
        Vertex v = find_name(agent);
        if (declared[static_cast<std::size_t>(v)])
            add(ViolationCode::duplicate_declaration, agent, "agent declared twice");
        declared[static_cast<std::size_t>(v)] = 1;
        if (is_alt_name(agent))
            add(ViolationCode::alternative_out_arc, agent, "declared alternative has out-arcs");
        for (const auto& t : targets) {
            Vertex w = find_name(t);
            if (w == no_vertex) {
                add(ViolationCode::unknown_name, t, "arc target never declared");
                continue;
            }
            if (w == v) {
                add(ViolationCode::self_loop, agent, "arc from " + agent + " to itself");
                continue;
            }
            auto& s = succ[static_cast<std::size_t>(v)];
            if (std::find(s.begin(), s.end(), w) != s.end()) {
                add(ViolationCode::duplicate_arc, agent + "->" + t, "arc listed twice");
                continue;
            }
            s.push_back(w);
        }
    }
    // Non-alternatives without out-arcs are sinks the input did not declare
    // as alternatives, whether they were never declared as agents or were
    // declared with an empty target list.
    for (Vertex v = 0; v < n_vertices; ++v)
        if (!is_alt_name(names[static_cast<std::size_t>(v)]) && succ[static_cast<std::size_t>(v)].empty())
            add(ViolationCode::undeclared_sink, names[static_cast<std::size_t>(v)],
                "vertex has no out-arcs but is not a declared alternative");

    // Sink-path check on whatever resolved; meaningful only if nothing above
    // is structurally broken, which is also when it is reported.
    std::vector<char> reaches(static_cast<std::size_t>(n_vertices), 0);
    {
        std::vector<std::vector<Vertex>> preds(static_cast<std::size_t>(n_vertices));
        for (Vertex v = 0; v < n_vertices; ++v)
            for (Vertex w : succ[static_cast<std::size_t>(v)]) preds[static_cast<std::size_t>(w)].push_back(v);
        std::vector<Vertex> queue;
        for (Vertex v = 0; v < n_vertices; ++v)
            if (is_alt_name(names[static_cast<std::size_t>(v)])) {
                reaches[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex p : preds[queue[i]])
                if (!reaches[static_cast<std::size_t>(p)]) {
                    reaches[static_cast<std::size_t>(p)] = 1;
                    queue.push_back(p);
                }
    }
    bool structurally_sound = out.violations.empty();
    std::vector<Vertex> unreachable;
    for (Vertex v = 0; v < n_vertices; ++v)
        if (!reaches[static_cast<std::size_t>(v)]) unreachable.push_back(v);

    if (!unreachable.empty() && !(prune && structurally_sound)) {
        for (Vertex v : unreachable)
            add(ViolationCode::no_sink_path, names[static_cast<std::size_t>(v)],
                "agent cannot reach any alternative");
    }

    if (!out.violations.empty()) {
        out.ok = false;
        return res;
    }

    // Build the (possibly pruned) graph.
    std::vector<std::string> agent_names, alt_names;
    std::vector<std::pair<std::string, std::vector<Vertex>>> kept;
    for (Vertex v = 0; v < n_vertices; ++v) {
        const auto& nm = names[static_cast<std::size_t>(v)];
        if (!reaches[static_cast<std::size_t>(v)]) {
            res.pruned_agents.push_back(nm);
            continue;
        }
        if (is_alt_name(nm)) alt_names.push_back(nm);
        else agent_names.push_back(nm);
    }
    auto universe = Universe::create(agent_names, alt_names);
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(universe->size()));
    for (Vertex v = 0; v < n_vertices; ++v) {
        if (!reaches[static_cast<std::size_t>(v)]) continue;
        Vertex nv = universe->find(names[static_cast<std::size_t>(v)]);
        for (Vertex w : succ[static_cast<std::size_t>(v)]) {
            if (!reaches[static_cast<std::size_t>(w)]) continue;
            adj[static_cast<std::size_t>(nv)].push_back(universe->find(names[static_cast<std::size_t>(w)]));
        }
    }
    std::string err;
    auto g = ElectionGraph::try_build(std::move(universe), std::move(adj), &err);
    if (!g) {
        // Pruning removed a vertex another agent depended on for its only
        // arcs; cannot happen, since any agent with a path to a sink keeps it.
        add(ViolationCode::no_sink_path, "", err);
        out.ok = false;
        return res;
    }
    out.ok = true;
    out.stats = graph_stats(*g);
    res.graph = std::move(g);
    return res;
}

/// Convenience builder for tests and generators; throws on invalid input.
inline ElectionGraph build_election_graph(const std::vector<std::string>& alternatives,
                                          const std::vector<std::pair<std::string, std::vector<std::string>>>& agent_arcs) {
    RawGraph raw{alternatives, agent_arcs};
    auto res = validate_election_graph(raw);
    if (!res.report.ok) {
        std::string msg = "invalid election graph";
        if (!res.report.violations.empty())
            msg += ": " + res.report.violations.front().message + " (" + res.report.violations.front().subject + ")";
        throw std::invalid_argument(msg);
    }
    return std::move(*res.graph);
}

}   // namespace liqdem
