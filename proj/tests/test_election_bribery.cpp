#include <catch2/catch_amalgamated.hpp>

#include "liqdem/election_bribery.hpp"
#include "liqdem/oracle.hpp"
#include "liqdem/reductions.hpp"
#include "testutil.hpp"

using namespace liqdem;
using testutil::footnote_graph;

namespace {

BriberyQuery make_query(const ElectionGraph& g, const std::string& target, long long k,
                        VotingRule rule, Quantifier quant,
                        CostModel cost = CostModel::arcs, SearchMode mode = SearchMode::restricted) {
    BriberyQuery q;
    q.target = g.find(target);
    q.budget = k;
    q.rule = rule;
    q.quantifier = quant;
    q.cost_model = cost;
    q.mode = mode;
    return q;
}

}   // namespace

TEST_CASE("apply_edits") {
    auto g = footnote_graph();
    SECTION("empty edit set is the identity") {
        CHECK(apply_edits(g, EditSet{}) == g);
    }
    SECTION("deleting an agent's only arc without compensation fails") {
        EditSet e;
        e.deletions.push_back({g.find("a1"), g.find("c")});
        CHECK_THROWS_AS(apply_edits(g, e), std::invalid_argument);
    }
    SECTION("adding an arc keeps the graph valid") {
        EditSet e;
        e.additions.push_back({g.find("a1"), g.find("d")});
        auto edited = apply_edits(g, e);
        CHECK(edited.arc_count() == g.arc_count() + 1);
        CHECK(edited.has_arc(g.find("a1"), g.find("d")));
    }
    SECTION("adding a present arc or deleting an absent one is rejected") {
        EditSet add_dup;
        add_dup.additions.push_back({g.find("a1"), g.find("c")});
        CHECK_THROWS_AS(apply_edits(g, add_dup), std::invalid_argument);
        EditSet del_missing;
        del_missing.deletions.push_back({g.find("a1"), g.find("d")});
        CHECK_THROWS_AS(apply_edits(g, del_missing), std::invalid_argument);
    }
    SECTION("an alternative must not gain an out-arc") {
        EditSet e;
        e.additions.push_back({g.find("c"), g.find("d")});
        CHECK_THROWS_AS(apply_edits(g, e), std::invalid_argument);
    }
}

TEST_CASE("edit set costs") {
    auto g = footnote_graph();
    EditSet e;
    e.deletions.push_back({g.find("a3"), g.find("a2")});
    e.additions.push_back({g.find("a3"), g.find("c")});
    CHECK(e.arc_cost() == 2);
    CHECK(e.agent_cost() == 1);
}

TEST_CASE("k = 0 bribery coincides with winner determination") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RandomGraphParams p;
        p.n_agents = 1 + seed % 7;
        p.n_alts = 2;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 0;
        p.seed = seed + 333;
        auto g = random_election_graph(p);
        for (Vertex s : g.alternatives()) {
            for (auto quant : {Quantifier::one, Quantifier::all}) {
                for (auto mode : {SearchMode::restricted, SearchMode::exhaustive}) {
                    BriberyQuery q;
                    q.target = s;
                    q.budget = 0;
                    q.rule = VotingRule::majority();
                    q.quantifier = quant;
                    q.mode = mode;
                    bool direct = quant == Quantifier::one ? one_majority(g, s).answer
                                                           : all_majority(g, s).answer;
                    auto r = solve_election_bribery(g, q);
                    CHECK(r.yes() == direct);
                    if (r.yes()) CHECK(r.edits->empty());
                }
            }
        }
    }
}

TEST_CASE("clique construction: all-majority bribery by deleting t-arcs") {
    auto out = clique_to_all_eb(UndirectedGraph::create({"a", "b", "c"},
                                                        {{"a", "b"}, {"a", "c"}, {"b", "c"}}), 2);
    const auto& g = out.graph;
    REQUIRE(out.budget == 2);
    auto q = make_query(g, out.target, 2, VotingRule::majority(), Quantifier::all);
    auto r = solve_election_bribery(g, q);
    REQUIRE(r.yes());
    CHECK(r.edits->arc_cost() == 2);
    CHECK(r.edits->additions.empty());
    for (const Arc& a : r.edits->deletions) CHECK(g.name(a.head) == "t");
    // after the edits, half of the six agents can only reach s
    auto edited = apply_edits(g, *r.edits);
    CHECK(res_rev_bfs(edited, g.find("s")).size() == 4);   // 3 agents + s itself
    CHECK(all_majority(edited, g.find("s")).answer);

    SECTION("budget 1 is not enough") {
        CHECK_FALSE(solve_election_bribery(g, make_query(g, out.target, 1, VotingRule::majority(),
                                                         Quantifier::all)).yes());
    }
}

TEST_CASE("independent-set construction: one-majority bribery by adding an arc to s") {
    auto out = is_to_one_eb(UndirectedGraph::create({"w1", "w2", "w3", "w4"},
                                                    {{"w1", "w2"}, {"w2", "w3"}, {"w3", "w4"}, {"w1", "w4"}}), 1);
    const auto& g = out.graph;
    CHECK(g.agent_count() == 10);
    auto q = make_query(g, out.target, 1, VotingRule::majority(), Quantifier::one);
    auto r = solve_election_bribery(g, q);
    REQUIRE(r.yes());
    REQUIRE(r.edits->arc_cost() == 1);
    REQUIRE(r.edits->deletions.empty());
    const Arc added = r.edits->additions.front();
    CHECK(g.name(added.head) == "s");
    CHECK(out.tags.at(g.name(added.tail)).role == Role::vertex_agent);
    auto edited = apply_edits(g, *r.edits);
    auto om = one_majority(edited, g.find("s"));
    REQUIRE(om.answer);
    CHECK(voting_power(*om.certificate)[g.find("s")] == 5);
}

TEST_CASE("monotonicity in the budget") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomGraphParams p;
        p.n_agents = 2 + seed % 6;
        p.n_alts = 2;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 0;
        p.seed = seed + 777;
        auto g = random_election_graph(p);
        Vertex s = g.alternatives()[seed % 2];
        bool prev = false;
        for (long long k = 0; k <= 2; ++k) {
            auto r = solve_election_bribery(g, make_query(g, g.name(s), k, VotingRule::majority(),
                                                          Quantifier::one));
            if (prev) CHECK(r.yes());
            prev = r.yes();
        }
    }
}

TEST_CASE("agent-model optima never cost more than arc-model optima") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        RandomGraphParams p;
        p.n_agents = 2 + seed % 5;
        p.n_alts = 2;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = true;
        p.seed = seed + 50;
        auto g = random_election_graph(p);
        Vertex s = g.alternatives()[0];
        for (auto quant : {Quantifier::one, Quantifier::all}) {
            std::optional<long long> arc_opt, agent_opt;
            for (long long k = 0; k <= 2 && !arc_opt; ++k) {
                auto r = solve_election_bribery(g, make_query(g, g.name(s), k, VotingRule::majority(),
                                                              quant, CostModel::arcs,
                                                              SearchMode::exhaustive));
                if (r.yes()) arc_opt = r.edits->arc_cost();
            }
            for (long long k = 0; k <= 2 && !agent_opt; ++k) {
                auto r = solve_election_bribery(g, make_query(g, g.name(s), k, VotingRule::majority(),
                                                              quant, CostModel::agents,
                                                              SearchMode::exhaustive));
                if (r.yes()) agent_opt = r.edits->agent_cost();
            }
            if (arc_opt) {
                REQUIRE(agent_opt.has_value());
                CHECK(*agent_opt <= *arc_opt);
            }
        }
    }
}

TEST_CASE("restricted and exhaustive modes agree on small constructive instances") {
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        RandomGraphParams p;
        p.n_agents = 2 + seed % 7;
        p.n_alts = 2;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 0;
        p.seed = seed + 4242;
        auto g = random_election_graph(p);
        Vertex s = g.alternatives()[seed % 2];
        for (auto rule : {VotingRule::majority(), VotingRule::plurality()}) {
            for (auto quant : {Quantifier::one, Quantifier::all}) {
                for (auto cost : {CostModel::arcs, CostModel::agents}) {
                    for (long long k = 0; k <= 2; ++k) {
                        auto qr = make_query(g, g.name(s), k, rule, quant, cost, SearchMode::restricted);
                        auto qe = make_query(g, g.name(s), k, rule, quant, cost, SearchMode::exhaustive);
                        auto rr = solve_election_bribery(g, qr);
                        auto re = solve_election_bribery(g, qe);
                        CHECK(rr.yes() == re.yes());
                        if (rr.yes()) CHECK(rr.edits->cost(cost) == re.edits->cost(cost));
                        ++compared;
                    }
                }
            }
        }
    }
    REQUIRE(compared == 25 * 2 * 2 * 2 * 3);
}

TEST_CASE("solver matches the unrestricted oracle on tiny instances") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        RandomGraphParams p;
        p.n_agents = 2 + seed % 4;
        p.n_alts = 2;
        p.max_out_degree = 1 + seed % 2;
        p.acyclic = seed % 2 == 0;
        p.seed = seed + 616;
        auto g = random_election_graph(p);
        Vertex s = g.alternatives()[0];
        for (auto quant : {Quantifier::one, Quantifier::all}) {
            for (auto cost : {CostModel::arcs, CostModel::agents}) {
                for (long long k = 0; k <= 2; ++k) {
                    auto q = make_query(g, g.name(s), k, VotingRule::majority(), quant, cost,
                                        SearchMode::exhaustive);
                    auto solver = solve_election_bribery(g, q);
                    auto oracle = oracle_election_bribery(g, q);
                    CHECK(solver.yes() == oracle.has_value());
                    if (solver.yes()) CHECK(solver.edits->cost(cost) == oracle->cost(cost));
                }
            }
        }
    }
}

TEST_CASE("returned edit sets make the stated query hold end to end") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomGraphParams p;
        p.n_agents = 2 + seed % 6;
        p.n_alts = 2 + seed % 2;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 1;
        p.seed = seed + 8181;
        auto g = random_election_graph(p);
        Vertex s = g.alternatives()[0];
        for (auto quant : {Quantifier::one, Quantifier::all}) {
            auto q = make_query(g, g.name(s), 2, VotingRule::majority(), quant);
            auto r = solve_election_bribery(g, q);
            if (!r.yes()) continue;
            auto edited = apply_edits(g, *r.edits);
            bool holds = quant == Quantifier::one ? one_majority(edited, s).answer
                                                  : all_majority(edited, s).answer;
            CHECK(holds);
        }
    }
}

TEST_CASE("destructive bribery") {
    SECTION("requires exhaustive mode") {
        auto g = footnote_graph();
        auto q = make_query(g, "c", 1, VotingRule::majority(), Quantifier::one);
        q.goal = Goal::destructive;
        CHECK_THROWS_AS(solve_election_bribery(g, q), std::invalid_argument);
    }
    SECTION("matches the oracle on tiny instances") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            RandomGraphParams p;
            p.n_agents = 2 + seed % 3;
            p.n_alts = 2;
            p.max_out_degree = 1 + seed % 2;
            p.acyclic = true;
            p.seed = seed + 999;
            auto g = random_election_graph(p);
            Vertex s = g.alternatives()[0];
            for (auto quant : {Quantifier::one, Quantifier::all}) {
                for (long long k = 0; k <= 1; ++k) {
                    auto q = make_query(g, g.name(s), k, VotingRule::majority(), quant,
                                        CostModel::arcs, SearchMode::exhaustive);
                    q.goal = Goal::destructive;
                    CHECK(solve_election_bribery(g, q).yes() == oracle_election_bribery(g, q).has_value());
                }
            }
        }
    }
}

TEST_CASE("threshold with plurality is rejected") {
    auto g = footnote_graph();
    BriberyQuery q;
    q.target = g.find("c");
    q.budget = 1;
    q.rule = VotingRule::majority_with_threshold(1);
    q.rule.kind = VotingRule::Kind::plurality;   // inconsistent on purpose
    CHECK_THROWS_AS(solve_election_bribery(g, q), std::invalid_argument);
}
