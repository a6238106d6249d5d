#include <catch2/catch_amalgamated.hpp>

#include "liqdem/io.hpp"
#include "liqdem/oracle.hpp"
#include "liqdem/reductions.hpp"
#include "liqdem/winner.hpp"
#include "testutil.hpp"

using namespace liqdem;
using testutil::footnote_graph;
using testutil::make_delegation;

namespace {

bool wins(const DelegationGraph& d, Vertex s, const VotingRule& rule) {
    auto w = winner_set(d, rule);
    return std::binary_search(w.begin(), w.end(), s);
}

}   // namespace

TEST_CASE("vote_bounds") {
    auto g = footnote_graph();
    auto b = vote_bounds(g, g.find("c"));
    CHECK(b.lo == 1);
    CHECK(b.hi == 2);
    CHECK(voting_power(b.witness_lo)[g.find("c")] == 1);
    CHECK(voting_power(b.witness_hi)[g.find("c")] == 2);
    CHECK(is_delegation_subgraph(b.witness_lo, g));
    CHECK(is_delegation_subgraph(b.witness_hi, g));

    SECTION("single alternative forces everything") {
        auto h = build_election_graph({"s"}, {{"a1", {"s"}}, {"a2", {"a1", "s"}}, {"a3", {"a2"}}});
        auto hb = vote_bounds(h, h.find("s"));
        CHECK(hb.lo == 3);
        CHECK(hb.hi == 3);
    }
    CHECK_THROWS_AS(vote_bounds(g, g.find("a1")), std::invalid_argument);
}

TEST_CASE("all_majority") {
    auto g = footnote_graph();
    auto r = all_majority(g, g.find("c"));
    CHECK_FALSE(r.answer);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->choice(g.find("a3")) == g.find("a2"));
    CHECK_FALSE(wins(*r.certificate, g.find("c"), VotingRule::majority()));

    SECTION("single alternative is always a majority winner") {
        auto h = build_election_graph({"s"}, {{"a1", {"s"}}, {"a2", {"a1"}}});
        CHECK(all_majority(h, h.find("s")).answer);
    }
    SECTION("threshold zero is a free pass") {
        CHECK(all_majority(g, g.find("c"), VotingRule::majority_with_threshold(0)).answer);
        CHECK(all_majority(g, g.find("d"), VotingRule::majority_with_threshold(0)).answer);
    }
    CHECK_THROWS_AS(all_majority(g, g.find("c"), VotingRule::plurality()), std::invalid_argument);
}

TEST_CASE("all_plurality") {
    auto g = footnote_graph();
    auto r = all_plurality(g, g.find("c"));
    CHECK_FALSE(r.answer);
    REQUIRE(r.certificate.has_value());
    // in the counterexample, d strictly beats c
    auto vp = voting_power(*r.certificate);
    CHECK(vp[g.find("d")] > vp[g.find("c")]);

    SECTION("single alternative") {
        auto h = build_election_graph({"s"}, {{"a1", {"s"}}});
        CHECK(all_plurality(h, h.find("s")).answer);
    }
    SECTION("two disconnected equal stars tie forever") {
        auto h = build_election_graph({"s", "t"},
                                      {{"a1", {"s"}}, {"a2", {"s"}}, {"b1", {"t"}}, {"b2", {"t"}}});
        CHECK(all_plurality(h, h.find("s")).answer);
        CHECK(all_plurality(h, h.find("t")).answer);
    }
}

TEST_CASE("one_majority") {
    auto g = footnote_graph();
    auto r = one_majority(g, g.find("c"));
    CHECK(r.answer);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->choice(g.find("a1")) == g.find("c"));
    CHECK(r.certificate->choice(g.find("a2")) == g.find("d"));
    CHECK(r.certificate->choice(g.find("a3")) == g.find("a1"));

    SECTION("isolated alternative never wins") {
        auto h = build_election_graph({"s", "t"}, {{"a1", {"t"}}, {"a2", {"t"}}});
        CHECK_FALSE(one_majority(h, h.find("s")).answer);
    }
    SECTION("threshold equal to the agent count with one alternative") {
        auto h = build_election_graph({"s"}, {{"a1", {"s"}}, {"a2", {"a1"}}});
        CHECK(one_majority(h, h.find("s"), VotingRule::majority_with_threshold(2)).answer);
    }
}

TEST_CASE("one_plurality") {
    SECTION("funnel to x") {
        auto g = build_election_graph({"x", "y"},
                                      {{"a1", {"x"}}, {"a2", {"y"}}, {"a3", {"a1", "a2"}}});
        auto r = one_plurality(g, g.find("x"));
        REQUIRE(r.yes());
        REQUIRE(r.certificate.has_value());
        CHECK(wins(*r.certificate, g.find("x"), VotingRule::plurality()));
        CHECK(r.certificate->choice(g.find("a3")) == g.find("a1"));
    }
    SECTION("r is capped at one vote") {
        auto g = build_election_graph({"x", "y", "r"},
                                      {{"a1", {"x"}}, {"a2", {"y"}}, {"a3", {"a1", "a2"}}, {"a4", {"r"}}});
        CHECK_FALSE(one_plurality(g, g.find("r")).yes());
        CHECK(one_plurality(g, g.find("x")).yes());
    }
    SECTION("node budget reports exhaustion distinctly") {
        auto out = vc_to_equal_power(
            UndirectedGraph::create({"w1", "w2", "w3"}, {{"w1", "w2"}, {"w2", "w3"}}), 1);
        auto hard = epd_to_one_plurality(out.graph);
        SearchOptions tiny;
        tiny.node_budget = 2;
        auto r = one_plurality(hard.graph, hard.graph.find(hard.target), tiny);
        CHECK(r.status == SearchStatus::budget_exhausted);
        CHECK_FALSE(r.certificate.has_value());
    }
}

TEST_CASE("equal_power") {
    SECTION("forced one-one split") {
        auto g = build_election_graph({"s", "t"}, {{"a1", {"s"}}, {"a2", {"t"}}});
        auto r = equal_power(g);
        REQUIRE(r.yes());
        auto vp = voting_power(*r.delegation);
        CHECK(vp[g.find("s")] == 1);
        CHECK(vp[g.find("t")] == 1);
    }
    SECTION("odd agent count is an immediate no") {
        auto g = build_election_graph({"s", "t"}, {{"a1", {"s"}}, {"a2", {"s"}}, {"a3", {"t"}}});
        CHECK_FALSE(equal_power(g).yes());
    }
    SECTION("wrong number of alternatives") {
        auto g = build_election_graph({"s"}, {{"a1", {"s"}}});
        CHECK_THROWS_AS(equal_power(g), std::invalid_argument);
    }
}

TEST_CASE("all implies one; two alternatives collapse the rules") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        RandomGraphParams p;
        p.n_agents = 1 + seed % 9;
        p.n_alts = 2 + seed % 2;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 0;
        p.seed = seed + 1000;
        auto g = random_election_graph(p);
        for (Vertex s : g.alternatives()) {
            bool am = all_majority(g, s).answer;
            bool om = one_majority(g, s).answer;
            bool ap = all_plurality(g, s).answer;
            bool op = one_plurality(g, s).yes();
            if (am) CHECK(om);
            if (ap) CHECK(op);
            if (g.alternatives().size() == 2) {
                CHECK(am == ap);
                CHECK(om == op);
            }
        }
    }
}

TEST_CASE("winner determination agrees with the oracle on small instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomGraphParams p;
        p.n_agents = 1 + seed % 10;
        p.n_alts = 2 + seed % 3;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 0;
        p.seed = seed + 5000;
        auto g = random_election_graph(p);
        for (Vertex s : g.alternatives()) {
            CHECK(all_majority(g, s).answer == oracle_winner(g, s, VotingRule::majority(), Quantifier::all));
            CHECK(one_majority(g, s).answer == oracle_winner(g, s, VotingRule::majority(), Quantifier::one));
            CHECK(all_plurality(g, s).answer == oracle_winner(g, s, VotingRule::plurality(), Quantifier::all));
            CHECK(one_plurality(g, s).yes() == oracle_winner(g, s, VotingRule::plurality(), Quantifier::one));
        }
    }
}

TEST_CASE("certificates re-evaluate to the claimed outcome") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        RandomGraphParams p;
        p.n_agents = 1 + seed % 9;
        p.n_alts = 2 + seed % 3;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 1;
        p.seed = seed + 9000;
        auto g = random_election_graph(p);
        for (Vertex s : g.alternatives()) {
            auto b = vote_bounds(g, s);
            CHECK(is_delegation_subgraph(b.witness_lo, g));
            CHECK(is_delegation_subgraph(b.witness_hi, g));
            CHECK(voting_power(b.witness_lo)[static_cast<std::size_t>(s)] == b.lo);
            CHECK(voting_power(b.witness_hi)[static_cast<std::size_t>(s)] == b.hi);
            auto am = all_majority(g, s);
            if (!am.answer) {
                REQUIRE(am.certificate.has_value());
                CHECK(is_delegation_subgraph(*am.certificate, g));
                CHECK_FALSE(wins(*am.certificate, s, VotingRule::majority()));
            }
            auto ap = all_plurality(g, s);
            if (!ap.answer) {
                REQUIRE(ap.certificate.has_value());
                CHECK(is_delegation_subgraph(*ap.certificate, g));
                CHECK_FALSE(wins(*ap.certificate, s, VotingRule::plurality()));
            }
            auto om = one_majority(g, s);
            if (om.answer) {
                REQUIRE(om.certificate.has_value());
                CHECK(is_delegation_subgraph(*om.certificate, g));
                CHECK(wins(*om.certificate, s, VotingRule::majority()));
            }
            auto op = one_plurality(g, s);
            if (op.yes()) {
                REQUIRE(op.certificate.has_value());
                CHECK(is_delegation_subgraph(*op.certificate, g));
                CHECK(wins(*op.certificate, s, VotingRule::plurality()));
            }
        }
    }
}

TEST_CASE("enumerated vote counts stay within the bounds") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomGraphParams p;
        p.n_agents = 1 + seed % 8;
        p.n_alts = 2 + seed % 2;
        p.max_out_degree = 1 + seed % 3;
        p.acyclic = seed % 2 == 0;
        p.seed = seed + 12000;
        auto g = random_election_graph(p);
        for (Vertex s : g.alternatives()) {
            auto b = vote_bounds(g, s);
            enumerate_delegations(g, [&](const DelegationGraph& d) {
                auto votes = voting_power(d)[static_cast<std::size_t>(s)];
                CHECK(votes >= b.lo);
                CHECK(votes <= b.hi);
                return true;
            });
        }
    }
}
