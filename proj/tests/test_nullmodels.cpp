#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "affnet/datasets.hpp"
#include "affnet/errors.hpp"
#include "affnet/nullmodels.hpp"
#include "support/oracle.hpp"

using namespace affnet;

TEST_CASE("the unique realization of its degree sequence never moves") {
    // one event attended by everyone: every swap proposal hits an existing edge
    const auto g = datasets::biclique(4, 1);
    const RandomizeResult r = randomize(g, 5000, 17);
    CHECK(r.applied == 0);
    CHECK(r.attempted == 5000);
    CHECK(r.graph.edges() == g.edges());

    const CRandResult c = c_rand(g, classical_scheme(), 50, 10, 3);
    CHECK(c.mean == global_cc(g, classical_scheme()).value());
    CHECK(c.stddev == 0.0);
    CHECK(c.undefined_draws == 0);
}

TEST_CASE("degree sequences survive many swaps") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto g = oracle::random_graph(seed, 6, 12, 4, 10, 0.2, 0.5);
        if (g.edge_count() < 2) continue;
        const auto before = degree_sequences(g);
        const RandomizeResult r = randomize(g, 10000, seed * 11);
        CHECK(degree_sequences(r.graph) == before);
        CHECK(r.graph.edge_count() == g.edge_count());

        // per-actor degrees are preserved too, not just the multiset
        CHECK(r.graph.actor_degrees() == g.actor_degrees());
        CHECK(r.graph.event_degrees() == g.event_degrees());
    }
}

TEST_CASE("samples stay simple bipartite graphs") {
    const auto g = datasets::load("dg1");
    const RandomizeResult r = randomize(g, 20000, 5);
    const auto edges = r.graph.edges();
    const std::set<std::pair<int, int>> unique(edges.begin(), edges.end());
    CHECK(unique.size() == edges.size());
}

TEST_CASE("the two-by-two alternating square reaches both states") {
    // edges (p,a), (q,b); the only productive swap flips to (p,b), (q,a)
    const auto g = from_edge_list(std::vector<EdgeRow>{{"p", "a", std::nullopt},
                                                       {"q", "b", std::nullopt}})
                       .graph;
    std::set<std::string> seen;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const RandomizeResult r = randomize(g, 1, seed);
        std::string key;
        for (const auto& [a, e] : r.graph.edges())
            key += r.graph.actor_id(a) + r.graph.event_id(e) + ";";
        seen.insert(key);
        // every applied swap toggles between the two alternating states
        CHECK((r.applied == 0 || r.applied == 1));
    }
    CHECK(seen.size() == 2);
}

TEST_CASE("fixed seeds reproduce the ensemble bit for bit") {
    const auto g = datasets::load("dg2");
    const CRandResult a = c_rand(g, classical_scheme(), 200, 0, 42);
    const CRandResult b = c_rand(g, classical_scheme(), 200, 0, 42);
    CHECK(a.mean == b.mean);
    CHECK(a.stddev == b.stddev);
    CHECK(a.undefined_draws == b.undefined_draws);

    const CRandResult c = c_rand(g, classical_scheme(), 200, 0, 43);
    CHECK(a.mean != c.mean);  // different seed, different ensemble
}

TEST_CASE("dg2 ensemble mean sits inside the unit interval") {
    const auto g = datasets::load("dg2");
    const CRandResult r = c_rand(g, classical_scheme(), 1000, 0, 7);
    CHECK(r.mean > 0.0);
    CHECK(r.mean < 1.0);
    CHECK(r.samples == 1000);
    // regression fixture recorded at first run; the RNG is pinned, so this
    // value is stable across platforms
    CHECK(r.mean == 0.8940065789473678);
}

TEST_CASE("the classical coefficient over its null ensemble is a finite positive ratio") {
    const auto g = datasets::load("dg1");
    const CRandResult r = c_rand(g, classical_scheme(), 100, 0, 11);
    const double observed = global_cc(g, classical_scheme()).value();
    CHECK(r.mean > 0.0);
    const double corrected = observed / r.mean;
    CHECK(corrected > 0.0);
    CHECK(std::isfinite(corrected));
}

TEST_CASE("preconditions") {
    const auto tiny =
        from_edge_list(std::vector<EdgeRow>{{"p", "a", std::nullopt}}).graph;
    CHECK_THROWS_AS(randomize(tiny, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(c_rand(datasets::load("dg2"), classical_scheme(), 0, 0, 1),
                    std::invalid_argument);
}
