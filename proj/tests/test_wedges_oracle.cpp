#include <doctest.h>

#include <vector>

#include "affnet/census.hpp"
#include "affnet/datasets.hpp"
#include "affnet/errors.hpp"
#include "affnet/wedges.hpp"
#include "support/oracle.hpp"

using namespace affnet;

namespace {

std::vector<WedgeScheme> all_schemes() {
    std::vector<WedgeScheme> out;
    for (auto cat : {WedgeScheme::Category::All, WedgeScheme::Category::Injective,
                     WedgeScheme::Category::Induced})
        for (auto cong : {WedgeScheme::Congruence::None, WedgeScheme::Congruence::Structural,
                          WedgeScheme::Congruence::Actor})
            out.push_back(WedgeScheme{cat, cong, WedgeScheme::Formulation::ClosureRate});
    return out;
}

BipartiteGraph with_duplicated_event(const BipartiteGraph& g, int event) {
    GraphBuilder b;
    for (std::size_t a = 0; a < g.actor_count(); ++a) b.add_actor(g.actor_id(static_cast<int>(a)));
    for (std::size_t e = 0; e < g.event_count(); ++e) {
        const int ev = b.add_event(g.event_id(static_cast<int>(e)));
        for (int a : g.actors_of(static_cast<int>(e))) b.add_attendance(a, ev);
    }
    const int copy = b.add_event("dup");
    for (int a : g.actors_of(event)) b.add_attendance(a, copy);
    return b.build();
}

BipartiteGraph with_small_events(const BipartiteGraph& g) {
    GraphBuilder b;
    for (std::size_t a = 0; a < g.actor_count(); ++a) b.add_actor(g.actor_id(static_cast<int>(a)));
    for (std::size_t e = 0; e < g.event_count(); ++e) {
        const int ev = b.add_event(g.event_id(static_cast<int>(e)));
        for (int a : g.actors_of(static_cast<int>(e))) b.add_attendance(a, ev);
    }
    b.add_event("empty");
    const int solo = b.add_event("solo");
    b.add_attendance(0, solo);
    return b.build();
}

}  // namespace

TEST_CASE("per-triple counts match the graph-map enumerator") {
    for (std::uint64_t seed = 500; seed < 515; ++seed) {
        const auto g = oracle::random_graph(seed, 4, 9, 3, 9, 0.15, 0.55);
        const auto small = oracle::view(g);
        const int n = small.n;
        for (const WedgeScheme& s : all_schemes()) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        if (i == j || j == k || i == k) continue;
                        const oracle::Counts expect = oracle::count_at(small, i, j, k, s);
                        const WedgeCount got =
                            wedge_count_at(g, g.actor_id(i), g.actor_id(j), g.actor_id(k), s);
                        CHECK(got.total == expect.wedges);
                        CHECK(got.closed == expect.closed);

                        const std::int64_t w = g.triple_weight(i, j, k);
                        const TriadSlots slots{g.pair_weight(i, j) - w, g.pair_weight(j, k) - w,
                                               g.pair_weight(i, k) - w, w};
                        CHECK(alcove_count(slots, s.category, s.congruence) == expect.alcoves);
                    }
        }
    }
}

TEST_CASE("global and local statistics match the enumerator on fixtures") {
    std::vector<BipartiteGraph> graphs;
    for (const char* name : {"dg2", "kite-a", "kite-b", "kite-c", "kite-d"})
        graphs.push_back(datasets::load(name));
    graphs.push_back(datasets::biclique(3, 2));
    graphs.push_back(datasets::biclique(4, 3));

    for (const auto& g : graphs) {
        const auto small = oracle::view(g);
        for (WedgeScheme s : all_schemes()) {
            for (auto f :
                 {WedgeScheme::Formulation::ClosureRate, WedgeScheme::Formulation::AlcoveRatio}) {
                s.formulation = f;
                const oracle::Counts expect = oracle::graph_counts(small, s);
                const std::int64_t num = f == WedgeScheme::Formulation::AlcoveRatio
                                             ? expect.alcoves
                                             : expect.closed;
                if (expect.wedges == 0) {
                    CHECK_THROWS_AS(global_cc(g, s), UndefinedStatistic);
                } else {
                    CHECK(global_cc(g, s) == Ratio{num, expect.wedges});
                }

                const auto locals = local_cc_all(g, s);
                for (int j = 0; j < small.n; ++j) {
                    const oracle::Counts at = oracle::center_counts(small, j, s);
                    if (at.wedges == 0) {
                        CHECK_FALSE(locals[j].has_value());
                    } else {
                        REQUIRE(locals[j].has_value());
                        const std::int64_t lnum = f == WedgeScheme::Formulation::AlcoveRatio
                                                      ? at.alcoves
                                                      : at.closed;
                        CHECK(*locals[j] == Ratio{lnum, at.wedges});
                    }
                }
            }
        }
    }
}

TEST_CASE("wedge counts respect reversal symmetry") {
    for (std::uint64_t seed = 600; seed < 610; ++seed) {
        const auto g = oracle::random_graph(seed, 4, 10, 3, 10, 0.15, 0.5);
        const int n = static_cast<int>(g.actor_count());
        for (const WedgeScheme& s : all_schemes())
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = i + 1; k < n; ++k) {
                        if (i == j || j == k || i == k) continue;
                        const WedgeCount fwd =
                            wedge_count_at(g, g.actor_id(i), g.actor_id(j), g.actor_id(k), s);
                        const WedgeCount rev =
                            wedge_count_at(g, g.actor_id(k), g.actor_id(j), g.actor_id(i), s);
                        CHECK(fwd.total == rev.total);
                        CHECK(fwd.closed == rev.closed);
                    }
    }
}

TEST_CASE("duplicating an event preserves the classical and exclusive coefficients") {
    for (std::uint64_t seed = 700; seed < 708; ++seed) {
        const auto g = oracle::random_graph(seed, 5, 9, 3, 8, 0.25, 0.55);
        Ratio classical{0, 0}, exclusive{0, 0};
        bool classical_def = true, exclusive_def = true;
        try {
            classical = global_cc(g, classical_scheme());
        } catch (const UndefinedStatistic&) {
            classical_def = false;
        }
        try {
            exclusive = global_cc(g, exclusive_scheme());
        } catch (const UndefinedStatistic&) {
            exclusive_def = false;
        }
        for (std::size_t e = 0; e < g.event_count(); ++e) {
            if (g.actors_of(static_cast<int>(e)).size() < 2) continue;
            const auto dup = with_duplicated_event(g, static_cast<int>(e));
            if (classical_def) CHECK(global_cc(dup, classical_scheme()) == classical);
            if (exclusive_def) CHECK(global_cc(dup, exclusive_scheme()) == exclusive);
        }
    }
}

TEST_CASE("duplicating an event generally changes the injective coefficient") {
    // witness: the kite built from pairwise-exclusive events
    const auto g = datasets::load("kite-a");
    const auto dup = with_duplicated_event(g, g.event_index("1"));
    CHECK(global_cc(g, opsahl_scheme()) == Ratio{3, 5});
    CHECK(global_cc(dup, opsahl_scheme()) == Ratio{5, 7});
    CHECK(global_cc(dup, classical_scheme()) == global_cc(g, classical_scheme()));
    CHECK(global_cc(dup, exclusive_scheme()) == global_cc(g, exclusive_scheme()));
}

TEST_CASE("events with at most one attendee change nothing") {
    for (std::uint64_t seed = 800; seed < 806; ++seed) {
        const auto g = oracle::random_graph(seed, 5, 9, 3, 8, 0.25, 0.55);
        const auto padded = with_small_events(g);
        CHECK(full_census(g).tallies == full_census(padded).tallies);
        for (WedgeScheme s : all_schemes()) {
            for (auto f :
                 {WedgeScheme::Formulation::ClosureRate, WedgeScheme::Formulation::AlcoveRatio}) {
                s.formulation = f;
                Ratio base{0, 0};
                bool defined = true;
                try {
                    base = global_cc(g, s);
                } catch (const UndefinedStatistic&) {
                    defined = false;
                }
                if (defined) {
                    CHECK(global_cc(padded, s) == base);
                } else {
                    CHECK_THROWS_AS(global_cc(padded, s), UndefinedStatistic);
                }
            }
        }
    }
}

TEST_CASE("the exclusive coefficient agrees across both formulations") {
    for (std::uint64_t seed = 900; seed < 910; ++seed) {
        const auto g = oracle::random_graph(seed, 4, 10, 3, 9, 0.2, 0.55);
        WedgeScheme rate = exclusive_scheme();
        WedgeScheme ratio = exclusive_scheme();
        ratio.formulation = WedgeScheme::Formulation::AlcoveRatio;
        bool defined = true;
        Ratio r1{0, 0};
        try {
            r1 = global_cc(g, rate);
        } catch (const UndefinedStatistic&) {
            defined = false;
        }
        if (defined) {
            CHECK(global_cc(g, ratio) == r1);
        } else {
            CHECK_THROWS_AS(global_cc(g, ratio), UndefinedStatistic);
        }
    }
}

TEST_CASE("the classical scheme reproduces the projection clustering coefficient") {
    std::vector<BipartiteGraph> graphs{datasets::load("dg2"), datasets::load("dg1"),
                                       datasets::load("kite-a"), datasets::biclique(4, 2)};
    for (std::uint64_t seed = 1000; seed < 1012; ++seed)
        graphs.push_back(oracle::random_graph(seed, 4, 10, 3, 9, 0.15, 0.5));

    for (const auto& g : graphs) {
        const auto direct = oracle::projection_classical(g);
        if (!direct) {
            CHECK_THROWS_AS(global_cc(g, classical_scheme()), UndefinedStatistic);
        } else {
            CHECK(global_cc(g, classical_scheme()) == Ratio{direct->first, direct->second});
        }
    }
}

// The grid contains coincident cells. Two are provable from the
// definitions: with induced legs each leg carries a single event class, so
// the structural and actor congruences quotient identically (for wedges
// and alcoves alike). This check documents that no other pair of cells
// coincides on the whole battery.
TEST_CASE("grid coincidences: induced/structural equals induced/actor, no other pair") {
    std::vector<BipartiteGraph> graphs{datasets::load("dg2"), datasets::load("kite-c"),
                                       datasets::load("kite-d"), datasets::biclique(3, 3)};
    for (std::uint64_t seed = 1100; seed < 1130; ++seed)
        graphs.push_back(oracle::random_graph(seed, 4, 10, 3, 9, 0.15, 0.55));

    const auto schemes = all_schemes();
    std::vector<std::vector<std::pair<bool, Ratio>>> values(schemes.size());
    for (const auto& g : graphs) {
        for (std::size_t s = 0; s < schemes.size(); ++s) {
            try {
                values[s].emplace_back(true, global_cc(g, schemes[s]));
            } catch (const UndefinedStatistic&) {
                values[s].emplace_back(false, Ratio{0, 1});
            }
        }
    }

    auto same = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < values[a].size(); ++i) {
            if (values[a][i].first != values[b][i].first) return false;
            if (values[a][i].first && !(values[a][i].second == values[b][i].second)) return false;
        }
        return true;
    };

    for (std::size_t a = 0; a < schemes.size(); ++a)
        for (std::size_t b = a + 1; b < schemes.size(); ++b) {
            const bool both_induced = schemes[a].category == WedgeScheme::Category::Induced &&
                                      schemes[b].category == WedgeScheme::Category::Induced;
            const bool coincident_pair =
                both_induced &&
                schemes[a].congruence != WedgeScheme::Congruence::None &&
                schemes[b].congruence != WedgeScheme::Congruence::None;
            CHECK(same(a, b) == coincident_pair);
        }
}
