#include <doctest.h>

#include <cmath>
#include <vector>

#include "affnet/analysis.hpp"
#include "affnet/datasets.hpp"
#include "affnet/errors.hpp"
#include "support/oracle.hpp"

using namespace affnet;

namespace {

BipartiteGraph triad_graph(int pq, int qr, int pr, int w) {
    GraphBuilder b;
    const int p = b.add_actor("p"), q = b.add_actor("q"), r = b.add_actor("r");
    int next = 0;
    auto event = [&](std::initializer_list<int> actors) {
        const int e = b.add_event("e" + std::to_string(++next));
        for (int a : actors) b.add_attendance(a, e);
    };
    for (int n = 0; n < pq; ++n) event({p, q});
    for (int n = 0; n < qr; ++n) event({q, r});
    for (int n = 0; n < pr; ++n) event({p, r});
    for (int n = 0; n < w; ++n) event({p, q, r});
    return b.build();
}

// Definitional reference: loop all ordered triples, count exclusive events
// per leg from scratch.
std::map<std::int64_t, std::array<std::int64_t, 3>> stc_brute(const BipartiteGraph& g,
                                                              std::int64_t max_s) {
    const auto small = oracle::view(g);
    std::map<std::int64_t, std::array<std::int64_t, 3>> out;  // s -> {weak, triples, shared_sum}
    auto excl = [&](int x, int y, int z) {
        std::int64_t n = 0;
        for (const auto mask : small.events)
            if ((mask & (1u << x)) && (mask & (1u << y)) && !(mask & (1u << z))) ++n;
        return n;
    };
    auto shared = [&](int x, int y) {
        std::int64_t n = 0;
        for (const auto mask : small.events)
            if ((mask & (1u << x)) && (mask & (1u << y))) ++n;
        return n;
    };
    for (int i = 0; i < small.n; ++i)
        for (int j = 0; j < small.n; ++j)
            for (int k = 0; k < small.n; ++k) {
                if (i == j || j == k || i == k) continue;
                const std::int64_t s = excl(i, j, k) * excl(j, k, i);
                if (s > max_s) continue;
                auto& bucket = out[s];
                bucket[0] += shared(i, k) > 0;
                bucket[1] += 1;
                bucket[2] += shared(i, k);
            }
    return out;
}

}  // namespace

TEST_CASE("stc profile of the lone open triad") {
    const auto g = triad_graph(1, 1, 0, 0);
    const auto prof = stc_profile(g, 10);
    REQUIRE(prof.count(1) == 1);
    CHECK(prof.at(1).triples == 2);
    CHECK(prof.at(1).weak_ties == 0);
    CHECK(prof.at(1).probability() == 0.0);
    // the four remaining centered triples have strength zero; their ends
    // are the pairs that do share an event
    REQUIRE(prof.count(0) == 1);
    CHECK(prof.at(0).triples == 4);
    CHECK(prof.at(0).weak_ties == 4);
}

TEST_CASE("stc profile of the closed triad is certain at strength one") {
    const auto g = triad_graph(1, 1, 1, 0);
    const auto prof = stc_profile(g, 10);
    REQUIRE(prof.count(1) == 1);
    CHECK(prof.at(1).triples == 6);
    CHECK(prof.at(1).probability() == 1.0);
}

TEST_CASE("stc triples total six per triad") {
    for (std::uint64_t seed = 10; seed < 16; ++seed) {
        const auto g = oracle::random_graph(seed, 5, 10, 3, 9, 0.2, 0.5);
        const auto prof = stc_profile(g, 1 << 20);
        std::int64_t total = 0;
        for (const auto& [s, e] : prof) total += e.triples;
        const std::int64_t n = static_cast<std::int64_t>(g.actor_count());
        CHECK(total == n * (n - 1) * (n - 2));
    }
}

TEST_CASE("stc profile matches brute force") {
    for (std::uint64_t seed = 20; seed < 28; ++seed) {
        const auto g = oracle::random_graph(seed, 5, 10, 3, 9, 0.15, 0.5);
        const auto expect = stc_brute(g, 25);
        const auto got = stc_profile(g, 25);
        REQUIRE(got.size() == expect.size());
        for (const auto& [s, e] : expect) {
            REQUIRE(got.count(s) == 1);
            CHECK(got.at(s).weak_ties == e[0]);
            CHECK(got.at(s).triples == e[1]);
        }
    }
}

TEST_CASE("dg1 stc profile is brute-force exact") {
    const auto g = datasets::load("dg1");
    const auto expect = stc_brute(g, 30);
    const auto got = stc_profile(g, 30);
    REQUIRE(got.size() == expect.size());
    for (const auto& [s, e] : expect) {
        CHECK(got.at(s).weak_ties == e[0]);
        CHECK(got.at(s).triples == e[1]);
    }
}

TEST_CASE("expected shared events") {
    const auto open = triad_graph(1, 1, 0, 0);
    const auto m = expected_shared_events(open, 10);
    CHECK(m.at(1) == 0.0);
    CHECK(m.at(0) == 1.0);

    // all-pairs-tied class: the ends always share at least the inclusive event
    const auto tied = triad_graph(1, 1, 1, 1);
    for (const auto& [s, mean] : expected_shared_events(tied, 100)) CHECK(mean >= 1.0);

    for (std::uint64_t seed = 30; seed < 36; ++seed) {
        const auto g = oracle::random_graph(seed, 5, 9, 3, 8, 0.2, 0.5);
        const auto expect = stc_brute(g, 25);
        const auto got = expected_shared_events(g, 25);
        for (const auto& [s, e] : expect)
            CHECK(got.at(s) ==
                  doctest::Approx(static_cast<double>(e[2]) / static_cast<double>(e[1]))
                      .epsilon(1e-12));
    }
}

TEST_CASE("one-walk centrality is proportional to degree") {
    const auto g = datasets::load("dg2");
    const auto c1 = walk_centrality(g, 1);
    const auto deg = g.actor_degrees();
    double norm = 0.0;
    for (int d : deg) norm += static_cast<double>(d) * d;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < c1.size(); ++i)
        CHECK(c1[i] == doctest::Approx(deg[i] / norm).epsilon(1e-12));
}

TEST_CASE("a single shared pair splits the score evenly") {
    const auto g =
        from_edge_list(std::vector<EdgeRow>{{"p", "a", std::nullopt}, {"q", "a", std::nullopt}})
            .graph;
    const auto c = walk_centrality(g, 1);
    CHECK(c[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("two-walk scores on a path match the explicit matrix powers") {
    // p - a - q - b - r
    const auto g = from_edge_list(std::vector<EdgeRow>{{"p", "a", std::nullopt},
                                                       {"q", "a", std::nullopt},
                                                       {"q", "b", std::nullopt},
                                                       {"r", "b", std::nullopt}})
                       .graph;
    // walks of length <= 2 from p: (p,a), (p,a,p), (p,a,q) -> 3; from q: 6; r: 3
    const double norm = std::sqrt(9.0 + 36.0 + 9.0);
    const auto c2 = walk_centrality(g, 2);
    CHECK(c2[0] == doctest::Approx(3.0 / norm).epsilon(1e-12));
    CHECK(c2[1] == doctest::Approx(6.0 / norm).epsilon(1e-12));
    CHECK(c2[2] == doctest::Approx(3.0 / norm).epsilon(1e-12));
}

TEST_CASE("walk centrality without edges is undefined") {
    GraphBuilder b;
    b.add_actor("p");
    b.add_actor("q");
    const auto g = b.build();
    CHECK_THROWS_AS(walk_centrality(g, 1), UndefinedStatistic);
    CHECK_THROWS_AS(eigen_centrality(g), UndefinedStatistic);
}

TEST_CASE("eigen centrality is uniform on structurally equivalent actors") {
    const auto g = datasets::biclique(3, 3);
    const auto c = eigen_centrality(g);
    for (double v : c) CHECK(v == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));

    const auto corrected = corrected_centrality(g, 2);
    for (double v : corrected) CHECK(std::abs(v) < 1e-9);
}

TEST_CASE("eigen centrality matches a dense eigensolver") {
    std::vector<BipartiteGraph> graphs{datasets::load("dg2"), datasets::load("kite-a"),
                                       datasets::load("kite-c")};
    // star: one hub event, plus a tail
    graphs.push_back(from_edge_list(std::vector<EdgeRow>{{"h", "a", std::nullopt},
                                                         {"x", "a", std::nullopt},
                                                         {"y", "a", std::nullopt},
                                                         {"z", "a", std::nullopt},
                                                         {"z", "b", std::nullopt},
                                                         {"w", "b", std::nullopt}})
                         .graph);

    for (const auto& g : graphs) {
        const std::size_t n = g.actor_count(), m = g.event_count();
        std::vector<std::vector<double>> a(n + m, std::vector<double>(n + m, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (int e : g.events_of(static_cast<int>(i)))
                a[i][n + e] = a[n + e][i] = 1.0;
        auto full = oracle::principal_eigenvector(a);
        full.resize(n);
        double nrm = 0.0;
        for (double v : full) nrm += v * v;
        nrm = std::sqrt(nrm);

        const auto got = eigen_centrality(g);
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += got[i] * (full[i] / nrm);
        CHECK(std::abs(dot) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("walk scores converge in direction to the eigen scores") {
    for (const char* name : {"dg2", "dg1", "kite-a"}) {
        CAPTURE(name);
        const auto g = datasets::load(name);
        const auto target = eigen_centrality(g);
        std::vector<double> angle;
        for (int ell = 1; ell <= 40; ++ell) {
            const auto c = walk_centrality(g, ell);
            double dot = 0.0;
            for (std::size_t i = 0; i < c.size(); ++i) dot += c[i] * target[i];
            angle.push_back(std::acos(std::min(1.0, std::abs(dot))));
        }
        // monotone decrease from some early step on; below 1e-7 the angle
        // sits at the floating-point floor of acos and may jitter
        int settled = -1;
        for (int start = 0; start < 20 && settled < 0; ++start) {
            bool ok = true;
            for (std::size_t l = start; l + 1 < angle.size(); ++l)
                if (angle[l + 1] > angle[l] + 1e-9 && angle[l + 1] > 1e-7) ok = false;
            if (ok) settled = start;
        }
        CHECK(settled >= 0);
    }
}

TEST_CASE("corrected centrality is the pointwise difference, unnormalized") {
    const auto g = datasets::load("dg2");
    const auto inf = eigen_centrality(g);
    const auto c2 = walk_centrality(g, 2);
    const auto corr = corrected_centrality(g, 2);
    for (std::size_t i = 0; i < corr.size(); ++i)
        CHECK(corr[i] == doctest::Approx(inf[i] - c2[i]).epsilon(1e-12));
}

TEST_CASE("centrality vectors have unit norm") {
    for (const char* name : {"dg2", "dg1"}) {
        const auto g = datasets::load(name);
        for (const auto mode : {WalkMode::Bipartite, WalkMode::Projection}) {
            for (int ell : {1, 2, 5}) {
                const auto c = walk_centrality(g, ell, mode);
                double n = 0.0;
                for (double v : c) n += v * v;
                CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
            }
            const auto e = eigen_centrality(g, mode);
            double n = 0.0;
            for (double v : e) n += v * v;
            CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("projection-mode one-walk scores follow weighted degrees") {
    const auto g = datasets::load("dg2");
    const Projection p = project(g);
    std::vector<double> wdeg(g.actor_count(), 0.0);
    for (std::size_t i = 0; i < g.actor_count(); ++i)
        for (const auto& [j, w] : p.neighbors(static_cast<int>(i)))
            wdeg[i] += static_cast<double>(w);
    double nrm = 0.0;
    for (double v : wdeg) nrm += v * v;
    nrm = std::sqrt(nrm);
    const auto c = walk_centrality(g, 1, WalkMode::Projection);
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(c[i] == doctest::Approx(wdeg[i] / nrm).epsilon(1e-12));
}
