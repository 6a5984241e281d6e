#include "affnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "affnet/errors.hpp"
#include "triad_scan.hpp"

namespace affnet {

namespace {

struct StcAccumulator {
    std::map<std::int64_t, std::array<std::int64_t, 2>> buckets;  // s -> {weak, triples}
    std::map<std::int64_t, std::int64_t> shared_sum;              // s -> sum of w_ends
    std::int64_t max_s;

    void observe(std::int64_t strength, bool weak, std::int64_t shared, std::int64_t count) {
        if (strength > max_s) return;
        auto& b = buckets[strength];
        b[0] += weak ? count : 0;
        b[1] += count;
        shared_sum[strength] += shared * count;
    }
};

// One triad contributes two observations per center; the far-pair weight
// decides weakness.
void observe_triad(StcAccumulator& acc, std::int64_t xij, std::int64_t xjk, std::int64_t xik,
                   std::int64_t w) {
    acc.observe(xij * xik, xjk + w > 0, xjk + w, 2);  // center i
    acc.observe(xij * xjk, xik + w > 0, xik + w, 2);  // center j
    acc.observe(xik * xjk, xij + w > 0, xij + w, 2);  // center k
}

StcAccumulator stc_scan(const BipartiteGraph& g, std::int64_t max_s) {
    StcAccumulator acc;
    acc.max_s = max_s;
    const std::int64_t n = static_cast<std::int64_t>(g.actor_count());
    if (n < 3 || max_s < 0) return acc;

    const Projection p = project(g);
    std::int64_t connected = 0;
    detail::scan_connected_triads(
        p, 0, g.actor_count(),
        [&](int i, int j, int k) {
            const PairWeights pw = pair_weights_at(g, i, j, k);
            observe_triad(acc, pw.w_pq - pw.w_pqr, pw.w_qr - pw.w_pqr, pw.w_pr - pw.w_pqr,
                          pw.w_pqr);
            ++connected;
        },
        [&](std::int64_t weight, std::int64_t count) {
            // single-edge triads: the center opposite the edge sees the
            // edge pair as its (weakly tied) ends, the other two see nothing
            acc.observe(0, true, weight, 2 * count);
            acc.observe(0, false, 0, 4 * count);
            connected += count;
        });

    const std::int64_t disconnected = n * (n - 1) * (n - 2) / 6 - connected;
    if (disconnected > 0) acc.observe(0, false, 0, 6 * disconnected);
    return acc;
}

}  // namespace

std::map<std::int64_t, StcEntry> stc_profile(const BipartiteGraph& g, std::int64_t max_s) {
    const StcAccumulator acc = stc_scan(g, max_s);
    std::map<std::int64_t, StcEntry> out;
    for (const auto& [s, b] : acc.buckets) out[s] = StcEntry{b[0], b[1]};
    return out;
}

std::map<std::int64_t, double> expected_shared_events(const BipartiteGraph& g,
                                                      std::int64_t max_s) {
    const StcAccumulator acc = stc_scan(g, max_s);
    std::map<std::int64_t, double> out;
    for (const auto& [s, b] : acc.buckets)
        out[s] = static_cast<double>(acc.shared_sum.at(s)) / static_cast<double>(b[1]);
    return out;
}

namespace {

// y = A x over the two-mode adjacency; nodes are actors then events.
void bipartite_multiply(const BipartiteGraph& g, const std::vector<double>& x,
                        std::vector<double>& y) {
    const std::size_t n = g.actor_count();
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t a = 0; a < n; ++a)
        for (int e : g.events_of(static_cast<int>(a))) {
            y[a] += x[n + static_cast<std::size_t>(e)];
            y[n + static_cast<std::size_t>(e)] += x[a];
        }
}

void projection_multiply(const Projection& p, const std::vector<double>& x,
                         std::vector<double>& y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < p.node_count(); ++i)
        for (const auto& [j, w] : p.neighbors(static_cast<int>(i)))
            y[i] += static_cast<double>(w) * x[static_cast<std::size_t>(j)];
}

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

std::vector<double> unit_or_throw(std::vector<double> x, const char* what) {
    const double n = norm2(x);
    if (n == 0.0) throw UndefinedStatistic(std::string(what) + ": zero score vector");
    for (double& v : x) v /= n;
    return x;
}

}  // namespace

std::vector<double> walk_centrality(const BipartiteGraph& g, int ell, WalkMode mode) {
    if (ell < 1) throw std::invalid_argument("walk_centrality: ell must be positive");
    if (g.actor_count() == 0 || g.edge_count() == 0)
        throw UndefinedStatistic("walk_centrality: graph has no edges");
    const std::size_t n = g.actor_count();

    std::vector<double> walks, next, acc;
    Projection p;
    if (mode == WalkMode::Bipartite) {
        walks.assign(n + g.event_count(), 1.0);
        acc.assign(n + g.event_count(), 0.0);
    } else {
        p = project(g);
        walks.assign(n, 1.0);
        acc.assign(n, 0.0);
    }
    next.assign(walks.size(), 0.0);

    for (int t = 0; t < ell; ++t) {
        if (mode == WalkMode::Bipartite)
            bipartite_multiply(g, walks, next);
        else
            projection_multiply(p, walks, next);
        std::swap(walks, next);
        for (std::size_t v = 0; v < walks.size(); ++v) acc[v] += walks[v];

        const double big = *std::max_element(acc.begin(), acc.end());
        if (big > 1e280) {  // rescale both series; only the direction matters
            for (double& v : walks) v /= big;
            for (double& v : acc) v /= big;
        }
    }
    acc.resize(n);
    return unit_or_throw(std::move(acc), "walk_centrality");
}

std::vector<double> eigen_centrality(const BipartiteGraph& g, WalkMode mode, double tolerance,
                                     std::int64_t max_iterations) {
    const std::size_t n = g.actor_count();
    if (n == 0 || g.edge_count() == 0)
        throw UndefinedStatistic("eigen_centrality: graph has no edges");

    // Two-mode spectra come in +/- pairs, so iterate on the actor-side
    // two-step operator M M^T, whose principal vector is the actor part of
    // the adjacency principal vector. Projection mode shifts by a diagonal
    // to keep the dominant eigenvalue simple-signed.
    Projection p;
    double shift = 0.0;
    std::vector<double> events;
    if (mode == WalkMode::Bipartite) {
        events.assign(g.event_count(), 0.0);
    } else {
        p = project(g);
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (const auto& [j, w] : p.neighbors(static_cast<int>(i)))
                row += static_cast<double>(w);
            shift = std::max(shift, row);
        }
        shift += 1.0;
    }

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n, 0.0);
    for (std::int64_t it = 1; it <= max_iterations; ++it) {
        if (mode == WalkMode::Bipartite) {
            std::fill(events.begin(), events.end(), 0.0);
            for (std::size_t a = 0; a < n; ++a)
                for (int e : g.events_of(static_cast<int>(a)))
                    events[static_cast<std::size_t>(e)] += x[a];
            std::fill(y.begin(), y.end(), 0.0);
            for (std::size_t a = 0; a < n; ++a)
                for (int e : g.events_of(static_cast<int>(a)))
                    y[a] += events[static_cast<std::size_t>(e)];
        } else {
            projection_multiply(p, x, y);
            for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
        }

        const double nrm = norm2(y);
        if (nrm == 0.0) throw UndefinedStatistic("eigen_centrality: zero score vector");
        for (double& v : y) v /= nrm;

        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) diff += (y[i] - x[i]) * (y[i] - x[i]);
        std::swap(x, y);
        if (std::sqrt(diff) <= tolerance) return x;
    }
    throw ConvergenceError("eigen_centrality: power iteration did not converge",
                           max_iterations);
}

std::vector<double> corrected_centrality(const BipartiteGraph& g, int ell, WalkMode mode) {
    std::vector<double> inf = eigen_centrality(g, mode);
    const std::vector<double> walk = walk_centrality(g, ell, mode);
    for (std::size_t i = 0; i < inf.size(); ++i) inf[i] -= walk[i];
    return inf;
}

}  // namespace affnet
