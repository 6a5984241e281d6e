#include "affnet/nullmodels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "affnet/errors.hpp"

namespace affnet {

namespace {

// Rejection-sampled bound; std::uniform_int_distribution is not pinned by
// the standard, this is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (-n) % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % n;
    }
}

std::uint64_t edge_key(int actor, int event) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(actor)) << 32) |
           static_cast<std::uint32_t>(event);
}

struct SwapChain {
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<std::uint64_t> present;
    std::mt19937_64 rng;
    std::int64_t attempted = 0;
    std::int64_t applied = 0;

    explicit SwapChain(const BipartiteGraph& g, std::uint64_t seed)
        : edges(g.edges()), rng(seed) {
        present.reserve(edges.size() * 2);
        for (const auto& [a, e] : edges) present.insert(edge_key(a, e));
    }

    void run(std::int64_t swaps) {
        const std::uint64_t m = edges.size();
        for (std::int64_t s = 0; s < swaps; ++s) {
            ++attempted;
            const std::size_t x = bounded(rng, m);
            const std::size_t y = bounded(rng, m);
            auto& [i, a] = edges[x];
            auto& [j, b] = edges[y];
            if (i == j || a == b) continue;
            if (present.count(edge_key(i, b)) || present.count(edge_key(j, a))) continue;
            present.erase(edge_key(i, a));
            present.erase(edge_key(j, b));
            present.insert(edge_key(i, b));
            present.insert(edge_key(j, a));
            std::swap(a, b);
            ++applied;
        }
    }

    BipartiteGraph graph(const BipartiteGraph& original) const {
        GraphBuilder builder;
        for (std::size_t a = 0; a < original.actor_count(); ++a)
            builder.add_actor(original.actor_id(static_cast<int>(a)));
        for (std::size_t e = 0; e < original.event_count(); ++e) {
            const int ev = builder.add_event(original.event_id(static_cast<int>(e)));
            if (auto t = original.event_time(static_cast<int>(e))) builder.set_event_time(ev, *t);
        }
        for (const auto& [actor, event] : edges) builder.add_attendance(actor, event);
        return builder.build();
    }
};

}  // namespace

DegreeSequencePair degree_sequences(const BipartiteGraph& g) {
    DegreeSequencePair d{g.actor_degrees(), g.event_degrees()};
    std::sort(d.actor_degrees.begin(), d.actor_degrees.end(), std::greater<int>());
    std::sort(d.event_degrees.begin(), d.event_degrees.end(), std::greater<int>());
    return d;
}

RandomizeResult randomize(const BipartiteGraph& g, std::int64_t swaps, std::uint64_t seed) {
    if (g.edge_count() < 2)
        throw std::invalid_argument("randomize: need at least two attendance edges");
    SwapChain chain(g, seed);
    chain.run(swaps);
    return RandomizeResult{chain.graph(g), chain.attempted, chain.applied};
}

CRandResult c_rand(const BipartiteGraph& g, const WedgeScheme& scheme, std::int64_t samples,
                   std::int64_t burn_in, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("c_rand: need at least one sample");
    if (g.edge_count() < 2)
        throw std::invalid_argument("c_rand: need at least two attendance edges");
    if (burn_in <= 0) burn_in = 10 * static_cast<std::int64_t>(g.edge_count());

    SwapChain chain(g, seed);
    CRandResult out;
    out.samples = samples;
    std::vector<double> values;
    values.reserve(samples);
    for (std::int64_t s = 0; s < samples; ++s) {
        chain.run(burn_in);
        try {
            values.push_back(global_cc(chain.graph(g), scheme).value());
        } catch (const UndefinedStatistic&) {
            ++out.undefined_draws;
        }
    }
    if (values.empty()) throw UndefinedStatistic("c_rand: statistic undefined on every draw");

    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(ss / static_cast<double>(values.size()));
    return out;
}

}  // namespace affnet
