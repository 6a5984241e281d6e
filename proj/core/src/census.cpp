#include "affnet/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "affnet/errors.hpp"
#include "affnet/parallel.hpp"
#include "triad_scan.hpp"

namespace affnet {

void set_parallelism(unsigned threads) { detail::parallelism_setting().store(threads); }
unsigned parallelism() { return detail::parallelism_setting().load(); }

std::string class_key(const TriadClass& c) {
    return std::to_string(c.mu[0]) + "." + std::to_string(c.mu[1]) + "." +
           std::to_string(c.mu[2]) + "-" + std::to_string(c.w);
}

std::int64_t FullCensus::total() const {
    std::int64_t t = 0;
    for (const auto& [c, n] : tallies) t += n;
    return t;
}

std::int64_t FullCensus::at(const TriadClass& c) const {
    auto it = tallies.find(c);
    return it == tallies.end() ? 0 : it->second;
}

std::int64_t StructuralCensus::total() const {
    std::int64_t n = 0;
    for (const auto& row : t) n += row[0] + row[1];
    return n;
}

TriadClass classify_triad_at(const BipartiteGraph& g, int i, int j, int k) {
    const PairWeights w = pair_weights_at(g, i, j, k);
    TriadClass c;
    c.w = static_cast<int>(w.w_pqr);
    c.mu = {static_cast<int>(w.w_pq - w.w_pqr), static_cast<int>(w.w_qr - w.w_pqr),
            static_cast<int>(w.w_pr - w.w_pqr)};
    std::sort(c.mu.begin(), c.mu.end(), std::greater<int>());
    return c;
}

TriadClass classify_triad(const BipartiteGraph& g,
                          const std::string& i, const std::string& j, const std::string& k) {
    const int a = g.actor_index(i), b = g.actor_index(j), c = g.actor_index(k);
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("classify_triad: unknown actor id");
    return classify_triad_at(g, a, b, c);
}

FullCensus full_census(const BipartiteGraph& g) {
    const std::int64_t n = static_cast<std::int64_t>(g.actor_count());
    if (n < 3) throw DataError("full_census: need at least 3 actors");

    const Projection p = project(g);
    const unsigned threads = detail::effective_threads(g.actor_count());

    std::vector<std::map<TriadClass, std::int64_t>> partial(threads);
    detail::scan_blocks(g.actor_count(), threads, [&](unsigned b, std::size_t lo, std::size_t hi) {
        auto& tally = partial[b];
        detail::scan_connected_triads(
            p, lo, hi,
            [&](int i, int j, int k) { ++tally[classify_triad_at(g, i, j, k)]; },
            [&](std::int64_t weight, std::int64_t count) {
                TriadClass c;
                c.mu = {static_cast<int>(weight), 0, 0};
                tally[c] += count;
            });
    });

    FullCensus census;
    census.n_actors = n;
    for (auto& part : partial)
        for (const auto& [c, count] : part) census.tallies[c] += count;

    const std::int64_t all = n * (n - 1) * (n - 2) / 6;
    const std::int64_t disconnected = all - census.total();
    if (disconnected > 0) census.tallies[TriadClass{}] += disconnected;
    return census;
}

StructuralCensus structural_census(const FullCensus& c) {
    StructuralCensus s;
    for (const auto& [cls, n] : c.tallies) s.t[cls.exclusive_pairs()][cls.w > 0 ? 1 : 0] += n;
    return s;
}

SimpleCensus simple_census(const FullCensus& c) {
    SimpleCensus s;
    for (const auto& [cls, n] : c.tallies) {
        const int edges = cls.w > 0 ? 3 : cls.exclusive_pairs();
        s.s[edges] += n;
    }
    return s;
}

}  // namespace affnet
