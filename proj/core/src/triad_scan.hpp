#ifndef AFFNET_SRC_TRIAD_SCAN_HPP
#define AFFNET_SRC_TRIAD_SCAN_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "affnet/bigraph.hpp"
#include "affnet/parallel.hpp"

namespace affnet::detail {

inline std::atomic<unsigned>& parallelism_setting() {
    static std::atomic<unsigned> value{0};
    return value;
}

inline unsigned effective_threads(std::size_t work_items) {
    unsigned t = parallelism_setting().load();
    if (t == 0) t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    if (work_items < 256) t = 1;  // not worth spawning for
    if (t > work_items && work_items > 0) t = static_cast<unsigned>(work_items);
    return t;
}

/// Runs fn(block, i_begin, i_end) over a partition of [0, n) and lets the
/// caller merge the per-block results in block order.
template <typename Fn>
void scan_blocks(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned b = 0; b < threads; ++b) {
        const std::size_t lo = std::min(n, b * chunk);
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&fn, b, lo, hi] { fn(b, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

/// Visits every actor triple {i < j < k} spanning at least two projection
/// edges exactly once via `triad`, for smallest indices i in [i_begin,
/// i_end). Triples spanning exactly one edge are only counted: they reach
/// `single` as (pair weight, multiplicity), attributed to the block of one
/// of their members. Edge-free triples are skipped. Covering [0, n) with
/// disjoint ranges therefore visits/counts every connected triple once.
template <typename TriadFn, typename SingleFn>
void scan_connected_triads(const Projection& p, std::size_t i_begin, std::size_t i_end,
                           TriadFn&& triad, SingleFn&& single) {
    const int n = static_cast<int>(p.node_count());
    for (std::size_t iu = i_begin; iu < i_end; ++iu) {
        const int i = static_cast<int>(iu);
        const auto ni = p.neighbors(i);

        // (i, j) adjacent: every k > j completes a connected triple.
        for (const auto& [j, w_ij] : ni) {
            if (j <= i) continue;
            const auto nj = p.neighbors(j);
            std::size_t a = 0, b = 0;
            int covered = 0;  // members of N(i) u N(j) above j
            while (a < ni.size() || b < nj.size()) {
                int next;
                if (a < ni.size() && (b >= nj.size() || ni[a].first <= nj[b].first)) {
                    next = ni[a].first;
                    if (b < nj.size() && nj[b].first == next) ++b;
                    ++a;
                } else {
                    next = nj[b].first;
                    ++b;
                }
                if (next <= j || next == i) continue;
                ++covered;
                triad(i, j, next);
            }
            const std::int64_t rest = (n - 1 - j) - covered;
            if (rest > 0) single(w_ij, rest);
        }

        // (i, k) adjacent, j strictly between and not adjacent to i.
        for (const auto& [k, w_ik] : ni) {
            if (k <= i) continue;
            std::int64_t with_edge = 0;
            for (const auto& [j, w_jk] : p.neighbors(k)) {
                if (j <= i || j >= k) continue;
                if (p.adjacent(i, j)) continue;  // handled above
                ++with_edge;
                triad(i, j, k);
            }
            std::int64_t between_neighbors_of_i = 0;
            for (const auto& [j, w] : ni)
                if (j > i && j < k) ++between_neighbors_of_i;
            const std::int64_t rest = (k - i - 1) - between_neighbors_of_i - with_edge;
            if (rest > 0) single(w_ik, rest);
        }

        // (j, k) adjacent with j = this scan index, smallest member below j
        // and adjacent to neither endpoint. Only the count is needed, so the
        // triple is attributed to j's block.
        const int j = i;
        for (const auto& [k, w_jk] : p.neighbors(j)) {
            if (k <= j) continue;
            const auto nj = p.neighbors(j);
            const auto nk = p.neighbors(k);
            std::size_t a = 0, b = 0;
            std::int64_t covered_below = 0;  // members of N(j) u N(k) below j
            while (a < nj.size() || b < nk.size()) {
                int next;
                if (a < nj.size() && (b >= nk.size() || nj[a].first <= nk[b].first)) {
                    next = nj[a].first;
                    if (b < nk.size() && nk[b].first == next) ++b;
                    ++a;
                } else {
                    next = nk[b].first;
                    ++b;
                }
                if (next < j) ++covered_below;
            }
            const std::int64_t rest = j - covered_below;
            if (rest > 0) single(w_jk, rest);
        }
    }
}

}  // namespace affnet::detail

#endif
