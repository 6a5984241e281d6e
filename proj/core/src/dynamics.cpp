#include "affnet/dynamics.hpp"

#include <algorithm>
#include <array>

#include "affnet/errors.hpp"
#include "triad_scan.hpp"

namespace affnet {

Ratio dynamic_closure(const BipartiteGraph& g) {
    if (!g.all_events_timed() || g.event_count() == 0)
        throw DataError("dynamic_closure: every event needs a timestamp");

    const Projection p = project(g);
    std::int64_t qualifying = 0, closed = 0;

    const unsigned threads = detail::effective_threads(g.actor_count());
    std::vector<std::array<std::int64_t, 2>> partial(threads, {0, 0});
    detail::scan_blocks(g.actor_count(), threads, [&](unsigned b, std::size_t lo, std::size_t hi) {
        detail::scan_connected_triads(
            p, lo, hi,
            [&](int i, int j, int k) {
                const auto tij = p.first_time(i, j);
                const auto tjk = p.first_time(j, k);
                const auto tik = p.first_time(i, k);
                const int edges = bool(tij) + bool(tjk) + bool(tik);
                if (edges == 2) {
                    ++partial[b][0];
                } else if (edges == 3) {
                    std::array<std::int64_t, 3> t{*tij, *tjk, *tik};
                    std::sort(t.begin(), t.end());
                    if (t[2] > t[1]) {
                        ++partial[b][0];
                        ++partial[b][1];
                    }
                }
            },
            [](std::int64_t, std::int64_t) {});  // one-edge triads never qualify
    });
    for (const auto& part : partial) {
        qualifying += part[0];
        closed += part[1];
    }

    if (qualifying == 0)
        throw UndefinedStatistic("dynamic_closure: no triad ever shows an open 2-path");
    return Ratio{closed, qualifying};
}

}  // namespace affnet
