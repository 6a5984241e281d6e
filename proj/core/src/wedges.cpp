#include "affnet/wedges.hpp"

#include <stdexcept>

#include "affnet/errors.hpp"
#include "triad_scan.hpp"

namespace affnet {

namespace {

struct TripleSums {
    std::int64_t wedges = 0;
    std::int64_t closed = 0;
    std::int64_t alcoves = 0;

    void add(const TripleSums& o) {
        wedges += o.wedges;
        closed += o.closed;
        alcoves += o.alcoves;
    }
};

// Both orientations of all three centers of the triad {i, j, k}.
TripleSums triad_sums(const BipartiteGraph& g, int i, int j, int k, const WedgeScheme& s) {
    const PairWeights pw = pair_weights_at(g, i, j, k);
    const std::int64_t w = pw.w_pqr;
    const std::int64_t xij = pw.w_pq - w, xjk = pw.w_qr - w, xik = pw.w_pr - w;

    const TriadSlots at[3] = {
        {xij, xik, xjk, w},  // center i
        {xij, xjk, xik, w},  // center j
        {xik, xjk, xij, w},  // center k
    };
    TripleSums out;
    for (const TriadSlots& slots : at) {
        const WedgeCount wc = wedge_count(slots, s.category, s.congruence);
        out.wedges += 2 * wc.total;
        out.closed += 2 * wc.closed;
        if (s.formulation == WedgeScheme::Formulation::AlcoveRatio)
            out.alcoves += 2 * alcove_count(slots, s.category, s.congruence);
    }
    return out;
}

TripleSums graph_sums(const BipartiteGraph& g, const WedgeScheme& scheme) {
    const Projection p = project(g);
    const unsigned threads = detail::effective_threads(g.actor_count());
    std::vector<TripleSums> partial(threads);
    detail::scan_blocks(g.actor_count(), threads, [&](unsigned b, std::size_t lo, std::size_t hi) {
        detail::scan_connected_triads(
            p, lo, hi,
            [&](int i, int j, int k) { partial[b].add(triad_sums(g, i, j, k, scheme)); },
            [](std::int64_t, std::int64_t) {});  // one-edge triads carry no wedges
    });
    TripleSums total;
    for (const auto& part : partial) total.add(part);
    return total;
}

// Wedge totals centered at one actor, over ordered end pairs.
TripleSums center_sums(const BipartiteGraph& g, const Projection& p, int j,
                       const WedgeScheme& s) {
    TripleSums out;
    const auto nb = p.neighbors(j);
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = 0; b < nb.size(); ++b) {
            if (a == b) continue;
            const auto [u, w_uj] = nb[a];
            const auto [v, w_jv] = nb[b];
            const std::int64_t w = g.triple_weight(u, j, v);
            const TriadSlots slots{w_uj - w, w_jv - w, p.weight(u, v) - w, w};
            const WedgeCount wc = wedge_count(slots, s.category, s.congruence);
            out.wedges += wc.total;
            out.closed += wc.closed;
            if (s.formulation == WedgeScheme::Formulation::AlcoveRatio)
                out.alcoves += alcove_count(slots, s.category, s.congruence);
        }
    }
    return out;
}

Ratio to_ratio(const TripleSums& sums, const WedgeScheme& scheme, const char* what) {
    if (sums.wedges == 0) throw UndefinedStatistic(std::string(what) + ": no wedges under scheme");
    const std::int64_t num = scheme.formulation == WedgeScheme::Formulation::AlcoveRatio
                                 ? sums.alcoves
                                 : sums.closed;
    return Ratio{num, sums.wedges};
}

int require_actor(const BipartiteGraph& g, const std::string& id, const char* what) {
    const int a = g.actor_index(id);
    if (a < 0) throw std::invalid_argument(std::string(what) + ": unknown actor '" + id + "'");
    return a;
}

}  // namespace

WedgeCount wedge_count_at(const BipartiteGraph& g, const std::string& i, const std::string& j,
                          const std::string& k, const WedgeScheme& scheme) {
    const int a = require_actor(g, i, "wedge_count_at");
    const int b = require_actor(g, j, "wedge_count_at");
    const int c = require_actor(g, k, "wedge_count_at");
    if (a == b || b == c || a == c)
        throw std::invalid_argument("wedge_count_at: actors must be distinct");
    const std::int64_t w = g.triple_weight(a, b, c);
    const TriadSlots slots{g.pair_weight(a, b) - w, g.pair_weight(b, c) - w,
                           g.pair_weight(a, c) - w, w};
    return wedge_count(slots, scheme.category, scheme.congruence);
}

Ratio global_cc(const BipartiteGraph& g, const WedgeScheme& scheme) {
    return to_ratio(graph_sums(g, scheme), scheme, "global_cc");
}

Ratio local_cc(const BipartiteGraph& g, const std::string& actor, const WedgeScheme& scheme) {
    const int j = require_actor(g, actor, "local_cc");
    const Projection p = project(g);
    return to_ratio(center_sums(g, p, j, scheme), scheme, "local_cc");
}

std::vector<std::optional<Ratio>> local_cc_all(const BipartiteGraph& g,
                                               const WedgeScheme& scheme) {
    const Projection p = project(g);
    std::vector<std::optional<Ratio>> out(g.actor_count());
    for (std::size_t j = 0; j < g.actor_count(); ++j) {
        const TripleSums sums = center_sums(g, p, static_cast<int>(j), scheme);
        if (sums.wedges == 0) continue;
        out[j] = scheme.formulation == WedgeScheme::Formulation::AlcoveRatio
                     ? Ratio{sums.alcoves, sums.wedges}
                     : Ratio{sums.closed, sums.wedges};
    }
    return out;
}

std::map<std::int64_t, WedgeDependentEntry> wedge_dependent_cc(const BipartiteGraph& g,
                                                               const WedgeScheme& scheme) {
    const Projection p = project(g);
    std::map<std::int64_t, std::pair<double, std::int64_t>> sums;  // ell -> (sum, n)
    for (std::size_t j = 0; j < g.actor_count(); ++j) {
        const TripleSums s = center_sums(g, p, static_cast<int>(j), scheme);
        if (s.wedges == 0) continue;
        const double value =
            scheme.formulation == WedgeScheme::Formulation::AlcoveRatio
                ? static_cast<double>(s.alcoves) / static_cast<double>(s.wedges)
                : static_cast<double>(s.closed) / static_cast<double>(s.wedges);
        auto& [sum, n] = sums[s.wedges];
        sum += value;
        ++n;
    }
    std::map<std::int64_t, WedgeDependentEntry> out;
    for (const auto& [ell, acc] : sums)
        out[ell] = WedgeDependentEntry{acc.first / static_cast<double>(acc.second), acc.second};
    return out;
}

Ratio census_cc(const FullCensus& c, const WedgeScheme& scheme) {
    std::int64_t num = 0, den = 0;
    for (const auto& [cls, tally] : c.tallies) {
        const ClassWedgeProfile prof = class_wedge_profile(cls, scheme);
        den += tally * (prof.open + prof.closed);
        num += tally * (scheme.formulation == WedgeScheme::Formulation::AlcoveRatio
                            ? prof.alcoves
                            : prof.closed);
    }
    if (den == 0) throw UndefinedStatistic("census_cc: no wedges under scheme");
    return Ratio{num, den};
}

Ratio binned_cc(const StructuralCensus& t) {
    const std::int64_t closed3 = 3 * (t.t[3][0] + t.t[3][1]);
    const std::int64_t den = t.t[2][0] + t.t[2][1] + closed3;
    if (den == 0) throw UndefinedStatistic("binned_cc: no wedges");
    return Ratio{closed3, den};
}

Ratio constraint(const BipartiteGraph& g, const std::string& i, const std::string& j,
                 const WedgeScheme& scheme) {
    const int ia = require_actor(g, i, "constraint");
    const int ja = require_actor(g, j, "constraint");
    if (ia == ja) throw std::invalid_argument("constraint: actors must be distinct");

    const Projection p = project(g);
    const TripleSums all = center_sums(g, p, ia, scheme);
    if (all.wedges == 0) throw UndefinedStatistic("constraint: no wedges at center");

    // closed wedges centered at i whose far end is j
    std::int64_t closed_with_j = 0;
    for (const auto& [u, w_ui] : p.neighbors(ia)) {
        if (u == ja) continue;
        const std::int64_t w = g.triple_weight(u, ia, ja);
        const TriadSlots slots{w_ui - w, p.weight(ia, ja) - w, p.weight(u, ja) - w, w};
        closed_with_j += wedge_count(slots, scheme.category, scheme.congruence).closed;
    }
    return Ratio{closed_with_j, all.wedges};
}

}  // namespace affnet
