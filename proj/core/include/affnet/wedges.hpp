#ifndef AFFNET_WEDGES_HPP
#define AFFNET_WEDGES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affnet/bigraph.hpp"
#include "affnet/census.hpp"
#include "affnet/ratio.hpp"

namespace affnet {

/// Which triple-of-actors configurations count as wedges, and how they are
/// identified. A wedge is a two-legged path i - a - j - b - k through
/// events a and b, taken up to the chosen congruence; it is closed when a
/// third event links i and k compatibly.
///
/// Category constrains the event images:
///   All        any events containing the leg pairs (a and b may coincide)
///   Injective  additionally a != b
///   Induced    additionally a avoids k and b avoids i (legs exclusive)
/// Congruence identifies wedges at the same ordered triple:
///   None        every map counts
///   Structural  events attended by the same subset of {i,j,k} identified
///   Actor       all maps on the same actors identified
struct WedgeScheme {
    enum class Category { All, Injective, Induced };
    enum class Congruence { None, Structural, Actor };
    enum class Formulation { ClosureRate, AlcoveRatio };

    Category category = Category::All;
    Congruence congruence = Congruence::Actor;
    Formulation formulation = Formulation::ClosureRate;

    friend bool operator==(const WedgeScheme&, const WedgeScheme&) = default;
};

/// The classical clustering coefficient of the projection.
constexpr WedgeScheme classical_scheme() {
    return {WedgeScheme::Category::All, WedgeScheme::Congruence::Actor,
            WedgeScheme::Formulation::ClosureRate};
}
/// Distinct-event 4-paths, closed when contained in a 6-cycle.
constexpr WedgeScheme opsahl_scheme() {
    return {WedgeScheme::Category::Injective, WedgeScheme::Congruence::None,
            WedgeScheme::Formulation::ClosureRate};
}
/// Pairwise-exclusive events only, one wedge per ordered triple.
constexpr WedgeScheme exclusive_scheme() {
    return {WedgeScheme::Category::Induced, WedgeScheme::Congruence::Structural,
            WedgeScheme::Formulation::ClosureRate};
}

struct WedgeCount {
    std::int64_t total = 0;
    std::int64_t closed = 0;
};

/// Event multiplicities seen from an ordered triple (i, j, k) centered at
/// j: counts of events exclusive to each pair within the triple, plus the
/// events attended by all three.
struct TriadSlots {
    std::int64_t left = 0;       // events on {i, j} only
    std::int64_t right = 0;      // events on {j, k} only
    std::int64_t across = 0;     // events on {i, k} only
    std::int64_t inclusive = 0;  // events on {i, j, k}
};

TriadSlots triad_slots(const PairWeights& w);

/// Closed-form wedge and alcove counts at one ordered centered triple.
/// These are the arithmetic fast path; class_wedge_profile provides the
/// independent enumeration route.
WedgeCount wedge_count(const TriadSlots& s, WedgeScheme::Category cat,
                       WedgeScheme::Congruence cong);
std::int64_t alcove_count(const TriadSlots& s, WedgeScheme::Category cat,
                          WedgeScheme::Congruence cong);

/// Wedges at the ordered triple (i, j, k) with center j.
WedgeCount wedge_count_at(const BipartiteGraph& g, const std::string& i, const std::string& j,
                          const std::string& k, const WedgeScheme& scheme);

/// Wedge and alcove tallies of one triad class, obtained by exhaustive
/// enumeration of graph maps into the canonical representative (memoized).
/// open/closed sum the six ordered triples of the representative.
struct ClassWedgeProfile {
    std::int64_t open = 0;    // F
    std::int64_t closed = 0;  // S
    std::int64_t alcoves = 0;
};

ClassWedgeProfile class_wedge_profile(const TriadClass& c, const WedgeScheme& scheme);

/// Global clustering coefficient over all ordered centered triples; exact
/// ratio. Throws UndefinedStatistic when the graph has no wedges under the
/// scheme.
Ratio global_cc(const BipartiteGraph& g, const WedgeScheme& scheme);

/// Local coefficient at one actor. Throws UndefinedStatistic when no wedge
/// is centered there.
Ratio local_cc(const BipartiteGraph& g, const std::string& actor, const WedgeScheme& scheme);

/// Local coefficients for every actor in input order; actors centering no
/// wedge get nullopt.
std::vector<std::optional<Ratio>> local_cc_all(const BipartiteGraph& g,
                                               const WedgeScheme& scheme);

struct WedgeDependentEntry {
    double mean = 0.0;
    std::int64_t actors = 0;
};

/// Mean local coefficient across the actors centering exactly ell ordered
/// wedges; actors with no wedges are excluded.
std::map<std::int64_t, WedgeDependentEntry> wedge_dependent_cc(const BipartiteGraph& g,
                                                               const WedgeScheme& scheme);

/// Census formulation: sum of per-class profiles weighted by tallies.
/// Supports both formulations; throws UndefinedStatistic on an empty
/// denominator.
Ratio census_cc(const FullCensus& c, const WedgeScheme& scheme);

/// Exclusive coefficient recovered from the structural census alone:
/// 3(t30+t31) / (t20+t21 + 3(t30+t31)).
Ratio binned_cc(const StructuralCensus& t);

/// Share of i's wedges that are closed and end at j. Summed over j this
/// gives the local coefficient of i.
Ratio constraint(const BipartiteGraph& g, const std::string& i, const std::string& j,
                 const WedgeScheme& scheme);

}  // namespace affnet

#endif
