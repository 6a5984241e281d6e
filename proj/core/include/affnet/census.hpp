#ifndef AFFNET_CENSUS_HPP
#define AFFNET_CENSUS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "affnet/bigraph.hpp"

namespace affnet {

/// Isomorphism class of a three-actor triad: mu holds the exclusive-event
/// counts per actor pair, sorted weakly decreasing, and w the number of
/// events attended by all three.
struct TriadClass {
    std::array<int, 3> mu{0, 0, 0};
    int w = 0;

    /// Number of pairs joined by at least one exclusive event (0..3).
    int exclusive_pairs() const {
        return (mu[0] > 0) + (mu[1] > 0) + (mu[2] > 0);
    }

    friend auto operator<=>(const TriadClass&, const TriadClass&) = default;
};

/// Key string "mu1.mu2.mu3-w" used by the census export.
std::string class_key(const TriadClass& c);

/// Sparse triad census: tallies per isomorphism class. Zero classes are
/// omitted except the disconnected class, whose tally is computed
/// arithmetically and stored when nonzero. Tallies sum to C(n_actors, 3).
struct FullCensus {
    std::map<TriadClass, std::int64_t> tallies;
    std::int64_t n_actors = 0;

    std::int64_t total() const;
    std::int64_t at(const TriadClass& c) const;
};

/// Tallies binned by which event classes occur at all: t[x][y] counts
/// triads with x pairs sharing an exclusive event (0..3) and y = whether
/// any inclusive event exists (0..1).
struct StructuralCensus {
    std::array<std::array<std::int64_t, 2>, 4> t{};

    std::int64_t total() const;
};

/// Classical 4-type census of the projection: s[e] counts triads whose
/// three actors span e projection edges.
struct SimpleCensus {
    std::array<std::int64_t, 4> s{};

    std::int64_t total() const { return s[0] + s[1] + s[2] + s[3]; }

    friend bool operator==(const SimpleCensus&, const SimpleCensus&) = default;
};

TriadClass classify_triad(const BipartiteGraph& g,
                          const std::string& i, const std::string& j, const std::string& k);
TriadClass classify_triad_at(const BipartiteGraph& g, int i, int j, int k);

/// Enumerates connected triples through the projection adjacency and adds
/// the disconnected remainder arithmetically. Throws DataError when the
/// graph has fewer than three actors.
FullCensus full_census(const BipartiteGraph& g);

StructuralCensus structural_census(const FullCensus& c);
SimpleCensus simple_census(const FullCensus& c);

}  // namespace affnet

#endif
