#ifndef AFFNET_ANALYSIS_HPP
#define AFFNET_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "affnet/bigraph.hpp"

namespace affnet {

struct StcEntry {
    std::int64_t weak_ties = 0;
    std::int64_t triples = 0;

    double probability() const {
        return static_cast<double>(weak_ties) / static_cast<double>(triples);
    }
};

/// Weak-tie probability conditioned on wedge strength. Every ordered
/// centered triple (i, j, k) contributes one observation: its strength is
/// the product of the exclusive-event counts on the two legs {i,j}, {j,k},
/// and the ends are weakly tied iff i and k share any event. Buckets cover
/// 0 <= s <= max_s; six observations per actor triad overall.
std::map<std::int64_t, StcEntry> stc_profile(const BipartiteGraph& g, std::int64_t max_s);

/// Companion statistic: mean number of events shared by the ends,
/// conditioned on the same wedge strength.
std::map<std::int64_t, double> expected_shared_events(const BipartiteGraph& g,
                                                      std::int64_t max_s);

enum class WalkMode {
    Bipartite,   // walks in the two-mode graph; 1-walk score = events attended
    Projection,  // walks in the weighted one-mode projection
};

/// Scores proportional to the number of walks of length <= ell starting at
/// each actor, unit Euclidean norm. Throws UndefinedStatistic when the
/// graph has no edges.
std::vector<double> walk_centrality(const BipartiteGraph& g, int ell,
                                    WalkMode mode = WalkMode::Bipartite);

/// Principal-eigenvector scores restricted to actors, unit norm, by power
/// iteration (uniform start, tolerance on successive iterates). Throws
/// ConvergenceError with the iteration count when the budget runs out.
std::vector<double> eigen_centrality(const BipartiteGraph& g,
                                     WalkMode mode = WalkMode::Bipartite,
                                     double tolerance = 1e-12,
                                     std::int64_t max_iterations = 100000);

/// Pointwise eigen minus walk scores; entries may be negative and the
/// difference is not renormalized.
std::vector<double> corrected_centrality(const BipartiteGraph& g, int ell,
                                         WalkMode mode = WalkMode::Bipartite);

}  // namespace affnet

#endif
