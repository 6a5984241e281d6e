#ifndef AFFNET_NULLMODELS_HPP
#define AFFNET_NULLMODELS_HPP

#include <cstdint>
#include <vector>

#include "affnet/bigraph.hpp"
#include "affnet/wedges.hpp"

namespace affnet {

struct DegreeSequencePair {
    std::vector<int> actor_degrees;  // sorted descending
    std::vector<int> event_degrees;

    friend bool operator==(const DegreeSequencePair&, const DegreeSequencePair&) = default;
};

DegreeSequencePair degree_sequences(const BipartiteGraph& g);

struct RandomizeResult {
    BipartiteGraph graph;
    std::int64_t attempted = 0;
    std::int64_t applied = 0;  // attempts that changed the graph
};

/// Degree-preserving randomization by checkerboard swaps: two attendance
/// edges (i,a), (j,b) are rewired to (i,b), (j,a) when neither target edge
/// exists. Failed attempts are skipped and counted. The RNG is mt19937_64
/// with an unbiased bounded sampler, so a fixed seed reproduces the result
/// bit-for-bit everywhere. Throws std::invalid_argument on graphs with
/// fewer than two attendance edges.
RandomizeResult randomize(const BipartiteGraph& g, std::int64_t swaps, std::uint64_t seed);

struct CRandResult {
    double mean = 0.0;
    double stddev = 0.0;  // population standard deviation of defined draws
    std::int64_t undefined_draws = 0;
    std::int64_t samples = 0;
};

/// Mean global coefficient across a swap-chain ensemble with the input's
/// degree sequences. `burn_in` swap attempts are run before the first
/// sample and between samples; 0 picks the default of 10x the edge count.
/// Draws where the statistic is undefined are excluded and counted; throws
/// UndefinedStatistic when every draw is undefined.
CRandResult c_rand(const BipartiteGraph& g, const WedgeScheme& scheme, std::int64_t samples,
                   std::int64_t burn_in, std::uint64_t seed);

}  // namespace affnet

#endif
