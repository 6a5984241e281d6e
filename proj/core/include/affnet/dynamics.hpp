#ifndef AFFNET_DYNAMICS_HPP
#define AFFNET_DYNAMICS_HPP

#include "affnet/bigraph.hpp"
#include "affnet/ratio.hpp"

namespace affnet {

/// Dynamic triadic closure: on the projection with each edge labeled by
/// its earliest shared event, the proportion of triads that ever show an
/// open 2-path which later close into a triangle.
///
/// With edge times sorted t1 <= t2 <= t3 (absent edges at infinity), a
/// triad qualifies iff exactly two edges exist or all three do with
/// t3 > t2 strictly; it counts as closed iff all three exist with t3 > t2.
/// A triangle completed simultaneously (t2 = t3) never had an open 2-path
/// and is excluded from the denominator.
///
/// Throws DataError when any event lacks a timestamp and UndefinedStatistic
/// when no triad qualifies.
Ratio dynamic_closure(const BipartiteGraph& g);

}  // namespace affnet

#endif
