#ifndef AFFNET_PARTITION_HPP
#define AFFNET_PARTITION_HPP

#include <array>
#include <cstdint>

namespace affnet {

/// 1-based index of a weakly decreasing partition (mu1 >= mu2 >= mu3 >= 0)
/// under the subset bijection mu -> {mu3+1, mu2+2, mu1+3} followed by the
/// revolving-door rank of 3-subsets. The index of a partition does not
/// depend on any bound on its parts: (0,0,0) -> 1, and partitions with
/// parts <= n fill exactly 1..C(n+3, 3).
std::int64_t index_partition(const std::array<int, 3>& mu);

/// Inverse of index_partition. Throws std::invalid_argument for index < 1.
std::array<int, 3> unindex_partition(std::int64_t index);

/// Revolving-door rank (0-based) of a strictly increasing k-subset; exposed
/// for the census export order. `subset` must be strictly increasing and
/// 1-based.
std::int64_t revolving_door_rank(const int* subset, int k);

}  // namespace affnet

#endif
