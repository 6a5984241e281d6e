#include "affnet/partition.hpp"

#include <stdexcept>

namespace affnet {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// The revolving-door order R(n,k) lists R(n-1,k) first, then the subsets
// containing n as R(n-1,k-1) reversed with n appended. Ranks are therefore
// stable as n grows, and recursion on the largest element suffices.
std::int64_t rd_rank(const int* t, int k) {
    if (k == 0) return 0;
    const int n = t[k - 1];
    if (n == k)  // {1, ..., k} heads every block
        return 0;
    return binom(n - 1, k) + (binom(n - 1, k - 1) - 1 - rd_rank(t, k - 1));
}

void rd_unrank(std::int64_t r, int k, int n, int* out) {
    if (k == 0) return;
    while (binom(n, k) <= r) ++n;  // smallest universe containing rank r
    while (k > 0) {
        while (binom(n - 1, k) > r && n - 1 >= k) --n;
        if (binom(n - 1, k) <= r) {
            out[k - 1] = n;
            r = binom(n - 1, k - 1) - 1 - (r - binom(n - 1, k));
            --n;
            --k;
        }
    }
}

}  // namespace

std::int64_t revolving_door_rank(const int* subset, int k) {
    return rd_rank(subset, k);
}

std::int64_t index_partition(const std::array<int, 3>& mu) {
    if (mu[0] < mu[1] || mu[1] < mu[2] || mu[2] < 0)
        throw std::invalid_argument("index_partition: parts must satisfy mu1 >= mu2 >= mu3 >= 0");
    const int t[3] = {mu[2] + 1, mu[1] + 2, mu[0] + 3};
    return rd_rank(t, 3) + 1;
}

std::array<int, 3> unindex_partition(std::int64_t index) {
    if (index < 1) throw std::invalid_argument("unindex_partition: index must be >= 1");
    int t[3] = {0, 0, 0};
    rd_unrank(index - 1, 3, 3, t);
    return {t[2] - 3, t[1] - 2, t[0] - 1};
}

}  // namespace affnet
