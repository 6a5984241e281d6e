#ifndef AFFNET_RATIO_HPP
#define AFFNET_RATIO_HPP

#include <cstdint>
#include <numeric>

namespace affnet {

/// Exact ratio of two nonnegative counts. Statistics that the definitions
/// pin down as fractions of integer tallies are returned in this form so
/// tests can compare them exactly; `value()` gives the double.
/// Not reduced on construction; equality cross-multiplies.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 0;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    Ratio reduced() const {
        const std::int64_t g = std::gcd(num, den);
        return g == 0 ? *this : Ratio{num / g, den / g};
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
};

}  // namespace affnet

#endif
