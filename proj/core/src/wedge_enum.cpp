#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <vector>

#include "affnet/wedges.hpp"

// Exhaustive enumeration of wedge and alcove classes on the canonical
// representative of a triad class. This is the counting route behind
// census_cc; the per-triple arithmetic in wedge_math.cpp is the other, and
// the two are held to agree by the test suite.

namespace affnet {

namespace {

using Cat = WedgeScheme::Category;
using Cong = WedgeScheme::Congruence;

// Events of a three-actor graph as attendance bitmasks over actors 0..2.
using Masks = std::vector<std::uint8_t>;

Masks representative(const TriadClass& c) {
    Masks m;
    for (int n = 0; n < c.mu[0]; ++n) m.push_back(0b011);  // {p, q}
    for (int n = 0; n < c.mu[1]; ++n) m.push_back(0b110);  // {q, r}
    for (int n = 0; n < c.mu[2]; ++n) m.push_back(0b101);  // {p, r}
    for (int n = 0; n < c.w; ++n) m.push_back(0b111);
    return m;
}

bool covers(std::uint8_t mask, int x, int y) {
    return (mask & (1u << x)) && (mask & (1u << y));
}

struct TripleCounts {
    std::int64_t wedges = 0;
    std::int64_t closed = 0;
    std::int64_t alcoves = 0;
};

bool alcove_ok(const Masks& m, int i, int j, int k, int a, int b, int c, Cat cat) {
    if (!covers(m[a], i, j) || !covers(m[b], j, k) || !covers(m[c], i, k)) return false;
    if (cat != Cat::All && (a == b || b == c || a == c)) return false;
    if (cat == Cat::Induced &&
        ((m[a] & (1u << k)) || (m[b] & (1u << i)) || (m[c] & (1u << j))))
        return false;
    return true;
}

TripleCounts enumerate_triple(const Masks& m, int i, int j, int k, Cat cat, Cong cong) {
    const int ne = static_cast<int>(m.size());
    auto wedge_key = [&](int a, int b) -> std::pair<int, int> {
        switch (cong) {
            case Cong::None:
                return {a, b};
            case Cong::Structural:
                return {m[a], m[b]};  // masks already live on the triple
            case Cong::Actor:
                return {0, 0};
        }
        return {0, 0};
    };

    std::set<std::pair<int, int>> classes, closed_classes;
    for (int a = 0; a < ne; ++a) {
        if (!covers(m[a], i, j)) continue;
        for (int b = 0; b < ne; ++b) {
            if (!covers(m[b], j, k)) continue;
            if (cat != Cat::All && a == b) continue;
            if (cat == Cat::Induced && ((m[a] & (1u << k)) || (m[b] & (1u << i)))) continue;
            const auto key = wedge_key(a, b);
            classes.insert(key);
            if (closed_classes.count(key)) continue;
            // factoring through the closed triad: any compatible alcove in
            // the same congruence class
            for (int a2 = 0; a2 < ne && !closed_classes.count(key); ++a2) {
                for (int b2 = 0; b2 < ne && !closed_classes.count(key); ++b2) {
                    if (wedge_key(a2, b2) != key) continue;
                    for (int c2 = 0; c2 < ne; ++c2) {
                        if (alcove_ok(m, i, j, k, a2, b2, c2, cat)) {
                            closed_classes.insert(key);
                            break;
                        }
                    }
                }
            }
        }
    }

    std::set<std::tuple<int, int, int>> alcove_classes;
    for (int a = 0; a < ne; ++a)
        for (int b = 0; b < ne; ++b)
            for (int c = 0; c < ne; ++c) {
                if (!alcove_ok(m, i, j, k, a, b, c, cat)) continue;
                switch (cong) {
                    case Cong::None:
                        alcove_classes.insert({a, b, c});
                        break;
                    case Cong::Structural:
                        alcove_classes.insert({m[a], m[b], m[c]});
                        break;
                    case Cong::Actor:
                        alcove_classes.insert({0, 0, 0});
                        break;
                }
            }

    return TripleCounts{static_cast<std::int64_t>(classes.size()),
                        static_cast<std::int64_t>(closed_classes.size()),
                        static_cast<std::int64_t>(alcove_classes.size())};
}

}  // namespace

ClassWedgeProfile class_wedge_profile(const TriadClass& c, const WedgeScheme& scheme) {
    using Key = std::tuple<int, int, int, int, int, int>;
    static std::map<Key, ClassWedgeProfile> cache;
    static std::mutex mutex;

    const Key key{c.mu[0], c.mu[1], c.mu[2], c.w, static_cast<int>(scheme.category),
                  static_cast<int>(scheme.congruence)};
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const Masks m = representative(c);
    static constexpr std::array<std::array<int, 3>, 6> triples{
        {{0, 1, 2}, {2, 1, 0}, {1, 0, 2}, {2, 0, 1}, {0, 2, 1}, {1, 2, 0}}};

    ClassWedgeProfile profile;
    for (const auto& t : triples) {
        const TripleCounts n =
            enumerate_triple(m, t[0], t[1], t[2], scheme.category, scheme.congruence);
        profile.open += n.wedges - n.closed;
        profile.closed += n.closed;
        profile.alcoves += n.alcoves;
    }

    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, profile);
    return profile;
}

}  // namespace affnet
