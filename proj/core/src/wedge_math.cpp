#include <algorithm>

#include "affnet/wedges.hpp"

namespace affnet {

namespace {

using Cat = WedgeScheme::Category;
using Cong = WedgeScheme::Congruence;

// Hall condition for three pairwise-overlapping-only-in-inclusives event
// sets: a system of distinct representatives (one event per leg plus one
// across) exists iff every subfamily covers enough events.
bool distinct_triple_exists(const TriadSlots& s) {
    const std::int64_t a = s.left + s.inclusive;
    const std::int64_t b = s.right + s.inclusive;
    const std::int64_t c = s.across + s.inclusive;
    return a >= 1 && b >= 1 && c >= 1 &&
           s.left + s.right + s.inclusive >= 2 &&
           s.left + s.across + s.inclusive >= 2 &&
           s.right + s.across + s.inclusive >= 2 &&
           s.left + s.right + s.across + s.inclusive >= 3;
}

}  // namespace

TriadSlots triad_slots(const PairWeights& w) {
    return TriadSlots{w.w_pq - w.w_pqr, w.w_qr - w.w_pqr, w.w_pr - w.w_pqr, w.w_pqr};
}

WedgeCount wedge_count(const TriadSlots& s, Cat cat, Cong cong) {
    const std::int64_t e1 = s.left, e2 = s.right, e3 = s.across, w = s.inclusive;
    const std::int64_t A = e1 + w, B = e2 + w, C = e3 + w;
    WedgeCount out;

    switch (cat) {
        case Cat::All:
            switch (cong) {
                case Cong::None:
                    out.total = A * B;
                    out.closed = C > 0 ? out.total : 0;
                    break;
                case Cong::Structural:
                    out.total = ((e1 > 0) + (w > 0)) * static_cast<std::int64_t>((e2 > 0) + (w > 0));
                    out.closed = C > 0 ? out.total : 0;
                    break;
                case Cong::Actor:
                    out.total = (A > 0 && B > 0) ? 1 : 0;
                    out.closed = (out.total && C > 0) ? 1 : 0;
                    break;
            }
            break;

        case Cat::Injective:
            switch (cong) {
                case Cong::None:
                    // a = b only when both land on one inclusive event.
                    out.total = A * B - w;
                    // How many of {a, b} are inclusive decides how much of C
                    // the closing event must avoid.
                    out.closed = (C >= 1 ? e1 * e2 : 0) + (C >= 2 ? w * (e1 + e2) : 0) +
                                 (C >= 3 ? w * (w - 1) : 0);
                    break;
                case Cong::Structural: {
                    const bool x1 = e1 > 0, x2 = e2 > 0, inc = w > 0;
                    out.total = (x1 && x2) + (x1 && inc) + (inc && x2) + (w >= 2);
                    out.closed = ((x1 && x2 && C >= 1) ? 1 : 0) +
                                 ((x1 && inc && (e3 >= 1 || w >= 2)) ? 1 : 0) +
                                 ((inc && x2 && (e3 >= 1 || w >= 2)) ? 1 : 0) +
                                 ((w >= 2 && (e3 >= 1 || w >= 3)) ? 1 : 0);
                    break;
                }
                case Cong::Actor:
                    out.total = (A * B - w) > 0 ? 1 : 0;
                    out.closed = distinct_triple_exists(s) ? 1 : 0;
                    break;
            }
            break;

        case Cat::Induced:
            // Within-triad exclusivity collapses Structural and Actor: both
            // legs have a single event class.
            switch (cong) {
                case Cong::None:
                    out.total = e1 * e2;
                    out.closed = e3 > 0 ? out.total : 0;
                    break;
                case Cong::Structural:
                case Cong::Actor:
                    out.total = (e1 > 0 && e2 > 0) ? 1 : 0;
                    out.closed = (out.total && e3 > 0) ? 1 : 0;
                    break;
            }
            break;
    }
    return out;
}

std::int64_t alcove_count(const TriadSlots& s, Cat cat, Cong cong) {
    const std::int64_t e1 = s.left, e2 = s.right, e3 = s.across, w = s.inclusive;
    const std::int64_t A = e1 + w, B = e2 + w, C = e3 + w;

    switch (cat) {
        case Cat::All:
            switch (cong) {
                case Cong::None:
                    return A * B * C;
                case Cong::Structural:
                    return static_cast<std::int64_t>((e1 > 0) + (w > 0)) * ((e2 > 0) + (w > 0)) *
                           ((e3 > 0) + (w > 0));
                case Cong::Actor:
                    return (A > 0 && B > 0 && C > 0) ? 1 : 0;
            }
            break;

        case Cat::Injective:
            switch (cong) {
                case Cong::None:
                    // inclusion-exclusion over coinciding inclusive images
                    return A * B * C - w * (A + B + C) + 2 * w;
                case Cong::Structural: {
                    const std::int64_t x1 = e1 > 0, x2 = e2 > 0, x3 = e3 > 0;
                    return x1 * x2 * x3 +
                           (w >= 1 ? x1 * x2 + x1 * x3 + x2 * x3 : 0) +
                           (w >= 2 ? x1 + x2 + x3 : 0) + (w >= 3 ? 1 : 0);
                }
                case Cong::Actor:
                    return distinct_triple_exists(s) ? 1 : 0;
            }
            break;

        case Cat::Induced:
            switch (cong) {
                case Cong::None:
                    return e1 * e2 * e3;
                case Cong::Structural:
                case Cong::Actor:
                    return (e1 > 0 && e2 > 0 && e3 > 0) ? 1 : 0;
            }
            break;
    }
    return 0;
}

}  // namespace affnet
