#include "affnet/instrument.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

#include "affnet/errors.hpp"

namespace affnet {

double stability(const PairedSample& sample) {
    const std::size_t n = sample.observations.size();
    if (n < 2) throw std::invalid_argument("stability: need at least two subjects");

    // Shift by the first value: sums of squares are shift-invariant, and the
    // shifted form keeps the degenerate cases (constant data, perfectly
    // repeated pairs) exact instead of epsilon-sized.
    const double shift = sample.observations.front().first;
    double grand = 0.0;
    for (const auto& o : sample.observations) grand += (o.first - shift) + (o.second - shift);
    grand /= static_cast<double>(2 * n);

    double ssm = 0.0, sst = 0.0;
    for (const auto& o : sample.observations) {
        const double a = o.first - shift, b = o.second - shift;
        const double mean = (a + b) / 2.0;
        ssm += 2.0 * (mean - grand) * (mean - grand);
        sst += (a - grand) * (a - grand) + (b - grand) * (b - grand);
    }
    if (sst == 0.0) throw UndefinedStatistic("stability: zero total variation");
    return ssm / sst;
}

double r_squared(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("r_squared: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("r_squared: need at least two points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw UndefinedStatistic("r_squared: zero variance");
    return (sxy * sxy) / (sxx * syy);
}

double distinguishability(std::span<const double> x, std::span<const double> y) {
    return 1.0 - r_squared(x, y);
}

double discriminability(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("discriminability: empty sample");
    // A function of the multiset: canonicalize the order, then shift by the
    // minimum. Permutations give bit-identical results and constant data
    // gives exactly zero.
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const double shift = v.front();
    double mean = 0.0;
    for (double x : v) mean += x - shift;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - shift - mean) * (x - shift - mean);
    var /= static_cast<double>(v.size());
    return 4.0 * var;
}

namespace {

bool numeric_period(const std::string& s) {
    if (s.empty()) return false;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

PanelReport analyze_panel(std::span<const PanelRow> rows) {
    PanelReport report;

    std::set<std::string> seen_stats, seen_periods;
    for (const auto& r : rows) {
        if (seen_stats.insert(r.statistic).second) report.statistics.push_back(r.statistic);
        seen_periods.insert(r.period);
    }
    report.periods.assign(seen_periods.begin(), seen_periods.end());
    const bool numeric = std::all_of(report.periods.begin(), report.periods.end(),
                                     numeric_period);
    if (numeric) {
        std::sort(report.periods.begin(), report.periods.end(),
                  [](const std::string& a, const std::string& b) {
                      return std::stoll(a) < std::stoll(b);
                  });
    }

    // (statistic, subject, period) -> value
    std::map<std::tuple<std::string, std::string, std::string>, std::optional<double>> cell;
    std::set<std::string> subjects;
    for (const auto& r : rows) {
        cell[{r.statistic, r.subject, r.period}] = r.value;
        subjects.insert(r.subject);
    }
    auto lookup = [&](const std::string& s, const std::string& subj,
                      const std::string& p) -> std::optional<double> {
        auto it = cell.find({s, subj, p});
        return it == cell.end() ? std::nullopt : it->second;
    };

    for (const auto& stat : report.statistics) {
        PairedSample pairs;
        std::vector<double> pool;
        for (const auto& subj : subjects) {
            for (std::size_t t = 0; t + 1 < report.periods.size(); ++t) {
                const auto a = lookup(stat, subj, report.periods[t]);
                const auto b = lookup(stat, subj, report.periods[t + 1]);
                if (a && b)
                    pairs.observations.push_back({subj, *a, *b});
                else if (a || b)
                    ++report.dropped_pairings;
            }
            for (const auto& p : report.periods)
                if (auto v = lookup(stat, subj, p)) pool.push_back(*v);
        }
        try {
            report.stability[stat] =
                pairs.observations.size() >= 2 ? std::optional(stability(pairs)) : std::nullopt;
        } catch (const UndefinedStatistic&) {
            report.stability[stat] = std::nullopt;
        }
        report.discriminability[stat] =
            pool.empty() ? std::nullopt : std::optional(discriminability(pool));
    }

    for (const auto& s1 : report.statistics) {
        for (const auto& s2 : report.statistics) {
            if (s1 == s2) continue;
            std::vector<double> x, y;
            for (const auto& subj : subjects) {
                for (const auto& p : report.periods) {
                    const auto a = lookup(s1, subj, p);
                    const auto b = lookup(s2, subj, p);
                    if (a && b) {
                        x.push_back(*a);
                        y.push_back(*b);
                    } else if (a || b) {
                        ++report.dropped_pairings;
                    }
                }
            }
            try {
                report.r2[{s1, s2}] = x.size() >= 2 ? std::optional(r_squared(x, y)) : std::nullopt;
            } catch (const UndefinedStatistic&) {
                report.r2[{s1, s2}] = std::nullopt;
            }
        }
    }
    return report;
}

}  // namespace affnet
