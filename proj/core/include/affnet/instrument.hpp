#ifndef AFFNET_INSTRUMENT_HPP
#define AFFNET_INSTRUMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace affnet {

/// Repeated measurements: one subject observed at two adjacent times.
struct PairedSample {
    struct Observation {
        std::string subject;
        double first = 0.0;
        double second = 0.0;
    };
    std::vector<Observation> observations;
};

/// Share of variance explained by the pairing: SSM/SST of a one-way ANOVA
/// with subjects as groups of two observations. 1 means perfectly repeated
/// measurements. Throws UndefinedStatistic when all values are equal.
double stability(const PairedSample& sample);

/// Squared Pearson correlation (the R^2 of the least-squares line).
/// Throws UndefinedStatistic when either side has zero variance.
double r_squared(std::span<const double> x, std::span<const double> y);

/// 1 - R^2: the share of variance left unexplained between two instruments.
double distinguishability(std::span<const double> x, std::span<const double> y);

/// 4x the population variance: 0 for constant values, 1 for values split
/// evenly between 0 and 1.
double discriminability(std::span<const double> values);

/// One cell of a subject x statistic x period panel; a missing value marks
/// a statistic that was undefined for that subject and period.
struct PanelRow {
    std::string subject;
    std::string statistic;
    std::string period;
    std::optional<double> value;
};

/// Instrument-quality summary of a panel: per statistic, its stability
/// across adjacent periods and its discriminability; per ordered pair of
/// statistics, their R^2 (validity; distinguishability is its complement).
/// Cells that cannot be computed stay empty; half-defined pairings are
/// dropped and counted.
struct PanelReport {
    std::vector<std::string> statistics;  // first-appearance order
    std::vector<std::string> periods;     // ascending
    std::map<std::string, std::optional<double>> stability;
    std::map<std::string, std::optional<double>> discriminability;
    std::map<std::pair<std::string, std::string>, std::optional<double>> r2;
    std::int64_t dropped_pairings = 0;
};

PanelReport analyze_panel(std::span<const PanelRow> rows);

}  // namespace affnet

#endif
