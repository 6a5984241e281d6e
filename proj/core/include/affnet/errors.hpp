#ifndef AFFNET_ERRORS_HPP
#define AFFNET_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace affnet {

/// Malformed or inconsistent input data (bad CSV rows, unknown ids,
/// violated preconditions traceable to the data itself).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A statistic whose defining ratio has an empty denominator (0/0).
/// Deliberately distinct from the value 0.
class UndefinedStatistic : public std::runtime_error {
public:
    explicit UndefinedStatistic(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::int64_t iterations)
        : std::runtime_error(what), iterations_(iterations) {}

    std::int64_t iterations() const noexcept { return iterations_; }

private:
    std::int64_t iterations_;
};

}  // namespace affnet

#endif
