#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cayley/enumeration.hpp"

namespace cayley {

// Significance threshold shared by every statistical check: 4 binomial
// standard errors, and chi-square critical values at the 99.9% level.
inline constexpr double check_sigmas = 4.0;
inline constexpr double chi_square_level = 0.999;
inline constexpr double min_expected_per_bin = 5.0;

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

// Wilson score interval, clamped to [0, 1].
[[nodiscard]] Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

struct Estimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double point = 0.0;
    double z = check_sigmas;
    Interval ci;
};

[[nodiscard]] Estimate make_estimate(std::uint64_t successes, std::uint64_t trials, double z = check_sigmas);

// Counts over the integer range [offset, offset + counts.size()).
class Histogram {
public:
    Histogram() = default;
    Histogram(std::uint64_t offset, std::size_t width) : offset_(offset), counts_(width, 0) {}

    void add(std::uint64_t value, std::uint64_t times = 1);
    void merge(const Histogram& other);

    [[nodiscard]] std::uint64_t offset() const noexcept { return offset_; }
    [[nodiscard]] const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] std::uint64_t count(std::uint64_t value) const noexcept;
    [[nodiscard]] double mean() const noexcept;

private:
    std::uint64_t offset_ = 0;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

struct ChiSquare {
    double statistic = 0.0;
    std::size_t df = 0;
    std::size_t bins = 0;     // after merging
    bool degenerate = false;  // all mass merged into a single bin
    std::string warning;
};

// Goodness of fit against an exact pmf. Bins with expected count below 5 are
// folded into the upper tail before summing (obs - exp)^2 / exp.
[[nodiscard]] ChiSquare chi_square_statistic(const Histogram& h, const ExactPmf& pmf);

// Two-sample homogeneity test on histograms over the same support, with the
// same upper-tail merge applied to the pooled expected counts.
[[nodiscard]] ChiSquare chi_square_two_sample(const Histogram& a, const Histogram& b);

// Upper `level` quantile of the chi-square law with df degrees of freedom.
[[nodiscard]] double chi_square_critical(std::size_t df, double level = chi_square_level);

// statistic below the critical value; a degenerate (df = 0) test passes when
// the statistic is 0.
[[nodiscard]] bool chi_square_passes(const ChiSquare& c, double level = chi_square_level);

} // namespace cayley
