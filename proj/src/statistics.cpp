#include "cayley/statistics.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "cayley/error.hpp"

namespace cayley {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) {
        throw input_error("Wilson interval needs at least one trial");
    }
    if (successes > trials) {
        throw input_error("successes exceed trials");
    }
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw input_error("Wilson interval needs z > 0");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    Interval out{std::clamp(centre - half, 0.0, 1.0), std::clamp(centre + half, 0.0, 1.0)};
    // Rounding can push a bound past the point estimate at the extremes.
    out.low = std::min(out.low, p);
    out.high = std::max(out.high, p);
    return out;
}

Estimate make_estimate(std::uint64_t successes, std::uint64_t trials, double z) {
    Estimate e;
    e.trials = trials;
    e.successes = successes;
    e.point = static_cast<double>(successes) / static_cast<double>(trials);
    e.z = z;
    e.ci = wilson_interval(successes, trials, z);
    return e;
}

void Histogram::add(std::uint64_t value, std::uint64_t times) {
    if (value < offset_ || value - offset_ >= counts_.size()) {
        throw input_error("value " + std::to_string(value) + " outside histogram support");
    }
    counts_[value - offset_] += times;
    total_ += times;
}

void Histogram::merge(const Histogram& other) {
    if (other.offset_ != offset_ || other.counts_.size() != counts_.size()) {
        throw input_error("cannot merge histograms with different supports");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        counts_[i] += other.counts_[i];
    }
    total_ += other.total_;
}

std::uint64_t Histogram::count(std::uint64_t value) const noexcept {
    if (value < offset_ || value - offset_ >= counts_.size()) {
        return 0;
    }
    return counts_[value - offset_];
}

double Histogram::mean() const noexcept {
    if (total_ == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        sum += static_cast<double>(offset_ + i) * static_cast<double>(counts_[i]);
    }
    return sum / static_cast<double>(total_);
}

namespace {

// One (observed, expected) pair per sample, per bin.
struct Cell {
    std::vector<double> observed;
    std::vector<double> expected;

    [[nodiscard]] bool large_enough() const {
        return std::all_of(expected.begin(), expected.end(), [](double e) { return e >= min_expected_per_bin * (1.0 - 1e-12); });
    }
    void absorb(const Cell& other) {
        for (std::size_t s = 0; s < observed.size(); ++s) {
            observed[s] += other.observed[s];
            expected[s] += other.expected[s];
        }
    }
};

// Bins arrive in increasing value order. Sweeping from the top, small bins are
// pooled until the pooled cell is large enough; a small remainder at the bottom
// joins the lowest pooled cell.
ChiSquare merge_and_sum(const std::vector<Cell>& bins) {
    std::vector<Cell> merged;
    Cell open{std::vector<double>(bins.front().observed.size(), 0.0),
              std::vector<double>(bins.front().expected.size(), 0.0)};
    bool open_used = false;
    for (auto it = bins.rbegin(); it != bins.rend(); ++it) {
        open.absorb(*it);
        open_used = true;
        if (open.large_enough()) {
            merged.push_back(open);
            std::fill(open.observed.begin(), open.observed.end(), 0.0);
            std::fill(open.expected.begin(), open.expected.end(), 0.0);
            open_used = false;
        }
    }
    if (open_used) {
        if (merged.empty()) {
            merged.push_back(open);
        } else {
            merged.back().absorb(open);
        }
    }

    ChiSquare out;
    out.bins = merged.size();
    out.df = merged.size() - 1;
    for (const auto& cell : merged) {
        for (std::size_t s = 0; s < cell.observed.size(); ++s) {
            if (cell.expected[s] > 0.0) {
                const double d = cell.observed[s] - cell.expected[s];
                out.statistic += d * d / cell.expected[s];
            }
        }
    }
    if (out.bins == 1) {
        // A single cell holds every observation and all expected mass.
        out.statistic = 0.0;
        out.degenerate = true;
        out.warning = "all mass merged into one bin; the test has no degrees of freedom";
    }
    return out;
}

} // namespace

ChiSquare chi_square_statistic(const Histogram& h, const ExactPmf& pmf) {
    if (h.total() == 0) {
        throw input_error("chi-square needs a non-empty histogram");
    }
    if (pmf.mass.empty()) {
        throw input_error("chi-square needs a non-empty pmf");
    }
    for (std::size_t i = 0; i < h.counts().size(); ++i) {
        const auto value = h.offset() + i;
        if (h.counts()[i] != 0 && sgn(pmf.at(value)) == 0) {
            throw input_error("observed value " + std::to_string(value) + " outside the pmf support");
        }
    }
    const double total = static_cast<double>(h.total());
    std::vector<Cell> bins;
    bins.reserve(pmf.mass.size());
    for (std::size_t i = 0; i < pmf.mass.size(); ++i) {
        const auto value = pmf.offset + i;
        bins.push_back(Cell{{static_cast<double>(h.count(value))}, {total * pmf.mass[i].get_d()}});
    }
    return merge_and_sum(bins);
}

ChiSquare chi_square_two_sample(const Histogram& a, const Histogram& b) {
    if (a.total() == 0 || b.total() == 0) {
        throw input_error("two-sample chi-square needs two non-empty histograms");
    }
    const auto lo = std::min(a.offset(), b.offset());
    const auto hi = std::max(a.offset() + a.counts().size(), b.offset() + b.counts().size());
    const double na = static_cast<double>(a.total());
    const double nb = static_cast<double>(b.total());
    std::vector<Cell> bins;
    for (auto value = lo; value < hi; ++value) {
        const double ca = static_cast<double>(a.count(value));
        const double cb = static_cast<double>(b.count(value));
        const double pooled = (ca + cb) / (na + nb);
        bins.push_back(Cell{{ca, cb}, {na * pooled, nb * pooled}});
    }
    return merge_and_sum(bins);
}

double chi_square_critical(std::size_t df, double level) {
    if (df == 0) {
        return 0.0;
    }
    const boost::math::chi_squared_distribution<double> law(static_cast<double>(df));
    return boost::math::quantile(law, level);
}

bool chi_square_passes(const ChiSquare& c, double level) {
    if (c.df == 0) {
        return c.statistic == 0.0;
    }
    return c.statistic < chi_square_critical(c.df, level);
}

} // namespace cayley
