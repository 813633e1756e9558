#include "cayley/montecarlo.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "cayley/error.hpp"
#include "cayley/parallel.hpp"

namespace cayley {

RngStream trial_stream(std::uint64_t master_seed, StreamFamily family, std::uint64_t trial) {
    return RngStream(derive_seed(master_seed, static_cast<std::uint64_t>(family)), trial);
}

Mapping sample_mapping(std::size_t n, RngStream& stream) {
    if (n == 0) {
        throw input_error("n must be at least 1");
    }
    std::vector<vertex> table(n);
    for (auto& entry : table) {
        entry = static_cast<vertex>(stream.below(n));
    }
    return Mapping(std::move(table));
}

namespace {

void check_trials(std::uint64_t trials) {
    if (trials == 0) {
        throw input_error("trials must be at least 1");
    }
}

} // namespace

Estimate estimate_unique_cyclic(std::size_t n, std::uint64_t trials, std::uint64_t master_seed, unsigned jobs,
                                double z) {
    check_trials(trials);
    if (n == 0) {
        throw input_error("n must be at least 1");
    }
    std::vector<std::uint64_t> successes(chunk_count(trials, jobs), 0);
    for_each_chunk(trials, jobs, [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local = 0;
        for (auto t = lo; t < hi; ++t) {
            auto stream = trial_stream(master_seed, StreamFamily::cayley_trials, t);
            if (unique_cyclic_vertex(sample_mapping(n, stream))) {
                ++local;
            }
        }
        successes[chunk] = local;
    });
    std::uint64_t total = 0;
    for (auto s : successes) {
        total += s;
    }
    return make_estimate(total, trials, z);
}

double cayley_tolerance(std::size_t n, std::uint64_t trials) {
    const double p = 1.0 / static_cast<double>(n);
    return check_sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

double ConditionalBin::frequency() const noexcept {
    return observations == 0 ? 0.0 : static_cast<double>(events) / static_cast<double>(observations);
}

double ConditionalBin::standard_error() const noexcept {
    if (observations == 0) {
        return 0.0;
    }
    const double p = predicted.get_d();
    return std::sqrt(p * (1.0 - p) / static_cast<double>(observations));
}

double ConditionalBin::deviation_in_se() const noexcept {
    const double diff = std::abs(frequency() - predicted.get_d());
    const double se = standard_error();
    if (se == 0.0) {
        return diff == 0.0 ? 0.0 : INFINITY;
    }
    return diff / se;
}

bool ConditionalBin::deviates() const noexcept {
    if (observations == 0) {
        return false;
    }
    const double se = standard_error();
    if (se == 0.0) {
        // Predicted probability 0 or 1: the frequency must match exactly.
        return make_rational(events, observations) != predicted;
    }
    return std::abs(frequency() - predicted.get_d()) > check_sigmas * se;
}

std::size_t ConditionalReport::checked_bins() const noexcept {
    std::size_t out = 0;
    for (const auto& b : bins) {
        out += b.observations >= min_observations ? 1 : 0;
    }
    return out;
}

std::size_t ConditionalReport::flagged_bins() const noexcept {
    std::size_t out = 0;
    for (const auto& b : bins) {
        out += (b.observations >= min_observations && b.deviates()) ? 1 : 0;
    }
    return out;
}

ConditionalReport check_round_conditionals(std::size_t n, std::uint64_t trials, std::uint64_t master_seed,
                                           unsigned jobs, std::uint64_t min_observations) {
    check_trials(trials);
    if (n == 0) {
        throw input_error("n must be at least 1");
    }
    using Key = std::tuple<std::uint32_t, std::uint64_t, std::uint64_t>;
    using Counts = std::map<Key, std::pair<std::uint64_t, std::uint64_t>>;

    std::vector<Counts> parts(chunk_count(trials, jobs));
    const auto strategy = SelectionStrategy::smallest_label();
    for_each_chunk(trials, jobs, [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) {
        auto& counts = parts[chunk];
        for (auto t = lo; t < hi; ++t) {
            auto stream = trial_stream(master_seed, StreamFamily::conditional_trials, t);
            const auto trace = explore(sample_mapping(n, stream), strategy);
            std::uint64_t before = 0;
            for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
                const auto after = trace.explored_after[i];
                const auto closure = trace.rounds[i].closure;
                const bool event = i == 0 ? closure == Closure::self_loop : closure == Closure::prior_round;
                auto& cell = counts[Key{static_cast<std::uint32_t>(i + 1), before, after}];
                ++cell.first;
                cell.second += event ? 1 : 0;
                before = after;
            }
        }
    });
    Counts total;
    for (const auto& part : parts) {
        for (const auto& [key, cell] : part) {
            auto& sum = total[key];
            sum.first += cell.first;
            sum.second += cell.second;
        }
    }

    ConditionalReport report;
    report.n = n;
    report.trials = trials;
    report.seed = master_seed;
    report.min_observations = min_observations;
    for (const auto& [key, cell] : total) {
        const auto& [round, before, after] = key;
        ConditionalBin bin;
        bin.round = round;
        bin.explored_before = before;
        bin.explored_after = after;
        bin.observations = cell.first;
        bin.events = cell.second;
        bin.predicted = make_rational(round == 1 ? 1 : before, after);
        report.bins.push_back(std::move(bin));
    }
    return report;
}

} // namespace cayley
