#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/exploration.hpp"
#include "cayley/random.hpp"
#include "cayley/statistics.hpp"

namespace cayley {

// Stream families under one master seed. Trial t of a family uses stream
// (derive_seed(master, family), t).
enum class StreamFamily : std::uint64_t {
    cayley_trials = 1,
    conditional_trials = 2,
    height_trials = 3,
    collision_trials = 4,
    single_sample = 5,
};

[[nodiscard]] RngStream trial_stream(std::uint64_t master_seed, StreamFamily family, std::uint64_t trial);

// Table entries i.i.d. uniform on [n].
[[nodiscard]] Mapping sample_mapping(std::size_t n, RngStream& stream);

// Fraction of uniform random mappings with a unique cyclic vertex.
[[nodiscard]] Estimate estimate_unique_cyclic(std::size_t n, std::uint64_t trials, std::uint64_t master_seed,
                                              unsigned jobs = 1, double z = check_sigmas);

// Tolerance used by verify-cayley: check_sigmas binomial standard errors around 1/n.
[[nodiscard]] double cayley_tolerance(std::size_t n, std::uint64_t trials);

// One bin of the round-conditional check, keyed by (round, T_{i-1}, T_i), with T_0 = 0.
struct ConditionalBin {
    std::uint32_t round = 0;
    std::uint64_t explored_before = 0;
    std::uint64_t explored_after = 0;
    std::uint64_t observations = 0;
    // Round 1 closed with a loop, or round i >= 2 closed onto a prior round.
    std::uint64_t events = 0;
    rational predicted;

    [[nodiscard]] double frequency() const noexcept;
    [[nodiscard]] double standard_error() const noexcept; // under the predicted probability
    [[nodiscard]] double deviation_in_se() const noexcept;
    [[nodiscard]] bool deviates() const noexcept;          // beyond check_sigmas
};

struct ConditionalReport {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t min_observations = 100;
    std::vector<ConditionalBin> bins; // sorted by key

    [[nodiscard]] std::size_t checked_bins() const noexcept;
    [[nodiscard]] std::size_t flagged_bins() const noexcept; // among checked bins
    [[nodiscard]] bool passed() const noexcept { return flagged_bins() == 0; }
};

// Explores each sampled mapping with the smallest-label strategy and compares
// per-bin event frequencies with 1/T_1 and T_{i-1}/T_i.
[[nodiscard]] ConditionalReport check_round_conditionals(std::size_t n, std::uint64_t trials, std::uint64_t master_seed,
                                                         unsigned jobs = 1, std::uint64_t min_observations = 100);

} // namespace cayley
