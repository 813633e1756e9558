#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cayley/core.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/random.hpp"
#include "cayley/statistics.hpp"

namespace cayley {

enum class TreeSampler : std::uint8_t { rejection, prufer };

[[nodiscard]] std::string_view to_string(TreeSampler s) noexcept;
[[nodiscard]] TreeSampler tree_sampler_from_string(std::string_view s);

// Rejection gives up after this many attempts per vertex.
inline constexpr std::uint64_t rejection_attempts_per_vertex = 10'000;

struct RejectionSample {
    RootedTree tree;
    std::uint64_t attempts = 0;
};

// Uniform mappings until one has a unique cyclic vertex. Acceptance probability
// is 1/n, so attempts are geometric with mean n.
[[nodiscard]] RejectionSample sample_rooted_tree_rejection(std::size_t n, RngStream& stream);

// Uniform Prufer word, decoded, rooted at a uniform vertex.
[[nodiscard]] RootedTree sample_rooted_tree_prufer(std::size_t n, RngStream& stream);

[[nodiscard]] RootedTree sample_rooted_tree(std::size_t n, RngStream& stream, TreeSampler method);

struct HeightSample {
    vertex sampled = 0;
    std::uint32_t height = 0;   // edges to the root
    std::uint64_t attempts = 1; // rejection attempts; 1 for the Prufer sampler
};

[[nodiscard]] HeightSample sample_height(std::size_t n, RngStream& stream, TreeSampler method);

// 1 + height of a uniform vertex in a uniform rooted tree.
[[nodiscard]] std::uint64_t sample_height_plus_one(std::size_t n, RngStream& stream, TreeSampler method);

// Number of distinct i.i.d. uniform draws on [n] before the first repeated value.
[[nodiscard]] std::uint64_t sample_collision_count(std::size_t n, RngStream& stream);

struct LawEqualityReport {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    TreeSampler method = TreeSampler::rejection;
    Histogram height_plus_one;
    Histogram collision;
    ChiSquare height_vs_pmf;
    ChiSquare collision_vs_pmf;
    ChiSquare two_sample;
    // exact (1 + H_n) law == exact collision law, when n is small enough to enumerate
    std::optional<bool> exact_match;

    [[nodiscard]] bool passed() const;
};

[[nodiscard]] LawEqualityReport law_equality_report(std::size_t n, std::uint64_t trials, std::uint64_t master_seed,
                                                    TreeSampler method = TreeSampler::rejection, unsigned jobs = 1,
                                                    bool exact = true);

// Largest n for which law_equality_report runs the exact comparison.
inline constexpr std::size_t max_exact_law_n = 6;

} // namespace cayley
