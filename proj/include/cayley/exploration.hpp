#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cayley/core.hpp"

namespace cayley {

using rational = mpq_class;

// num/den in lowest terms; gmpxx arithmetic assumes canonical operands.
[[nodiscard]] rational make_rational(std::uint64_t num, std::uint64_t den);

// How a round of the reveal procedure ends.
enum class Closure : std::uint8_t {
    self_loop,   // the last revealed edge is a loop
    in_round,    // it lands earlier on the current path: a new cycle
    prior_round, // it lands on a vertex explored in an earlier round
};

[[nodiscard]] std::string_view to_string(Closure c) noexcept;
[[nodiscard]] Closure closure_from_string(std::string_view s);

struct RoundRecord {
    std::uint32_t index = 0; // 1-based round number
    vertex start = 0;
    // Newly explored vertices in reveal order; path.front() == start.
    std::vector<vertex> path;
    vertex closing_from = 0;
    vertex closing_to = 0;
    Closure closure = Closure::self_loop;
};

struct ExplorationTrace {
    std::size_t n = 0;
    std::vector<RoundRecord> rounds;
    // Cumulative explored counts T_1 < ... < T_K = n.
    std::vector<std::uint64_t> explored_after;

    [[nodiscard]] std::size_t num_rounds() const noexcept { return rounds.size(); }
};

// Rule for picking the next unexplored start vertex.
//
// Every built-in is "first unexplored vertex in a fixed permutation of [n]":
// identity for smallest_label, the caller's permutation for fixed_order, and a
// seeded shuffle for seeded_random_order.
class SelectionStrategy {
public:
    enum class Kind : std::uint8_t { smallest_label, fixed_order, seeded_random_order };

    static SelectionStrategy smallest_label();
    static SelectionStrategy fixed_order(std::vector<vertex> order);
    static SelectionStrategy seeded_random_order(std::uint64_t seed);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::string name() const;

    // The priority permutation for an n-vertex mapping; throws input_error if a
    // fixed order is not a permutation of [n].
    [[nodiscard]] std::vector<vertex> order_for(std::size_t n) const;

private:
    SelectionStrategy(Kind kind, std::vector<vertex> order, std::uint64_t seed)
        : kind_(kind), order_(std::move(order)), seed_(seed) {}

    Kind kind_;
    std::vector<vertex> order_;
    std::uint64_t seed_;
};

[[nodiscard]] ExplorationTrace explore(const Mapping& m,
                                       const SelectionStrategy& strategy = SelectionStrategy::smallest_label());

// Round 1 closes with a loop and every later round closes onto a prior round.
[[nodiscard]] bool has_unique_cyclic_from_trace(const ExplorationTrace& t);

// Rounds closing as self_loop or in_round each create exactly one cycle.
[[nodiscard]] std::size_t cycle_count_from_trace(const ExplorationTrace& t);

// Replays every revealed edge.
[[nodiscard]] Mapping reconstruct_mapping(const ExplorationTrace& t);

// (1/T_1) * prod_{i>=2} T_{i-1}/T_i, evaluated factor by factor in exact arithmetic.
[[nodiscard]] rational telescoping_probability(std::span<const std::uint64_t> cumulative);

// Per-round conditional probabilities (1/T_1, T_1/T_2, ..., T_{K-1}/T_K).
[[nodiscard]] std::vector<rational> conditional_event_probabilities(const ExplorationTrace& t);
[[nodiscard]] std::vector<rational> conditional_event_probabilities(std::span<const std::uint64_t> cumulative);

} // namespace cayley
