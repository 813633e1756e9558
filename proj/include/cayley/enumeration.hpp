#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cayley/core.hpp"
#include "cayley/exploration.hpp"

namespace cayley {

inline constexpr std::size_t max_enumeration_n = 8;
inline constexpr std::size_t max_height_pmf_n = 7;

// Walks all n^n tables in lexicographic order (last entry fastest), starting
// from a given lexicographic rank.
class MappingOdometer {
public:
    explicit MappingOdometer(std::size_t n, std::uint64_t first_rank = 0);

    [[nodiscard]] const Mapping& current() const noexcept { return current_; }
    // Steps to the next table; false after the last one.
    bool advance() noexcept;

private:
    Mapping current_;
};

// n^n, throwing if it does not fit in 64 bits.
[[nodiscard]] std::uint64_t mapping_count(std::size_t n);

// Calls visitor once per mapping on [n], in lexicographic table order.
void enumerate_mappings(std::size_t n, const std::function<void(const Mapping&)>& visitor);

// Visits the lexicographic rank range [first, last).
void enumerate_mapping_range(std::size_t n, std::uint64_t first, std::uint64_t last,
                             const std::function<void(const Mapping&)>& visitor);

// Exact probability mass function on the integers offset, offset+1, ...
struct ExactPmf {
    std::uint64_t offset = 0;
    std::vector<rational> mass;

    [[nodiscard]] rational total() const;
    [[nodiscard]] rational at(std::uint64_t value) const;
    [[nodiscard]] ExactPmf shifted(std::uint64_t by) const;

    friend bool operator==(const ExactPmf&, const ExactPmf&) = default;
};

struct ExactCounts {
    std::size_t n = 0;
    mpz_class total_mappings;
    mpz_class unique_cyclic;
    mpz_class labelled_trees;
    std::map<std::size_t, mpz_class> by_cycle_count;
    std::optional<ExactPmf> height_pmf; // present for n <= max_height_pmf_n
};

// Brute force over all n^n mappings, n <= max_enumeration_n. `jobs` splits the
// lexicographic range; results are identical for every value.
[[nodiscard]] ExactCounts exact_counts(std::size_t n, unsigned jobs = 1);

// Law of H_n: heights of all (rooted tree, vertex) pairs, trees taken from the
// unique-cyclic mappings. n <= max_height_pmf_n.
[[nodiscard]] ExactPmf exact_height_pmf(std::size_t n, unsigned jobs = 1);

// Law of C, the number of distinct i.i.d. uniform values on [n] drawn before
// the first repeat: P(C = k) = (k/n) prod_{j<k} (1 - j/n), k = 1..n.
[[nodiscard]] ExactPmf exact_collision_pmf(std::size_t n);

// Decodes every Prufer sequence on [n] and counts the distinct trees.
[[nodiscard]] std::uint64_t count_distinct_prufer_trees(std::size_t n);

} // namespace cayley
