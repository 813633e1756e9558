#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace cayley {

// Vertices are 0-based inside the library. Every external surface (JSON, DOT,
// CLI, from_one_based) uses labels 1..n.
using vertex = std::uint32_t;

inline constexpr vertex no_vertex = std::numeric_limits<vertex>::max();

class MappingOdometer;

// A total function f : [n] -> [n], stored as its value table.
class Mapping {
public:
    explicit Mapping(std::vector<vertex> table);

    static Mapping from_one_based(const std::vector<long long>& labels);

    [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
    [[nodiscard]] vertex operator[](vertex v) const noexcept { return table_[v]; }
    [[nodiscard]] vertex at(vertex v) const;
    [[nodiscard]] std::span<const vertex> table() const noexcept { return table_; }
    [[nodiscard]] std::vector<long long> one_based() const;

    friend bool operator==(const Mapping&, const Mapping&) = default;

private:
    friend class MappingOdometer;
    std::vector<vertex> table_;
};

inline constexpr std::uint32_t no_cycle = std::numeric_limits<std::uint32_t>::max();

struct CycleStructure {
    std::vector<bool> cyclic;
    // Cycle index per vertex, no_cycle for vertices off every cycle.
    std::vector<std::uint32_t> cycle_id;
    // Each cycle in traversal order: f(c[j]) == c[(j + 1) % c.size()].
    std::vector<std::vector<vertex>> cycles;

    [[nodiscard]] std::size_t num_cycles() const noexcept { return cycles.size(); }
    [[nodiscard]] std::size_t num_cyclic() const noexcept;
    // Cyclic vertices in increasing order.
    [[nodiscard]] std::vector<vertex> cyclic_vertices() const;
};

// Tree on [n] given by parent pointers; the root's parent is no_vertex.
class RootedTree {
public:
    RootedTree(vertex root, std::vector<vertex> parent);

    static RootedTree from_one_based(long long root, const std::vector<long long>& parent);

    [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
    [[nodiscard]] vertex root() const noexcept { return root_; }
    [[nodiscard]] vertex parent(vertex v) const noexcept { return parent_[v]; }
    [[nodiscard]] std::span<const vertex> parents() const noexcept { return parent_; }

    // Edge distance to the root, for every vertex.
    [[nodiscard]] std::vector<std::uint32_t> depths() const;
    [[nodiscard]] std::uint32_t depth(vertex v) const;

    friend bool operator==(const RootedTree&, const RootedTree&) = default;

private:
    vertex root_;
    std::vector<vertex> parent_;
};

// f^k(v).
[[nodiscard]] vertex iterate(const Mapping& m, vertex v, std::uint64_t k);

// Linear-time cyclic set and cycle decomposition of the functional graph.
[[nodiscard]] CycleStructure cycle_structure(const Mapping& m);

// The cyclic vertex when there is exactly one (it is then a fixed point).
[[nodiscard]] std::optional<vertex> unique_cyclic_vertex(const Mapping& m);

} // namespace cayley
