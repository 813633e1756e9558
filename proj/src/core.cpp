#include "cayley/core.hpp"

#include <algorithm>
#include <string>

#include "cayley/error.hpp"

namespace cayley {

namespace {

enum class Mark : std::uint8_t { unvisited, on_walk, finished };

vertex checked_label(long long label, std::size_t n, const char* what) {
    if (label < 1 || static_cast<unsigned long long>(label) > n) {
        throw input_error(std::string(what) + " label " + std::to_string(label) +
                          " outside [1.." + std::to_string(n) + "]");
    }
    return static_cast<vertex>(label - 1);
}

void check_size(std::size_t n) {
    if (n == 0) {
        throw input_error("n must be at least 1");
    }
    if (n >= no_vertex) {
        throw input_error("n = " + std::to_string(n) + " exceeds the supported vertex range");
    }
}

} // namespace

Mapping::Mapping(std::vector<vertex> table) : table_(std::move(table)) {
    check_size(table_.size());
    const auto n = table_.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (table_[v] >= n) {
            throw input_error("mapping entry " + std::to_string(v + 1) + " = " +
                              std::to_string(static_cast<unsigned long long>(table_[v]) + 1) +
                              " outside [1.." + std::to_string(n) + "]");
        }
    }
}

Mapping Mapping::from_one_based(const std::vector<long long>& labels) {
    check_size(labels.size());
    std::vector<vertex> table(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
        table[v] = checked_label(labels[v], labels.size(), "mapping value");
    }
    return Mapping(std::move(table));
}

vertex Mapping::at(vertex v) const {
    if (v >= table_.size()) {
        throw input_error("vertex " + std::to_string(v + 1ULL) + " outside [1.." +
                          std::to_string(table_.size()) + "]");
    }
    return table_[v];
}

std::vector<long long> Mapping::one_based() const {
    std::vector<long long> out(table_.size());
    std::transform(table_.begin(), table_.end(), out.begin(),
                   [](vertex v) { return static_cast<long long>(v) + 1; });
    return out;
}

std::size_t CycleStructure::num_cyclic() const noexcept {
    return static_cast<std::size_t>(std::count(cyclic.begin(), cyclic.end(), true));
}

std::vector<vertex> CycleStructure::cyclic_vertices() const {
    std::vector<vertex> out;
    for (std::size_t v = 0; v < cyclic.size(); ++v) {
        if (cyclic[v]) {
            out.push_back(static_cast<vertex>(v));
        }
    }
    return out;
}

RootedTree::RootedTree(vertex root, std::vector<vertex> parent)
    : root_(root), parent_(std::move(parent)) {
    const auto n = parent_.size();
    check_size(n);
    if (root_ >= n) {
        throw input_error("root " + std::to_string(root_ + 1ULL) + " outside [1.." +
                          std::to_string(n) + "]");
    }
    if (parent_[root_] != no_vertex) {
        throw input_error("root " + std::to_string(root_ + 1ULL) + " must have no parent");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (v == root_) {
            continue;
        }
        if (parent_[v] == no_vertex) {
            throw input_error("vertex " + std::to_string(v + 1) +
                              " has no parent but is not the root");
        }
        if (parent_[v] >= n) {
            throw input_error("parent of vertex " + std::to_string(v + 1) + " out of range");
        }
    }

    // Every upward walk must end at the root.
    std::vector<Mark> mark(n, Mark::unvisited);
    mark[root_] = Mark::finished;
    std::vector<vertex> walk;
    for (vertex start = 0; start < n; ++start) {
        walk.clear();
        vertex v = start;
        while (mark[v] == Mark::unvisited) {
            mark[v] = Mark::on_walk;
            walk.push_back(v);
            v = parent_[v];
        }
        if (mark[v] == Mark::on_walk) {
            throw input_error("parent pointers contain a cycle through vertex " +
                              std::to_string(v + 1ULL));
        }
        for (vertex w : walk) {
            mark[w] = Mark::finished;
        }
    }
}

RootedTree RootedTree::from_one_based(long long root, const std::vector<long long>& parent) {
    check_size(parent.size());
    const vertex r = checked_label(root, parent.size(), "root");
    std::vector<vertex> p(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v) {
        if (v == r) {
            if (parent[v] != 0) {
                throw input_error("root entry of parent array must be 0");
            }
            p[v] = no_vertex;
        } else {
            p[v] = checked_label(parent[v], parent.size(), "parent");
        }
    }
    return RootedTree(r, std::move(p));
}

std::vector<std::uint32_t> RootedTree::depths() const {
    constexpr auto unknown = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> depth(size(), unknown);
    depth[root_] = 0;
    std::vector<vertex> walk;
    for (vertex start = 0; start < size(); ++start) {
        walk.clear();
        vertex v = start;
        while (depth[v] == unknown) {
            walk.push_back(v);
            v = parent_[v];
        }
        auto d = depth[v];
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
            depth[*it] = ++d;
        }
    }
    return depth;
}

std::uint32_t RootedTree::depth(vertex v) const {
    if (v >= size()) {
        throw input_error("vertex out of range");
    }
    std::uint32_t d = 0;
    for (; v != root_; v = parent_[v]) {
        ++d;
    }
    return d;
}

vertex iterate(const Mapping& m, vertex v, std::uint64_t k) {
    (void)m.at(v);
    // Past n steps the walk is on its cycle, so k can be reduced modulo the cycle length.
    const std::uint64_t n = m.size();
    std::uint64_t steps = 0;
    for (; steps < k && steps < n; ++steps) {
        v = m[v];
    }
    if (steps == k) {
        return v;
    }
    std::uint64_t period = 1;
    for (vertex w = m[v]; w != v; w = m[w]) {
        ++period;
    }
    for (std::uint64_t r = (k - steps) % period; r > 0; --r) {
        v = m[v];
    }
    return v;
}

CycleStructure cycle_structure(const Mapping& m) {
    const auto n = m.size();
    CycleStructure cs;
    cs.cyclic.assign(n, false);
    cs.cycle_id.assign(n, no_cycle);

    std::vector<Mark> mark(n, Mark::unvisited);
    std::vector<vertex> walk;
    for (vertex start = 0; start < n; ++start) {
        if (mark[start] != Mark::unvisited) {
            continue;
        }
        walk.clear();
        vertex v = start;
        while (mark[v] == Mark::unvisited) {
            mark[v] = Mark::on_walk;
            walk.push_back(v);
            v = m[v];
        }
        if (mark[v] == Mark::on_walk) {
            // The walk closed on itself: the suffix starting at v is a new cycle.
            const auto id = static_cast<std::uint32_t>(cs.cycles.size());
            auto first = std::find(walk.begin(), walk.end(), v);
            std::vector<vertex> cycle(first, walk.end());
            for (vertex c : cycle) {
                cs.cyclic[c] = true;
                cs.cycle_id[c] = id;
            }
            cs.cycles.push_back(std::move(cycle));
        }
        for (vertex w : walk) {
            mark[w] = Mark::finished;
        }
    }
    return cs;
}

std::optional<vertex> unique_cyclic_vertex(const Mapping& m) {
    const auto n = m.size();
    std::vector<Mark> mark(n, Mark::unvisited);
    std::optional<vertex> found;
    for (vertex start = 0; start < n; ++start) {
        if (mark[start] != Mark::unvisited) {
            continue;
        }
        vertex v = start;
        while (mark[v] == Mark::unvisited) {
            mark[v] = Mark::on_walk;
            v = m[v];
        }
        if (mark[v] == Mark::on_walk) {
            if (found || m[v] != v) {
                return std::nullopt;
            }
            found = v;
        }
        for (vertex w = start; mark[w] == Mark::on_walk; w = m[w]) {
            mark[w] = Mark::finished;
        }
    }
    return found;
}

} // namespace cayley
