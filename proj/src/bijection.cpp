#include "cayley/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cayley/error.hpp"

namespace cayley {

DoublyRootedTree::DoublyRootedTree(RootedTree tree, vertex head) : tree_(std::move(tree)), head_(head) {
    if (head_ >= tree_.size()) {
        throw input_error("head " + std::to_string(head_ + 1ULL) + " outside [1.." +
                          std::to_string(tree_.size()) + "]");
    }
}

std::vector<vertex> DoublyRootedTree::spine() const {
    std::vector<vertex> path{head_};
    for (vertex v = head_; v != tail(); ) {
        v = tree_.parent(v);
        path.push_back(v);
    }
    return path;
}

LabelledTree LabelledTree::canonical() const {
    LabelledTree out{n, edges};
    for (auto& [a, b] : out.edges) {
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

RootedTree mapping_to_rooted_tree(const Mapping& m) {
    const auto root = unique_cyclic_vertex(m);
    if (!root) {
        const auto cs = cycle_structure(m);
        throw precondition_error("mapping has " + std::to_string(cs.num_cycles()) + " cycle(s) on " +
                                 std::to_string(cs.num_cyclic()) +
                                 " cyclic vertices; a rooted tree needs exactly one cyclic vertex");
    }
    std::vector<vertex> parent(m.table().begin(), m.table().end());
    parent[*root] = no_vertex;
    return RootedTree(*root, std::move(parent));
}

Mapping rooted_tree_to_mapping(const RootedTree& t) {
    std::vector<vertex> table(t.parents().begin(), t.parents().end());
    table[t.root()] = t.root();
    return Mapping(std::move(table));
}

DoublyRootedTree joyal_encode(const Mapping& m) {
    const auto cyclic = cycle_structure(m).cyclic_vertices();
    std::vector<vertex> parent(m.table().begin(), m.table().end());
    // Spine q_j = f(s_j) over the sorted cyclic labels s_1 < ... < s_k.
    std::vector<vertex> spine(cyclic.size());
    std::transform(cyclic.begin(), cyclic.end(), spine.begin(), [&](vertex s) { return m[s]; });
    for (std::size_t j = 0; j + 1 < spine.size(); ++j) {
        parent[spine[j]] = spine[j + 1];
    }
    parent[spine.back()] = no_vertex;
    return DoublyRootedTree(RootedTree(spine.back(), std::move(parent)), spine.front());
}

Mapping joyal_decode(const DoublyRootedTree& d) {
    const auto spine = d.spine();
    auto sorted = spine;
    std::sort(sorted.begin(), sorted.end());
    std::vector<vertex> table(d.tree().parents().begin(), d.tree().parents().end());
    for (std::size_t j = 0; j < spine.size(); ++j) {
        table[sorted[j]] = spine[j];
    }
    return Mapping(std::move(table));
}

namespace {

// Compressed adjacency of a validated tree.
struct Adjacency {
    std::vector<std::uint32_t> offset;
    std::vector<vertex> target;

    [[nodiscard]] std::span<const vertex> neighbours(vertex v) const {
        return {target.data() + offset[v], target.data() + offset[v + 1]};
    }
};

std::size_t find_root(std::vector<std::size_t>& up, std::size_t v) {
    while (up[v] != v) {
        up[v] = up[up[v]];
        v = up[v];
    }
    return v;
}

// Throws unless t is a tree on [n].
void check_tree(const LabelledTree& t) {
    if (t.n == 0) {
        throw input_error("a tree needs at least one vertex");
    }
    std::vector<std::size_t> up(t.n);
    std::iota(up.begin(), up.end(), std::size_t{0});
    for (const auto& [a, b] : t.edges) {
        if (a >= t.n || b >= t.n) {
            throw input_error("edge endpoint outside [1.." + std::to_string(t.n) + "]");
        }
        const auto ra = find_root(up, a);
        const auto rb = find_root(up, b);
        if (ra == rb) {
            throw input_error("not a tree: cycle found at edge " + std::to_string(a + 1ULL) + "-" +
                              std::to_string(b + 1ULL));
        }
        up[ra] = rb;
    }
    if (t.edges.size() + 1 != t.n) {
        throw input_error("not a tree: disconnected (" + std::to_string(t.edges.size()) + " edges on " +
                          std::to_string(t.n) + " vertices)");
    }
}

Adjacency adjacency(const LabelledTree& t) {
    Adjacency adj;
    adj.offset.assign(t.n + 1, 0);
    for (const auto& [a, b] : t.edges) {
        ++adj.offset[a + 1];
        ++adj.offset[b + 1];
    }
    std::partial_sum(adj.offset.begin(), adj.offset.end(), adj.offset.begin());
    adj.target.resize(2 * t.edges.size());
    auto fill = adj.offset;
    for (const auto& [a, b] : t.edges) {
        adj.target[fill[a]++] = b;
        adj.target[fill[b]++] = a;
    }
    return adj;
}

std::vector<vertex> parents_towards(const Adjacency& adj, std::size_t n, vertex root) {
    std::vector<vertex> parent(n, no_vertex);
    std::vector<vertex> queue{root};
    queue.reserve(n);
    std::vector<bool> seen(n, false);
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex v = queue[head];
        for (vertex w : adj.neighbours(v)) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return parent;
}

} // namespace

PruferSequence prufer_encode(const LabelledTree& t) {
    check_tree(t);
    const auto n = t.n;
    PruferSequence out{n, {}};
    if (n <= 2) {
        return out;
    }
    const auto adj = adjacency(t);
    const auto parent = parents_towards(adj, n, static_cast<vertex>(n - 1));

    std::vector<std::uint32_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = adj.offset[v + 1] - adj.offset[v];
    }
    std::size_t ptr = 0;
    while (degree[ptr] != 1) {
        ++ptr;
    }
    vertex leaf = static_cast<vertex>(ptr);
    out.seq.reserve(n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const vertex next = parent[leaf];
        out.seq.push_back(next);
        if (--degree[next] == 1 && next < ptr) {
            leaf = next;
        } else {
            do {
                ++ptr;
            } while (degree[ptr] != 1);
            leaf = static_cast<vertex>(ptr);
        }
    }
    return out;
}

LabelledTree prufer_decode(const PruferSequence& p) {
    const auto n = p.n;
    if (n == 0) {
        throw input_error("a tree needs at least one vertex");
    }
    const std::size_t expected = n >= 2 ? n - 2 : 0;
    if (p.seq.size() != expected) {
        throw input_error("Prufer sequence for n = " + std::to_string(n) + " must have length " +
                          std::to_string(expected) + ", got " + std::to_string(p.seq.size()));
    }
    LabelledTree out{n, {}};
    if (n == 1) {
        return out;
    }
    std::vector<std::uint32_t> degree(n, 1);
    for (vertex v : p.seq) {
        if (v >= n) {
            throw input_error("Prufer entry " + std::to_string(v + 1ULL) + " outside [1.." +
                              std::to_string(n) + "]");
        }
        ++degree[v];
    }
    std::size_t ptr = 0;
    while (degree[ptr] != 1) {
        ++ptr;
    }
    vertex leaf = static_cast<vertex>(ptr);
    out.edges.reserve(n - 1);
    for (vertex v : p.seq) {
        out.edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            do {
                ++ptr;
            } while (degree[ptr] != 1);
            leaf = static_cast<vertex>(ptr);
        }
    }
    out.edges.emplace_back(leaf, static_cast<vertex>(n - 1));
    return out.canonical();
}

RootedTree root_tree(const LabelledTree& t, vertex root) {
    check_tree(t);
    if (root >= t.n) {
        throw input_error("root outside [1.." + std::to_string(t.n) + "]");
    }
    return RootedTree(root, parents_towards(adjacency(t), t.n, root));
}

} // namespace cayley
