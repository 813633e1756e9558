#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cayley/core.hpp"

namespace cayley {

// Rooted-tree-shaped parent structure whose root is the tail, plus a head
// vertex. The head-to-tail path is the spine.
class DoublyRootedTree {
public:
    DoublyRootedTree(RootedTree tree, vertex head);

    [[nodiscard]] const RootedTree& tree() const noexcept { return tree_; }
    [[nodiscard]] vertex head() const noexcept { return head_; }
    [[nodiscard]] vertex tail() const noexcept { return tree_.root(); }
    [[nodiscard]] std::size_t size() const noexcept { return tree_.size(); }
    [[nodiscard]] std::vector<vertex> spine() const;

    friend bool operator==(const DoublyRootedTree&, const DoublyRootedTree&) = default;

private:
    RootedTree tree_;
    vertex head_;
};

using Edge = std::pair<vertex, vertex>;

// Unrooted labelled tree as an edge list. Not validated on construction;
// prufer_encode performs the tree check.
struct LabelledTree {
    std::size_t n = 0;
    std::vector<Edge> edges;

    // Edges as (min, max), sorted: equal trees compare equal.
    [[nodiscard]] LabelledTree canonical() const;

    friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
};

struct PruferSequence {
    std::size_t n = 0;
    std::vector<vertex> seq; // length max(n - 2, 0)

    friend bool operator==(const PruferSequence&, const PruferSequence&) = default;
};

// Unique-cyclic mapping -> rooted tree (root = the fixed point, parent = f).
[[nodiscard]] RootedTree mapping_to_rooted_tree(const Mapping& m);
[[nodiscard]] Mapping rooted_tree_to_mapping(const RootedTree& t);

// Joyal: the cyclic permutation, written in one-line notation over the sorted
// cyclic labels, becomes the spine; non-cyclic vertices keep parent f(v).
[[nodiscard]] DoublyRootedTree joyal_encode(const Mapping& m);
[[nodiscard]] Mapping joyal_decode(const DoublyRootedTree& d);

// Smallest-leaf Prüfer codec, linear time.
[[nodiscard]] PruferSequence prufer_encode(const LabelledTree& t);
[[nodiscard]] LabelledTree prufer_decode(const PruferSequence& p);

// Orients a labelled tree towards the given root.
[[nodiscard]] RootedTree root_tree(const LabelledTree& t, vertex root);

} // namespace cayley
