#include <doctest.h>

#include <algorithm>
#include <set>

#include "cayley/bijection.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/error.hpp"
#include "cayley/montecarlo.hpp"

using namespace cayley;

namespace {

LabelledTree tree_from_labels(std::size_t n, std::vector<std::pair<int, int>> edges) {
    LabelledTree t{n, {}};
    for (auto [a, b] : edges) {
        t.edges.emplace_back(static_cast<vertex>(a - 1), static_cast<vertex>(b - 1));
    }
    return t;
}

std::vector<vertex> labels_of(std::vector<vertex> v) {
    for (auto& x : v) {
        ++x;
    }
    return v;
}

void check_joyal(const Mapping& m) {
    const auto d = joyal_encode(m);
    REQUIRE(joyal_decode(d) == m);
    auto spine = d.spine();
    CHECK(spine.front() == d.head());
    CHECK(spine.back() == d.tail());
    std::sort(spine.begin(), spine.end());
    CHECK(spine == cycle_structure(m).cyclic_vertices());
    if (const auto root = unique_cyclic_vertex(m)) {
        CHECK(d.head() == *root);
        CHECK(d.tail() == *root);
        CHECK(d.tree() == mapping_to_rooted_tree(m));
    }
}

} // namespace

TEST_CASE("mapping to rooted tree") {
    const auto t2 = mapping_to_rooted_tree(Mapping::from_one_based({1, 1}));
    CHECK(t2 == RootedTree::from_one_based(1, {0, 1}));
    const auto t1 = mapping_to_rooted_tree(Mapping::from_one_based({1}));
    CHECK(t1.root() == 0);
    CHECK(t1.parent(0) == no_vertex);
    const auto t3 = mapping_to_rooted_tree(Mapping::from_one_based({2, 3, 3}));
    CHECK(t3 == RootedTree::from_one_based(3, {2, 3, 0}));
}

TEST_CASE("mapping to rooted tree rejects mappings without a unique cyclic vertex") {
    try {
        (void)mapping_to_rooted_tree(Mapping::from_one_based({1, 2, 1}));
        FAIL("expected a precondition error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("2 cycle(s)") != std::string::npos);
    }
    CHECK_THROWS_AS((void)mapping_to_rooted_tree(Mapping::from_one_based({2, 1})), precondition_error);
}

TEST_CASE("rooted tree to mapping") {
    CHECK(rooted_tree_to_mapping(RootedTree::from_one_based(1, {0, 1})) == Mapping::from_one_based({1, 1}));
    CHECK(rooted_tree_to_mapping(RootedTree::from_one_based(1, {0})) == Mapping::from_one_based({1}));
    CHECK(rooted_tree_to_mapping(RootedTree::from_one_based(3, {2, 3, 0})) == Mapping::from_one_based({2, 3, 3}));
}

TEST_CASE("rooted tree bijection round-trips on all unique-cyclic mappings with n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::uint64_t count = 0;
        std::set<std::vector<vertex>> parents;
        enumerate_mappings(n, [&](const Mapping& m) {
            if (!unique_cyclic_vertex(m)) {
                return;
            }
            ++count;
            const auto t = mapping_to_rooted_tree(m);
            REQUIRE(rooted_tree_to_mapping(t) == m);
            REQUIRE(mapping_to_rooted_tree(rooted_tree_to_mapping(t)) == t);
            parents.emplace(t.parents().begin(), t.parents().end());
        });
        std::uint64_t expected = 1;
        for (std::size_t i = 1; i < n; ++i) {
            expected *= n;
        }
        CHECK(count == expected);
        CHECK(parents.size() == expected);
    }
}

TEST_CASE("joyal examples") {
    const auto one = joyal_encode(Mapping::from_one_based({1}));
    CHECK(one.head() == 0);
    CHECK(one.tail() == 0);

    const auto swap = joyal_encode(Mapping::from_one_based({2, 1}));
    CHECK(labels_of(swap.spine()) == std::vector<vertex>{2, 1});
    CHECK(swap.head() + 1 == 2);
    CHECK(swap.tail() + 1 == 1);
    CHECK(swap.tree() == RootedTree::from_one_based(1, {0, 1}));

    const auto loop = joyal_encode(Mapping::from_one_based({2, 3, 3}));
    CHECK(labels_of(loop.spine()) == std::vector<vertex>{3});
    CHECK(loop.tree() == RootedTree::from_one_based(3, {2, 3, 0}));

    CHECK(joyal_decode(DoublyRootedTree(RootedTree::from_one_based(1, {0}), 0)) == Mapping::from_one_based({1}));
    CHECK(joyal_decode(DoublyRootedTree(RootedTree::from_one_based(1, {0, 1}), 1)) == Mapping::from_one_based({2, 1}));
    CHECK(joyal_decode(DoublyRootedTree(RootedTree::from_one_based(3, {2, 3, 0}), 2)) ==
          Mapping::from_one_based({2, 3, 3}));
}

TEST_CASE("joyal on a mapping with two cycles and trees hanging off them") {
    // f = (3, 1, 2, 5, 4, 4): cycles (1 3 2) and (4 5), vertex 6 hangs on 4.
    const auto m = Mapping::from_one_based({3, 1, 2, 5, 4, 4});
    const auto d = joyal_encode(m);
    // sorted cyclic labels 1..5 map to f-values 3,1,2,5,4
    CHECK(labels_of(d.spine()) == std::vector<vertex>{3, 1, 2, 5, 4});
    CHECK(d.tree().parent(5) == 3);
    CHECK(joyal_decode(d) == m);
}

TEST_CASE("doubly rooted tree validation") {
    CHECK_THROWS_AS(DoublyRootedTree(RootedTree::from_one_based(1, {0, 1}), 2), input_error);
}

TEST_CASE("joyal round-trips on every mapping with n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        enumerate_mappings(n, [](const Mapping& m) { check_joyal(m); });
    }
}

TEST_CASE("joyal round-trips on random mappings up to n = 100") {
    for (std::uint64_t i = 0; i < 10'000; ++i) {
        auto stream = RngStream(99, i);
        check_joyal(sample_mapping(1 + stream.below(100), stream));
    }
}

TEST_CASE("joyal decode then encode is the identity on every doubly rooted tree with n <= 5") {
    // Doubly rooted trees = rooted trees (from unique-cyclic mappings) x head choice.
    for (std::size_t n = 1; n <= 5; ++n) {
        std::set<std::vector<vertex>> images;
        std::uint64_t count = 0;
        enumerate_mappings(n, [&](const Mapping& m) {
            if (!unique_cyclic_vertex(m)) {
                return;
            }
            const auto tree = mapping_to_rooted_tree(m);
            for (vertex head = 0; head < n; ++head) {
                const DoublyRootedTree d(tree, head);
                const auto image = joyal_decode(d);
                REQUIRE(joyal_encode(image) == d);
                images.emplace(image.table().begin(), image.table().end());
                ++count;
            }
        });
        const auto nn = mapping_count(n);
        CHECK(count == nn);
        CHECK(images.size() == nn);
    }
}

TEST_CASE("prufer examples") {
    CHECK(prufer_encode(tree_from_labels(3, {{1, 2}, {2, 3}})).seq == std::vector<vertex>{1});
    CHECK(prufer_encode(tree_from_labels(2, {{1, 2}})).seq.empty());
    CHECK(prufer_encode(tree_from_labels(4, {{1, 4}, {2, 4}, {3, 4}})).seq == std::vector<vertex>{3, 3});
    CHECK(prufer_encode(tree_from_labels(1, {})).seq.empty());

    CHECK(prufer_decode({3, {1}}) == tree_from_labels(3, {{1, 2}, {2, 3}}));
    CHECK(prufer_decode({2, {}}) == tree_from_labels(2, {{1, 2}}));
    CHECK(prufer_decode({4, {3, 3}}) == tree_from_labels(4, {{1, 4}, {2, 4}, {3, 4}}));
    CHECK(prufer_decode({1, {}}).edges.empty());
}

TEST_CASE("prufer encode accepts any edge orientation and order") {
    // path 3-1-4-2-5 written backwards
    const auto t = tree_from_labels(5, {{5, 2}, {2, 4}, {4, 1}, {1, 3}});
    const auto p = prufer_encode(t);
    CHECK(p.seq == std::vector<vertex>{0, 3, 1});
    CHECK(prufer_decode(p) == t.canonical());
}

TEST_CASE("prufer rejects non-trees") {
    auto message = [](const LabelledTree& t) {
        try {
            (void)prufer_encode(t);
        } catch (const input_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(tree_from_labels(3, {{1, 2}, {2, 1}})).find("cycle") != std::string::npos);
    CHECK(message(tree_from_labels(4, {{1, 2}, {2, 3}, {3, 1}})).find("cycle") != std::string::npos);
    CHECK(message(tree_from_labels(4, {{1, 2}, {3, 4}})).find("disconnected") != std::string::npos);
    CHECK(message(tree_from_labels(2, {{1, 1}})).find("cycle") != std::string::npos);
    CHECK(message(tree_from_labels(3, {{1, 2}, {2, 4}})).find("outside") != std::string::npos);
    CHECK(message(LabelledTree{0, {}}).find("at least one") != std::string::npos);

    CHECK_THROWS_AS((void)prufer_decode({4, {0}}), input_error);
    CHECK_THROWS_AS((void)prufer_decode({3, {3}}), input_error);
    CHECK_THROWS_AS((void)prufer_decode({0, {}}), input_error);
}

TEST_CASE("prufer round-trips and distinctness for n <= 7") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const std::size_t len = n >= 2 ? n - 2 : 0;
        std::set<std::vector<Edge>> trees;
        PruferSequence p{n, std::vector<vertex>(len, 0)};
        while (true) {
            const auto t = prufer_decode(p);
            REQUIRE(t.edges.size() == n - 1);
            REQUIRE(prufer_encode(t) == p);
            trees.insert(t.edges);
            std::size_t i = len;
            while (i > 0 && ++p.seq[i - 1] == n) {
                p.seq[--i] = 0;
            }
            if (i == 0) {
                break;
            }
        }
        std::uint64_t expected = 1;
        for (std::size_t i = 0; i < len; ++i) {
            expected *= n;
        }
        CHECK(trees.size() == expected);
    }
}

TEST_CASE("rooting a labelled tree recovers its rooted form") {
    const auto t = tree_from_labels(4, {{1, 2}, {2, 3}, {2, 4}});
    CHECK(root_tree(t, 1) == RootedTree::from_one_based(2, {2, 0, 2, 2}));
    CHECK(root_tree(t, 0) == RootedTree::from_one_based(1, {0, 1, 2, 2}));
    CHECK_THROWS_AS((void)root_tree(t, 4), input_error);
}
