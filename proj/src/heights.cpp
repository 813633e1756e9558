#include "cayley/heights.hpp"

#include <vector>

#include "cayley/bijection.hpp"
#include "cayley/error.hpp"
#include "cayley/montecarlo.hpp"
#include "cayley/parallel.hpp"

namespace cayley {

std::string_view to_string(TreeSampler s) noexcept {
    return s == TreeSampler::rejection ? "rejection" : "prufer";
}

TreeSampler tree_sampler_from_string(std::string_view s) {
    if (s == "rejection") {
        return TreeSampler::rejection;
    }
    if (s == "prufer") {
        return TreeSampler::prufer;
    }
    throw input_error("unknown tree sampler '" + std::string(s) + "' (expected rejection or prufer)");
}

namespace {

void check_n(std::size_t n) {
    if (n == 0) {
        throw input_error("n must be at least 1");
    }
}

} // namespace

RejectionSample sample_rooted_tree_rejection(std::size_t n, RngStream& stream) {
    check_n(n);
    const std::uint64_t cap = rejection_attempts_per_vertex * n;
    for (std::uint64_t attempt = 1; attempt <= cap; ++attempt) {
        auto m = sample_mapping(n, stream);
        if (unique_cyclic_vertex(m)) {
            return {mapping_to_rooted_tree(m), attempt};
        }
    }
    throw std::runtime_error("rejection sampler made " + std::to_string(cap) + " attempts at n = " +
                             std::to_string(n) + " without success; the random source is broken");
}

RootedTree sample_rooted_tree_prufer(std::size_t n, RngStream& stream) {
    check_n(n);
    PruferSequence p{n, std::vector<vertex>(n >= 2 ? n - 2 : 0)};
    for (auto& entry : p.seq) {
        entry = static_cast<vertex>(stream.below(n));
    }
    const auto root = static_cast<vertex>(stream.below(n));
    return root_tree(prufer_decode(p), root);
}

RootedTree sample_rooted_tree(std::size_t n, RngStream& stream, TreeSampler method) {
    if (method == TreeSampler::rejection) {
        return sample_rooted_tree_rejection(n, stream).tree;
    }
    return sample_rooted_tree_prufer(n, stream);
}

HeightSample sample_height(std::size_t n, RngStream& stream, TreeSampler method) {
    HeightSample out;
    if (method == TreeSampler::rejection) {
        auto sample = sample_rooted_tree_rejection(n, stream);
        out.sampled = static_cast<vertex>(stream.below(n));
        out.height = sample.tree.depth(out.sampled);
        out.attempts = sample.attempts;
    } else {
        const auto tree = sample_rooted_tree_prufer(n, stream);
        out.sampled = static_cast<vertex>(stream.below(n));
        out.height = tree.depth(out.sampled);
    }
    return out;
}

std::uint64_t sample_height_plus_one(std::size_t n, RngStream& stream, TreeSampler method) {
    return std::uint64_t{1} + sample_height(n, stream, method).height;
}

std::uint64_t sample_collision_count(std::size_t n, RngStream& stream) {
    check_n(n);
    std::vector<bool> seen(n, false);
    std::uint64_t distinct = 0;
    while (true) {
        const auto y = stream.below(n);
        if (seen[y]) {
            return distinct;
        }
        seen[y] = true;
        ++distinct;
    }
}

bool LawEqualityReport::passed() const {
    return chi_square_passes(height_vs_pmf) && chi_square_passes(collision_vs_pmf) &&
           chi_square_passes(two_sample) && exact_match.value_or(true);
}

LawEqualityReport law_equality_report(std::size_t n, std::uint64_t trials, std::uint64_t master_seed,
                                      TreeSampler method, unsigned jobs, bool exact) {
    check_n(n);
    if (trials == 0) {
        throw input_error("trials must be at least 1");
    }
    const auto chunks = chunk_count(trials, jobs);
    std::vector<Histogram> heights(chunks, Histogram(1, n));
    std::vector<Histogram> collisions(chunks, Histogram(1, n));
    for_each_chunk(trials, jobs, [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) {
        for (auto t = lo; t < hi; ++t) {
            auto hs = trial_stream(master_seed, StreamFamily::height_trials, t);
            heights[chunk].add(sample_height_plus_one(n, hs, method));
            auto cs = trial_stream(master_seed, StreamFamily::collision_trials, t);
            collisions[chunk].add(sample_collision_count(n, cs));
        }
    });

    LawEqualityReport report;
    report.n = n;
    report.trials = trials;
    report.seed = master_seed;
    report.method = method;
    report.height_plus_one = heights.front();
    report.collision = collisions.front();
    for (std::size_t c = 1; c < chunks; ++c) {
        report.height_plus_one.merge(heights[c]);
        report.collision.merge(collisions[c]);
    }

    const auto pmf = exact_collision_pmf(n);
    report.height_vs_pmf = chi_square_statistic(report.height_plus_one, pmf);
    report.collision_vs_pmf = chi_square_statistic(report.collision, pmf);
    report.two_sample = chi_square_two_sample(report.height_plus_one, report.collision);
    if (exact && n <= max_exact_law_n) {
        report.exact_match = exact_height_pmf(n).shifted(1) == pmf;
    }
    return report;
}

} // namespace cayley
