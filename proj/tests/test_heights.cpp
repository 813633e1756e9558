#include <doctest.h>

#include <cmath>
#include <map>

#include "cayley/enumeration.hpp"
#include "cayley/error.hpp"
#include "cayley/heights.hpp"
#include "cayley/montecarlo.hpp"

using namespace cayley;

namespace {

bool within(double observed, double p, std::uint64_t trials, double sigmas) {
    return std::abs(observed - p) <= sigmas * std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

std::map<std::vector<vertex>, std::uint64_t> tree_frequencies(std::size_t n, TreeSampler method,
                                                             std::uint64_t trials, std::uint64_t seed) {
    std::map<std::vector<vertex>, std::uint64_t> out;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto s = trial_stream(seed, StreamFamily::height_trials, t);
        const auto tree = sample_rooted_tree(n, s, method);
        std::vector<vertex> key(tree.parents().begin(), tree.parents().end());
        key.push_back(tree.root());
        ++out[key];
    }
    return out;
}

double exact_mean(const ExactPmf& pmf) {
    double mean = 0;
    for (std::size_t i = 0; i < pmf.mass.size(); ++i) {
        mean += static_cast<double>(pmf.offset + i) * pmf.mass[i].get_d();
    }
    return mean;
}

} // namespace

TEST_CASE("sampler names") {
    CHECK(to_string(TreeSampler::rejection) == "rejection");
    CHECK(to_string(TreeSampler::prufer) == "prufer");
    CHECK(tree_sampler_from_string("prufer") == TreeSampler::prufer);
    CHECK_THROWS_AS((void)tree_sampler_from_string("magic"), input_error);
}

TEST_CASE("both samplers are uniform over rooted trees") {
    for (auto method : {TreeSampler::rejection, TreeSampler::prufer}) {
        const std::uint64_t trials = 90'000;
        const auto two = tree_frequencies(2, method, trials, 1);
        CHECK(two.size() == 2);
        for (const auto& [key, count] : two) {
            CHECK(within(static_cast<double>(count) / trials, 0.5, trials, 5));
        }
        const auto three = tree_frequencies(3, method, trials, 2);
        CHECK(three.size() == 9);
        for (const auto& [key, count] : three) {
            CHECK(within(static_cast<double>(count) / trials, 1.0 / 9, trials, 4));
        }
        const auto four = tree_frequencies(4, method, 320'000, 3);
        CHECK(four.size() == 64);
        for (const auto& [key, count] : four) {
            CHECK(within(static_cast<double>(count) / 320'000, 1.0 / 64, 320'000, 5));
        }
    }
}

TEST_CASE("rejection attempts are geometric with mean n") {
    for (std::size_t n : {5U, 30U}) {
        const std::uint64_t trials = 10'000;
        std::uint64_t total = 0, first_try = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            auto s = trial_stream(77, StreamFamily::height_trials, t);
            const auto r = sample_rooted_tree_rejection(n, s);
            total += r.attempts;
            first_try += r.attempts == 1 ? 1 : 0;
        }
        const double nd = static_cast<double>(n);
        const double mean = static_cast<double>(total) / trials;
        // sd of a geometric(1/n) count is sqrt(n(n-1))
        CHECK(std::abs(mean - nd) <= 4 * std::sqrt(nd * (nd - 1) / trials));
        CHECK(within(static_cast<double>(first_try) / trials, 1 / nd, trials, 4));
    }
    auto s = trial_stream(1, StreamFamily::height_trials, 0);
    CHECK(sample_rooted_tree_rejection(1, s).attempts == 1);
}

TEST_CASE("prufer sampler handles large n") {
    auto s = trial_stream(5, StreamFamily::height_trials, 0);
    const auto tree = sample_rooted_tree_prufer(10'000, s);
    CHECK(tree.size() == 10'000);
    const auto depths = tree.depths();
    CHECK(depths[tree.root()] == 0);
    CHECK_THROWS_AS((void)sample_rooted_tree_prufer(0, s), input_error);
}

TEST_CASE("height samples agree with the exact law") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto pmf = exact_height_pmf(n);
        for (auto method : {TreeSampler::rejection, TreeSampler::prufer}) {
            const std::uint64_t trials = 100'000;
            std::vector<std::uint64_t> counts(n, 0);
            for (std::uint64_t t = 0; t < trials; ++t) {
                auto s = trial_stream(31 + n, StreamFamily::height_trials, t);
                const auto h = sample_height(n, s, method);
                REQUIRE(h.sampled < n);
                REQUIRE(h.height < n);
                ++counts[h.height];
            }
            for (std::size_t h = 0; h < n; ++h) {
                CHECK(within(static_cast<double>(counts[h]) / trials, pmf.mass[h].get_d(), trials, 5));
            }
        }
    }
}

TEST_CASE("collision counts") {
    auto s = trial_stream(3, StreamFamily::collision_trials, 0);
    CHECK(sample_collision_count(1, s) == 1);
    for (int i = 0; i < 1000; ++i) {
        const auto c = sample_collision_count(10, s);
        REQUIRE(c >= 1);
        REQUIRE(c <= 10);
    }
    const std::uint64_t trials = 20'000;
    double sum = 0, sum_sq = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto st = trial_stream(4, StreamFamily::collision_trials, t);
        const auto c = static_cast<double>(sample_collision_count(365, st));
        sum += c;
        sum_sq += c * c;
    }
    const double mean = sum / trials;
    const double sd = std::sqrt(sum_sq / trials - mean * mean);
    CHECK(std::abs(mean - exact_mean(exact_collision_pmf(365))) <= 4 * sd / std::sqrt(trials));
}

TEST_CASE("law equality report") {
    const auto one = law_equality_report(1, 100, 9);
    CHECK(one.height_plus_one.count(1) == 100);
    CHECK(one.collision.count(1) == 100);
    CHECK(one.height_vs_pmf.degenerate);
    REQUIRE(one.exact_match.has_value());
    CHECK(*one.exact_match);
    CHECK(one.passed());

    const auto small = law_equality_report(5, 20'000, 9, TreeSampler::prufer, 3);
    REQUIRE(small.exact_match.has_value());
    CHECK(*small.exact_match);
    CHECK(small.passed());

    const auto fifty = law_equality_report(50, 20'000, 9, TreeSampler::rejection, 4);
    CHECK_FALSE(fifty.exact_match.has_value());
    CHECK(fifty.height_plus_one.total() == 20'000);
    CHECK(fifty.collision.total() == 20'000);
    CHECK(fifty.height_vs_pmf.df > 3);
    CHECK(chi_square_passes(fifty.height_vs_pmf));
    CHECK(chi_square_passes(fifty.collision_vs_pmf));
    CHECK(chi_square_passes(fifty.two_sample));
    CHECK(fifty.passed());
}

TEST_CASE("law equality report does not depend on jobs") {
    const auto a = law_equality_report(12, 3'001, 17, TreeSampler::rejection, 1);
    const auto b = law_equality_report(12, 3'001, 17, TreeSampler::rejection, 5);
    CHECK(a.height_plus_one.counts() == b.height_plus_one.counts());
    CHECK(a.collision.counts() == b.collision.counts());
    CHECK(a.two_sample.statistic == b.two_sample.statistic);
}
