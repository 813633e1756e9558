#include "cayley/enumeration.hpp"

#include <set>
#include <string>

#include "cayley/bijection.hpp"
#include "cayley/error.hpp"
#include "cayley/parallel.hpp"

namespace cayley {

namespace {

void check_guard(std::size_t n, std::size_t bound, const char* what) {
    if (n < 1 || n > bound) {
        throw input_error(std::string(what) + " requires 1 <= n <= " + std::to_string(bound) + ", got n = " +
                          std::to_string(n));
    }
}

mpz_class power(std::size_t base, std::size_t exponent) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

} // namespace

MappingOdometer::MappingOdometer(std::size_t n, std::uint64_t first_rank)
    : current_(std::vector<vertex>(n, 0)) {
    for (std::size_t i = n; i-- > 0;) {
        current_.table_[i] = static_cast<vertex>(first_rank % n);
        first_rank /= n;
    }
    if (first_rank != 0) {
        throw input_error("odometer rank exceeds n^n");
    }
}

bool MappingOdometer::advance() noexcept {
    auto& table = current_.table_;
    const auto n = static_cast<vertex>(table.size());
    for (std::size_t i = table.size(); i-- > 0;) {
        if (++table[i] < n) {
            return true;
        }
        table[i] = 0;
    }
    return false;
}

std::uint64_t mapping_count(std::size_t n) {
    const mpz_class count = power(n, n);
    if (mpz_sizeinbase(count.get_mpz_t(), 2) > 64) {
        throw input_error("n^n overflows 64 bits for n = " + std::to_string(n));
    }
    return mpz_get_ui(count.get_mpz_t());
}

void enumerate_mappings(std::size_t n, const std::function<void(const Mapping&)>& visitor) {
    check_guard(n, max_enumeration_n, "mapping enumeration");
    enumerate_mapping_range(n, 0, mapping_count(n), visitor);
}

void enumerate_mapping_range(std::size_t n, std::uint64_t first, std::uint64_t last,
                             const std::function<void(const Mapping&)>& visitor) {
    check_guard(n, max_enumeration_n, "mapping enumeration");
    if (first >= last) {
        return;
    }
    if (last > mapping_count(n)) {
        throw input_error("enumeration range exceeds n^n");
    }
    MappingOdometer odometer(n, first);
    for (std::uint64_t rank = first; rank < last; ++rank) {
        visitor(odometer.current());
        odometer.advance();
    }
}

rational ExactPmf::total() const {
    rational sum(0);
    for (const auto& p : mass) {
        sum += p;
    }
    return sum;
}

rational ExactPmf::at(std::uint64_t value) const {
    if (value < offset || value - offset >= mass.size()) {
        return rational(0);
    }
    return mass[value - offset];
}

ExactPmf ExactPmf::shifted(std::uint64_t by) const {
    return ExactPmf{offset + by, mass};
}

namespace {

struct Tally {
    std::uint64_t unique_cyclic = 0;
    std::vector<std::uint64_t> by_cycle_count;
    std::vector<std::uint64_t> by_height;
};

Tally tally_range(std::size_t n, std::uint64_t lo, std::uint64_t hi, bool heights) {
    Tally t;
    t.by_cycle_count.assign(n + 1, 0);
    t.by_height.assign(n, 0);
    enumerate_mapping_range(n, lo, hi, [&](const Mapping& m) {
        const auto cycles = cycle_structure(m).num_cycles();
        ++t.by_cycle_count[cycles];
        if (unique_cyclic_vertex(m)) {
            ++t.unique_cyclic;
            if (heights) {
                for (auto d : mapping_to_rooted_tree(m).depths()) {
                    ++t.by_height[d];
                }
            }
        }
    });
    return t;
}

Tally tally_all(std::size_t n, unsigned jobs, bool heights) {
    const auto total = mapping_count(n);
    std::vector<Tally> parts(chunk_count(total, jobs));
    for_each_chunk(total, jobs, [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) {
        parts[chunk] = tally_range(n, lo, hi, heights);
    });
    Tally sum = std::move(parts.front());
    for (std::size_t c = 1; c < parts.size(); ++c) {
        sum.unique_cyclic += parts[c].unique_cyclic;
        for (std::size_t k = 0; k <= n; ++k) {
            sum.by_cycle_count[k] += parts[c].by_cycle_count[k];
        }
        for (std::size_t h = 0; h < n; ++h) {
            sum.by_height[h] += parts[c].by_height[h];
        }
    }
    return sum;
}

ExactPmf height_pmf_from(const Tally& t, std::size_t n) {
    // Denominator: (rooted trees found) x (vertices per tree).
    const mpz_class pairs = mpz_class(static_cast<unsigned long>(t.unique_cyclic)) * static_cast<unsigned long>(n);
    ExactPmf pmf{0, {}};
    for (auto count : t.by_height) {
        rational p(mpz_class(static_cast<unsigned long>(count)), pairs);
        p.canonicalize();
        pmf.mass.push_back(p);
    }
    return pmf;
}

} // namespace

ExactCounts exact_counts(std::size_t n, unsigned jobs) {
    check_guard(n, max_enumeration_n, "exact counts");
    const bool heights = n <= max_height_pmf_n;
    const auto t = tally_all(n, jobs, heights);

    ExactCounts out;
    out.n = n;
    out.total_mappings = power(n, n);
    out.unique_cyclic = static_cast<unsigned long>(t.unique_cyclic);
    // Every rooted tree is one of n rootings of a labelled tree.
    out.labelled_trees = out.unique_cyclic / static_cast<unsigned long>(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (t.by_cycle_count[k] != 0) {
            out.by_cycle_count[k] = static_cast<unsigned long>(t.by_cycle_count[k]);
        }
    }
    if (heights) {
        out.height_pmf = height_pmf_from(t, n);
    }
    return out;
}

ExactPmf exact_height_pmf(std::size_t n, unsigned jobs) {
    check_guard(n, max_height_pmf_n, "exact height pmf");
    return height_pmf_from(tally_all(n, jobs, true), n);
}

ExactPmf exact_collision_pmf(std::size_t n) {
    if (n == 0) {
        throw input_error("n must be at least 1");
    }
    const auto nn = static_cast<unsigned long>(n);
    ExactPmf pmf{1, {}};
    pmf.mass.reserve(n);
    // survive = P(first k-1 draws distinct) = prod_{j<k} (n - j)/n
    rational survive(1);
    for (unsigned long k = 1; k <= nn; ++k) {
        pmf.mass.push_back(survive * make_rational(k, nn));
        survive *= make_rational(nn - k, nn);
    }
    return pmf;
}

std::uint64_t count_distinct_prufer_trees(std::size_t n) {
    check_guard(n, max_enumeration_n, "Prufer enumeration");
    const std::size_t len = n >= 2 ? n - 2 : 0;
    std::set<std::vector<Edge>> trees;
    PruferSequence p{n, std::vector<vertex>(len, 0)};
    while (true) {
        trees.insert(prufer_decode(p).edges);
        std::size_t i = len;
        while (i > 0 && ++p.seq[i - 1] == n) {
            p.seq[--i] = 0;
        }
        if (i == 0) {
            break;
        }
    }
    return trees.size();
}

} // namespace cayley
