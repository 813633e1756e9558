#include "cayley/exploration.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/error.hpp"
#include "cayley/random.hpp"

namespace cayley {

std::string_view to_string(Closure c) noexcept {
    switch (c) {
    case Closure::self_loop:
        return "SelfLoop";
    case Closure::in_round:
        return "InRound";
    case Closure::prior_round:
        return "PriorRound";
    }
    return "?";
}

Closure closure_from_string(std::string_view s) {
    if (s == "SelfLoop") {
        return Closure::self_loop;
    }
    if (s == "InRound") {
        return Closure::in_round;
    }
    if (s == "PriorRound") {
        return Closure::prior_round;
    }
    throw input_error("unknown closure kind '" + std::string(s) + "'");
}

SelectionStrategy SelectionStrategy::smallest_label() {
    return {Kind::smallest_label, {}, 0};
}

SelectionStrategy SelectionStrategy::fixed_order(std::vector<vertex> order) {
    return {Kind::fixed_order, std::move(order), 0};
}

SelectionStrategy SelectionStrategy::seeded_random_order(std::uint64_t seed) {
    return {Kind::seeded_random_order, {}, seed};
}

std::string SelectionStrategy::name() const {
    switch (kind_) {
    case Kind::smallest_label:
        return "smallest";
    case Kind::fixed_order:
        return "fixed";
    case Kind::seeded_random_order:
        return "random";
    }
    return "?";
}

std::vector<vertex> SelectionStrategy::order_for(std::size_t n) const {
    std::vector<vertex> order(n);
    switch (kind_) {
    case Kind::smallest_label:
        std::iota(order.begin(), order.end(), vertex{0});
        break;
    case Kind::fixed_order: {
        if (order_.size() != n) {
            throw input_error("fixed order has " + std::to_string(order_.size()) +
                              " entries, expected " + std::to_string(n));
        }
        std::vector<bool> seen(n, false);
        for (vertex v : order_) {
            if (v >= n || seen[v]) {
                throw input_error("fixed order is not a permutation of [1.." + std::to_string(n) + "]");
            }
            seen[v] = true;
        }
        order = order_;
        break;
    }
    case Kind::seeded_random_order: {
        std::iota(order.begin(), order.end(), vertex{0});
        RngStream rng(derive_seed(seed_, 0x0bde), n);
        for (std::size_t i = n; i > 1; --i) {
            std::swap(order[i - 1], order[rng.below(i)]);
        }
        break;
    }
    }
    return order;
}

ExplorationTrace explore(const Mapping& m, const SelectionStrategy& strategy) {
    const auto n = m.size();
    const auto order = strategy.order_for(n);

    ExplorationTrace trace;
    trace.n = n;
    // Round that explored each vertex; 0 while unexplored.
    std::vector<std::uint32_t> explored_in(n, 0);
    std::uint64_t explored = 0;
    std::size_t cursor = 0;

    while (explored < n) {
        while (explored_in[order[cursor]] != 0) {
            ++cursor;
        }
        RoundRecord round;
        round.index = static_cast<std::uint32_t>(trace.rounds.size() + 1);
        round.start = order[cursor];

        vertex v = round.start;
        explored_in[v] = round.index;
        round.path.push_back(v);
        vertex next = m[v];
        while (explored_in[next] == 0) {
            v = next;
            explored_in[v] = round.index;
            round.path.push_back(v);
            next = m[v];
        }
        round.closing_from = v;
        round.closing_to = next;
        if (next == v) {
            round.closure = Closure::self_loop;
        } else if (explored_in[next] == round.index) {
            round.closure = Closure::in_round;
        } else {
            round.closure = Closure::prior_round;
        }

        explored += round.path.size();
        trace.explored_after.push_back(explored);
        trace.rounds.push_back(std::move(round));
    }
    return trace;
}

bool has_unique_cyclic_from_trace(const ExplorationTrace& t) {
    if (t.rounds.empty() || t.rounds.front().closure != Closure::self_loop) {
        return false;
    }
    return std::all_of(t.rounds.begin() + 1, t.rounds.end(),
                       [](const RoundRecord& r) { return r.closure == Closure::prior_round; });
}

std::size_t cycle_count_from_trace(const ExplorationTrace& t) {
    return static_cast<std::size_t>(std::count_if(t.rounds.begin(), t.rounds.end(), [](const RoundRecord& r) {
        return r.closure != Closure::prior_round;
    }));
}

Mapping reconstruct_mapping(const ExplorationTrace& t) {
    std::vector<vertex> table(t.n, no_vertex);
    auto reveal = [&](vertex from, vertex to) {
        if (from >= t.n || to >= t.n || table[from] != no_vertex) {
            throw input_error("trace reveals an edge out of range or twice");
        }
        table[from] = to;
    };
    for (const auto& r : t.rounds) {
        if (r.path.empty() || r.path.back() != r.closing_from) {
            throw input_error("round " + std::to_string(r.index) + " closing edge does not leave its last vertex");
        }
        for (std::size_t j = 0; j + 1 < r.path.size(); ++j) {
            reveal(r.path[j], r.path[j + 1]);
        }
        reveal(r.closing_from, r.closing_to);
    }
    if (std::find(table.begin(), table.end(), no_vertex) != table.end()) {
        throw input_error("trace does not explore every vertex");
    }
    return Mapping(std::move(table));
}

namespace {

void check_cumulative(std::span<const std::uint64_t> cumulative) {
    if (cumulative.empty()) {
        throw input_error("cumulative counts must be non-empty");
    }
    if (cumulative.front() == 0) {
        throw input_error("cumulative counts must be positive");
    }
    for (std::size_t i = 1; i < cumulative.size(); ++i) {
        if (cumulative[i] <= cumulative[i - 1]) {
            throw input_error("cumulative counts must be strictly increasing (T_" + std::to_string(i + 1) +
                              " = " + std::to_string(cumulative[i]) + ")");
        }
    }
}

mpz_class big(std::uint64_t x) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    return z;
}

} // namespace

rational make_rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw input_error("zero denominator");
    }
    rational q(big(num), big(den));
    q.canonicalize();
    return q;
}

rational telescoping_probability(std::span<const std::uint64_t> cumulative) {
    check_cumulative(cumulative);
    rational product = make_rational(1, cumulative.front());
    for (std::size_t i = 1; i < cumulative.size(); ++i) {
        product *= make_rational(cumulative[i - 1], cumulative[i]);
    }
    return product;
}

std::vector<rational> conditional_event_probabilities(std::span<const std::uint64_t> cumulative) {
    check_cumulative(cumulative);
    std::vector<rational> out;
    out.reserve(cumulative.size());
    out.push_back(make_rational(1, cumulative.front()));
    for (std::size_t i = 1; i < cumulative.size(); ++i) {
        out.push_back(make_rational(cumulative[i - 1], cumulative[i]));
    }
    return out;
}

std::vector<rational> conditional_event_probabilities(const ExplorationTrace& t) {
    return conditional_event_probabilities(t.explored_after);
}

} // namespace cayley
