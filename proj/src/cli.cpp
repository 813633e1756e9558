#include "cayley/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cayley/bijection.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/error.hpp"
#include "cayley/exploration.hpp"
#include "cayley/heights.hpp"
#include "cayley/io.hpp"
#include "cayley/montecarlo.hpp"

namespace cayley::cli {

namespace {

using io::json;

struct Config {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = release_seed;
    std::uint64_t stream = 0;
    unsigned jobs = 1;
    bool as_json = false;
    bool dot = false;
    bool exact = false;
    std::string method = "rejection";
    std::string strategy = "smallest";
    std::uint64_t order_seed = 0;
    std::vector<long long> order;
    std::string input = "-";
    std::uint64_t min_observations = 100;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
};

std::string slurp(const Config& cfg, std::istream& in) {
    if (cfg.input == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(cfg.input);
    if (!file) {
        throw input_error("cannot open input file '" + cfg.input + "'");
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void emit(std::ostream& out, const json& j) {
    out << j.dump(2) << '\n';
}

json randomized_header(const char* command, const Config& cfg) {
    return json{{"command", command}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"n", cfg.n}};
}

// ---------------------------------------------------------------- commands

int sample_function(const Config& cfg, Streams s) {
    auto stream = trial_stream(cfg.seed, StreamFamily::single_sample, cfg.stream);
    const auto m = sample_mapping(cfg.n, stream);
    if (cfg.dot) {
        s.out << io::to_dot(m);
        return ok;
    }
    auto j = io::to_json(m);
    j["seed"] = cfg.seed;
    j["trials"] = 1;
    j["stream"] = cfg.stream;
    emit(s.out, j);
    return ok;
}

SelectionStrategy strategy_from(const Config& cfg) {
    if (cfg.strategy == "smallest") {
        return SelectionStrategy::smallest_label();
    }
    if (cfg.strategy == "random") {
        return SelectionStrategy::seeded_random_order(cfg.order_seed);
    }
    if (cfg.strategy == "fixed") {
        std::vector<vertex> order;
        for (auto label : cfg.order) {
            if (label < 1) {
                throw input_error("--order labels must be positive");
            }
            order.push_back(static_cast<vertex>(label - 1));
        }
        return SelectionStrategy::fixed_order(std::move(order));
    }
    throw input_error("unknown strategy '" + cfg.strategy + "' (expected smallest, random or fixed)");
}

int trace(const Config& cfg, Streams s) {
    const auto m = io::mapping_from_json(io::parse(slurp(cfg, s.in)));
    const auto t = explore(m, strategy_from(cfg));
    if (cfg.dot) {
        s.out << io::to_dot(t);
    } else {
        emit(s.out, io::to_json(t));
    }
    return ok;
}

int verify_cayley(const Config& cfg, Streams s) {
    const auto e = estimate_unique_cyclic(cfg.n, cfg.trials, cfg.seed, cfg.jobs);
    const double expected = 1.0 / static_cast<double>(cfg.n);
    const double tolerance = cayley_tolerance(cfg.n, cfg.trials);
    const double deviation = std::abs(e.point - expected);
    const bool pass = deviation <= tolerance;
    if (cfg.as_json) {
        auto j = randomized_header("verify-cayley", cfg);
        j["successes"] = e.successes;
        j["point"] = e.point;
        j["expected"] = "1/" + std::to_string(cfg.n);
        j["z"] = e.z;
        j["ci_low"] = e.ci.low;
        j["ci_high"] = e.ci.high;
        j["deviation"] = deviation;
        j["tolerance"] = tolerance;
        j["pass"] = pass;
        emit(s.out, j);
    } else {
        s.out << std::setprecision(6) << "verify-cayley n=" << cfg.n << " trials=" << cfg.trials
              << " seed=" << cfg.seed << '\n'
              << "  unique cyclic vertex: " << e.successes << " / " << e.trials << " = " << e.point << '\n'
              << "  expected 1/n = " << expected << ", |deviation| = " << deviation
              << ", tolerance = " << tolerance << '\n'
              << "  Wilson interval (z=" << e.z << "): [" << e.ci.low << ", " << e.ci.high << "]\n"
              << "  " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? ok : verification_failed;
}

int check_conditionals(const Config& cfg, Streams s) {
    const auto report = check_round_conditionals(cfg.n, cfg.trials, cfg.seed, cfg.jobs, cfg.min_observations);
    if (cfg.as_json) {
        auto j = randomized_header("check-conditionals", cfg);
        j["min_observations"] = report.min_observations;
        j["checked_bins"] = report.checked_bins();
        j["flagged_bins"] = report.flagged_bins();
        j["pass"] = report.passed();
        json bins = json::array();
        for (const auto& b : report.bins) {
            const bool checked = b.observations >= report.min_observations;
            bins.push_back(json{{"round", b.round},
                                {"T_prev", b.explored_before},
                                {"T", b.explored_after},
                                {"observations", b.observations},
                                {"events", b.events},
                                {"frequency", b.frequency()},
                                {"predicted", io::rational_string(b.predicted)},
                                {"standard_error", b.standard_error()},
                                {"checked", checked},
                                {"flagged", checked && b.deviates()}});
        }
        j["bins"] = bins;
        emit(s.out, j);
    } else {
        s.out << "check-conditionals n=" << cfg.n << " trials=" << cfg.trials << " seed=" << cfg.seed << '\n';
        s.out << std::setw(6) << "round" << std::setw(8) << "T_prev" << std::setw(8) << "T" << std::setw(10) << "obs"
              << std::setw(12) << "freq" << std::setw(12) << "predicted" << std::setw(8) << "dev/SE" << "  flag\n";
        for (const auto& b : report.bins) {
            const bool checked = b.observations >= report.min_observations;
            s.out << std::setw(6) << b.round << std::setw(8) << b.explored_before << std::setw(8) << b.explored_after
                  << std::setw(10) << b.observations << std::setw(12) << std::setprecision(5) << b.frequency()
                  << std::setw(12) << io::rational_string(b.predicted) << std::setw(8) << std::setprecision(3)
                  << b.deviation_in_se() << "  " << (!checked ? "-" : (b.deviates() ? "FLAG" : "ok")) << '\n';
        }
        s.out << "checked bins: " << report.checked_bins() << ", flagged: " << report.flagged_bins() << "  "
              << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? ok : verification_failed;
}

int enumerate(const Config& cfg, Streams s) {
    const auto counts = exact_counts(cfg.n, cfg.jobs);
    if (cfg.as_json) {
        emit(s.out, io::to_json(counts));
        return ok;
    }
    rational ratio(counts.unique_cyclic, counts.total_mappings);
    ratio.canonicalize();
    s.out << "n = " << counts.n << '\n'
          << "mappings:          " << counts.total_mappings.get_str() << '\n'
          << "unique cyclic:     " << counts.unique_cyclic.get_str() << "  (ratio " << ratio.get_str() << ")\n"
          << "labelled trees:    " << counts.labelled_trees.get_str() << '\n'
          << "by cycle count:\n";
    for (const auto& [k, c] : counts.by_cycle_count) {
        s.out << "  " << k << ": " << c.get_str() << '\n';
    }
    if (counts.height_pmf) {
        s.out << "height pmf:\n";
        for (std::size_t h = 0; h < counts.height_pmf->mass.size(); ++h) {
            s.out << "  P(H=" << h << ") = " << counts.height_pmf->mass[h].get_str() << '\n';
        }
    }
    return ok;
}

int sample_tree(const Config& cfg, Streams s) {
    const auto method = tree_sampler_from_string(cfg.method);
    auto stream = trial_stream(cfg.seed, StreamFamily::single_sample, cfg.stream);
    std::uint64_t attempts = 1;
    RootedTree tree = [&] {
        if (method == TreeSampler::rejection) {
            auto sample = sample_rooted_tree_rejection(cfg.n, stream);
            attempts = sample.attempts;
            return std::move(sample.tree);
        }
        return sample_rooted_tree_prufer(cfg.n, stream);
    }();
    if (cfg.dot) {
        s.out << io::to_dot(tree);
        return ok;
    }
    auto j = io::to_json(tree);
    j["seed"] = cfg.seed;
    j["trials"] = 1;
    j["stream"] = cfg.stream;
    j["method"] = std::string(to_string(method));
    j["attempts"] = attempts;
    emit(s.out, j);
    return ok;
}

json histogram_json(const Histogram& h) {
    return json{{"offset", h.offset()}, {"total", h.total()}, {"counts", h.counts()}, {"mean", h.mean()}};
}

json chi_square_json(const ChiSquare& c) {
    json j{{"statistic", c.statistic},
           {"df", c.df},
           {"critical", chi_square_critical(c.df)},
           {"pass", chi_square_passes(c)}};
    if (c.degenerate) {
        j["warning"] = c.warning;
    }
    return j;
}

int heights(const Config& cfg, Streams s) {
    const auto method = tree_sampler_from_string(cfg.method);
    const auto report = law_equality_report(cfg.n, cfg.trials, cfg.seed, method, cfg.jobs, cfg.exact);
    auto j = randomized_header("heights", cfg);
    j["method"] = std::string(to_string(method));
    j["level"] = chi_square_level;
    j["height_plus_one"] = histogram_json(report.height_plus_one);
    j["height_plus_one"]["sampler"] = std::string(to_string(method));
    j["collision_count"] = histogram_json(report.collision);
    j["collision_pmf"] = io::to_json(exact_collision_pmf(cfg.n));
    j["height_vs_pmf"] = chi_square_json(report.height_vs_pmf);
    j["collision_vs_pmf"] = chi_square_json(report.collision_vs_pmf);
    j["two_sample"] = chi_square_json(report.two_sample);
    if (report.exact_match) {
        j["exact_law_equal"] = *report.exact_match;
    } else if (cfg.exact) {
        j["exact_law_equal"] = nullptr;
        j["exact_note"] = "exact comparison needs n <= " + std::to_string(max_exact_law_n);
    }
    j["pass"] = report.passed();
    emit(s.out, j);
    return report.passed() ? ok : verification_failed;
}

int prufer(const std::string& action, const Config& cfg, Streams s) {
    const auto doc = io::parse(slurp(cfg, s.in));
    if (action == "encode") {
        emit(s.out, io::to_json(prufer_encode(io::labelled_tree_from_json(doc))));
    } else {
        emit(s.out, io::to_json(prufer_decode(io::prufer_from_json(doc))));
    }
    return ok;
}

int joyal(const std::string& action, const Config& cfg, Streams s) {
    const auto doc = io::parse(slurp(cfg, s.in));
    if (action == "encode") {
        emit(s.out, io::to_json(joyal_encode(io::mapping_from_json(doc))));
    } else {
        emit(s.out, io::to_json(joyal_decode(io::doubly_rooted_tree_from_json(doc))));
    }
    return ok;
}

// ------------------------------------------------------------------ parser

void add_n(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--n", cfg.n, "number of vertices")->required()->check(CLI::PositiveNumber);
}

void add_sampling(CLI::App* cmd, Config& cfg, bool with_trials) {
    cmd->add_option("--seed", cfg.seed, "master seed (echoed in the output)")->capture_default_str();
    if (with_trials) {
        cmd->add_option("--trials", cfg.trials, "number of independent trials")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", cfg.jobs, "worker threads (output does not depend on it)")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    } else {
        cmd->add_option("--stream", cfg.stream, "stream index under the seed")->capture_default_str();
    }
}

void add_input(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--input", cfg.input, "input JSON file, '-' for standard input")->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Random mappings, exploration traces and Cayley's formula"};
    app.name("cayley");
    app.set_version_flag("--version", std::string("cayley ") + version);
    app.require_subcommand(1);

    auto* sample_fn = app.add_subcommand("sample-function", "sample a uniform random mapping");
    add_n(sample_fn, cfg);
    add_sampling(sample_fn, cfg, false);
    sample_fn->add_flag("--dot", cfg.dot, "emit Graphviz instead of JSON");

    auto* trace_cmd = app.add_subcommand("trace", "run the exploration procedure on a mapping");
    add_input(trace_cmd, cfg);
    trace_cmd->add_option("--strategy", cfg.strategy, "start-vertex rule: smallest, random or fixed")
        ->capture_default_str();
    trace_cmd->add_option("--order-seed", cfg.order_seed, "seed for --strategy random");
    trace_cmd->add_option("--order", cfg.order, "permutation of 1..n for --strategy fixed")->delimiter(',');
    trace_cmd->add_flag("--dot", cfg.dot, "emit Graphviz with reveal order as edge labels");

    auto* verify = app.add_subcommand("verify-cayley", "estimate P(unique cyclic vertex) and compare with 1/n");
    add_n(verify, cfg);
    add_sampling(verify, cfg, true);
    verify->add_flag("--json", cfg.as_json, "emit JSON");

    auto* conditionals = app.add_subcommand("check-conditionals", "check per-round conditional probabilities");
    add_n(conditionals, cfg);
    add_sampling(conditionals, cfg, true);
    conditionals->add_option("--min-observations", cfg.min_observations, "bins below this size are not checked")
        ->capture_default_str();
    conditionals->add_flag("--json", cfg.as_json, "emit JSON");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "exact counts over all n^n mappings");
    add_n(enumerate_cmd, cfg);
    enumerate_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--json", cfg.as_json, "emit JSON");

    auto* tree_cmd = app.add_subcommand("sample-tree", "sample a uniform rooted tree");
    add_n(tree_cmd, cfg);
    add_sampling(tree_cmd, cfg, false);
    tree_cmd->add_option("--method", cfg.method, "rejection or prufer")->capture_default_str();
    tree_cmd->add_flag("--dot", cfg.dot, "emit Graphviz instead of JSON");

    auto* heights_cmd = app.add_subcommand("heights", "compare 1 + H_n with the first-collision count");
    add_n(heights_cmd, cfg);
    add_sampling(heights_cmd, cfg, true);
    heights_cmd->add_option("--method", cfg.method, "tree sampler: rejection or prufer")->capture_default_str();
    heights_cmd->add_flag("--exact", cfg.exact, "also compare the exact laws (n <= 6)");

    auto* prufer_cmd = app.add_subcommand("prufer", "Prufer codec over JSON edge lists");
    prufer_cmd->require_subcommand(1);
    for (const char* action : {"encode", "decode"}) {
        add_input(prufer_cmd->add_subcommand(action), cfg);
    }

    auto* joyal_cmd = app.add_subcommand("joyal", "Joyal codec between mappings and doubly-rooted trees");
    joyal_cmd->require_subcommand(1);
    for (const char* action : {"encode", "decode"}) {
        add_input(joyal_cmd->add_subcommand(action), cfg);
    }

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("cayley");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_or_input_error;
    }

    const Streams streams{in, out};
    try {
        if (sample_fn->parsed()) {
            return sample_function(cfg, streams);
        }
        if (trace_cmd->parsed()) {
            return trace(cfg, streams);
        }
        if (verify->parsed()) {
            return verify_cayley(cfg, streams);
        }
        if (conditionals->parsed()) {
            return check_conditionals(cfg, streams);
        }
        if (enumerate_cmd->parsed()) {
            return enumerate(cfg, streams);
        }
        if (tree_cmd->parsed()) {
            return sample_tree(cfg, streams);
        }
        if (heights_cmd->parsed()) {
            return heights(cfg, streams);
        }
        if (prufer_cmd->parsed()) {
            return prufer(prufer_cmd->get_subcommands().front()->get_name(), cfg, streams);
        }
        if (joyal_cmd->parsed()) {
            return joyal(joyal_cmd->get_subcommands().front()->get_name(), cfg, streams);
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_or_input_error;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_or_input_error;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return verification_failed;
    }
    err << app.help();
    return usage_or_input_error;
}

} // namespace cayley::cli
