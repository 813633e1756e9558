#include "cayley/io.hpp"

#include <sstream>

#include "cayley/error.hpp"

namespace cayley::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) {
        throw input_error("expected a JSON object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw input_error(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

long long integer(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw input_error(std::string("field \"") + what + "\" must be an integer");
    }
    return j.get<long long>();
}

std::vector<long long> integer_array(const json& j, const char* what) {
    if (!j.is_array()) {
        throw input_error(std::string("field \"") + what + "\" must be an array");
    }
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        out.push_back(integer(e, what));
    }
    return out;
}

std::size_t size_field(const json& j) {
    const auto n = integer(field(j, "n"), "n");
    if (n < 1) {
        throw input_error("n must be at least 1");
    }
    return static_cast<std::size_t>(n);
}

vertex label(long long value, std::size_t n, const char* what) {
    if (value < 1 || static_cast<unsigned long long>(value) > n) {
        throw input_error(std::string(what) + " " + std::to_string(value) + " outside [1.." + std::to_string(n) + "]");
    }
    return static_cast<vertex>(value - 1);
}

json parent_array(const RootedTree& t) {
    json parent = json::array();
    for (vertex p : t.parents()) {
        parent.push_back(p == no_vertex ? 0LL : static_cast<long long>(p) + 1);
    }
    return parent;
}

} // namespace

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string rational_string(const rational& q) {
    return q.get_str();
}

std::string integer_string(const mpz_class& z) {
    return z.get_str();
}

json to_json(const Mapping& m) {
    return json{{"n", m.size()}, {"table", m.one_based()}};
}

json to_json(const RootedTree& t) {
    return json{{"n", t.size()}, {"root", t.root() + 1ULL}, {"parent", parent_array(t)}};
}

json to_json(const DoublyRootedTree& d) {
    return json{{"n", d.size()}, {"head", d.head() + 1ULL}, {"tail", d.tail() + 1ULL}, {"parent", parent_array(d.tree())}};
}

json to_json(const LabelledTree& t) {
    json edges = json::array();
    for (const auto& [a, b] : t.edges) {
        edges.push_back(json::array({a + 1ULL, b + 1ULL}));
    }
    return json{{"n", t.n}, {"edges", edges}};
}

json to_json(const PruferSequence& p) {
    json seq = json::array();
    for (vertex v : p.seq) {
        seq.push_back(v + 1ULL);
    }
    return json{{"n", p.n}, {"seq", seq}};
}

json to_json(const ExplorationTrace& t) {
    json rounds = json::array();
    for (const auto& r : t.rounds) {
        json path = json::array();
        for (vertex v : r.path) {
            path.push_back(v + 1ULL);
        }
        rounds.push_back(json{{"start", r.start + 1ULL},
                              {"path", path},
                              {"closing_edge", json::array({r.closing_from + 1ULL, r.closing_to + 1ULL})},
                              {"closure", std::string(to_string(r.closure))}});
    }
    return json{{"n", t.n}, {"K", t.num_rounds()}, {"T", t.explored_after}, {"rounds", rounds}};
}

json to_json(const ExactPmf& p) {
    json mass = json::object();
    for (std::size_t i = 0; i < p.mass.size(); ++i) {
        mass[std::to_string(p.offset + i)] = rational_string(p.mass[i]);
    }
    return mass;
}

json to_json(const ExactCounts& c) {
    json by_cycles = json::object();
    for (const auto& [k, count] : c.by_cycle_count) {
        by_cycles[std::to_string(k)] = integer_string(count);
    }
    json out{{"n", c.n},
             {"total", integer_string(c.total_mappings)},
             {"unique_cyclic", integer_string(c.unique_cyclic)},
             {"labelled_trees", integer_string(c.labelled_trees)}};
    rational ratio(c.unique_cyclic, c.total_mappings);
    ratio.canonicalize();
    out["unique_cyclic_ratio"] = rational_string(ratio);
    out["by_cycle_count"] = by_cycles;
    if (c.height_pmf) {
        out["height_pmf"] = to_json(*c.height_pmf);
    }
    return out;
}

Mapping mapping_from_json(const json& j) {
    const auto n = size_field(j);
    const auto table = integer_array(field(j, "table"), "table");
    if (table.size() != n) {
        throw input_error("table has " + std::to_string(table.size()) + " entries, expected n = " + std::to_string(n));
    }
    return Mapping::from_one_based(table);
}

RootedTree rooted_tree_from_json(const json& j) {
    const auto n = size_field(j);
    const auto parent = integer_array(field(j, "parent"), "parent");
    if (parent.size() != n) {
        throw input_error("parent has " + std::to_string(parent.size()) + " entries, expected n = " + std::to_string(n));
    }
    return RootedTree::from_one_based(integer(field(j, "root"), "root"), parent);
}

DoublyRootedTree doubly_rooted_tree_from_json(const json& j) {
    const auto n = size_field(j);
    const auto parent = integer_array(field(j, "parent"), "parent");
    if (parent.size() != n) {
        throw input_error("parent has " + std::to_string(parent.size()) + " entries, expected n = " + std::to_string(n));
    }
    const auto tail = integer(field(j, "tail"), "tail");
    const auto head = label(integer(field(j, "head"), "head"), n, "head");
    return DoublyRootedTree(RootedTree::from_one_based(tail, parent), head);
}

LabelledTree labelled_tree_from_json(const json& j) {
    LabelledTree t;
    t.n = size_field(j);
    const auto& edges = field(j, "edges");
    if (!edges.is_array()) {
        throw input_error("field \"edges\" must be an array");
    }
    for (const auto& e : edges) {
        const auto pair = integer_array(e, "edges");
        if (pair.size() != 2) {
            throw input_error("each edge must be a pair of labels");
        }
        t.edges.emplace_back(label(pair[0], t.n, "edge endpoint"), label(pair[1], t.n, "edge endpoint"));
    }
    return t;
}

PruferSequence prufer_from_json(const json& j) {
    PruferSequence p;
    p.n = size_field(j);
    for (auto v : integer_array(field(j, "seq"), "seq")) {
        p.seq.push_back(label(v, p.n, "Prufer entry"));
    }
    return p;
}

namespace {

std::string node_line(vertex v, bool cyclic, bool root) {
    std::ostringstream out;
    out << "  " << v + 1ULL << " [";
    out << "peripheries=" << (cyclic ? 2 : 1);
    if (root) {
        out << ", style=filled, fillcolor=lightgray";
    }
    out << "];\n";
    return out.str();
}

} // namespace

std::string to_dot(const Mapping& m) {
    const auto cs = cycle_structure(m);
    const auto root = unique_cyclic_vertex(m);
    std::ostringstream out;
    out << "digraph G_f {\n  node [shape=circle];\n";
    for (vertex v = 0; v < m.size(); ++v) {
        out << node_line(v, cs.cyclic[v], root == v);
    }
    for (vertex v = 0; v < m.size(); ++v) {
        out << "  " << v + 1ULL << " -> " << m[v] + 1ULL << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const RootedTree& t) {
    std::ostringstream out;
    out << "digraph tree {\n  node [shape=circle];\n";
    for (vertex v = 0; v < t.size(); ++v) {
        out << node_line(v, v == t.root(), v == t.root());
    }
    for (vertex v = 0; v < t.size(); ++v) {
        if (v != t.root()) {
            out << "  " << v + 1ULL << " -> " << t.parent(v) + 1ULL << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const ExplorationTrace& t) {
    const auto m = reconstruct_mapping(t);
    const auto cs = cycle_structure(m);
    const auto root = unique_cyclic_vertex(m);
    std::ostringstream out;
    out << "digraph exploration {\n  node [shape=circle];\n";
    for (vertex v = 0; v < m.size(); ++v) {
        out << node_line(v, cs.cyclic[v], root == v);
    }
    std::uint64_t step = 0;
    for (const auto& r : t.rounds) {
        for (std::size_t j = 0; j < r.path.size(); ++j) {
            const vertex from = r.path[j];
            const vertex to = j + 1 < r.path.size() ? r.path[j + 1] : r.closing_to;
            out << "  " << from + 1ULL << " -> " << to + 1ULL << " [label=\"" << ++step;
            if (j + 1 == r.path.size()) {
                out << " (" << to_string(r.closure) << ")\", style=bold";
            } else {
                out << "\"";
            }
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace cayley::io
