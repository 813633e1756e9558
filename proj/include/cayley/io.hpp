#pragma once

#include <string>

#include <json.hpp>

#include "cayley/bijection.hpp"
#include "cayley/core.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/exploration.hpp"

// JSON and Graphviz encodings. All labels are 1-based; a root's parent is 0.
namespace cayley::io {

using json = nlohmann::ordered_json;

[[nodiscard]] json to_json(const Mapping& m);
[[nodiscard]] json to_json(const RootedTree& t);
[[nodiscard]] json to_json(const DoublyRootedTree& d);
[[nodiscard]] json to_json(const LabelledTree& t);
[[nodiscard]] json to_json(const PruferSequence& p);
[[nodiscard]] json to_json(const ExplorationTrace& t);
[[nodiscard]] json to_json(const ExactCounts& c);
[[nodiscard]] json to_json(const ExactPmf& p);

// Readers ignore unknown keys and throw input_error on missing or malformed fields.
[[nodiscard]] Mapping mapping_from_json(const json& j);
[[nodiscard]] RootedTree rooted_tree_from_json(const json& j);
[[nodiscard]] DoublyRootedTree doubly_rooted_tree_from_json(const json& j);
[[nodiscard]] LabelledTree labelled_tree_from_json(const json& j);
[[nodiscard]] PruferSequence prufer_from_json(const json& j);

[[nodiscard]] json parse(const std::string& text);

[[nodiscard]] std::string rational_string(const rational& q);
[[nodiscard]] std::string integer_string(const mpz_class& z);

// Figure-style drawings: cyclic vertices get a double border, roots are filled.
[[nodiscard]] std::string to_dot(const Mapping& m);
[[nodiscard]] std::string to_dot(const RootedTree& t);
// The mapping recovered from the trace, each edge labelled by its reveal step.
[[nodiscard]] std::string to_dot(const ExplorationTrace& t);

} // namespace cayley::io
