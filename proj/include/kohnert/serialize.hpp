#pragma once

#include "kohnert/core.hpp"
#include "kohnert/crystal.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/tableau.hpp"
#include "kohnert/unlock.hpp"
#include "kohnert/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace kohnert {

using Json = nlohmann::ordered_json;

Json to_json(const Composition& a);
Json to_json(const Cell& c);
Json to_json(const Diagram& d);
Json to_json(const LabeledDiagram& t);
/// Coefficients that fit in 64 bits are numbers, larger ones decimal strings.
Json to_json(const Polynomial& p);
Json to_json(const CrystalGraph& g);
Json to_json(const UnlockTrace& trace);
Json to_json(const VerificationReport& r);

Diagram diagram_from_json(const Json& j);
LabeledDiagram labeled_from_json(const Json& j);

/// Parses a tableau document.  Syntax errors are reported with their byte
/// offset; shape errors with the offending element.
LabeledDiagram parse_labeled_diagram(std::string_view text);

/// Top row first, '.' for empty cells, a rule under row 1.
std::string render_ascii(const Diagram& d);
std::string render_ascii(const LabeledDiagram& t);

/// Rows top to bottom separated by '/', cells by ' ', '.' for empty.
std::string compact_string(const LabeledDiagram& t);

/// Graphviz digraph along f_i; node ids are the canonical JSON of each vertex.
std::string to_dot(const CrystalGraph& g);

} // namespace kohnert
