#ifndef DECO_GRAPH_EXPORT_HPP
#define DECO_GRAPH_EXPORT_HPP

#include "deco/decograph.hpp"

#include <json.hpp>

#include <string>

namespace deco {

/// Graphviz digraph; vertex labels are rendered monomials, edge labels are
/// word positions.
std::string to_dot(const DecoGraph& g);

/// {meta, vertices: [{d, b, monomial}], edges: [{src, j, dst}], source, sinks};
/// src, dst, source and sinks are indices into vertices.
nlohmann::json to_json(const DecoGraph& g);

std::string to_text(const DecoGraph& g);

nlohmann::json to_json(const InvariantReport& report);

}  // namespace deco

#endif
