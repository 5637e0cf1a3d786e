#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cka/partial_string.hpp"

namespace cka {

using CoverRelation = std::vector<std::pair<EventId, EventId>>;

/// Transitive reduction of the strict order, sorted lexicographically.
CoverRelation hasse(const PartialString &x);

/// Graphviz rendering of hasse(x), drawn top to bottom. Nodes are `e<i>`
/// labelled `<i>:<label>`.
std::string to_dot(const PartialString &x, const std::string &graph_name = "partial_string");

} // namespace cka
