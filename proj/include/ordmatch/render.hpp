#pragma once

#include <string>

#include "ordmatch/core.hpp"

namespace ordmatch {

/// Undirected DOT with vertices 1..n in rank order.
std::string to_dot(const OrderedGraph& g);

/// Arc diagram: vertices equally spaced on a baseline, each edge a
/// semicircular arc above it. Byte-stable for fixed input.
std::string to_arc_svg(const OrderedGraph& g);

}  // namespace ordmatch
