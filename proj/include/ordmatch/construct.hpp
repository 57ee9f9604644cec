#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordmatch/core.hpp"

namespace ordmatch {

enum class ExtremalFamily {
  Separated,     // complement of interval cliques with hub vertices
  NestedAlt,     // all edges of length <= 2k-2
  NonSeparated,  // recursive clique blocks, base size k + (n mod k)
  CrossSep,      // hub-covered short edges plus left-anchored long edges
  NestSep,       // all edges incident to the 2(k-1) boundary vertices
  NestCrossSep,  // edges through {1} u [k+1,2k-2] plus the corner clique
};

const char* extremal_family_name(ExtremalFamily f);
std::optional<ExtremalFamily> parse_extremal_family(const std::string& s);

/// Extremal graph of the family; edge count matches the corresponding closed
/// form on the family's validity range.
OrderedGraph extremal_construction(ExtremalFamily family, int n, int k);

/// Start from a clique on 2k-1 vertices; each word letter adds one vertex of
/// degree k-1: '1' apexes on the right, '2' reverses first. |word| must be
/// n - (2k-1). Edge count is (k-1)n; no non-nested k-matching.
OrderedGraph apex_chain_construction(const std::string& word, int n, int k);

/// k-1 hub vertices inside [k, n-k+1] joined to everything, plus all edges of
/// length >= n-k+1. Edge count (k-1)n; no non-nested k-matching.
OrderedGraph hub_long_construction(int n, int k,
                                   std::optional<std::vector<int>> hubs = std::nullopt);

/// Edges incident to [k-2] plus the dyadic short-edge grid; avoids a pair of
/// separated crossing matchings with k edges in total.
OrderedGraph cross_island_free_construction(int n, int k);

enum class DistanceClassMode {
  StronglyNonNestedTwo,  // distance-l edges split into two crossing-island matchings
  SeparatedClasses,      // distance-l edges split into l+1 separated matchings
};

/// Partition of all length-ell edges of the complete graph on [n].
std::vector<std::vector<Edge>> distance_class_partition(int n, int ell, DistanceClassMode mode);

}  // namespace ordmatch
