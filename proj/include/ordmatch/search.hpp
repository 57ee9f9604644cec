#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordmatch/detect.hpp"

namespace ordmatch {

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000'000ULL;
  int workers = 1;
  bool shift_pruning = false;           // sound only for a single NonSep pattern
  std::optional<int> seed_lower_bound;  // caller-supplied extra floor
  int ceiling = 9;                      // largest accepted n
};

struct SearchReport {
  int n = 0;
  std::vector<PatternSpec> forbidden;
  int value = 0;
  bool exact = true;  // false when the node budget cut the search
  std::vector<OrderedGraph> witnesses;  // all optima up to reversal, canonical, sorted
  std::uint64_t nodes_explored = 0;
  SearchOptions options;
};

/// Exact Turan number by DFS over edges in lexicographic order, include
/// branch first. Freeness is checked incrementally through the newest edge;
/// the pruning floor is fixed up front from verified seed graphs, which keeps
/// explored node counts independent of the worker count.
SearchReport exact_turan(int n, const std::vector<PatternSpec>& forbidden,
                         const SearchOptions& opts = {});

/// Plain recursive reference with a dynamically improving bound. Same value
/// and witness set as exact_turan; kept for cross-checking and benchmarks.
SearchReport exact_turan_serial(int n, const std::vector<PatternSpec>& forbidden,
                                const SearchOptions& opts = {});

std::vector<OrderedGraph> enumerate_extremal(int n, const std::vector<PatternSpec>& forbidden,
                                             const SearchOptions& opts = {});

/// Repeats the edge-replacement pass (largest violating gap first) until
/// every edge's interval is closed under taking sub-edges. Preserves the edge
/// count; the total edge length strictly drops each pass.
OrderedGraph shift_compress(const OrderedGraph& g);

/// An x such that x(x+k) is missing while {x+1..x+k-1} induces a clique.
/// Guaranteed on edge-maximal NonSep-k-free graphs with n >= 2k.
std::optional<int> missing_edge_certificate(const OrderedGraph& g, int k);

/// Largest edge count of a pattern-free graph found greedily along a fixed
/// order; used to seed the search floor. Always a valid lower bound.
int greedy_free_bound(int n, const std::vector<PatternSpec>& forbidden);

}  // namespace ordmatch
