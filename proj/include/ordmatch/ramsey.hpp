#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordmatch/detect.hpp"

namespace ordmatch {

/// Red edge set of a total 2-colouring of the complete graph on [n];
/// blue is the complement.
struct TwoColoring {
  int n = 0;
  std::vector<Edge> red;
};

struct RamseyOptions {
  std::uint64_t node_budget = 10'000'000'000ULL;
  int workers = 1;
  bool fix_first_red = true;  // colour-swap symmetry breaking
  int ceiling = 10;           // largest accepted n_max
};

struct RamseyReport {
  PatternSpec target;
  std::optional<int> exact;
  int lower = 2;        // R >= lower
  int upper_checked = 0;
  std::optional<TwoColoring> witness;  // target-free colouring on lower-1 vertices
  bool budget_exhausted = false;
};

/// Exact ordered Ramsey number for NonNest-k matchings or alternating
/// t-paths, by backtracking over colourings in lexicographic edge order (red
/// before blue, first edge fixed red). Scans n upward until every colouring
/// of K_n forces a monochromatic target, or n_max is exhausted.
RamseyReport find_ramsey(PatternSpec target, int n_max, const RamseyOptions& opts = {});

/// Plain serial backtracking; identical reports, kept for cross-checks.
RamseyReport find_ramsey_serial(PatternSpec target, int n_max, const RamseyOptions& opts = {});

/// Edge sets near the two ends of [m] that no alternating 2k-path can use:
/// low holds xy with x+y <= 2k-2, high holds xy with x+y >= 2m-2k+4.
struct BoundaryRecolorSets {
  std::vector<Edge> low;
  std::vector<Edge> high;
};

BoundaryRecolorSets alt_recolor_sets(int m, int k);

/// Edges xy with |x-y| >= n-k+1; no non-nested k-matching can use one.
std::vector<Edge> nonnested_long_edges(int n, int k);

}  // namespace ordmatch
