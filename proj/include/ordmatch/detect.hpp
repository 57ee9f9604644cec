#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordmatch/core.hpp"

namespace ordmatch {

enum class PatternKind {
  Sep,
  Nest,
  Cross,
  NonSep,
  NonNest,
  NonCross,
  StronglyNonNest,  // crossing islands, pairwise separated
  AltPath,          // size = vertex count of the path
  CrossIslandPair,  // at most two crossing islands, pairwise separated
  NestIslandPair,   // at most two nested islands, pairwise separated
};

const char* pattern_kind_name(PatternKind k);
std::optional<PatternKind> parse_pattern_kind(const std::string& s);

struct PatternSpec {
  PatternKind kind;
  int size = 1;  // k, or vertex count t for AltPath
  friend auto operator<=>(const PatternSpec&, const PatternSpec&) = default;
};

struct MatchingWitness {
  std::vector<Edge> edges;                      // sorted
  PatternSpec spec;
  std::vector<std::pair<int, int>> islands;     // index ranges into edges, island kinds only
};

struct PathWitness {
  std::vector<int> vertices;
};

struct MatchResult {
  int size = 0;
  MatchingWitness witness;
};

struct PathResult {
  int length = 0;  // vertex count; 1 for a nonempty graph with no edges
  PathWitness witness;
};

/// True iff every pair of edges in `edges` is vertex-disjoint and satisfies
/// the pairwise predicate of `kind` (for the six pairwise kinds), or the
/// island structure test for the three island kinds.
bool matching_satisfies(PatternKind kind, std::span<const Edge> edges);

/// Incident edges sharing c are nested iff the other endpoints lie on the
/// same side of c; independent edges use the usual strict containment.
bool edges_nested_for_path(Edge a, Edge b);

/// True iff vertices form a path of g in which every pair of edges
/// (incident pairs included) is nested.
bool path_is_alternating(const OrderedGraph& g, std::span<const int> vertices);

/// Maximum matching whose pairs all exhibit `kind`; polynomial for every kind
/// except NonNest (pruned DFS). With cap, stops at cap and returns a witness
/// of the returned size. Uncapped witnesses are the lexicographically least
/// maximum witness for the six pairwise kinds.
MatchResult max_pattern_matching(const OrderedGraph& g, PatternKind kind,
                                 std::optional<int> cap = std::nullopt);

enum class IslandPattern { Cross, Nest };
enum class IslandGroups { Two, Any };

/// Maximum matching decomposable into pairwise-separated islands, each an
/// inner-pattern matching on an interval. Two restricts to at most 2 islands.
MatchResult max_split_pattern(const OrderedGraph& g, IslandPattern inner, IslandGroups groups,
                              std::optional<int> cap = std::nullopt);

PathResult longest_alternating_path(const OrderedGraph& g);

/// Exhaustive oracle: plain DFS over edge subsets (path extension for
/// AltPath), testing the predicate via classify_pair. Exact or throws
/// BUDGET_EXCEEDED; intended for small graphs.
int brute_force_max(const OrderedGraph& g, PatternSpec spec,
                    std::uint64_t node_budget = 50'000'000);

/// One deletion round per step: for every vertex pick the farthest right
/// neighbour (odd rounds) or the farthest left neighbour (even rounds),
/// simultaneously, and delete all picked edges. Returns G_0..G_rounds.
std::vector<OrderedGraph> alternating_peel(const OrderedGraph& g, int rounds);

}  // namespace ordmatch
