#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordmatch/detect.hpp"

namespace ordmatch {

enum class ValueKind { Exact, Interval, LowerOnly, Conditional, Disputed };

const char* value_kind_name(ValueKind k);

/// An extremal edge count with provenance: exact, an interval, a lower bound,
/// conditional on an unproven range, or disputed between two printed forms.
struct ExtremalValue {
  long long lo = 0;
  long long hi = 0;
  ValueKind kind = ValueKind::Exact;
  std::string provenance;
  std::string note;
};

/// N mod k in [0, k-1].
int residue(long long N, int k);

long long binom2(long long a);

/// Edge count of the complete k-partite graph on n vertices with parts as
/// equal as possible.
long long turan_graph_edges(int n, int k);

/// The two printed closed forms for the non-separated Turan number; they
/// disagree for some residues, so both are exposed.
long long nonsep_value_ceiling_form(int n, int k);
long long nonsep_value_table_form(int n, int k);

/// Extremal edge count for a forbidden pattern set. Supported: each single
/// pattern; {Cross,Sep}; {Nest,Sep}; {Nest,Cross,Sep} (same k throughout).
ExtremalValue extremal_value(const std::vector<PatternSpec>& forbidden, int n);

enum class EdgeLengthBound {
  LongEdgesCrossFree,   // edges of length >= k in a Cross-k-free graph
  ShortEdgesSnnFree,    // edges of length <= k-1 in an SNN-k-free graph
  ShortEdgesSepFree,    // edges of one length l <= k-1 in a Sep-k-free graph
};

long long edge_length_bound(EdgeLengthBound kind, int n, int k,
                            std::optional<int> ell = std::nullopt);

enum class RamseyBoundKind {
  AltUpper,             // 3t + 3
  NonNestLower,         // 3k - 1
  NonNestUpper,         // 4k - 6, unpublished citation
  NonNestConditional,   // floor((2+sqrt(3))k), conditional on the tight lower bound
};

struct RamseyBoundValue {
  long long value = 0;
  std::string flag;  // empty when unconditional and published
};

RamseyBoundValue ramsey_bound(RamseyBoundKind kind, int param);

/// C(2k-1-n1, 2) + C(2k-1-n2, 2): edge counts of the two residual cliques in
/// the non-separated induction split. Monotone under (n1-1, n2+1) shifts.
long long residual_clique_edges(int n1, int n2, int k);

}  // namespace ordmatch
