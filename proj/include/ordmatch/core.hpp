#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordmatch {

enum class ErrorCode {
  EndpointOutOfRange,
  NonNormalizedEdge,
  DuplicateEdge,
  Malformed,
  DegreeTooLarge,
  OutOfRange,
  Invalid,
  UnsupportedSet,
  Unsupported,
  WordLengthMismatch,
  NotApplicable,
  BudgetExceeded,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

const char* error_code_name(ErrorCode c);

/// Edge of an ordered graph, kept normalized: 1 <= u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline int edge_length(Edge e) { return e.v - e.u; }

/// An edge spans gap g (between vertices g and g+1) iff u <= g < v.
inline bool spans_gap(Edge e, int g) { return e.u <= g && g < e.v; }

enum class PairRelation { Shared, Separated, Nested, Crossing };

const char* pair_relation_name(PairRelation r);

/// Relation of two normalized edges. Shared iff they meet in a vertex;
/// otherwise exactly one of Separated/Nested/Crossing holds. Symmetric.
PairRelation classify_pair(Edge a, Edge b);

/// Graph on vertex set {1..n} with a sorted, duplicate-free edge list.
/// Immutable by convention: transforms return new graphs.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  OrderedGraph(int n, std::vector<Edge> edges);  // validates, sorts

  static OrderedGraph empty(int n) { return OrderedGraph(n, {}); }
  static OrderedGraph complete(int n);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  OrderedGraph with_edge(Edge e) const;
  OrderedGraph without_edge(Edge e) const;

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Maps every edge (u,v) to (n+1-v, n+1-u).
OrderedGraph reverse_graph(const OrderedGraph& g);

/// Adds vertex n+1 joined to vertices 1..degree.
OrderedGraph apex_graph(const OrderedGraph& g, int degree);

/// Lexicographic compare of edge lists; used for canonical representatives.
bool edge_list_less(const std::vector<Edge>& a, const std::vector<Edge>& b);

/// Smaller of g and its reversal under edge-list order.
OrderedGraph reverse_canonical(const OrderedGraph& g);

/// xy in E and x <= a < b <= y implies ab in E.
bool is_interval_closed(const OrderedGraph& g);

}  // namespace ordmatch
