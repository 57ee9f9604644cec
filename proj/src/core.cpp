#include "ordmatch/core.hpp"

#include <algorithm>

namespace ordmatch {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EndpointOutOfRange: return "ENDPOINT_OUT_OF_RANGE";
    case ErrorCode::NonNormalizedEdge: return "NON_NORMALIZED_EDGE";
    case ErrorCode::DuplicateEdge: return "DUPLICATE_EDGE";
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::DegreeTooLarge: return "DEGREE_TOO_LARGE";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::Invalid: return "INVALID";
    case ErrorCode::UnsupportedSet: return "UNSUPPORTED_SET";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::WordLengthMismatch: return "WORD_LENGTH_MISMATCH";
    case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

const char* pair_relation_name(PairRelation r) {
  switch (r) {
    case PairRelation::Shared: return "SHARED";
    case PairRelation::Separated: return "SEPARATED";
    case PairRelation::Nested: return "NESTED";
    case PairRelation::Crossing: return "CROSSING";
  }
  return "UNKNOWN";
}

PairRelation classify_pair(Edge a, Edge b) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
    return PairRelation::Shared;
  if (a.v < b.u || b.v < a.u) return PairRelation::Separated;
  if ((a.u < b.u && b.v < a.v) || (b.u < a.u && a.v < b.v))
    return PairRelation::Nested;
  return PairRelation::Crossing;
}

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(ErrorCode::Malformed, "negative vertex count");
  for (const Edge& e : edges) {
    if (e.u >= e.v)
      throw Error(ErrorCode::NonNormalizedEdge,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not normalized");
    if (e.u < 1 || e.v > n)
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside [1," +
                      std::to_string(n) + "]");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge");
  edges_ = std::move(edges);
}

OrderedGraph OrderedGraph::complete(int n) {
  std::vector<Edge> es;
  es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) es.push_back({u, v});
  return OrderedGraph(n, std::move(es));
}

bool OrderedGraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

OrderedGraph OrderedGraph::with_edge(Edge e) const {
  std::vector<Edge> es = edges_;
  es.push_back(e);
  return OrderedGraph(n_, std::move(es));
}

OrderedGraph OrderedGraph::without_edge(Edge e) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& f : edges_)
    if (f != e) es.push_back(f);
  return OrderedGraph(n_, std::move(es));
}

OrderedGraph reverse_graph(const OrderedGraph& g) {
  const int n = g.n();
  std::vector<Edge> es;
  es.reserve(g.edges().size());
  for (const Edge& e : g.edges()) es.push_back({n + 1 - e.v, n + 1 - e.u});
  return OrderedGraph(n, std::move(es));
}

OrderedGraph apex_graph(const OrderedGraph& g, int degree) {
  if (degree > g.n())
    throw Error(ErrorCode::DegreeTooLarge, "apex degree exceeds vertex count");
  if (degree < 0) throw Error(ErrorCode::OutOfRange, "negative apex degree");
  std::vector<Edge> es = g.edges();
  for (int i = 1; i <= degree; ++i) es.push_back({i, g.n() + 1});
  return OrderedGraph(g.n() + 1, std::move(es));
}

bool edge_list_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

OrderedGraph reverse_canonical(const OrderedGraph& g) {
  OrderedGraph r = reverse_graph(g);
  return edge_list_less(r.edges(), g.edges()) ? r : g;
}

bool is_interval_closed(const OrderedGraph& g) {
  for (const Edge& e : g.edges())
    for (int a = e.u; a < e.v; ++a)
      for (int b = a + 1; b <= e.v; ++b)
        if (!g.has_edge(a, b)) return false;
  return true;
}

}  // namespace ordmatch
