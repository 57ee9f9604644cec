#include "ordmatch/detect.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <limits>
#include <map>

namespace ordmatch {

namespace {

constexpr int kRelSep = 1;
constexpr int kRelNest = 2;
constexpr int kRelCross = 4;

// Allowed relations between two matching edges, for the six pairwise kinds.
int allowed_relations(PatternKind kind) {
  switch (kind) {
    case PatternKind::Sep: return kRelSep;
    case PatternKind::Nest: return kRelNest;
    case PatternKind::Cross: return kRelCross;
    case PatternKind::NonSep: return kRelNest | kRelCross;
    case PatternKind::NonNest: return kRelSep | kRelCross;
    case PatternKind::NonCross: return kRelSep | kRelNest;
    default: return 0;
  }
}

int relation_bit(PairRelation r) {
  switch (r) {
    case PairRelation::Separated: return kRelSep;
    case PairRelation::Nested: return kRelNest;
    case PairRelation::Crossing: return kRelCross;
    default: return 0;
  }
}

bool is_pairwise_kind(PatternKind k) { return allowed_relations(k) != 0; }

bool pair_ok(PatternKind kind, Edge a, Edge b) {
  return (relation_bit(classify_pair(a, b)) & allowed_relations(kind)) != 0;
}

// Island structure: no nested pair, and the crossing relation splits the
// matching into cliques (the islands); cross-island pairs are then separated.
bool island_structure_ok(std::span<const Edge> edges, IslandPattern inner,
                         std::optional<int> max_groups) {
  const size_t m = edges.size();
  const PairRelation inner_rel =
      inner == IslandPattern::Cross ? PairRelation::Crossing : PairRelation::Nested;
  // Union by inner relation.
  std::vector<int> comp(m);
  for (size_t i = 0; i < m; ++i) comp[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      PairRelation r = classify_pair(edges[i], edges[j]);
      if (r == PairRelation::Shared) return false;
      if (r == inner_rel) comp[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  // Same component: inner relation required. Different: separated.
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      PairRelation r = classify_pair(edges[i], edges[j]);
      bool same = find(static_cast<int>(i)) == find(static_cast<int>(j));
      if (same && r != inner_rel) return false;
      if (!same && r != PairRelation::Separated) return false;
    }
  if (max_groups) {
    std::vector<int> roots;
    for (size_t i = 0; i < m; ++i) roots.push_back(find(static_cast<int>(i)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (static_cast<int>(roots.size()) > *max_groups) return false;
  }
  return true;
}

// ---- size-only detectors on an explicit edge list ----

int size_separated(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) {
    return std::pair(a.v, a.u) < std::pair(b.v, b.u);
  });
  int count = 0, last_right = 0;
  for (const Edge& e : edges)
    if (e.u > last_right) {
      ++count;
      last_right = e.v;
    }
  return count;
}

int size_nested(std::vector<Edge> edges) {
  // Longest chain under strict containment, O(m^2).
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) {
    return std::pair(a.u, -a.v) < std::pair(b.u, -b.v);
  });
  const int m = static_cast<int>(edges.size());
  std::vector<int> best(m, 1);
  int result = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j)
      if (edges[j].u < edges[i].u && edges[i].v < edges[j].v)
        best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

int size_crossing(int n, const std::vector<Edge>& edges) {
  // Any pairwise-crossing family spans a common gap; per gap, a longest
  // strictly-increasing-in-both-coordinates subsequence.
  int result = edges.empty() ? 0 : 1;
  for (int g = 1; g < n; ++g) {
    std::vector<Edge> span;
    for (const Edge& e : edges)
      if (spans_gap(e, g)) span.push_back(e);
    if (static_cast<int>(span.size()) <= result) continue;
    std::sort(span.begin(), span.end(), [](Edge a, Edge b) {
      return std::pair(a.u, -a.v) < std::pair(b.u, -b.v);
    });
    std::vector<int> tails;  // strict LIS on v
    for (const Edge& e : span) {
      auto it = std::lower_bound(tails.begin(), tails.end(), e.v);
      if (it == tails.end())
        tails.push_back(e.v);
      else
        *it = e.v;
    }
    result = std::max(result, static_cast<int>(tails.size()));
  }
  return result;
}

// Hopcroft-free augmenting-path matching; pairs (left <= g) with (right > g).
struct BipartiteMatcher {
  std::vector<std::vector<int>> adj;
  std::vector<int> match_left, match_right, seen;
  int stamp = 0;

  explicit BipartiteMatcher(int nl, int nr)
      : adj(nl), match_left(nl, -1), match_right(nr, -1), seen(nl, 0) {}

  bool augment(int a) {
    seen[a] = stamp;
    for (int b : adj[a])
      if (match_right[b] == -1) {
        match_left[a] = b;
        match_right[b] = a;
        return true;
      }
    for (int b : adj[a]) {
      int a2 = match_right[b];
      if (seen[a2] != stamp && augment(a2)) {
        match_left[a] = b;
        match_right[b] = a;
        return true;
      }
    }
    return false;
  }

  int solve() {
    int total = 0;
    for (int a = 0; a < static_cast<int>(adj.size()); ++a)
      if (match_left[a] == -1) {
        ++stamp;
        if (augment(a)) ++total;
      }
    return total;
  }
};

int size_nonseparated(int n, const std::vector<Edge>& edges) {
  // Pairwise-intersecting intervals of disjoint edges share a gap; conversely
  // disjoint edges spanning one gap are pairwise non-separated.
  int result = 0;
  for (int g = 1; g < n; ++g) {
    std::vector<Edge> span;
    for (const Edge& e : edges)
      if (spans_gap(e, g)) span.push_back(e);
    if (static_cast<int>(span.size()) <= result) continue;
    BipartiteMatcher bm(g, n - g);
    for (const Edge& e : span) bm.adj[e.u - 1].push_back(e.v - g - 1);
    result = std::max(result, bm.solve());
  }
  return result;
}

int size_noncrossing(int n, const std::vector<Edge>& edges) {
  // f(i,j) = max non-crossing matching among edges inside [i,j].
  std::vector<std::vector<int>> by_left(n + 1);
  for (const Edge& e : edges) by_left[e.u].push_back(e.v);
  std::vector<std::vector<int>> f(n + 2, std::vector<int>(n + 2, 0));
  for (int i = n; i >= 1; --i)
    for (int j = i + 1; j <= n; ++j) {
      int best = f[i + 1][j];
      for (int v : by_left[i])
        if (v <= j) best = std::max(best, 1 + f[i + 1][v - 1] + (v + 1 <= j ? f[v + 1][j] : 0));
      f[i][j] = best;
    }
  return n >= 2 ? f[1][n] : 0;
}

int size_nonnested(int n, const std::vector<Edge>& edges, std::optional<int> cap);

int pattern_size(int n, const std::vector<Edge>& edges, PatternKind kind,
                 std::optional<int> cap) {
  int s;
  switch (kind) {
    case PatternKind::Sep: s = size_separated(edges); break;
    case PatternKind::Nest: s = size_nested(edges); break;
    case PatternKind::Cross: s = size_crossing(n, edges); break;
    case PatternKind::NonSep: s = size_nonseparated(n, edges); break;
    case PatternKind::NonCross: s = size_noncrossing(n, edges); break;
    case PatternKind::NonNest: return size_nonnested(n, edges, cap);
    default: throw Error(ErrorCode::Unsupported, "not a pairwise pattern kind");
  }
  return cap ? std::min(s, *cap) : s;
}

// NonNest needs the used-vertex set: sorted by left endpoint a non-nested
// matching has strictly increasing right endpoints, but right endpoints may
// collide with later left endpoints, e.g. (1,5),(2,6),(5,7).
int size_nonnested(int n, const std::vector<Edge>& edges, std::optional<int> cap) {
  (void)n;
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  const int m = static_cast<int>(sorted.size());
  // chain[i]: upper bound on a doubly-increasing chain starting at i,
  // ignoring vertex disjointness.
  std::vector<int> chain(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) {
    int best = 0;
    for (int j = i + 1; j < m; ++j)
      if (sorted[j].u > sorted[i].u && sorted[j].v > sorted[i].v)
        best = std::max(best, chain[j]);
    chain[i] = 1 + best;
  }
  int best = 0;
  std::vector<Edge> chosen;
  std::function<void(int)> dfs = [&](int from) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (cap && best >= *cap) return;
    for (int i = from; i < m; ++i) {
      if (static_cast<int>(chosen.size()) + chain[i] <= best) continue;
      bool ok = true;
      for (const Edge& e : chosen)
        if (!pair_ok(PatternKind::NonNest, e, sorted[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(sorted[i]);
      dfs(i + 1);
      chosen.pop_back();
      if (cap && best >= *cap) return;
    }
  };
  dfs(0);
  return cap ? std::min(best, *cap) : best;
}

std::vector<Edge> edges_within(const OrderedGraph& g, int lo, int hi) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (lo <= e.u && e.v <= hi) out.push_back(e);
  return out;
}

int island_inner_size(const OrderedGraph& g, IslandPattern inner, int lo, int hi) {
  std::vector<Edge> es = edges_within(g, lo, hi);
  return inner == IslandPattern::Cross ? size_crossing(g.n(), es) : size_nested(es);
}

// Lexicographically least maximum witness for pairwise kinds: grow the sorted
// edge list greedily, re-querying the remaining maximum after each pick.
std::vector<Edge> lexmin_matching_witness(int n, const std::vector<Edge>& all,
                                          PatternKind kind, int target) {
  std::vector<Edge> chosen;
  std::vector<Edge> pool = all;
  std::sort(pool.begin(), pool.end());
  while (static_cast<int>(chosen.size()) < target) {
    bool advanced = false;
    for (size_t idx = 0; idx < pool.size(); ++idx) {
      Edge e = pool[idx];
      if (!chosen.empty() && !(chosen.back() < e)) continue;
      bool compat = true;
      for (const Edge& c : chosen)
        if (!pair_ok(kind, c, e)) {
          compat = false;
          break;
        }
      if (!compat) continue;
      int need = target - static_cast<int>(chosen.size()) - 1;
      std::vector<Edge> rest;
      for (size_t j = idx + 1; j < pool.size(); ++j)
        if (pair_ok(kind, e, pool[j])) rest.push_back(pool[j]);
      if (pattern_size(n, rest, kind, need) >= need) {
        chosen.push_back(e);
        pool = std::move(rest);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // target unreachable; caller passed the true max
  }
  return chosen;
}

}  // namespace

const char* pattern_kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::Sep: return "sep";
    case PatternKind::Nest: return "nest";
    case PatternKind::Cross: return "cross";
    case PatternKind::NonSep: return "nonsep";
    case PatternKind::NonNest: return "nonnest";
    case PatternKind::NonCross: return "noncross";
    case PatternKind::StronglyNonNest: return "snn";
    case PatternKind::AltPath: return "altpath";
    case PatternKind::CrossIslandPair: return "cross-split";
    case PatternKind::NestIslandPair: return "nest-split";
  }
  return "unknown";
}

std::optional<PatternKind> parse_pattern_kind(const std::string& s) {
  static const std::map<std::string, PatternKind> table = {
      {"sep", PatternKind::Sep},
      {"nest", PatternKind::Nest},
      {"cross", PatternKind::Cross},
      {"nonsep", PatternKind::NonSep},
      {"nonnest", PatternKind::NonNest},
      {"noncross", PatternKind::NonCross},
      {"snn", PatternKind::StronglyNonNest},
      {"altpath", PatternKind::AltPath},
      {"cross-split", PatternKind::CrossIslandPair},
      {"nest-split", PatternKind::NestIslandPair},
  };
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool matching_satisfies(PatternKind kind, std::span<const Edge> edges) {
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (classify_pair(edges[i], edges[j]) == PairRelation::Shared) return false;
  switch (kind) {
    case PatternKind::StronglyNonNest:
      return island_structure_ok(edges, IslandPattern::Cross, std::nullopt);
    case PatternKind::CrossIslandPair:
      return island_structure_ok(edges, IslandPattern::Cross, 2);
    case PatternKind::NestIslandPair:
      return island_structure_ok(edges, IslandPattern::Nest, 2);
    case PatternKind::AltPath:
      throw Error(ErrorCode::Unsupported, "AltPath witnesses are paths, not matchings");
    default: break;
  }
  const int allowed = allowed_relations(kind);
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if ((relation_bit(classify_pair(edges[i], edges[j])) & allowed) == 0) return false;
  return true;
}

bool edges_nested_for_path(Edge a, Edge b) {
  if (a == b) return false;
  int shared = 0;
  if (a.u == b.u || a.u == b.v) shared = a.u;
  if (a.v == b.u || a.v == b.v) shared = a.v;
  if (shared != 0) {
    int x = a.u == shared ? a.v : a.u;
    int y = b.u == shared ? b.v : b.u;
    if (x == y) return false;
    return (x < shared) == (y < shared);
  }
  return classify_pair(a, b) == PairRelation::Nested;
}

bool path_is_alternating(const OrderedGraph& g, std::span<const int> vertices) {
  const size_t t = vertices.size();
  std::vector<int> seen;
  for (int v : vertices) {
    if (v < 1 || v > g.n()) return false;
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  std::vector<Edge> path_edges;
  for (size_t i = 0; i + 1 < t; ++i) {
    int a = vertices[i], b = vertices[i + 1];
    Edge e{std::min(a, b), std::max(a, b)};
    if (!g.has_edge(e)) return false;
    path_edges.push_back(e);
  }
  for (size_t i = 0; i < path_edges.size(); ++i)
    for (size_t j = i + 1; j < path_edges.size(); ++j)
      if (!edges_nested_for_path(path_edges[i], path_edges[j])) return false;
  return true;
}

MatchResult max_pattern_matching(const OrderedGraph& g, PatternKind kind,
                                 std::optional<int> cap) {
  if (kind == PatternKind::StronglyNonNest)
    return max_split_pattern(g, IslandPattern::Cross, IslandGroups::Any, cap);
  if (kind == PatternKind::CrossIslandPair)
    return max_split_pattern(g, IslandPattern::Cross, IslandGroups::Two, cap);
  if (kind == PatternKind::NestIslandPair)
    return max_split_pattern(g, IslandPattern::Nest, IslandGroups::Two, cap);
  if (!is_pairwise_kind(kind))
    throw Error(ErrorCode::Unsupported, "kind has no matching detector");

  int size = pattern_size(g.n(), g.edges(), kind, cap);
  MatchResult res;
  res.size = size;
  res.witness.spec = {kind, size};
  res.witness.edges = lexmin_matching_witness(g.n(), g.edges(), kind, size);
  return res;
}

MatchResult max_split_pattern(const OrderedGraph& g, IslandPattern inner, IslandGroups groups,
                              std::optional<int> cap) {
  const int n = g.n();
  MatchResult res;
  PatternKind kind = groups == IslandGroups::Any
                         ? PatternKind::StronglyNonNest
                         : (inner == IslandPattern::Cross ? PatternKind::CrossIslandPair
                                                          : PatternKind::NestIslandPair);

  int best = 0;
  std::vector<int> split_at;  // reconstruction data
  if (groups == IslandGroups::Two) {
    // Island hulls are disjoint intervals, so one gap separates the two.
    std::vector<int> prefix(n + 1, 0), suffix(n + 2, 0);
    for (int j = 1; j <= n; ++j) prefix[j] = island_inner_size(g, inner, 1, j);
    for (int i = n; i >= 1; --i) suffix[i] = island_inner_size(g, inner, i, n);
    best = n >= 1 ? suffix[1] : 0;  // single island
    int best_gap = 0;
    for (int gap = 1; gap < n; ++gap)
      if (prefix[gap] + suffix[gap + 1] > best) {
        best = prefix[gap] + suffix[gap + 1];
        best_gap = gap;
      }
    if (cap) best = std::min(best, *cap);
    res.size = best;
    res.witness.spec = {kind, best};
    // Witness: lex-least inner witnesses on each side of the chosen gap.
    std::vector<Edge> part1, part2;
    PatternKind inner_kind = inner == IslandPattern::Cross ? PatternKind::Cross : PatternKind::Nest;
    if (best_gap == 0) {
      part1 = lexmin_matching_witness(n, g.edges(), inner_kind, best);
    } else {
      int take1 = std::min(prefix[best_gap], best);
      part1 = lexmin_matching_witness(n, edges_within(g, 1, best_gap), inner_kind, take1);
      part2 = lexmin_matching_witness(n, edges_within(g, best_gap + 1, n), inner_kind,
                                      best - static_cast<int>(part1.size()));
    }
    res.witness.edges = part1;
    if (!part1.empty()) res.witness.islands.push_back({0, static_cast<int>(part1.size())});
    for (const Edge& e : part2) res.witness.edges.push_back(e);
    if (!part2.empty())
      res.witness.islands.push_back(
          {static_cast<int>(part1.size()), static_cast<int>(res.witness.edges.size())});
    std::sort(res.witness.edges.begin(), res.witness.edges.end());
    return res;
  }

  // Any number of islands: DP over the rightmost island's interval.
  std::vector<std::vector<int>> inner_best(n + 2, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      inner_best[i][j] = island_inner_size(g, inner, i, j);
  std::vector<int> f(n + 1, 0);
  std::vector<std::pair<int, int>> choice(n + 1, {0, 0});  // (island start, island value)
  for (int j = 1; j <= n; ++j) {
    f[j] = f[j - 1];
    choice[j] = {0, 0};
    for (int i = 1; i < j; ++i) {
      int cand = (i >= 2 ? f[i - 1] : 0) + inner_best[i][j];
      if (cand > f[j]) {
        f[j] = cand;
        choice[j] = {i, inner_best[i][j]};
      }
    }
  }
  best = f[n];
  if (cap) best = std::min(best, *cap);
  res.size = best;
  res.witness.spec = {kind, best};
  // Reconstruct islands right to left, then emit sorted.
  PatternKind inner_kind = inner == IslandPattern::Cross ? PatternKind::Cross : PatternKind::Nest;
  std::vector<std::vector<Edge>> groups_edges;
  int j = n, remaining = best;
  while (j >= 1 && remaining > 0) {
    if (choice[j].first == 0) {
      --j;
      continue;
    }
    int i = choice[j].first;
    int take = std::min(choice[j].second, remaining);
    groups_edges.push_back(lexmin_matching_witness(n, edges_within(g, i, j), inner_kind, take));
    remaining -= take;
    j = i - 1;
  }
  std::reverse(groups_edges.begin(), groups_edges.end());
  for (const auto& part : groups_edges) {
    int start = static_cast<int>(res.witness.edges.size());
    for (const Edge& e : part) res.witness.edges.push_back(e);
    if (!part.empty()) res.witness.islands.push_back({start, static_cast<int>(res.witness.edges.size())});
  }
  std::sort(res.witness.edges.begin(), res.witness.edges.end());
  return res;
}

namespace {

// Converging zigzag table: f[p][l] = longest alternating path whose first two
// vertices are p,l (vertex count). Every alternating path converges in one of
// its two orientations.
struct ZigzagTables {
  int n;
  std::vector<int> conv;  // (p-1)*n + (l-1)
  std::vector<int> div;

  int& c(int p, int l) { return conv[(p - 1) * n + (l - 1)]; }
  int& d(int p, int l) { return div[(p - 1) * n + (l - 1)]; }
};

ZigzagTables build_zigzag(const OrderedGraph& g) {
  const int n = g.n();
  ZigzagTables t{n, std::vector<int>(static_cast<size_t>(n) * n, 0),
                 std::vector<int>(static_cast<size_t>(n) * n, 0)};
  std::vector<std::vector<int>> adj(n + 1);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // Interval width of (p,l) only shrinks along converging transitions.
  std::vector<std::pair<int, std::pair<int, int>>> states;
  for (const Edge& e : g.edges()) {
    states.push_back({e.v - e.u, {e.u, e.v}});
    states.push_back({e.v - e.u, {e.v, e.u}});
  }
  std::sort(states.begin(), states.end());
  for (auto& [w, pl] : states) {
    auto [p, l] = pl;
    int best = 2;
    int lo = std::min(p, l), hi = std::max(p, l);
    for (int next : adj[l])
      if (lo < next && next < hi) best = std::max(best, 1 + t.c(l, next));
    t.c(p, l) = best;
  }
  // Diverging: next vertex w with p strictly between l and w.
  std::sort(states.begin(), states.end(), [](auto& a, auto& b) { return a.first > b.first; });
  for (auto& [w, pl] : states) {
    auto [p, l] = pl;
    int best = 2;
    for (int next : adj[l])
      if ((next < p && p < l) || (l < p && p < next)) best = std::max(best, 1 + t.d(l, next));
    t.d(p, l) = best;
  }
  return t;
}

}  // namespace

PathResult longest_alternating_path(const OrderedGraph& g) {
  PathResult res;
  if (g.n() == 0) return res;
  if (g.edge_count() == 0) {
    res.length = 1;
    res.witness.vertices = {1};
    return res;
  }
  ZigzagTables t = build_zigzag(g);
  int best = 2;
  for (const Edge& e : g.edges()) {
    best = std::max({best, t.c(e.u, e.v), t.c(e.v, e.u)});
  }
  res.length = best;

  // Lexicographically least witness sequence over both orientations: advance
  // all optimal state machines in lockstep, always taking the least vertex.
  struct Machine {
    bool diverging;
    int prev, last;
  };
  std::vector<std::vector<int>> adj(g.n() + 1);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Machine> machines;
  int first = std::numeric_limits<int>::max();
  for (const Edge& e : g.edges())
    for (auto [p, l] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (t.c(p, l) == best) {
        machines.push_back({false, p, l});
        first = std::min(first, p);
      }
      if (t.d(p, l) == best) {
        machines.push_back({true, p, l});
        first = std::min(first, p);
      }
    }
  std::vector<int> seq = {first};
  std::erase_if(machines, [&](const Machine& m) { return m.prev != first; });
  {
    int second = std::numeric_limits<int>::max();
    for (const Machine& m : machines) second = std::min(second, m.last);
    seq.push_back(second);
    std::erase_if(machines, [&](const Machine& m) { return m.last != second; });
  }
  int remaining = best - 2;
  while (remaining > 0) {
    int next = std::numeric_limits<int>::max();
    for (const Machine& m : machines) {
      int lo = std::min(m.prev, m.last), hi = std::max(m.prev, m.last);
      for (int w : adj[m.last]) {
        bool ok = m.diverging ? ((w < m.prev && m.prev < m.last) || (m.last < m.prev && m.prev < w))
                              : (lo < w && w < hi);
        if (!ok) continue;
        int val = m.diverging ? t.d(m.last, w) : t.c(m.last, w);
        if (val >= remaining + 1) next = std::min(next, w);
      }
    }
    std::vector<Machine> advanced;
    for (const Machine& m : machines) {
      int lo = std::min(m.prev, m.last), hi = std::max(m.prev, m.last);
      bool ok = m.diverging
                    ? ((next < m.prev && m.prev < m.last) || (m.last < m.prev && m.prev < next))
                    : (lo < next && next < hi);
      if (!ok || !g.has_edge(std::min(m.last, next), std::max(m.last, next))) continue;
      int val = m.diverging ? t.d(m.last, next) : t.c(m.last, next);
      if (val >= remaining + 1) advanced.push_back({m.diverging, m.last, next});
    }
    machines = std::move(advanced);
    seq.push_back(next);
    --remaining;
  }
  res.witness.vertices = seq;
  return res;
}

namespace {

struct BruteState {
  std::uint64_t nodes = 0;
  std::uint64_t budget;
};

void check_budget(BruteState& st) {
  if (++st.nodes > st.budget)
    throw Error(ErrorCode::BudgetExceeded, "brute force node budget exhausted");
}

int brute_matching(const OrderedGraph& g, PatternKind kind, BruteState& st) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> chosen;
  int best = 0;
  std::function<void(int)> dfs = [&](int from) {
    check_budget(st);
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int i = from; i < m; ++i) {
      chosen.push_back(edges[i]);
      if (matching_satisfies(kind, chosen)) dfs(i + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return best;
}

int brute_alt_path(const OrderedGraph& g, BruteState& st) {
  if (g.n() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<std::vector<int>> adj(g.n() + 1);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int best = 1;
  std::vector<int> seq;
  std::function<void()> extend = [&]() {
    check_budget(st);
    best = std::max(best, static_cast<int>(seq.size()));
    int last = seq.back();
    for (int w : adj[last]) {
      if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
      seq.push_back(w);
      if (path_is_alternating(g, seq)) extend();
      seq.pop_back();
    }
  };
  for (int v = 1; v <= g.n(); ++v) {
    seq = {v};
    extend();
  }
  return best;
}

}  // namespace

int brute_force_max(const OrderedGraph& g, PatternSpec spec, std::uint64_t node_budget) {
  BruteState st{0, node_budget};
  if (spec.kind == PatternKind::AltPath) return brute_alt_path(g, st);
  return brute_matching(g, spec.kind, st);
}

std::vector<OrderedGraph> alternating_peel(const OrderedGraph& g, int rounds) {
  if (rounds < 0) throw Error(ErrorCode::OutOfRange, "negative round count");
  std::vector<OrderedGraph> out = {g};
  OrderedGraph cur = g;
  for (int i = 0; i < rounds; ++i) {
    std::vector<std::vector<int>> adj(cur.n() + 1);
    for (const Edge& e : cur.edges()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<Edge> doomed;
    for (int v = 1; v <= cur.n(); ++v) {
      int pick = 0;
      for (int w : adj[v]) {
        if (i % 2 == 1) {  // odd rounds look right, as far as possible
          if (w > v && (pick == 0 || w > pick)) pick = w;
        } else {  // even rounds look left, as far as possible
          if (w < v && (pick == 0 || w < pick)) pick = w;
        }
      }
      if (pick != 0) doomed.push_back({std::min(v, pick), std::max(v, pick)});
    }
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
    std::vector<Edge> kept;
    for (const Edge& e : cur.edges())
      if (!std::binary_search(doomed.begin(), doomed.end(), e)) kept.push_back(e);
    cur = OrderedGraph(cur.n(), std::move(kept));
    out.push_back(cur);
  }
  return out;
}

}  // namespace ordmatch
