#include "ordmatch/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>

#include "ordmatch/construct.hpp"
#include "ordmatch/formulas.hpp"

namespace ordmatch {

namespace {

constexpr int kMaxSearchN = 11;  // C(11,2) = 55 edge indices fit a word

using Mask = std::uint64_t;

int popcount(Mask m) { return std::popcount(m); }

struct EdgeUniverse {
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;  // lexicographic

  explicit EdgeUniverse(int n_) : n(n_) {
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        edges.push_back({u, v});
        ++m;
      }
  }

  Mask suffix_from(int i) const { return m == 64 ? ~0ULL << i : ((1ULL << m) - 1) & (~0ULL << i); }
};

OrderedGraph mask_to_graph(const EdgeUniverse& uni, Mask s) {
  std::vector<Edge> es;
  for (Mask t = s; t; t &= t - 1) es.push_back(uni.edges[std::countr_zero(t)]);
  return OrderedGraph(uni.n, std::move(es));
}

// Vertex adjacency bitmaps for the current edge set; bit v set in adj[u].
struct AdjState {
  std::array<std::uint16_t, kMaxSearchN + 1> adj{};

  void flip(Edge e) {
    adj[e.u] ^= static_cast<std::uint16_t>(1u << e.v);
    adj[e.v] ^= static_cast<std::uint16_t>(1u << e.u);
  }
  bool has(int u, int v) const { return adj[u] >> v & 1; }
};

// ---- incremental pattern checkers ----

// k pairwise vertex-disjoint edges, every pair in the forbidden relation.
struct PairwiseChecker {
  int k;
  std::vector<Mask> pat;  // pat[j]: disjoint partners in the forbidden relation

  PairwiseChecker(const EdgeUniverse& uni, PatternKind kind, int k_) : k(k_), pat(uni.m, 0) {
    for (int i = 0; i < uni.m; ++i)
      for (int j = i + 1; j < uni.m; ++j) {
        PairRelation r = classify_pair(uni.edges[i], uni.edges[j]);
        bool bad = false;
        switch (kind) {
          case PatternKind::Sep: bad = r == PairRelation::Separated; break;
          case PatternKind::Nest: bad = r == PairRelation::Nested; break;
          case PatternKind::Cross: bad = r == PairRelation::Crossing; break;
          case PatternKind::NonSep:
            bad = r == PairRelation::Nested || r == PairRelation::Crossing;
            break;
          case PatternKind::NonNest:
            bad = r == PairRelation::Separated || r == PairRelation::Crossing;
            break;
          case PatternKind::NonCross:
            bad = r == PairRelation::Separated || r == PairRelation::Nested;
            break;
          default: break;
        }
        if (bad) {
          pat[i] |= 1ULL << j;
          pat[j] |= 1ULL << i;
        }
      }
  }

  bool clique_exists(Mask cand, int need) const {
    if (need == 0) return true;
    while (cand) {
      if (popcount(cand) < need) return false;
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      if (clique_exists(cand & pat[b], need - 1)) return true;
    }
    return false;
  }

  // s must already be pattern-free.
  bool creates(Mask s, int j) const { return clique_exists(s & pat[j], k - 1); }
};

// Alternating path on t vertices.
struct AltPathChecker {
  int t;
  int n;

  bool creates(const AdjState& adj, Edge e, int /*j*/) const {
    AdjState tmp = adj;
    tmp.flip(e);  // include
    bool found = t <= 4 ? contains_small(tmp) : contains_general(tmp);
    return found;
  }

  static std::uint16_t bits_below(int v) {  // vertices 1..v-1
    return static_cast<std::uint16_t>(((1u << v) - 1) & ~1u);
  }
  static std::uint16_t bits_above(int v) {  // vertices v+1..
    return static_cast<std::uint16_t>(~((1u << (v + 1)) - 1));
  }

  bool contains_small(const AdjState& a) const {
    // t == 2: any edge; t == 3: two edges sharing c with the other ends on one
    // side; t == 4: the two zigzag shapes on a<b<c<d.
    if (t == 2) {
      for (int v = 1; v <= n; ++v)
        if (a.adj[v]) return true;
      return false;
    }
    if (t == 3) {
      for (int c = 1; c <= n; ++c)
        if (popcount(a.adj[c] & bits_below(c)) >= 2 ||
            popcount(a.adj[c] & bits_above(c)) >= 2)
          return true;
      return false;
    }
    // shape A: (a,d),(b,d),(b,c); shape B: (a,d),(a,c),(b,c); a<b<c<d
    for (int b = 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (!a.has(b, c)) continue;
        for (std::uint16_t ds = a.adj[b] & bits_above(c); ds; ds &= ds - 1) {
          int d = std::countr_zero(ds);
          if (a.adj[d] & bits_below(b)) return true;
        }
        for (std::uint16_t as = a.adj[c] & bits_below(b); as; as &= as - 1) {
          int aa = std::countr_zero(as);
          if (a.adj[aa] & bits_above(c)) return true;
        }
      }
    return false;
  }

  bool contains_general(const AdjState& a) const {
    // converging zigzag DP over ordered pairs, narrow intervals first
    std::array<std::array<std::uint8_t, kMaxSearchN + 1>, kMaxSearchN + 1> f{};
    std::vector<std::pair<int, std::pair<int, int>>> states;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (u != v && a.has(std::min(u, v), std::max(u, v)))
          states.push_back({std::abs(u - v), {u, v}});
    std::sort(states.begin(), states.end());
    int best = states.empty() ? 1 : 2;
    for (auto& [w, pl] : states) {
      auto [p, l] = pl;
      int lo = std::min(p, l), hi = std::max(p, l);
      int val = 2;
      for (int next = lo + 1; next < hi; ++next)
        if (next != l && a.has(std::min(l, next), std::max(l, next)))
          val = std::max(val, 1 + f[l][next]);
      f[p][l] = static_cast<std::uint8_t>(val);
      best = std::max(best, val);
      if (best >= t) return true;
    }
    return best >= t;
  }
};

// Split patterns fall back to the full detector on the materialized graph.
struct IslandChecker {
  IslandPattern inner;
  IslandGroups groups;
  int k;

  bool creates(const EdgeUniverse& uni, Mask s, int j) const {
    OrderedGraph g = mask_to_graph(uni, s | (1ULL << j));
    return max_split_pattern(g, inner, groups, k).size >= k;
  }
};

struct CheckerSet {
  const EdgeUniverse* uni;
  std::vector<PairwiseChecker> pairwise;
  std::vector<AltPathChecker> alt;
  std::vector<IslandChecker> island;

  CheckerSet(const EdgeUniverse& u, const std::vector<PatternSpec>& forbidden) : uni(&u) {
    for (const PatternSpec& p : forbidden) {
      if (p.size < 1) throw Error(ErrorCode::OutOfRange, "pattern size must be positive");
      switch (p.kind) {
        case PatternKind::Sep:
        case PatternKind::Nest:
        case PatternKind::Cross:
        case PatternKind::NonSep:
        case PatternKind::NonNest:
        case PatternKind::NonCross:
          pairwise.emplace_back(u, p.kind, p.size);
          break;
        case PatternKind::AltPath:
          if (p.size < 2) throw Error(ErrorCode::OutOfRange, "path target needs t >= 2");
          alt.push_back({p.size, u.n});
          break;
        case PatternKind::StronglyNonNest:
          island.push_back({IslandPattern::Cross, IslandGroups::Any, p.size});
          break;
        case PatternKind::CrossIslandPair:
          island.push_back({IslandPattern::Cross, IslandGroups::Two, p.size});
          break;
        case PatternKind::NestIslandPair:
          island.push_back({IslandPattern::Nest, IslandGroups::Two, p.size});
          break;
      }
    }
  }

  bool creates(Mask s, const AdjState& adj, int j) const {
    for (const auto& c : pairwise)
      if (c.creates(s, j)) return true;
    for (const auto& c : alt)
      if (c.creates(adj, uni->edges[j], j)) return true;
    for (const auto& c : island)
      if (c.creates(*uni, s, j)) return true;
    return false;
  }

  // Tightens cand after including edge i into s_new: pairwise checkers only
  // recheck interacting candidates; alt checkers recheck everything cheap;
  // island checkers are left lazy (cand stays a superset).
  Mask refine(Mask s_new, const AdjState& adj_new, int i, Mask cand) const {
    cand &= ~(1ULL << i);
    for (const auto& c : pairwise) {
      Mask affected = cand & c.pat[i];
      if (c.k == 2) {
        cand &= ~affected;
        continue;
      }
      for (Mask t = affected; t; t &= t - 1) {
        int j = std::countr_zero(t);
        if (c.clique_exists(s_new & c.pat[i] & c.pat[j], c.k - 2)) cand &= ~(1ULL << j);
      }
    }
    for (const auto& c : alt)
      for (Mask t = cand; t; t &= t - 1) {
        int j = std::countr_zero(t);
        if (c.creates(adj_new, uni->edges[j], j)) cand &= ~(1ULL << j);
      }
    return cand;
  }

  bool lazy() const { return !island.empty(); }
};

// ---- the DFS core ----

struct TaskResult {
  int best = -1;
  std::vector<Mask> witnesses;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

struct ShiftMasks {
  std::vector<Mask> super_of;  // strict interval supersets
  std::vector<Mask> sub_of;    // strict interval subsets
};

struct DfsNode {
  int i;
  Mask s;
  Mask x;
  Mask cand;
  int count;
};

struct SearchCore {
  const EdgeUniverse& uni;
  const CheckerSet& checkers;
  int floor_bound;  // fixed lower bound; never decreases pruning soundness
  const ShiftMasks* shift;
  std::uint64_t budget;
  std::atomic<std::uint64_t>* global_nodes;

  // Explores the subtree serially, collecting optima at the local best.
  void run(DfsNode root, TaskResult& res) const {
    AdjState adj{};
    for (Mask t = root.s; t; t &= t - 1) adj.flip(uni.edges[std::countr_zero(t)]);
    res.best = std::max(res.best, floor_bound);
    dfs(root.i, root.s, root.x, root.cand, root.count, adj, res);
  }

  void dfs(int i, Mask s, Mask x, Mask cand, int count, AdjState& adj, TaskResult& res) const {
    if (res.aborted) return;
    if (++res.nodes % 2048 == 0) {
      std::uint64_t total = global_nodes->fetch_add(2048, std::memory_order_relaxed) + 2048;
      if (total > budget) {
        res.aborted = true;
        return;
      }
    }
    int possible = count + popcount(cand & uni.suffix_from(i));
    int bar = std::max(floor_bound, res.best);
    if (possible < bar) return;
    if (i == uni.m) {
      if (count > res.best) {
        res.best = count;
        res.witnesses.clear();
      }
      if (count == res.best) res.witnesses.push_back(s);
      return;
    }
    bool forced_in = false, forced_out = false;
    if (shift) {
      forced_in = (s & shift->super_of[i]) != 0;
      forced_out = (x & shift->sub_of[i]) != 0;
      if (forced_in && forced_out) return;
    }
    bool can_include = (cand >> i & 1) != 0;
    if (can_include && checkers.lazy()) can_include = !checkers.creates(s, adj, i);
    if (forced_in && !can_include) return;

    if (can_include && !forced_out) {
      Mask s2 = s | (1ULL << i);
      adj.flip(uni.edges[i]);
      Mask cand2 = checkers.refine(s2, adj, i, cand);
      dfs(i + 1, s2, x, cand2, count + 1, adj, res);
      adj.flip(uni.edges[i]);
    }
    if (!forced_in) dfs(i + 1, s, x | (1ULL << i), cand & ~(1ULL << i), count, adj, res);
  }

  // Collects the frontier at depth `depth`; shallower leaves are resolved
  // in place so the frontier fully covers the remaining work.
  void frontier(int depth, TaskResult& res, std::vector<DfsNode>& out) const {
    AdjState adj{};
    Mask cand0 = initial_cand();
    expand(0, 0, 0, cand0, 0, adj, depth, res, out);
  }

  Mask initial_cand() const {
    Mask cand = uni.suffix_from(0);
    AdjState adj{};
    for (Mask t = cand; t; t &= t - 1) {
      int j = std::countr_zero(t);
      if (checkers.creates(0, adj, j)) cand &= ~(1ULL << j);
    }
    return cand;
  }

  void expand(int i, Mask s, Mask x, Mask cand, int count, AdjState& adj, int depth,
              TaskResult& res, std::vector<DfsNode>& out) const {
    if (i == depth) {
      out.push_back({i, s, x, cand, count});
      return;
    }
    ++res.nodes;
    int possible = count + popcount(cand & uni.suffix_from(i));
    int bar = std::max(floor_bound, res.best);
    if (possible < bar) return;
    if (i == uni.m) {
      if (count > res.best) {
        res.best = count;
        res.witnesses.clear();
      }
      if (count == res.best) res.witnesses.push_back(s);
      return;
    }
    bool forced_in = false, forced_out = false;
    if (shift) {
      forced_in = (s & shift->super_of[i]) != 0;
      forced_out = (x & shift->sub_of[i]) != 0;
      if (forced_in && forced_out) return;
    }
    bool can_include = (cand >> i & 1) != 0;
    if (can_include && checkers.lazy()) can_include = !checkers.creates(s, adj, i);
    if (forced_in && !can_include) return;
    if (can_include && !forced_out) {
      Mask s2 = s | (1ULL << i);
      adj.flip(uni.edges[i]);
      Mask cand2 = checkers.refine(s2, adj, i, cand);
      expand(i + 1, s2, x, cand2, count + 1, adj, depth, res, out);
      adj.flip(uni.edges[i]);
    }
    if (!forced_in)
      expand(i + 1, s, x | (1ULL << i), cand & ~(1ULL << i), count, adj, depth, res, out);
  }
};

// Frontier expansion must not prune against an improving best, or the node
// counts of the parallel phase would depend on find order. The expand pass
// above therefore runs before any task and uses only the fixed floor; its
// incidental leaf finds are merged like task results.

ShiftMasks build_shift_masks(const EdgeUniverse& uni) {
  ShiftMasks sm;
  sm.super_of.assign(uni.m, 0);
  sm.sub_of.assign(uni.m, 0);
  for (int i = 0; i < uni.m; ++i)
    for (int j = 0; j < uni.m; ++j) {
      if (i == j) continue;
      Edge a = uni.edges[i], b = uni.edges[j];
      if (b.u <= a.u && a.v <= b.v) sm.super_of[i] |= 1ULL << j;
      if (a.u <= b.u && b.v <= a.v) sm.sub_of[i] |= 1ULL << j;
    }
  return sm;
}

// ---- seeding ----

bool graph_is_free(const OrderedGraph& g, const std::vector<PatternSpec>& forbidden) {
  for (const PatternSpec& p : forbidden) {
    if (p.kind == PatternKind::AltPath) {
      if (longest_alternating_path(g).length >= p.size) return false;
    } else {
      if (max_pattern_matching(g, p.kind, p.size).size >= p.size) return false;
    }
  }
  return true;
}

std::vector<OrderedGraph> construction_seeds(int n, const std::vector<PatternSpec>& forbidden) {
  std::vector<OrderedGraph> out;
  auto add = [&](auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const Error&) {
    }
  };
  std::vector<PatternSpec> f = forbidden;
  std::sort(f.begin(), f.end());
  if (f.size() == 1) {
    const auto [kind, k] = f[0];
    switch (kind) {
      case PatternKind::Sep:
        add([&] { return extremal_construction(ExtremalFamily::Separated, n, k); });
        break;
      case PatternKind::Nest:
        add([&] { return extremal_construction(ExtremalFamily::NestedAlt, n, k); });
        break;
      case PatternKind::Cross:
        // short edges cannot join a crossing k-matching; the rest meet [k-1]
        add([&] {
          std::vector<Edge> es;
          for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
              if (u <= k - 1 || v - u <= k - 1) es.push_back({u, v});
          return OrderedGraph(n, std::move(es));
        });
        break;
      case PatternKind::NonSep:
        add([&] { return extremal_construction(ExtremalFamily::NonSeparated, n, k); });
        break;
      case PatternKind::NonNest:
      case PatternKind::StronglyNonNest:
        add([&] {
          return apex_chain_construction(std::string(std::max(0, n - (2 * k - 1)), '1'), n, k);
        });
        add([&] { return hub_long_construction(n, k); });
        break;
      case PatternKind::NonCross:
        // hub vertices [k-1] plus the top-right corner wedge
        add([&] {
          std::vector<Edge> es;
          for (int u = 1; u <= k - 1; ++u)
            for (int v = u + 1; v <= n; ++v) es.push_back({u, v});
          for (int dx = 0; dx <= k - 2; ++dx)
            for (int dy = 0; dx + dy <= k - 2; ++dy) {
              int u = k + dx, v = n - dy;
              if (u < v) es.push_back({u, v});
            }
          std::sort(es.begin(), es.end());
          es.erase(std::unique(es.begin(), es.end()), es.end());
          return OrderedGraph(n, std::move(es));
        });
        break;
      case PatternKind::AltPath:
        add([&] { return extremal_construction(ExtremalFamily::NestedAlt, n, k / 2); });
        break;
      case PatternKind::CrossIslandPair:
        add([&] { return cross_island_free_construction(n, k); });
        break;
      case PatternKind::NestIslandPair:
        break;
    }
  } else if (f.size() == 2 && f[0].kind == PatternKind::Sep && f[1].kind == PatternKind::Cross &&
             f[0].size == f[1].size) {
    add([&] { return extremal_construction(ExtremalFamily::CrossSep, n, f[0].size); });
  } else if (f.size() == 2 && f[0].kind == PatternKind::Sep && f[1].kind == PatternKind::Nest &&
             f[0].size == f[1].size) {
    add([&] { return extremal_construction(ExtremalFamily::NestSep, n, f[0].size); });
  } else if (f.size() == 3 && f[0].kind == PatternKind::Sep && f[1].kind == PatternKind::Nest &&
             f[2].kind == PatternKind::Cross) {
    add([&] { return extremal_construction(ExtremalFamily::NestCrossSep, n, f[0].size); });
  }
  return out;
}

int greedy_bound_impl(const EdgeUniverse& uni, const CheckerSet& checkers,
                      const std::vector<int>& order) {
  Mask s = 0;
  AdjState adj{};
  int count = 0;
  for (int j : order) {
    if (!checkers.creates(s, adj, j)) {
      s |= 1ULL << j;
      adj.flip(uni.edges[j]);
      ++count;
    }
  }
  return count;
}

int best_greedy_bound(const EdgeUniverse& uni, const CheckerSet& checkers) {
  std::vector<int> order(uni.m);
  for (int i = 0; i < uni.m; ++i) order[i] = i;
  int best = greedy_bound_impl(uni, checkers, order);
  std::reverse(order.begin(), order.end());
  best = std::max(best, greedy_bound_impl(uni, checkers, order));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return edge_length(uni.edges[a]) < edge_length(uni.edges[b]);
  });
  best = std::max(best, greedy_bound_impl(uni, checkers, order));
  std::reverse(order.begin(), order.end());
  best = std::max(best, greedy_bound_impl(uni, checkers, order));
  return best;
}

SearchReport finalize(const EdgeUniverse& uni, const std::vector<PatternSpec>& forbidden,
                      const SearchOptions& opts, int value,
                      const std::vector<Mask>& witness_masks, std::uint64_t nodes, bool exact) {
  SearchReport rep;
  rep.n = uni.n;
  rep.forbidden = forbidden;
  rep.value = value;
  rep.exact = exact;
  rep.nodes_explored = nodes;
  rep.options = opts;
  std::vector<OrderedGraph> ws;
  for (Mask s : witness_masks) ws.push_back(reverse_canonical(mask_to_graph(uni, s)));
  std::sort(ws.begin(), ws.end(),
            [](const OrderedGraph& a, const OrderedGraph& b) {
              return edge_list_less(a.edges(), b.edges());
            });
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  rep.witnesses = std::move(ws);
  return rep;
}

void validate_search_args(int n, const std::vector<PatternSpec>& forbidden,
                          const SearchOptions& opts) {
  if (forbidden.empty()) throw Error(ErrorCode::UnsupportedSet, "empty forbidden set");
  if (n < 1 || n > opts.ceiling || n > kMaxSearchN)
    throw Error(ErrorCode::OutOfRange, "n exceeds the search ceiling");
  if (opts.node_budget == 0) throw Error(ErrorCode::Invalid, "budget must be positive");
  if (opts.shift_pruning &&
      (forbidden.size() != 1 || forbidden[0].kind != PatternKind::NonSep))
    throw Error(ErrorCode::Unsupported,
                "interval-closure pruning is proven only for a single non-separated pattern");
}

int fixed_floor(const EdgeUniverse& uni, const CheckerSet& checkers,
                const std::vector<PatternSpec>& forbidden, const SearchOptions& opts) {
  int floor_bound = 0;
  for (const OrderedGraph& g : construction_seeds(uni.n, forbidden))
    if (g.n() == uni.n && graph_is_free(g, forbidden))
      floor_bound = std::max(floor_bound, g.edge_count());
  floor_bound = std::max(floor_bound, best_greedy_bound(uni, checkers));
  if (opts.seed_lower_bound) floor_bound = std::max(floor_bound, *opts.seed_lower_bound);
  return floor_bound;
}

}  // namespace

int greedy_free_bound(int n, const std::vector<PatternSpec>& forbidden) {
  EdgeUniverse uni(n);
  CheckerSet checkers(uni, forbidden);
  return best_greedy_bound(uni, checkers);
}

SearchReport exact_turan(int n, const std::vector<PatternSpec>& forbidden,
                         const SearchOptions& opts) {
  validate_search_args(n, forbidden, opts);
  EdgeUniverse uni(n);
  CheckerSet checkers(uni, forbidden);
  ShiftMasks shift_masks;
  if (opts.shift_pruning) shift_masks = build_shift_masks(uni);

  const int floor_bound = fixed_floor(uni, checkers, forbidden, opts);
  std::atomic<std::uint64_t> global_nodes{0};
  SearchCore core{uni, checkers, floor_bound, opts.shift_pruning ? &shift_masks : nullptr,
                  opts.node_budget, &global_nodes};

  const int depth = std::min(uni.m, 12);
  TaskResult prefix_result;
  std::vector<DfsNode> frontier;
  core.frontier(depth, prefix_result, frontier);

  std::vector<TaskResult> results(frontier.size());
  const int workers = std::max(1, opts.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(frontier.size()); ++idx) {
    core.run(frontier[idx], results[idx]);
  }

  int value = std::max(prefix_result.best, 0);
  bool aborted = prefix_result.aborted;
  std::uint64_t nodes = prefix_result.nodes;
  for (const TaskResult& r : results) {
    value = std::max(value, r.best);
    nodes += r.nodes;
    aborted = aborted || r.aborted;
  }
  // a finished run that still overran the allowance reports a lower bound
  aborted = aborted || nodes > opts.node_budget;
  std::vector<Mask> winners;
  if (prefix_result.best == value)
    winners.insert(winners.end(), prefix_result.witnesses.begin(), prefix_result.witnesses.end());
  for (const TaskResult& r : results)
    if (r.best == value) winners.insert(winners.end(), r.witnesses.begin(), r.witnesses.end());

  if (winners.empty() && !aborted) {
    // Over-trusted caller floor: redo without it rather than report garbage.
    SearchOptions retry = opts;
    retry.seed_lower_bound.reset();
    if (opts.seed_lower_bound) return exact_turan(n, forbidden, retry);
    throw Error(ErrorCode::Invalid, "search floor exceeded the true maximum");
  }
  return finalize(uni, forbidden, opts, value, winners, nodes, !aborted);
}

SearchReport exact_turan_serial(int n, const std::vector<PatternSpec>& forbidden,
                                const SearchOptions& opts) {
  validate_search_args(n, forbidden, opts);
  EdgeUniverse uni(n);
  CheckerSet checkers(uni, forbidden);
  ShiftMasks shift_masks;
  if (opts.shift_pruning) shift_masks = build_shift_masks(uni);
  std::atomic<std::uint64_t> global_nodes{0};
  SearchCore core{uni, checkers, 0, opts.shift_pruning ? &shift_masks : nullptr,
                  opts.node_budget, &global_nodes};
  TaskResult res;
  core.run({0, 0, 0, core.initial_cand(), 0}, res);
  bool aborted = res.aborted || res.nodes > opts.node_budget;
  return finalize(uni, forbidden, opts, std::max(res.best, 0), res.witnesses, res.nodes,
                  !aborted);
}

std::vector<OrderedGraph> enumerate_extremal(int n, const std::vector<PatternSpec>& forbidden,
                                             const SearchOptions& opts) {
  return exact_turan(n, forbidden, opts).witnesses;
}

OrderedGraph shift_compress(const OrderedGraph& g) {
  OrderedGraph cur = g;
  for (;;) {
    // largest violating missing sub-edge, lexicographically least on ties
    int best_len = 0;
    Edge target{0, 0};
    for (const Edge& e : cur.edges())
      for (int a = e.u; a < e.v; ++a)
        for (int b = a + 1; b <= e.v; ++b) {
          if (cur.has_edge(a, b)) continue;
          int len = b - a;
          if (len > best_len || (len == best_len && Edge{a, b} < target)) {
            best_len = len;
            target = {a, b};
          }
        }
    if (best_len == 0) break;
    const int a = target.u, b = target.v;
    std::vector<Edge> edges = cur.edges();
    int replaced = 0;
    if (b + 1 <= cur.n() && cur.has_edge(a, b + 1)) {
      for (Edge& e : edges)
        if (e.v == b + 1 && e.u < b && !cur.has_edge(e.u, b)) {
          e = {e.u, b};
          ++replaced;
        }
    } else if (a - 1 >= 1 && cur.has_edge(a - 1, b)) {
      for (Edge& e : edges)
        if (e.u == a - 1 && e.v > a && !cur.has_edge(a, e.v)) {
          e = {a, e.v};
          ++replaced;
        }
    }
    // gap maximality guarantees one of the two neighbour edges exists
    if (replaced == 0) throw Error(ErrorCode::Invalid, "compression pass made no progress");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    cur = OrderedGraph(cur.n(), std::move(edges));
  }
  return cur;
}

std::optional<int> missing_edge_certificate(const OrderedGraph& g, int k) {
  if (g.n() < 2 * k)
    throw Error(ErrorCode::NotApplicable, "certificate needs n >= 2k");
  for (int x = 1; x + k <= g.n(); ++x) {
    if (g.has_edge(x, x + k)) continue;
    bool complete = true;
    for (int a = x + 1; a < x + k && complete; ++a)
      for (int b = a + 1; b <= x + k - 1 && complete; ++b)
        if (!g.has_edge(a, b)) complete = false;
    if (complete) return x;
  }
  return std::nullopt;
}

}  // namespace ordmatch
