#include "ordmatch/ramsey.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>

#include "ordmatch/core.hpp"

namespace ordmatch {

namespace {

constexpr int kMaxRamseyN = 11;

using Mask = std::uint64_t;

struct ColorUniverse {
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;

  explicit ColorUniverse(int n_) : n(n_) {
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        edges.push_back({u, v});
        ++m;
      }
  }
};

struct ClassAdj {
  std::array<std::uint16_t, kMaxRamseyN + 1> adj{};
  void flip(Edge e) {
    adj[e.u] ^= static_cast<std::uint16_t>(1u << e.v);
    adj[e.v] ^= static_cast<std::uint16_t>(1u << e.u);
  }
  bool has(int u, int v) const { return adj[u] >> v & 1; }
};

std::uint16_t bits_below(int v) { return static_cast<std::uint16_t>(((1u << v) - 1) & ~1u); }
std::uint16_t bits_above(int v) { return static_cast<std::uint16_t>(~((1u << (v + 1)) - 1)); }

// Does the colour class contain the target once `e` joins it? The class was
// target-free before, so only copies through e matter; class masks stay small
// enough that the generic fallbacks stay cheap.
struct TargetChecker {
  PatternSpec target;
  const ColorUniverse* uni;
  std::vector<Mask> pat;  // NonNest partners, vertex-disjoint

  TargetChecker(PatternSpec t, const ColorUniverse& u) : target(t), uni(&u) {
    if (t.kind == PatternKind::NonNest) {
      pat.assign(u.m, 0);
      for (int i = 0; i < u.m; ++i)
        for (int j = i + 1; j < u.m; ++j) {
          PairRelation r = classify_pair(u.edges[i], u.edges[j]);
          if (r == PairRelation::Separated || r == PairRelation::Crossing) {
            pat[i] |= 1ULL << j;
            pat[j] |= 1ULL << i;
          }
        }
    }
  }

  bool clique_exists(Mask cand, int need) const {
    if (need == 0) return true;
    while (cand) {
      if (std::popcount(cand) < need) return false;
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      if (clique_exists(cand & pat[b], need - 1)) return true;
    }
    return false;
  }

  bool creates(Mask cls, const ClassAdj& adj, int j) const {
    if (target.kind == PatternKind::NonNest) return clique_exists(cls & pat[j], target.size - 1);
    // alternating path
    ClassAdj tmp = adj;
    tmp.flip(uni->edges[j]);
    const int t = target.size;
    const int n = uni->n;
    if (t == 2) return true;
    if (t == 3) {
      for (int c = 1; c <= n; ++c)
        if (std::popcount<unsigned>(tmp.adj[c] & bits_below(c)) >= 2 ||
            std::popcount<unsigned>(tmp.adj[c] & bits_above(c)) >= 2)
          return true;
      return false;
    }
    if (t == 4) {
      for (int b = 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) {
          if (!tmp.has(b, c)) continue;
          for (std::uint16_t ds = tmp.adj[b] & bits_above(c); ds; ds &= ds - 1) {
            int d = std::countr_zero(ds);
            if (tmp.adj[d] & bits_below(b)) return true;
          }
          for (std::uint16_t as = tmp.adj[c] & bits_below(b); as; as &= as - 1) {
            int aa = std::countr_zero(as);
            if (tmp.adj[aa] & bits_above(c)) return true;
          }
        }
      return false;
    }
    // generic converging-zigzag DP
    std::array<std::array<std::uint8_t, kMaxRamseyN + 1>, kMaxRamseyN + 1> f{};
    std::vector<std::pair<int, std::pair<int, int>>> states;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (u != v && tmp.has(std::min(u, v), std::max(u, v)))
          states.push_back({std::abs(u - v), {u, v}});
    std::sort(states.begin(), states.end());
    int best = states.empty() ? 1 : 2;
    for (auto& [w, pl] : states) {
      auto [p, l] = pl;
      int lo = std::min(p, l), hi = std::max(p, l);
      int val = 2;
      for (int next = lo + 1; next < hi; ++next)
        if (next != l && tmp.has(std::min(l, next), std::max(l, next)))
          val = std::max(val, 1 + f[l][next]);
      f[p][l] = static_cast<std::uint8_t>(val);
      best = std::max(best, val);
      if (best >= t) return true;
    }
    return best >= t;
  }
};

struct ColorState {
  Mask red = 0, blue = 0;
  ClassAdj red_adj, blue_adj;
};

struct ColorSearch {
  const ColorUniverse& uni;
  const TargetChecker& checker;
  bool fix_first_red;
  std::uint64_t budget;
  std::atomic<std::uint64_t>* nodes;
  std::atomic<bool>* abort_flag;

  // First complete target-free colouring in lexicographic order (red < blue)
  // within the subtree rooted at edge index i; nullopt when none.
  bool dfs(int i, ColorState& st, Mask& out) const {
    if (abort_flag->load(std::memory_order_relaxed)) return false;
    if (nodes->fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
      abort_flag->store(true, std::memory_order_relaxed);
      return false;
    }
    if (i == uni.m) {
      out = st.red;
      return true;
    }
    Edge e = uni.edges[i];
    if (!checker.creates(st.red, st.red_adj, i)) {
      st.red |= 1ULL << i;
      st.red_adj.flip(e);
      if (dfs(i + 1, st, out)) return true;
      st.red &= ~(1ULL << i);
      st.red_adj.flip(e);
    }
    if (i == 0 && fix_first_red) return false;
    if (!checker.creates(st.blue, st.blue_adj, i)) {
      st.blue |= 1ULL << i;
      st.blue_adj.flip(e);
      if (dfs(i + 1, st, out)) return true;
      st.blue &= ~(1ULL << i);
      st.blue_adj.flip(e);
    }
    return false;
  }

  // Frontier of surviving colourings of the first `depth` edges, in
  // lexicographic order.
  void expand(int i, int depth, ColorState& st, std::vector<ColorState>& out) const {
    if (i == depth) {
      out.push_back(st);
      return;
    }
    Edge e = uni.edges[i];
    if (!checker.creates(st.red, st.red_adj, i)) {
      st.red |= 1ULL << i;
      st.red_adj.flip(e);
      expand(i + 1, depth, st, out);
      st.red &= ~(1ULL << i);
      st.red_adj.flip(e);
    }
    if (i == 0 && fix_first_red) return;
    if (!checker.creates(st.blue, st.blue_adj, i)) {
      st.blue |= 1ULL << i;
      st.blue_adj.flip(e);
      expand(i + 1, depth, st, out);
      st.blue &= ~(1ULL << i);
      st.blue_adj.flip(e);
    }
  }
};

std::optional<TwoColoring> good_coloring(const ColorUniverse& uni, const TargetChecker& checker,
                                         const RamseyOptions& opts, bool parallel,
                                         bool& exhausted_budget) {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort_flag{false};
  ColorSearch search{uni, checker, opts.fix_first_red, opts.node_budget, &nodes, &abort_flag};

  std::optional<Mask> found;
  if (!parallel || uni.m <= 14) {
    ColorState st;
    Mask out = 0;
    if (search.dfs(0, st, out)) found = out;
  } else {
    const int depth = 12;
    std::vector<ColorState> frontier;
    {
      ColorState st;
      search.expand(0, depth, st, frontier);
    }
    // Lexicographically least witness: tasks later than a found prefix can
    // stop, earlier ones must finish.
    std::atomic<std::ptrdiff_t> found_at{static_cast<std::ptrdiff_t>(frontier.size())};
    std::vector<Mask> results(frontier.size());
    const int workers = std::max(1, opts.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(frontier.size()); ++idx) {
      if (idx > found_at.load(std::memory_order_relaxed)) continue;
      ColorState st = frontier[idx];
      Mask out = 0;
      if (search.dfs(depth, st, out)) {
        results[idx] = out;
        std::ptrdiff_t prev = found_at.load(std::memory_order_relaxed);
        while (idx < prev &&
               !found_at.compare_exchange_weak(prev, idx, std::memory_order_relaxed)) {
        }
      }
    }
    std::ptrdiff_t w = found_at.load();
    if (w < static_cast<std::ptrdiff_t>(frontier.size())) found = results[w];
  }

  if (abort_flag.load()) {
    exhausted_budget = true;
    return std::nullopt;
  }
  if (!found) return std::nullopt;
  TwoColoring col;
  col.n = uni.n;
  for (Mask t = *found; t; t &= t - 1) col.red.push_back(uni.edges[std::countr_zero(t)]);
  return col;
}

RamseyReport find_ramsey_impl(PatternSpec target, int n_max, const RamseyOptions& opts,
                              bool parallel) {
  if (target.kind != PatternKind::NonNest && target.kind != PatternKind::AltPath)
    throw Error(ErrorCode::Unsupported, "targets limited to non-nested matchings and paths");
  if (target.kind == PatternKind::NonNest && target.size < 1)
    throw Error(ErrorCode::OutOfRange, "matching target needs k >= 1");
  if (target.kind == PatternKind::AltPath && target.size < 2)
    throw Error(ErrorCode::OutOfRange, "path target needs t >= 2");
  if (n_max > opts.ceiling || n_max > kMaxRamseyN)
    throw Error(ErrorCode::OutOfRange, "n_max exceeds the engine ceiling");
  if (opts.node_budget == 0) throw Error(ErrorCode::Invalid, "budget must be positive");

  RamseyReport rep;
  rep.target = target;
  rep.lower = 2;
  for (int n = 2; n <= n_max; ++n) {
    ColorUniverse uni(n);
    TargetChecker checker(target, uni);
    bool exhausted = false;
    std::optional<TwoColoring> col = good_coloring(uni, checker, opts, parallel, exhausted);
    rep.upper_checked = n;
    if (exhausted) {
      rep.budget_exhausted = true;
      rep.upper_checked = n - 1;
      return rep;
    }
    if (col) {
      rep.witness = col;
      rep.lower = n + 1;
    } else {
      rep.exact = n;
      return rep;
    }
  }
  return rep;
}

}  // namespace

RamseyReport find_ramsey(PatternSpec target, int n_max, const RamseyOptions& opts) {
  return find_ramsey_impl(target, n_max, opts, true);
}

RamseyReport find_ramsey_serial(PatternSpec target, int n_max, const RamseyOptions& opts) {
  return find_ramsey_impl(target, n_max, opts, false);
}

BoundaryRecolorSets alt_recolor_sets(int m, int k) {
  if (k < 1 || m < 2 * k - 1)
    throw Error(ErrorCode::OutOfRange, "recolor sets need m >= 2k-1");
  BoundaryRecolorSets out;
  for (int x = 1; x <= m; ++x)
    for (int y = x + 1; y <= m; ++y) {
      if (x + y <= 2 * k - 2) out.low.push_back({x, y});
      if (x + y >= 2 * m - 2 * k + 4) out.high.push_back({x, y});
    }
  return out;
}

std::vector<Edge> nonnested_long_edges(int n, int k) {
  if (k < 1 || n < 2 * k) throw Error(ErrorCode::OutOfRange, "long edge set needs n >= 2k");
  std::vector<Edge> out;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      if (y - x >= n - k + 1) out.push_back({x, y});
  return out;
}

}  // namespace ordmatch
