#include "ordmatch/construct.hpp"

#include <algorithm>
#include <map>

#include "ordmatch/formulas.hpp"

namespace ordmatch {

namespace {

OrderedGraph build_separated(int n, int k) {
  if (k < 1 || n < 2 * k) throw Error(ErrorCode::OutOfRange, "separated family needs n >= 2k");
  // Balanced parts of n+1, largest first; blocks of size part-1 alternate
  // with k-1 single hub vertices. Every edge interval covers a hub, so k
  // separated edges would need k distinct hubs.
  std::vector<int> parts(k, (n + 1) / k);
  for (int i = 0; i < (n + 1) % k; ++i) ++parts[i];
  std::vector<std::pair<int, int>> blocks;  // inclusive vertex ranges
  int pos = 1;
  for (int i = 0; i < k; ++i) {
    int len = parts[i] - 1;
    blocks.push_back({pos, pos + len - 1});
    pos += len;
    if (i + 1 < k) ++pos;  // hub vertex
  }
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      bool same_block = false;
      for (auto [lo, hi] : blocks)
        if (lo <= u && v <= hi) {
          same_block = true;
          break;
        }
      if (!same_block) edges.push_back({u, v});
    }
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_nested_alt(int n, int k) {
  if (k < 1 || n < 2 * k) throw Error(ErrorCode::OutOfRange, "nested family needs n >= 2k");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= std::min(n, u + 2 * k - 2); ++v) edges.push_back({u, v});
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_non_separated(int n, int k) {
  if (k < 1 || n < k) throw Error(ErrorCode::OutOfRange, "non-separated family needs n >= k");
  // Base clique size k + (n mod k) is the unique base in [k, 2k-1] congruent
  // to n mod k; each step attaches k vertices and completes the last 2k-1.
  int base = k + n % k;
  std::vector<Edge> edges;
  for (int u = 1; u <= base; ++u)
    for (int v = u + 1; v <= base; ++v) edges.push_back({u, v});
  for (int top = base + k; top <= n; top += k) {
    int lo = top - (2 * k - 1) + 1;
    for (int u = lo; u <= top; ++u)
      for (int v = std::max(u + 1, top - k + 1); v <= top; ++v) edges.push_back({u, v});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_cross_sep(int n, int k) {
  if (k < 1 || n < 2 * k) throw Error(ErrorCode::OutOfRange, "cross+sep family needs n >= 2k");
  std::vector<Edge> edges;
  for (int x = 1; x <= k - 1; ++x)
    for (int y = x + k; y <= n; ++y) edges.push_back({x, y});
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= std::min(n, x + k - 1); ++y) {
      bool covers_hub = false;
      for (int i = 1; i <= k - 1 && !covers_hub; ++i) covers_hub = x <= i * k && i * k <= y;
      if (covers_hub) edges.push_back({x, y});
    }
  std::sort(edges.begin(), edges.end());
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_nest_sep(int n, int k) {
  if (k < 1 || n < 2 * k) throw Error(ErrorCode::OutOfRange, "nest+sep family needs n >= 2k");
  // A boundary block of size s hosts ceil(s/2) pairwise-separated edges, and
  // a nested chain fits inside the larger block, so blocks of sizes a,b keep
  // both patterns out iff ceil(a/2)+ceil(b/2) < k and max(a,b) < k. Symmetric
  // k-1 blocks work only for odd k; even k drops one right-block vertex.
  const int right = k % 2 == 1 ? k - 1 : k - 2;
  std::vector<Edge> edges;
  auto boundary = [&](int v) { return v <= k - 1 || v >= n - right + 1; };
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (boundary(u) || boundary(v)) edges.push_back({u, v});
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_nest_cross_sep(int n, int k) {
  if (k < 3 || n < 2 * k)
    throw Error(ErrorCode::OutOfRange, "nest+cross+sep family needs n >= 2k, k >= 3");
  auto hub = [&](int v) { return v == 1 || (k + 1 <= v && v <= 2 * k - 2); };
  auto corner = [&](int v) { return v <= 2 * k - 2 || v == n; };
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (hub(u) || hub(v) || (corner(u) && corner(v))) edges.push_back({u, v});
  return OrderedGraph(n, std::move(edges));
}

}  // namespace

const char* extremal_family_name(ExtremalFamily f) {
  switch (f) {
    case ExtremalFamily::Separated: return "separated";
    case ExtremalFamily::NestedAlt: return "nested-alt";
    case ExtremalFamily::NonSeparated: return "non-separated";
    case ExtremalFamily::CrossSep: return "cross-sep";
    case ExtremalFamily::NestSep: return "nest-sep";
    case ExtremalFamily::NestCrossSep: return "nest-cross-sep";
  }
  return "unknown";
}

std::optional<ExtremalFamily> parse_extremal_family(const std::string& s) {
  static const std::map<std::string, ExtremalFamily> table = {
      {"separated", ExtremalFamily::Separated},
      {"nested-alt", ExtremalFamily::NestedAlt},
      {"non-separated", ExtremalFamily::NonSeparated},
      {"cross-sep", ExtremalFamily::CrossSep},
      {"nest-sep", ExtremalFamily::NestSep},
      {"nest-cross-sep", ExtremalFamily::NestCrossSep},
  };
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

OrderedGraph extremal_construction(ExtremalFamily family, int n, int k) {
  switch (family) {
    case ExtremalFamily::Separated: return build_separated(n, k);
    case ExtremalFamily::NestedAlt: return build_nested_alt(n, k);
    case ExtremalFamily::NonSeparated: return build_non_separated(n, k);
    case ExtremalFamily::CrossSep: return build_cross_sep(n, k);
    case ExtremalFamily::NestSep: return build_nest_sep(n, k);
    case ExtremalFamily::NestCrossSep: return build_nest_cross_sep(n, k);
  }
  throw Error(ErrorCode::Invalid, "unknown family");
}

OrderedGraph apex_chain_construction(const std::string& word, int n, int k) {
  if (k < 1 || n < 2 * k - 1)
    throw Error(ErrorCode::OutOfRange, "apex chain needs n >= 2k-1");
  if (static_cast<int>(word.size()) != n - (2 * k - 1))
    throw Error(ErrorCode::WordLengthMismatch, "word length must be n - (2k-1)");
  OrderedGraph g = OrderedGraph::complete(2 * k - 1);
  for (char c : word) {
    switch (c) {
      case '1': g = apex_graph(g, k - 1); break;
      case '2': g = apex_graph(reverse_graph(g), k - 1); break;
      default: throw Error(ErrorCode::Malformed, "word letters must be 1 or 2");
    }
  }
  return g;
}

OrderedGraph hub_long_construction(int n, int k, std::optional<std::vector<int>> hubs) {
  if (k < 1 || n < 3 * (k - 1) || n < 2 * k)
    throw Error(ErrorCode::OutOfRange, "hub construction needs n >= max(3(k-1), 2k)");
  std::vector<int> hub_set;
  if (hubs) {
    hub_set = *hubs;
    std::sort(hub_set.begin(), hub_set.end());
    if (static_cast<int>(hub_set.size()) != k - 1)
      throw Error(ErrorCode::OutOfRange, "need exactly k-1 hubs");
    for (int h : hub_set)
      if (h < k || h > n - k + 1)
        throw Error(ErrorCode::OutOfRange, "hubs must lie in [k, n-k+1]");
    if (std::adjacent_find(hub_set.begin(), hub_set.end()) != hub_set.end())
      throw Error(ErrorCode::OutOfRange, "hubs must be distinct");
  } else {
    // central-most block of k-1 consecutive allowed positions
    int start = std::clamp((n - k + 3) / 2 - (k - 1) / 2, k, n - k + 1 - (k - 2));
    for (int i = 0; i < k - 1; ++i) hub_set.push_back(start + i);
  }
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      bool take = v - u >= n - k + 1;
      for (size_t i = 0; i < hub_set.size() && !take; ++i)
        take = u == hub_set[i] || v == hub_set[i];
      if (take) edges.push_back({u, v});
    }
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph cross_island_free_construction(int n, int k) {
  if (k < 3 || n < 2 * k)
    throw Error(ErrorCode::OutOfRange, "construction needs n >= 2k, k >= 3");
  std::vector<Edge> edges;
  for (int u = 1; u <= k - 2; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  for (int d = 1; 2 * d < k; d *= 2)
    for (int x = 1; x + d <= n; x += d)
      if (x > k - 2) edges.push_back({x, x + d});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return OrderedGraph(n, std::move(edges));
}

std::vector<std::vector<Edge>> distance_class_partition(int n, int ell, DistanceClassMode mode) {
  if (ell < 1 || ell > n - 1)
    throw Error(ErrorCode::OutOfRange, "distance class needs 1 <= l <= n-1");
  std::vector<std::vector<Edge>> parts;
  if (mode == DistanceClassMode::StronglyNonNestedTwo) {
    parts.resize(2);
    for (int x = 1; x + ell <= n; ++x) {
      int slot = ((x - 1) % (2 * ell)) < ell ? 0 : 1;
      parts[slot].push_back({x, x + ell});
    }
  } else {
    parts.resize(ell + 1);
    for (int x = 1; x + ell <= n; ++x) parts[x % (ell + 1)].push_back({x, x + ell});
  }
  return parts;
}

}  // namespace ordmatch
