#include "ordmatch/formulas.hpp"

#include <algorithm>
#include <cmath>

namespace ordmatch {

const char* value_kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::Exact: return "EXACT";
    case ValueKind::Interval: return "INTERVAL";
    case ValueKind::LowerOnly: return "LOWER_ONLY";
    case ValueKind::Conditional: return "CONDITIONAL";
    case ValueKind::Disputed: return "DISPUTED";
  }
  return "UNKNOWN";
}

int residue(long long N, int k) {
  if (k <= 0) throw Error(ErrorCode::Invalid, "residue modulus must be positive");
  long long r = N % k;
  if (r < 0) r += k;
  return static_cast<int>(r);
}

long long binom2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

long long turan_graph_edges(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorCode::Invalid, "turan graph needs 1 <= k <= n");
  long long total = binom2(n);
  int q = n / k, r = n % k;
  // r parts of size q+1, k-r parts of size q
  total -= r * binom2(q + 1);
  total -= static_cast<long long>(k - r) * binom2(q);
  return total;
}

long long nonsep_value_ceiling_form(int n, int k) {
  long long step = binom2(2 * k - 1) - binom2(k - 1);
  long long a = n - 2 * k + 1;
  long long t = a >= 0 ? (a + k - 1) / k : -((-a) / k);  // ceil(a/k)
  return t * step + binom2(2 * k - 1 - residue(n + 1, k));
}

long long nonsep_value_table_form(int n, int k) {
  // Equals the recursive construction count with base clique size k + (n mod k).
  int s = residue(n + 1, k);
  long long a = 3LL * (k - 1) * n;
  long long b = static_cast<long long>(2 * k - 1 - s) * (k - 1 + s);
  if ((a - b) % 2 != 0) throw Error(ErrorCode::Invalid, "nonsep closed form parity");
  return (a - b) / 2;
}

namespace {

long long nest_cross_value(int n, int k) {
  return 2LL * (k - 1) * n - static_cast<long long>(k - 1) * (2 * k - 1);
}

long long cross_sep_upper(int n, int k) {
  return static_cast<long long>(k - 1) * n - binom2(2 * k - 1) + binom2(k) +
         static_cast<long long>(k - 1) * (binom2(k + 1) - 1);
}

}  // namespace

ExtremalValue extremal_value(const std::vector<PatternSpec>& forbidden, int n) {
  if (forbidden.empty()) throw Error(ErrorCode::UnsupportedSet, "empty forbidden set");
  std::vector<PatternSpec> f = forbidden;
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());

  ExtremalValue out;
  if (f.size() == 1) {
    const PatternKind kind = f[0].kind;
    const int k = f[0].size;
    if (k < 1) throw Error(ErrorCode::OutOfRange, "pattern size must be positive");
    switch (kind) {
      case PatternKind::Sep:
        if (n < 2 * k) throw Error(ErrorCode::OutOfRange, "separated bound needs n >= 2k");
        out.lo = out.hi = turan_graph_edges(n + 1, k) - k + 1;
        out.provenance = "sep-closed-form";
        return out;
      case PatternKind::Nest:
      case PatternKind::Cross:
        if (n < 2 * k) throw Error(ErrorCode::OutOfRange, "bound needs n >= 2k");
        out.lo = out.hi = nest_cross_value(n, k);
        out.provenance = kind == PatternKind::Nest ? "nest-closed-form" : "cross-closed-form";
        return out;
      case PatternKind::NonCross:
        if (n < 2 * k) throw Error(ErrorCode::OutOfRange, "noncross bound needs n >= 2k");
        out.lo = out.hi = static_cast<long long>(k - 1) * n;
        out.provenance = "noncross-closed-form";
        return out;
      case PatternKind::NonSep: {
        if (n < k) throw Error(ErrorCode::OutOfRange, "nonsep bound needs n >= k");
        long long table = nonsep_value_table_form(n, k);
        long long ceiling = nonsep_value_ceiling_form(n, k);
        out.lo = out.hi = table;
        out.provenance = "nonsep-closed-form";
        if (table != ceiling) {
          out.kind = ValueKind::Disputed;
          out.note = "printed forms disagree: ceiling-form " + std::to_string(ceiling) +
                     ", table-form " + std::to_string(table) +
                     "; table-form matches the recursive construction";
        }
        return out;
      }
      case PatternKind::NonNest:
      case PatternKind::StronglyNonNest:
        if (n < 2 * k) throw Error(ErrorCode::OutOfRange, "nonnest bound needs n >= 2k");
        out.lo = static_cast<long long>(k - 1) * n;
        out.hi = out.lo + binom2(k - 1);
        out.kind = out.lo == out.hi ? ValueKind::Exact : ValueKind::Interval;
        out.provenance = "nonnest-interval-bound";
        return out;
      case PatternKind::AltPath: {
        const int t = f[0].size;
        if (t < 2 || t % 2 != 0)
          throw Error(ErrorCode::UnsupportedSet, "alternating path bound needs even t >= 2");
        const int kk = t / 2;
        if (n < t) throw Error(ErrorCode::OutOfRange, "alternating path bound needs n >= t");
        out.lo = out.hi = nest_cross_value(n, kk);
        out.provenance = "alt-path-closed-form";
        return out;
      }
      case PatternKind::CrossIslandPair: {
        if (n < 2 * k || k < 3)
          throw Error(ErrorCode::OutOfRange, "cross island pair bound needs n >= 2k, k >= 3");
        // Only a constructive lower bound is known; counted from the literal
        // edge set rather than the printed asymptotic form.
        long long e1 = static_cast<long long>(k - 2) * (n - 1) - binom2(k - 2);
        long long e2 = 0, overlap = 0;
        for (long long d = 1; 2 * d < k; d *= 2) {
          for (long long x = 1; x + d <= n; x += d) {
            ++e2;
            if (x <= k - 2 || x + d <= k - 2) ++overlap;
          }
        }
        out.lo = e1 + e2 - overlap;
        out.hi = binom2(n);
        out.kind = ValueKind::LowerOnly;
        out.provenance = "cross-island-pair-construction";
        out.note = "printed asymptotic count is inconsistent with the literal edge set";
        return out;
      }
      case PatternKind::NestIslandPair:
        if (n < 2 * k) throw Error(ErrorCode::OutOfRange, "nest island pair bound needs n >= 2k");
        out.lo = out.hi = static_cast<long long>(k - 1) * n;
        out.provenance = "nest-island-pair-closed-form";
        return out;
    }
    throw Error(ErrorCode::UnsupportedSet, "unsupported single pattern");
  }

  // Multi-pattern sets: all sizes must agree.
  const int k = f[0].size;
  for (const auto& p : f)
    if (p.size != k) throw Error(ErrorCode::UnsupportedSet, "mixed sizes in forbidden set");
  auto is = [&](std::vector<PatternKind> kinds) {
    if (kinds.size() != f.size()) return false;
    std::sort(kinds.begin(), kinds.end());
    for (size_t i = 0; i < kinds.size(); ++i)
      if (f[i].kind != kinds[i]) return false;
    return true;
  };
  if (is({PatternKind::Sep, PatternKind::Cross})) {
    if (n < 2 * k) throw Error(ErrorCode::OutOfRange, "cross+sep bound needs n >= 2k");
    long long upper = cross_sep_upper(n, k);
    out.provenance = "cross-sep-bound";
    if (n >= 2 * k * k) {
      out.lo = out.hi = upper;
      return out;
    }
    // Below the proven-equality range the hub construction still exists and
    // is free; its literal count is the best known lower bound.
    long long lo = 0;
    for (int x = 1; x <= k - 1; ++x) lo += std::max(0, n - (x + k) + 1);
    for (int ell = 1; ell <= k - 1; ++ell)
      for (int i = 1; i <= k - 1; ++i) {
        int hub = i * k;
        if (hub > n) break;
        int xlo = std::max(1, hub - ell), xhi = std::min(hub, n - ell);
        if (xhi >= xlo) lo += xhi - xlo + 1;
      }
    out.kind = ValueKind::Conditional;
    out.lo = lo;
    out.hi = upper;
    out.note = "equality proven only for n >= 2k^2";
    return out;
  }
  if (is({PatternKind::Sep, PatternKind::Nest})) {
    if (n < 2 * k) throw Error(ErrorCode::OutOfRange, "nest+sep bound needs n >= 2k");
    out.provenance = "nest-sep-bound";
    if (k % 2 == 1) {
      // Symmetric boundary blocks of size k-1 avoid both patterns only when
      // k-1 is even; a block side packs ceil((k-1)/2) separated edges.
      out.lo = out.hi = nest_cross_value(n, k);
      return out;
    }
    out.kind = ValueKind::Interval;
    out.lo = static_cast<long long>(2 * k - 3) * (n - k + 1);  // blocks of k-1 and k-2
    out.hi = nest_cross_value(n, k);
    out.note = "even k: the size-(k-1) boundary blocks admit a separated k-matching, so the "
               "nested-pattern value is only an upper bound; exhaustive search adjudicates "
               "small cases (k=2 gives n)";
    return out;
  }
  if (is({PatternKind::Sep, PatternKind::Nest, PatternKind::Cross})) {
    if (n < 2 * k || k < 3)
      throw Error(ErrorCode::OutOfRange, "nest+cross+sep bound needs n >= 2k, k >= 3");
    out.lo = static_cast<long long>(k - 1) * n;
    out.hi = cross_sep_upper(n, k);
    out.kind = ValueKind::Interval;
    out.provenance = "nest-cross-sep-interval";
    return out;
  }
  throw Error(ErrorCode::UnsupportedSet, "unsupported forbidden set");
}

long long edge_length_bound(EdgeLengthBound kind, int n, int k, std::optional<int> ell) {
  if (n < 2 * k || k < 1) throw Error(ErrorCode::OutOfRange, "needs n >= 2k");
  switch (kind) {
    case EdgeLengthBound::LongEdgesCrossFree:
      return static_cast<long long>(k - 1) * n - binom2(2 * k - 1) + binom2(k);
    case EdgeLengthBound::ShortEdgesSnnFree:
      return 2LL * (k - 1) * (k - 1);
    case EdgeLengthBound::ShortEdgesSepFree:
      if (!ell || *ell < 1 || *ell > k - 1)
        throw Error(ErrorCode::OutOfRange, "length class needs 1 <= l <= k-1");
      return static_cast<long long>(*ell + 1) * (k - 1);
  }
  throw Error(ErrorCode::Invalid, "unknown bound kind");
}

RamseyBoundValue ramsey_bound(RamseyBoundKind kind, int param) {
  RamseyBoundValue out;
  switch (kind) {
    case RamseyBoundKind::AltUpper:
      if (param < 2) throw Error(ErrorCode::OutOfRange, "path bound needs t >= 2");
      out.value = 3LL * param + 3;
      return out;
    case RamseyBoundKind::NonNestLower:
      if (param < 2) throw Error(ErrorCode::OutOfRange, "needs k >= 2");
      out.value = 3LL * param - 1;
      return out;
    case RamseyBoundKind::NonNestUpper:
      // 4k-6 < 3k-1 for k < 5, and exhaustive search puts the k=3 number at 8,
      // so the bound can only be meant for k >= 5.
      if (param < 5) throw Error(ErrorCode::OutOfRange, "4k-6 bound guarded to k >= 5");
      out.value = 4LL * param - 6;
      out.flag = "unpublished citation";
      return out;
    case RamseyBoundKind::NonNestConditional: {
      if (param < 2) throw Error(ErrorCode::OutOfRange, "needs k >= 2");
      // max n with n^2 - 4kn + k^2 <= 0, in exact integer arithmetic
      const long long k = param;
      long long n = 4 * k;  // above the larger root
      while (n * n - 4 * k * n + k * k > 0) --n;
      out.value = n;
      out.flag = "conditional on the tight non-nested lower bound";
      return out;
    }
  }
  throw Error(ErrorCode::Invalid, "unknown bound kind");
}

long long residual_clique_edges(int n1, int n2, int k) {
  if (n1 < 0 || n2 < 0 || n1 > 2 * k - 1 || n2 > 2 * k - 1)
    throw Error(ErrorCode::OutOfRange, "arguments must lie in [0, 2k-1]");
  return binom2(2 * k - 1 - n1) + binom2(2 * k - 1 - n2);
}

}  // namespace ordmatch
