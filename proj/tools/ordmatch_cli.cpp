// Command-line surface over the ordered-matching library. Every subcommand is
// a thin shell over library calls; exit codes: 0 success/exact, 2
// verification mismatch, 3 budget-limited, 4 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ordmatch/construct.hpp"
#include "ordmatch/detect.hpp"
#include "ordmatch/formulas.hpp"
#include "ordmatch/json_io.hpp"
#include "ordmatch/ramsey.hpp"
#include "ordmatch/render.hpp"
#include "ordmatch/search.hpp"

namespace {

using namespace ordmatch;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 4;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Malformed, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Malformed, "cannot open " + path + " for writing");
  out << text;
}

struct GlobalFlags {
  std::string in_path, out_path;
  int threads = 1;
  std::uint64_t budget = 10'000'000'000ULL;
  std::uint64_t seed = 0;  // reserved for randomized drivers
};

long long claimed_count(const std::string& family, int n, int k) {
  if (family == "apex-chain" || family == "hub-long") return static_cast<long long>(k - 1) * n;
  if (family == "cross-island-free")
    return extremal_value({{PatternKind::CrossIslandPair, k}}, n).lo;
  auto fam = parse_extremal_family(family);
  if (!fam) throw Error(ErrorCode::Malformed, "unknown family " + family);
  switch (*fam) {
    case ExtremalFamily::Separated: return extremal_value({{PatternKind::Sep, k}}, n).lo;
    case ExtremalFamily::NestedAlt: return extremal_value({{PatternKind::Nest, k}}, n).lo;
    case ExtremalFamily::NonSeparated: return nonsep_value_table_form(n, k);
    case ExtremalFamily::CrossSep:
      return extremal_value({{PatternKind::Cross, k}, {PatternKind::Sep, k}}, n).lo;
    case ExtremalFamily::NestSep:
      return extremal_value({{PatternKind::Nest, k}, {PatternKind::Sep, k}}, n).lo;
    case ExtremalFamily::NestCrossSep: return static_cast<long long>(k - 1) * n;
  }
  throw Error(ErrorCode::Invalid, "unknown family");
}

OrderedGraph build_family(const std::string& family, int n, int k, const std::string& word) {
  if (family == "apex-chain")
    return apex_chain_construction(word.empty() ? std::string(std::max(0, n - (2 * k - 1)), '1')
                                                : word,
                                   n, k);
  if (family == "hub-long") return hub_long_construction(n, k);
  if (family == "cross-island-free") return cross_island_free_construction(n, k);
  auto fam = parse_extremal_family(family);
  if (!fam) throw Error(ErrorCode::Malformed, "unknown family " + family);
  return extremal_construction(*fam, n, k);
}

// Detector sweep for a family; true when the generated graph avoids every
// pattern its family forbids.
bool family_is_free(const std::string& family, const OrderedGraph& g, int k) {
  auto below = [&](PatternKind kind) { return max_pattern_matching(g, kind, k).size < k; };
  if (family == "separated") return below(PatternKind::Sep);
  if (family == "nested-alt")
    return below(PatternKind::Nest) && longest_alternating_path(g).length < 2 * k;
  if (family == "non-separated") return below(PatternKind::NonSep);
  if (family == "cross-sep") return below(PatternKind::Cross) && below(PatternKind::Sep);
  if (family == "nest-sep") return below(PatternKind::Nest) && below(PatternKind::Sep);
  if (family == "nest-cross-sep")
    return below(PatternKind::Nest) && below(PatternKind::Cross) && below(PatternKind::Sep);
  if (family == "apex-chain" || family == "hub-long") return below(PatternKind::NonNest);
  if (family == "cross-island-free")
    return max_split_pattern(g, IslandPattern::Cross, IslandGroups::Two, k).size < k;
  throw Error(ErrorCode::Malformed, "unknown family " + family);
}

int cmd_detect(const GlobalFlags& flags, const std::string& kind_token, std::optional<int> cap) {
  PatternSpec spec = parse_pattern_spec_token(kind_token);
  OrderedGraph g = decode_graph(slurp(flags.in_path));
  if (spec.kind == PatternKind::AltPath) {
    auto res = longest_alternating_path(g);
    emit(flags.out_path, encode_path_witness(res.witness));
    return kExitOk;
  }
  auto res = max_pattern_matching(g, spec.kind, cap);
  emit(flags.out_path, encode_matching_witness(res.witness));
  return kExitOk;
}

int cmd_turan(const GlobalFlags& flags, const std::vector<std::string>& forbid_tokens, int n,
              bool shift_prune, std::optional<int> seed_bound) {
  std::vector<PatternSpec> forbidden;
  for (const std::string& tok : forbid_tokens) forbidden.push_back(parse_pattern_spec_token(tok));
  SearchOptions opts;
  opts.workers = flags.threads;
  opts.node_budget = flags.budget;
  opts.shift_pruning = shift_prune;
  opts.seed_lower_bound = seed_bound;
  SearchReport rep = exact_turan(n, forbidden, opts);
  emit(flags.out_path, encode_search_report(rep));
  return rep.exact ? kExitOk : kExitBudget;
}

int cmd_construct(const GlobalFlags& flags, const std::string& family, int n, int k,
                  const std::string& word, const std::string& sidecar_path) {
  OrderedGraph g = build_family(family, n, k, word);
  long long claimed = claimed_count(family, n, k);
  bool verified = g.edge_count() == claimed && family_is_free(family, g, k);
  emit(flags.out_path, encode_graph(g));
  std::string sidecar = encode_construction_sidecar(family, claimed, verified);
  if (!sidecar_path.empty())
    emit(sidecar_path, sidecar);
  else
    std::cerr << sidecar << "\n";
  return verified ? kExitOk : kExitMismatch;
}

int cmd_ramsey(const GlobalFlags& flags, const std::string& target_token, int n_max) {
  PatternSpec target = parse_pattern_spec_token(target_token);
  RamseyOptions opts;
  opts.workers = flags.threads;
  opts.node_budget = flags.budget;
  RamseyReport rep = find_ramsey(target, n_max, opts);
  emit(flags.out_path, encode_ramsey_report(rep));
  return rep.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_table(const GlobalFlags& flags, int max_n, int max_k) {
  SearchOptions opts;
  opts.workers = flags.threads;
  opts.node_budget = flags.budget;
  if (max_n > opts.ceiling)
    throw Error(ErrorCode::OutOfRange, "table adjudication is limited to n <= 9");
  std::ostringstream out;
  out << "pattern\tn\tk\tclosed_form\tsearch\tstatus\n";
  bool budget_hit = false;
  const PatternKind kinds[] = {PatternKind::Sep,     PatternKind::Nest,
                               PatternKind::Cross,   PatternKind::NonSep,
                               PatternKind::NonNest, PatternKind::NonCross};
  for (int k = 2; k <= max_k; ++k)
    for (PatternKind kind : kinds) {
      int n_lo = kind == PatternKind::NonSep ? k : 2 * k;
      for (int n = n_lo; n <= max_n; ++n) {
        ExtremalValue ev = extremal_value({{kind, k}}, n);
        std::string closed;
        if (ev.kind == ValueKind::Exact)
          closed = std::to_string(ev.lo);
        else if (ev.kind == ValueKind::Interval)
          closed = "[" + std::to_string(ev.lo) + "," + std::to_string(ev.hi) + "]";
        else if (ev.kind == ValueKind::Disputed)
          closed = std::to_string(nonsep_value_ceiling_form(n, k)) + "|" + std::to_string(ev.lo);
        else
          closed = std::to_string(ev.lo);

        SearchReport rep = exact_turan(n, {{kind, k}}, opts);
        std::string status;
        if (!rep.exact) {
          status = "UNRESOLVED";
          budget_hit = true;
        } else if (ev.kind == ValueKind::Exact) {
          status = rep.value == ev.lo ? "MATCH" : "MISMATCH";
        } else if (ev.kind == ValueKind::Interval) {
          status = rep.value >= ev.lo && rep.value <= ev.hi ? "INTERVAL_CONFIRMED" : "MISMATCH";
        } else {
          status = "DISPUTED_RESOLVED(" + std::to_string(rep.value) + ")";
        }
        out << pattern_kind_name(kind) << "\t" << n << "\t" << k << "\t" << closed << "\t"
            << (rep.exact ? std::to_string(rep.value) : "-") << "\t" << status << "\n";
      }
    }
  emit(flags.out_path, out.str());
  return budget_hit ? kExitBudget : kExitOk;
}

int cmd_verify(const std::string& family, int n, int k) {
  OrderedGraph g = build_family(family, n, k, "");
  long long claimed = claimed_count(family, n, k);
  bool count_ok = g.edge_count() == claimed;
  bool free_ok = family_is_free(family, g, k);
  if (count_ok && free_ok) {
    std::cout << "OK(family=" << family << ", n=" << n << ", k=" << k
              << ", edges=" << g.edge_count() << ", free=true)\n";
    return kExitOk;
  }
  std::cout << "MISMATCH(family=" << family << ", n=" << n << ", k=" << k
            << ", edges=" << g.edge_count() << ", claimed=" << claimed
            << ", free=" << (free_ok ? "true" : "false") << ")\n";
  return kExitMismatch;
}

int cmd_render(const GlobalFlags& flags, const std::string& format) {
  OrderedGraph g = decode_graph(slurp(flags.in_path));
  if (format == "svg")
    emit(flags.out_path, to_arc_svg(g));
  else if (format == "dot")
    emit(flags.out_path, to_dot(g));
  else
    throw Error(ErrorCode::Malformed, "format must be svg or dot");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered-matching extremal toolkit"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--in", flags.in_path, "input JSON path (- for stdin)");
  app.add_option("--out", flags.out_path, "output path (- for stdout)");
  app.add_option("--threads", flags.threads, "worker count for search/ramsey");
  app.add_option("--budget", flags.budget, "node budget for search/ramsey");
  app.add_option("--seed", flags.seed, "seed for randomized workloads (reserved)");

  auto* detect = app.add_subcommand("detect", "maximum pattern matching or alternating path");
  detect->fallthrough();
  std::string detect_kind;
  int detect_cap = -1;
  detect->add_option("--kind", detect_kind, "pattern kind:size, e.g. cross:3 or altpath:4")
      ->required();
  detect->add_option("--cap", detect_cap, "early-exit cap");

  auto* turan = app.add_subcommand("turan", "exact Turan number by branch and bound");
  turan->fallthrough();
  std::vector<std::string> forbid;
  int turan_n = 0, turan_seed_bound = -1;
  bool shift_prune = false;
  turan->add_option("--forbid", forbid, "forbidden pattern kind:size (repeatable)")->required();
  turan->add_option("-n,--n", turan_n, "vertex count")->required();
  turan->add_flag("--shift-prune", shift_prune,
                  "restrict to interval-closed graphs (nonsep only)");
  turan->add_option("--seed-bound", turan_seed_bound, "extra lower bound for pruning");

  auto* construct = app.add_subcommand("construct", "emit an extremal construction");
  construct->fallthrough();
  std::string family, word, sidecar_path;
  int cn = 0, ck = 0;
  construct
      ->add_option("--family", family,
                   "separated|nested-alt|non-separated|cross-sep|nest-sep|nest-cross-sep|"
                   "apex-chain|hub-long|cross-island-free")
      ->required();
  construct->add_option("-n,--n", cn, "vertex count")->required();
  construct->add_option("-k,--k", ck, "pattern size")->required();
  construct->add_option("--word", word, "apex-chain word over {1,2}");
  construct->add_option("--sidecar", sidecar_path, "sidecar JSON path");

  auto* ramsey = app.add_subcommand("ramsey", "exact ordered Ramsey search");
  ramsey->fallthrough();
  std::string target;
  int nmax = 10;
  ramsey->add_option("--target", target, "target pattern, e.g. altpath:4 or nonnest:2")
      ->required();
  ramsey->add_option("--nmax", nmax, "largest host size to test");

  auto* table = app.add_subcommand("table", "closed forms vs search adjudication, TSV");
  table->fallthrough();
  int max_n = 8, max_k = 3;
  table->add_option("--max-n", max_n, "largest n");
  table->add_option("--max-k", max_k, "largest k");

  auto* verify = app.add_subcommand("verify", "regenerate, re-count, re-detect one construction");
  verify->fallthrough();
  std::string vfamily;
  int vn = 0, vk = 0;
  verify->add_option("--family", vfamily, "construction family")->required();
  verify->add_option("-n,--n", vn, "vertex count")->required();
  verify->add_option("-k,--k", vk, "pattern size")->required();

  auto* render = app.add_subcommand("render", "arc-diagram SVG or DOT export");
  render->fallthrough();
  std::string format = "svg";
  render->add_option("--format", format, "svg or dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (detect->parsed())
      return cmd_detect(flags, detect_kind,
                        detect_cap >= 0 ? std::optional<int>(detect_cap) : std::nullopt);
    if (turan->parsed())
      return cmd_turan(flags, forbid, turan_n, shift_prune,
                       turan_seed_bound >= 0 ? std::optional<int>(turan_seed_bound)
                                             : std::nullopt);
    if (construct->parsed()) return cmd_construct(flags, family, cn, ck, word, sidecar_path);
    if (ramsey->parsed()) return cmd_ramsey(flags, target, nmax);
    if (table->parsed()) return cmd_table(flags, max_n, max_k);
    if (verify->parsed()) return cmd_verify(vfamily, vn, vk);
    if (render->parsed()) return cmd_render(flags, format);
  } catch (const ordmatch::Error& e) {
    std::cerr << "error [" << error_code_name(e.code) << "]: " << e.what() << "\n";
    return e.code == ordmatch::ErrorCode::BudgetExceeded ? kExitBudget : kExitUsage;
  }
  return kExitUsage;
}
