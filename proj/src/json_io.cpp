#include "ordmatch/json_io.hpp"

#include <json.hpp>

namespace ordmatch {

using ojson = nlohmann::ordered_json;

namespace {

ojson edges_to_json(const std::vector<Edge>& edges) {
  ojson arr = ojson::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

}  // namespace

std::string encode_graph(const OrderedGraph& g) {
  ojson j;
  j["n"] = g.n();
  j["edges"] = edges_to_json(g.edges());
  return j.dump();
}

OrderedGraph decode_graph(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error&) {
    throw Error(ErrorCode::Malformed, "graph JSON does not parse");
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw Error(ErrorCode::Malformed, "graph JSON needs integer n and an edges array");
  int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw Error(ErrorCode::Malformed, "edges must be [u,v] integer pairs");
    edges.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return OrderedGraph(n, std::move(edges));
}

std::string encode_matching_witness(const MatchingWitness& w) {
  ojson j;
  j["size"] = w.edges.size();
  j["edges"] = edges_to_json(w.edges);
  if (!w.islands.empty()) {
    ojson arr = ojson::array();
    for (auto [lo, hi] : w.islands) arr.push_back({lo, hi});
    j["islands"] = arr;
  }
  return j.dump();
}

std::string encode_path_witness(const PathWitness& w) {
  ojson j;
  j["path"] = w.vertices;
  return j.dump();
}

std::string encode_extremal_value(const ExtremalValue& v) {
  ojson j;
  j["lo"] = v.lo;
  j["hi"] = v.hi;
  j["kind"] = value_kind_name(v.kind);
  j["provenance"] = v.provenance;
  if (!v.note.empty()) j["note"] = v.note;
  return j.dump();
}

std::string pattern_spec_token(const PatternSpec& spec) {
  return std::string(pattern_kind_name(spec.kind)) + ":" + std::to_string(spec.size);
}

PatternSpec parse_pattern_spec_token(const std::string& token) {
  auto pos = token.rfind(':');
  if (pos == std::string::npos)
    throw Error(ErrorCode::Malformed, "pattern token must look like kind:size");
  auto kind = parse_pattern_kind(token.substr(0, pos));
  if (!kind) throw Error(ErrorCode::Malformed, "unknown pattern kind in " + token);
  int size = 0;
  try {
    size = std::stoi(token.substr(pos + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::Malformed, "pattern size must be an integer");
  }
  return {*kind, size};
}

std::string encode_search_report(const SearchReport& r) {
  ojson j;
  j["n"] = r.n;
  ojson forb = ojson::array();
  for (const PatternSpec& p : r.forbidden) forb.push_back(pattern_spec_token(p));
  j["forbidden"] = forb;
  j["value"] = r.value;
  j["exact"] = r.exact;
  ojson ws = ojson::array();
  for (const OrderedGraph& g : r.witnesses) {
    ojson w;
    w["n"] = g.n();
    w["edges"] = edges_to_json(g.edges());
    ws.push_back(w);
  }
  j["witnesses"] = ws;
  j["nodes_explored"] = r.nodes_explored;
  // options echo; the worker count shapes scheduling only, so reports stay
  // byte-comparable across worker counts
  ojson opts;
  opts["budget"] = r.options.node_budget;
  opts["shift_pruning"] = r.options.shift_pruning;
  if (r.options.seed_lower_bound) opts["seed_lower_bound"] = *r.options.seed_lower_bound;
  j["options"] = opts;
  return j.dump();
}

std::string encode_coloring(const TwoColoring& c) {
  ojson j;
  j["n"] = c.n;
  j["red"] = edges_to_json(c.red);
  return j.dump();
}

TwoColoring decode_coloring(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error&) {
    throw Error(ErrorCode::Malformed, "coloring JSON does not parse");
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("red"))
    throw Error(ErrorCode::Malformed, "coloring JSON needs n and red");
  TwoColoring c;
  c.n = j["n"].get<int>();
  for (const auto& item : j["red"]) c.red.push_back({item[0].get<int>(), item[1].get<int>()});
  return c;
}

std::string encode_ramsey_report(const RamseyReport& r) {
  ojson j;
  j["target"] = pattern_spec_token(r.target);
  if (r.exact)
    j["exact"] = *r.exact;
  else
    j["exact"] = nullptr;
  j["lower"] = r.lower;
  j["upper_checked"] = r.upper_checked;
  if (r.witness) {
    ojson w;
    w["n"] = r.witness->n;
    w["red"] = edges_to_json(r.witness->red);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["budget_exhausted"] = r.budget_exhausted;
  return j.dump();
}

std::string encode_construction_sidecar(const std::string& family, long long claimed_count,
                                        bool verified) {
  ojson j;
  j["family"] = family;
  j["claimed_count"] = claimed_count;
  j["verified"] = verified;
  return j.dump();
}

}  // namespace ordmatch
