#pragma once

#include <string>

#include "ordmatch/construct.hpp"
#include "ordmatch/formulas.hpp"
#include "ordmatch/ramsey.hpp"
#include "ordmatch/search.hpp"

namespace ordmatch {

/// Wire format {"n": <int>, "edges": [[u,v], ...]}, edges sorted, compact.
std::string encode_graph(const OrderedGraph& g);
OrderedGraph decode_graph(const std::string& text);

std::string encode_matching_witness(const MatchingWitness& w);
std::string encode_path_witness(const PathWitness& w);
std::string encode_extremal_value(const ExtremalValue& v);
std::string encode_search_report(const SearchReport& r);
std::string encode_ramsey_report(const RamseyReport& r);
std::string encode_coloring(const TwoColoring& c);
TwoColoring decode_coloring(const std::string& text);

/// Sidecar for generated graphs: family, claimed count, verification flag.
std::string encode_construction_sidecar(const std::string& family, long long claimed_count,
                                        bool verified);

std::string pattern_spec_token(const PatternSpec& spec);
PatternSpec parse_pattern_spec_token(const std::string& token);

}  // namespace ordmatch
