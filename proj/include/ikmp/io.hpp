// io.hpp
//
// Graph text format:
//     p <n> <m>
//     e <u> <v>        (m lines, 0-based, u < v, lexicographic order)
//
// JSON shapes:
//     fault set    {"vertices":[...],"edges":[[u,v],...]}
//     assignment   {"k":3,"values":{"u-v":2,...}}
//     labels       {"0":[1,2],"1":[1,3],...}

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ikmp/generators.hpp"
#include "ikmp/graph.hpp"
#include "ikmp/ikm.hpp"
#include "ikmp/preclusion.hpp"

namespace ikmp {

/// Serializes with dense indices; labels are not written.
std::string write_graph(const Graph& g);
void write_graph(std::ostream& os, const Graph& g);

/// Parses the text format. Blank lines and lines starting with 'c' are
/// skipped. Throws InputError with the offending line number.
Graph read_graph(std::istream& is);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

nlohmann::json fault_set_to_json(const FaultSet& f);
FaultSet fault_set_from_json(const nlohmann::json& j);

/// Keys use vertex labels.
nlohmann::json assignment_to_json(const Graph& g, const IntegerKMatching& m);
/// Every edge of g must appear exactly once.
IntegerKMatching assignment_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json labels_to_json(const ArrangementGraph& a);

nlohmann::json certificate_to_json(const Lemma41Certificate& c);

/// Result record without the graph and timing fields.
nlohmann::json result_to_json(const PreclusionQuery& q, const PreclusionResult& r);

}  // namespace ikmp
