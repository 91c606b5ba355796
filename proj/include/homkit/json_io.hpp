#pragma once

#include <json.hpp>

#include "homkit/chain.hpp"
#include "homkit/collapse.hpp"
#include "homkit/covering.hpp"
#include "homkit/graph.hpp"
#include "homkit/nerve.hpp"

namespace homkit {

// All CLI-facing JSON uses insertion-ordered objects so that identical inputs
// produce byte-identical documents.
using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g);
Json mask_json(const Graph& g, VertexMask m);           // sorted label array
Json covering_json(const Graph& g, const Covering& c);  // array of label arrays
Json assignment_json(const Graph& g, const MultiHom& c);
Json verdict_json(const ConnectivityVerdict& v);  // level "inf" when infinite
Json homology_json(const HomologyReport& r);
Json trace_steps_json(const Graph& g, const CollapseTrace& t);
Json theorem_report_json(const TheoremReport& r);

std::string connectivity_level_text(int level);

}  // namespace homkit
