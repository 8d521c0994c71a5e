#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phigraph/claimlab.hpp"
#include "phigraph/graph.hpp"
#include "phigraph/numtheory.hpp"
#include "phigraph/setgraph.hpp"
#include "phigraph/solvers.hpp"

namespace phigraph {

/// Parses a rendered label: `v_5`, `v_{2,4}` or `v_{2,4}(15)`.
/// Throws UsageError on anything else.
Label parse_label(std::string_view text);

/// Graphviz DOT in canonical vertex order, LF line endings:
///
///   graph G {
///     "v_1";
///     "v_1" -- "v_5";
///   }
std::string to_dot(const Graph& g);

/// Reads the subset of DOT that to_dot writes (vertex and edge statements,
/// quoted labels). Throws UsageError on malformed input.
Graph parse_dot(std::string_view text);

/// {"labels": [...], "edges": [[u, v], ...]} with vertex indices.
std::string to_json(const Graph& g);
/// Adjacency listing, one vertex per line.
std::string to_table(const Graph& g);

/// `weight,multiplicity` rows in increasing weight order.
std::string to_csv(const WeightTable& table);

std::string phiset_text(const PhiContext& ctx);
std::string phiset_json(const PhiContext& ctx);

std::string invariants_text(const InvariantReport& report);
std::string invariants_json(const InvariantReport& report);

std::string report_json(const ClaimReport& report);
std::string reports_json(const std::vector<ClaimReport>& reports);
std::string report_table(const ClaimReport& report);
std::string reports_table(const std::vector<ClaimReport>& reports);

std::string claims_table(const std::vector<ClaimInfo>& claims);
std::string claims_json(const std::vector<ClaimInfo>& claims);

}  // namespace phigraph
