#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "agsec/graph.hpp"
#include "agsec/loss.hpp"
#include "agsec/reduction.hpp"
#include "agsec/solver.hpp"

namespace agsec {

/// Graph file schema (JSON, UTF-8):
///   {"nodes":[{"id":"CELL","p0":0.162,"loss":1.0,
///              "cvss":{"av":"N","ac":"H","pr":"L","ui":"N"},"asil":"QM"}],
///    "edges":[["CELL","TELE"],...],
///    "entries":["CELL",...],"target":"CAN","budget":10.0}
/// Explicit p0 overrides the cvss-derived value; explicit loss overrides the
/// asil-derived one. An optional top-level "asil_losses" object overrides the
/// default rating-to-loss table. Throws std::invalid_argument on schema
/// errors.
AttackGraph graph_from_json(const nlohmann::json& j);
AttackGraph load_graph(const std::string& path);

nlohmann::json graph_to_json(const AttackGraph& g);
nlohmann::json reduction_map_to_json(const ReductionMap& m);
nlohmann::json investment_to_json(const InvestmentProfile& inv);
nlohmann::json solve_report_to_json(const SolveReport& rep);
nlohmann::json validation_to_json(const ValidationReport& rep);
nlohmann::json breakdown_to_json(const PathLossBreakdown& b);

void write_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace agsec
