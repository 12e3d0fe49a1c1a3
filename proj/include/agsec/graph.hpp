#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace agsec {

/// Short string identifier of an asset, e.g. "CELL" or "IVI".
using NodeId = std::string;

/// Per-node game parameters. A plain node carries its baseline breach
/// probability p0 and standalone loss. Nodes produced by series collapse
/// additionally carry an explicit loss coefficient (the node's own loss
/// contribution with all internal baseline probabilities baked in) and a
/// pass-through probability used for downstream terms.
struct NodeParams {
    double p0 = 0.0;
    double loss = 0.0;
    std::optional<double> loss_coeff;
    std::optional<double> pass_through;

    /// Own-loss coefficient: p0*loss for a plain node.
    double lambda() const { return loss_coeff ? *loss_coeff : p0 * loss; }
    /// Probability factor propagated to path successors: p0 for a plain node.
    double pass() const { return pass_through ? *pass_through : p0; }
    bool is_merged() const { return loss_coeff.has_value() || pass_through.has_value(); }
};

/// Ordered node sequence from an entry node to the target.
using AttackPath = std::vector<NodeId>;

/// Directed acyclic attack graph with entry set and a unique target.
/// Immutable by convention after construction; all operations are pure.
struct AttackGraph {
    std::map<NodeId, NodeParams> nodes;
    std::set<std::pair<NodeId, NodeId>> edges;
    std::set<NodeId> entries;
    NodeId target;
    std::optional<double> budget;

    bool has_node(const NodeId& v) const { return nodes.count(v) != 0; }
    bool has_edge(const NodeId& u, const NodeId& v) const { return edges.count({u, v}) != 0; }

    /// Direct successors/predecessors, sorted by id.
    std::vector<NodeId> successors(const NodeId& v) const;
    std::vector<NodeId> predecessors(const NodeId& v) const;
    std::size_t in_degree(const NodeId& v) const;
    std::size_t out_degree(const NodeId& v) const;
};

enum class Severity { Error, Warning };

struct Violation {
    Severity severity = Severity::Error;
    std::string code;     // "cycle", "dangling-edge", "bad-target", ...
    std::string message;  // human-readable, names the offending nodes/edges
};

/// Violations are data, not failures: validate never throws.
struct ValidationReport {
    std::vector<Violation> items;

    bool valid() const;  // no errors (warnings allowed)
    bool empty() const { return items.empty(); }
    bool has_code(const std::string& code) const;
};

ValidationReport validate(const AttackGraph& g);

/// All ancestors of v (transitive, excluding v). Throws std::invalid_argument
/// on an unknown node id.
std::set<NodeId> pre_set(const AttackGraph& g, const NodeId& v);

/// All descendants of v (transitive, excluding v).
std::set<NodeId> post_set(const AttackGraph& g, const NodeId& v);

/// All simple entry-to-target paths in lexicographic order of the node-id
/// sequence. Throws std::runtime_error when the count exceeds `cap` (the
/// graph needs reduction first).
std::vector<AttackPath> enumerate_paths(const AttackGraph& g, std::size_t cap = 1000000);

/// True when `path` re-walks existing edges from an entry to the target
/// without repeats.
bool is_valid_path(const AttackGraph& g, const AttackPath& path);

}  // namespace agsec
