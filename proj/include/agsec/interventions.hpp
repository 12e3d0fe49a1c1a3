#pragma once

#include "agsec/graph.hpp"
#include "agsec/solver.hpp"

namespace agsec {

enum class InterventionKind { Series, Parallel, Hybrid, Entry };

/// Where and how a new node enters the graph:
///  - Series: new node splices into the edge (anchor_u, anchor_v).
///  - Parallel: new node mirrors `anchor`'s in/out edges.
///  - Hybrid: mirrored node plus two zero-loss join nodes in series after
///    each branch, both joins feeding the branches' common successors.
///  - Entry: new in-degree-0 node with an edge to `anchor`, added to entries.
struct InterventionSpec {
    InterventionKind kind = InterventionKind::Series;
    NodeId new_id;
    NodeParams params;
    NodeId anchor_u, anchor_v;  // series edge
    NodeId anchor;              // parallel / hybrid / entry
    NodeId join_a, join_b;      // hybrid join node ids
    std::optional<double> join_p0;  // default: the anchor's p0
};

struct InterventionReport {
    double base_loss = 0.0;
    double new_loss = 0.0;
    double security_cost = 0.0;        // new_loss - base_loss
    double break_even_benefit = 0.0;   // max(0, security_cost)
    SolveReport base_report;
    SolveReport new_report;
};

/// Returns the redesigned graph. Throws std::invalid_argument on a malformed
/// spec or when the result fails validation.
AttackGraph apply_intervention(const AttackGraph& g, const InterventionSpec& spec);

/// Solves both graphs (closed form when the topology matches, numeric
/// otherwise) and fills the cost/benefit report.
InterventionReport evaluate_intervention(const AttackGraph& g, const InterventionSpec& spec,
                                         double budget, const SolveConfig& config = {});

}  // namespace agsec
