#pragma once

#include "agsec/graph.hpp"

namespace agsec {

/// Nonnegative per-node security investment with a total budget B.
/// Nodes missing from x are treated as carrying zero investment.
struct InvestmentProfile {
    std::map<NodeId, double> x;
    double budget = 0.0;

    double at(const NodeId& v) const {
        auto it = x.find(v);
        return it == x.end() ? 0.0 : it->second;
    }
    double total() const;
    /// x >= 0 everywhere and sum(x) <= budget + 1e-9.
    bool feasible() const;
};

struct PathTerm {
    NodeId node;
    double cumulative_probability;  // prod of pass*exp(-x) up to and including this node
    double contribution;            // this node's loss term
};

struct PathLossBreakdown {
    AttackPath path;
    std::vector<PathTerm> terms;
    double total = 0.0;
};

/// Breach probability p0 * exp(-x). Throws on negative investment.
double breach_probability(const NodeParams& params, double x);

/// Expected loss along one path: node v_i contributes
/// lambda_i * exp(-x_i) * prod over strict predecessors u of pass_u * exp(-x_u),
/// which for plain nodes is L_i * prod_{j <= i} p_j(x_j).
PathLossBreakdown path_loss(const AttackGraph& g, const AttackPath& path,
                            const InvestmentProfile& inv);

struct SystemLoss {
    double loss = 0.0;
    std::vector<AttackPath> argmax_paths;  // all within 1e-12 of the max, lexicographic
};

/// Attacker's value: max over all entry-to-target paths of the path loss.
/// Throws std::domain_error when no path exists.
SystemLoss system_loss(const AttackGraph& g, const InvestmentProfile& inv);

/// Lexicographically-first maximizing path.
AttackPath attacker_best_response(const AttackGraph& g, const InvestmentProfile& inv);

}  // namespace agsec
