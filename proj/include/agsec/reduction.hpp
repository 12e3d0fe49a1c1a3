#pragma once

#include "agsec/graph.hpp"
#include "agsec/loss.hpp"

namespace agsec {

/// Book-keeping for mapping investments between an original graph and its
/// reduction. Every original node appears either in exactly one group
/// (reduced id -> ordered originals, stretch head first) or in a pruned
/// fragment.
struct ReductionMap {
    std::map<NodeId, std::vector<NodeId>> groups;
    std::vector<std::vector<NodeId>> pruned;

    static ReductionMap identity(const AttackGraph& g);
    /// Composition: this map followed by `next` (whose originals are this
    /// map's reduced ids).
    ReductionMap then(const ReductionMap& next) const;
};

/// Merge every maximal series stretch (out-degree-1 head followed by
/// in-degree-1 nodes, target excluded) into one equivalent node kept at the
/// head's position. The merged node carries
///   loss_coeff   = sum_l lambda_l * prod_{t<l} pass_t
///   pass_through = prod_l pass_l
/// over the stretch. Throws on an invalid graph.
std::pair<AttackGraph, ReductionMap> collapse_series(const AttackGraph& g);

/// For every group of strictly parallel two-hop paths v_i -> v_j -> v_k
/// (middles with in/out neighborhood exactly {v_i}/{v_k}), keep only the
/// middle maximizing lambda_j + pass_j * lambda_k; ties go to the smallest
/// id. Intended for series-collapsed graphs.
std::pair<AttackGraph, ReductionMap> prune_parallel(const AttackGraph& g);

/// Alternate series collapse and parallel pruning to a fixpoint, composing
/// the maps. The result is game-equivalent to the input: same optimal
/// investments (under expand_investment) and the same equilibrium loss.
std::pair<AttackGraph, ReductionMap> reduce(const AttackGraph& g);

/// Map an investment profile on the reduced graph back to the original:
/// each group's investment goes entirely to the stretch head, everything
/// else (tails, pruned nodes) gets zero. Budget is preserved.
InvestmentProfile expand_investment(const ReductionMap& map, const InvestmentProfile& reduced_inv);

}  // namespace agsec
