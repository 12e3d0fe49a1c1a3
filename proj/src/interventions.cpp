#include "agsec/interventions.hpp"

#include <stdexcept>

namespace agsec {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument("apply_intervention: " + msg);
}

}  // namespace

AttackGraph apply_intervention(const AttackGraph& g, const InterventionSpec& spec) {
    require(!spec.new_id.empty(), "new node id is empty");
    require(!g.has_node(spec.new_id), "node id '" + spec.new_id + "' already in use");

    AttackGraph r = g;
    r.nodes[spec.new_id] = spec.params;

    switch (spec.kind) {
        case InterventionKind::Series: {
            require(g.has_edge(spec.anchor_u, spec.anchor_v),
                    "series anchor edge " + spec.anchor_u + "->" + spec.anchor_v + " not in graph");
            r.edges.erase({spec.anchor_u, spec.anchor_v});
            r.edges.insert({spec.anchor_u, spec.new_id});
            r.edges.insert({spec.new_id, spec.anchor_v});
            break;
        }
        case InterventionKind::Parallel: {
            require(g.has_node(spec.anchor), "parallel anchor '" + spec.anchor + "' not in graph");
            require(spec.anchor != g.target, "cannot mirror the target");
            for (const auto& u : g.predecessors(spec.anchor)) r.edges.insert({u, spec.new_id});
            for (const auto& w : g.successors(spec.anchor)) r.edges.insert({spec.new_id, w});
            if (g.entries.count(spec.anchor)) r.entries.insert(spec.new_id);
            break;
        }
        case InterventionKind::Hybrid: {
            require(g.has_node(spec.anchor), "hybrid anchor '" + spec.anchor + "' not in graph");
            require(spec.anchor != g.target, "cannot mirror the target");
            require(!spec.join_a.empty() && !spec.join_b.empty(), "hybrid needs two join node ids");
            require(!g.has_node(spec.join_a) && !g.has_node(spec.join_b) &&
                        spec.join_a != spec.new_id && spec.join_b != spec.new_id &&
                        spec.join_a != spec.join_b,
                    "join node ids must be fresh and distinct");
            NodeParams join;
            join.p0 = spec.join_p0.value_or(g.nodes.at(spec.anchor).p0);
            join.loss = 0.0;
            r.nodes[spec.join_a] = join;
            r.nodes[spec.join_b] = join;
            // Mirror the anchor, then route both branches through their own
            // zero-loss join node into the anchor's original successors.
            for (const auto& u : g.predecessors(spec.anchor)) r.edges.insert({u, spec.new_id});
            if (g.entries.count(spec.anchor)) r.entries.insert(spec.new_id);
            for (const auto& w : g.successors(spec.anchor)) {
                r.edges.erase({spec.anchor, w});
                r.edges.insert({spec.join_a, w});
                r.edges.insert({spec.join_b, w});
            }
            r.edges.insert({spec.anchor, spec.join_a});
            r.edges.insert({spec.new_id, spec.join_b});
            break;
        }
        case InterventionKind::Entry: {
            require(g.has_node(spec.anchor), "entry anchor '" + spec.anchor + "' not in graph");
            r.edges.insert({spec.new_id, spec.anchor});
            r.entries.insert(spec.new_id);
            break;
        }
    }

    if (!validate(r).valid())
        throw std::invalid_argument("apply_intervention: redesigned graph fails validation");
    return r;
}

InterventionReport evaluate_intervention(const AttackGraph& g, const InterventionSpec& spec,
                                         double budget, const SolveConfig& config) {
    InterventionReport rep;
    AttackGraph redesigned = apply_intervention(g, spec);
    rep.base_report = solve(g, budget, config);
    rep.new_report = solve(redesigned, budget, config);
    rep.base_loss = rep.base_report.equilibrium_loss;
    rep.new_loss = rep.new_report.equilibrium_loss;
    rep.security_cost = rep.new_loss - rep.base_loss;
    rep.break_even_benefit = std::max(0.0, rep.security_cost);
    return rep;
}

}  // namespace agsec
