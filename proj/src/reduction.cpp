#include "agsec/reduction.hpp"

#include <stdexcept>

namespace agsec {

ReductionMap ReductionMap::identity(const AttackGraph& g) {
    ReductionMap m;
    for (const auto& [id, _] : g.nodes) m.groups[id] = {id};
    return m;
}

ReductionMap ReductionMap::then(const ReductionMap& next) const {
    auto expand = [&](const std::vector<NodeId>& ids) {
        std::vector<NodeId> out;
        for (const auto& id : ids) {
            const auto& originals = groups.at(id);
            out.insert(out.end(), originals.begin(), originals.end());
        }
        return out;
    };
    ReductionMap m;
    for (const auto& [rid, ids] : next.groups) m.groups[rid] = expand(ids);
    m.pruned = pruned;
    for (const auto& frag : next.pruned) m.pruned.push_back(expand(frag));
    return m;
}

namespace {

void require_valid(const AttackGraph& g, const char* op) {
    if (!validate(g).valid()) throw std::invalid_argument(std::string(op) + ": invalid graph");
}

void set_merged_params(NodeParams& np, double lam, double pass) {
    np.loss_coeff = lam;
    np.pass_through = pass;
    np.p0 = pass;
    np.loss = pass > 0.0 ? lam / pass : 0.0;
}

}  // namespace

std::pair<AttackGraph, ReductionMap> collapse_series(const AttackGraph& g) {
    require_valid(g, "collapse_series");
    AttackGraph r = g;
    ReductionMap map = ReductionMap::identity(g);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : r.edges) {
            const NodeId& u = e.first;
            const NodeId& v = e.second;
            if (u == r.target || v == r.target) continue;
            if (r.out_degree(u) != 1 || r.in_degree(v) != 1) continue;

            const NodeParams& pu = r.nodes.at(u);
            const NodeParams& pv = r.nodes.at(v);
            double lam = pu.lambda() + pu.pass() * pv.lambda();
            double pass = pu.pass() * pv.pass();

            auto v_out = r.successors(v);
            r.edges.erase({u, v});
            for (const auto& w : v_out) {
                r.edges.erase({v, w});
                r.edges.insert({u, w});
            }
            r.nodes.erase(v);
            set_merged_params(r.nodes.at(u), lam, pass);

            auto& grp = map.groups.at(u);
            auto& tail = map.groups.at(v);
            grp.insert(grp.end(), tail.begin(), tail.end());
            map.groups.erase(v);

            changed = true;
            break;  // edge set mutated; restart the scan
        }
    }
    return {r, map};
}

std::pair<AttackGraph, ReductionMap> prune_parallel(const AttackGraph& g) {
    require_valid(g, "prune_parallel");
    AttackGraph r = g;
    ReductionMap map = ReductionMap::identity(g);

    // Group strictly parallel middles by (origin, terminus).
    std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>> parallel;
    for (const auto& [j, _] : r.nodes) {
        if (j == r.target || r.entries.count(j)) continue;
        auto preds = r.predecessors(j);
        auto succs = r.successors(j);
        if (preds.size() == 1 && succs.size() == 1)
            parallel[{preds.front(), succs.front()}].push_back(j);
    }

    for (const auto& [ik, middles] : parallel) {
        if (middles.size() < 2) continue;
        const NodeParams& pk = r.nodes.at(ik.second);
        NodeId best = middles.front();
        double best_score = -1.0;
        for (const auto& j : middles) {  // sorted: strict '>' keeps smallest id on ties
            const NodeParams& pj = r.nodes.at(j);
            double score = pj.lambda() + pj.pass() * pk.lambda();
            if (score > best_score) {
                best_score = score;
                best = j;
            }
        }
        for (const auto& j : middles) {
            if (j == best) continue;
            r.edges.erase({ik.first, j});
            r.edges.erase({j, ik.second});
            r.nodes.erase(j);
            map.pruned.push_back(map.groups.at(j));
            map.groups.erase(j);
        }
    }
    return {r, map};
}

std::pair<AttackGraph, ReductionMap> reduce(const AttackGraph& g) {
    AttackGraph r = g;
    ReductionMap map = ReductionMap::identity(g);
    for (std::size_t round = 0; round <= g.nodes.size() + 1; ++round) {
        auto [gs, ms] = collapse_series(r);
        bool series_changed = gs.nodes.size() != r.nodes.size();
        r = std::move(gs);
        map = map.then(ms);

        auto [gp, mp] = prune_parallel(r);
        bool parallel_changed = gp.nodes.size() != r.nodes.size();
        r = std::move(gp);
        map = map.then(mp);

        if (!series_changed && !parallel_changed) break;
    }
    return {r, map};
}

InvestmentProfile expand_investment(const ReductionMap& map, const InvestmentProfile& reduced_inv) {
    InvestmentProfile out;
    out.budget = reduced_inv.budget;
    for (const auto& [rid, originals] : map.groups)
        for (const auto& o : originals) out.x[o] = 0.0;
    for (const auto& frag : map.pruned)
        for (const auto& o : frag) out.x[o] = 0.0;
    for (const auto& [rid, val] : reduced_inv.x) {
        auto it = map.groups.find(rid);
        if (it == map.groups.end())
            throw std::invalid_argument("expand_investment: node '" + rid + "' not in reduction map");
        out.x[it->second.front()] = val;  // stretch head carries the whole investment
    }
    return out;
}

}  // namespace agsec
