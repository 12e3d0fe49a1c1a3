#include "agsec/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace agsec {

std::vector<NodeId> AttackGraph::successors(const NodeId& v) const {
    std::vector<NodeId> out;
    for (const auto& e : edges)
        if (e.first == v) out.push_back(e.second);
    return out;  // set iteration order is already sorted
}

std::vector<NodeId> AttackGraph::predecessors(const NodeId& v) const {
    std::vector<NodeId> in;
    for (const auto& e : edges)
        if (e.second == v) in.push_back(e.first);
    return in;
}

std::size_t AttackGraph::in_degree(const NodeId& v) const { return predecessors(v).size(); }
std::size_t AttackGraph::out_degree(const NodeId& v) const { return successors(v).size(); }

bool ValidationReport::valid() const {
    return std::none_of(items.begin(), items.end(),
                        [](const Violation& v) { return v.severity == Severity::Error; });
}

bool ValidationReport::has_code(const std::string& code) const {
    return std::any_of(items.begin(), items.end(),
                       [&](const Violation& v) { return v.code == code; });
}

namespace {

bool has_cycle(const AttackGraph& g, std::vector<NodeId>* cycle_nodes) {
    enum { White, Gray, Black };
    std::map<NodeId, int> color;
    for (const auto& [id, _] : g.nodes) color[id] = White;

    std::function<bool(const NodeId&)> dfs = [&](const NodeId& u) {
        color[u] = Gray;
        for (const auto& v : g.successors(u)) {
            if (!g.has_node(v)) continue;
            if (color[v] == Gray) {
                cycle_nodes->push_back(v);
                return true;
            }
            if (color[v] == White && dfs(v)) return true;
        }
        color[u] = Black;
        return false;
    };
    for (const auto& [id, _] : g.nodes)
        if (color[id] == White && dfs(id)) return true;
    return false;
}

std::set<NodeId> closure(const AttackGraph& g, const NodeId& start, bool forward) {
    std::set<NodeId> seen;
    std::vector<NodeId> stack{start};
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        auto next = forward ? g.successors(u) : g.predecessors(u);
        for (const auto& v : next)
            if (seen.insert(v).second) stack.push_back(v);
    }
    seen.erase(start);
    return seen;
}

}  // namespace

ValidationReport validate(const AttackGraph& g) {
    ValidationReport rep;
    auto add = [&](Severity s, std::string code, std::string msg) {
        rep.items.push_back({s, std::move(code), std::move(msg)});
    };

    for (const auto& e : g.edges)
        if (!g.has_node(e.first) || !g.has_node(e.second))
            add(Severity::Error, "dangling-edge",
                "edge " + e.first + "->" + e.second + " references an unknown node");

    std::vector<NodeId> cyc;
    if (has_cycle(g, &cyc))
        add(Severity::Error, "cycle", "directed cycle through node " + (cyc.empty() ? "?" : cyc.front()));

    if (g.target.empty() || !g.has_node(g.target)) {
        add(Severity::Error, "bad-target", "target '" + g.target + "' is missing from the node set");
    } else if (g.nodes.at(g.target).loss <= 0.0 && g.nodes.at(g.target).lambda() <= 0.0) {
        add(Severity::Error, "target-loss", "target " + g.target + " must have positive loss");
    }

    if (g.entries.empty()) add(Severity::Error, "no-entries", "entry set is empty");

    bool structurally_ok = rep.valid();
    for (const auto& s : g.entries) {
        if (!g.has_node(s)) {
            add(Severity::Error, "entry-unknown", "entry '" + s + "' is missing from the node set");
            continue;
        }
        if (g.in_degree(s) > 0)
            add(Severity::Error, "entry-in-degree", "entry " + s + " has incoming edges");
        if (structurally_ok && g.has_node(g.target) && s != g.target) {
            auto reach = closure(g, s, /*forward=*/true);
            if (!reach.count(g.target))
                add(Severity::Warning, "entry-no-path", "entry " + s + " has no path to the target");
        }
    }

    if (structurally_ok && g.has_node(g.target)) {
        auto anc = closure(g, g.target, /*forward=*/false);
        for (const auto& [id, _] : g.nodes) {
            if (id == g.target || g.entries.count(id)) continue;
            bool reaches_target = anc.count(id) != 0;
            bool reached = false;
            for (const auto& s : g.entries) {
                if (!g.has_node(s)) continue;
                if (closure(g, s, true).count(id)) {
                    reached = true;
                    break;
                }
            }
            if (!reaches_target)
                add(Severity::Warning, "no-path-to-target", "node " + id + " cannot reach the target");
            else if (!reached)
                add(Severity::Warning, "unreachable", "node " + id + " is unreachable from every entry");
        }
    }

    return rep;
}

std::set<NodeId> pre_set(const AttackGraph& g, const NodeId& v) {
    if (!g.has_node(v)) throw std::invalid_argument("pre_set: unknown node '" + v + "'");
    return closure(g, v, /*forward=*/false);
}

std::set<NodeId> post_set(const AttackGraph& g, const NodeId& v) {
    if (!g.has_node(v)) throw std::invalid_argument("post_set: unknown node '" + v + "'");
    return closure(g, v, /*forward=*/true);
}

std::vector<AttackPath> enumerate_paths(const AttackGraph& g, std::size_t cap) {
    std::vector<AttackPath> out;
    AttackPath current;

    std::function<void(const NodeId&)> dfs = [&](const NodeId& u) {
        current.push_back(u);
        if (u == g.target) {
            if (out.size() >= cap)
                throw std::runtime_error("enumerate_paths: path count exceeds cap; reduce the graph first");
            out.push_back(current);
        } else {
            for (const auto& v : g.successors(u)) dfs(v);
        }
        current.pop_back();
    };
    // entries is an ordered set and successors are sorted, so DFS emits
    // paths in lexicographic order of the node-id sequence.
    for (const auto& s : g.entries)
        if (g.has_node(s)) dfs(s);
    return out;
}

bool is_valid_path(const AttackGraph& g, const AttackPath& path) {
    if (path.empty()) return false;
    if (!g.entries.count(path.front()) || path.back() != g.target) return false;
    std::set<NodeId> seen;
    for (const auto& v : path)
        if (!g.has_node(v) || !seen.insert(v).second) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

}  // namespace agsec
