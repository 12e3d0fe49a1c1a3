#include "agsec/scenarios.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

#include "agsec/interventions.hpp"

namespace agsec {

AttackGraph build_automotive_graph() {
    AttackGraph g;
    g.nodes["CELL"] = {0.162, 1.0};
    g.nodes["TELE"] = {0.119, 10.0};
    g.nodes["WiFi"] = {0.207, 1.0};
    g.nodes["BT"] = {0.207, 1.0};
    g.nodes["USB"] = {0.067, 1.0};
    g.nodes["IVI"] = {0.119, 10.0};
    g.nodes["CG"] = {0.119, 50.0};
    g.nodes["CAN"] = {0.207, 100.0};
    g.edges = {{"CELL", "TELE"}, {"TELE", "IVI"}, {"WiFi", "IVI"}, {"BT", "IVI"},
               {"USB", "IVI"},  {"IVI", "CG"},   {"CG", "CAN"}};
    g.entries = {"CELL", "WiFi", "BT", "USB"};
    g.target = "CAN";
    g.budget = 10.0;
    return g;
}

namespace {

AttackGraph remove_node(AttackGraph g, const NodeId& v) {
    g.nodes.erase(v);
    g.entries.erase(v);
    for (auto it = g.edges.begin(); it != g.edges.end();)
        it = (it->first == v || it->second == v) ? g.edges.erase(it) : std::next(it);
    return g;
}

// Redirect all incoming edges of `v` through a fresh safeguard node.
AttackGraph insert_before(AttackGraph g, const NodeId& v, const NodeId& sec_id,
                          const NodeParams& sec) {
    if (!g.has_node(v) || g.entries.count(v))
        throw std::invalid_argument("insert_before: bad anchor '" + v + "'");
    g.nodes[sec_id] = sec;
    for (const auto& u : g.predecessors(v)) {
        g.edges.erase({u, v});
        g.edges.insert({u, sec_id});
    }
    g.edges.insert({sec_id, v});
    return g;
}

ScenarioRow make_row(std::string label, std::vector<std::pair<std::string, double>> params,
                     const SolveReport& rep) {
    ScenarioRow row;
    row.label = std::move(label);
    row.params = std::move(params);
    row.investments = rep.investments;
    row.loss = rep.equilibrium_loss;
    return row;
}

}  // namespace

ScenarioResult run_entry_cases(const EntryCasesConfig& cfg) {
    ScenarioResult out;
    out.family = "entries";
    AttackGraph base = build_automotive_graph();

    out.rows.push_back(make_row("I-base", {}, solve(base, cfg.budget, cfg.solve)));
    out.rows.push_back(make_row("II-no-mobile", {},
                                solve(remove_node(remove_node(base, "CELL"), "TELE"),
                                      cfg.budget, cfg.solve)));
    out.rows.push_back(make_row("III-no-usb", {},
                                solve(remove_node(base, "USB"), cfg.budget, cfg.solve)));

    for (auto [label, loss] :
         {std::pair<const char*, double>{"IV-added-entry-low-loss", cfg.added_loss_low},
          std::pair<const char*, double>{"V-added-entry-high-loss", cfg.added_loss_high}}) {
        InterventionSpec spec;
        spec.kind = InterventionKind::Entry;
        spec.new_id = "NEW";
        spec.params = {cfg.added_p0, loss};
        spec.anchor = cfg.attach_to;
        AttackGraph g = apply_intervention(base, spec);
        out.rows.push_back(make_row(label,
                                    {{"added_p0", cfg.added_p0}, {"added_loss", loss}},
                                    solve(g, cfg.budget, cfg.solve)));
    }
    return out;
}

ScenarioResult run_defense_sweep(const DefenseSweepConfig& cfg) {
    if (cfg.p_sec_grid.empty() || cfg.l_sec_grid.empty())
        throw std::invalid_argument("run_defense_sweep: empty grid");
    ScenarioResult out;
    out.family = "defenses";
    AttackGraph base = build_automotive_graph();
    out.rows.push_back(make_row("base", {{"p_sec", 0.0}, {"L_sec", 0.0}},
                                solve(base, cfg.budget, cfg.solve)));

    auto location_anchor = [](DefenseLocation loc) -> const char* {
        switch (loc) {
            case DefenseLocation::BeforeTele: return "TELE";
            case DefenseLocation::BeforeIvi: return "IVI";
            case DefenseLocation::BeforeCan: return "CAN";
        }
        throw std::invalid_argument("bad defense location");
    };

    for (auto loc : cfg.locations) {
        const std::string anchor = location_anchor(loc);
        for (double l_sec : cfg.l_sec_grid) {
            for (double p_sec : cfg.p_sec_grid) {
                if (p_sec < 0.0 || p_sec > 1.0)
                    throw std::invalid_argument("run_defense_sweep: p_sec outside [0,1]");
                AttackGraph g = insert_before(base, anchor, "SEC", {p_sec, l_sec});
                out.rows.push_back(make_row("before-" + anchor,
                                            {{"p_sec", p_sec}, {"L_sec", l_sec}},
                                            solve(g, cfg.budget, cfg.solve)));
            }
        }
    }
    return out;
}

AttackGraph build_redundancy_graph(const RedundancySweepConfig& cfg, std::size_t sensor_count) {
    if (sensor_count == 0 || sensor_count > cfg.sensor_p0.size())
        throw std::invalid_argument("build_redundancy_graph: bad sensor count");
    AttackGraph g;
    g.nodes["IVI"] = {cfg.entry_p0, cfg.entry_loss};
    g.nodes["CM"] = {cfg.control_p0, cfg.control_loss};
    g.nodes["CAN"] = {cfg.target_p0, cfg.target_loss};
    g.entries = {"IVI"};
    g.target = "CAN";
    g.budget = cfg.budget;
    g.edges.insert({"CM", "CAN"});

    // Each sensor branch runs through one zero-loss join node per *other*
    // sensor, so every path to the control module compounds all sensor
    // probabilities (the attacker has to defeat the full redundant set).
    for (std::size_t i = 0; i < sensor_count; ++i) {
        NodeId sensor = "S" + std::to_string(i + 1);
        g.nodes[sensor] = {cfg.sensor_p0[i], cfg.sensor_loss};
        g.edges.insert({"IVI", sensor});
        NodeId tail = sensor;
        for (std::size_t j = 0; j < sensor_count; ++j) {
            if (j == i) continue;
            NodeId join = "J" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            g.nodes[join] = {cfg.sensor_p0[j], 0.0};
            g.edges.insert({tail, join});
            tail = join;
        }
        g.edges.insert({tail, "CM"});
    }
    return g;
}

ScenarioResult run_redundancy_sweep(const RedundancySweepConfig& cfg) {
    if (cfg.sensor_p0.empty())
        throw std::invalid_argument("run_redundancy_sweep: need at least the base sensor");
    ScenarioResult out;
    out.family = "redundancy";
    for (std::size_t n = 1; n <= cfg.sensor_p0.size(); ++n) {
        AttackGraph g = build_redundancy_graph(cfg, n);
        auto rep = solve(g, cfg.budget, cfg.solve);
        out.rows.push_back(make_row(std::to_string(n - 1) + "-redundant",
                                    {{"redundancy", double(n - 1)},
                                     {"added_sensor_p0", n > 1 ? cfg.sensor_p0[n - 1] : 0.0}},
                                    rep));
    }
    return out;
}

void write_scenario_csv(const ScenarioResult& result, std::ostream& os) {
    std::vector<std::string> param_cols;
    std::set<NodeId> inv_nodes;
    for (const auto& row : result.rows) {
        for (const auto& [k, _] : row.params)
            if (std::find(param_cols.begin(), param_cols.end(), k) == param_cols.end())
                param_cols.push_back(k);
        for (const auto& [v, _] : row.investments.x) inv_nodes.insert(v);
    }

    os << "case,label";
    for (const auto& k : param_cols) os << "," << k;
    os << ",loss";
    for (const auto& v : inv_nodes) os << ",x_" << v;
    os << "\n";

    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return std::string(buf);
    };
    for (const auto& row : result.rows) {
        os << result.family << "," << row.label;
        for (const auto& k : param_cols) {
            os << ",";
            for (const auto& [pk, pv] : row.params)
                if (pk == k) {
                    os << num(pv);
                    break;
                }
        }
        os << "," << num(row.loss);
        for (const auto& v : inv_nodes) os << "," << num(row.investments.at(v));
        os << "\n";
    }
}

}  // namespace agsec
