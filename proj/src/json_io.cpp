#include "agsec/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "agsec/cvss.hpp"

namespace agsec {

using nlohmann::json;

namespace {

std::string method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::Auto: return "auto";
        case SolveMethod::Numeric: return "numeric";
        case SolveMethod::ClosedForm: return "closed-form";
        case SolveMethod::Grid: return "grid";
    }
    return "?";
}

}  // namespace

AttackGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("target"))
        throw std::invalid_argument("graph json: expected object with 'nodes' and 'target'");

    std::map<AsilLevel, double> asil_losses = default_asil_losses();
    if (j.contains("asil_losses"))
        for (const auto& [k, v] : j.at("asil_losses").items())
            asil_losses[parse_asil(k)] = v.get<double>();

    AttackGraph g;
    for (const auto& jn : j.at("nodes")) {
        NodeId id = jn.at("id").get<std::string>();
        if (id.empty()) throw std::invalid_argument("graph json: empty node id");
        if (g.has_node(id)) throw std::invalid_argument("graph json: duplicate node id '" + id + "'");

        NodeParams np;
        if (jn.contains("p0")) {
            np.p0 = jn.at("p0").get<double>();
        } else if (jn.contains("cvss")) {
            const auto& c = jn.at("cvss");
            CvssVector v;
            v.av = parse_av(c.at("av").get<std::string>());
            v.ac = parse_ac(c.at("ac").get<std::string>());
            v.pr = parse_pr(c.at("pr").get<std::string>());
            v.ui = parse_ui(c.at("ui").get<std::string>());
            np.p0 = p0_from_exploitability(exploitability(v));
        } else {
            throw std::invalid_argument("graph json: node '" + id + "' needs 'p0' or 'cvss'");
        }
        if (np.p0 < 0.0 || np.p0 > 1.0)
            throw std::invalid_argument("graph json: node '" + id + "' p0 outside [0,1]");

        if (jn.contains("loss"))
            np.loss = jn.at("loss").get<double>();
        else if (jn.contains("asil"))
            np.loss = loss_from_asil(parse_asil(jn.at("asil").get<std::string>()), asil_losses);
        else
            throw std::invalid_argument("graph json: node '" + id + "' needs 'loss' or 'asil'");
        if (np.loss < 0.0) throw std::invalid_argument("graph json: node '" + id + "' loss < 0");

        if (jn.contains("loss_coeff")) np.loss_coeff = jn.at("loss_coeff").get<double>();
        if (jn.contains("pass_through")) np.pass_through = jn.at("pass_through").get<double>();
        g.nodes[id] = np;
    }

    for (const auto& je : j.value("edges", json::array())) {
        if (!je.is_array() || je.size() != 2)
            throw std::invalid_argument("graph json: edges must be [from, to] pairs");
        g.edges.insert({je.at(0).get<std::string>(), je.at(1).get<std::string>()});
    }
    for (const auto& js : j.value("entries", json::array()))
        g.entries.insert(js.get<std::string>());
    g.target = j.at("target").get<std::string>();
    if (j.contains("budget")) g.budget = j.at("budget").get<double>();
    return g;
}

AttackGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("graph file '" + path + "': " + e.what());
    }
    return graph_from_json(j);
}

json graph_to_json(const AttackGraph& g) {
    json nodes = json::array();
    for (const auto& [id, np] : g.nodes) {
        json jn{{"id", id}, {"p0", np.p0}, {"loss", np.loss}};
        if (np.loss_coeff) jn["loss_coeff"] = *np.loss_coeff;
        if (np.pass_through) jn["pass_through"] = *np.pass_through;
        nodes.push_back(jn);
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(json::array({e.first, e.second}));
    json j{{"nodes", nodes},
           {"edges", edges},
           {"entries", std::vector<NodeId>(g.entries.begin(), g.entries.end())},
           {"target", g.target}};
    if (g.budget) j["budget"] = *g.budget;
    return j;
}

json reduction_map_to_json(const ReductionMap& m) {
    json groups = json::object();
    for (const auto& [rid, originals] : m.groups) groups[rid] = originals;
    return json{{"groups", groups}, {"pruned", m.pruned}};
}

json investment_to_json(const InvestmentProfile& inv) {
    json x = json::object();
    for (const auto& [v, val] : inv.x) x[v] = val;
    return json{{"x", x}, {"budget", inv.budget}};
}

json solve_report_to_json(const SolveReport& rep) {
    return json{{"investments", investment_to_json(rep.investments)},
                {"equilibrium_loss", rep.equilibrium_loss},
                {"active_paths", rep.active_paths},
                {"method", method_name(rep.method_used)},
                {"iterations", rep.iterations},
                {"converged", rep.converged}};
}

json validation_to_json(const ValidationReport& rep) {
    json items = json::array();
    for (const auto& v : rep.items)
        items.push_back(json{{"severity", v.severity == Severity::Error ? "error" : "warning"},
                             {"code", v.code},
                             {"message", v.message}});
    return json{{"valid", rep.valid()}, {"violations", items}};
}

json breakdown_to_json(const PathLossBreakdown& b) {
    json terms = json::array();
    for (const auto& t : b.terms)
        terms.push_back(json{{"node", t.node},
                             {"cumulative_probability", t.cumulative_probability},
                             {"contribution", t.contribution}});
    return json{{"path", b.path}, {"terms", terms}, {"total", b.total}};
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace agsec
