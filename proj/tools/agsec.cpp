// agsec: attack-graph security investment tool.
// Subcommands: validate, paths, reduce, solve, intervene, cvss, casestudy.
// Exit codes: 0 success, 1 domain error (invalid graph, no path), 2 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "agsec/cvss.hpp"
#include "agsec/interventions.hpp"
#include "agsec/json_io.hpp"
#include "agsec/reduction.hpp"
#include "agsec/scenarios.hpp"
#include "agsec/solver.hpp"

namespace {

using namespace agsec;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

SolveMethod parse_method(const std::string& s) {
    if (s == "auto") return SolveMethod::Auto;
    if (s == "numeric") return SolveMethod::Numeric;
    if (s == "closed-form") return SolveMethod::ClosedForm;
    if (s == "grid") return SolveMethod::Grid;
    throw CLI::ValidationError("--method", "expected auto|numeric|closed-form|grid");
}

void emit(const nlohmann::json& j, const std::string& path) {
    if (path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(j, path);
}

void print_solve_report(const SolveReport& rep) {
    std::cout << "equilibrium loss: " << fmt(rep.equilibrium_loss) << "\n";
    std::cout << "investments:\n";
    for (const auto& [v, x] : rep.investments.x)
        std::cout << "  " << v << " = " << fmt(x) << "\n";
    std::cout << "attacker best response:";
    for (const auto& v : rep.active_paths.front()) std::cout << " " << v;
    std::cout << "\n";
}

double resolve_budget(const AttackGraph& g, std::optional<double> flag) {
    if (flag) return *flag;
    if (g.budget) return *g.budget;
    throw std::invalid_argument("no budget: pass --budget or set it in the graph file");
}

int run(int argc, char** argv) {
    CLI::App app{"Security-budget allocation on attack graphs"};
    app.require_subcommand(1);

    std::string graph_path, json_out, csv_out, map_out, out_path;
    std::optional<double> budget;
    std::string method = "auto";
    double tol = 1e-9;
    int max_iter = 200000;
    std::size_t path_cap = 1000000;

    auto* validate_cmd = app.add_subcommand("validate", "Check graph invariants");
    validate_cmd->add_option("graph", graph_path, "graph JSON file")->required();
    validate_cmd->add_option("--json-out", json_out, "write report JSON to file");

    auto* paths_cmd = app.add_subcommand("paths", "Enumerate entry-to-target paths");
    paths_cmd->add_option("graph", graph_path)->required();
    paths_cmd->add_option("--cap", path_cap, "path count guard");
    paths_cmd->add_option("--json-out", json_out);

    auto* reduce_cmd = app.add_subcommand("reduce", "Series/parallel reduction");
    reduce_cmd->add_option("graph", graph_path)->required();
    reduce_cmd->add_option("--out", out_path, "reduced graph output file");
    reduce_cmd->add_option("--map", map_out, "reduction map sidecar (default reduction_map.json)");

    auto* solve_cmd = app.add_subcommand("solve", "Optimal budget allocation");
    solve_cmd->add_option("graph", graph_path)->required();
    solve_cmd->add_option("--budget", budget, "security budget B");
    solve_cmd->add_option("--method", method, "auto|numeric|closed-form|grid");
    solve_cmd->add_option("--tol", tol, "relative objective tolerance");
    solve_cmd->add_option("--max-iter", max_iter, "iteration budget");
    solve_cmd->add_option("--json-out", json_out);

    auto* intervene_cmd = app.add_subcommand("intervene", "Evaluate a network redesign");
    std::string kind, node_id, anchor, anchor_to, join_a = "JA", join_b = "JB";
    double node_p0 = 0.0, node_loss = 0.0;
    std::optional<double> join_p0;
    intervene_cmd->add_option("graph", graph_path)->required();
    intervene_cmd->add_option("--kind", kind, "series|parallel|hybrid|entry")->required();
    intervene_cmd->add_option("--node-id", node_id, "id of the added node")->required();
    intervene_cmd->add_option("--p0", node_p0, "added node breach probability")->required();
    intervene_cmd->add_option("--loss", node_loss, "added node standalone loss")->required();
    intervene_cmd->add_option("--anchor", anchor, "anchor node (or edge source for series)")->required();
    intervene_cmd->add_option("--anchor-to", anchor_to, "edge destination (series only)");
    intervene_cmd->add_option("--join-a", join_a, "hybrid join node id");
    intervene_cmd->add_option("--join-b", join_b, "hybrid join node id");
    intervene_cmd->add_option("--join-p0", join_p0, "hybrid join breach probability");
    intervene_cmd->add_option("--budget", budget);
    intervene_cmd->add_option("--json-out", json_out);

    auto* cvss_cmd = app.add_subcommand("cvss", "CVSS v3 exploitability / impact");
    std::string av, ac, pr, ui, imc, imi, ima;
    cvss_cmd->add_option("--av", av, "N|A|L|P")->required();
    cvss_cmd->add_option("--ac", ac, "L|H")->required();
    cvss_cmd->add_option("--pr", pr, "N|L|H")->required();
    cvss_cmd->add_option("--ui", ui, "N|R")->required();
    cvss_cmd->add_option("--imc", imc, "H|L|N");
    cvss_cmd->add_option("--imi", imi, "H|L|N");
    cvss_cmd->add_option("--ima", ima, "H|L|N");

    auto* case_cmd = app.add_subcommand("casestudy", "Automotive case study scenarios");
    std::string scenario;
    double cs_budget = 10.0;
    double added_p0 = 0.207, added_loss_low = 1.0, added_loss_high = 10.0;
    case_cmd->add_option("--scenario", scenario, "base|entries|defenses|redundancy")->required();
    case_cmd->add_option("--budget", cs_budget);
    case_cmd->add_option("--csv", csv_out, "CSV output path");
    case_cmd->add_option("--json", json_out, "JSON output path");
    case_cmd->add_option("--added-p0", added_p0, "entries: added node p0");
    case_cmd->add_option("--added-loss-low", added_loss_low, "entries: Case IV loss");
    case_cmd->add_option("--added-loss-high", added_loss_high, "entries: Case V loss");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (*validate_cmd) {
            auto g = load_graph(graph_path);
            auto rep = validate(g);
            emit(validation_to_json(rep), json_out);
            return rep.valid() ? 0 : 1;
        }

        if (*paths_cmd) {
            auto g = load_graph(graph_path);
            auto paths = enumerate_paths(g, path_cap);
            if (!json_out.empty()) {
                emit(nlohmann::json{{"paths", paths}}, json_out);
            } else {
                for (const auto& p : paths) {
                    for (std::size_t i = 0; i < p.size(); ++i)
                        std::cout << (i ? " -> " : "") << p[i];
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*reduce_cmd) {
            auto g = load_graph(graph_path);
            auto [r, m] = reduce(g);
            emit(graph_to_json(r), out_path);
            write_json_file(reduction_map_to_json(m),
                            map_out.empty() ? "reduction_map.json" : map_out);
            return 0;
        }

        if (*solve_cmd) {
            auto g = load_graph(graph_path);
            SolveConfig cfg;
            cfg.method = parse_method(method);
            cfg.tolerance = tol;
            cfg.max_iterations = max_iter;
            auto rep = solve(g, resolve_budget(g, budget), cfg);
            if (!json_out.empty())
                write_json_file(solve_report_to_json(rep), json_out);
            else
                print_solve_report(rep);
            return 0;
        }

        if (*intervene_cmd) {
            auto g = load_graph(graph_path);
            InterventionSpec spec;
            if (kind == "series") spec.kind = InterventionKind::Series;
            else if (kind == "parallel") spec.kind = InterventionKind::Parallel;
            else if (kind == "hybrid") spec.kind = InterventionKind::Hybrid;
            else if (kind == "entry") spec.kind = InterventionKind::Entry;
            else {
                std::cerr << "--kind: expected series|parallel|hybrid|entry\n";
                return 2;
            }
            spec.new_id = node_id;
            spec.params = {node_p0, node_loss};
            spec.anchor = anchor;
            spec.anchor_u = anchor;
            spec.anchor_v = anchor_to;
            spec.join_a = join_a;
            spec.join_b = join_b;
            spec.join_p0 = join_p0;
            if (spec.kind == InterventionKind::Series && anchor_to.empty()) {
                std::cerr << "series intervention needs --anchor-to\n";
                return 2;
            }
            auto rep = evaluate_intervention(g, spec, resolve_budget(g, budget));
            nlohmann::json j{{"base_loss", rep.base_loss},
                             {"new_loss", rep.new_loss},
                             {"security_cost", rep.security_cost},
                             {"break_even_benefit", rep.break_even_benefit},
                             {"base_report", solve_report_to_json(rep.base_report)},
                             {"new_report", solve_report_to_json(rep.new_report)}};
            if (!json_out.empty()) {
                write_json_file(j, json_out);
            } else {
                std::cout << "base loss: " << fmt(rep.base_loss)
                          << "\nnew loss: " << fmt(rep.new_loss)
                          << "\nsecurity cost: " << fmt(rep.security_cost)
                          << "\nbreak-even benefit: " << fmt(rep.break_even_benefit) << "\n";
            }
            return 0;
        }

        if (*cvss_cmd) {
            CvssVector v;
            v.av = parse_av(av);
            v.ac = parse_ac(ac);
            v.pr = parse_pr(pr);
            v.ui = parse_ui(ui);
            double ex = exploitability(v);
            std::cout << "EX " << fmt(ex) << "\n";
            std::cout << "p0 " << fmt(p0_from_exploitability(ex)) << "\n";
            if (!imc.empty() && !imi.empty() && !ima.empty()) {
                v.im_c = parse_impact_level(imc);
                v.im_i = parse_impact_level(imi);
                v.im_a = parse_impact_level(ima);
                std::cout << "Im " << fmt(impact(v)) << "\n";
            }
            return 0;
        }

        if (*case_cmd) {
            ScenarioResult result;
            if (scenario == "base") {
                auto g = build_automotive_graph();
                auto rep = solve(g, cs_budget);
                print_solve_report(rep);
                if (!json_out.empty()) write_json_file(solve_report_to_json(rep), json_out);
                return 0;
            } else if (scenario == "entries") {
                EntryCasesConfig cfg;
                cfg.budget = cs_budget;
                cfg.added_p0 = added_p0;
                cfg.added_loss_low = added_loss_low;
                cfg.added_loss_high = added_loss_high;
                result = run_entry_cases(cfg);
            } else if (scenario == "defenses") {
                DefenseSweepConfig cfg;
                cfg.budget = cs_budget;
                result = run_defense_sweep(cfg);
            } else if (scenario == "redundancy") {
                RedundancySweepConfig cfg;
                cfg.budget = cs_budget;
                result = run_redundancy_sweep(cfg);
            } else {
                std::cerr << "--scenario: expected base|entries|defenses|redundancy\n";
                return 2;
            }

            if (!csv_out.empty()) {
                std::ofstream out(csv_out);
                if (!out) throw std::invalid_argument("cannot write '" + csv_out + "'");
                write_scenario_csv(result, out);
            } else if (json_out.empty()) {
                write_scenario_csv(result, std::cout);
            }
            if (!json_out.empty()) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& row : result.rows) {
                    nlohmann::json params = nlohmann::json::object();
                    for (const auto& [k, v2] : row.params) params[k] = v2;
                    rows.push_back(nlohmann::json{{"label", row.label},
                                                  {"params", params},
                                                  {"loss", row.loss},
                                                  {"investments", investment_to_json(row.investments)}});
                }
                write_json_file(nlohmann::json{{"family", result.family}, {"rows", rows}}, json_out);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
