#pragma once

#include <string>
#include <vector>

#include "agsec/graph.hpp"
#include "agsec/solver.hpp"

namespace agsec {

/// The automotive case study: CAN access via the infotainment module.
/// Eight nodes, four attack paths, entries {BT, CELL, USB, WiFi}, target CAN.
AttackGraph build_automotive_graph();

struct ScenarioRow {
    std::string label;
    std::vector<std::pair<std::string, double>> params;  // family-specific columns
    InvestmentProfile investments;
    double loss = 0.0;
};

struct ScenarioResult {
    std::string family;
    std::vector<ScenarioRow> rows;
};

struct EntryCasesConfig {
    double budget = 10.0;
    double added_p0 = 0.207;       // WiFi-like accessibility
    double added_loss_low = 1.0;   // Case IV
    double added_loss_high = 10.0; // Case V
    NodeId attach_to = "IVI";
    SolveConfig solve;
};

/// Cases I-V: base / no mobile communication (CELL+TELE removed) /
/// no physical access (USB removed) / one added entry with low / high
/// standalone loss.
ScenarioResult run_entry_cases(const EntryCasesConfig& cfg);

enum class DefenseLocation { BeforeTele, BeforeIvi, BeforeCan };

struct DefenseSweepConfig {
    double budget = 10.0;
    std::vector<DefenseLocation> locations = {DefenseLocation::BeforeTele,
                                              DefenseLocation::BeforeIvi,
                                              DefenseLocation::BeforeCan};
    std::vector<double> p_sec_grid = {0.05, 0.10, 0.15, 0.20, 0.25,
                                      0.30, 0.35, 0.40, 0.45, 0.50};
    std::vector<double> l_sec_grid = {0.0, 1.0, 10.0};
    SolveConfig solve;
};

/// Series safeguard inserted in front of TELE, IVI, or CAN, swept over the
/// (p_sec, L_sec) grid.
ScenarioResult run_defense_sweep(const DefenseSweepConfig& cfg);

struct RedundancySweepConfig {
    double budget = 10.0;
    // First entry is the base sensor; each further entry adds one redundant
    // sensor wired in the hybrid (functional-redundancy) pattern.
    std::vector<double> sensor_p0 = {0.207, 0.252, 0.144, 0.144};
    double sensor_loss = 1.0;
    double entry_p0 = 0.119;    // infotainment-like entry
    double entry_loss = 10.0;
    double control_p0 = 0.119;
    double control_loss = 50.0;
    double target_p0 = 0.207;
    double target_loss = 100.0;
    SolveConfig solve;
};

/// 0..k redundant sensors feeding a control module ahead of the target; each
/// sensor branch passes through zero-loss join nodes for every other sensor,
/// so the attacker effectively has to compromise them all.
ScenarioResult run_redundancy_sweep(const RedundancySweepConfig& cfg);

/// Build the redundancy-architecture graph with the first `sensor_count`
/// sensors of cfg.sensor_p0. Exposed for tests.
AttackGraph build_redundancy_graph(const RedundancySweepConfig& cfg, std::size_t sensor_count);

/// Fixed column schema: case,label,param...,loss,x_<nodeid>...
void write_scenario_csv(const ScenarioResult& result, std::ostream& os);

}  // namespace agsec
