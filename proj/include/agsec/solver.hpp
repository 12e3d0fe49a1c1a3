#pragma once

#include "agsec/graph.hpp"
#include "agsec/loss.hpp"

namespace agsec {

enum class SolveMethod { Auto, Numeric, ClosedForm, Grid };

struct SolveConfig {
    SolveMethod method = SolveMethod::Auto;
    double tolerance = 1e-9;      // relative objective change
    int max_iterations = 200000;
    double grid_resolution = 0.0;  // 0 -> budget / 200
};

struct SolveReport {
    InvestmentProfile investments;
    double equilibrium_loss = 0.0;
    std::vector<AttackPath> active_paths;
    SolveMethod method_used = SolveMethod::Numeric;
    int iterations = 0;
    bool converged = false;
};

/// Defender's optimum: minimize max-over-paths expected loss over the
/// simplex {x >= 0, sum x <= B}. The objective is convex (a max of sums of
/// exponentials of affine forms), so the numeric method converges to the
/// global optimum. Throws std::domain_error when no path exists.
SolveReport solve(const AttackGraph& g, double budget, const SolveConfig& config = {});

/// Closed-form fast paths:
///  - single-entry graphs: all budget on the entry node;
///  - two entries feeding a shared two-node tail (entry losses equal,
///    homogeneous p0): the piecewise log-balancing profile.
/// Throws std::invalid_argument on topology mismatch or when the
/// log-balancing formula would yield an infeasible (negative) investment.
SolveReport solve_closed_form(const AttackGraph& g, double budget);

/// Exhaustive search over {x : x_i = k * resolution, sum x <= B}. Guarded to
/// at most 5 investable nodes; intended as a verification oracle.
SolveReport solve_grid_oracle(const AttackGraph& g, double budget, double resolution);

}  // namespace agsec
