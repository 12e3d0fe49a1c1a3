#include "agsec/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace agsec {

namespace {

// The inner maximization runs over explicitly enumerated paths; each path
// loss is a sum of coeff * exp(-<prefix indicator, x>) terms, so the
// pointwise max is convex in x.
struct NumericProblem {
    std::vector<NodeId> investable;
    std::vector<std::vector<int>> path_nodes;    // per path, indices into investable
    std::vector<std::vector<double>> path_coeff; // per path, zero-investment term coefficients
    double budget = 0.0;

    static NumericProblem build(const AttackGraph& g, const std::vector<AttackPath>& paths,
                                double budget) {
        NumericProblem np;
        np.budget = budget;
        std::set<NodeId> on_path;
        for (const auto& p : paths) on_path.insert(p.begin(), p.end());
        np.investable.assign(on_path.begin(), on_path.end());
        std::map<NodeId, int> index;
        for (std::size_t i = 0; i < np.investable.size(); ++i) index[np.investable[i]] = int(i);

        for (const auto& p : paths) {
            std::vector<int> idx;
            std::vector<double> coeff;
            double prefix = 1.0;
            for (const auto& v : p) {
                const NodeParams& par = g.nodes.at(v);
                idx.push_back(index.at(v));
                coeff.push_back(prefix * par.lambda());
                prefix *= par.pass();
            }
            np.path_nodes.push_back(std::move(idx));
            np.path_coeff.push_back(std::move(coeff));
        }
        return np;
    }

    int dimension() const { return int(investable.size()); }

    double path_value(std::size_t p, const std::vector<double>& x) const {
        double s = 0.0, total = 0.0;
        const auto& idx = path_nodes[p];
        const auto& coeff = path_coeff[p];
        for (std::size_t l = 0; l < idx.size(); ++l) {
            s += x[idx[l]];
            total += coeff[l] * std::exp(-s);
        }
        return total;
    }

    double value(const std::vector<double>& x, std::size_t* argmax = nullptr) const {
        double best = -1.0;
        for (std::size_t p = 0; p < path_nodes.size(); ++p) {
            double v = path_value(p, x);
            if (v > best) {
                best = v;
                if (argmax) *argmax = p;
            }
        }
        return best;
    }

    // Accumulate w * grad(path p) into g.
    void add_path_gradient(std::size_t p, const std::vector<double>& x, double w,
                           std::vector<double>& g) const {
        const auto& idx = path_nodes[p];
        const auto& coeff = path_coeff[p];
        std::vector<double> term(idx.size());
        double s = 0.0;
        for (std::size_t l = 0; l < idx.size(); ++l) {
            s += x[idx[l]];
            term[l] = coeff[l] * std::exp(-s);
        }
        double suffix = 0.0;
        for (std::size_t l = idx.size(); l-- > 0;) {
            suffix += term[l];
            g[idx[l]] -= w * suffix;
        }
    }

    // Euclidean projection onto {x >= 0, sum x <= B}; the sort-based simplex
    // projection runs only when the budget constraint is violated.
    std::vector<double> project(std::vector<double> y) const {
        for (auto& v : y) v = std::max(0.0, v);
        double s = 0.0;
        for (double v : y) s += v;
        if (s <= budget) return y;

        std::vector<double> u = y;
        std::sort(u.begin(), u.end(), std::greater<>());
        double css = 0.0, tau = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) {
            css += u[j];
            double t = (css - budget) / double(j + 1);
            if (j + 1 == u.size() || u[j + 1] <= t) {
                tau = t;
                break;
            }
        }
        for (auto& v : y) v = std::max(0.0, v - tau);
        return y;
    }
};

struct NumericResult {
    std::vector<double> x;
    double f = 0.0;
    int iterations = 0;
    bool converged = true;
};

NumericResult minimize(const NumericProblem& np, const SolveConfig& cfg) {
    const int n = np.dimension();
    const double B = np.budget;
    NumericResult res;
    res.x.assign(n, 0.0);
    res.f = np.value(res.x);
    if (B <= 0.0 || res.f <= 0.0) return res;

    int budget_iters = std::max(cfg.max_iterations, 1);
    auto spend = [&](int k) {
        res.iterations += k;
        return res.iterations < budget_iters;
    };

    // Phase 1: projected subgradient (step B/sqrt(t), normalized direction,
    // subgradient from the first maximizing path), best-iterate tracking.
    std::vector<double> x(n, 0.0);
    {
        const int iters = std::min(3000, budget_iters);
        for (int t = 1; t <= iters; ++t) {
            std::size_t k = 0;
            np.value(x, &k);
            std::vector<double> g(n, 0.0);
            np.add_path_gradient(k, x, 1.0, g);
            double nrm = 0.0;
            for (double v : g) nrm += v * v;
            nrm = std::sqrt(nrm);
            if (nrm <= 0.0) break;
            double step = B / std::sqrt(double(t));
            for (int i = 0; i < n; ++i) x[i] -= step * g[i] / nrm;
            x = np.project(std::move(x));
            double f = np.value(x);
            if (f < res.f) {
                res.f = f;
                res.x = x;
            }
            if (!spend(1)) {
                res.converged = false;
                return res;
            }
        }
        x = res.x;
    }

    // Phase 2: annealed softmax smoothing. f_mu = mu*log(sum exp(f_P/mu))
    // is smooth and within mu*log(#paths) of f; projected gradient with
    // Armijo backtracking, warm-started across a decreasing mu schedule.
    const double f0 = res.f;
    const double mu_min = f0 * std::max(cfg.tolerance * 0.1, 1e-13);
    const std::size_t npaths = np.path_nodes.size();
    for (double mu = f0 * 0.1; mu > mu_min; mu *= 0.1) {
        auto smoothed = [&](const std::vector<double>& xx, std::vector<double>* grad) {
            std::vector<double> fs(npaths);
            double m = -1.0;
            for (std::size_t p = 0; p < npaths; ++p) {
                fs[p] = np.path_value(p, xx);
                m = std::max(m, fs[p]);
            }
            double S = 0.0;
            for (std::size_t p = 0; p < npaths; ++p) S += std::exp((fs[p] - m) / mu);
            if (grad) {
                grad->assign(n, 0.0);
                for (std::size_t p = 0; p < npaths; ++p)
                    np.add_path_gradient(p, xx, std::exp((fs[p] - m) / mu) / S, *grad);
            }
            return m + mu * std::log(S);
        };

        std::vector<double> g;
        double fmu = smoothed(x, &g);
        for (int it = 0; it < 300; ++it) {
            double step = 1.0;
            std::vector<double> xn;
            double fmun = fmu;
            double moved = 0.0;
            bool accepted = false;
            for (int bt = 0; bt < 60; ++bt) {
                xn = x;
                for (int i = 0; i < n; ++i) xn[i] -= step * g[i];
                xn = np.project(std::move(xn));
                fmun = smoothed(xn, nullptr);
                moved = 0.0;
                for (int i = 0; i < n; ++i) moved += (xn[i] - x[i]) * (xn[i] - x[i]);
                if (fmun <= fmu - 1e-4 * moved / std::max(step, 1e-300)) {
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!spend(1)) {
                res.converged = false;
                break;
            }
            if (!accepted || moved < 1e-30) break;
            x = std::move(xn);
            fmu = smoothed(x, &g);
        }
        double f = np.value(x);
        if (f < res.f) {
            res.f = f;
            res.x = x;
        }
        if (!res.converged) return res;
    }
    x = res.x;

    // Phase 3: coordinate search over pairwise budget transfers with a
    // geometric step schedule down to resolution tolerance * B.
    const double floor_step = std::max(B * cfg.tolerance, B * 1e-12);
    for (double step = B / 2.0; step >= floor_step; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (int i = 0; i < n; ++i) {
                if (x[i] <= 0.0) continue;
                double d = std::min(step, x[i]);
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    x[i] -= d;
                    x[j] += d;
                    double f = np.value(x);
                    if (f < res.f - 1e-18) {
                        res.f = f;
                        res.x = x;
                        improved = true;
                        d = std::min(step, x[i]);
                    } else {
                        x[i] += d;
                        x[j] -= d;
                    }
                    if (!spend(1)) {
                        res.converged = false;
                        return res;
                    }
                }
            }
            // spend remaining slack, if any
            double used = 0.0;
            for (double v : x) used += v;
            if (used < B) {
                for (int j = 0; j < n; ++j) {
                    double d = std::min(step, B - used);
                    if (d <= 0.0) break;
                    x[j] += d;
                    double f = np.value(x);
                    if (f < res.f - 1e-18) {
                        res.f = f;
                        res.x = x;
                        used += d;
                        improved = true;
                    } else {
                        x[j] -= d;
                    }
                    if (!spend(1)) {
                        res.converged = false;
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

SolveReport finalize(const AttackGraph& g, InvestmentProfile inv, SolveMethod method,
                     int iterations, bool converged) {
    SolveReport rep;
    auto sys = system_loss(g, inv);
    rep.investments = std::move(inv);
    rep.equilibrium_loss = sys.loss;
    rep.active_paths = sys.argmax_paths;
    rep.method_used = method;
    rep.iterations = iterations;
    rep.converged = converged;
    return rep;
}

SolveReport solve_numeric(const AttackGraph& g, double budget, const SolveConfig& cfg) {
    auto paths = enumerate_paths(g);
    if (paths.empty()) throw std::domain_error("solve: no entry-to-target path exists");
    auto np = NumericProblem::build(g, paths, budget);
    auto res = minimize(np, cfg);
    InvestmentProfile inv;
    inv.budget = budget;
    for (int i = 0; i < np.dimension(); ++i) inv.x[np.investable[i]] = res.x[i];
    return finalize(g, std::move(inv), SolveMethod::Numeric, res.iterations, res.converged);
}

}  // namespace

SolveReport solve_closed_form(const AttackGraph& g, double budget) {
    if (budget < 0.0) throw std::invalid_argument("solve_closed_form: negative budget");
    auto paths = enumerate_paths(g);
    if (paths.empty()) throw std::domain_error("solve_closed_form: no entry-to-target path exists");

    InvestmentProfile inv;
    inv.budget = budget;

    if (g.entries.size() == 1) {
        // Every path starts at the unique entry, so shifting any investment
        // toward it weakly improves every path: x* = [B, 0, ..., 0].
        inv.x[*g.entries.begin()] = budget;
        return finalize(g, std::move(inv), SolveMethod::ClosedForm, 0, true);
    }

    if (g.entries.size() == 2) {
        auto it = g.entries.begin();
        NodeId e1 = *it++;
        NodeId e2 = *it;
        auto s1 = g.successors(e1);
        auto s2 = g.successors(e2);
        if (s1.size() == 1 && s2.size() == 1 && s1.front() == s2.front()) {
            NodeId mid = s1.front();
            auto ms = g.successors(mid);
            if (g.in_degree(mid) == 2 && ms.size() == 1 && ms.front() == g.target &&
                g.out_degree(g.target) == 0 && g.in_degree(g.target) == 1 &&
                g.nodes.size() == 4) {
                const NodeParams& pe1 = g.nodes.at(e1);
                const NodeParams& pe2 = g.nodes.at(e2);
                const NodeParams& pm = g.nodes.at(mid);
                const NodeParams& pt = g.nodes.at(g.target);
                bool plain = !pe1.is_merged() && !pe2.is_merged() && !pm.is_merged() &&
                             !pt.is_merged();
                double p0 = pe1.p0;
                bool homogeneous = std::abs(pe2.p0 - p0) < 1e-12 &&
                                   std::abs(pm.p0 - p0) < 1e-12 &&
                                   std::abs(pt.p0 - p0) < 1e-12;
                if (!plain || !homogeneous || std::abs(pe1.loss - pe2.loss) > 1e-12)
                    throw std::invalid_argument(
                        "solve_closed_form: two-entry form needs homogeneous p0 and equal entry losses");

                double L = pe1.loss, L2 = pm.loss, L3 = pt.loss;
                double downstream = p0 * L2 + p0 * p0 * L3;
                if (L <= downstream) {
                    double log_ratio = std::log(L / downstream);  // <= 0
                    double xe = 0.5 * (budget + log_ratio);
                    if (xe < -1e-12)
                        throw std::invalid_argument(
                            "solve_closed_form: budget too small for the log-balancing profile");
                    inv.x[e1] = std::max(0.0, xe);
                    inv.x[e2] = std::max(0.0, xe);
                    inv.x[mid] = -log_ratio;
                    inv.x[g.target] = 0.0;
                } else {
                    inv.x[e1] = 0.5 * budget;
                    inv.x[e2] = 0.5 * budget;
                    inv.x[mid] = 0.0;
                    inv.x[g.target] = 0.0;
                }
                return finalize(g, std::move(inv), SolveMethod::ClosedForm, 0, true);
            }
        }
    }
    throw std::invalid_argument("solve_closed_form: topology mismatch");
}

SolveReport solve_grid_oracle(const AttackGraph& g, double budget, double resolution) {
    if (resolution <= 0.0) throw std::invalid_argument("solve_grid_oracle: resolution must be positive");
    auto paths = enumerate_paths(g);
    if (paths.empty()) throw std::domain_error("solve_grid_oracle: no entry-to-target path exists");
    auto np = NumericProblem::build(g, paths, budget);
    const int n = np.dimension();
    if (n > 5) throw std::invalid_argument("solve_grid_oracle: more than 5 investable nodes");

    const int kmax = budget > 0.0 ? int(std::floor(budget / resolution + 1e-9)) : 0;
    // exp(-m * resolution) lookup; path prefix exponents are multiples of resolution
    std::vector<double> etab(std::size_t(kmax) * n + 1);
    for (std::size_t m = 0; m < etab.size(); ++m) etab[m] = std::exp(-double(m) * resolution);

    auto value_at = [&](const std::vector<int>& k) {
        double best = -1.0;
        for (std::size_t p = 0; p < np.path_nodes.size(); ++p) {
            int s = 0;
            double total = 0.0;
            const auto& idx = np.path_nodes[p];
            const auto& coeff = np.path_coeff[p];
            for (std::size_t l = 0; l < idx.size(); ++l) {
                s += k[idx[l]];
                total += coeff[l] * etab[s];
            }
            best = std::max(best, total);
        }
        return best;
    };

    std::vector<int> k(n, 0), best_k(n, 0);
    double best_f = value_at(k);
    long long evals = 0;
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == n) {
            ++evals;
            double f = value_at(k);
            if (f < best_f) {
                best_f = f;
                best_k = k;
            }
            return;
        }
        for (int ki = 0; ki <= remaining; ++ki) {
            k[i] = ki;
            rec(i + 1, remaining - ki);
        }
        k[i] = 0;
    };
    if (kmax > 0) rec(0, kmax);

    InvestmentProfile inv;
    inv.budget = budget;
    for (int i = 0; i < n; ++i) inv.x[np.investable[i]] = best_k[i] * resolution;
    auto rep = finalize(g, std::move(inv), SolveMethod::Grid, int(std::min<long long>(evals, 1 << 30)), true);
    return rep;
}

SolveReport solve(const AttackGraph& g, double budget, const SolveConfig& config) {
    if (budget < 0.0) throw std::invalid_argument("solve: negative budget");
    switch (config.method) {
        case SolveMethod::ClosedForm:
            return solve_closed_form(g, budget);
        case SolveMethod::Grid:
            return solve_grid_oracle(g, budget,
                                     config.grid_resolution > 0.0 ? config.grid_resolution
                                                                  : std::max(budget, 1e-12) / 200.0);
        case SolveMethod::Numeric:
            return solve_numeric(g, budget, config);
        case SolveMethod::Auto:
        default:
            try {
                return solve_closed_form(g, budget);
            } catch (const std::invalid_argument&) {
                return solve_numeric(g, budget, config);
            }
    }
}

}  // namespace agsec
