#include "agsec/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace agsec {

namespace {
constexpr double kArgmaxTieTol = 1e-12;
}

double InvestmentProfile::total() const {
    double s = 0.0;
    for (const auto& [_, v] : x) s += v;
    return s;
}

bool InvestmentProfile::feasible() const {
    for (const auto& [_, v] : x)
        if (v < 0.0) return false;
    return total() <= budget + 1e-9;
}

double breach_probability(const NodeParams& params, double x) {
    if (x < 0.0) throw std::invalid_argument("breach_probability: negative investment");
    return params.p0 * std::exp(-x);
}

PathLossBreakdown path_loss(const AttackGraph& g, const AttackPath& path,
                            const InvestmentProfile& inv) {
    PathLossBreakdown out;
    out.path = path;
    double prefix = 1.0;
    for (const auto& v : path) {
        auto it = g.nodes.find(v);
        if (it == g.nodes.end())
            throw std::invalid_argument("path_loss: node '" + v + "' missing from graph");
        const NodeParams& np = it->second;
        double damp = std::exp(-inv.at(v));
        double contribution = prefix * np.lambda() * damp;
        prefix *= np.pass() * damp;
        out.terms.push_back({v, prefix, contribution});
        out.total += contribution;
    }
    return out;
}

SystemLoss system_loss(const AttackGraph& g, const InvestmentProfile& inv) {
    auto paths = enumerate_paths(g);
    if (paths.empty()) throw std::domain_error("system_loss: no entry-to-target path exists");

    SystemLoss out;
    std::vector<double> losses;
    losses.reserve(paths.size());
    for (const auto& p : paths) {
        double l = path_loss(g, p, inv).total;
        losses.push_back(l);
        if (l > out.loss) out.loss = l;
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (losses[i] >= out.loss - kArgmaxTieTol) out.argmax_paths.push_back(paths[i]);
    return out;
}

AttackPath attacker_best_response(const AttackGraph& g, const InvestmentProfile& inv) {
    return system_loss(g, inv).argmax_paths.front();
}

}  // namespace agsec
