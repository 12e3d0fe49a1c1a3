#include "agsec/cvss.hpp"

#include <algorithm>
#include <stdexcept>

namespace agsec {

namespace {

double av_value(AttackVector v) {
    switch (v) {
        case AttackVector::Network: return 0.85;
        case AttackVector::Adjacent: return 0.62;
        case AttackVector::Local: return 0.55;
        case AttackVector::Physical: return 0.2;
    }
    throw std::invalid_argument("invalid AV");
}

double ac_value(AttackComplexity v) {
    switch (v) {
        case AttackComplexity::Low: return 0.77;
        case AttackComplexity::High: return 0.44;
    }
    throw std::invalid_argument("invalid AC");
}

double pr_value(PrivilegesRequired v) {
    switch (v) {
        case PrivilegesRequired::None: return 0.85;
        case PrivilegesRequired::Low: return 0.62;
        case PrivilegesRequired::High: return 0.27;
    }
    throw std::invalid_argument("invalid PR");
}

double ui_value(UserInteraction v) {
    switch (v) {
        case UserInteraction::None: return 0.85;
        case UserInteraction::Required: return 0.62;
    }
    throw std::invalid_argument("invalid UI");
}

double impact_value(ImpactLevel v) {
    switch (v) {
        case ImpactLevel::High: return 0.56;
        case ImpactLevel::Low: return 0.22;
        case ImpactLevel::None: return 0.0;
    }
    throw std::invalid_argument("invalid impact level");
}

}  // namespace

double exploitability(const CvssVector& v) {
    return 8.22 * av_value(v.av) * ac_value(v.ac) * pr_value(v.pr) * ui_value(v.ui);
}

double p0_from_exploitability(double ex) {
    if (ex < 0.0) throw std::invalid_argument("p0_from_exploitability: negative exploitability");
    return std::min(1.0, ex / 10.0);
}

double impact(const CvssVector& v) {
    if (!v.im_c || !v.im_i || !v.im_a)
        throw std::invalid_argument("impact: ImC/ImI/ImA fields are required");
    double keep = (1.0 - impact_value(*v.im_c)) * (1.0 - impact_value(*v.im_i)) *
                  (1.0 - impact_value(*v.im_a));
    return 6.42 * (1.0 - keep);
}

const std::map<AsilLevel, double>& default_asil_losses() {
    static const std::map<AsilLevel, double> table = {
        {AsilLevel::QM, 1.0}, {AsilLevel::A, 10.0}, {AsilLevel::B, 10.0},
        {AsilLevel::C, 50.0}, {AsilLevel::D, 100.0},
    };
    return table;
}

double loss_from_asil(AsilLevel rating, const std::map<AsilLevel, double>& mapping) {
    auto it = mapping.find(rating);
    if (it == mapping.end()) throw std::invalid_argument("loss_from_asil: rating absent from mapping");
    double prev = -1.0;
    for (const auto& [level, loss] : mapping) {
        if (loss < prev) throw std::invalid_argument("loss_from_asil: mapping not monotone in ASIL order");
        prev = loss;
    }
    return it->second;
}

AttackVector parse_av(const std::string& s) {
    if (s == "N") return AttackVector::Network;
    if (s == "A") return AttackVector::Adjacent;
    if (s == "L") return AttackVector::Local;
    if (s == "P") return AttackVector::Physical;
    throw std::invalid_argument("invalid AV code '" + s + "' (expected N/A/L/P)");
}

AttackComplexity parse_ac(const std::string& s) {
    if (s == "L") return AttackComplexity::Low;
    if (s == "H") return AttackComplexity::High;
    throw std::invalid_argument("invalid AC code '" + s + "' (expected L/H)");
}

PrivilegesRequired parse_pr(const std::string& s) {
    if (s == "N") return PrivilegesRequired::None;
    if (s == "L") return PrivilegesRequired::Low;
    if (s == "H") return PrivilegesRequired::High;
    throw std::invalid_argument("invalid PR code '" + s + "' (expected N/L/H)");
}

UserInteraction parse_ui(const std::string& s) {
    if (s == "N") return UserInteraction::None;
    if (s == "R") return UserInteraction::Required;
    throw std::invalid_argument("invalid UI code '" + s + "' (expected N/R)");
}

ImpactLevel parse_impact_level(const std::string& s) {
    if (s == "H") return ImpactLevel::High;
    if (s == "L") return ImpactLevel::Low;
    if (s == "N") return ImpactLevel::None;
    throw std::invalid_argument("invalid impact code '" + s + "' (expected H/L/N)");
}

AsilLevel parse_asil(const std::string& s) {
    if (s == "QM") return AsilLevel::QM;
    if (s == "A") return AsilLevel::A;
    if (s == "B") return AsilLevel::B;
    if (s == "C") return AsilLevel::C;
    if (s == "D") return AsilLevel::D;
    throw std::invalid_argument("invalid ASIL rating '" + s + "' (expected QM/A/B/C/D)");
}

}  // namespace agsec
