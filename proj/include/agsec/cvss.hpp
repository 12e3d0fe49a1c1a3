#pragma once

#include <map>
#include <optional>
#include <string>

namespace agsec {

enum class AttackVector { Network, Adjacent, Local, Physical };
enum class AttackComplexity { Low, High };
enum class PrivilegesRequired { None, Low, High };
enum class UserInteraction { None, Required };
enum class ImpactLevel { High, Low, None };

struct CvssVector {
    AttackVector av = AttackVector::Network;
    AttackComplexity ac = AttackComplexity::Low;
    PrivilegesRequired pr = PrivilegesRequired::None;
    UserInteraction ui = UserInteraction::None;
    std::optional<ImpactLevel> im_c, im_i, im_a;
};

/// EX = 8.22 * AV * AC * PR * UI (scope-unchanged PR values).
double exploitability(const CvssVector& v);

/// p0 = EX / 10, clamped to [0, 1]. Throws on negative input.
double p0_from_exploitability(double ex);

/// Im = 6.42 * (1 - (1-ImC)(1-ImI)(1-ImA)). Throws when impact fields are
/// missing.
double impact(const CvssVector& v);

enum class AsilLevel { QM, A, B, C, D };

/// Default ASIL-to-loss table, calibrated to the automotive case study.
const std::map<AsilLevel, double>& default_asil_losses();

/// Table lookup; the mapping must cover the rating and be monotone
/// nondecreasing in ASIL order.
double loss_from_asil(AsilLevel rating,
                      const std::map<AsilLevel, double>& mapping = default_asil_losses());

// Letter-code parsing for CLI and graph files ("N", "A", "L", "P", ...).
AttackVector parse_av(const std::string& s);
AttackComplexity parse_ac(const std::string& s);
PrivilegesRequired parse_pr(const std::string& s);
UserInteraction parse_ui(const std::string& s);
ImpactLevel parse_impact_level(const std::string& s);
AsilLevel parse_asil(const std::string& s);

}  // namespace agsec
