#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "minorb/lie_type.hpp"

namespace minorb {

/// A family/rank sweep. Expands to every valid type within bounds; invalid
/// (family, rank) pairs are skipped, not errored.
struct BatterySpec {
    std::vector<Family> families{all_families.begin(), all_families.end()};
    int max_rank = 12;
};

constexpr int kMaxSupportedRank = 64;

/// Deterministic expansion: family letter order, then ascending rank.
/// Throws std::invalid_argument for max_rank outside [1, 64].
inline std::vector<LieType> expand_battery(const BatterySpec& spec) {
    if (spec.max_rank < 1 || spec.max_rank > kMaxSupportedRank) {
        throw std::invalid_argument("max rank must be between 1 and 64");
    }
    std::vector<Family> fams = spec.families;
    std::sort(fams.begin(), fams.end(),
              [](Family a, Family b) { return family_letter(a) < family_letter(b); });
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
    std::vector<LieType> out;
    for (Family f : fams) {
        for (int r = 1; r <= spec.max_rank; ++r) {
            if (is_valid_lie_type(f, r)) out.push_back(LieType{f, r});
        }
    }
    return out;
}

/// The default verification battery: every valid type with rank <= 12.
inline std::vector<LieType> default_battery() { return expand_battery(BatterySpec{}); }

}  // namespace minorb
