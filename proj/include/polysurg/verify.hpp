#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polysurg/comb_map.hpp"

namespace polysurg {

class VerifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One verdict. A failing check names its witness faces, which can be
/// re-checked on their own (a belt, an offending facet).
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<FaceId> witness;
};

struct TheoremReport {
    std::vector<Check> checks;

    bool ok() const;
    /// First failing check, or nullptr.
    const Check* failure() const;
    const Check* find(const std::string& name) const;
};

/// Facets are pentagons and hexagons, p5 = 12, no 3-belts, no 4-belts, and
/// the 5-belts are the 12 around the pentagons plus hexagonal rings.
TheoremReport verify_fullerene(const CombMap& map);

/// Pentagons and hexagons with at most one quadrangle or heptagon, no
/// 3-belts, and exactly one 4-belt (around the quadrangle) when a quadrangle
/// is present, none otherwise.
TheoremReport verify_intermediate(const CombMap& map);

struct FamilyReport {
    /// Contains a pentagon surrounded by pentagons; k is the ring count.
    bool family_one = false;
    int k_one = -1;
    /// Contains three pentagons at a vertex whose far neighbours across the
    /// three edges are pentagons; k is the layer count.
    bool family_two = false;
    int k_two = -1;
    /// The cap that was found, centre first.
    std::vector<FaceId> cap_one;
    std::vector<FaceId> cap_two;
};

/// Detects the caps and confirms the whole structure by comparing with the
/// family member of the same size. Throws VerifyError when the map is not a
/// fullerene.
FamilyReport classify_nanotube(const CombMap& map);

}  // namespace polysurg
