#pragma once

// Brute-force oracles and corpus builders shared by the unit tests and the
// acceptance binary. Nothing here calls the belt search of the library.

#include <string>
#include <vector>

#include "polysurg/comb_map.hpp"
#include "polysurg/construct.hpp"
#include "polysurg/growth.hpp"
#include "polysurg/patterns.hpp"
#include "polysurg/rule_file.hpp"

namespace support {

using namespace polysurg;

inline const RuleFile& rules() {
    static const RuleFile file = load_rule_file(default_rule_path());
    return file;
}

inline const GrowthRule& rule(const std::string& label) {
    for (const auto& r : rules().rules) {
        if (r.label == label) return r;
    }
    throw std::runtime_error("no rule " + label);
}

inline int hexagons(const CombMap& m) {
    int n = 0;
    for (FaceId f = 0; f < m.face_count(); ++f) n += m.face_size(f) == 6;
    return n;
}

/// Three pairwise adjacent facets without a common vertex.
inline bool has_three_belt(const CombMap& m) {
    const int n = m.face_count();
    for (FaceId a = 0; a < n; ++a)
        for (FaceId b : m.face_neighbors(a)) {
            if (b <= a) continue;
            for (FaceId c : m.face_neighbors(b)) {
                if (c <= b || !m.faces_adjacent(a, c)) continue;
                if (!m.faces_meet_at_vertex(a, b, c)) return true;
            }
        }
    return false;
}

/// Flag by definition: not the simplex and no 3-belt.
inline bool brute_flag(const CombMap& m) { return m.vertex_count() != 4 && !has_three_belt(m); }

/// A 4-belt through the adjacent facets a and b: facets c, d with the cycle
/// a-b-c-d-a and no adjacency across the diagonals.
inline bool has_four_belt_through(const CombMap& m, FaceId a, FaceId b) {
    for (FaceId c : m.face_neighbors(b)) {
        if (c == a || m.faces_adjacent(a, c)) continue;
        for (FaceId d : m.face_neighbors(c)) {
            if (d == a || d == b || m.faces_adjacent(b, d)) continue;
            if (m.faces_adjacent(d, a)) return true;
        }
    }
    return false;
}

/// Euler residual for a simple polytope: sum over k of (6-k) p_k
/// minus 12, from the face sizes alone.
inline long euler_residual(const CombMap& m) {
    long sum = 0;
    for (FaceId f = 0; f < m.face_count(); ++f) sum += 6 - m.face_size(f);
    return sum - 12;
}

/// The left-hand match that an inversion leaves behind, named through the
/// inverse script, so apply_rule can be run at exactly that place.
struct Inversion {
    CombMap map;
    MatchResult lhs;
};

inline Inversion invert_with_match(const CombMap& map, const GrowthRule& r, const MatchResult& rhs) {
    ScriptTrace t = run_script(map, r.inverse_script, bind_names(r.rhs, rhs), rhs.mirrored);
    Inversion inv{t.maps.back(), MatchResult{}};
    for (const auto& f : r.lhs.faces) inv.lhs.faces.push_back(t.names.at(f.name));
    inv.lhs.mirrored = rhs.mirrored;
    return inv;
}

/// The map of the rule's worked example: a fullerene holding its right-hand
/// side, from the nanotube seeds or a Goldberg-Coxeter image of the
/// dodecahedron. Empty when the rule is not a road member.
inline CombMap rhs_instance(const GrowthRule& r) {
    const CombMap d = capped_tube(5, 0);
    switch (r.op) {
        case 'a': return capped_tube(5, 1);
        case 'b': return three_fold_tube(1);
        case 'f': return goldberg_coxeter(d, r.params[0] - 1, 1);
        case 'g':
            if (r.params.size() == 1) return goldberg_coxeter(d, r.params[0] + 1, 0);
            return goldberg_coxeter(d, r.params[0] + 1, r.params[1] + 1);
        default: return CombMap{};
    }
}

}  // namespace support
