#include "polysurg/verify.hpp"

#include <algorithm>
#include <sstream>

#include "polysurg/belts.hpp"
#include "polysurg/construct.hpp"
#include "polysurg/surgery.hpp"

namespace polysurg {

bool TheoremReport::ok() const { return failure() == nullptr; }

const Check* TheoremReport::failure() const {
    for (const Check& c : checks) {
        if (!c.pass) return &c;
    }
    return nullptr;
}

const Check* TheoremReport::find(const std::string& name) const {
    for (const Check& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

Check polytope_check(const CombMap& map) {
    const ValidationReport v = validate(map);
    Check c{"simple polytope", v.ok(), "", {}};
    if (!v.three_connected) {
        c.detail = "separating vertex pair " + std::to_string(v.separating_pair[0]) + "," +
                   std::to_string(v.separating_pair[1]);
    } else if (!v.ok()) {
        c.detail = "face residual " + std::to_string(v.residual);
    }
    return c;
}

Check belt_free(const CombMap& map, int k) {
    const auto belts = find_k_belts(map, k);
    Check c{"no " + std::to_string(k) + "-belts", belts.empty(), std::to_string(belts.size()) + " found", {}};
    if (!belts.empty()) c.witness = belts.front().faces;
    return c;
}

bool is_pentagon_cap(const CombMap& map, FaceId f) {
    if (map.face_size(f) != 5) return false;
    for (FaceId g : map.face_neighbors(f)) {
        if (map.face_size(g) != 5) return false;
    }
    return true;
}

// The centre and five surrounding pentagons, or empty.
std::vector<FaceId> find_cap_one(const CombMap& map) {
    for (FaceId f = 0; f < map.face_count(); ++f) {
        if (!is_pentagon_cap(map, f)) continue;
        std::vector<FaceId> cap{f};
        for (FaceId g : map.face_neighbors(f)) cap.push_back(g);
        return cap;
    }
    return {};
}

// Three pentagons at a vertex and the three facets across their shared
// edges, all pentagons; or empty.
std::vector<FaceId> find_cap_two(const CombMap& map) {
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
        std::vector<FaceId> cap;
        for (int i = 0; i < 3; ++i) cap.push_back(map.face_of(3 * v + i));
        for (int i = 0; i < 3; ++i) cap.push_back(edge_faces(map, 3 * v + i).at_head);
        if (std::all_of(cap.begin(), cap.end(), [&](FaceId f) { return map.face_size(f) == 5; })) return cap;
    }
    return {};
}

}  // namespace

TheoremReport verify_fullerene(const CombMap& map) {
    TheoremReport r;
    r.checks.push_back(polytope_check(map));

    Check sizes{"facets are pentagons and hexagons", true, "", {}};
    int p5 = 0;
    for (FaceId f = 0; f < map.face_count(); ++f) {
        const int s = map.face_size(f);
        p5 += s == 5;
        if (s != 5 && s != 6 && sizes.pass) {
            sizes.pass = false;
            sizes.detail = "facet " + std::to_string(f) + " has " + std::to_string(s) + " edges";
            sizes.witness = {f};
        }
    }
    r.checks.push_back(sizes);
    r.checks.push_back({"p5 = 12", p5 == 12, "p5 = " + std::to_string(p5), {}});
    r.checks.push_back(belt_free(map, 3));
    r.checks.push_back(belt_free(map, 4));

    Check census{"five-belt census", false, "", {}};
    if (!sizes.pass || p5 != 12) {
        census.detail = "not evaluated: not a fullerene";
    } else {
        const FiveBeltReport fb = classify_five_belts(map);
        std::ostringstream d;
        d << fb.count << " five-belts, " << fb.surrounds_pentagon << " around pentagons, " << fb.hexagon_rings
          << " hexagon rings";
        census.detail = d.str();
        census.pass = fb.surrounds_pentagon == 12 && fb.count == 12 + fb.hexagon_rings;
        for (std::size_t i = 0; i < fb.kinds.size(); ++i) {
            if (fb.kinds[i] == FiveBeltKind::Other) {
                census.pass = false;
                census.witness = fb.belts[i].faces;
                break;
            }
        }
        // Extra belts only occur on the tubes of the first family.
        if (census.pass && fb.hexagon_rings > 0) {
            const FamilyReport fam = classify_nanotube(map);
            census.pass = fam.family_one && fam.k_one == fb.hexagon_rings;
            if (!census.pass) census.detail += "; hexagon rings outside the first family";
        }
    }
    r.checks.push_back(census);
    return r;
}

TheoremReport verify_intermediate(const CombMap& map) {
    TheoremReport r;
    r.checks.push_back(polytope_check(map));

    Check sizes{"at most one exceptional facet", true, "", {}};
    FaceId quad = kNoFace;
    int exceptional = 0;
    for (FaceId f = 0; f < map.face_count(); ++f) {
        const int s = map.face_size(f);
        if (s == 5 || s == 6) continue;
        if (s == 4) quad = f;
        if ((s != 4 && s != 7) || ++exceptional > 1) {
            sizes.pass = false;
            sizes.witness.push_back(f);
        }
    }
    if (!sizes.pass) sizes.detail = "facet " + std::to_string(sizes.witness.front()) + " breaks the contract";
    r.checks.push_back(sizes);
    r.checks.push_back(belt_free(map, 3));

    const auto belts = find_k_belts(map, 4);
    Check four{"4-belts", false, std::to_string(belts.size()) + " found", {}};
    if (quad == kNoFace) {
        four.pass = belts.empty();
        if (!belts.empty()) four.witness = belts.front().faces;
    } else {
        auto around = map.face_neighbors(quad);
        std::sort(around.begin(), around.end());
        four.pass = belts.size() == 1;
        if (four.pass) {
            auto b = belts.front().faces;
            std::sort(b.begin(), b.end());
            four.pass = b == around;
        }
        if (!four.pass) four.witness = belts.empty() ? std::vector<FaceId>{quad} : belts.front().faces;
        four.detail += four.pass ? ", surrounding the quadrangle" : "";
    }
    r.checks.push_back(four);
    return r;
}

FamilyReport classify_nanotube(const CombMap& map) {
    int p5 = 0, p6 = 0;
    for (FaceId f = 0; f < map.face_count(); ++f) {
        p5 += map.face_size(f) == 5;
        p6 += map.face_size(f) == 6;
    }
    if (p5 != 12 || p5 + p6 != map.face_count()) throw VerifyError("classify_nanotube: not a fullerene");
    FamilyReport r;
    r.cap_one = find_cap_one(map);
    if (!r.cap_one.empty() && p6 % 5 == 0 && is_isomorphic(map, capped_tube(5, p6 / 5))) {
        r.family_one = true;
        r.k_one = p6 / 5;
    }
    r.cap_two = find_cap_two(map);
    if (!r.cap_two.empty() && p6 % 3 == 0 && is_isomorphic(map, three_fold_tube(p6 / 3))) {
        r.family_two = true;
        r.k_two = p6 / 3;
    }
    return r;
}

}  // namespace polysurg
