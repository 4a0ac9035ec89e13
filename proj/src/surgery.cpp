#include "polysurg/surgery.hpp"

#include <algorithm>
#include <set>

namespace polysurg {

const char* to_string(SurgeryErrorKind kind) {
    switch (kind) {
        case SurgeryErrorKind::InvalidRun: return "InvalidRun";
        case SurgeryErrorKind::SpecOutOfRange: return "SpecOutOfRange";
        case SurgeryErrorKind::NotDefined: return "NotDefined";
        case SurgeryErrorKind::IsSimplex: return "IsSimplex";
    }
    return "?";
}

std::string TruncationSignature::str() const {
    if (s == 1) return "(1;" + std::to_string(t0) + "," + std::to_string(t1) + ")";
    return "(" + std::to_string(s) + "," + std::to_string(k) + ";" + std::to_string(t0) + "," +
           std::to_string(t1) + ")";
}

namespace {

TruncationSignature normalised(int s, int k, int t0, int t1) {
    TruncationSignature sig{std::min(s, k - s - 2), k, std::min(t0, t1), std::max(t0, t1)};
    // (1;t0,t2) does not depend on the size of the cut facet.
    if (sig.s == 1) sig.k = 0;
    return sig;
}

DartId run_edge(const CombMap& map, DartId start, int i) {
    DartId d = start;
    while (i-- > 0) d = map.face_next(d);
    return d;
}

}  // namespace

void check_spec(const CombMap& map, const TruncationSpec& spec) {
    if (spec.face < 0 || spec.face >= map.face_count()) {
        throw SurgeryError(SurgeryErrorKind::InvalidRun, "no such face");
    }
    if (spec.start < 0 || spec.start >= map.dart_count() || map.face_of(spec.start) != spec.face) {
        throw SurgeryError(SurgeryErrorKind::InvalidRun, "run does not start on the face");
    }
    const int k = map.face_size(spec.face);
    if (spec.s < 0 || spec.s > k - 2) {
        throw SurgeryError(SurgeryErrorKind::SpecOutOfRange,
                           "s = " + std::to_string(spec.s) + " outside 0.." + std::to_string(k - 2));
    }
}

TruncationSignature signature(const CombMap& map, const TruncationSpec& spec) {
    check_spec(map, spec);
    const int k = map.face_size(spec.face);
    const DartId last = run_edge(map, spec.start, spec.s + 1);
    return normalised(spec.s, k, map.face_size(map.face_across(spec.start)),
                      map.face_size(map.face_across(last)));
}

const std::vector<TruncationSignature>& permitted_signatures() {
    static const std::vector<TruncationSignature> sigs = {
        normalised(1, 5, 4, 5), normalised(1, 5, 5, 5), normalised(2, 6, 4, 5), normalised(2, 6, 5, 5),
        normalised(2, 6, 5, 6), normalised(2, 7, 5, 5), normalised(2, 7, 5, 6),
    };
    return sigs;
}

bool is_permitted(const TruncationSignature& sig) {
    const auto& p = permitted_signatures();
    return std::find(p.begin(), p.end(), sig) != p.end();
}

SurgeryResult truncate(const CombMap& map, const TruncationSpec& spec) {
    check_spec(map, spec);
    const int n = map.vertex_count();
    const DartId e0 = spec.start;
    const DartId e1 = run_edge(map, e0, spec.s + 1);
    const VertexId a = map.origin(e0), b = map.head(e0);
    const VertexId c = map.origin(e1), d = map.head(e1);
    const VertexId x = n, y = n + 1;

    std::vector<Rotation> rot = map.rotations();
    auto replace = [&](VertexId v, VertexId from, VertexId to) {
        auto& r = rot[v];
        *std::find(r.begin(), r.end(), from) = to;
    };
    replace(a, b, x);
    replace(b, a, x);
    replace(c, d, y);
    replace(d, c, y);
    rot.push_back({b, y, a});
    rot.push_back({d, x, c});

    SurgeryResult r;
    r.map = CombMap::from_rotation(rot);
    // Old darts keep their origin and rotation slot.
    r.face_image.resize(map.face_count());
    for (FaceId f = 0; f < map.face_count(); ++f) {
        std::set<FaceId> img;
        for (DartId dd : map.face_darts(f)) img.insert(r.map.face_of(dd));
        r.face_image[f].assign(img.begin(), img.end());
    }
    r.new_edge = r.map.twin(3 * x + 1);
    r.new_face = r.map.face_of(r.new_edge);
    r.other_face = r.map.face_of(3 * x + 1);
    return r;
}

TruncationSpec edge_truncation(const CombMap& map, DartId edge) {
    return TruncationSpec{map.face_of(edge), map.face_prev(edge), 1};
}

EdgeFaces edge_faces(const CombMap& map, DartId edge) {
    EdgeFaces f;
    f.left = map.face_of(edge);
    f.right = map.face_across(edge);
    // The third facet at a vertex lies between the two other darts there.
    f.at_origin = map.face_of(map.next(edge));
    f.at_head = map.face_of(map.next(map.twin(edge)));
    return f;
}

bool can_straighten(const CombMap& map, DartId edge) {
    if (map.vertex_count() == 4) return false;
    const EdgeFaces ef = edge_faces(map, edge);
    auto others = [&](FaceId f) {
        std::set<FaceId> s;
        for (FaceId g : map.face_neighbors(f)) {
            if (g != ef.left && g != ef.right && g != ef.at_origin && g != ef.at_head) s.insert(g);
        }
        return s;
    };
    const auto a = others(ef.left);
    const auto b = others(ef.right);
    for (FaceId g : a) {
        if (b.count(g)) return false;
    }
    return true;
}

bool can_straighten_by_belts(const CombMap& map, DartId edge) {
    if (map.vertex_count() == 4) return false;
    const EdgeFaces ef = edge_faces(map, edge);
    for (const Belt& belt : find_k_belts(map, 3)) {
        const auto& f = belt.faces;
        const bool has_left = std::find(f.begin(), f.end(), ef.left) != f.end();
        const bool has_right = std::find(f.begin(), f.end(), ef.right) != f.end();
        if (has_left && has_right) return false;
    }
    return true;
}

TruncationSignature straighten_signature(const CombMap& map, DartId edge) {
    const EdgeFaces ef = edge_faces(map, edge);
    const int s1 = map.face_size(ef.left), s2 = map.face_size(ef.right);
    return normalised(s1 - 3, s1 + s2 - 4, map.face_size(ef.at_origin) - 1,
                      map.face_size(ef.at_head) - 1);
}

SurgeryResult straighten(const CombMap& map, DartId edge) {
    if (map.vertex_count() == 4) {
        throw SurgeryError(SurgeryErrorKind::IsSimplex, "no straightening is defined on the simplex");
    }
    if (!can_straighten(map, edge)) {
        throw SurgeryError(SurgeryErrorKind::NotDefined, "the facets of the edge have a common neighbour");
    }
    const VertexId u = map.origin(edge), v = map.head(edge);
    const DartId back = map.twin(edge);
    const VertexId a1 = map.head(map.next(edge)), a2 = map.head(map.prev(edge));
    const VertexId b1 = map.head(map.next(back)), b2 = map.head(map.prev(back));

    std::vector<Rotation> rot = map.rotations();
    auto replace = [&](VertexId w, VertexId from, VertexId to) {
        auto& r = rot[w];
        *std::find(r.begin(), r.end(), from) = to;
    };
    replace(a1, u, a2);
    replace(a2, u, a1);
    replace(b1, v, b2);
    replace(b2, v, b1);

    const int n = map.vertex_count();
    std::vector<VertexId> id(n, -1);
    for (VertexId w = 0, next = 0; w < n; ++w) {
        if (w != u && w != v) id[w] = next++;
    }
    std::vector<Rotation> out;
    out.reserve(n - 2);
    for (VertexId w = 0; w < n; ++w) {
        if (id[w] < 0) continue;
        Rotation r = rot[w];
        for (auto& z : r) z = id[z];
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2]) {
            throw SurgeryError(SurgeryErrorKind::NotDefined, "straightening creates a multiple edge");
        }
        out.push_back(r);
    }

    SurgeryResult r;
    r.map = CombMap::from_rotation(out);
    r.face_image.resize(map.face_count());
    for (FaceId f = 0; f < map.face_count(); ++f) {
        for (DartId d : map.face_darts(f)) {
            const VertexId w = map.origin(d);
            if (w == u || w == v) continue;
            r.face_image[f] = {r.map.face_of(3 * id[w] + d % 3)};
            break;
        }
    }
    const EdgeFaces ef = edge_faces(map, edge);
    r.new_face = r.face_image[ef.left][0];
    // E_0 of the restoring truncation is the merged edge through v that
    // carries the merged facet on its left, leaving the far neighbour of v.
    const DartId to_v = map.twin(map.next(back));
    r.restore = TruncationSpec{r.new_face, 3 * id[map.origin(to_v)] + to_v % 3,
                               map.face_size(ef.left) - 3};
    return r;
}

bool is_flag(const CombMap& map) {
    return map.vertex_count() != 4 && find_k_belts(map, 3).empty();
}

FlagReport flag_effects(const CombMap& map, DartId edge) {
    FlagReport rep;
    rep.input_flag = is_flag(map);
    const EdgeFaces ef = edge_faces(map, edge);
    for (const Belt& belt : find_k_belts(map, 4)) {
        const auto& f = belt.faces;
        if (std::find(f.begin(), f.end(), ef.left) != f.end() &&
            std::find(f.begin(), f.end(), ef.right) != f.end()) {
            rep.four_belts.push_back(belt);
        }
    }
    const CombMap out = straighten(map, edge).map;
    rep.output_three_belts = find_k_belts(out, 3);
    rep.output_flag = out.vertex_count() != 4 && rep.output_three_belts.empty();
    return rep;
}

}  // namespace polysurg
