#include "polysurg/comb_map.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>

namespace polysurg {

const char* to_string(MapErrorKind kind) {
    switch (kind) {
        case MapErrorKind::NonCubic: return "NonCubic";
        case MapErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case MapErrorKind::NonPlanar: return "NonPlanar";
        case MapErrorKind::Disconnected: return "Disconnected";
    }
    return "?";
}

namespace {

bool graph_connected(int n, const std::vector<DartId>& twin, int skip_a = -1, int skip_b = -1) {
    std::vector<char> seen(n, 0);
    int start = -1;
    int live = 0;
    for (int v = 0; v < n; ++v) {
        if (v == skip_a || v == skip_b) continue;
        ++live;
        if (start < 0) start = v;
    }
    if (live == 0) return true;
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i = 0; i < 3; ++i) {
            int w = twin[3 * v + i] / 3;
            if (w == skip_a || w == skip_b || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == live;
}

}  // namespace

CombMap CombMap::from_rotation(std::span<const Rotation> rotations) {
    const int n = static_cast<int>(rotations.size());
    for (int v = 0; v < n; ++v) {
        const auto& r = rotations[v];
        for (int i = 0; i < 3; ++i) {
            if (r[i] < 0 || r[i] >= n || r[i] == v) {
                throw MapError(MapErrorKind::NonCubic,
                               "vertex " + std::to_string(v) + " has an invalid neighbour");
            }
        }
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2]) {
            throw MapError(MapErrorKind::NonCubic,
                           "vertex " + std::to_string(v) + " repeats a neighbour");
        }
    }
    CombMap map;
    map.twin_.assign(3 * n, kNoDart);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < 3; ++i) {
            const VertexId w = rotations[v][i];
            const auto& rw = rotations[w];
            auto it = std::find(rw.begin(), rw.end(), v);
            if (it == rw.end()) {
                throw MapError(MapErrorKind::AsymmetricAdjacency,
                               "vertex " + std::to_string(v) + " lists " + std::to_string(w) +
                                   " but not conversely");
            }
            map.twin_[3 * v + i] = 3 * w + static_cast<int>(it - rw.begin());
        }
    }
    if (n == 0 || !graph_connected(n, map.twin_)) {
        throw MapError(MapErrorKind::Disconnected, "graph is not connected");
    }
    map.compute_faces();
    if (map.vertex_count() - map.edge_count() + map.face_count() != 2) {
        throw MapError(MapErrorKind::NonPlanar,
                       "Euler characteristic " +
                           std::to_string(map.vertex_count() - map.edge_count() +
                                          map.face_count()) +
                           " != 2");
    }
    return map;
}

void CombMap::compute_faces() {
    const int darts = dart_count();
    face_of_.assign(darts, kNoFace);
    face_start_.clear();
    face_size_.clear();
    for (DartId d = 0; d < darts; ++d) {
        if (face_of_[d] != kNoFace) continue;
        const FaceId f = static_cast<FaceId>(face_start_.size());
        int size = 0;
        DartId e = d;
        do {
            face_of_[e] = f;
            ++size;
            e = face_next(e);
        } while (e != d);
        face_start_.push_back(d);
        face_size_.push_back(size);
    }
}

std::vector<DartId> CombMap::face_darts(FaceId f) const {
    std::vector<DartId> out;
    out.reserve(face_size_[f]);
    DartId d = face_start_[f];
    DartId e = d;
    do {
        out.push_back(e);
        e = face_next(e);
    } while (e != d);
    return out;
}

std::vector<FaceId> CombMap::face_neighbors(FaceId f) const {
    std::vector<FaceId> out;
    out.reserve(face_size_[f]);
    for (DartId d : face_darts(f)) out.push_back(face_across(d));
    return out;
}

std::array<FaceId, 3> CombMap::vertex_faces(VertexId v) const {
    return {face_of_[3 * v], face_of_[3 * v + 1], face_of_[3 * v + 2]};
}

DartId CombMap::shared_edge(FaceId f, FaceId g) const {
    DartId d = face_start_[f];
    DartId e = d;
    do {
        if (face_across(e) == g) return e;
        e = face_next(e);
    } while (e != d);
    return kNoDart;
}

bool CombMap::faces_meet_at_vertex(FaceId a, FaceId b, FaceId c) const {
    DartId d = face_start_[a];
    DartId e = d;
    do {
        auto fs = vertex_faces(origin(e));
        if (std::find(fs.begin(), fs.end(), b) != fs.end() &&
            std::find(fs.begin(), fs.end(), c) != fs.end()) {
            return true;
        }
        e = face_next(e);
    } while (e != d);
    return false;
}

std::vector<Rotation> CombMap::rotations() const {
    std::vector<Rotation> out(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v) {
        for (int i = 0; i < 3; ++i) out[v][i] = head(3 * v + i);
    }
    return out;
}

CombMap CombMap::mirror() const {
    auto rot = rotations();
    for (auto& r : rot) std::swap(r[1], r[2]);
    return from_rotation(rot);
}

CombMap CombMap::relabel(std::span<const VertexId> perm) const {
    auto rot = rotations();
    std::vector<Rotation> out(rot.size());
    for (std::size_t v = 0; v < rot.size(); ++v) {
        Rotation r{perm[rot[v][0]], perm[rot[v][1]], perm[rot[v][2]]};
        out[perm[v]] = r;
    }
    return from_rotation(out);
}

FaceVector face_vector(const CombMap& map) {
    FaceVector fv;
    for (FaceId f = 0; f < map.face_count(); ++f) ++fv[map.face_size(f)];
    return fv;
}

int face_count_residual(const FaceVector& fv) {
    auto count = [&](int k) {
        auto it = fv.find(k);
        return it == fv.end() ? 0 : it->second;
    };
    int lhs = 3 * count(3) + 2 * count(4) + count(5);
    int rhs = 12;
    for (const auto& [k, p] : fv) {
        if (k >= 7) rhs += (k - 6) * p;
    }
    return lhs - rhs;
}

namespace {

// Smallest articulation point above `floor` of the graph without `skip`, or
// -1. Iterative Tarjan lowpoint search; parallel edges count separately.
int first_cut_vertex(int n, const std::vector<DartId>& twin, int skip, int floor) {
    std::vector<int> order(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int clock = 0;
    for (int root = 0; root < n; ++root) {
        if (root == skip || order[root] >= 0) continue;
        // Frame: vertex, dart it was entered by (-1 at the root), next slot.
        struct Frame {
            int v;
            DartId in;
            int slot;
        };
        std::vector<Frame> stack{{root, -1, 0}};
        order[root] = low[root] = clock++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.slot == 3) {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    const int p = stack.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (stack.size() > 1 && low[done.v] >= order[p]) cut[p] = 1;
                    if (stack.size() == 1) ++root_children;
                }
                continue;
            }
            const DartId d = 3 * f.v + f.slot++;
            const int w = twin[d] / 3;
            if (w == skip || twin[d] == f.in) continue;
            if (order[w] >= 0) {
                low[f.v] = std::min(low[f.v], order[w]);
            } else {
                order[w] = low[w] = clock++;
                stack.push_back({w, d, 0});
            }
        }
        if (root_children > 1) cut[root] = 1;
    }
    for (int v = floor + 1; v < n; ++v) {
        if (cut[v]) return v;
    }
    return -1;
}

}  // namespace

std::array<VertexId, 2> find_separating_pair(const CombMap& map) {
    const int n = map.vertex_count();
    std::vector<DartId> twin(map.dart_count());
    for (DartId d = 0; d < map.dart_count(); ++d) twin[d] = map.twin(d);
    // {a, b} separates exactly when b is a cut vertex once a is removed.
    for (int a = 0; a < n; ++a) {
        if (!graph_connected(n, twin, a)) {
            return {0, a == 0 ? 1 : a};
        }
        const int b = first_cut_vertex(n, twin, a, a);
        if (b >= 0) return {a, b};
    }
    return {-1, -1};
}

ValidationReport validate(const CombMap& map) {
    ValidationReport rep;
    rep.faces = face_vector(map);
    rep.f0 = map.vertex_count();
    rep.f1 = map.edge_count();
    rep.f2 = map.face_count();
    rep.euler_ok = rep.f0 - rep.f1 + rep.f2 == 2;
    rep.cubic_ok = 2 * rep.f1 == 3 * rep.f0;
    rep.simple_graph = true;
    const auto rot = map.rotations();
    for (VertexId v = 0; v < rep.f0; ++v) {
        const auto& r = rot[v];
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2] || r[0] == v || r[1] == v || r[2] == v) {
            rep.simple_graph = false;
        }
    }
    {
        std::vector<DartId> twin(map.dart_count());
        for (DartId d = 0; d < map.dart_count(); ++d) twin[d] = map.twin(d);
        rep.connected = graph_connected(rep.f0, twin);
    }
    rep.separating_pair = find_separating_pair(map);
    rep.three_connected = rep.connected && rep.f1 >= 4 && rep.separating_pair[0] < 0;
    rep.faces_meet_properly = true;
    for (FaceId f = 0; f < rep.f2 && rep.faces_meet_properly; ++f) {
        auto nb = map.face_neighbors(f);
        std::vector<FaceId> sorted = nb;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
            std::binary_search(sorted.begin(), sorted.end(), f)) {
            rep.faces_meet_properly = false;
        }
    }
    rep.residual = face_count_residual(rep.faces);
    return rep;
}

// ---------------------------------------------------------------------------
// Canonical code

std::vector<std::uint8_t> CanonicalCode::bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(2 * words_.size());
    for (auto w : words_) {
        out.push_back(static_cast<std::uint8_t>(w >> 8));
        out.push_back(static_cast<std::uint8_t>(w & 0xff));
    }
    return out;
}

std::string CanonicalCode::hex() const {
    std::string s;
    s.reserve(4 * words_.size());
    char buf[8];
    for (auto b : bytes()) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        s += buf;
    }
    return s;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : c.words()) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

namespace {

struct CodeSearch {
    const CombMap& map;
    std::vector<int> label;
    std::vector<DartId> queue;
    std::vector<std::uint16_t> best;
    DartId best_root = kNoDart;
    bool best_reversed = false;

    explicit CodeSearch(const CombMap& m)
        : map(m), label(m.vertex_count(), 0), queue(m.vertex_count()) {}

    // Writes the BFS code rooted at `root`; stops as soon as it exceeds `best`.
    // Returns true when the produced code is strictly smaller than `best`.
    bool run(DartId root, bool reversed) {
        std::fill(label.begin(), label.end(), 0);
        const bool have_best = !best.empty();
        std::vector<std::uint16_t> code;
        code.reserve(3 * map.vertex_count());
        int cmp = have_best ? 0 : -1;
        int next_label = 1;
        int qhead = 0, qtail = 0;
        label[map.origin(root)] = next_label++;
        queue[qtail++] = root;
        while (qhead < qtail) {
            DartId d = queue[qhead++];
            DartId e = d;
            for (int i = 0; i < 3; ++i) {
                const VertexId w = map.head(e);
                if (label[w] == 0) {
                    label[w] = next_label++;
                    queue[qtail++] = map.twin(e);
                }
                const auto word = static_cast<std::uint16_t>(label[w]);
                if (cmp == 0) {
                    const auto ref = best[code.size()];
                    if (word > ref) return false;
                    if (word < ref) cmp = -1;
                }
                code.push_back(word);
                e = reversed ? map.prev(e) : map.next(e);
            }
        }
        if (cmp < 0) {
            best = std::move(code);
            best_root = root;
            best_reversed = reversed;
            return true;
        }
        return false;
    }

    void search(bool try_forward, bool try_reversed) {
        for (int o = 0; o < 2; ++o) {
            const bool reversed = o == 1;
            if ((reversed && !try_reversed) || (!reversed && !try_forward)) continue;
            for (DartId d = 0; d < map.dart_count(); ++d) run(d, reversed);
        }
    }
};

}  // namespace

CanonicalCode canonical_code(const CombMap& map) {
    CodeSearch s(map);
    s.search(true, true);
    return CanonicalCode(std::move(s.best));
}

bool is_isomorphic(const CombMap& a, const CombMap& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (face_vector(a) != face_vector(b)) return false;
    return canonical_code(a) == canonical_code(b);
}

bool is_achiral(const CombMap& map) {
    CodeSearch fwd(map);
    fwd.search(true, false);
    CodeSearch rev(map);
    rev.search(false, true);
    return fwd.best == rev.best;
}

CombMap canonical_form(const CombMap& map) {
    CodeSearch s(map);
    s.search(true, true);
    // Relabel by BFS order and read rotations off the code.
    const int n = map.vertex_count();
    std::vector<Rotation> rot(n);
    const auto& w = s.best;
    for (int v = 0; v < n; ++v) {
        Rotation r{w[3 * v] - 1, w[3 * v + 1] - 1, w[3 * v + 2] - 1};
        rot[v] = r;
    }
    // BFS codes list neighbours in the traversal rotation; a reversed traversal
    // already describes the mirror image, which is combinatorially equivalent.
    return CombMap::from_rotation(rot);
}

}  // namespace polysurg
