#include "polysurg/belts.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace polysurg {

bool FaceLoop::simple() const {
    std::vector<FaceId> sorted = faces;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// Groups the cyclic sequence into maximal runs of equal entries.
FaceLoop runs_of(const std::vector<FaceId>& seq) {
    FaceLoop loop;
    const int m = static_cast<int>(seq.size());
    int start = 0;
    while (start < m && seq[start] == seq[(start + m - 1) % m]) ++start;
    if (start == m) {
        loop.faces.push_back(seq[0]);
        loop.contact.push_back(m);
        return loop;
    }
    for (int i = 0; i < m; ++i) {
        const FaceId f = seq[(start + i) % m];
        if (loop.faces.empty() || loop.faces.back() != f || i == 0) {
            loop.faces.push_back(f);
            loop.contact.push_back(1);
        } else {
            ++loop.contact.back();
        }
    }
    return loop;
}

bool is_disk(const CombMap& map, const std::vector<FaceId>& faces, const std::vector<char>& crossing) {
    if (faces.empty()) return false;
    std::vector<char> in(map.face_count(), 0);
    for (FaceId f : faces) in[f] = 1;
    std::set<VertexId> vertices;
    std::set<DartId> edges;
    for (FaceId f : faces) {
        for (DartId d : map.face_darts(f)) {
            vertices.insert(map.origin(d));
            edges.insert(std::min(d, map.twin(d)));
        }
    }
    const long euler = static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) +
                       static_cast<long>(faces.size());
    if (euler != 1) return false;
    std::vector<char> seen(map.face_count(), 0);
    std::vector<FaceId> stack{faces[0]};
    seen[faces[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        FaceId f = stack.back();
        stack.pop_back();
        for (DartId d : map.face_darts(f)) {
            if (crossing[d]) continue;
            FaceId g = map.face_across(d);
            if (in[g] && !seen[g]) {
                seen[g] = 1;
                ++reached;
                stack.push_back(g);
            }
        }
    }
    return reached == faces.size();
}

}  // namespace

RegionSplit split_by_cycle(const CombMap& map, const EdgeCycle& cycle) {
    const auto& ds = cycle.darts;
    const int m = static_cast<int>(ds.size());
    if (m < 3) throw BeltError("cycle too short");
    std::vector<char> visited(map.vertex_count(), 0);
    for (int i = 0; i < m; ++i) {
        if (map.head(ds[i]) != map.origin(ds[(i + 1) % m])) throw BeltError("walk is not closed");
        if (visited[map.origin(ds[i])]++) throw BeltError("cycle repeats a vertex");
    }
    std::vector<char> crossing(map.dart_count(), 0);
    for (DartId d : ds) crossing[d] = crossing[map.twin(d)] = 1;

    RegionSplit split;
    split.cycle = cycle;
    std::vector<int> side_of(map.face_count(), -1);
    for (int s = 0; s < 2; ++s) {
        std::vector<FaceId> stack;
        for (DartId d : ds) {
            const FaceId f = s == 0 ? map.face_of(d) : map.face_across(d);
            if (side_of[f] == 1 - s) throw BeltError("cycle does not separate");
            if (side_of[f] < 0) {
                side_of[f] = s;
                stack.push_back(f);
            }
        }
        while (!stack.empty()) {
            FaceId f = stack.back();
            stack.pop_back();
            for (DartId d : map.face_darts(f)) {
                if (crossing[d]) continue;
                FaceId g = map.face_across(d);
                if (side_of[g] == 1 - s) throw BeltError("cycle does not separate");
                if (side_of[g] < 0) {
                    side_of[g] = s;
                    stack.push_back(g);
                }
            }
        }
    }
    for (FaceId f = 0; f < map.face_count(); ++f) {
        if (side_of[f] >= 0) split.side[side_of[f]].push_back(f);
    }
    std::vector<FaceId> left, right;
    for (DartId d : ds) {
        left.push_back(map.face_of(d));
        right.push_back(map.face_across(d));
    }
    split.loop[0] = runs_of(left);
    split.loop[1] = runs_of(right);
    for (int s = 0; s < 2; ++s) split.side_is_disk[s] = is_disk(map, split.side[s], crossing);
    return split;
}

EdgeCycle boundary_cycle(const CombMap& map, const std::vector<FaceId>& faces) {
    std::vector<char> in(map.face_count(), 0);
    for (FaceId f : faces) in[f] = 1;
    auto on_boundary = [&](DartId d) { return in[map.face_of(d)] && !in[map.face_across(d)]; };
    std::vector<DartId> all;
    for (FaceId f : faces) {
        for (DartId d : map.face_darts(f)) {
            if (on_boundary(d)) all.push_back(d);
        }
    }
    if (all.empty()) throw BeltError("face set has no boundary");
    EdgeCycle cycle;
    DartId d = all.front();
    do {
        cycle.darts.push_back(d);
        const DartId back = map.twin(d);
        DartId e = kNoDart;
        for (DartId c : {map.next(back), map.prev(back)}) {
            if (on_boundary(c)) {
                if (e != kNoDart) throw BeltError("boundary is pinched");
                e = c;
            }
        }
        if (e == kNoDart) throw BeltError("boundary is broken");
        d = e;
        if (cycle.darts.size() > all.size()) throw BeltError("boundary is not a simple cycle");
    } while (d != all.front());
    if (cycle.darts.size() != all.size()) throw BeltError("boundary has several components");
    std::vector<char> seen(map.vertex_count(), 0);
    for (DartId c : cycle.darts) {
        if (seen[map.origin(c)]++) throw BeltError("boundary repeats a vertex");
    }
    return cycle;
}

DualGraph::DualGraph(const CombMap& map) : n_(map.face_count()), adj_(n_ * n_, 0), nbr_(n_) {
    for (FaceId f = 0; f < n_; ++f) {
        nbr_[f] = map.face_neighbors(f);
        for (FaceId g : nbr_[f]) adj_[f * n_ + g] = 1;
    }
}

bool is_belt(const CombMap& map, const std::vector<FaceId>& faces) {
    const int k = static_cast<int>(faces.size());
    if (k < 3) return false;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (faces[i] == faces[j]) return false;
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (map.faces_adjacent(faces[i], faces[j]) != consecutive) return false;
        }
    }
    if (k == 3 && map.faces_meet_at_vertex(faces[0], faces[1], faces[2])) return false;
    return true;
}

namespace {

void enumerate_cycles(const DualGraph& g, int k, bool chordless,
                      const std::function<void(const std::vector<FaceId>&)>& emit) {
    const int n = g.size();
    std::vector<FaceId> path;
    std::vector<char> on_path(n, 0);
    std::function<void()> extend = [&]() {
        const FaceId last = path.back();
        const int pos = static_cast<int>(path.size());
        if (pos == k) {
            if (g.adjacent(last, path[0]) && path[1] < path[k - 1]) emit(path);
            return;
        }
        for (FaceId h : g.neighbors(last)) {
            if (h <= path[0] || on_path[h]) continue;
            if (chordless) {
                bool chord = false;
                for (int i = 0; i + 1 < pos && !chord; ++i) {
                    if (i == 0 && pos == k - 1) continue;
                    chord = g.adjacent(h, path[i]);
                }
                if (chord) continue;
            }
            path.push_back(h);
            on_path[h] = 1;
            extend();
            on_path[h] = 0;
            path.pop_back();
        }
    };
    for (FaceId f = 0; f < n; ++f) {
        path = {f};
        on_path[f] = 1;
        extend();
        on_path[f] = 0;
    }
}

}  // namespace

std::vector<std::vector<FaceId>> find_k_loops(const CombMap& map, int k) {
    if (k < 3) throw BeltError("loops need k >= 3");
    DualGraph g(map);
    std::vector<std::vector<FaceId>> out;
    enumerate_cycles(g, k, false, [&](const std::vector<FaceId>& c) { out.push_back(c); });
    return out;
}

std::vector<Belt> find_k_belts(const CombMap& map, int k) {
    if (k < 3) throw BeltError("belts need k >= 3");
    DualGraph g(map);
    std::vector<Belt> out;
    enumerate_cycles(g, k, k > 3, [&](const std::vector<FaceId>& c) {
        if (k == 3 && map.faces_meet_at_vertex(c[0], c[1], c[2])) return;
        out.push_back(Belt{c});
    });
    return out;
}

const char* to_string(BeltCase c) {
    switch (c) {
        case BeltCase::SurroundsTwoFacets: return "surrounds-two-facets";
        case BeltCase::SurroundsFacet: return "surrounds-facet";
        case BeltCase::BordersLoops: return "borders-loops";
    }
    return "?";
}

BeltAnalysis border_loops(const CombMap& map, const Belt& belt) {
    if (!is_belt(map, belt.faces)) throw BeltError("not a belt");
    const int k = belt.k();
    BeltAnalysis a;
    a.belt = belt;
    a.b.assign(9, 0);
    a.alpha.assign(k, 0);
    a.beta.assign(k, 0);
    std::vector<std::vector<DartId>> arc[2];
    arc[0].resize(k);
    arc[1].resize(k);
    for (int j = 0; j < k; ++j) {
        const FaceId f = belt.faces[j];
        const FaceId prev = belt.faces[(j + k - 1) % k];
        const FaceId next = belt.faces[(j + 1) % k];
        const int s = map.face_size(f);
        if (s < 9) ++a.b[s];
        const DartId to_next = map.shared_edge(f, next);
        const DartId to_prev = map.shared_edge(f, prev);
        for (DartId d = map.face_next(to_next); d != to_prev; d = map.face_next(d)) arc[0][j].push_back(d);
        for (DartId d = map.face_next(to_prev); d != to_next; d = map.face_next(d)) arc[1][j].push_back(d);
        a.alpha[j] = static_cast<int>(arc[0][j].size());
        a.beta[j] = static_cast<int>(arc[1][j].size());
    }
    // Side-0 arcs run from the next face towards the previous one, so the
    // cycle visits the belt backwards; side-1 arcs visit it forwards.
    for (int i = 0; i < k; ++i) {
        const auto& p0 = arc[0][(k - i) % k];
        a.gamma[0].darts.insert(a.gamma[0].darts.end(), p0.begin(), p0.end());
        const auto& p1 = arc[1][i];
        a.gamma[1].darts.insert(a.gamma[1].darts.end(), p1.begin(), p1.end());
    }
    for (int s = 0; s < 2; ++s) {
        RegionSplit split = split_by_cycle(map, a.gamma[s]);
        a.region[s] = split.side[1];
        a.loop[s] = split.loop[1];
    }
    const int single = (a.region[0].size() == 1) + (a.region[1].size() == 1);
    a.kind = single == 2 ? BeltCase::SurroundsTwoFacets
             : single == 1 ? BeltCase::SurroundsFacet
                           : BeltCase::BordersLoops;

    bool contact = true;
    for (int s = 0; s < 2; ++s) {
        const auto& w = s == 0 ? a.alpha : a.beta;
        int expected = 0, total = 0;
        for (int x : w) {
            expected += x - 1;
            total += x;
        }
        if (a.region[s].size() == 1) {
            contact = contact && a.loop[s].length() == 1 && a.loop[s].contact[0] == total;
        } else {
            contact = contact && a.loop[s].length() == expected;
        }
    }
    a.contact_ok = contact;

    const int l1 = a.loop[0].length(), l2 = a.loop[1].length();
    switch (a.kind) {
        case BeltCase::SurroundsTwoFacets: a.loop_sum_ok = a.b[4] == k; break;
        case BeltCase::SurroundsFacet: {
            const int other = a.region[0].size() == 1 ? l2 : l1;
            a.loop_sum_ok = other == a.b[5] + 2 * a.b[6] + 3 * a.b[7];
            break;
        }
        case BeltCase::BordersLoops:
            a.loop_sum_ok = l1 + l2 == 2 * k - 2 * a.b[4] - a.b[5] + a.b[7];
            break;
    }
    return a;
}

FiveBeltReport classify_five_belts(const CombMap& map) {
    const FaceVector fv = face_vector(map);
    for (auto [size, count] : fv) {
        if (size != 5 && size != 6) throw BeltError("not a fullerene: has a " + std::to_string(size) + "-gon");
    }
    if (fv.count(5) == 0 || fv.at(5) != 12) throw BeltError("not a fullerene: p5 != 12");
    FiveBeltReport r;
    r.belts = find_k_belts(map, 5);
    r.count = static_cast<int>(r.belts.size());
    for (const Belt& b : r.belts) {
        const BeltAnalysis a = border_loops(map, b);
        FiveBeltKind kind = FiveBeltKind::Other;
        if (a.kind == BeltCase::SurroundsFacet) {
            const auto& one = a.region[0].size() == 1 ? a.region[0] : a.region[1];
            if (map.face_size(one[0]) == 5) kind = FiveBeltKind::SurroundsPentagon;
        } else {
            bool ring = a.b[6] == 5;
            for (int j = 0; j < 5; ++j) ring = ring && a.alpha[j] == 2 && a.beta[j] == 2;
            if (ring) kind = FiveBeltKind::HexagonRing;
        }
        if (kind == FiveBeltKind::SurroundsPentagon) ++r.surrounds_pentagon;
        if (kind == FiveBeltKind::HexagonRing) ++r.hexagon_rings;
        r.kinds.push_back(kind);
    }
    return r;
}

std::vector<ThreeLoopCheck> check_three_loops(const CombMap& map) {
    std::vector<ThreeLoopCheck> out;
    for (const auto& loop : find_k_loops(map, 3)) {
        if (is_belt(map, loop)) continue;
        ThreeLoopCheck c;
        c.faces = loop;
        c.common_vertex = map.faces_meet_at_vertex(loop[0], loop[1], loop[2]);
        c.expected_length = map.face_size(loop[0]) + map.face_size(loop[1]) + map.face_size(loop[2]) - 9;
        try {
            const EdgeCycle cyc = boundary_cycle(map, loop);
            c.bordering_length = split_by_cycle(map, cyc).loop[1].length();
        } catch (const BeltError&) {
            c.bordering_length = -1;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace polysurg
