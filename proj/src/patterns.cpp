#include "polysurg/patterns.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <utility>

namespace polysurg {

int PatchPattern::index_of(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (faces[i].name == name) return i;
    }
    return -1;
}

int PatchPattern::hexagons() const {
    return static_cast<int>(std::count_if(faces.begin(), faces.end(), [](const PatternFace& f) { return f.size == 6; }));
}

void PatchPattern::validate() const {
    const int n = static_cast<int>(faces.size());
    if (n == 0) throw PatternError(0, "pattern " + id + " is empty");
    if (faces[0].size == 0) throw PatternError(0, "pattern " + id + ": first face must be sized");
    std::set<std::string> names;
    for (int i = 0; i < n; ++i) {
        const auto& f = faces[i];
        if (!names.insert(f.name).second) throw PatternError(0, "duplicate face " + f.name);
        if (f.size != 0 && static_cast<int>(f.neighbors.size()) != f.size) {
            throw PatternError(0, "face " + f.name + " lists " + std::to_string(f.neighbors.size()) +
                                      " neighbours but has size " + std::to_string(f.size));
        }
        if (f.size != 0 && f.size < 3) throw PatternError(0, "face " + f.name + " is too small");
        std::set<int> seen;
        for (int g : f.neighbors) {
            if (g == kOutside) continue;
            if (g < 0 || g >= n || g == i) throw PatternError(0, "face " + f.name + " has a bad neighbour");
            if (!seen.insert(g).second) {
                throw PatternError(0, "faces " + f.name + " and " + faces[g].name + " share two edges");
            }
            const auto& back = faces[g].neighbors;
            if (std::find(back.begin(), back.end(), i) == back.end()) {
                throw PatternError(0, "face " + faces[g].name + " does not list " + f.name);
            }
        }
    }
    // Every face must be reachable from face 0 through listed adjacencies.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : faces[f].neighbors) {
            if (g != kOutside && !seen[g]) {
                seen[g] = 1;
                stack.push_back(g);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!seen[i]) throw PatternError(0, "face " + faces[i].name + " is disconnected from the pattern");
    }
}

std::vector<int> boundary_contacts(const PatchPattern& p) {
    // Walk: after the outside run of face X ends, the boundary continues on
    // the next listed neighbour Y, right after X in Y's own list.
    struct Run {
        int face;
        int start;
        int length;
    };
    std::vector<Run> runs;
    std::map<std::pair<int, int>, int> run_at;  // (face, first position) -> run
    for (int i = 0; i < static_cast<int>(p.faces.size()); ++i) {
        const auto& nb = p.faces[i].neighbors;
        const int s = static_cast<int>(nb.size());
        if (p.faces[i].size == 0) {
            if (std::count(nb.begin(), nb.end(), kOutside) > 0) {
                throw PatternError(0, "wildcard face " + p.faces[i].name + " on the boundary");
            }
            continue;
        }
        if (std::all_of(nb.begin(), nb.end(), [](int g) { return g == kOutside; })) {
            throw PatternError(0, "isolated face " + p.faces[i].name);
        }
        for (int j = 0; j < s; ++j) {
            if (nb[j] != kOutside || nb[(j + s - 1) % s] == kOutside) continue;
            int len = 0;
            while (nb[(j + len) % s] == kOutside) ++len;
            run_at[{i, j}] = static_cast<int>(runs.size());
            runs.push_back({i, j, len});
        }
    }
    if (runs.empty()) return {};
    std::vector<int> out;
    std::vector<char> used(runs.size(), 0);
    int r = 0;
    while (!used[r]) {
        used[r] = 1;
        out.push_back(runs[r].length);
        const auto& x = p.faces[runs[r].face];
        const int s = static_cast<int>(x.neighbors.size());
        const int y = x.neighbors[(runs[r].start + runs[r].length) % s];
        const auto& ny = p.faces[y].neighbors;
        const int sy = static_cast<int>(ny.size());
        const int pos = static_cast<int>(std::find(ny.begin(), ny.end(), runs[r].face) - ny.begin());
        auto it = run_at.find({y, (pos + 1) % sy});
        if (it == run_at.end()) throw PatternError(0, "pattern " + p.id + " has an inconsistent boundary");
        r = it->second;
    }
    if (std::count(used.begin(), used.end(), 0) != 0) {
        throw PatternError(0, "pattern " + p.id + " boundary is not a single cycle");
    }
    return out;
}

bool same_cyclic_sequence(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    if (n == 0) return true;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t shift = 0; shift < n; ++shift) {
            bool eq = true;
            for (std::size_t i = 0; i < n && eq; ++i) {
                const std::size_t j = dir == 0 ? (i + shift) % n : (shift + n - i) % n;
                eq = a[i] == b[j];
            }
            if (eq) return true;
        }
    }
    return false;
}

PatchPattern extract_pattern(const CombMap& map, const std::vector<FaceId>& faces,
                             const std::vector<std::string>& names, const std::string& id) {
    PatchPattern p;
    p.id = id;
    std::map<FaceId, int> index;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) index[faces[i]] = i;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        PatternFace f;
        f.name = names[i];
        f.size = map.face_size(faces[i]);
        for (DartId d : map.face_darts(faces[i])) {
            auto it = index.find(map.face_across(d));
            f.neighbors.push_back(it == index.end() ? kOutside : it->second);
        }
        p.faces.push_back(std::move(f));
    }
    return p;
}

DartId oriented_step(const CombMap& map, DartId d, bool mirrored) {
    return mirrored ? map.face_prev(d) : map.face_next(d);
}

namespace {

DartId oriented_back(const CombMap& map, DartId d, bool mirrored) {
    return mirrored ? map.face_next(d) : map.face_prev(d);
}

// Extends the anchored assignment; returns false on any inconsistency.
bool propagate(const CombMap& map, const PatchPattern& p, DartId anchor, bool mirrored,
               std::vector<FaceId>& img, std::vector<DartId>& dart0) {
    const int n = static_cast<int>(p.faces.size());
    img.assign(n, kNoFace);
    dart0.assign(n, kNoDart);
    std::vector<int> owner(map.face_count(), -1);
    img[0] = map.face_of(anchor);
    dart0[0] = anchor;
    owner[img[0]] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        const auto& pf = p.faces[x];
        const FaceId mf = img[x];
        const int msize = map.face_size(mf);
        if (pf.size != 0 && msize != pf.size) return false;
        if (static_cast<int>(pf.neighbors.size()) > msize) return false;
        DartId d = dart0[x];
        for (int i = 0; i < static_cast<int>(pf.neighbors.size()); ++i, d = oriented_step(map, d, mirrored)) {
            const int y = pf.neighbors[i];
            const FaceId across = map.face_across(d);
            if (y == kOutside) {
                if (owner[across] >= 0) return false;
                continue;
            }
            if (img[y] != kNoFace) {
                if (img[y] != across) return false;
                continue;
            }
            if (owner[across] >= 0) return false;
            const auto& ny = p.faces[y].neighbors;
            const int j = static_cast<int>(std::find(ny.begin(), ny.end(), x) - ny.begin());
            DartId e = map.twin(d);
            for (int t = 0; t < j; ++t) e = oriented_back(map, e, mirrored);
            img[y] = across;
            dart0[y] = e;
            owner[across] = y;
            queue.push_back(y);
        }
    }
    // A late assignment may claim a face that an outside entry saw earlier.
    for (int x = 0; x < n; ++x) {
        if (img[x] == kNoFace) return false;
        DartId d = dart0[x];
        for (int y : p.faces[x].neighbors) {
            if (y == kOutside && owner[map.face_across(d)] >= 0) return false;
            d = oriented_step(map, d, mirrored);
        }
    }
    return true;
}

}  // namespace

std::vector<MatchResult> match_pattern(const CombMap& map, const PatchPattern& pattern, const MatchOptions& opt) {
    std::vector<MatchResult> out;
    std::set<std::vector<FaceId>> seen_sets;
    // A mirror-symmetric pattern matches the same faces in both orientations;
    // the scripts tell those correspondences apart.
    std::set<std::pair<std::vector<FaceId>, bool>> seen_maps;
    std::vector<FaceId> img;
    std::vector<DartId> dart0;
    for (int o = 0; o < 2; ++o) {
        const bool mirrored = o == 1;
        for (DartId d = 0; d < map.dart_count(); ++d) {
            if (!propagate(map, pattern, d, mirrored, img, dart0)) continue;
            if (opt.distinct_face_sets) {
                std::vector<FaceId> key = img;
                std::sort(key.begin(), key.end());
                if (!seen_sets.insert(key).second) continue;
            } else if (!seen_maps.insert({img, mirrored}).second) {
                continue;
            }
            out.push_back(MatchResult{img, d, mirrored});
        }
    }
    return out;
}

bool is_match(const CombMap& map, const PatchPattern& pattern, const std::vector<FaceId>& faces, bool mirrored) {
    if (faces.size() != pattern.faces.size() || faces.empty()) return false;
    // Anchor face 0 on each of its darts and compare the propagated images.
    std::vector<FaceId> img;
    std::vector<DartId> dart0;
    for (DartId d : map.face_darts(faces[0])) {
        if (propagate(map, pattern, d, mirrored, img, dart0) && img == faces) return true;
    }
    return false;
}

void write_pattern_faces(std::ostream& out, const PatchPattern& p, const std::string& indent) {
    for (const auto& f : p.faces) {
        out << indent << "face " << f.name << ' ';
        if (f.size == 0) {
            out << '*';
        } else {
            out << f.size;
        }
        out << " :";
        for (int g : f.neighbors) out << ' ' << (g == kOutside ? std::string("B") : p.faces[g].name);
        out << '\n';
    }
}

ThickPath shortest_thick_path(const CombMap& map, FaceId a, FaceId b) {
    const int n = map.face_count();
    std::vector<int> dist(n, -1);
    std::vector<FaceId> parent(n, kNoFace);
    // BFS from b so that the path can be read forwards from a; neighbours are
    // scanned in increasing id for the tie-break.
    std::deque<FaceId> queue{b};
    dist[b] = 0;
    while (!queue.empty()) {
        FaceId f = queue.front();
        queue.pop_front();
        auto nb = map.face_neighbors(f);
        std::sort(nb.begin(), nb.end());
        for (FaceId g : nb) {
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
        }
    }
    ThickPath path;
    FaceId cur = a;
    path.faces.push_back(cur);
    while (cur != b) {
        auto nb = map.face_neighbors(cur);
        std::sort(nb.begin(), nb.end());
        for (FaceId g : nb) {
            if (dist[g] == dist[cur] - 1) {
                cur = g;
                break;
            }
        }
        path.faces.push_back(cur);
    }
    return path;
}

namespace {

int edge_position(const CombMap& map, FaceId f, FaceId g) {
    const auto nb = map.face_neighbors(f);
    return static_cast<int>(std::find(nb.begin(), nb.end(), g) - nb.begin());
}

}  // namespace

std::vector<PathStep> path_steps(const CombMap& map, const ThickPath& path) {
    std::vector<PathStep> steps;
    for (int i = 1; i + 1 < path.length(); ++i) {
        const FaceId f = path.faces[i];
        const int s = map.face_size(f);
        const int diff = (edge_position(map, f, path.faces[i + 1]) - edge_position(map, f, path.faces[i - 1]) + s) % s;
        if (s == 6 && diff == 3) {
            steps.push_back(PathStep::Forward);
        } else if (s == 6 && diff == 2) {
            steps.push_back(PathStep::Left);
        } else if (s == 6 && diff == 4) {
            steps.push_back(PathStep::Right);
        } else {
            steps.push_back(PathStep::Other);
        }
    }
    return steps;
}

namespace {

bool valid_thick_path(const CombMap& map, const ThickPath& p) {
    std::set<FaceId> distinct(p.faces.begin(), p.faces.end());
    if (static_cast<int>(distinct.size()) != p.length()) return false;
    for (int i = 0; i + 1 < p.length(); ++i) {
        if (!map.faces_adjacent(p.faces[i], p.faces[i + 1])) return false;
    }
    for (int i = 1; i + 1 < p.length(); ++i) {
        if (map.face_size(p.faces[i]) != 6) return false;
    }
    return true;
}

}  // namespace

ThickPath normalize_path(const CombMap& map, const ThickPath& input) {
    ThickPath path = input;
    for (int guard = 0; guard < 4 * input.length() * input.length(); ++guard) {
        const auto steps = path_steps(map, path);
        std::vector<int> turns;
        for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
            if (steps[i] == PathStep::Other) return input;
            if (steps[i] != PathStep::Forward) turns.push_back(i + 1);
        }
        if (turns.size() <= 1) return path;
        const int p = turns[0], q = turns[1];
        if (steps[p - 1] == steps[q - 1]) return input;
        // Shift the segment between the two turns to the parallel row on the
        // outer side of the first turn.
        const auto& f = path.faces;
        const int s = map.face_size(f[p]);
        const int ahead = (edge_position(map, f[p], f[p - 1]) + 3) % s;
        std::vector<FaceId> row{map.face_neighbors(f[p])[ahead]};
        for (int k = p + 1; k < q; ++k) {
            FaceId pick = kNoFace;
            for (FaceId g : map.face_neighbors(f[k])) {
                if (g != row.back() && map.faces_adjacent(g, f[k + 1]) && map.faces_adjacent(g, row.back()) &&
                    g != f[k - 1] && g != f[k + 1]) {
                    pick = g;
                }
            }
            if (pick == kNoFace) return input;
            row.push_back(pick);
        }
        ThickPath next;
        next.faces.assign(f.begin(), f.begin() + p + 1);
        next.faces.insert(next.faces.end(), row.begin(), row.end());
        next.faces.insert(next.faces.end(), f.begin() + q + 1, f.end());
        if (next.length() != path.length() || !valid_thick_path(map, next) ||
            !map.faces_adjacent(row.back(), f[q + 1])) {
            return input;
        }
        path = next;
    }
    return input;
}

}  // namespace polysurg
