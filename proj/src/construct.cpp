#include "polysurg/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <tuple>
#include <stdexcept>

namespace polysurg {

CombMap from_drawing(std::span<const std::array<VertexId, 3>> adjacency,
                     std::span<const Point2> position, VertexId at_infinity) {
    const int n = static_cast<int>(adjacency.size());
    std::vector<Rotation> rot(n);
    for (int v = 0; v < n; ++v) {
        std::array<std::pair<double, VertexId>, 3> dirs;
        for (int i = 0; i < 3; ++i) {
            const VertexId w = adjacency[v][i];
            double angle = 0;
            if (v == at_infinity) {
                // Seen from the point at infinity the cyclic order flips.
                angle = -std::atan2(position[w].y, position[w].x);
            } else if (w == at_infinity) {
                angle = std::atan2(position[v].y, position[v].x);
            } else {
                angle = std::atan2(position[w].y - position[v].y, position[w].x - position[v].x);
            }
            dirs[i] = {angle, w};
        }
        std::sort(dirs.begin(), dirs.end());
        for (int i = 0; i < 3; ++i) rot[v][i] = dirs[i].second;
    }
    return CombMap::from_rotation(rot);
}

namespace {

struct GraphBuilder {
    std::vector<std::vector<VertexId>> adj;
    std::vector<Point2> pos;

    VertexId add(double radius, double degrees) {
        const double t = degrees * std::numbers::pi / 180.0;
        pos.push_back({radius * std::cos(t), radius * std::sin(t)});
        adj.emplace_back();
        return static_cast<VertexId>(adj.size() - 1);
    }
    void edge(VertexId a, VertexId b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    CombMap build(VertexId at_infinity = -1) const {
        std::vector<std::array<VertexId, 3>> a(adj.size());
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (adj[v].size() != 3) throw std::logic_error("construction is not cubic");
            a[v] = {adj[v][0], adj[v][1], adj[v][2]};
        }
        return from_drawing(a, pos, at_infinity);
    }
};

}  // namespace

CombMap tetrahedron() {
    GraphBuilder g;
    VertexId c = g.add(0, 0);
    VertexId a = g.add(1, 90), b = g.add(1, 210), d = g.add(1, 330);
    g.edge(c, a);
    g.edge(c, b);
    g.edge(c, d);
    g.edge(a, b);
    g.edge(b, d);
    g.edge(d, a);
    return g.build();
}

CombMap prism(int n) {
    if (n < 3) throw std::invalid_argument("prism needs n >= 3");
    GraphBuilder g;
    std::vector<VertexId> in(n), out(n);
    for (int i = 0; i < n; ++i) in[i] = g.add(1, 360.0 * i / n);
    for (int i = 0; i < n; ++i) out[i] = g.add(2, 360.0 * i / n);
    for (int i = 0; i < n; ++i) {
        g.edge(in[i], in[(i + 1) % n]);
        g.edge(out[i], out[(i + 1) % n]);
        g.edge(in[i], out[i]);
    }
    return g.build();
}

CombMap cube() { return prism(4); }

CombMap capped_tube(int n, int rings) {
    if (n < 3 || rings < 0) throw std::invalid_argument("capped_tube: bad parameters");
    GraphBuilder g;
    const int m = 2 * n;
    const double step = 360.0 / m;
    std::vector<VertexId> top(n);
    for (int i = 0; i < n; ++i) top[i] = g.add(1, step * 2 * i);
    std::vector<std::vector<VertexId>> ring(rings + 1, std::vector<VertexId>(m));
    double radius = 2;
    for (int j = 0; j <= rings; ++j, radius *= 1.6) {
        for (int p = 0; p < m; ++p) ring[j][p] = g.add(radius, step * p);
    }
    for (int i = 0; i < n; ++i) g.edge(top[i], top[(i + 1) % n]);
    for (int j = 0; j <= rings; ++j) {
        for (int p = 0; p < m; ++p) g.edge(ring[j][p], ring[j][(p + 1) % m]);
    }
    for (int i = 0; i < n; ++i) g.edge(top[i], ring[0][2 * i]);
    // Ring j sends its vertices of parity (j + 1) outwards.
    for (int j = 0; j < rings; ++j) {
        for (int p = (j + 1) % 2; p < m; p += 2) g.edge(ring[j][p], ring[j + 1][p]);
    }
    std::vector<VertexId> bottom(n);
    const int parity = (rings + 1) % 2;
    for (int i = 0; i < n; ++i) {
        bottom[i] = g.add(radius * 1.6, step * (2 * i + parity));
        g.edge(bottom[i], ring[rings][2 * i + parity]);
    }
    for (int i = 0; i < n; ++i) g.edge(bottom[i], bottom[(i + 1) % n]);
    return g.build();
}

CombMap three_fold_tube(int layers) {
    if (layers < 0) throw std::invalid_argument("three_fold_tube: bad parameters");
    GraphBuilder g;
    auto layer_angle = [](int p) { return 90.0 + 120.0 * (p / 2) + (p % 2 == 0 ? -20.0 : 20.0); };
    VertexId centre = g.add(0, 0);
    std::array<VertexId, 3> inner{};
    for (int i = 0; i < 3; ++i) {
        inner[i] = g.add(1, 90.0 + 120.0 * i);
        g.edge(centre, inner[i]);
    }
    const int count = layers + 2;
    std::vector<std::array<VertexId, 6>> layer(count);
    double radius = 2;
    for (int j = 0; j < count; ++j, radius *= 1.6) {
        for (int p = 0; p < 6; ++p) layer[j][p] = g.add(radius, layer_angle(p));
        // Layer j pairs (p, p+1) for p of parity j + 1.
        for (int p = (j + 1) % 2; p < 6; p += 2) g.edge(layer[j][p], layer[j][(p + 1) % 6]);
    }
    for (int i = 0; i < 3; ++i) {
        g.edge(inner[i], layer[0][2 * i]);
        g.edge(inner[i], layer[0][2 * i + 1]);
    }
    for (int j = 0; j + 1 < count; ++j) {
        for (int p = 0; p < 6; ++p) g.edge(layer[j][p], layer[j + 1][p]);
    }
    const int last = count - 1;
    const int parity = last % 2;
    std::array<VertexId, 3> outer{};
    for (int i = 0; i < 3; ++i) {
        const int p = parity + 2 * i;
        double a0 = layer_angle(p), a1 = layer_angle((p + 1) % 6);
        if (a1 < a0) a1 += 360.0;
        outer[i] = g.add(radius, 0.5 * (a0 + a1));
        g.edge(outer[i], layer[last][p]);
        g.edge(outer[i], layer[last][(p + 1) % 6]);
    }
    VertexId far = g.add(radius * 2, 0);
    for (int i = 0; i < 3; ++i) g.edge(far, outer[i]);
    return g.build(far);
}

namespace {

// Eisenstein integer a + b*w with w = exp(i*pi/3), so w^2 = w - 1.
struct Eis {
    long a = 0;
    long b = 0;
    Eis operator+(Eis o) const { return {a + o.a, b + o.b}; }
    Eis operator-(Eis o) const { return {a - o.a, b - o.b}; }
    Eis operator*(Eis o) const { return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b}; }
    bool operator==(const Eis&) const = default;
    auto operator<=>(const Eis&) const = default;
};

// Positive when q lies to the left of the directed line p0 -> p1.
long side(Eis p0, Eis p1, Eis q) {
    const Eis u = p1 - p0, v = q - p0;
    return u.a * v.b - u.b * v.a;
}

struct GcFrame {
    const CombMap& map;
    Eis z;
    Eis corner[3];

    GcFrame(const CombMap& m, Eis zz) : map(m), z(zz) {
        corner[0] = {0, 0};
        corner[1] = z;
        corner[2] = z * Eis{0, 1};
    }

    // Cyclic relabelling of the corners, c_i -> c_{i+1}.
    Eis rho(Eis p, int times) const {
        times = ((times % 3) + 3) % 3;
        for (int i = 0; i < times; ++i) p = z + Eis{-1, 1} * p;
        return p;
    }

    // The same point in the frame of the master triangle across edge e,
    // the edge from corner e to corner e+1.
    std::pair<VertexId, Eis> across(VertexId v, int e, Eis q) const {
        const DartId d = 3 * v + (e + 1) % 3;
        const DartId t = map.twin(d);
        const int e2 = (t % 3 + 2) % 3;
        return {map.origin(t), rho(z - rho(q, -e), e2)};
    }

    // Smallest representation of a lattice point over all master triangles
    // whose closed triangle contains it.
    std::pair<VertexId, Eis> canonical(VertexId v, Eis q) const {
        // Move into a triangle that contains the point.
        for (int guard = 0; guard < 64; ++guard) {
            int out = -1;
            for (int e = 0; e < 3; ++e) {
                if (side(corner[e], corner[(e + 1) % 3], q) < 0) out = e;
            }
            if (out < 0) break;
            std::tie(v, q) = across(v, out, q);
        }
        std::set<std::pair<VertexId, Eis>> seen{{v, q}};
        std::vector<std::pair<VertexId, Eis>> stack{{v, q}};
        while (!stack.empty()) {
            auto [w, p] = stack.back();
            stack.pop_back();
            for (int e = 0; e < 3; ++e) {
                if (side(corner[e], corner[(e + 1) % 3], p) != 0) continue;
                auto next = across(w, e, p);
                if (seen.insert(next).second) stack.push_back(next);
            }
        }
        return *seen.begin();
    }
};

// Builds the map with one family of vertices taken in either orientation;
// the wrong one fails the genus check.
CombMap first_planar(std::vector<Rotation> rot, int flip_from, int flip_to) {
    try {
        return CombMap::from_rotation(rot);
    } catch (const MapError&) {
        for (int v = flip_from; v < flip_to; ++v) std::swap(rot[v][1], rot[v][2]);
        return CombMap::from_rotation(rot);
    }
}

}  // namespace

CombMap goldberg_coxeter(const CombMap& map, int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("goldberg_coxeter: bad parameters");
    const GcFrame frame(map, Eis{m, n});
    // Lattice points become faces, small lattice triangles become vertices.
    std::map<std::pair<VertexId, Eis>, int> point_id;
    auto point = [&](VertexId v, Eis q) {
        auto key = frame.canonical(v, q);
        auto [it, fresh] = point_id.emplace(key, static_cast<int>(point_id.size()));
        return it->second;
    };
    std::map<std::array<int, 3>, int> tri_id;
    std::vector<std::array<int, 3>> tris;
    const long lo = -std::abs(static_cast<long>(m)) - n - 1, hi = m + 2L * n + 1;
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
        for (long a = lo; a <= hi; ++a) {
            for (long b = lo; b <= hi; ++b) {
                const Eis p{a, b};
                for (int up = 0; up < 2; ++up) {
                    std::array<Eis, 3> c = up ? std::array<Eis, 3>{p, p + Eis{1, 0}, p + Eis{0, 1}}
                                              : std::array<Eis, 3>{p + Eis{1, 0}, p + Eis{1, 1}, p + Eis{0, 1}};
                    // Keep the triangle when three times its centroid lies in
                    // the closed master triangle; duplicates merge below.
                    const Eis g = c[0] + c[1] + c[2];
                    bool inside = true;
                    for (int e = 0; e < 3; ++e) {
                        const Eis c0 = frame.corner[e] * Eis{3, 0}, c1 = frame.corner[(e + 1) % 3] * Eis{3, 0};
                        inside = inside && side(c0, c1, g) >= 0;
                    }
                    if (!inside) continue;
                    std::array<int, 3> ids{point(v, c[0]), point(v, c[1]), point(v, c[2])};
                    // Rotate so the smallest id leads; keeps the cyclic order.
                    std::rotate(ids.begin(), std::min_element(ids.begin(), ids.end()), ids.end());
                    if (tri_id.emplace(ids, static_cast<int>(tris.size())).second) tris.push_back(ids);
                }
            }
        }
    }
    std::map<std::pair<int, int>, int> by_edge;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        for (int i = 0; i < 3; ++i) by_edge[{tris[t][i], tris[t][(i + 1) % 3]}] = t;
    }
    std::vector<Rotation> rot(tris.size());
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        for (int i = 0; i < 3; ++i) {
            auto it = by_edge.find({tris[t][(i + 1) % 3], tris[t][i]});
            if (it == by_edge.end()) throw std::logic_error("goldberg_coxeter: open lattice edge");
            rot[t][i] = it->second;
        }
    }
    return first_planar(std::move(rot), 0, static_cast<int>(rot.size()));
}

}  // namespace polysurg
