#include "polysurg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <iterator>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace polysurg {

namespace {

const std::string kHeader = ">>planar_code<<";
const std::string kHeaderLe = ">>planar_code le<<";
const std::string kHeaderBe = ">>planar_code be<<";

struct Reader {
    const std::string& buf;
    std::size_t pos = 0;
    bool big_endian = false;
    int record = 0;

    bool at_end() const { return pos >= buf.size(); }

    unsigned entry(bool wide) {
        const std::size_t need = wide ? 2 : 1;
        if (pos + need > buf.size()) {
            throw IoError(IoError::Kind::TruncatedRecord, record,
                          "planar_code: record " + std::to_string(record) + " is truncated");
        }
        unsigned v = static_cast<unsigned char>(buf[pos]);
        if (wide) {
            const unsigned w = static_cast<unsigned char>(buf[pos + 1]);
            v = big_endian ? (v << 8 | w) : (w << 8 | v);
        }
        pos += need;
        return v;
    }
};

void put(std::ostream& out, unsigned v, bool wide) {
    if (wide) {
        out.put(static_cast<char>(v & 0xff));
        out.put(static_cast<char>(v >> 8));
    } else {
        out.put(static_cast<char>(v));
    }
}

}  // namespace

std::vector<CombMap> read_planar_code(std::istream& in) {
    const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Reader r{buf};
    if (buf.compare(0, kHeaderLe.size(), kHeaderLe) == 0) {
        r.pos = kHeaderLe.size();
    } else if (buf.compare(0, kHeaderBe.size(), kHeaderBe) == 0) {
        r.pos = kHeaderBe.size();
        r.big_endian = true;
    } else if (buf.compare(0, kHeader.size(), kHeader) == 0) {
        r.pos = kHeader.size();
    } else {
        throw IoError(IoError::Kind::BadHeader, -1, "planar_code: missing header");
    }
    std::vector<CombMap> maps;
    while (!r.at_end()) {
        unsigned n = r.entry(false);
        const bool wide = n == 0;
        if (wide) n = r.entry(true);
        std::vector<Rotation> rot(n);
        for (unsigned v = 0; v < n; ++v) {
            std::vector<VertexId> nbrs;
            for (unsigned e = r.entry(wide); e != 0; e = r.entry(wide)) {
                if (e > n) {
                    throw IoError(IoError::Kind::ValidationFailure, r.record,
                                  "planar_code: record " + std::to_string(r.record) + " names vertex " +
                                      std::to_string(e));
                }
                nbrs.push_back(static_cast<VertexId>(e - 1));
            }
            if (nbrs.size() != 3) {
                throw IoError(IoError::Kind::ValidationFailure, r.record,
                              "planar_code: record " + std::to_string(r.record) + " vertex " +
                                  std::to_string(v + 1) + " has degree " + std::to_string(nbrs.size()));
            }
            // Clockwise on file, counterclockwise in the map.
            rot[v] = {nbrs[0], nbrs[2], nbrs[1]};
        }
        try {
            CombMap m = CombMap::from_rotation(rot);
            const ValidationReport rep = validate(m);
            if (!rep.ok()) throw MapError(MapErrorKind::NonPlanar, "not a simple 3-polytope");
            maps.push_back(std::move(m));
        } catch (const MapError& e) {
            throw IoError(IoError::Kind::ValidationFailure, r.record,
                          "planar_code: record " + std::to_string(r.record) + ": " + e.what());
        }
        ++r.record;
    }
    return maps;
}

std::vector<CombMap> sort_canonical(const std::vector<CombMap>& maps) {
    std::vector<std::pair<CanonicalCode, CombMap>> keyed;
    for (const CombMap& m : maps) {
        CombMap c = canonical_form(m);
        keyed.emplace_back(canonical_code(c), std::move(c));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.vertex_count() != b.second.vertex_count()) {
            return a.second.vertex_count() < b.second.vertex_count();
        }
        return a.first < b.first;
    });
    std::vector<CombMap> out;
    for (auto& [code, m] : keyed) out.push_back(std::move(m));
    return out;
}

void write_planar_code(std::ostream& out, const std::vector<CombMap>& maps, RecordOrder order) {
    const std::vector<CombMap> sorted = order == RecordOrder::Canonical ? sort_canonical(maps) : maps;
    const bool any_wide = std::any_of(sorted.begin(), sorted.end(), [](const CombMap& m) { return m.vertex_count() >= 256; });
    out << (any_wide ? kHeaderLe : kHeader);
    for (const CombMap& m : sorted) {
        const int n = m.vertex_count();
        const bool wide = n >= 256;
        if (wide) put(out, 0, false);
        put(out, static_cast<unsigned>(n), wide);
        for (VertexId v = 0; v < n; ++v) {
            for (int i : {0, 2, 1}) put(out, static_cast<unsigned>(m.head(3 * v + i) + 1), wide);
            put(out, 0, wide);
        }
    }
}

Embedding tutte_embedding(const CombMap& map, FaceId outer, double tolerance) {
    const int n = map.vertex_count();
    Embedding e;
    e.position.assign(n, {0.0, 0.0});
    std::vector<char> fixed(n, 0);
    const auto boundary = map.face_darts(outer);
    const int s = static_cast<int>(boundary.size());
    for (int i = 0; i < s; ++i) {
        // Clockwise, so the outer face (on the left of its darts) is outside.
        const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * i / s;
        const VertexId v = map.origin(boundary[i]);
        e.position[v] = {std::cos(a), std::sin(a)};
        fixed[v] = 1;
    }
    constexpr int kMaxSweeps = 1000000;
    for (e.sweeps = 1; e.sweeps <= kMaxSweeps; ++e.sweeps) {
        e.residual = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (fixed[v]) continue;
            double x = 0, y = 0;
            for (int i = 0; i < 3; ++i) {
                const auto& p = e.position[map.head(3 * v + i)];
                x += p[0];
                y += p[1];
            }
            x /= 3;
            y /= 3;
            e.residual = std::max(e.residual, std::hypot(x - e.position[v][0], y - e.position[v][1]));
            e.position[v] = {x, y};
        }
        if (e.residual < tolerance) break;
    }
    return e;
}

std::string render_svg(const CombMap& map, FaceId outer, const std::vector<FaceId>& highlight) {
    const Embedding e = tutte_embedding(map, outer);
    const std::set<FaceId> heavy(highlight.begin(), highlight.end());
    constexpr double kSize = 600, kMargin = 20;
    auto colour = [](int s) {
        switch (s) {
            case 4: return "blue";
            case 5: return "yellow";
            case 6: return "red";
            case 7: return "green";
            default: return "lightgray";
        }
    };
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    const double half = kSize / 2 - kMargin;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    auto polygon = [&](FaceId f) {
        out << "  <polygon data-face=\"" << f << "\" data-size=\"" << map.face_size(f) << "\" points=\"";
        bool first = true;
        for (DartId d : map.face_darts(f)) {
            const auto& p = e.position[map.origin(d)];
            out << (first ? "" : " ") << kSize / 2 + half * p[0] << ',' << kSize / 2 - half * p[1];
            first = false;
        }
        out << "\" fill=\"" << colour(map.face_size(f)) << "\" stroke=\"black\" stroke-width=\""
            << (heavy.count(f) ? 4.0 : 1.0) << "\"/>\n";
    };
    // The outer face is drawn first as the background disk.
    polygon(outer);
    for (FaceId f = 0; f < map.face_count(); ++f) {
        if (f != outer) polygon(f);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace polysurg
