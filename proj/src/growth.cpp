#include "polysurg/growth.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "polysurg/construct.hpp"

namespace polysurg {

namespace {

using Kind = GrowthError::Kind;

bool is_fullerene_faces(const CombMap& map) {
    int p5 = 0;
    for (FaceId f = 0; f < map.face_count(); ++f) {
        const int s = map.face_size(f);
        if (s != 5 && s != 6) return false;
        p5 += s == 5;
    }
    return p5 == 12;
}

int hexagon_count(const CombMap& map) {
    int n = 0;
    for (FaceId f = 0; f < map.face_count(); ++f) n += map.face_size(f) == 6;
    return n;
}

FaceId lookup(const NameMap& names, const std::string& name) {
    auto it = names.find(name);
    if (it == names.end()) throw GrowthError(Kind::BadScript, "unknown face name " + name);
    return it->second;
}

std::vector<FaceId> faces_by_name(const PatchPattern& pattern, const NameMap& names) {
    std::vector<FaceId> out;
    for (const auto& f : pattern.faces) out.push_back(lookup(names, f.name));
    return out;
}

}  // namespace

void GrowthRule::validate() const {
    lhs.validate();
    rhs.validate();
    std::set<std::string> names;
    for (const auto& f : rhs.faces) names.insert(f.name);
    for (const auto& f : lhs.faces) {
        if (!names.count(f.name)) throw PatternError(0, label + ": lhs face " + f.name + " missing from rhs");
    }
    if (!same_cyclic_sequence(boundary_contacts(lhs), boundary_contacts(rhs))) {
        throw PatternError(0, label + ": lhs and rhs boundaries differ");
    }
    if (rhs.hexagons() <= lhs.hexagons()) throw PatternError(0, label + ": rhs does not add hexagons");
    const int added = static_cast<int>(rhs.faces.size() - lhs.faces.size());
    if (static_cast<int>(script.size()) != added || static_cast<int>(inverse_script.size()) != added) {
        throw PatternError(0, label + ": script length differs from the number of added faces");
    }
    for (const auto& step : script) {
        if (step.op != ScriptStep::Op::Truncate) throw PatternError(0, label + ": script must truncate");
    }
    for (const auto& step : inverse_script) {
        if (step.op != ScriptStep::Op::Straighten) throw PatternError(0, label + ": inverse must straighten");
    }
}

NameMap bind_names(const PatchPattern& pattern, const MatchResult& match) {
    NameMap names;
    for (std::size_t i = 0; i < pattern.faces.size(); ++i) names[pattern.faces[i].name] = match.faces[i];
    return names;
}

ScriptTrace run_script(const CombMap& map, const std::vector<ScriptStep>& script, NameMap names, bool mirrored) {
    ScriptTrace trace;
    trace.maps.push_back(map);
    for (const auto& step : script) {
        const CombMap& cur = trace.maps.back();
        const FaceId f = lookup(names, step.face);
        const FaceId g = lookup(names, step.anchor);
        const DartId d = cur.shared_edge(f, g);
        if (d == kNoDart) throw GrowthError(Kind::BadScript, step.face + " and " + step.anchor + " are not adjacent");
        SurgeryResult r;
        try {
            if (step.op == ScriptStep::Op::Truncate) {
                // A mirrored run ends at d when read along face_next.
                DartId start = d;
                if (mirrored) {
                    for (int i = 0; i <= step.s; ++i) start = cur.face_prev(start);
                }
                const TruncationSpec spec{f, start, step.s};
                trace.signatures.push_back(signature(cur, spec));
                trace.specs.push_back(spec);
                r = truncate(cur, spec);
            } else {
                r = straighten(cur, d);
            }
        } catch (const SurgeryError& e) {
            throw GrowthError(Kind::BadScript, std::string(to_string(e.kind())) + ": " + e.what());
        }
        if (step.op == ScriptStep::Op::Truncate && names.count(step.created)) {
            throw GrowthError(Kind::BadScript, "face name " + step.created + " already in use");
        }
        NameMap next;
        for (const auto& [name, face] : names) {
            if (step.op == ScriptStep::Op::Straighten && name == step.anchor) continue;
            next[name] = r.face_image[face].size() == 1 ? r.face_image[face][0] : r.other_face;
        }
        if (step.op == ScriptStep::Op::Truncate) next[step.created] = r.new_face;
        names = std::move(next);
        trace.maps.push_back(std::move(r.map));
    }
    trace.names = std::move(names);
    return trace;
}

CombMap seed(Seed which, int k) {
    if (k < 0) throw GrowthError(Kind::NegativeParameter, "negative family parameter");
    switch (which) {
        case Seed::Dodecahedron: return capped_tube(5, 0);
        case Seed::Barrel: return capped_tube(6, 0);
        case Seed::FamilyOne: return capped_tube(5, k);
        case Seed::FamilyTwo: return three_fold_tube(k);
    }
    throw GrowthError(Kind::NegativeParameter, "unknown seed");
}

namespace {

ScriptTrace forward(const CombMap& map, const GrowthRule& rule, const MatchResult& m) {
    if (!is_match(map, rule.lhs, m.faces, m.mirrored)) {
        throw GrowthError(Kind::NotAMatch, rule.label + ": not a left-hand match");
    }
    ScriptTrace t = run_script(map, rule.script, bind_names(rule.lhs, m), m.mirrored);
    const CombMap& out = t.maps.back();
    if (!is_fullerene_faces(out) || !is_match(out, rule.rhs, faces_by_name(rule.rhs, t.names), m.mirrored) ||
        hexagon_count(out) != hexagon_count(map) + static_cast<int>(rule.script.size())) {
        throw GrowthError(Kind::ResultNotFullerene, rule.label + ": script did not produce the right-hand side");
    }
    return t;
}

}  // namespace

CombMap apply_rule(const CombMap& map, const GrowthRule& rule, const MatchResult& lhs_match) {
    return forward(map, rule, lhs_match).maps.back();
}

Decomposition decompose_rule(const CombMap& map, const GrowthRule& rule, const MatchResult& lhs_match) {
    ScriptTrace t = forward(map, rule, lhs_match);
    return Decomposition{std::move(t.maps), std::move(t.specs), std::move(t.signatures)};
}

std::vector<CombMap> invert_rule_trace(const CombMap& map, const GrowthRule& rule, const MatchResult& rhs_match) {
    if (!is_match(map, rule.rhs, rhs_match.faces, rhs_match.mirrored)) {
        throw GrowthError(Kind::NotAMatch, rule.label + ": not a right-hand match");
    }
    ScriptTrace t = run_script(map, rule.inverse_script, bind_names(rule.rhs, rhs_match), rhs_match.mirrored);
    const CombMap& out = t.maps.back();
    if (!is_fullerene_faces(out) || !is_match(out, rule.lhs, faces_by_name(rule.lhs, t.names), rhs_match.mirrored)) {
        throw GrowthError(Kind::ResultNotFullerene, rule.label + ": inverse did not produce the left-hand side");
    }
    return std::move(t.maps);
}

CombMap invert_rule(const CombMap& map, const GrowthRule& rule, const MatchResult& rhs_match) {
    return invert_rule_trace(map, rule, rhs_match).back();
}

std::vector<GrowthSite> detect_growth_sites(const CombMap& map, const std::vector<GrowthRule>& rules) {
    if (!is_fullerene_faces(map)) throw GrowthError(Kind::ResultNotFullerene, "not a fullerene");
    std::vector<GrowthSite> out;
    for (const auto& rule : rules) {
        for (auto& m : match_pattern(map, rule.rhs)) out.push_back(GrowthSite{&rule, std::move(m)});
    }
    return out;
}

std::vector<GrowthSite> detect_lhs_sites(const CombMap& map, const std::vector<GrowthRule>& rules) {
    std::vector<GrowthSite> out;
    MatchOptions opt;
    opt.distinct_face_sets = false;
    for (const auto& rule : rules) {
        if (rule.lhs.faces.size() > static_cast<std::size_t>(map.face_count())) continue;
        for (auto& m : match_pattern(map, rule.lhs, opt)) out.push_back(GrowthSite{&rule, std::move(m)});
    }
    return out;
}

EnumerationResult enumerate(const std::vector<GrowthRule>& rules, const EnumerationOptions& opt) {
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    std::vector<std::pair<CanonicalCode, CombMap>> found;
    std::mutex lock;
    std::vector<CombMap> frontier{canonical_form(seed(Seed::Dodecahedron))};
    seen.insert(canonical_code(frontier[0]));
    found.emplace_back(canonical_code(frontier[0]), frontier[0]);

    // Every rule adds hexagons, so one pass per frontier generation suffices.
    while (!frontier.empty()) {
        std::vector<CombMap> next;
        std::size_t cursor = 0;
        auto worker = [&] {
            for (;;) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> g(lock);
                    if (cursor >= frontier.size()) return;
                    i = cursor++;
                }
                const CombMap& m = frontier[i];
                const int p6 = hexagon_count(m);
                for (const auto& site : detect_lhs_sites(m, rules)) {
                    if (p6 + static_cast<int>(site.rule->script.size()) > opt.max_p6) continue;
                    CombMap child = canonical_form(apply_rule(m, *site.rule, site.match));
                    CanonicalCode code = canonical_code(child);
                    std::lock_guard<std::mutex> g(lock);
                    if (seen.insert(code).second) {
                        found.emplace_back(std::move(code), child);
                        next.push_back(std::move(child));
                    }
                }
            }
        };
        const int jobs = std::max(1, opt.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.second.vertex_count() != b.second.vertex_count()) return a.second.vertex_count() < b.second.vertex_count();
        return a.first < b.first;
    });
    EnumerationResult r;
    for (auto& [code, map] : found) {
        r.codes.push_back(std::move(code));
        r.maps.push_back(std::move(map));
    }
    return r;
}

}  // namespace polysurg
