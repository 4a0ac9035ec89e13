// Offline search for the straightening sequences that undo each growth
// operation, and emission of the rule file. Not part of the test suite: its
// output is checked in and validated by the tests.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "oracle/spiral_oracle.hpp"
#include "polysurg/belts.hpp"
#include "polysurg/construct.hpp"
#include "polysurg/growth.hpp"
#include "polysurg/rule_file.hpp"

using namespace polysurg;

namespace {

int exceptional_faces(const CombMap& m) {
    int n = 0;
    for (FaceId f = 0; f < m.face_count(); ++f) n += m.face_size(f) != 5 && m.face_size(f) != 6;
    return n;
}

struct Step {
    std::string keep, merged;
};

struct Solution {
    std::vector<Step> steps;
    std::set<std::string> touched;
};

struct Search {
    int depth = 1;
    std::function<bool(const CombMap&, const NameMap&)> goal = [](const CombMap&, const NameMap&) { return true; };
    std::vector<Solution> found;
    std::size_t limit = 1;
    std::function<bool(const Solution&)> accept = [](const Solution&) { return true; };

    void run(const CombMap& m, const NameMap& names) {
        std::vector<Step> steps;
        std::set<std::string> touched;
        dfs(m, names, steps, touched);
    }

    void dfs(const CombMap& m, const NameMap& names, std::vector<Step>& steps, std::set<std::string>& touched) {
        if (found.size() >= limit) return;
        if (static_cast<int>(steps.size()) == depth) {
            if (exceptional_faces(m) == 0 && goal(m, names)) {
                Solution sol{steps, touched};
                if (accept(sol)) found.push_back(std::move(sol));
            }
            return;
        }
        std::map<FaceId, std::string> by_face;
        for (const auto& [n, f] : names) by_face[f] = n;
        FaceId odd = kNoFace;
        for (FaceId f = 0; f < m.face_count(); ++f) {
            if (m.face_size(f) != 5 && m.face_size(f) != 6) odd = f;
        }
        for (const auto& [xn, x] : names) {
            for (const auto& [yn, y] : names) {
                if (xn == yn) continue;
                const int sx = m.face_size(x), sy = m.face_size(y);
                // y merges into x: a quadrangle always merges, and of a
                // pentagon-hexagon pair the pentagon does.
                const bool ok = (sy == 4 && sx != 4) || (sx == 5 && sy == 5 && xn < yn) || (sx == 6 && sy == 5);
                if (!ok) continue;
                const DartId d = m.shared_edge(y, x);
                if (d == kNoDart || !can_straighten(m, d)) continue;
                const EdgeFaces ef = edge_faces(m, d);
                if (!by_face.count(ef.at_origin) || !by_face.count(ef.at_head)) continue;
                if (odd != kNoFace && odd != x && odd != y && odd != ef.at_origin && odd != ef.at_head) continue;
                if (!is_permitted(straighten_signature(m, d))) continue;
                SurgeryResult r = straighten(m, d);
                if (exceptional_faces(r.map) > 1) continue;
                NameMap next;
                for (const auto& [n, f] : names) {
                    if (n != yn) next[n] = r.face_image[f][0];
                }
                steps.push_back({xn, yn});
                std::set<std::string> t2 = touched;
                t2.insert({xn, yn, by_face[ef.at_origin], by_face[ef.at_head]});
                dfs(r.map, next, steps, t2);
                steps.pop_back();
            }
        }
    }
};

// Shape of the closest pair among the named pentagons.
std::string pair_shape(const CombMap& m, const NameMap& names) {
    int best = 1 << 30;
    std::string shape;
    for (const auto& [n1, f1] : names) {
        for (const auto& [n2, f2] : names) {
            if (n1 >= n2 || m.face_size(f1) != 5 || m.face_size(f2) != 5) continue;
            ThickPath p = normalize_path(m, shortest_thick_path(m, f1, f2));
            if (p.length() < best) {
                best = p.length();
                shape.clear();
                for (auto st : path_steps(m, p)) shape += "FLRO"[static_cast<int>(st)];
            }
        }
    }
    return shape;
}

// Equal up to reversal and reflection.
bool same_shape(std::string a, const std::string& b) {
    for (int pass = 0; pass < 4; ++pass) {
        if (a == b) return true;
        if (pass == 1) std::reverse(a.begin(), a.end());
        for (char& c : a) c = c == 'L' ? 'R' : c == 'R' ? 'L' : c;
    }
    return false;
}

std::vector<FaceId> to_faces(const NameMap& names, const std::vector<std::string>& order) {
    std::vector<FaceId> out;
    for (const auto& n : order) out.push_back(names.at(n));
    return out;
}

// Builds the rule from a solution found on `m` (taken unmirrored).
GrowthRule make_rule(const CombMap& m, const NameMap& names, const Solution& sol, char op, const std::string& label,
                     std::vector<int> params) {
    GrowthRule rule;
    rule.op = op;
    rule.label = label;
    rule.params = std::move(params);
    std::vector<std::string> rhs_names(sol.touched.begin(), sol.touched.end());
    rule.rhs = extract_pattern(m, to_faces(names, rhs_names), rhs_names, label + ".rhs");

    CombMap cur = m;
    NameMap cur_names = names;
    std::vector<ScriptStep> forward;
    for (const auto& st : sol.steps) {
        const DartId d = cur.shared_edge(cur_names.at(st.merged), cur_names.at(st.keep));
        SurgeryResult r = straighten(cur, d);
        NameMap next;
        for (const auto& [n, f] : cur_names) {
            if (n != st.merged) next[n] = r.face_image[f][0];
        }
        ScriptStep fw;
        fw.op = ScriptStep::Op::Truncate;
        fw.face = st.keep;
        fw.anchor = [&] {
            const FaceId a = r.map.face_across(r.restore.start);
            for (const auto& [n, f] : next) {
                if (f == a) return n;
            }
            throw std::runtime_error("restore anchor outside the named faces");
        }();
        fw.s = r.restore.s;
        fw.created = st.merged;
        forward.push_back(fw);
        ScriptStep inv;
        inv.op = ScriptStep::Op::Straighten;
        inv.face = st.keep;
        inv.anchor = st.merged;
        rule.inverse_script.push_back(inv);
        cur = std::move(r.map);
        cur_names = std::move(next);
    }
    std::reverse(forward.begin(), forward.end());
    rule.script = forward;
    std::vector<std::string> lhs_names;
    for (const auto& n : rhs_names) {
        if (cur_names.count(n)) lhs_names.push_back(n);
    }
    rule.lhs = extract_pattern(cur, to_faces(cur_names, lhs_names), lhs_names, label + ".lhs");
    rule.validate();

    // Round trip on the instance.
    const auto lhs_matches = match_pattern(cur, rule.lhs, MatchOptions{false});
    bool reproduced = false;
    for (const auto& mt : lhs_matches) {
        if (mt.faces == to_faces(cur_names, lhs_names) && !mt.mirrored) {
            reproduced = is_isomorphic(apply_rule(cur, rule, mt), m);
        }
    }
    if (!reproduced) throw std::runtime_error(label + ": forward script does not reproduce the instance");
    return rule;
}

NameMap name_faces(const std::vector<FaceId>& faces) {
    NameMap n;
    for (FaceId f : faces) n["f" + std::to_string(f)] = f;
    return n;
}

std::vector<FaceId> with_neighbors(const CombMap& m, std::vector<FaceId> faces) {
    std::set<FaceId> s(faces.begin(), faces.end());
    for (FaceId f : faces) {
        for (FaceId g : m.face_neighbors(f)) s.insert(g);
    }
    return {s.begin(), s.end()};
}

// Role of a face relative to a thick path: on it, beside it, or elsewhere.
std::map<FaceId, std::string> road_roles(const CombMap& m, const ThickPath& p) {
    std::map<FaceId, std::string> role;
    const int n = p.length();
    auto pos = [&](FaceId f, FaceId g) {
        const auto nb = m.face_neighbors(f);
        return static_cast<int>(std::find(nb.begin(), nb.end(), g) - nb.begin());
    };
    std::map<FaceId, std::set<std::string>> tags;
    for (int i = 0; i < n; ++i) {
        const FaceId f = p.faces[i];
        role[f] = "p" + std::to_string(i);
        const auto nb = m.face_neighbors(f);
        const int s = static_cast<int>(nb.size());
        const int in = i > 0 ? pos(f, p.faces[i - 1]) : -1;
        const int out = i + 1 < n ? pos(f, p.faces[i + 1]) : -1;
        for (int j = 0; j < s; ++j) {
            if (j == in || j == out) continue;
            std::string side;
            if (in >= 0 && out >= 0) {
                side = ((j - in + s) % s) < ((out - in + s) % s) ? "R" : "L";
            } else {
                const int ref = in >= 0 ? in : out;
                const int off = (j - ref + s) % s;
                side = "e" + std::to_string(i) + "." + std::to_string(in >= 0 ? s - off : off);
                tags[nb[j]].insert(side);
                continue;
            }
            tags[nb[j]].insert(side + std::to_string(i));
        }
    }
    for (auto& [f, t] : tags) {
        if (role.count(f)) continue;
        std::string r;
        for (const auto& x : t) r += (r.empty() ? "" : "/") + x;
        role[f] = r;
    }
    return role;
}

ThickPath g_path;

void describe(const CombMap& m, const NameMap& names, const Solution& sol) {
    const auto roles = road_roles(m, g_path);
    auto role = [&](const std::string& n) {
        auto it = roles.find(names.at(n));
        return it == roles.end() ? n : it->second;
    };
    CombMap cur = m;
    NameMap nm = names;
    for (const auto& s : sol.steps) {
        std::cout << "  STRAIGHTEN " << role(s.keep) << " " << role(s.merged);
        const DartId d = cur.shared_edge(nm.at(s.merged), nm.at(s.keep));
        const EdgeFaces ef = edge_faces(cur, d);
        std::string eo, eh;
        for (const auto& [n, f] : nm) {
            if (f == ef.at_origin) eo = role(n);
            if (f == ef.at_head) eh = role(n);
        }
        std::cout << " " << straighten_signature(cur, d).str() << " ends " << eo << " " << eh << "\n";
        SurgeryResult r = straighten(cur, d);
        NameMap next;
        for (const auto& [n, f] : nm) {
            if (n != s.merged) next[n] = r.face_image[f][0];
        }
        cur = std::move(r.map);
        nm = std::move(next);
    }
    std::vector<FaceId> pent;
    for (FaceId f = 0; f < cur.face_count(); ++f) {
        if (cur.face_size(f) == 5) pent.push_back(f);
    }
    std::cout << "  new pentagons:";
    for (const auto& [n, f] : nm) {
        if (cur.face_size(f) == 5 && sol.touched.count(n)) std::cout << ' ' << role(n);
    }
    // Shape of the closest pair among the named pentagons.
    int best = 1 << 30;
    std::string shape;
    for (const auto& [n1, f1] : nm) {
        for (const auto& [n2, f2] : nm) {
            if (n1 >= n2 || cur.face_size(f1) != 5 || cur.face_size(f2) != 5) continue;
            if (!sol.touched.count(n1) || !sol.touched.count(n2)) continue;
            ThickPath p = normalize_path(cur, shortest_thick_path(cur, f1, f2));
            if (p.length() < best) {
                best = p.length();
                shape.clear();
                for (auto st : path_steps(cur, p)) shape += "FLRO"[static_cast<int>(st)];
            }
        }
    }
    std::cout << "  closest named pair shape '" << shape << "'\n";
    std::cout << "  touched:";
    for (const auto& t : sol.touched) std::cout << ' ' << role(t);
    std::cout << "\n";
}


// Names a road region after the roles of its faces.
NameMap road_names(const CombMap& m, const ThickPath& p, const std::vector<FaceId>& region) {
    const auto roles = road_roles(m, p);
    NameMap out;
    for (FaceId f : region) {
        auto it = roles.find(f);
        std::string r = it == roles.end() ? "x" + std::to_string(f) : it->second;
        std::replace(r.begin(), r.end(), '/', '_');
        if (out.count(r)) r += "_" + std::to_string(f);
        out[r] = f;
    }
    return out;
}

std::string repeat(char c, int n) { return std::string(static_cast<std::size_t>(n), c); }

// The inverse of a road operation found on an instance: the first clean
// pentagon pair of the wanted shape is moved to the target shape.
GrowthRule road_rule(const CombMap& m, const std::string& rhs_shape, const std::string& lhs_shape, int depth, char op,
                     const std::string& label, std::vector<int> params) {
    for (FaceId a = 0; a < m.face_count(); ++a) {
        for (FaceId b = a + 1; b < m.face_count(); ++b) {
            if (m.face_size(a) != 5 || m.face_size(b) != 5) continue;
            ThickPath p = normalize_path(m, shortest_thick_path(m, a, b));
            std::string shape;
            for (auto st : path_steps(m, p)) shape += "FLRO"[static_cast<int>(st)];
            if (!same_shape(shape, rhs_shape)) continue;
            const auto region = with_neighbors(m, p.faces);
            if (std::any_of(region.begin(), region.end(),
                            [&](FaceId f) { return f != a && f != b && m.face_size(f) == 5; })) {
                continue;
            }
            const NameMap names = road_names(m, p, region);
            Search s;
            s.depth = depth;
            s.goal = [&](const CombMap& cur, const NameMap& nm) { return same_shape(pair_shape(cur, nm), lhs_shape); };
            s.accept = [&](const Solution& sol) {
                for (const auto& t : sol.touched) {
                    const FaceId f = names.at(t);
                    if (f != a && f != b && m.face_size(f) != 6) return false;
                }
                return sol.touched.count("p0") && sol.touched.count("p" + std::to_string(p.length() - 1));
            };
            s.run(m, names);
            if (s.found.empty()) continue;
            return make_rule(m, names, s.found.front(), op, label, std::move(params));
        }
    }
    throw std::runtime_error(label + ": no instance solved");
}

Solution rename(const Solution& sol, const std::map<std::string, std::string>& to) {
    auto r = [&](const std::string& n) {
        auto it = to.find(n);
        return it == to.end() ? n : it->second;
    };
    Solution out;
    for (const auto& st : sol.steps) out.steps.push_back({r(st.keep), r(st.merged)});
    for (const auto& t : sol.touched) out.touched.insert(r(t));
    return out;
}

NameMap rename(const NameMap& names, const std::map<std::string, std::string>& to) {
    NameMap out;
    for (const auto& [n, f] : names) {
        auto it = to.find(n);
        out[it == to.end() ? n : it->second] = f;
    }
    return out;
}

// Endo-Kroto: two adjacent pentagons whose end faces are hexagons.
GrowthRule rule_c() {
    for (int n = 26; n <= 36; n += 2) {
    for (const CombMap& m : oracle::fullerenes(n)) {
    for (DartId d = 0; d < m.dart_count(); ++d) {
        const EdgeFaces ef = edge_faces(m, d);
        if (m.face_size(ef.left) != 5 || m.face_size(ef.right) != 5) continue;
        if (m.face_size(ef.at_origin) != 6 || m.face_size(ef.at_head) != 6) continue;
        const NameMap names{{"P1", ef.left}, {"P2", ef.right}, {"H1", ef.at_origin}, {"H2", ef.at_head}};
        Search s;
        s.run(m, names);
        if (!s.found.empty()) return make_rule(m, names, s.found.front(), 'c', "c", {});
    }
    }
    }
    throw std::runtime_error("c: no instance");
}

// Three pentagons P1, P2, P3 at a vertex: P1 and P2 merge, then the
// quadrangle P3 merges into a neighbour X. One rule per size of X.
std::vector<GrowthRule> rules_d() {
    std::map<int, GrowthRule> by_x;
    for (int n = 24; n <= 36 && by_x.size() < 2; n += 2) {
        for (const CombMap& m : oracle::fullerenes(n)) {
            for (VertexId v = 0; v < m.vertex_count(); ++v) {
                for (int i = 0; i < 3; ++i) {
                    const DartId d = 3 * v + i;
                    const EdgeFaces ef = edge_faces(m, d);
                    const FaceId fa = ef.left, fb = ef.right, fc = ef.at_origin, fd = ef.at_head;
                    if (m.face_size(fa) != 5 || m.face_size(fb) != 5 || m.face_size(fc) != 5) continue;
                    if (m.face_size(fd) != 6) continue;
                    NameMap names{{"P1", fa}, {"P2", fb}, {"P3", fc}, {"D", fd}};
                    int k = 0;
                    for (FaceId g : m.face_neighbors(fc)) {
                        if (g != fa && g != fb) names["N" + std::to_string(++k)] = g;
                    }
                    Search s;
                    s.depth = 2;
                    s.limit = 8;
                    s.accept = [](const Solution& sol) {
                        return sol.steps[0].keep == "P1" && sol.steps[0].merged == "P2" && sol.steps[1].merged == "P3";
                    };
                    s.run(m, names);
                    for (const auto& sol : s.found) {
                        const std::string x = sol.steps[1].keep;
                        const int xs = m.face_size(names.at(x));
                        if (by_x.count(xs)) continue;
                        std::map<std::string, std::string> to{{x, "X"}};
                        for (const auto& t : sol.touched) {
                            if (t.front() == 'N' && t != x) to[t] = "Y";
                        }
                        const std::string label = "d.x" + std::to_string(xs);
                        by_x.emplace(xs, make_rule(m, rename(names, to), rename(sol, to), 'd', label, {}));
                    }
                }
            }
        }
    }
    std::vector<GrowthRule> out;
    for (auto& [xs, r] : by_x) out.push_back(std::move(r));
    return out;
}

// A cap of pentagons and the hexagon ring around it on the first member of
// its family; the inverse shrinks the tube by one ring.
GrowthRule cap_rule(Seed which, char op, int depth, std::vector<FaceId> inner, std::vector<FaceId> outer,
                    const std::string& inner_name) {
    const CombMap m = seed(which, 1);
    NameMap names;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        names[inner.size() == 1 ? inner_name : inner_name + std::to_string(i + 1)] = inner[i];
    }
    for (std::size_t i = 0; i < outer.size(); ++i) names["P" + std::to_string(i + 1)] = outer[i];
    std::set<FaceId> ring;
    for (const auto& [n, f] : names) {
        for (FaceId g : m.face_neighbors(f)) {
            if (m.face_size(g) == 6) ring.insert(g);
        }
    }
    int k = 0;
    for (FaceId h : ring) names["R" + std::to_string(++k)] = h;
    Search s;
    s.depth = depth;
    s.run(m, names);
    if (s.found.empty()) throw std::runtime_error(std::string(1, op) + ": no script");
    // The whole cap and ring, so that the fragment is a disk.
    Solution sol = s.found.front();
    for (const auto& [n, f] : names) sol.touched.insert(n);
    return make_rule(m, names, sol, op, std::string(1, op), {});
}

GrowthRule rule_a() {
    const CombMap m = seed(Seed::FamilyOne, 1);
    for (FaceId f = 0; f < m.face_count(); ++f) {
        const auto nb = m.face_neighbors(f);
        if (m.face_size(f) == 5 && std::all_of(nb.begin(), nb.end(), [&](FaceId g) { return m.face_size(g) == 5; })) {
            return cap_rule(Seed::FamilyOne, 'a', 5, {f}, nb, "C");
        }
    }
    throw std::runtime_error("a: no cap");
}

GrowthRule rule_b() {
    const CombMap m = seed(Seed::FamilyTwo, 1);
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        std::vector<FaceId> inner, outer;
        for (int i = 0; i < 3; ++i) {
            inner.push_back(m.face_of(3 * v + i));
            outer.push_back(edge_faces(m, 3 * v + i).at_head);
        }
        auto pent = [&](FaceId f) { return m.face_size(f) == 5; };
        if (std::all_of(inner.begin(), inner.end(), pent) && std::all_of(outer.begin(), outer.end(), pent)) {
            return cap_rule(Seed::FamilyTwo, 'b', 3, inner, outer, "C");
        }
    }
    throw std::runtime_error("b: no cap");
}

PatchPattern fragment(PatchPattern p, const std::string& id) {
    p.id = id;
    return p;
}

int emit(const std::string& path, int max_k) {
    RuleFile file;
    auto add = [&](GrowthRule r) {
        std::cerr << "rule " << r.label << ": " << r.script.size() << " steps, rhs " << r.rhs.faces.size()
                  << " faces\n";
        file.rules.push_back(std::move(r));
    };
    add(rule_a());
    add(rule_b());
    add(rule_c());
    for (auto& r : rules_d()) add(std::move(r));
    const CombMap dodecahedron = seed(Seed::Dodecahedron);
    add(road_rule(oracle::fullerenes(70, true).front(), "L", "FF", 2, 'e', "e", {}));
    for (int k = 1; k <= max_k; ++k) {
        add(road_rule(goldberg_coxeter(dodecahedron, k + 1, 1), repeat('F', k) + "L", repeat('F', k + 2), k + 2, 'f',
                      "f." + std::to_string(k + 2), {k + 2}));
    }
    for (int k = 1; k <= max_k; ++k) {
        add(road_rule(goldberg_coxeter(dodecahedron, k + 1, 0), repeat('F', k), repeat('F', k + 1) + "L", k + 2, 'g',
                      "g." + std::to_string(k), {k}));
    }
    for (int sum = 2; sum <= max_k; ++sum) {
        for (int k2 = 1; 2 * k2 <= sum; ++k2) {
            const int k1 = sum - k2;
            add(road_rule(goldberg_coxeter(dodecahedron, k1 + 1, k2 + 1), repeat('F', k1) + "L" + repeat('F', k2),
                          repeat('F', k1 + 1) + "L" + repeat('F', k2 + 1), k1 + k2 + 3, 'g',
                          "g." + std::to_string(k1) + "." + std::to_string(k2), {k1, k2}));
        }
    }
    auto rhs_of = [&](const std::string& label) {
        for (const auto& r : file.rules) {
            if (r.label == label) return r.rhs;
        }
        throw std::runtime_error("missing rule " + label);
    };
    auto lhs_of = [&](const std::string& label) {
        for (const auto& r : file.rules) {
            if (r.label == label) return r.lhs;
        }
        throw std::runtime_error("missing rule " + label);
    };
    file.fragments.push_back(fragment(lhs_of("a"), "nipr.a"));
    file.fragments.push_back(fragment(lhs_of("b"), "nipr.b"));
    file.fragments.push_back(fragment(rhs_of("c"), "nipr.c"));
    file.fragments.push_back(fragment(rhs_of("d.x6"), "nipr.d"));
    file.fragments.push_back(fragment(rhs_of("g.1"), "ipr.a"));
    file.fragments.push_back(fragment(rhs_of("f.3"), "ipr.b"));
    file.fragments.push_back(fragment(rhs_of("e"), "ipr.c"));

    std::ofstream out(path);
    out << "# Growth operations of fullerenes and the fragment catalog.\n"
           "# Generated by tests/discover_rules emit; every rule is validated on load.\n"
           "# Road families are listed for roads of up to " << max_k << " hexagons on the right-hand side.\n\n";
    write_rule_file(out, file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string mode = argc > 1 ? argv[1] : "";
    if (mode == "emit") return emit(argc > 2 ? argv[2] : "rules.pat", argc > 3 ? std::stoi(argv[3]) : 6);
    if (mode == "explore") {
        // explore <vertices> <ipr> <max depth> <path length> [index]: minimal
        // inverse scripts that move both pentagons of a pair.
        const int n = std::stoi(argv[2]);
        const bool ipr = std::string(argv[3]) == "1";
        const int max_depth = std::stoi(argv[4]);
        const int len = std::stoi(argv[5]);
        std::vector<CombMap> all;
        const std::string want = argc > 7 ? argv[7] : "";
        if (argc > 6 && std::string(argv[6]) != "-") {
            // GC(m,n) of the dodecahedron instead, given as "m,n".
            const std::string mn = argv[6];
            const auto comma = mn.find(',');
            all.push_back(goldberg_coxeter(seed(Seed::Dodecahedron), std::stoi(mn.substr(0, comma)),
                                           std::stoi(mn.substr(comma + 1))));
        } else {
            all = oracle::fullerenes(n, ipr);
        }
        std::cout << all.size() << " maps\n";
        std::set<std::string> shapes;
        for (const CombMap& m : all) {
        for (FaceId a = 0; a < m.face_count(); ++a) {
            for (FaceId b = a + 1; b < m.face_count(); ++b) {
                if (m.face_size(a) != 5 || m.face_size(b) != 5) continue;
                ThickPath p = normalize_path(m, shortest_thick_path(m, a, b));
                if (p.length() != len) continue;
                std::string shape;
                for (auto st : path_steps(m, p)) shape += "FLRO"[static_cast<int>(st)];
                if (!shapes.insert(shape).second) continue;
                auto region = with_neighbors(m, p.faces);
                if (std::getenv("RINGS2")) region = with_neighbors(m, region);
                g_path = p;
                NameMap names = name_faces(region);
                const std::string na = "f" + std::to_string(a), nb = "f" + std::to_string(b);
                bool solved = false;
                if (std::any_of(region.begin(), region.end(),
                                [&](FaceId f) { return f != a && f != b && m.face_size(f) == 5; })) {
                    shapes.erase(shape);
                    continue;
                }
                for (int depth = 1; depth <= max_depth; ++depth) {
                    Search s;
                    s.depth = depth;
                    s.limit = 4;
                    if (!want.empty()) {
                        s.goal = [&](const CombMap& cur, const NameMap& nm) { return same_shape(pair_shape(cur, nm), want); };
                    }
                    s.accept = [&](const Solution& sol) {
                        for (const auto& t : sol.touched) {
                            if (t != na && t != nb && m.face_size(names.at(t)) != 6) return false;
                        }
                        return sol.touched.count(na) && sol.touched.count(nb);
                    };
                    s.run(m, names);
                    const auto& good = s.found;
                    if (good.empty()) continue;
                    std::cout << "pair " << a << "," << b << " shape " << shape << " depth " << depth << " path";
                    for (FaceId f : p.faces) std::cout << " f" << f;
                    std::cout << "\n";
                    for (const auto& sol : good) describe(m, names, sol);
                    solved = true;
                    break;
                }
                if (!solved) {
                    std::cout << "pair " << a << "," << b << " shape " << shape << " unsolved\n";
                }
            }
        }
        }
        return 0;
    }
    std::cerr << "usage: discover_rules explore N IPR DEPTH [INDEX]\n";
    return 2;
}
