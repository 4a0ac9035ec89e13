// Command line front end. Maps travel as planar_code on stdin/stdout.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "polysurg/construct.hpp"
#include "polysurg/growth.hpp"
#include "polysurg/io.hpp"
#include "polysurg/rule_file.hpp"
#include "polysurg/surgery.hpp"
#include "polysurg/verify.hpp"

using namespace polysurg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string in, out, rules = default_rule_path();
    std::string family = "dodeca", rule, pattern;
    int k = 0, site = 0, max_p6 = 0, jobs = 1, outer = -1;
    bool intermediate = false;
};

std::vector<CombMap> read_input(const Options& o) {
    if (o.in.empty()) return read_planar_code(std::cin);
    std::ifstream f(o.in, std::ios::binary);
    if (!f) throw UsageError("cannot open " + o.in);
    return read_planar_code(f);
}

// Runs `body` with the output stream chosen by --out.
template <class F>
void with_output(const Options& o, F body) {
    if (o.out.empty()) {
        body(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out);
    body(f);
}

// Rules selected by operation letter or by label.
std::vector<GrowthRule> select_rules(const Options& o) {
    RuleFile file = load_rule_file(o.rules);
    std::vector<GrowthRule> out;
    for (auto& r : file.rules) {
        if (o.rule.empty() || r.label == o.rule || (o.rule.size() == 1 && r.op == o.rule[0])) out.push_back(r);
    }
    if (out.empty()) throw UsageError("no rule matches '" + o.rule + "'");
    return out;
}

const GrowthSite& pick(const std::vector<GrowthSite>& sites, int index) {
    if (index < 0 || index >= static_cast<int>(sites.size())) {
        throw UsageError("site " + std::to_string(index) + " out of range (" + std::to_string(sites.size()) +
                         " sites)");
    }
    return sites[index];
}

int cmd_gen(const Options& o) {
    Seed s;
    if (o.family == "dodeca") s = Seed::Dodecahedron;
    else if (o.family == "barrel") s = Seed::Barrel;
    else if (o.family == "one") s = Seed::FamilyOne;
    else if (o.family == "two") s = Seed::FamilyTwo;
    else throw UsageError("unknown family '" + o.family + "'");
    if (o.k < 0) throw UsageError("--k must be non-negative");
    const CombMap m = seed(s, o.k);
    with_output(o, [&](std::ostream& out) { write_planar_code(out, {m}); });
    return 0;
}

int cmd_grow(const Options& o) {
    const auto rules = select_rules(o);
    std::vector<CombMap> result;
    for (const CombMap& m : read_input(o)) {
        const auto sites = detect_lhs_sites(m, rules);
        const GrowthSite& s = pick(sites, o.site);
        result.push_back(apply_rule(m, *s.rule, s.match));
    }
    with_output(o, [&](std::ostream& out) { write_planar_code(out, result, RecordOrder::AsGiven); });
    return 0;
}

int cmd_invert(const Options& o) {
    const auto rules = select_rules(o);
    std::vector<CombMap> result;
    for (const CombMap& m : read_input(o)) {
        const auto sites = detect_growth_sites(m, rules);
        const GrowthSite& s = pick(sites, o.site);
        result.push_back(invert_rule(m, *s.rule, s.match));
    }
    with_output(o, [&](std::ostream& out) { write_planar_code(out, result, RecordOrder::AsGiven); });
    return 0;
}

int cmd_decompose(const Options& o) {
    const auto rules = select_rules(o);
    const auto maps = read_input(o);
    if (maps.size() != 1) throw UsageError("decompose expects exactly one map");
    const auto sites = detect_lhs_sites(maps.front(), rules);
    const GrowthSite& s = pick(sites, o.site);
    const Decomposition d = decompose_rule(maps.front(), *s.rule, s.match);
    std::cerr << "rule " << s.rule->label << ", " << d.specs.size() << " truncations\n";
    for (std::size_t i = 0; i < d.specs.size(); ++i) {
        std::cerr << "step " << i + 1 << ": " << d.signatures[i].str() << " on facet "
                  << d.specs[i].face << "\n";
    }
    with_output(o, [&](std::ostream& out) { write_planar_code(out, d.intermediates, RecordOrder::AsGiven); });
    return 0;
}

int cmd_enumerate(const Options& o) {
    if (o.max_p6 < 0 || o.jobs < 1) throw UsageError("--max-p6 must be >= 0 and --jobs >= 1");
    const auto rules = load_rule_file(o.rules).rules;
    const EnumerationResult r = enumerate(rules, {o.max_p6, o.jobs});
    with_output(o, [&](std::ostream& out) { write_planar_code(out, r.maps); });
    return 0;
}

int cmd_verify(const Options& o) {
    int failures = 0, index = 0;
    with_output(o, [&](std::ostream& out) {
        for (const CombMap& m : read_input(o)) {
            const TheoremReport r = o.intermediate ? verify_intermediate(m) : verify_fullerene(m);
            out << "map " << index++ << ": ";
            if (const Check* c = r.failure()) {
                ++failures;
                out << "FAIL " << c->name << " (" << c->detail << ")";
                if (!c->witness.empty()) {
                    out << " witness";
                    for (FaceId f : c->witness) out << ' ' << f;
                }
                out << "\n";
            } else {
                out << "PASS\n";
            }
        }
    });
    return failures ? 1 : 0;
}

int cmd_canon(const Options& o) {
    const auto maps = read_input(o);
    with_output(o, [&](std::ostream& out) {
        for (const CombMap& m : maps) out << canonical_code(m).hex() << "\n";
    });
    return 0;
}

int cmd_match(const Options& o) {
    std::ifstream f(o.pattern);
    if (!f) throw UsageError("cannot open " + o.pattern);
    const PatchPattern p = parse_pattern(f);
    const auto maps = read_input(o);
    with_output(o, [&](std::ostream& out) {
        for (std::size_t i = 0; i < maps.size(); ++i) {
            const auto matches = match_pattern(maps[i], p);
            out << "map " << i << ": " << matches.size() << " matches\n";
            for (const auto& mt : matches) {
                out << " ";
                for (FaceId g : mt.faces) out << ' ' << g;
                out << (mt.mirrored ? " (mirrored)\n" : "\n");
            }
        }
    });
    return 0;
}

int cmd_render(const Options& o) {
    const auto maps = read_input(o);
    if (maps.empty()) throw UsageError("no map on input");
    const CombMap& m = maps.front();
    FaceId outer = o.outer;
    if (outer < 0) {
        // Default: the first largest facet.
        outer = 0;
        for (FaceId f = 1; f < m.face_count(); ++f) {
            if (m.face_size(f) > m.face_size(outer)) outer = f;
        }
    }
    if (outer >= m.face_count()) throw UsageError("--outer out of range");
    const std::string svg = render_svg(m, outer);
    with_output(o, [&](std::ostream& out) { out << svg; });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fullerene growth by truncations and straightenings"};
    app.require_subcommand(1);
    Options o;
    auto io = [&](CLI::App* c) {
        c->add_option("--in", o.in, "planar_code input file (default stdin)");
        c->add_option("--out", o.out, "output file (default stdout)");
    };
    auto rules = [&](CLI::App* c) { c->add_option("--rules", o.rules, "rule file")->capture_default_str(); };

    auto* gen = app.add_subcommand("gen", "write a seed fullerene");
    gen->add_option("--family", o.family, "dodeca | barrel | one | two")->capture_default_str();
    gen->add_option("--k", o.k, "ring or layer count");
    io(gen);
    auto* grow = app.add_subcommand("grow", "apply a growth operation at a left-hand site");
    grow->add_option("--rule", o.rule, "operation letter a..g or rule label")->required();
    grow->add_option("--site", o.site, "site index");
    io(grow);
    rules(grow);
    auto* inv = app.add_subcommand("invert", "undo a growth operation at a right-hand site");
    inv->add_option("--rule", o.rule, "operation letter a..g or rule label")->required();
    inv->add_option("--site", o.site, "site index");
    io(inv);
    rules(inv);
    auto* dec = app.add_subcommand("decompose", "write the truncation sequence of an operation");
    dec->add_option("--rule", o.rule, "operation letter a..g or rule label")->required();
    dec->add_option("--site", o.site, "site index");
    io(dec);
    rules(dec);
    auto* en = app.add_subcommand("enumerate", "closure of the dodecahedron under the operations");
    en->add_option("--max-p6", o.max_p6, "largest hexagon count")->required();
    en->add_option("--jobs", o.jobs, "worker threads");
    io(en);
    rules(en);
    auto* ver = app.add_subcommand("verify", "check the fullerene or intermediate contract");
    ver->add_flag("--intermediate", o.intermediate, "check the intermediate-polytope contract");
    io(ver);
    auto* can = app.add_subcommand("canon", "print canonical codes");
    io(can);
    auto* mat = app.add_subcommand("match", "find a pattern");
    mat->add_option("--pattern", o.pattern, "pattern file")->required();
    io(mat);
    auto* ren = app.add_subcommand("render", "draw the first map as SVG");
    ren->add_option("--outer", o.outer, "outer facet (default: a largest one)");
    io(ren);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    try {
        if (gen->parsed()) return cmd_gen(o);
        if (grow->parsed()) return cmd_grow(o);
        if (inv->parsed()) return cmd_invert(o);
        if (dec->parsed()) return cmd_decompose(o);
        if (en->parsed()) return cmd_enumerate(o);
        if (ver->parsed()) return cmd_verify(o);
        if (can->parsed()) return cmd_canon(o);
        if (mat->parsed()) return cmd_match(o);
        if (ren->parsed()) return cmd_render(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
