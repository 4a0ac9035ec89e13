#include <set>

#include "doctest.h"
#include "oracle/spiral_oracle.hpp"
#include "polysurg/growth.hpp"
#include "polysurg/verify.hpp"
#include "support.hpp"

using namespace polysurg;
using support::rule;
using support::rules;

TEST_CASE("seeds") {
    CHECK(is_isomorphic(seed(Seed::Dodecahedron), capped_tube(5, 0)));
    CHECK(is_isomorphic(seed(Seed::Barrel), capped_tube(6, 0)));
    CHECK(is_isomorphic(seed(Seed::FamilyTwo, 2), three_fold_tube(2)));
    try {
        seed(Seed::FamilyOne, -1);
        FAIL("expected NegativeParameter");
    } catch (const GrowthError& e) {
        CHECK(e.kind() == GrowthError::Kind::NegativeParameter);
    }
}

TEST_CASE("growth sites") {
    CHECK(detect_growth_sites(capped_tube(5, 0), rules().rules).empty());
    CHECK_THROWS_AS(detect_growth_sites(cube(), rules().rules), GrowthError);
    bool endo_kroto = false;
    for (const auto& s : detect_lhs_sites(capped_tube(6, 0), rules().rules)) endo_kroto = endo_kroto || s.rule->op == 'c';
    CHECK(endo_kroto);
}

TEST_CASE("operation (a) grows family one, (b) grows family two") {
    for (int k = 0; k < 3; ++k) {
        auto m = capped_tube(5, k);
        auto sites = match_pattern(m, rule("a").lhs);
        REQUIRE_FALSE(sites.empty());
        CHECK(is_isomorphic(apply_rule(m, rule("a"), sites[0]), capped_tube(5, k + 1)));
        auto t = three_fold_tube(k);
        auto tsites = match_pattern(t, rule("b").lhs);
        REQUIRE_FALSE(tsites.empty());
        CHECK(is_isomorphic(apply_rule(t, rule("b"), tsites[0]), three_fold_tube(k + 1)));
    }
}

TEST_CASE("Endo-Kroto takes the barrel to the fullerene on 26 vertices") {
    auto barrel = capped_tube(6, 0);
    MatchOptions opt;
    opt.distinct_face_sets = false;
    auto sites = match_pattern(barrel, rule("c").lhs, opt);
    REQUIRE_FALSE(sites.empty());
    auto c26 = oracle::fullerenes(26);
    REQUIRE(c26.size() == 1);
    for (const auto& s : sites) CHECK(is_isomorphic(apply_rule(barrel, rule("c"), s), c26[0]));
}

TEST_CASE("applying at a non-match is refused") {
    auto m = capped_tube(5, 0);
    MatchResult bogus{std::vector<FaceId>(rule("c").lhs.faces.size(), 0), kNoDart, false};
    try {
        apply_rule(m, rule("c"), bogus);
        FAIL("expected NotAMatch");
    } catch (const GrowthError& e) {
        CHECK(e.kind() == GrowthError::Kind::NotAMatch);
    }
}

TEST_CASE("decompositions on small fullerenes are legal") {
    int runs = 0;
    for (int v = 20; v <= 30; v += 2) {
        for (const auto& m : oracle::fullerenes(v)) {
            for (const auto& site : detect_lhs_sites(m, rules().rules)) {
                auto d = decompose_rule(m, *site.rule, site.match);
                ++runs;
                REQUIRE(d.intermediates.size() == d.specs.size() + 1);
                for (std::size_t i = 0; i < d.specs.size(); ++i) {
                    CHECK(is_permitted(d.signatures[i]));
                    CHECK(d.signatures[i] == signature(d.intermediates[i], d.specs[i]));
                    CHECK(is_isomorphic(truncate(d.intermediates[i], d.specs[i]).map, d.intermediates[i + 1]));
                    CHECK(verify_intermediate(d.intermediates[i + 1]).ok());
                }
                CHECK(verify_fullerene(d.intermediates.back()).ok());
                CHECK(support::hexagons(d.intermediates.back()) ==
                      support::hexagons(m) + static_cast<int>(site.rule->script.size()));
            }
        }
    }
    CHECK(runs > 0);
}

TEST_CASE("inversion and application undo each other") {
    std::vector<CombMap> corpus;
    for (int v = 24; v <= 34; v += 2)
        for (auto& m : oracle::fullerenes(v)) corpus.push_back(std::move(m));
    corpus.push_back(goldberg_coxeter(capped_tube(5, 0), 1, 1));
    corpus.push_back(goldberg_coxeter(capped_tube(5, 0), 2, 0));
    int n = 0;
    for (const auto& m : corpus) {
        const auto code = canonical_code(m);
        for (const auto& site : detect_growth_sites(m, rules().rules)) {
            auto inv = support::invert_with_match(m, *site.rule, site.match);
            CHECK(is_isomorphic(inv.map, invert_rule(m, *site.rule, site.match)));
            CHECK(canonical_code(apply_rule(inv.map, *site.rule, inv.lhs)) == code);
            ++n;
        }
    }
    CHECK(n > 100);
}

TEST_CASE("every road member inverts on its worked example") {
    for (const auto& r : rules().rules) {
        if (r.op != 'a' && r.op != 'b' && r.op != 'f' && r.op != 'g') continue;
        CAPTURE(r.label);
        auto m = support::rhs_instance(r);
        auto sites = match_pattern(m, r.rhs);
        REQUIRE_FALSE(sites.empty());
        auto inv = support::invert_with_match(m, r, sites[0]);
        CHECK(support::hexagons(inv.map) == support::hexagons(m) - static_cast<int>(r.script.size()));
        CHECK(is_isomorphic(apply_rule(inv.map, r, inv.lhs), m));
    }
}

TEST_CASE("enumeration agrees with the oracle at small sizes") {
    CHECK(enumerate(rules().rules, {0, 1}).maps.size() == 1);
    // No fullerene has exactly one hexagon.
    CHECK(enumerate(rules().rules, {1, 1}).maps.size() == 1);
    auto r = enumerate(rules().rules, {6, 1});
    std::set<CanonicalCode> got(r.codes.begin(), r.codes.end());
    std::set<CanonicalCode> want;
    for (int v = 20; v <= 32; v += 2)
        for (const auto& m : oracle::fullerenes(v)) want.insert(canonical_code(m));
    CHECK(got == want);
    CHECK(r.codes.size() == got.size());
    // Threads do not change the outcome.
    CHECK(enumerate(rules().rules, {6, 3}).codes == r.codes);
}
