#include <algorithm>
#include <set>

#include "doctest.h"
#include "polysurg/belts.hpp"
#include "polysurg/construct.hpp"
#include "polysurg/surgery.hpp"
#include "oracle/spiral_oracle.hpp"

using namespace polysurg;

namespace {

// Independent k-loop count: ordered dual walks of length k returning to the
// start, no repeats, divided by the 2k rotations and reversals.
std::size_t brute_loops(const CombMap& m, int k) {
    std::size_t walks = 0;
    std::vector<FaceId> path;
    auto dfs = [&](auto&& self, FaceId f) -> void {
        if (static_cast<int>(path.size()) == k) {
            if (m.faces_adjacent(f, path[0])) ++walks;
            return;
        }
        for (FaceId g : m.face_neighbors(f)) {
            if (std::find(path.begin(), path.end(), g) != path.end()) continue;
            path.push_back(g);
            self(self, g);
            path.pop_back();
        }
    };
    for (FaceId f = 0; f < m.face_count(); ++f) {
        path = {f};
        dfs(dfs, f);
    }
    return walks / (2 * k);
}

}  // namespace

TEST_CASE("family one belt census") {
    for (int k = 0; k <= 4; ++k) {
        CAPTURE(k);
        auto m = capped_tube(5, k);
        CHECK(find_k_belts(m, 3).empty());
        CHECK(find_k_belts(m, 4).empty());
        CHECK(find_k_belts(m, 5).size() == static_cast<std::size_t>(12 + k));
        auto rep = classify_five_belts(m);
        CHECK(rep.surrounds_pentagon == 12);
        CHECK(rep.hexagon_rings == k);
    }
}

TEST_CASE("every reported belt is a belt and loops match a brute count") {
    for (const auto& m : {cube(), prism(5), capped_tube(5, 1), capped_tube(6, 0), three_fold_tube(1)}) {
        for (int k = 3; k <= 5; ++k) {
            for (const auto& b : find_k_belts(m, k)) CHECK(is_belt(m, b.faces));
            CHECK(find_k_loops(m, k).size() == brute_loops(m, k));
        }
    }
}

TEST_CASE("belts are reported once") {
    auto m = capped_tube(5, 2);
    auto belts = find_k_belts(m, 5);
    std::set<std::set<FaceId>> sets;
    for (const auto& b : belts) sets.insert(std::set<FaceId>(b.faces.begin(), b.faces.end()));
    CHECK(sets.size() == belts.size());
}

TEST_CASE("the prism over a triangle has a 3-belt") {
    auto belts = find_k_belts(prism(3), 3);
    REQUIRE(belts.size() == 1);
    for (FaceId f : belts[0].faces) CHECK(prism(3).face_size(f) == 4);
}

TEST_CASE("cube 4-belts surround two facets") {
    auto c = cube();
    auto belts = find_k_belts(c, 4);
    CHECK(belts.size() == 3);
    for (const auto& b : belts) {
        auto a = border_loops(c, b);
        CHECK(a.kind == BeltCase::SurroundsTwoFacets);
        CHECK(a.region[0].size() == 1);
        CHECK(a.region[1].size() == 1);
    }
}

TEST_CASE("bordering loops on family one") {
    auto m = capped_tube(5, 1);
    auto rep = classify_five_belts(m);
    for (std::size_t i = 0; i < rep.belts.size(); ++i) {
        auto a = border_loops(m, rep.belts[i]);
        CHECK(a.loop_sum_ok);
        CHECK(a.contact_ok);
        if (rep.kinds[i] == FiveBeltKind::HexagonRing) CHECK(a.kind == BeltCase::BordersLoops);
        if (rep.kinds[i] == FiveBeltKind::SurroundsPentagon) CHECK(a.kind == BeltCase::SurroundsFacet);
        // Each side of the cycle is a disk; together they cover the sphere.
        CHECK(a.region[0].size() + a.region[1].size() + 5 == static_cast<std::size_t>(m.face_count()));
    }
}

TEST_CASE("split_by_cycle of a facet boundary") {
    auto m = capped_tube(5, 0);
    auto cycle = boundary_cycle(m, {0});
    CHECK(cycle.darts.size() == 5);
    auto split = split_by_cycle(m, cycle);
    CHECK(split.side[0].size() == 1);
    CHECK(split.side[1].size() == 11);
    CHECK(split.side_is_disk[0]);
    CHECK(split.side_is_disk[1]);
    CHECK(split.loop[1].length() == 5);
}

TEST_CASE("split_by_cycle rejects an open walk") {
    auto m = capped_tube(5, 0);
    auto cycle = boundary_cycle(m, {0});
    cycle.darts.pop_back();
    CHECK_THROWS_AS(split_by_cycle(m, cycle), BeltError);
}

TEST_CASE("classify_five_belts rejects non-fullerenes") {
    CHECK_THROWS_AS(classify_five_belts(cube()), BeltError);
}

TEST_CASE("small fullerenes: no 3- or 4-belts, 3-loops meet at a vertex, every edge straightens") {
    int n = 0;
    for (int v = 20; v <= 32; v += 2) {
        for (const auto& m : oracle::fullerenes(v)) {
            ++n;
            CHECK(find_k_belts(m, 3).empty());
            CHECK(find_k_belts(m, 4).empty());
            for (const auto& t : check_three_loops(m)) {
                CHECK(t.common_vertex);
                CHECK(t.bordering_length == t.expected_length);
            }
            for (DartId e = 0; e < m.dart_count(); ++e) CHECK(can_straighten(m, e));
        }
    }
    CHECK(n == 14);
}
