#include "doctest.h"
#include "oracle/spiral_oracle.hpp"
#include "polysurg/construct.hpp"
#include "polysurg/verify.hpp"

using namespace polysurg;

TEST_CASE("seed constructions") {
    CHECK(face_vector(capped_tube(5, 0)) == FaceVector{{5, 12}});
    CHECK(face_vector(capped_tube(6, 0)) == FaceVector{{5, 12}, {6, 2}});
    CHECK(face_vector(three_fold_tube(0)) == FaceVector{{5, 12}});
    CHECK(is_isomorphic(three_fold_tube(0), capped_tube(5, 0)));
    CHECK(face_vector(prism(6)) == FaceVector{{4, 6}, {6, 2}});
    for (int k = 0; k <= 4; ++k) {
        CHECK(validate(capped_tube(5, k)).ok());
        CHECK(validate(three_fold_tube(k)).ok());
    }
}

TEST_CASE("the barrel is the unique fullerene on 24 vertices") {
    auto oracle24 = oracle::fullerenes(24);
    REQUIRE(oracle24.size() == 1);
    CHECK(is_isomorphic(oracle24[0], capped_tube(6, 0)));
}

TEST_CASE("Goldberg-Coxeter keeps facets and multiplies vertices") {
    auto d = capped_tube(5, 0);
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= m; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            auto g = goldberg_coxeter(d, m, n);
            const int t = m * m + m * n + n * n;
            CHECK(g.vertex_count() == 20 * t);
            auto fv = face_vector(g);
            CHECK(fv[5] == 12);
            CHECK(verify_fullerene(g).ok());
        }
    }
}

TEST_CASE("Goldberg-Coxeter of other fullerenes") {
    for (const auto& base : oracle::fullerenes(28)) {
        auto g = goldberg_coxeter(base, 2, 1);
        CHECK(g.vertex_count() == 28 * 7);
        CHECK(verify_fullerene(g).ok());
    }
    CHECK(is_isomorphic(goldberg_coxeter(capped_tube(5, 2), 1, 0), capped_tube(5, 2)));
}

TEST_CASE("the leapfrog of the dodecahedron is the IPR C60") {
    auto ipr = oracle::fullerenes(60, true);
    REQUIRE(ipr.size() == 1);
    CHECK(is_isomorphic(goldberg_coxeter(capped_tube(5, 0), 1, 1), ipr[0]));
}

TEST_CASE("GC(m,n) and GC(n,m) are mirror images") {
    auto d = capped_tube(5, 0);
    auto a = goldberg_coxeter(d, 2, 1);
    auto b = goldberg_coxeter(d, 1, 2);
    // Isomorphism ignores orientation.
    CHECK(is_isomorphic(a, b));
    CHECK_FALSE(is_achiral(a));
    CHECK(is_achiral(goldberg_coxeter(d, 2, 2)));
}
