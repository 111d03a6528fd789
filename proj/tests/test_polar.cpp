#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conedual/polar.hpp"
#include "helpers.hpp"

using namespace conedual;
using namespace conedual::testing;

namespace {

const Polyhedron kSquare =
    Polyhedron::from_h(HRep{2, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}});
const Polyhedron kDiamond =
    Polyhedron::from_v(VRep{2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {}});

}  // namespace

TEST_CASE("known polars") {
    CHECK(one_sided_polar(kSquare) == kDiamond);
    CHECK(one_sided_polar(kDiamond) == kSquare);

    const Polyhedron orthant = Polyhedron::cone_from_rays(2, {{1, 0}, {0, 1}});
    CHECK(one_sided_polar(orthant) == Polyhedron::cone_from_rays(2, {{-1, 0}, {0, -1}}));
    CHECK(dual_cone(orthant) == orthant);

    // A shifted segment not containing 0: the polar is a half-plane-like
    // slab determined by both endpoints.
    const Polyhedron seg = Polyhedron::from_v(VRep{2, {{1, 1}, {2, 1}}, {}});
    const Polyhedron pol = one_sided_polar(seg);
    CHECK(pol.contains({Rational(0), Rational(1)}));
    CHECK(pol.contains({Rational(0), Rational(-7)}));
    CHECK(!pol.contains({Rational(0), Rational(2)}));

    CHECK(one_sided_polar(Polyhedron::empty_set(2)) == Polyhedron::full_space(2));
    CHECK(one_sided_polar(Polyhedron::full_space(2)) == Polyhedron::point(zero_vector(2)));
}

TEST_CASE("bipolar equals the closed hull with the origin") {
    std::mt19937_64 rng(8001);
    for (int iter = 0; iter < 120; ++iter) {
        const int d = 2 + static_cast<int>(iter % 3);
        const Polyhedron p = (iter % 3 == 0) ? rand_cone(d, 3, rng)
                                             : rand_zero_convex(d, 3, iter % 2, rng);
        const Polyhedron expect = convex_hull(p, Polyhedron::point(zero_vector(d)));
        CHECK(bipolar(p) == expect);
    }
    // Without 0 the hull genuinely grows.
    const Polyhedron seg = Polyhedron::from_v(VRep{2, {{1, 1}, {2, 1}}, {}});
    CHECK(bipolar(seg) == convex_hull(seg, Polyhedron::point(zero_vector(2))));
    CHECK(bipolar(seg) != seg);
}

TEST_CASE("polar calculus identities on random data") {
    std::mt19937_64 rng(8002);
    for (int iter = 0; iter < 80; ++iter) {
        const int d = 2 + static_cast<int>(iter % 3);
        const Polyhedron a = rand_zero_convex(d, 3, iter % 2, rng);
        const Polyhedron b = rand_zero_convex(d, 3, 0, rng);
        const Polyhedron c = rand_cone(d, 3, rng);

        CHECK(check_polar_identity(2, intersect(a, b), a));
        CHECK(check_polar_identity(3, a, {}, Rational(3, 2)));
        CHECK(check_polar_identity(4, a, b));
        CHECK(check_polar_identity(6, a, b));
        CHECK(check_polar_identity(8, a, c));
        CHECK(check_polar_identity(9, a, c));
    }
    CHECK_THROWS_AS(check_polar_identity(5, kSquare, kSquare), std::invalid_argument);
    CHECK_THROWS_AS(check_polar_identity(3, kSquare, {}, Rational(0)), std::invalid_argument);
    const Polyhedron off = Polyhedron::point({Rational(2), Rational(2)});
    CHECK_THROWS_AS(check_polar_identity(6, off, kSquare), std::invalid_argument);
}

TEST_CASE("polars reverse inclusion and respect scaling structure") {
    std::mt19937_64 rng(8003);
    for (int iter = 0; iter < 40; ++iter) {
        const Polyhedron a = rand_zero_convex(3, 3, 1, rng);
        // lambda A decreases polars as lambda grows through 1 < 3/2 < 2.
        const Polyhedron p1 = one_sided_polar(a);
        const Polyhedron p2 = one_sided_polar(scale(a, Rational(3, 2)));
        const Polyhedron p3 = one_sided_polar(scale(a, Rational(2)));
        CHECK(includes(p1, p2));
        CHECK(includes(p2, p3));
        // Intersection of the dilations lambda A over lambda > 1 shrinks
        // back down to A itself (checked along a descending sequence).
        Polyhedron cap = scale(a, Rational(2));
        for (const Rational lam : {Rational(3, 2), Rational(5, 4), Rational(9, 8)})
            cap = intersect(cap, scale(a, lam));
        CHECK(includes(cap, a));
        CHECK(includes(scale(a, Rational(9, 8)), cap));
    }
}

TEST_CASE("cone polar inclusion flips under dualization") {
    std::mt19937_64 rng(8004);
    for (int iter = 0; iter < 40; ++iter) {
        const Polyhedron c1 = rand_cone(3, 3, rng);
        const Polyhedron c2 = rand_cone(3, 3, rng);
        const Polyhedron hullc = convex_hull(c1, c2);
        CHECK(one_sided_polar(hullc) == intersect(one_sided_polar(c1), one_sided_polar(c2)));
        CHECK(bipolar(c1) == c1);  // cones contain 0 and are closed convex
        CHECK(dual_cone(dual_cone(c1)) == c1);
    }
}
