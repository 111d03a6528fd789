#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conedual/json_io.hpp"
#include "conedual/linalg.hpp"
#include "helpers.hpp"

using namespace conedual;
using namespace conedual::testing;

TEST_CASE("rational parsing and printing round-trips") {
    CHECK(to_string(parse_rational("22/7")) == "22/7");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-13") == Rational(-13));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("make_primitive clears denominators without flipping direction") {
    RatVector v{Rational(1, 2), Rational(-3, 4), Rational(0)};
    make_primitive(v);
    CHECK(v == RatVector{Rational(2), Rational(-3), Rational(0)});
    RatVector neg{Rational(-2), Rational(-4)};
    make_primitive(neg);
    CHECK(neg == RatVector{Rational(-1), Rational(-2)});
}

TEST_CASE("rref, rank and kernel") {
    RatMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m) == 2);
    const RatMatrix k = kernel_basis(m, 3);
    REQUIRE(k.size() == 1);
    CHECK(dot(k[0], {Rational(1), Rational(2), Rational(3)}) == 0);
    CHECK(dot(k[0], {Rational(0), Rational(1), Rational(1)}) == 0);

    auto x = solve_linear({{2, 0}, {0, 3}}, {Rational(4), Rational(9)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK(!solve_linear({{1, 1}, {1, 1}}, {Rational(0), Rational(1)}));
}

TEST_CASE("lp kernel on known programs") {
    HRep square{2, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}};

    auto out = lp_solve({Rational(1), Rational(1)}, Sense::Maximize, square);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.value == 2);
    CHECK(out.point == RatVector{Rational(1), Rational(1)});

    out = lp_solve({Rational(3), Rational(-2)}, Sense::Minimize, square);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.value == -5);

    HRep empty{1, {{1, 0}, {-1, -1}}};  // x <= 0 and x >= 1
    CHECK(lp_solve({Rational(1)}, Sense::Minimize, empty).status == LPStatus::Infeasible);

    HRep halfline{1, {{-1, 0}}};  // x >= 0
    out = lp_solve({Rational(1)}, Sense::Maximize, halfline);
    REQUIRE(out.status == LPStatus::Unbounded);
    CHECK(out.ray == RatVector{Rational(1)});
}

TEST_CASE("strong duality and Farkas certificates on random LPs") {
    std::mt19937_64 rng(7001);
    int optimal_seen = 0, infeasible_seen = 0, unbounded_seen = 0;
    for (int iter = 0; optimal_seen < 550 || infeasible_seen < 50; ++iter) {
        REQUIRE(iter < 20000);
        std::uniform_int_distribution<int> dims(1, 4), nrows(1, 7);
        const int d = dims(rng);
        HRep h{d, rand_matrix(nrows(rng), d + 1, rng)};
        const RatVector c = rand_vector(d, rng);
        const Sense sense = iter % 2 ? Sense::Minimize : Sense::Maximize;
        const LPOutcome out = lp_solve(c, sense, h);
        if (out.status == LPStatus::Optimal) {
            ++optimal_seen;
            // Primal feasibility and objective value.
            CHECK(dot(c, out.point) == out.value);
            for (const auto& row : h.rows)
                CHECK(dot(RatVector(row.begin(), row.end() - 1), out.point) <= row.back());
            // Dual certificate: y >= 0, A^T y = +/-c, b.y = +/-value.
            REQUIRE(out.dual.size() == h.rows.size());
            Rational by = 0;
            RatVector aty = zero_vector(d);
            for (std::size_t i = 0; i < h.rows.size(); ++i) {
                CHECK(out.dual[i] >= 0);
                by += h.rows[i].back() * out.dual[i];
                for (int k = 0; k < d; ++k)
                    aty[static_cast<std::size_t>(k)] +=
                        h.rows[i][static_cast<std::size_t>(k)] * out.dual[i];
            }
            if (sense == Sense::Maximize) {
                CHECK(aty == c);
                CHECK(by == out.value);
            } else {
                CHECK(aty == negated(c));
                CHECK(by == -out.value);
            }
        } else if (out.status == LPStatus::Infeasible) {
            ++infeasible_seen;
            // Farkas: y >= 0, A^T y = 0, b.y < 0.
            REQUIRE(out.dual.size() == h.rows.size());
            Rational by = 0;
            RatVector aty = zero_vector(d);
            for (std::size_t i = 0; i < h.rows.size(); ++i) {
                CHECK(out.dual[i] >= 0);
                by += h.rows[i].back() * out.dual[i];
                for (int k = 0; k < d; ++k)
                    aty[static_cast<std::size_t>(k)] +=
                        h.rows[i][static_cast<std::size_t>(k)] * out.dual[i];
            }
            CHECK(is_zero(aty));
            CHECK(by < 0);
        } else {
            ++unbounded_seen;
            // The ray improves the objective and stays feasible.
            const Rational gain = dot(c, out.ray);
            CHECK((sense == Sense::Maximize ? gain > 0 : gain < 0));
            for (const auto& row : h.rows)
                CHECK(dot(RatVector(row.begin(), row.end() - 1), out.ray) <= 0);
            for (const auto& row : h.rows)
                CHECK(dot(RatVector(row.begin(), row.end() - 1), out.point) <= row.back());
        }
    }
    CHECK(unbounded_seen > 0);
}

TEST_CASE("square round-trips between representations") {
    HRep square{2, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}};
    const Polyhedron p = Polyhedron::from_h(square);
    CHECK(p.v().vertices ==
          RatMatrix{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    CHECK(p.v().rays.empty());
    CHECK(Polyhedron::from_v(p.v()) == p);
}

TEST_CASE("empty and full-space conventions") {
    const Polyhedron empty = Polyhedron::empty_set(3);
    CHECK(empty.is_empty());
    CHECK(empty.h().rows == RatMatrix{{0, 0, 0, -1}});
    const Polyhedron full = Polyhedron::full_space(3);
    CHECK(full.h().rows.empty());
    CHECK(full.v().vertices == RatMatrix{{0, 0, 0}});
    CHECK(full.v().rays.size() == 6);
    CHECK(includes(full, empty));
    CHECK(includes(empty, empty));
    CHECK(!includes(empty, full));
    CHECK(intersect(full, empty) == empty);
    CHECK(convex_hull(full, empty) == full);
    CHECK(minkowski_sum(full, empty) == empty);
}

TEST_CASE("canonical form makes equality structural") {
    std::mt19937_64 rng(7002);
    for (int iter = 0; iter < 60; ++iter) {
        const Polyhedron p = rand_zero_convex(3, 4, 2, rng);
        // Rebuilding from shuffled, duplicated generators lands on the same
        // object.
        VRep v = p.v();
        v.vertices.insert(v.vertices.end(), p.v().vertices.begin(), p.v().vertices.end());
        std::shuffle(v.vertices.begin(), v.vertices.end(), rng);
        for (const auto& vert : p.v().vertices)
            for (const auto& other : p.v().vertices) v.vertices.push_back(scaled(add(vert, other), Rational(1, 2)));
        std::shuffle(v.rays.begin(), v.rays.end(), rng);
        CHECK(Polyhedron::from_v(v) == p);
        CHECK(Polyhedron::from_h(p.h()) == p);
    }
}

TEST_CASE("set operations agree with the LP inclusion oracle") {
    std::mt19937_64 rng(7003);
    for (int iter = 0; iter < 40; ++iter) {
        const int d = 2 + static_cast<int>(iter % 2);
        const Polyhedron a = rand_zero_convex(d, 3, 1, rng);
        const Polyhedron b = rand_zero_convex(d, 3, 1, rng);
        const Polyhedron cap = intersect(a, b);
        const Polyhedron sum = minkowski_sum(a, b);
        const Polyhedron hull = convex_hull(a, b);
        CHECK(includes(a, cap));
        CHECK(includes(b, cap));
        CHECK(includes(hull, a));
        CHECK(includes(hull, b));
        CHECK(includes(sum, a));  // both contain 0
        CHECK(includes(sum, b));
        CHECK(included_lp(a, cap));
        CHECK(included_lp(hull, a));
        CHECK(included_lp(sum, b));
        CHECK(includes(a, b) == included_lp(a, b));
        CHECK(includes(b, a) == included_lp(b, a));
    }
}

TEST_CASE("scaling and recession") {
    std::mt19937_64 rng(7004);
    for (int iter = 0; iter < 25; ++iter) {
        const Polyhedron p = rand_zero_convex(3, 3, 1, rng);
        CHECK(scale(p, Rational(1)) == p);
        CHECK(scale(scale(p, Rational(3)), Rational(1, 3)) == p);
        CHECK(negate(negate(p)) == p);
        const Polyhedron rec = recession_cone(p);
        CHECK(rec.is_cone());
        for (const auto& r : p.v().rays) CHECK(rec.contains(r));
        CHECK(scale(p, Rational(0)) == Polyhedron::point(zero_vector(3)));
    }
}

TEST_CASE("gauge of the square and gauge laws") {
    HRep square{2, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}};
    const Polyhedron b = Polyhedron::from_h(square);
    CHECK(*gauge(b, {Rational(1, 2), Rational(-1, 4)}) == Rational(1, 2));
    CHECK(*gauge(b, zero_vector(2)) == 0);

    std::mt19937_64 rng(7005);
    for (int iter = 0; iter < 30; ++iter) {
        const Polyhedron ball = rand_ball(2, 2, rng);
        const RatVector x = rand_vector(2, rng), y = rand_vector(2, rng);
        const Rational gx = *gauge(ball, x), gy = *gauge(ball, y);
        CHECK(*gauge(ball, add(x, y)) <= gx + gy);              // subadditive
        CHECK(*gauge(ball, scaled(x, Rational(3))) == 3 * gx);  // positively homogeneous
        if (gx > 0) {
            const RatVector boundary = scaled(x, Rational(1) / gx);
            CHECK(ball.contains(boundary));
            CHECK(*gauge(ball, boundary) == 1);
        }
    }

    // An unbounded body has gauge 0 along its recession cone and +infinity
    // outside the closure of its span of reach.
    const Polyhedron wedge =
        Polyhedron::from_v(VRep{2, {{0, 0}, {1, 0}}, {{0, 1}}});
    CHECK(*gauge(wedge, {Rational(0), Rational(5)}) == 0);
    CHECK(!gauge(wedge, {Rational(0), Rational(-1)}));
}

TEST_CASE("json round-trips and rejects malformed input") {
    std::mt19937_64 rng(7006);
    for (int iter = 0; iter < 20; ++iter) {
        const Polyhedron p = rand_zero_convex(3, 3, 1, rng);
        const json j = polyhedron_to_json(p);
        CHECK(polyhedron_from_json(j) == p);
        json hv = j;
        hv.erase("h");
        CHECK(polyhedron_from_json(hv) == p);
    }
    CHECK_THROWS_AS(polyhedron_from_json(json{{"dim", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(polyhedron_from_json(json{{"dim", 0}, {"h", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(polyhedron_from_json(json::parse(R"({"dim":2,"h":[["1","0"]]})")),
                    std::invalid_argument);
    CHECK(rational_from_json(json(7)) == 7);
    CHECK(dump_canonical(json{{"b", 1}, {"a", 2}}) == R"({"a":2,"b":1})");
}
