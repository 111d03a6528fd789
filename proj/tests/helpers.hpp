#pragma once

#include "conedual/polyhedron.hpp"

#include <random>

namespace conedual::testing {

inline Rational rand_entry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    return Rational(d(rng));
}

inline RatVector rand_vector(int dim, std::mt19937_64& rng) {
    RatVector v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = rand_entry(rng);
    return v;
}

inline RatMatrix rand_matrix(int rows, int dim, std::mt19937_64& rng) {
    RatMatrix m;
    for (int i = 0; i < rows; ++i) m.push_back(rand_vector(dim, rng));
    return m;
}

/// Random polytope: hull of a few integer points.
inline Polyhedron rand_polytope(int dim, int points, std::mt19937_64& rng) {
    return Polyhedron::from_v(VRep{dim, rand_matrix(points, dim, rng), {}});
}

/// Random closed convex set containing 0 (polytope hull including the
/// origin, optionally with recession rays).
inline Polyhedron rand_zero_convex(int dim, int points, int rays, std::mt19937_64& rng) {
    VRep v;
    v.dim = dim;
    v.vertices = rand_matrix(points, dim, rng);
    v.vertices.push_back(zero_vector(dim));
    v.rays = rand_matrix(rays, dim, rng);
    v.rays.erase(std::remove_if(v.rays.begin(), v.rays.end(), is_zero), v.rays.end());
    return Polyhedron::from_v(v);
}

/// Random polyhedral cone generated by a few integer rays.
inline Polyhedron rand_cone(int dim, int rays, std::mt19937_64& rng) {
    RatMatrix r = rand_matrix(rays, dim, rng);
    r.erase(std::remove_if(r.begin(), r.end(), is_zero), r.end());
    return Polyhedron::cone_from_rays(dim, r);
}

/// Random bounded polytope with 0 in its interior: hull of +/- pairs of
/// nonzero integer points (symmetric, hence full-dimensional around 0 as
/// long as the points span).
inline Polyhedron rand_ball(int dim, int points, std::mt19937_64& rng) {
    VRep v;
    v.dim = dim;
    for (;;) {
        v.vertices.clear();
        for (int i = 0; i < dim; ++i) {  // guarantee the span
            RatVector e = zero_vector(dim);
            e[static_cast<std::size_t>(i)] = 1 + (rng() % 3);
            v.vertices.push_back(e);
            v.vertices.push_back(negated(e));
        }
        for (int i = 0; i < points; ++i) {
            RatVector x = rand_vector(dim, rng);
            if (is_zero(x)) continue;
            v.vertices.push_back(x);
            v.vertices.push_back(negated(x));
        }
        Polyhedron p = Polyhedron::from_v(v);
        bool interior = true;
        for (const auto& row : p.h().rows)
            if (row.back() <= 0) interior = false;
        if (interior && p.v().rays.empty()) return p;
    }
}

/// Axis-aligned box with random rational half-widths. Cheap in high
/// dimensions (2*dim facets), unlike a generic symmetric hull.
inline Polyhedron rand_box_ball(int dim, std::mt19937_64& rng) {
    HRep h;
    h.dim = dim;
    for (int k = 0; k < dim; ++k) {
        RatVector up = zero_vector(dim), down = zero_vector(dim);
        up[static_cast<std::size_t>(k)] = 1;
        down[static_cast<std::size_t>(k)] = -1;
        up.push_back(Rational(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3)));
        down.push_back(Rational(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3)));
        h.rows.push_back(std::move(up));
        h.rows.push_back(std::move(down));
    }
    return Polyhedron::from_h(h);
}

/// LP-based inclusion oracle (independent of the generator-based
/// `includes`): inner is contained in outer iff no outer facet can be
/// violated by maximizing over inner's H-representation.
inline bool included_lp(const Polyhedron& outer, const Polyhedron& inner) {
    if (!lp_feasible(inner.h())) return true;
    if (!lp_feasible(outer.h())) return false;
    for (const auto& row : outer.h().rows) {
        const RatVector a(row.begin(), row.end() - 1);
        const LPOutcome out = lp_solve(a, Sense::Maximize, inner.h());
        if (out.status == LPStatus::Unbounded) return false;
        if (out.status == LPStatus::Optimal && out.value > row.back()) return false;
    }
    return true;
}

}  // namespace conedual::testing
