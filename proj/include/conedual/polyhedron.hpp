#pragma once

#include "conedual/lp.hpp"

namespace conedual {

/// Generator representation: conv(vertices) + cone(rays). Lineality shows
/// up as +/- ray pairs. An empty vertex list means the empty set; a pure
/// cone carries the single vertex 0.
struct VRep {
    int dim = 0;
    RatMatrix vertices;
    RatMatrix rays;
};

/// Generators of the cone {x : a.x <= 0 for each row a}: a lineality basis
/// plus extreme rays modulo that lineality space.
struct ConeGens {
    RatMatrix lin;
    RatMatrix rays;
};

ConeGens cone_generators(int dim, const RatMatrix& rows);

VRep h_to_v(const HRep& h);
HRep v_to_h(const VRep& v);

/// Convex polyhedron kept in both representations, each canonical (rows and
/// generators primitive, deduplicated, lex-sorted; H irredundant), so that
/// set equality coincides with operator==.
class Polyhedron {
public:
    Polyhedron() = default;

    static Polyhedron from_h(const HRep& raw);
    static Polyhedron from_v(const VRep& raw);
    static Polyhedron empty_set(int dim);
    static Polyhedron full_space(int dim);
    static Polyhedron point(const RatVector& x);
    /// Cone {x : a.x <= 0} from the given normals.
    static Polyhedron cone_from_normals(int dim, const RatMatrix& normals);
    /// Cone generated by the given rays.
    static Polyhedron cone_from_rays(int dim, const RatMatrix& rays);

    int dim() const { return h_.dim; }
    bool is_empty() const { return v_.vertices.empty(); }
    bool is_cone() const;
    const HRep& h() const { return h_; }
    const VRep& v() const { return v_; }

    bool contains(const RatVector& x) const;

    friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
        return a.h_.dim == b.h_.dim && a.h_.rows == b.h_.rows && a.v_.vertices == b.v_.vertices &&
               a.v_.rays == b.v_.rays;
    }

private:
    HRep h_;
    VRep v_;
};

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
/// Closed convex hull of the union.
Polyhedron convex_hull(const Polyhedron& p, const Polyhedron& q);
Polyhedron negate(const Polyhedron& p);
Polyhedron scale(const Polyhedron& p, const Rational& lambda);
Polyhedron recession_cone(const Polyhedron& p);
bool includes(const Polyhedron& outer, const Polyhedron& inner);

/// Minkowski gauge of x with respect to b (which must contain 0):
/// inf { t >= 0 : x in t*b }. nullopt encodes +infinity.
std::optional<Rational> gauge(const Polyhedron& b, const RatVector& x);

}  // namespace conedual
