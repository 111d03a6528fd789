#pragma once

#include "conedual/polyhedron.hpp"

namespace conedual {

/// One-sided polar with respect to the dot-product pairing:
/// { z : y.z <= 1 for all y in p }.
Polyhedron one_sided_polar(const Polyhedron& p);

/// Double polar; equals the closed convex hull of p and 0.
Polyhedron bipolar(const Polyhedron& p);

/// Dual cone { z : c.z >= 0 for all c } = -(one-sided polar) for cones.
Polyhedron dual_cone(const Polyhedron& c);

/// Identities of the one-sided polar calculus that are decidable
/// exactly on polyhedra. The index follows the enumeration used
/// throughout the library's documentation:
///   2: a subset b  =>  polar(b) subset polar(a)
///   3: polar(lambda a) = lambda^{-1} polar(a)        (lambda > 0)
///   4: polar(hull(a u b)) = polar(a) n polar(b)
///   6: polar(a n b) = hull(polar(a) u polar(b))      (a, b closed convex, 0 in both)
///   8: polar(a n c) = polar(a) + polar(c)            (c a cone, 0 in a)
///   9: polar(a + c) = polar(a) n polar(c)            (c a cone, 0 in a)
/// For items 6, 8 and 9 both a and (where required) c must contain 0;
/// violations raise std::invalid_argument.
bool check_polar_identity(int item, const Polyhedron& a, const Polyhedron& b,
                          const Rational& lambda = 1);

}  // namespace conedual
