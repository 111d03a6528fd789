#pragma once

#include "conedual/polar.hpp"

namespace conedual {

/// Data of the four-set interactions: C and D are cones, B1 and B2 convex
/// sets containing zero, all in the same ambient space.
struct Quadruple {
    Polyhedron C;
    Polyhedron D;
    Polyhedron B1;
    Polyhedron B2;

    int dim() const { return C.dim(); }
};

enum class Property { Normality, Additivity, Conormality, Coadditivity };

/// The defining inclusions:
///   normal:      (B2 + C) n D  <=  B1
///   additive:    (B2 n C) + D  <=  B1
///   conormal:    B1  <=  (B2 n C) + D
///   coadditive:  B1  <=  (B2 + C) n D
bool has_property(const Quadruple& q, Property prop);

/// Property after scaling one of the sets: B1 for normality/additivity,
/// B2 for conormality/coadditivity. In all four cases the property is
/// monotone in alpha (alpha >= 0).
bool has_property_at(const Quadruple& q, Property prop, const Rational& alpha);

/// Least alpha >= 0 at which the scaled property holds; nullopt encodes
/// +infinity (no finite alpha works).
std::optional<Rational> optimal_constant(const Quadruple& q, Property prop);

/// Coordinatewise one-sided polar of the quadruple.
Quadruple polar_quadruple(const Quadruple& q);

/// Property whose constant transfers to `prop` under polarity:
/// normality <-> conormality and additivity <-> coadditivity.
Property dual_property(Property prop);

/// One-way polar implications valid without closedness caveats (they hold
/// with exact equality on polyhedra only in the directions listed):
///   1: normal(q)             => B1* <= hull version of (B2* n C*) + D*
///   2: additive(q)           => B1* <= (B2* + C*) n D*
///   3: conormal(q)           => (B2* + C*) n D* <= B1*
///   4: coadditive(q)         => (B2* n C*) + D* <= B1*
///   5: normal(polar q)       => B1 <= (B2 n C) + D
///   6: additive(polar q)     => B1 <= (B2 + C) n D
///   7: conormal(polar q)     => (B2 + C) n D <= B1
///   8: coadditive(polar q)   => (B2 n C) + D <= B1
/// Returns true when the implication's conclusion holds or its hypothesis
/// fails.
bool check_duality_implication(int item, const Quadruple& q);

/// Exact equality of the optimal constant with the dual property's optimal
/// constant on the polar quadruple.
bool verify_constant_duality(const Quadruple& q, Property prop);

}  // namespace conedual
