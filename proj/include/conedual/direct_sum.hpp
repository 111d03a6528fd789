#pragma once

#include "conedual/quadruple.hpp"

#include <cstdint>

namespace conedual {

enum class PNorm { One, Infinity };

inline PNorm conjugate(PNorm p) { return p == PNorm::One ? PNorm::Infinity : PNorm::One; }

/// A finite l_p direct sum: m copies of R^d ordered by the cones, normed
/// blockwise by the gauge of base_ball (a polytope with 0 in its interior).
/// Elements live in R^{m*d}, block omega occupying coordinates
/// [omega*d, (omega+1)*d).
struct DirectSumInstance {
    int d = 0;
    int m = 0;
    PNorm p = PNorm::One;
    Polyhedron base_ball;
    std::vector<Polyhedron> cones;  // m cones in R^d

    int ambient() const { return d * m; }
};

void validate_instance(const DirectSumInstance& inst);

/// The cast of sets from the direct-sum theory, all in R^{m*d}:
///   oplus_c : blockwise membership in the cones
///   s0      : block sum equal to 0
///   s1      : gauge(base, block sum) <= 1
///   k_inf   : all blocks equal
///   k1      : all blocks equal with gauge(base, block) <= 1
///   ball    : unit ball of the l_p sum norm
struct SumSets {
    Polyhedron oplus_c;
    Polyhedron s0;
    Polyhedron s1;
    Polyhedron k_inf;
    Polyhedron k1;
    Polyhedron ball;
};

SumSets build_sets(const DirectSumInstance& inst);

RatVector embed_delta(const DirectSumInstance& inst, int omega, const RatVector& x);
RatVector embed_const(const DirectSumInstance& inst, const RatVector& x);
RatVector block(const DirectSumInstance& inst, const RatVector& xi, int omega);
RatVector sigma_sum(const DirectSumInstance& inst, const RatVector& xi);

/// Polar base ball, polar cones, conjugate exponent.
DirectSumInstance dual_instance(const DirectSumInstance& inst);

/// The six polar identities between the primal sets and the dual-instance
/// sets: polars of (oplus_c, k_inf, k1, s1, s0, ball) are
/// (oplus_c', s0', s1', k1', k_inf', ball') of the dual instance.
bool check_sum_polars(const DirectSumInstance& inst);

/// Quadruple realizing the given property for this instance:
///   normality:    (oplus_c, k_inf, k1,   ball)
///   conormality:  (oplus_c, s0,    s1,   ball)
///   additivity:   (oplus_c, {0},   ball, s1)
///   coadditivity: (oplus_c, full,  ball, k1)
Quadruple property_quadruple(const DirectSumInstance& inst, Property prop);

std::optional<Rational> sum_constant(const DirectSumInstance& inst, Property prop);

/// Exact equality of the normality (conormality) constant with the dual
/// instance's conormality (normality) constant.
bool verify_normality_duality(const DirectSumInstance& inst);
/// Same for additivity vs coadditivity.
bool verify_additivity_duality(const DirectSumInstance& inst);

struct AndoResult {
    Rational value;    // l_p norm of the decomposition
    RatMatrix parts;   // m blocks, summing to x, parts[i] in cones[i]
};

/// Minimal-norm conic decomposition of x: parts in the cones with block
/// sum x, minimizing the l_p sum norm. nullopt when no decomposition
/// exists.
std::optional<AndoResult> ando_decompose(const DirectSumInstance& inst, const RatVector& x);

/// sup over the base ball of the minimal decomposition norm; attained at a
/// vertex of the base ball. Equals the conormality constant.
std::optional<Rational> ando_bound(const DirectSumInstance& inst);

/// Floating-point report for intermediate exponents 1 < p < infinity,
/// available for the normality and additivity families. `bound` is the
/// sound interpolation bound alpha_1^(1/p) * alpha_inf^(1-1/p) on the
/// optimal constant; `max_observed` the largest constant any sampled
/// feasible point forces. infinity propagates as +inf.
struct SampledReport {
    double bound = 0;
    double max_observed = 0;
    int samples = 0;
};

SampledReport sampled_constant(const DirectSumInstance& inst, double p, Property prop,
                               std::uint64_t seed, int samples);

}  // namespace conedual
