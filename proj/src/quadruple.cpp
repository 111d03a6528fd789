#include "conedual/quadruple.hpp"

namespace conedual {

namespace {

// Membership in (B2 + C) n D (normality) or (B2 n C) + D (additivity) as a
// lifted inequality system over (x, b) in R^{2d}, with x = b + remainder.
// Avoids enumerating the generators of the Minkowski sum, whose size can
// explode combinatorially.
HRep lifted_lhs(const Quadruple& q, Property prop) {
    const int d = q.dim();
    HRep sys;
    sys.dim = 2 * d;
    const auto on_b = [&](const RatVector& row) {
        RatVector r = zero_vector(static_cast<std::size_t>(d));
        r.insert(r.end(), row.begin(), row.end() - 1);
        r.push_back(row.back());
        sys.rows.push_back(std::move(r));
    };
    const auto on_x_minus_b = [&](const RatVector& row) {
        RatVector r(row.begin(), row.end() - 1);
        for (const auto& c : RatVector(row.begin(), row.end() - 1)) r.push_back(-c);
        r.push_back(row.back());
        sys.rows.push_back(std::move(r));
    };
    const auto on_x = [&](const RatVector& row) {
        RatVector r(row.begin(), row.end() - 1);
        r.resize(static_cast<std::size_t>(2 * d), Rational(0));
        r.push_back(row.back());
        sys.rows.push_back(std::move(r));
    };
    for (const auto& row : q.B2.h().rows) on_b(row);
    if (prop == Property::Normality) {
        for (const auto& row : q.C.h().rows) on_x_minus_b(row);  // x - b in C
        for (const auto& row : q.D.h().rows) on_x(row);
    } else {
        for (const auto& row : q.C.h().rows) on_b(row);          // b in B2 n C
        for (const auto& row : q.D.h().rows) on_x_minus_b(row);  // x - b in D
    }
    return sys;
}

void validate(const Quadruple& q) {
    if (!q.C.is_cone() || !q.D.is_cone())
        throw std::invalid_argument("quadruple: C and D must be cones");
    const RatVector zero = zero_vector(q.dim());
    if (!q.B1.contains(zero) || !q.B2.contains(zero))
        throw std::invalid_argument("quadruple: B1 and B2 must contain 0");
}

// Least t >= 0 such that x decomposes as c + d with c in C, gauge(B2,c) <= t
// and d in D (conormality), or as c + w with c in C, gauge(B2,x-c) <= t
// (coadditivity; membership x in D is checked by the caller). In
// homogeneous mode, used for rays of B1, the B2 part is replaced by its
// recession cone and only feasibility matters.
std::optional<Rational> decomposition_value(const Quadruple& q, Property prop, const RatVector& x,
                                            bool homogeneous) {
    const int d = q.dim();
    HRep lp;
    lp.dim = d + 1;  // variables (c, t)
    for (const auto& row : q.C.h().rows) {
        RatVector r(row.begin(), row.end() - 1);
        r.push_back(0);
        r.push_back(row.back());  // cones have rhs 0 anyway
        lp.rows.push_back(std::move(r));
    }
    for (const auto& row : q.B2.h().rows) {
        // conormality: gauge(B2, c) <= t, i.e. a.c - b*t <= 0
        // coadditivity: gauge(B2, x - c) <= t, i.e. -a.c - b*t <= -a.x
        RatVector a(row.begin(), row.end() - 1);
        RatVector r = prop == Property::Conormality ? a : negated(a);
        r.push_back(homogeneous ? Rational(0) : -row.back());
        r.push_back(prop == Property::Conormality ? Rational(0) : -dot(a, x));
        lp.rows.push_back(std::move(r));
    }
    if (prop == Property::Conormality) {
        for (const auto& row : q.D.h().rows) {
            // a.(x - c) <= 0, i.e. -a.c <= -a.x
            RatVector a(row.begin(), row.end() - 1);
            RatVector r = negated(a);
            r.push_back(0);
            r.push_back(-dot(a, x));
            lp.rows.push_back(std::move(r));
        }
    }
    {
        RatVector r = zero_vector(d);
        r.push_back(-1);
        r.push_back(0);  // t >= 0
        lp.rows.push_back(std::move(r));
    }
    RatVector obj = zero_vector(d + 1);
    obj[static_cast<std::size_t>(d)] = 1;
    const LPOutcome out = lp_solve(obj, Sense::Minimize, lp);
    if (out.status != LPStatus::Optimal) return std::nullopt;
    return out.value;
}

}  // namespace

bool has_property(const Quadruple& q, Property prop) {
    validate(q);
    switch (prop) {
        case Property::Normality:
            return includes(q.B1, intersect(minkowski_sum(q.B2, q.C), q.D));
        case Property::Additivity:
            return includes(q.B1, minkowski_sum(intersect(q.B2, q.C), q.D));
        case Property::Conormality:
            return includes(minkowski_sum(intersect(q.B2, q.C), q.D), q.B1);
        case Property::Coadditivity:
            return includes(intersect(minkowski_sum(q.B2, q.C), q.D), q.B1);
    }
    throw std::logic_error("has_property: bad enum");
}

bool has_property_at(const Quadruple& q, Property prop, const Rational& alpha) {
    if (alpha < 0) throw std::invalid_argument("has_property_at: alpha must be >= 0");
    Quadruple s = q;
    if (prop == Property::Normality || prop == Property::Additivity)
        s.B1 = scale(q.B1, alpha);
    else
        s.B2 = scale(q.B2, alpha);
    return has_property(s, prop);
}

std::optional<Rational> optimal_constant(const Quadruple& q, Property prop) {
    validate(q);
    if (prop == Property::Normality || prop == Property::Additivity) {
        // alpha* = sup of gauge(B1, .) over the left-hand set = the largest
        // of the per-facet suprema sup a.x / c. One LP per facet of B1 over
        // the lifted system; an unbounded LP (or a positive supremum on a
        // facet with zero offset) certifies an escaping direction outside
        // rec(B1), hence an infinite constant.
        const HRep sys = lifted_lhs(q, prop);
        const int d = q.dim();
        if (!lp_feasible(sys)) return Rational(0);  // empty left-hand set
        Rational best = 0;
        for (const auto& row : q.B1.h().rows) {
            RatVector obj(row.begin(), row.end() - 1);
            obj.resize(static_cast<std::size_t>(2 * d), Rational(0));
            const LPOutcome out = lp_solve(obj, Sense::Maximize, sys);
            if (out.status != LPStatus::Optimal) return std::nullopt;
            const Rational& c = row.back();
            if (c == 0) {
                if (out.value > 0) return std::nullopt;
                continue;
            }
            if (out.value / c > best) best = out.value / c;
        }
        return best;
    }

    // Conormality / coadditivity: per-vertex decomposition LPs plus the
    // homogeneous (recession) feasibility check on rays of B1.
    Rational best = 0;
    for (const auto& v : q.B1.v().vertices) {
        if (prop == Property::Coadditivity && !q.D.contains(v)) return std::nullopt;
        const auto t = decomposition_value(q, prop, v, false);
        if (!t) return std::nullopt;
        if (*t > best) best = *t;
    }
    for (const auto& r : q.B1.v().rays) {
        if (prop == Property::Coadditivity) {
            bool in_d = true;
            for (const auto& row : q.D.h().rows)
                if (dot(RatVector(row.begin(), row.end() - 1), r) > 0) in_d = false;
            if (!in_d) return std::nullopt;
        }
        if (!decomposition_value(q, prop, r, true)) return std::nullopt;
    }
    return best;
}

Quadruple polar_quadruple(const Quadruple& q) {
    return Quadruple{one_sided_polar(q.C), one_sided_polar(q.D), one_sided_polar(q.B1),
                     one_sided_polar(q.B2)};
}

Property dual_property(Property prop) {
    switch (prop) {
        case Property::Normality:
            return Property::Conormality;
        case Property::Conormality:
            return Property::Normality;
        case Property::Additivity:
            return Property::Coadditivity;
        case Property::Coadditivity:
            return Property::Additivity;
    }
    throw std::logic_error("dual_property: bad enum");
}

bool check_duality_implication(int item, const Quadruple& q) {
    validate(q);
    if (item < 1 || item > 8) throw std::invalid_argument("check_duality_implication: item");
    const Quadruple p = polar_quadruple(q);
    const Quadruple& hyp = item <= 4 ? q : p;
    const Quadruple& con = item <= 4 ? p : q;
    static const Property props[4] = {Property::Normality, Property::Additivity,
                                      Property::Conormality, Property::Coadditivity};
    const Property hprop = props[(item - 1) % 4];
    if (!has_property(hyp, hprop)) return true;
    switch (hprop) {
        case Property::Normality:
            return has_property(con, Property::Conormality);
        case Property::Additivity:
            return has_property(con, Property::Coadditivity);
        case Property::Conormality:
            return has_property(con, Property::Normality);
        case Property::Coadditivity:
            return has_property(con, Property::Additivity);
    }
    throw std::logic_error("check_duality_implication: bad enum");
}

bool verify_constant_duality(const Quadruple& q, Property prop) {
    const auto a = optimal_constant(q, prop);
    const auto b = optimal_constant(polar_quadruple(q), dual_property(prop));
    if (!a || !b) return !a && !b;
    return *a == *b;
}

}  // namespace conedual
