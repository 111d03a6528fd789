#include "conedual/polar.hpp"

namespace conedual {

Polyhedron one_sided_polar(const Polyhedron& p) {
    if (p.is_empty()) return Polyhedron::full_space(p.dim());
    HRep h;
    h.dim = p.dim();
    for (const auto& v : p.v().vertices) {
        RatVector row = v;
        row.push_back(1);
        h.rows.push_back(std::move(row));
    }
    for (const auto& r : p.v().rays) {
        RatVector row = r;
        row.push_back(0);
        h.rows.push_back(std::move(row));
    }
    return Polyhedron::from_h(h);
}

Polyhedron bipolar(const Polyhedron& p) { return one_sided_polar(one_sided_polar(p)); }

Polyhedron dual_cone(const Polyhedron& c) {
    if (!c.is_cone()) throw std::invalid_argument("dual_cone: input is not a cone");
    return negate(one_sided_polar(c));
}

bool check_polar_identity(int item, const Polyhedron& a, const Polyhedron& b,
                          const Rational& lambda) {
    const auto require_zero = [](const Polyhedron& s, const char* what) {
        if (!s.contains(zero_vector(s.dim())))
            throw std::invalid_argument(std::string("check_polar_identity: ") + what +
                                        " must contain 0");
    };
    switch (item) {
        case 2:
            if (!includes(b, a)) throw std::invalid_argument("check_polar_identity: need a <= b");
            return includes(one_sided_polar(a), one_sided_polar(b));
        case 3: {
            if (lambda <= 0) throw std::invalid_argument("check_polar_identity: need lambda > 0");
            return one_sided_polar(scale(a, lambda)) ==
                   scale(one_sided_polar(a), Rational(1) / lambda);
        }
        case 4:
            return one_sided_polar(convex_hull(a, b)) ==
                   intersect(one_sided_polar(a), one_sided_polar(b));
        case 6:
            require_zero(a, "a");
            require_zero(b, "b");
            return one_sided_polar(intersect(a, b)) ==
                   convex_hull(one_sided_polar(a), one_sided_polar(b));
        case 8:
            require_zero(a, "a");
            if (!b.is_cone()) throw std::invalid_argument("check_polar_identity: b must be a cone");
            return one_sided_polar(intersect(a, b)) ==
                   minkowski_sum(one_sided_polar(a), one_sided_polar(b));
        case 9:
            require_zero(a, "a");
            if (!b.is_cone()) throw std::invalid_argument("check_polar_identity: b must be a cone");
            return one_sided_polar(minkowski_sum(a, b)) ==
                   intersect(one_sided_polar(a), one_sided_polar(b));
        default:
            throw std::invalid_argument("check_polar_identity: unknown item");
    }
}

}  // namespace conedual
