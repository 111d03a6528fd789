#include "conedual/polyhedron.hpp"

#include "conedual/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace conedual {

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_subset(const Mask& a, const Mask& b) {  // a subseteq b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

Mask mask_and(const Mask& a, const Mask& b) {
    Mask r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

void mask_set(Mask& m, std::size_t bit) { m[bit / 64] |= std::uint64_t(1) << (bit % 64); }

int mask_count(const Mask& m) {
    int c = 0;
    for (const auto w : m) c += std::popcount(w);
    return c;
}

void sort_dedup(RatMatrix& rows) {
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace

ConeGens cone_generators(int dim, const RatMatrix& rows) {
    // Double description with an explicit lineality basis. Rays carry the
    // bitmask of already-processed constraints they satisfy with equality;
    // masks stay exact under both update rules below.
    RatMatrix lin;
    for (int i = 0; i < dim; ++i) {
        RatVector e = zero_vector(dim);
        e[static_cast<std::size_t>(i)] = 1;
        lin.push_back(std::move(e));
    }
    RatMatrix rays;
    std::vector<Mask> zset;
    const std::size_t words = rows.size() / 64 + 1;

    for (std::size_t ci = 0; ci < rows.size(); ++ci) {
        const RatVector& a = rows[ci];
        if (is_zero(a)) {
            for (auto& m : zset) mask_set(m, ci);
            continue;
        }

        std::size_t hit = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                hit = i;
                break;
            }
        if (hit < lin.size()) {
            // Absorb one lineality vector: it becomes the unique ray on the
            // strict side, everything else is projected into a.x = 0.
            RatVector l0 = lin[hit];
            if (dot(a, l0) > 0) l0 = negated(l0);
            const Rational al0 = dot(a, l0);
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(hit));
            for (auto& l : lin) {
                const Rational d = dot(a, l);
                if (d != 0) l = primitive(sub(l, scaled(l0, d / al0)));
            }
            for (std::size_t i = 0; i < rays.size(); ++i) {
                const Rational d = dot(a, rays[i]);
                if (d != 0) rays[i] = primitive(sub(rays[i], scaled(l0, d / al0)));
                mask_set(zset[i], ci);  // projections land on the hyperplane
            }
            rays.push_back(primitive(l0));
            // Lineality vectors satisfy every constraint processed so far
            // with equality; only the current one is strict at l0.
            Mask lz(words, 0);
            for (std::size_t k = 0; k < ci; ++k) mask_set(lz, k);
            zset.push_back(std::move(lz));
            continue;
        }

        std::vector<Rational> val(rays.size());
        bool any_pos = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            if (val[i] > 0) any_pos = true;
        }
        if (!any_pos) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) mask_set(zset[i], ci);
            continue;
        }

        RatMatrix next;
        std::vector<Mask> next_z;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] > 0) continue;
            if (val[i] == 0) mask_set(zset[i], ci);
            next.push_back(rays[i]);
            next_z.push_back(zset[i]);
        }
        const int sub_dim = dim - static_cast<int>(lin.size());
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] >= 0) continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (val[n] <= 0) continue;
                const Mask common = mask_and(zset[p], zset[n]);
                // Adjacent extreme rays share at least sub_dim - 2 tight
                // constraints; cheap filter before the quadratic scan.
                if (mask_count(common) < sub_dim - 2) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == n) continue;
                    if (mask_subset(common, zset[r])) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                RatVector comb = sub(scaled(rays[p], val[n]), scaled(rays[n], val[p]));
                make_primitive(comb);
                Mask m = common;
                mask_set(m, ci);
                next.push_back(std::move(comb));
                next_z.push_back(std::move(m));
            }
        }
        rays = std::move(next);
        zset = std::move(next_z);
    }

    ConeGens g;
    rref(lin);
    for (auto& l : lin) make_primitive(l);
    std::sort(lin.begin(), lin.end(), lex_less);
    g.lin = std::move(lin);
    for (auto& r : rays) {
        RatVector pr = project_off_span(r, g.lin);
        if (is_zero(pr)) continue;
        make_primitive(pr);
        g.rays.push_back(std::move(pr));
    }
    sort_dedup(g.rays);
    return g;
}

VRep h_to_v(const HRep& h) {
    const int d = h.dim;
    RatMatrix cone_rows;
    for (const auto& row : h.rows) {
        RatVector r(row.begin(), row.end() - 1);
        r.push_back(-row.back());
        cone_rows.push_back(std::move(r));
    }
    RatVector tpos = zero_vector(d + 1);
    tpos[static_cast<std::size_t>(d)] = -1;  // -t <= 0
    cone_rows.push_back(std::move(tpos));

    const ConeGens g = cone_generators(d + 1, cone_rows);

    VRep v;
    v.dim = d;
    bool nonempty = false;
    for (const auto& r : g.rays) {
        const Rational t = r[static_cast<std::size_t>(d)];
        if (t > 0) {
            nonempty = true;
            RatVector x(r.begin(), r.end() - 1);
            for (auto& c : x) c /= t;
            v.vertices.push_back(std::move(x));
        } else {
            v.rays.push_back(primitive(RatVector(r.begin(), r.end() - 1)));
        }
    }
    if (!nonempty) return VRep{d, {}, {}};
    for (const auto& l : g.lin) {  // lineality always has t = 0
        RatVector x = primitive(RatVector(l.begin(), l.end() - 1));
        v.rays.push_back(negated(x));
        v.rays.push_back(std::move(x));
    }
    std::sort(v.vertices.begin(), v.vertices.end(), lex_less);
    sort_dedup(v.rays);
    return v;
}

HRep v_to_h(const VRep& v) {
    const int d = v.dim;
    HRep h;
    h.dim = d;
    if (v.vertices.empty()) {
        RatVector row = zero_vector(d);
        row.push_back(-1);
        h.rows.push_back(std::move(row));
        return h;
    }
    // Polar-style dual cone in R^{d+1}: (a, a0) with a.v <= a0 on vertices
    // and a.r <= 0 on rays. Its lineality gives equality pairs, its extreme
    // rays the facets.
    RatMatrix rows;
    for (const auto& vert : v.vertices) {
        RatVector r = vert;
        r.push_back(-1);
        rows.push_back(std::move(r));
    }
    for (const auto& ray : v.rays) {
        RatVector r = ray;
        r.push_back(0);
        rows.push_back(std::move(r));
    }
    const ConeGens g = cone_generators(d + 1, rows);
    for (const auto& l : g.lin) {
        h.rows.push_back(primitive(l));
        h.rows.push_back(primitive(negated(l)));
    }
    for (const auto& r : g.rays) {
        if (std::all_of(r.begin(), r.end() - 1, [](const Rational& x) { return x == 0; }))
            continue;  // 0.x <= a0 with a0 >= 0 is vacuous
        h.rows.push_back(primitive(r));
    }
    sort_dedup(h.rows);
    return h;
}

Polyhedron Polyhedron::from_h(const HRep& raw) {
    Polyhedron p;
    p.v_ = h_to_v(raw);
    p.h_ = v_to_h(p.v_);
    return p;
}

Polyhedron Polyhedron::from_v(const VRep& raw) {
    Polyhedron p;
    p.h_ = v_to_h(raw);
    p.v_ = h_to_v(p.h_);
    return p;
}

Polyhedron Polyhedron::empty_set(int dim) { return from_v(VRep{dim, {}, {}}); }

Polyhedron Polyhedron::full_space(int dim) { return from_h(HRep{dim, {}}); }

Polyhedron Polyhedron::point(const RatVector& x) {
    return from_v(VRep{static_cast<int>(x.size()), {x}, {}});
}

Polyhedron Polyhedron::cone_from_normals(int dim, const RatMatrix& normals) {
    HRep h;
    h.dim = dim;
    for (const auto& a : normals) {
        RatVector row = a;
        row.push_back(0);
        h.rows.push_back(std::move(row));
    }
    return from_h(h);
}

Polyhedron Polyhedron::cone_from_rays(int dim, const RatMatrix& rays) {
    return from_v(VRep{dim, {zero_vector(dim)}, rays});
}

bool Polyhedron::is_cone() const {
    return v_.vertices.size() == 1 && is_zero(v_.vertices[0]);
}

bool Polyhedron::contains(const RatVector& x) const {
    if (is_empty()) return false;
    for (const auto& row : h_.rows)
        if (dot(RatVector(row.begin(), row.end() - 1), x) > row.back()) return false;
    return true;
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    HRep h = p.h();
    h.rows.insert(h.rows.end(), q.h().rows.begin(), q.h().rows.end());
    return Polyhedron::from_h(h);
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    if (p.is_empty() || q.is_empty()) return Polyhedron::empty_set(p.dim());
    VRep v;
    v.dim = p.dim();
    for (const auto& a : p.v().vertices)
        for (const auto& b : q.v().vertices) v.vertices.push_back(add(a, b));
    v.rays = p.v().rays;
    v.rays.insert(v.rays.end(), q.v().rays.begin(), q.v().rays.end());
    return Polyhedron::from_v(v);
}

Polyhedron convex_hull(const Polyhedron& p, const Polyhedron& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("convex_hull: dimension mismatch");
    if (p.is_empty()) return q;
    if (q.is_empty()) return p;
    VRep v;
    v.dim = p.dim();
    v.vertices = p.v().vertices;
    v.vertices.insert(v.vertices.end(), q.v().vertices.begin(), q.v().vertices.end());
    v.rays = p.v().rays;
    v.rays.insert(v.rays.end(), q.v().rays.begin(), q.v().rays.end());
    return Polyhedron::from_v(v);
}

Polyhedron negate(const Polyhedron& p) { return scale(p, Rational(-1)); }

Polyhedron scale(const Polyhedron& p, const Rational& lambda) {
    if (p.is_empty()) return p;
    if (lambda == 0) return Polyhedron::point(zero_vector(p.dim()));
    VRep v;
    v.dim = p.dim();
    for (const auto& vert : p.v().vertices) v.vertices.push_back(scaled(vert, lambda));
    for (const auto& ray : p.v().rays)
        v.rays.push_back(lambda > 0 ? ray : negated(ray));
    return Polyhedron::from_v(v);
}

Polyhedron recession_cone(const Polyhedron& p) {
    if (p.is_empty()) return Polyhedron::point(zero_vector(p.dim()));
    HRep h;
    h.dim = p.dim();
    for (const auto& row : p.h().rows) {
        RatVector r(row.begin(), row.end() - 1);
        r.push_back(0);
        h.rows.push_back(std::move(r));
    }
    return Polyhedron::from_h(h);
}

bool includes(const Polyhedron& outer, const Polyhedron& inner) {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    for (const auto& v : inner.v().vertices)
        if (!outer.contains(v)) return false;
    for (const auto& r : inner.v().rays)
        for (const auto& row : outer.h().rows)
            if (dot(RatVector(row.begin(), row.end() - 1), r) > 0) return false;
    return true;
}

std::optional<Rational> gauge(const Polyhedron& b, const RatVector& x) {
    if (!b.contains(zero_vector(b.dim())))
        throw std::invalid_argument("gauge: body must contain 0");
    // One-variable LP: min t >= 0 with (a.x) <= c*t for every facet a.x <= c.
    Rational best = 0;
    for (const auto& row : b.h().rows) {
        const Rational ax = dot(RatVector(row.begin(), row.end() - 1), x);
        const Rational& c = row.back();
        if (c == 0) {
            if (ax > 0) return std::nullopt;
        } else if (ax / c > best) {
            best = ax / c;
        }
    }
    return best;
}

}  // namespace conedual
