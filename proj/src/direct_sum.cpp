#include "conedual/direct_sum.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace conedual {

namespace {

// Row in R^{m*d} with `a` placed in block omega.
RatVector embed_row(int d, int m, int omega, const RatVector& a, const Rational& rhs) {
    RatVector row = zero_vector(d * m);
    for (int k = 0; k < d; ++k) row[static_cast<std::size_t>(omega * d + k)] = a[static_cast<std::size_t>(k)];
    row.push_back(rhs);
    return row;
}

// Row applying `a` to the block sum.
RatVector sum_row(int d, int m, const RatVector& a, const Rational& rhs) {
    RatVector row;
    for (int omega = 0; omega < m; ++omega) row.insert(row.end(), a.begin(), a.end());
    row.push_back(rhs);
    return row;
}

}  // namespace

void validate_instance(const DirectSumInstance& inst) {
    if (inst.d < 1 || inst.m < 1) throw std::invalid_argument("direct sum: need d, m >= 1");
    if (static_cast<int>(inst.cones.size()) != inst.m)
        throw std::invalid_argument("direct sum: need one cone per index");
    if (inst.base_ball.dim() != inst.d) throw std::invalid_argument("direct sum: base ball dim");
    if (!inst.base_ball.v().rays.empty())
        throw std::invalid_argument("direct sum: base ball must be bounded");
    for (const auto& row : inst.base_ball.h().rows)
        if (row.back() <= 0)
            throw std::invalid_argument("direct sum: base ball must contain 0 in its interior");
    for (const auto& c : inst.cones) {
        if (c.dim() != inst.d) throw std::invalid_argument("direct sum: cone dim");
        if (!c.is_cone()) throw std::invalid_argument("direct sum: cones must be cones");
    }
}

SumSets build_sets(const DirectSumInstance& inst) {
    validate_instance(inst);
    const int d = inst.d, m = inst.m, n = inst.ambient();
    SumSets s;

    HRep h;
    h.dim = n;
    for (int omega = 0; omega < m; ++omega)
        for (const auto& row : inst.cones[static_cast<std::size_t>(omega)].h().rows)
            h.rows.push_back(embed_row(d, m, omega, RatVector(row.begin(), row.end() - 1), 0));
    s.oplus_c = Polyhedron::from_h(h);

    h.rows.clear();
    for (int k = 0; k < d; ++k) {
        RatVector ek = zero_vector(d);
        ek[static_cast<std::size_t>(k)] = 1;
        h.rows.push_back(sum_row(d, m, ek, 0));
        h.rows.push_back(sum_row(d, m, negated(ek), 0));
    }
    s.s0 = Polyhedron::from_h(h);

    h.rows.clear();
    for (const auto& row : inst.base_ball.h().rows)
        h.rows.push_back(sum_row(d, m, RatVector(row.begin(), row.end() - 1), row.back()));
    s.s1 = Polyhedron::from_h(h);

    h.rows.clear();
    for (int omega = 1; omega < m; ++omega) {
        for (int k = 0; k < d; ++k) {
            RatVector row = zero_vector(n);
            row[static_cast<std::size_t>(k)] = 1;
            row[static_cast<std::size_t>(omega * d + k)] = -1;
            for (int sgn = 0; sgn < 2; ++sgn) {
                RatVector r = sgn ? negated(row) : row;
                r.push_back(0);
                h.rows.push_back(std::move(r));
            }
        }
    }
    s.k_inf = Polyhedron::from_h(h);

    for (const auto& row : inst.base_ball.h().rows)
        h.rows.push_back(embed_row(d, m, 0, RatVector(row.begin(), row.end() - 1), row.back()));
    s.k1 = Polyhedron::from_h(h);

    if (inst.p == PNorm::Infinity) {
        h.rows.clear();
        for (int omega = 0; omega < m; ++omega)
            for (const auto& row : inst.base_ball.h().rows)
                h.rows.push_back(
                    embed_row(d, m, omega, RatVector(row.begin(), row.end() - 1), row.back()));
        s.ball = Polyhedron::from_h(h);
    } else {
        // l_1 ball: hull of the blockwise embeddings of the base vertices.
        VRep v;
        v.dim = n;
        for (int omega = 0; omega < m; ++omega)
            for (const auto& vert : inst.base_ball.v().vertices)
                v.vertices.push_back(embed_delta(inst, omega, vert));
        s.ball = Polyhedron::from_v(v);
    }
    return s;
}

RatVector embed_delta(const DirectSumInstance& inst, int omega, const RatVector& x) {
    RatVector xi = zero_vector(inst.ambient());
    for (int k = 0; k < inst.d; ++k)
        xi[static_cast<std::size_t>(omega * inst.d + k)] = x[static_cast<std::size_t>(k)];
    return xi;
}

RatVector embed_const(const DirectSumInstance& inst, const RatVector& x) {
    RatVector xi;
    for (int omega = 0; omega < inst.m; ++omega) xi.insert(xi.end(), x.begin(), x.end());
    return xi;
}

RatVector block(const DirectSumInstance& inst, const RatVector& xi, int omega) {
    return RatVector(xi.begin() + omega * inst.d, xi.begin() + (omega + 1) * inst.d);
}

RatVector sigma_sum(const DirectSumInstance& inst, const RatVector& xi) {
    RatVector s = zero_vector(inst.d);
    for (int omega = 0; omega < inst.m; ++omega) s = add(s, block(inst, xi, omega));
    return s;
}

DirectSumInstance dual_instance(const DirectSumInstance& inst) {
    DirectSumInstance dual;
    dual.d = inst.d;
    dual.m = inst.m;
    dual.p = conjugate(inst.p);
    dual.base_ball = one_sided_polar(inst.base_ball);
    for (const auto& c : inst.cones) dual.cones.push_back(one_sided_polar(c));
    return dual;
}

bool check_sum_polars(const DirectSumInstance& inst) {
    const SumSets a = build_sets(inst);
    const SumSets b = build_sets(dual_instance(inst));
    return one_sided_polar(a.oplus_c) == b.oplus_c && one_sided_polar(a.k_inf) == b.s0 &&
           one_sided_polar(a.k1) == b.s1 && one_sided_polar(a.s1) == b.k1 &&
           one_sided_polar(a.s0) == b.k_inf && one_sided_polar(a.ball) == b.ball;
}

Quadruple property_quadruple(const DirectSumInstance& inst, Property prop) {
    const SumSets s = build_sets(inst);
    switch (prop) {
        case Property::Normality:
            return Quadruple{s.oplus_c, s.k_inf, s.k1, s.ball};
        case Property::Conormality:
            return Quadruple{s.oplus_c, s.s0, s.s1, s.ball};
        case Property::Additivity:
            return Quadruple{s.oplus_c, Polyhedron::point(zero_vector(inst.ambient())), s.ball,
                             s.s1};
        case Property::Coadditivity:
            return Quadruple{s.oplus_c, Polyhedron::full_space(inst.ambient()), s.ball, s.k1};
    }
    throw std::logic_error("property_quadruple: bad enum");
}

std::optional<Rational> sum_constant(const DirectSumInstance& inst, Property prop) {
    return optimal_constant(property_quadruple(inst, prop), prop);
}

bool verify_normality_duality(const DirectSumInstance& inst) {
    const DirectSumInstance dual = dual_instance(inst);
    const auto eq = [](const std::optional<Rational>& a, const std::optional<Rational>& b) {
        return a && b ? *a == *b : !a && !b;
    };
    return eq(sum_constant(inst, Property::Normality), sum_constant(dual, Property::Conormality)) &&
           eq(sum_constant(inst, Property::Conormality), sum_constant(dual, Property::Normality));
}

bool verify_additivity_duality(const DirectSumInstance& inst) {
    const DirectSumInstance dual = dual_instance(inst);
    const auto eq = [](const std::optional<Rational>& a, const std::optional<Rational>& b) {
        return a && b ? *a == *b : !a && !b;
    };
    return eq(sum_constant(inst, Property::Additivity),
              sum_constant(dual, Property::Coadditivity)) &&
           eq(sum_constant(inst, Property::Coadditivity),
              sum_constant(dual, Property::Additivity));
}

std::optional<AndoResult> ando_decompose(const DirectSumInstance& inst, const RatVector& x) {
    validate_instance(inst);
    if (static_cast<int>(x.size()) != inst.d)
        throw std::invalid_argument("ando_decompose: x has wrong dimension");
    const int d = inst.d, m = inst.m, n = inst.ambient();
    const int nt = inst.p == PNorm::One ? m : 1;  // one bound per block or a shared one
    HRep lp;
    lp.dim = n + nt;
    const auto pad = [&](RatVector row, const Rational& rhs) {
        row.resize(static_cast<std::size_t>(lp.dim), Rational(0));
        row.push_back(rhs);
        return row;
    };
    for (int omega = 0; omega < m; ++omega) {
        const int t_idx = n + (inst.p == PNorm::One ? omega : 0);
        for (const auto& row : inst.cones[static_cast<std::size_t>(omega)].h().rows) {
            RatVector r = embed_row(d, m, omega, RatVector(row.begin(), row.end() - 1), 0);
            r.pop_back();
            lp.rows.push_back(pad(std::move(r), 0));
        }
        for (const auto& row : inst.base_ball.h().rows) {
            // gauge(base, xi_omega) <= t: a.xi_omega - b*t <= 0
            RatVector r = embed_row(d, m, omega, RatVector(row.begin(), row.end() - 1), 0);
            r.pop_back();
            r.resize(static_cast<std::size_t>(lp.dim), Rational(0));
            r[static_cast<std::size_t>(t_idx)] = -row.back();
            r.push_back(0);
            lp.rows.push_back(std::move(r));
        }
    }
    for (int k = 0; k < d; ++k) {
        RatVector ek = zero_vector(d);
        ek[static_cast<std::size_t>(k)] = 1;
        RatVector row = sum_row(d, m, ek, 0);
        row.pop_back();
        lp.rows.push_back(pad(row, x[static_cast<std::size_t>(k)]));
        for (auto& c : row) c = -c;
        lp.rows.push_back(pad(std::move(row), -x[static_cast<std::size_t>(k)]));
    }
    for (int j = 0; j < nt; ++j) {
        RatVector row = zero_vector(n + j);
        row.push_back(-1);
        lp.rows.push_back(pad(std::move(row), 0));
    }
    RatVector obj = zero_vector(lp.dim);
    for (int j = 0; j < nt; ++j) obj[static_cast<std::size_t>(n + j)] = 1;
    const LPOutcome out = lp_solve(obj, Sense::Minimize, lp);
    if (out.status != LPStatus::Optimal) return std::nullopt;
    AndoResult res;
    res.value = out.value;
    for (int omega = 0; omega < m; ++omega)
        res.parts.push_back(
            RatVector(out.point.begin() + omega * d, out.point.begin() + (omega + 1) * d));
    return res;
}

std::optional<Rational> ando_bound(const DirectSumInstance& inst) {
    validate_instance(inst);
    Rational best = 0;
    for (const auto& v : inst.base_ball.v().vertices) {
        const auto r = ando_decompose(inst, v);
        if (!r) return std::nullopt;
        if (r->value > best) best = r->value;
    }
    return best;
}

namespace {

double gauge_double(const Polyhedron& ball, const std::vector<double>& x) {
    double best = 0;
    for (const auto& row : ball.h().rows) {
        double ax = 0;
        for (std::size_t k = 0; k + 1 < row.size(); ++k)
            ax += static_cast<double>(row[k]) * x[k];
        best = std::max(best, ax / static_cast<double>(row.back()));
    }
    return best;
}

double lp_norm(const DirectSumInstance& inst, const std::vector<double>& xi, double p) {
    double acc = 0;
    for (int omega = 0; omega < inst.m; ++omega) {
        std::vector<double> b(xi.begin() + omega * inst.d, xi.begin() + (omega + 1) * inst.d);
        acc += std::pow(gauge_double(inst.base_ball, b), p);
    }
    return std::pow(acc, 1.0 / p);
}

// Random point of the cone: nonnegative combination of its extreme rays.
std::vector<double> sample_cone(const Polyhedron& cone, std::mt19937_64& rng) {
    std::vector<double> x(static_cast<std::size_t>(cone.dim()), 0.0);
    std::uniform_real_distribution<double> coef(0.0, 1.0);
    for (const auto& r : cone.v().rays) {
        const double lam = coef(rng);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += lam * static_cast<double>(r[k]);
    }
    return x;
}

std::vector<double> sample_ball(const Polyhedron& ball, std::mt19937_64& rng) {
    // Random convex combination of the vertices.
    std::vector<double> x(static_cast<std::size_t>(ball.dim()), 0.0);
    std::uniform_real_distribution<double> coef(0.0, 1.0);
    double total = 0;
    std::vector<double> w;
    for (std::size_t i = 0; i < ball.v().vertices.size(); ++i) {
        w.push_back(coef(rng));
        total += w.back();
    }
    for (std::size_t i = 0; i < ball.v().vertices.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k)
            x[k] += w[i] / total * static_cast<double>(ball.v().vertices[i][k]);
    return x;
}

double to_double_or_inf(const std::optional<Rational>& r) {
    return r ? static_cast<double>(*r) : std::numeric_limits<double>::infinity();
}

}  // namespace

SampledReport sampled_constant(const DirectSumInstance& inst, double p, Property prop,
                               std::uint64_t seed, int samples) {
    validate_instance(inst);
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("sampled_constant: need 1 < p < infinity");
    if (prop != Property::Normality && prop != Property::Additivity)
        throw std::invalid_argument(
            "sampled_constant: only the normality and additivity families are sampled");

    DirectSumInstance one = inst, infty = inst;
    one.p = PNorm::One;
    infty.p = PNorm::Infinity;
    const double a1 = to_double_or_inf(sum_constant(one, prop));
    const double ainf = to_double_or_inf(sum_constant(infty, prop));
    const double theta = 1.0 / p;

    SampledReport rep;
    rep.samples = samples;
    rep.bound = (std::isinf(a1) || std::isinf(ainf))
                    ? std::numeric_limits<double>::infinity()
                    : std::pow(a1, theta) * std::pow(ainf, 1.0 - theta);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        if (prop == Property::Normality) {
            // Feasible point of (ball_p + oplus_c) n k_inf: pick y_omega in
            // the cones and z, set xi = const z - y, then rescale xi into
            // the l_p ball. The point const z then forces alpha >=
            // gauge(k1, const z) = ||z||.
            std::vector<double> z(static_cast<std::size_t>(inst.d));
            for (auto& c : z) c = unit(rng);
            std::vector<double> xi(static_cast<std::size_t>(inst.ambient()));
            for (int omega = 0; omega < inst.m; ++omega) {
                const auto y = sample_cone(inst.cones[static_cast<std::size_t>(omega)], rng);
                for (int k = 0; k < inst.d; ++k)
                    xi[static_cast<std::size_t>(omega * inst.d + k)] =
                        z[static_cast<std::size_t>(k)] - y[static_cast<std::size_t>(k)];
            }
            const double lam = 1.0 / std::max(1.0, lp_norm(inst, xi, p));
            std::vector<double> zl = z;
            for (auto& c : zl) c *= lam;
            rep.max_observed = std::max(rep.max_observed, gauge_double(inst.base_ball, zl));
        } else {
            // Feasible point of s1 n oplus_c: blockwise cone samples scaled
            // so the block sum lands in the base ball; it forces alpha >=
            // its own l_p norm.
            std::vector<double> xi(static_cast<std::size_t>(inst.ambient()));
            for (int omega = 0; omega < inst.m; ++omega) {
                const auto y = sample_cone(inst.cones[static_cast<std::size_t>(omega)], rng);
                for (int k = 0; k < inst.d; ++k)
                    xi[static_cast<std::size_t>(omega * inst.d + k)] = y[static_cast<std::size_t>(k)];
            }
            std::vector<double> s(static_cast<std::size_t>(inst.d), 0.0);
            for (int omega = 0; omega < inst.m; ++omega)
                for (int k = 0; k < inst.d; ++k)
                    s[static_cast<std::size_t>(k)] += xi[static_cast<std::size_t>(omega * inst.d + k)];
            const double lam = 1.0 / std::max(1.0, gauge_double(inst.base_ball, s));
            for (auto& c : xi) c *= lam;
            rep.max_observed = std::max(rep.max_observed, lp_norm(inst, xi, p));
        }
    }
    return rep;
}

}  // namespace conedual
