#include "conedual/lp.hpp"

#include <cassert>

namespace conedual {

namespace {

// Dictionary simplex over exact rationals.
//
// Internal standard form: variables z >= 0 laid out as
//   u (dim) | v (dim) | slack (n) | artificial (as needed),
// with x = u - v and one equality  sigma_i * (A_i x + s_i) = sigma_i b_i
// per input row, where sigma_i = -1 iff b_i < 0 so that all right-hand
// sides start nonnegative.
struct Tableau {
    int dim;
    std::size_t n;          // original rows
    std::size_t ncols;      // total structural columns
    std::size_t art_begin;  // first artificial column
    RatMatrix t;            // n rows, ncols + 1 entries (last = rhs)
    RatVector obj;          // ncols + 1 entries (last = -objective value)
    std::vector<std::size_t> basis;
    std::vector<std::size_t> row_of;  // original row index for each tableau row
    std::vector<int> sigma;           // per original row

    std::size_t u_col(int k) const { return static_cast<std::size_t>(k); }
    std::size_t v_col(int k) const { return static_cast<std::size_t>(dim + k); }
    std::size_t s_col(std::size_t i) const { return static_cast<std::size_t>(2 * dim) + i; }
};

void price_out(Tableau& tb, const RatVector& cost) {
    tb.obj.assign(tb.ncols + 1, Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) tb.obj[j] = cost[j];
    for (std::size_t r = 0; r < tb.t.size(); ++r) {
        const Rational cb = tb.basis[r] < cost.size() ? cost[tb.basis[r]] : Rational(0);
        if (cb == 0) continue;
        for (std::size_t j = 0; j <= tb.ncols; ++j) tb.obj[j] -= cb * tb.t[r][j];
    }
}

void pivot(Tableau& tb, std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / tb.t[row][col];
    for (auto& x : tb.t[row]) x *= inv;
    for (std::size_t r = 0; r < tb.t.size(); ++r) {
        if (r == row || tb.t[r][col] == 0) continue;
        const Rational f = tb.t[r][col];
        for (std::size_t j = 0; j <= tb.ncols; ++j) tb.t[r][j] -= f * tb.t[row][j];
    }
    if (tb.obj[col] != 0) {
        const Rational f = tb.obj[col];
        for (std::size_t j = 0; j <= tb.ncols; ++j) tb.obj[j] -= f * tb.t[row][j];
    }
    tb.basis[row] = col;
}

// Minimizes the priced-out objective with Bland's rule. Returns the
// entering column on unboundedness, or nullopt at optimality.
// `max_col` bounds the columns allowed to enter (excludes artificials in
// phase 2).
std::optional<std::size_t> run_simplex(Tableau& tb, std::size_t max_col) {
    for (;;) {
        std::size_t enter = max_col;
        for (std::size_t j = 0; j < max_col; ++j) {
            if (tb.obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == max_col) return std::nullopt;
        std::size_t leave = tb.t.size();
        Rational best;
        for (std::size_t r = 0; r < tb.t.size(); ++r) {
            if (tb.t[r][enter] <= 0) continue;
            const Rational ratio = tb.t[r][tb.ncols] / tb.t[r][enter];
            if (leave == tb.t.size() || ratio < best ||
                (ratio == best && tb.basis[r] < tb.basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == tb.t.size()) return enter;  // unbounded direction
        pivot(tb, leave, enter);
    }
}

RatVector current_point(const Tableau& tb) {
    RatVector x = zero_vector(tb.dim);
    for (std::size_t r = 0; r < tb.t.size(); ++r) {
        const std::size_t b = tb.basis[r];
        if (b < static_cast<std::size_t>(tb.dim))
            x[b] += tb.t[r][tb.ncols];
        else if (b < static_cast<std::size_t>(2 * tb.dim))
            x[b - static_cast<std::size_t>(tb.dim)] -= tb.t[r][tb.ncols];
    }
    return x;
}

RatVector ray_from_column(const Tableau& tb, std::size_t enter) {
    RatVector d = zero_vector(tb.dim);
    if (enter < static_cast<std::size_t>(tb.dim))
        d[enter] += 1;
    else if (enter < static_cast<std::size_t>(2 * tb.dim))
        d[enter - static_cast<std::size_t>(tb.dim)] -= 1;
    for (std::size_t r = 0; r < tb.t.size(); ++r) {
        const std::size_t b = tb.basis[r];
        if (b < static_cast<std::size_t>(tb.dim))
            d[b] -= tb.t[r][enter];
        else if (b < static_cast<std::size_t>(2 * tb.dim))
            d[b - static_cast<std::size_t>(tb.dim)] += tb.t[r][enter];
    }
    return d;
}

// Row multipliers read off the slack columns of the objective row. For
// both phases and both senses these come out >= 0 at optimality; see the
// identities asserted in the test suite.
RatVector slack_duals(const Tableau& tb) {
    RatVector y(tb.n, Rational(0));
    for (std::size_t i = 0; i < tb.n; ++i) y[i] = tb.obj[tb.s_col(i)];
    return y;
}

}  // namespace

LPOutcome lp_solve(const RatVector& objective, Sense sense, const HRep& h) {
    const int dim = h.dim;
    if (static_cast<int>(objective.size()) != dim)
        throw std::invalid_argument("lp_solve: objective dimension mismatch");
    for (const auto& r : h.rows)
        if (static_cast<int>(r.size()) != dim + 1)
            throw std::invalid_argument("lp_solve: row size mismatch");

    Tableau tb;
    tb.dim = dim;
    tb.n = h.rows.size();
    std::size_t n_art = 0;
    for (const auto& r : h.rows)
        if (r.back() < 0) ++n_art;
    tb.art_begin = static_cast<std::size_t>(2 * dim) + tb.n;
    tb.ncols = tb.art_begin + n_art;
    tb.sigma.assign(tb.n, 1);

    std::size_t art = tb.art_begin;
    for (std::size_t i = 0; i < tb.n; ++i) {
        RatVector row(tb.ncols + 1, Rational(0));
        const int sg = h.rows[i].back() < 0 ? -1 : 1;
        tb.sigma[i] = sg;
        for (int k = 0; k < dim; ++k) {
            row[tb.u_col(k)] = sg * h.rows[i][static_cast<std::size_t>(k)];
            row[tb.v_col(k)] = -sg * h.rows[i][static_cast<std::size_t>(k)];
        }
        row[tb.s_col(i)] = sg;
        row[tb.ncols] = sg * h.rows[i].back();
        if (sg < 0) {
            row[art] = 1;
            tb.basis.push_back(art++);
        } else {
            tb.basis.push_back(tb.s_col(i));
        }
        tb.t.push_back(std::move(row));
        tb.row_of.push_back(i);
    }

    LPOutcome out;

    if (n_art > 0) {
        RatVector phase1(tb.ncols, Rational(0));
        for (std::size_t j = tb.art_begin; j < tb.ncols; ++j) phase1[j] = 1;
        price_out(tb, phase1);
        auto unb = run_simplex(tb, tb.ncols);
        assert(!unb);
        (void)unb;
        if (-tb.obj[tb.ncols] > 0) {
            out.status = LPStatus::Infeasible;
            out.dual = slack_duals(tb);
            return out;
        }
        // Drive any remaining (value-0) artificials out of the basis; a row
        // with no eligible pivot is linearly dependent and gets dropped.
        for (std::size_t r = 0; r < tb.t.size();) {
            if (tb.basis[r] < tb.art_begin) {
                ++r;
                continue;
            }
            std::size_t col = tb.art_begin;
            for (std::size_t j = 0; j < tb.art_begin; ++j)
                if (tb.t[r][j] != 0) {
                    col = j;
                    break;
                }
            if (col < tb.art_begin) {
                pivot(tb, r, col);
                ++r;
            } else {
                tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(r));
                tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(r));
                tb.row_of.erase(tb.row_of.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
    }

    RatVector phase2(tb.ncols, Rational(0));
    for (int k = 0; k < dim; ++k) {
        const Rational c = sense == Sense::Minimize ? objective[static_cast<std::size_t>(k)]
                                                    : -objective[static_cast<std::size_t>(k)];
        phase2[tb.u_col(k)] = c;
        phase2[tb.v_col(k)] = -c;
    }
    price_out(tb, phase2);
    auto unb = run_simplex(tb, tb.art_begin);
    if (unb) {
        out.status = LPStatus::Unbounded;
        out.point = current_point(tb);
        out.ray = ray_from_column(tb, *unb);
        return out;
    }
    out.status = LPStatus::Optimal;
    const Rational internal = -tb.obj[tb.ncols];
    out.value = sense == Sense::Minimize ? internal : -internal;
    out.point = current_point(tb);
    out.dual = slack_duals(tb);
    return out;
}

bool lp_feasible(const HRep& h) {
    return lp_solve(zero_vector(h.dim), Sense::Minimize, h).status == LPStatus::Optimal;
}

}  // namespace conedual
