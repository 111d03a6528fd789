#include "conedual/linalg.hpp"

#include <algorithm>

namespace conedual {

int rref(RatMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    m.resize(row);
    return static_cast<int>(row);
}

int rank(RatMatrix m) { return rref(m); }

RatMatrix kernel_basis(const RatMatrix& m, int dim) {
    RatMatrix a = m;
    for (auto& r : a) r.resize(static_cast<std::size_t>(dim), Rational(0));
    rref(a);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (const auto& r : a) {
        for (int c = 0; c < dim; ++c) {
            if (r[static_cast<std::size_t>(c)] != 0) {
                pivot_col.push_back(c);
                is_pivot[static_cast<std::size_t>(c)] = true;
                break;
            }
        }
    }
    RatMatrix basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RatVector v = zero_vector(dim);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < a.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = -a[i][static_cast<std::size_t>(free)];
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve_linear(RatMatrix m, RatVector rhs) {
    if (m.size() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
    if (m.empty()) return RatVector{};
    const std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    rref(m);
    RatVector x(cols, Rational(0));
    for (const auto& r : m) {
        std::size_t piv = cols + 1;
        for (std::size_t c = 0; c <= cols; ++c)
            if (r[c] != 0) {
                piv = c;
                break;
            }
        if (piv == cols) return std::nullopt;  // 0 = nonzero
        if (piv > cols) continue;
        x[piv] = r[cols];
        // Free columns are 0, so back-substitution inside RREF is just the
        // augmented entry.
    }
    return x;
}

RatVector project_onto_hyperplane(const RatVector& x, const RatVector& a) {
    const Rational aa = dot(a, a);
    if (aa == 0) throw std::invalid_argument("project_onto_hyperplane: zero normal");
    return sub(x, scaled(a, dot(a, x) / aa));
}

RatVector project_off_span(const RatVector& x, const RatMatrix& basis) {
    // Gram-Schmidt against the span, exactly.
    RatVector v = x;
    RatMatrix ortho;
    for (const auto& b : basis) {
        RatVector u = b;
        for (const auto& o : ortho) u = sub(u, scaled(o, dot(o, u) / dot(o, o)));
        if (!is_zero(u)) ortho.push_back(std::move(u));
    }
    for (const auto& o : ortho) v = sub(v, scaled(o, dot(o, v) / dot(o, o)));
    return v;
}

}  // namespace conedual
