#include "conedual/cstar.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace conedual {

namespace {

using Complex = std::complex<double>;

CMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    return a;
}

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
    const CMatrix a = random_matrix(n, rng);
    return (a + a.adjoint()) / 2.0;
}

CMatrix random_psd(int n, std::mt19937_64& rng) {
    const CMatrix a = random_matrix(n, rng);
    return a.adjoint() * a / static_cast<double>(n);
}

void record(CheckStats& st, double lhs, double rhs, double rel_tol) {
    const double margin = (rhs - lhs) / std::max(1.0, rhs);
    st.worst_margin = std::min(st.worst_margin, margin);
    if (margin < -rel_tol) ++st.violations;
    ++st.samples;
}

}  // namespace

double op_norm(const CMatrix& a) {
    return a.jacobiSvd().singularValues().maxCoeff();
}

double trace_norm(const CMatrix& r) {
    return r.jacobiSvd().singularValues().sum();
}

CMatrix hermitian_part(const CMatrix& a) { return (a + a.adjoint()) / 2.0; }

CMatrix antihermitian_part(const CMatrix& a) {
    return (a - a.adjoint()) / Complex(0.0, 2.0);
}

JordanParts jordan_decompose(const CMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian);
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    const int n = static_cast<int>(hermitian.rows());
    CMatrix pos = CMatrix::Zero(n, n), neg = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const CMatrix proj = vecs.col(k) * vecs.col(k).adjoint();
        if (vals(k) >= 0)
            pos += vals(k) * proj;
        else
            neg -= vals(k) * proj;
    }
    return {pos, neg};
}

CheckStats check_norm_inequality_item(int item, int n, int samples, std::uint64_t seed, double rel_tol) {
    if (item < 1 || item > 8) throw std::invalid_argument("check_norm_inequality_item: item in 1..8");
    std::mt19937_64 rng(seed);
    CheckStats st;
    const bool functional = item >= 5;
    const auto norm = [&](const CMatrix& x) { return functional ? trace_norm(x) : op_norm(x); };
    const Complex I(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        switch ((item - 1) % 4 + 1) {
            case 1:    // membership with the hermitian-subspace slack
            case 2: {  // plain cone membership
                const bool slack = (item - 1) % 4 + 1 == 1;
                const CMatrix a = random_matrix(n, rng);
                const auto shift = [&](int sign_re, bool imag_cone) {
                    CMatrix b = a;
                    const CMatrix p = random_psd(n, rng);
                    b -= static_cast<double>(sign_re) * (imag_cone ? CMatrix(I * p) : p);
                    if (slack) {
                        const CMatrix h = random_hermitian(n, rng);
                        b -= imag_cone ? h : CMatrix(I * h);
                    }
                    return b;
                };
                const CMatrix b1 = shift(+1, false), b2 = shift(-1, false);
                const CMatrix b3 = shift(+1, true), b4 = shift(-1, true);
                record(st, norm(a),
                       functional ? norm(b1) + norm(b2) + norm(b3) + norm(b4)
                                  : std::max(norm(b1), norm(b2)) + std::max(norm(b3), norm(b4)),
                       rel_tol);
                break;
            }
            case 3:
            case 4: {  // order-bounded: lower <= mid <= upper
                const bool sa = (item - 1) % 4 + 1 == 4;
                const CMatrix mid = sa ? random_hermitian(n, rng) : random_matrix(n, rng);
                const CMatrix lower = mid - random_psd(n, rng);
                const CMatrix upper = mid + random_psd(n, rng);
                double rhs;
                if (functional)
                    rhs = (sa ? 1.0 : 2.0) * (norm(lower) + norm(upper));
                else
                    rhs = (sa ? 1.0 : 2.0) * std::max(norm(lower), norm(upper));
                record(st, norm(mid), rhs, rel_tol);
                break;
            }
        }
    }
    return st;
}

CheckStats check_polar_cone_item(int item, int n, int samples, std::uint64_t seed, double rel_tol) {
    if (item < 1 || item > 4) throw std::invalid_argument("check_polar_cone_item: item in 1..4");
    std::mt19937_64 rng(seed);
    CheckStats st;
    const Complex I(0.0, 1.0);
    // Items 3 and 4 swap the roles of element and functional, but under the
    // pairing Re tr(r a) both sides are matrices and the computation is
    // symmetric; the sign of the relevant part is what changes per item.
    for (int s = 0; s < samples; ++s) {
        const bool member = s % 2 == 0;
        CMatrix r;
        if (member) {
            // items 1, 3: -psd + i*herm;  items 2, 4: herm + i*psd
            if (item == 1 || item == 3)
                r = -random_psd(n, rng) + I * random_hermitian(n, rng);
            else
                r = random_hermitian(n, rng) + I * random_psd(n, rng);
        } else {
            r = random_matrix(n, rng);
        }
        const CMatrix part =
            (item == 1 || item == 3) ? CMatrix(hermitian_part(r)) : CMatrix(-antihermitian_part(r));
        Eigen::SelfAdjointEigenSolver<CMatrix> es(part);
        const double lam_max = es.eigenvalues().maxCoeff();
        if (lam_max <= 0) {
            // Claimed member: the pairing must be <= 0 on random cone points.
            double worst = 0;
            for (int k = 0; k < 8; ++k) {
                const CMatrix p = random_psd(n, rng);
                const CMatrix y = (item == 1 || item == 3) ? p : CMatrix(I * p);
                worst = std::max(worst, (y * r).trace().real());
            }
            record(st, worst, 0.0, rel_tol);
        } else {
            // Not in the polar: the top eigenvector projector is a witness.
            const int top = static_cast<int>(es.eigenvalues().size()) - 1;
            const CMatrix proj = es.eigenvectors().col(top) * es.eigenvectors().col(top).adjoint();
            const CMatrix y = (item == 1 || item == 3) ? proj : CMatrix(I * proj);
            // The witness pairs to exactly lam_max > 0.
            record(st, std::abs((y * r).trace().real() - lam_max), 0.0, rel_tol);
        }
    }
    return st;
}

CheckStats check_jordan(int n, int samples, std::uint64_t seed, double rel_tol) {
    std::mt19937_64 rng(seed);
    CheckStats st;
    for (int s = 0; s < samples; ++s) {
        const CMatrix r = random_hermitian(n, rng);
        const JordanParts jp = jordan_decompose(r);
        const double recombined = (jp.pos - jp.neg - r).norm();
        const double lhs = trace_norm(r);
        const double rhs = jp.pos.trace().real() + jp.neg.trace().real();
        record(st, lhs, rhs, rel_tol);
        record(st, rhs, lhs, rel_tol);
        record(st, recombined, 0.0, rel_tol);
    }
    return st;
}

double trace_norm_duality_gap(int n, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        const CMatrix r = random_matrix(n, rng);
        const double tn = trace_norm(r);
        Eigen::JacobiSVD<CMatrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
        double best = (svd.matrixV() * svd.matrixU().adjoint() * r).trace().real();
        for (int k = 0; k < 32; ++k) {
            CMatrix a = random_matrix(n, rng);
            a /= op_norm(a);
            best = std::max(best, (a * r).trace().real());
        }
        worst = std::max(worst, std::abs(tn - best) / std::max(1.0, tn));
    }
    return worst;
}

}  // namespace conedual
