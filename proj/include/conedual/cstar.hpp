#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace conedual {

using CMatrix = Eigen::MatrixXcd;

/// Operator norm (largest singular value).
double op_norm(const CMatrix& a);
/// Trace norm (sum of singular values); the norm of the functional
/// a |-> tr(r a).
double trace_norm(const CMatrix& r);

CMatrix hermitian_part(const CMatrix& a);
CMatrix antihermitian_part(const CMatrix& a);  // k with a = h + i k, k hermitian

/// Split a hermitian matrix into its positive and negative parts
/// (orthogonal supports): h = pos - neg with pos, neg >= 0.
struct JordanParts {
    CMatrix pos;
    CMatrix neg;
};
JordanParts jordan_decompose(const CMatrix& hermitian);

struct CheckStats {
    int samples = 0;
    int violations = 0;
    double worst_margin = 1e300;  // min over samples of (rhs - lhs) / max(1, rhs)
};

/// Sampled check of the eight norm inequalities for order-bounded elements
/// and functionals of M_n(C) (operator norm for items 1-4, trace norm for
/// items 5-8):
///   1: a in cap of (b1 + P + iH), (b2 - P + iH), (b3 + iP + H), (b4 - iP + H)
///      implies ||a|| <= max(||b1||,||b2||) + max(||b3||,||b4||)
///   2: item 1 without the subspace summands
///   3: a <= b <= c               implies ||b|| <= 2 max(||a||,||c||)
///   4: item 3 with a, b, c hermitian and bound max(||a||,||c||)
///   5-8: the functional (trace-norm) counterparts; 5/6 bound by the sum of
///      the four norms, 7: ||phi|| <= 2(||rho||+||psi||), 8 (hermitian):
///      ||phi|| <= ||rho||+||psi||
/// (P = positive cone, H = hermitian subspace.)
CheckStats check_norm_inequality_item(int item, int n, int samples, std::uint64_t seed, double rel_tol);

/// Sampled check of the one-sided polar descriptions of the positive
/// cones, via the pairing <a, r> = Re tr(r a):
///   1: polar of P      = { r : hermitian_part(r)     <= 0 }  (= -P' + iH')
///   2: polar of iP     = { r : antihermitian_part(r) >= 0 }  (=  iP' + H')
///   3: polar of P'     = { a : hermitian_part(a)     <= 0 }
///   4: polar of iP'    = { a : antihermitian_part(a) >= 0 }
/// Each sample checks the pairing inequality for members and exhibits a
/// separating witness for non-members.
CheckStats check_polar_cone_item(int item, int n, int samples, std::uint64_t seed, double rel_tol);

/// Sampled check of the Jordan decomposition law for hermitian
/// functionals: trace_norm(r) = tr(pos) + tr(neg).
CheckStats check_jordan(int n, int samples, std::uint64_t seed, double rel_tol);

/// Largest relative gap between trace_norm(r) and the sampled supremum of
/// Re tr(r a) over ||a||_op <= 1 (the SVD polar factor is always among the
/// candidates, so the gap should be tiny).
double trace_norm_duality_gap(int n, int samples, std::uint64_t seed);

}  // namespace conedual
