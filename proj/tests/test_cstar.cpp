#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conedual/cstar.hpp"

#include <complex>

using namespace conedual;
using cplx = std::complex<double>;

TEST_CASE("norms of known matrices") {
    CMatrix id = CMatrix::Identity(3, 3);
    CHECK(op_norm(id) == doctest::Approx(1.0));
    CHECK(trace_norm(id) == doctest::Approx(3.0));

    CMatrix nilpotent = CMatrix::Zero(2, 2);
    nilpotent(0, 1) = 2.0;
    CHECK(op_norm(nilpotent) == doctest::Approx(2.0));
    CHECK(trace_norm(nilpotent) == doctest::Approx(2.0));

    CMatrix diag = CMatrix::Zero(2, 2);
    diag(0, 0) = cplx(3, 0);
    diag(1, 1) = cplx(0, -4);
    CHECK(op_norm(diag) == doctest::Approx(4.0));
    CHECK(trace_norm(diag) == doctest::Approx(7.0));
}

TEST_CASE("hermitian and antihermitian parts") {
    CMatrix a(2, 2);
    a << cplx(1, 2), cplx(3, -1), cplx(0, 4), cplx(-2, 5);
    const CMatrix h = hermitian_part(a);
    const CMatrix k = antihermitian_part(a);
    CHECK((h - h.adjoint()).norm() == doctest::Approx(0.0));
    CHECK((k - k.adjoint()).norm() == doctest::Approx(0.0));
    CHECK((a - (h + cplx(0, 1) * k)).norm() == doctest::Approx(0.0));
}

TEST_CASE("positive-negative splitting") {
    CMatrix h(2, 2);
    h << 1, 2, 2, 1;  // eigenvalues 3 and -1
    const JordanParts jp = jordan_decompose(h);
    CHECK((h - (jp.pos - jp.neg)).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((jp.pos * jp.neg).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(jp.pos.trace().real() == doctest::Approx(3.0));
    CHECK(jp.neg.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("order-bounded norm inequalities") {
    for (int item = 1; item <= 8; ++item) {
        for (int n : {2, 3}) {
            const CheckStats st =
                check_norm_inequality_item(item, n, 500, 900 + static_cast<std::uint64_t>(item), 1e-9);
            CAPTURE(item);
            CAPTURE(n);
            CHECK(st.samples == 500);
            CHECK(st.violations == 0);
            CHECK(st.worst_margin >= -1e-9);
        }
    }
    CHECK_THROWS_AS(check_norm_inequality_item(0, 2, 1, 1, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(check_norm_inequality_item(9, 2, 1, 1, 1e-9), std::invalid_argument);
}

TEST_CASE("polar descriptions of the positive cones") {
    for (int item = 1; item <= 4; ++item) {
        for (int n : {2, 3, 4}) {
            const CheckStats st =
                check_polar_cone_item(item, n, 400, 77 + static_cast<std::uint64_t>(item), 1e-9);
            CAPTURE(item);
            CAPTURE(n);
            CHECK(st.violations == 0);
        }
    }
    CHECK_THROWS_AS(check_polar_cone_item(5, 2, 1, 1, 1e-9), std::invalid_argument);
}

TEST_CASE("Jordan decomposition of hermitian functionals") {
    for (int n : {2, 4, 6}) {
        const CheckStats st = check_jordan(n, 300, 31 + static_cast<std::uint64_t>(n), 1e-10);
        CHECK(st.violations == 0);
    }
}

TEST_CASE("trace norm as a dual norm") {
    CHECK(trace_norm_duality_gap(3, 200, 5150) <= 0.02);
    CHECK(trace_norm_duality_gap(5, 200, 5151) <= 0.02);
}
