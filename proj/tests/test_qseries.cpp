#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "modatlas/errors.hpp"
#include "modatlas/qseries.hpp"

using namespace modatlas;

TEST_CASE("divisor sums") {
    CHECK(divisor_sum(1, 1) == 1);
    CHECK(divisor_sum(1, 6) == 12);
    CHECK(divisor_sum(1, 12) == 28);
    CHECK(divisor_sum(3, 2) == 9);
    CHECK(divisor_sum(3, 3) == 28);
    CHECK(divisor_sum(3, 4) == 73);
    CHECK(divisor_sum(5, 2) == 33);
    CHECK(divisor_sum(5, 4) == 1057);
    CHECK_THROWS_AS(divisor_sum(1, 0), InvalidInput);
}

TEST_CASE("leading coefficients of the named series") {
    QSeries e4 = named_series(Form::E4, 1);
    REQUIRE(e4.coeff.size() == 2);
    CHECK(e4.coeff[0] == 1.0);
    CHECK(e4.coeff[1] == 240.0);

    QSeries e2 = named_series(Form::E2, 2);
    REQUIRE(e2.coeff.size() == 3);
    CHECK(e2.coeff[0] == 1.0);
    CHECK(e2.coeff[1] == -24.0);
    CHECK(e2.coeff[2] == -72.0);

    QSeries e6 = named_series(Form::E6, 3);
    CHECK(e6.at(0) == 1.0);
    CHECK(e6.at(1) == -504.0);
    CHECK(e6.at(2) == -504.0 * 33.0);

    CHECK_THROWS_AS(named_series(Form::E4, 513), InsufficientTruncation);
}

TEST_CASE("product expansion of the discriminant") {
    // Frozen values of the coefficients tau(n).
    QSeries del = named_series(Form::Delta, 8);
    CHECK(del.lowest == 1);
    CHECK(del.at(1) == 1.0);
    CHECK(del.at(2) == -24.0);
    CHECK(del.at(3) == 252.0);
    CHECK(del.at(4) == -1472.0);
    CHECK(del.at(5) == 4830.0);
    CHECK(del.at(6) == -6048.0);
    CHECK(del.at(7) == -16744.0);
    CHECK(del.at(8) == 84480.0);

    // Independent route: (E4^3 - E6^2) / 1728 coefficient by coefficient.
    int order = 24;
    QSeries e4 = named_series(Form::E4, order);
    QSeries e6 = named_series(Form::E6, order);
    QSeries alt = scale(sub(mul(mul(e4, e4), e4), mul(e6, e6)), 1.0 / 1728.0);
    QSeries ref = named_series(Form::Delta, order);
    for (int n = 0; n <= order; ++n) CHECK(alt.at(n) == ref.at(n));
}

TEST_CASE("coefficient derivative operator") {
    QSeries e2 = named_series(Form::E2, 5);
    QSeries de2 = d_operator(e2);
    CHECK(de2.at(0) == 0.0);
    CHECK(de2.at(1) == -24.0);
    CHECK(de2.at(2) == -144.0);
    CHECK(de2.at(3) == -3.0 * 24.0 * 4.0);
}

TEST_CASE("series-level differential identities, exact through order 32") {
    int order = 32;
    QSeries e2 = named_series(Form::E2, order);
    QSeries e4 = named_series(Form::E4, order);
    QSeries e6 = named_series(Form::E6, order);
    QSeries del = named_series(Form::Delta, order);

    QSeries lhs = scale(d_operator(e2), 12.0);
    QSeries rhs = sub(mul(e2, e2), e4);
    for (int n = 0; n <= order; ++n) CHECK(lhs.at(n) == rhs.at(n));

    lhs = scale(d_operator(e4), 3.0);
    rhs = sub(mul(e2, e4), e6);
    for (int n = 0; n <= order; ++n) CHECK(lhs.at(n) == rhs.at(n));

    lhs = scale(d_operator(e6), 2.0);
    rhs = sub(mul(e2, e6), mul(e4, e4));
    for (int n = 0; n <= order; ++n) CHECK(lhs.at(n) == rhs.at(n));

    lhs = d_operator(del);
    rhs = mul(e2, del);
    for (int n = 0; n <= order; ++n) CHECK(lhs.at(n) == rhs.at(n));
}

TEST_CASE("direct summation with tail control") {
    QSeries e4 = named_series(Form::E4, 64);
    cplx tau{0.1, 1.3};
    SeriesValue v = eval_series(e4, tau, 1e-12);
    // Brute-force oracle.
    cplx q = std::exp(2.0 * kPi * kI * tau);
    cplx ref = 0.0;
    for (int n = 64; n >= 1; --n) ref = (ref + 240.0 * double(divisor_sum(3, n))) * q;
    ref += 1.0;
    CHECK(std::abs(v.value - ref) < 1e-13 * std::abs(ref));
    CHECK(v.tail_estimate < 1e-12);
    CHECK(v.tail_estimate > 0.0);

    CHECK_THROWS_AS(eval_series(e4, cplx(0.0, 0.2), 1e-12), InsufficientTruncation);
    CHECK_THROWS_AS(eval_series(named_series(Form::E4, 2), cplx(0.0, 0.5), 1e-12),
                    InsufficientTruncation);
    CHECK_THROWS_AS(eval_series(e4, cplx(0.0, -1.0), 1e-12), InvalidInput);
}
