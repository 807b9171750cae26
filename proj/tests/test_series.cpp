#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corput/errors.hpp"
#include "corput/series.hpp"

using corput::PowerSeries;
using corput::SeriesMatrix;

TEST_CASE("series arithmetic") {
    PowerSeries a(4), b(4);
    a.at(0) = 1.0;
    a.at(1) = 2.0;
    b.at(1) = 1.0;
    b.at(2) = -1.0;

    PowerSeries s = a + b;
    CHECK(s.coeff(0) == 1.0);
    CHECK(s.coeff(1) == 3.0);
    CHECK(s.coeff(2) == -1.0);

    PowerSeries p = a * b;
    // (1 + 2z)(z - z^2) = z + z^2 - 2z^3
    CHECK(p.coeff(0) == 0.0);
    CHECK(p.coeff(1) == 1.0);
    CHECK(p.coeff(2) == 1.0);
    CHECK(p.coeff(3) == -2.0);
    CHECK(p.coeff(4) == 0.0);
}

TEST_CASE("exp of log(1/(1-z)) gives the geometric series") {
    int k = 10;
    PowerSeries log_inv(k); // -log(1-z) = sum z^n / n
    for (int n = 1; n <= k; ++n)
        log_inv.at(n) = 1.0 / n;
    PowerSeries g = log_inv.exp();
    for (int n = 0; n <= k; ++n)
        CHECK(g.coeff(n) == doctest::Approx(1.0).epsilon(1e-12));
    PowerSeries bad = PowerSeries::constant(1.0, 3);
    CHECK_THROWS_AS(bad.exp(), corput::UsageError);
}

TEST_CASE("inverse multiplies back to one") {
    PowerSeries a(8);
    a.at(0) = 2.0;
    a.at(1) = -0.7;
    a.at(3) = 0.3;
    PowerSeries prod = a * a.inverse();
    CHECK(prod.coeff(0) == doctest::Approx(1.0));
    for (int n = 1; n <= 8; ++n)
        CHECK(prod.coeff(n) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(PowerSeries(3).inverse(), corput::UsageError);
}

TEST_CASE("determinant of I minus a rank-one z-matrix") {
    // Phi = (z/2) * ones(2) -> det(I - Phi) = 1 - z
    int k = 6;
    SeriesMatrix m = corput::series_identity(2, k);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                PowerSeries::monomial(0.5, 1, k);
    PowerSeries det = corput::det_series(m);
    CHECK(det.coeff(0) == doctest::Approx(1.0));
    CHECK(det.coeff(1) == doctest::Approx(-1.0));
    for (int n = 2; n <= k; ++n)
        CHECK(det.coeff(n) == doctest::Approx(0.0).epsilon(1e-12));

    // determinant of the identity is one
    PowerSeries detid = corput::det_series(corput::series_identity(3, k));
    CHECK(detid.coeff(0) == doctest::Approx(1.0));
    CHECK(detid.max_abs_coeff() == doctest::Approx(1.0));
}

TEST_CASE("solve_series inverts small systems") {
    int k = 8;
    // (I - zA) s = chi with A = [[0,1],[1,0]]: s = (I + zA + z^2 I + ...) chi
    SeriesMatrix m = corput::series_identity(2, k);
    m[0][1] = m[0][1] - PowerSeries::monomial(1.0, 1, k);
    m[1][0] = m[1][0] - PowerSeries::monomial(1.0, 1, k);
    std::vector<PowerSeries> chi{PowerSeries::constant(1.0, k), PowerSeries(k)};
    auto s = corput::solve_series(m, chi);
    for (int n = 0; n <= k; ++n) {
        CHECK(s[0].coeff(n) == doctest::Approx(n % 2 == 0 ? 1.0 : 0.0));
        CHECK(s[1].coeff(n) == doctest::Approx(n % 2 == 1 ? 1.0 : 0.0));
    }
}

TEST_CASE("complex evaluation") {
    PowerSeries p(2);
    p.at(0) = 1.0;
    p.at(1) = -1.0;
    auto v = p.eval(std::complex<double>(0.0, 1.0));
    CHECK(std::abs(v - std::complex<double>(1.0, -1.0)) < 1e-15);
}
