#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corput/errors.hpp"
#include "corput/map_io.hpp"
#include "corput/spectral.hpp"

using namespace corput;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

TransitionMatrix transitions(const PLMap& map) {
    auto info = markov_structure(map);
    REQUIRE(info.markov);
    return info.transitions;
}
} // namespace

TEST_CASE("pf_apply spreads indicator mass") {
    PLMap d = doubling_map();
    auto A = transitions(d);
    auto one_step = pf_apply(d, A, {1.0, 0.0}, 1);
    CHECK(one_step[0] == doctest::Approx(0.5));
    CHECK(one_step[1] == doctest::Approx(0.5));

    auto three = pf_apply(d, A, {1.0, 0.0}, 3);
    CHECK(three[0] == doctest::Approx(0.5));
    CHECK(three[1] == doctest::Approx(0.5));

    CHECK(pf_apply_counts(A, {1, 0}, 3) == std::vector<std::int64_t>{4, 4});
}

TEST_CASE("invariant densities") {
    PLMap d = doubling_map();
    auto rho = invariant_density(d, transitions(d));
    REQUIRE(rho.ok);
    CHECK(rho.coeffs[0] == doctest::Approx(1.0));
    CHECK(rho.coeffs[1] == doctest::Approx(1.0));

    PLMap g = golden_mean_map();
    auto rg = invariant_density(g, transitions(g));
    REQUIRE(rg.ok);
    // closed forms phi^2/sqrt(5) and phi/sqrt(5)
    CHECK(rg.coeffs[0] == doctest::Approx(kPhi * kPhi / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(rg.coeffs[1] == doctest::Approx(kPhi / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(rg.coeffs[0] == doctest::Approx(1.170820).epsilon(1e-6));
    CHECK(rg.coeffs[1] == doctest::Approx(0.723607).epsilon(1e-6));

    // rho is a fixed point of the operator
    auto again = pf_apply(g, transitions(g), rg.coeffs, 1);
    for (std::size_t i = 0; i < again.size(); ++i)
        CHECK(again[i] == doctest::Approx(rg.coeffs[i]).epsilon(1e-12));

    PLMap blocks = two_block_map();
    auto rb = invariant_density(blocks, transitions(blocks));
    CHECK_FALSE(rb.ok);
    CHECK(rb.ergodic_components == 2);
}

TEST_CASE("markov fredholm matrices") {
    PLMap d = doubling_map();
    auto phi = fredholm_markov(d, transitions(d), 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(phi[i][j].coeff(1) == doctest::Approx(0.5));
            CHECK(phi[i][j].coeff(0) == 0.0);
        }

    PLMap g = golden_mean_map();
    auto pg = fredholm_markov(g, transitions(g), 4);
    CHECK(pg[0][0].coeff(1) == doctest::Approx(1.0 / kPhi));
    CHECK(pg[1][1].coeff(1) == 0.0);

    PLMap s3 = full_shift_map(3);
    auto p3 = fredholm_markov(s3, transitions(s3), 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(p3[i][j].coeff(1) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("zeta series of the doubling map is geometric") {
    PLMap d = doubling_map();
    PowerSeries zeta = zeta_series(d, transitions(d), 5);
    for (int n = 0; n <= 5; ++n)
        CHECK(zeta.coeff(n) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(zeta.coeff(0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(zeta_series(d, transitions(d), 0), UsageError);
}

TEST_CASE("zeta of the golden-mean map matches 1/(1 - z/phi - z^2/phi^2)") {
    PLMap g = golden_mean_map();
    PowerSeries zeta = zeta_series(g, transitions(g), 4);
    PowerSeries denom(4);
    denom.at(0) = 1.0;
    denom.at(1) = -1.0 / kPhi;
    denom.at(2) = -1.0 / (kPhi * kPhi);
    PowerSeries expect = denom.inverse();
    for (int n = 0; n <= 4; ++n)
        CHECK(zeta.coeff(n) == doctest::Approx(expect.coeff(n)).epsilon(1e-12));
}

namespace {
PowerSeries markov_det_of(const PLMap& map, int degree) {
    auto A = transitions(map);
    auto phi = fredholm_markov(map, A, degree);
    int n = A.size();
    SeriesMatrix m = series_identity(n, degree);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return det_series(m);
}
} // namespace

TEST_CASE("markov determinants") {
    PowerSeries det_d = markov_det_of(doubling_map(), 6);
    CHECK(det_d.coeff(0) == doctest::Approx(1.0));
    CHECK(det_d.coeff(1) == doctest::Approx(-1.0));
    for (int n = 2; n <= 6; ++n)
        CHECK(det_d.coeff(n) == doctest::Approx(0.0).epsilon(1e-12));

    PowerSeries det_g = markov_det_of(golden_mean_map(), 6);
    CHECK(det_g.coeff(1) == doctest::Approx(-1.0 / kPhi));
    CHECK(det_g.coeff(2) == doctest::Approx(-1.0 / (kPhi * kPhi)));
}

TEST_CASE("theorem-style zeta identity holds to roundoff") {
    CHECK(zeta_identity_residual(doubling_map(), transitions(doubling_map()), 12) < 1e-12);
    CHECK(zeta_identity_residual(golden_mean_map(), transitions(golden_mean_map()), 12) < 1e-10);
    CHECK(zeta_identity_residual(tent_map(), transitions(tent_map()), 12) < 1e-12);
    CHECK(zeta_identity_residual(full_shift_map(3), transitions(full_shift_map(3)), 12) < 1e-12);
}

TEST_CASE("spectrum reports and certificates") {
    SpectrumReport d = spectrum(doubling_map(), transitions(doubling_map()));
    REQUIRE(d.zeros.size() == 1);
    CHECK(std::abs(d.zeros[0].z - 1.0) < 1e-9);
    CHECK(d.multiplicity_at_one == 1);
    CHECK(d.certificate);
    CHECK(d.eta == doctest::Approx(0.5));

    SpectrumReport g = spectrum(golden_mean_map(), transitions(golden_mean_map()));
    REQUIRE(g.zeros.size() == 2);
    CHECK(std::abs(g.zeros[0].z - 1.0) < 1e-9);
    CHECK(std::abs(g.zeros[1].z - std::complex<double>(-kPhi * kPhi, 0.0)) < 1e-9);
    CHECK(g.zeros[0].inside);
    CHECK_FALSE(g.zeros[1].inside); // phi^2 > phi
    CHECK(g.certificate);

    SpectrumReport b = spectrum(two_block_map(), transitions(two_block_map()));
    CHECK(b.multiplicity_at_one == 2);
    CHECK_FALSE(b.certificate);
}

TEST_CASE("signed route reproduces the markov determinants") {
    for (const PLMap& map :
         {doubling_map(), tent_map(), golden_mean_map(), full_shift_map(3)}) {
        PowerSeries markov_det = markov_det_of(map, 12);

        SignedSystem sys = signed_fredholm(map, 12);
        PowerSeries sd = signed_det(sys);
        CAPTURE(map.name());
        CHECK((sd - markov_det).max_abs_coeff() < 1e-9);

        for (char c : sys.step_markov)
            CHECK(c == 1); // Markov maps close every row at step one
    }
}

TEST_CASE("signed entry coefficients obey the formula bound") {
    for (const PLMap& map : {tent_map(), beta_map(1.9)}) {
        SignedSystem sys = signed_fredholm(map, 10);
        double inv_beta = 1.0 / map.beta();
        for (const auto& row : sys.phi)
            for (const auto& entry : row) {
                CHECK(entry.coeff(0) == 0.0);
                double w = 1.0;
                for (int n = 1; n <= 10; ++n) {
                    w *= inv_beta;
                    CHECK(std::abs(entry.coeff(n)) <= w * 0.5 + 1e-15);
                }
            }
    }
}

TEST_CASE("generating function of the doubling map") {
    PowerSeries s = generating_function(doubling_map(), 0.0, 0.5, 0.5, 4);
    CHECK(s.coeff(0) == 0.0);
    for (int n = 1; n <= 4; ++n)
        CHECK(s.coeff(n) == doctest::Approx(0.5));

    // J = [0,1) counts every admissible continuation
    PowerSeries all = generating_function(doubling_map(), 0.0, 1.0, 0.3, 5);
    for (int n = 0; n <= 5; ++n)
        CHECK(all.coeff(n) == doctest::Approx(1.0));
}

TEST_CASE("renewal identity against enumeration") {
    RenewalCheck d = renewal_check(doubling_map(), 0.3, 8);
    REQUIRE(d.markov_residual.has_value());
    CHECK(*d.markov_residual < 1e-10);
    CHECK(d.signed_residual < 1e-10);

    RenewalCheck g = renewal_check(golden_mean_map(), 0.3, 10);
    REQUIRE(g.markov_residual.has_value());
    CHECK(*g.markov_residual < 1e-9);
    CHECK(g.signed_residual < 1e-9);

    RenewalCheck t = renewal_check(tent_map(), 0.3, 8);
    CHECK(t.signed_residual < 1e-10);

    // the non-Markov case exercises the series rows of the signed matrix
    RenewalCheck b = renewal_check(beta_map(1.9), 0.3, 12);
    CHECK_FALSE(b.markov_residual.has_value());
    CHECK(b.signed_residual < 1e-9);
}

TEST_CASE("zeta coefficient bounds") {
    ZetaCoefficients d = zeta_coefficient_bound(doubling_map(), 10);
    CHECK(d.zeta_n[0] == doctest::Approx(1.0));
    for (int n = 1; n <= 10; ++n)
        CHECK(d.zeta_n[static_cast<std::size_t>(n)] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.bounded_heuristic);

    ZetaCoefficients g = zeta_coefficient_bound(golden_mean_map(), 20);
    for (int n = 0; n <= 20; ++n)
        CHECK(std::abs(g.zeta_n[static_cast<std::size_t>(n)]) <= 1.0 + 1e-9);
    CHECK(g.bounded_heuristic);

    ZetaCoefficients one = zeta_coefficient_bound(doubling_map(), 0);
    CHECK(one.zeta_n.size() == 1);
    CHECK(one.zeta_n[0] == doctest::Approx(1.0));
}

TEST_CASE("minor certificates") {
    MinorCertificate d = markov_minor_certificate(doubling_map(), 40);
    CHECK(d.verdict == Verdict::True);
    CHECK(d.non_markov_endpoints == 0);
    CHECK(d.minor_vanishes_at_one);

    MinorCertificate g = markov_minor_certificate(golden_mean_map(), 40);
    CHECK(g.verdict == Verdict::True);

    MinorCertificate b = markov_minor_certificate(beta_map(1.9), 60);
    CHECK(b.non_markov_endpoints == 1);
    // decided by the contour count on the truncated determinant
    CHECK(b.verdict != Verdict::Inconclusive);
}

TEST_CASE("char poly and roots") {
    // A = [[1,1],[1,0]]: lambda^2 - lambda - 1
    auto cp = char_poly({{1, 1}, {1, 0}});
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == doctest::Approx(1.0));
    CHECK(cp[1] == doctest::Approx(-1.0));
    CHECK(cp[2] == doctest::Approx(-1.0));

    auto roots = poly_roots(cp);
    REQUIRE(roots.size() == 2);
    double hi = std::max(roots[0].real(), roots[1].real());
    double lo = std::min(roots[0].real(), roots[1].real());
    CHECK(hi == doctest::Approx(kPhi).epsilon(1e-12));
    CHECK(lo == doctest::Approx(1.0 - kPhi).epsilon(1e-12));
}
