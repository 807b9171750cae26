#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "corput/interval_map.hpp"
#include "corput/series.hpp"

namespace corput {

// ---------------------------------------------------------------------------
// Transfer operator on piecewise-constant densities (Markov maps).

/// One application maps the cell-coefficient vector c to (1/beta) A^T c;
/// n applications iterate that.
std::vector<double> pf_apply(const PLMap& map, const TransitionMatrix& A,
                             std::vector<double> coeffs, int n);

/// Integer companion of pf_apply: (A^T)^n applied to an integer vector, so
/// beta^n * P^n f can be compared against point counts without rounding.
std::vector<std::int64_t> pf_apply_counts(const TransitionMatrix& A,
                                          std::vector<std::int64_t> coeffs, int n);

struct DensityResult {
    bool ok = false;
    std::vector<double> coeffs;  // piecewise-constant values per cell
    int ergodic_components = 1;  // dimension of the eigenvalue-1 eigenspace
};

/// Normalized nonnegative fixed density of the transfer operator; when the
/// eigenspace at 1 is not one-dimensional, reports its dimension instead.
DensityResult invariant_density(const PLMap& map, const TransitionMatrix& A);

// ---------------------------------------------------------------------------
// Fredholm matrix and zeta function (Markov route).

/// Entry (a,b) is z/beta when the image of cell a covers cell b, else 0.
SeriesMatrix fredholm_markov(const PLMap& map, const TransitionMatrix& A, int degree);

/// zeta(z) = exp( sum_n z^n/n * trace(A^n)/beta^n ), truncated.
PowerSeries zeta_series(const PLMap& map, const TransitionMatrix& A, int degree);

/// Max |coefficient| of det(I-Phi) * zeta - 1 up to the given degree.
double zeta_identity_residual(const PLMap& map, const TransitionMatrix& A, int degree);

// ---------------------------------------------------------------------------
// Spectrum via eigenvalues of A.

struct DetZero {
    std::complex<double> z;
    int multiplicity = 1;
    bool inside = false; // |z| < beta, i.e. corresponds to an eigenvalue above 1/beta
};

struct SpectrumReport {
    std::vector<DetZero> zeros;      // all zeros beta/lambda of det(I - zA/beta)
    double beta = 0.0;
    double eta = 0.0;                // second eigenvalue modulus (1/beta when none isolated)
    bool eta_is_bound = true;        // true when eta is the 1/beta fallback
    bool certificate = false;        // only z=1 inside |z|<beta, simple
    int multiplicity_at_one = 0;
    double det_derivative_at_one = 0.0;
};

SpectrumReport spectrum(const PLMap& map, const TransitionMatrix& A);

// ---------------------------------------------------------------------------
// Signed symbolic route (works for non-Markov constant-slope maps).

struct SignedSymbol {
    int cell = 0;
    int side = +1;    // +1: sup of the cell from below, -1: inf from above
    double value = 0.0;
};

struct SignedSystem {
    std::vector<SignedSymbol> symbols; // 2|alphabet|, cell-major, '-' before '+'
    SeriesMatrix phi;                  // Fredholm matrix over the signed alphabet
    std::vector<SignedOrbit> orbits;   // endpoint orbits to depth K
    std::vector<char> step_markov;     // per row: orbit lands on a matching signed endpoint at step 1
    std::vector<char> markov_endpoint; // per row: orbit value hits a partition endpoint (Def-style)
    int coincidences = 0;              // comparisons decided inside the float tolerance
    int degree = 0;
    double beta = 0.0;
};

SignedSystem signed_fredholm(const PLMap& map, int degree, int markov_depth = 50);

/// The chi(z,x) vector of the signed renewal equation.
std::vector<PowerSeries> signed_chi(const SignedSystem& sys, const PLMap& map, double x);

/// det(I - Phi~(z)) of the signed system.
PowerSeries signed_det(const SignedSystem& sys);

// ---------------------------------------------------------------------------
// Generating functions s^J(z,x) and the renewal identity.

/// Coefficient n is beta^{-n} * #{|w| = n : wx exists and lands in J},
/// computed by direct word enumeration.  J is half-open [lo, hi).
PowerSeries generating_function(const PLMap& map, double j_lo, double j_hi, double x, int degree);

struct RenewalCheck {
    std::optional<double> markov_residual; // absent for non-Markov maps
    double signed_residual = 0.0;
    int degree = 0;
};

/// Compares the renewal solve (I-Phi)^{-1} chi against direct enumeration,
/// per partition cell, on both the Markov route (when available) and the
/// signed route.
RenewalCheck renewal_check(const PLMap& map, double x, int degree);

// ---------------------------------------------------------------------------
// Theorem-style certificates.

struct ZetaCoefficients {
    std::vector<double> zeta_n; // beta^n * coeff_n of (1-z) zeta(z)
    double sup_abs = 0.0;
    double late_to_early_ratio = 0.0; // sup over the late half vs the early half
    bool bounded_heuristic = true;
};

ZetaCoefficients zeta_coefficient_bound(const PLMap& map, int n_max);

struct ContourCount {
    int zeros = 0;          // winding number of det on |z| = radius
    double radius = 0.0;
    double min_abs = 0.0;   // minimum |det| on the contour
    double tail_bound = 0.0;
    bool conclusive = false;
};

/// Argument-principle zero count of a truncated series on a sampled circle.
ContourCount count_zeros_on_circle(const PowerSeries& d, double radius, double tail_bound,
                                   int samples = 4096);

enum class Verdict { True, False, Inconclusive };

struct MinorCertificate {
    Verdict verdict = Verdict::Inconclusive;
    int non_markov_endpoints = 0;
    ContourCount minor_count;          // zeros of det(I - Phi_11) within 0.95 beta
    bool minor_vanishes_at_one = false;
    ContourCount full_count;           // zeros of det(I - Phi~) within 0.95 beta
    bool full_has_zero_at_one = false;
    double truncation_tail = 0.0;
};

/// Checks the hypotheses built on the minor of the signed Fredholm matrix
/// over Markov endpoints: det(I - Phi_11) should not vanish inside |z| < beta
/// (a zero exactly at z = 1 is tolerated, matching the spectrum certificate),
/// and the truncated 1/zeta should have no zero inside except the simple one
/// at z = 1.
MinorCertificate markov_minor_certificate(const PLMap& map, int degree);

// ---------------------------------------------------------------------------
// Small polynomial helpers (exposed for tests).

/// Characteristic polynomial coefficients of an integer matrix,
/// c[0] z^d + ... + c[d], leading coefficient 1 (Faddeev-LeVerrier).
std::vector<double> char_poly(const std::vector<std::vector<int>>& a);

/// All complex roots by Aberth-Ehrlich iteration; coefficients c[0] leading.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs);

} // namespace corput
