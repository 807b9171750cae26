#include "corput/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "corput/errors.hpp"

namespace corput {

namespace {

std::vector<std::vector<double>> scaled_matrix(const TransitionMatrix& A, double factor) {
    int n = A.size();
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                factor * A.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

std::vector<std::vector<double>> mat_mul(const std::vector<std::vector<double>>& a,
                                         const std::vector<std::vector<double>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            double v = a[i][k];
            if (v == 0.0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += v * b[k][j];
        }
    return c;
}

} // namespace

std::vector<double> pf_apply(const PLMap& map, const TransitionMatrix& A,
                             std::vector<double> coeffs, int n) {
    if (A.size() != map.alphabet_size() || coeffs.size() != static_cast<std::size_t>(A.size()))
        throw UsageError("pf_apply: dimension mismatch");
    double inv_beta = 1.0 / map.beta();
    int d = A.size();
    for (int step = 0; step < n; ++step) {
        std::vector<double> next(static_cast<std::size_t>(d), 0.0);
        for (int b = 0; b < d; ++b) {
            double acc = 0.0;
            for (int a = 0; a < d; ++a)
                acc += A.a[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                       coeffs[static_cast<std::size_t>(a)];
            next[static_cast<std::size_t>(b)] = inv_beta * acc;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

std::vector<std::int64_t> pf_apply_counts(const TransitionMatrix& A,
                                          std::vector<std::int64_t> coeffs, int n) {
    int d = A.size();
    if (coeffs.size() != static_cast<std::size_t>(d))
        throw UsageError("pf_apply_counts: dimension mismatch");
    for (int step = 0; step < n; ++step) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(d), 0);
        for (int b = 0; b < d; ++b) {
            std::int64_t acc = 0;
            for (int a = 0; a < d; ++a)
                acc += A.a[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                       coeffs[static_cast<std::size_t>(a)];
            next[static_cast<std::size_t>(b)] = acc;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

DensityResult invariant_density(const PLMap& map, const TransitionMatrix& A) {
    int d = A.size();
    double inv_beta = 1.0 / map.beta();

    // Null space of (A^T / beta - I).
    std::vector<std::vector<double>> m(static_cast<std::size_t>(d),
                                       std::vector<double>(static_cast<std::size_t>(d), 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                inv_beta * A.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                (i == j ? 1.0 : 0.0);

    const double piv_tol = 1e-9;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int pr = -1;
        double best = piv_tol;
        for (int r = rank; r < d; ++r)
            if (std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) > best) {
                best = std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
                pr = r;
            }
        if (pr < 0)
            continue;
        std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(rank)]);
        double p = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int c = col; c < d; ++c)
            m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] /= p;
        for (int r = 0; r < d; ++r)
            if (r != rank) {
                double f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (f == 0.0)
                    continue;
                for (int c = col; c < d; ++c)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                        f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
            }
        pivot_col.push_back(col);
        ++rank;
    }

    DensityResult res;
    res.ergodic_components = d - rank;
    if (res.ergodic_components != 1)
        return res;

    int free_col = 0;
    {
        std::vector<char> is_pivot(static_cast<std::size_t>(d), 0);
        for (int c : pivot_col)
            is_pivot[static_cast<std::size_t>(c)] = 1;
        for (int c = 0; c < d; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)])
                free_col = c;
    }
    std::vector<double> v(static_cast<std::size_t>(d), 0.0);
    v[static_cast<std::size_t>(free_col)] = 1.0;
    for (int r = 0; r < rank; ++r)
        v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
            -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)];

    double mass = 0.0;
    for (int a = 0; a < d; ++a)
        mass += v[static_cast<std::size_t>(a)] *
                (map.branch(a).right - map.branch(a).left);
    if (mass == 0.0)
        throw NumericalError("invariant density has zero mass");
    for (double& c : v)
        c /= mass;
    for (double& c : v) {
        if (c < -1e-9)
            throw NumericalError("invariant density came out negative");
        c = std::max(c, 0.0);
    }

    res.ok = true;
    res.coeffs = std::move(v);
    return res;
}

SeriesMatrix fredholm_markov(const PLMap& map, const TransitionMatrix& A, int degree) {
    int d = A.size();
    double inv_beta = 1.0 / map.beta();
    SeriesMatrix phi(static_cast<std::size_t>(d),
                     std::vector<PowerSeries>(static_cast<std::size_t>(d), PowerSeries(degree)));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (A.a[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].at(1) = inv_beta;
    return phi;
}

PowerSeries zeta_series(const PLMap& map, const TransitionMatrix& A, int degree) {
    if (degree < 1)
        throw UsageError("zeta_series: degree must be >= 1");
    auto b = scaled_matrix(A, 1.0 / map.beta());
    auto p = b;
    PowerSeries log_zeta(degree);
    for (int n = 1; n <= degree; ++n) {
        double tr = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            tr += p[i][i];
        log_zeta.at(n) = tr / static_cast<double>(n);
        if (n < degree)
            p = mat_mul(p, b);
    }
    return log_zeta.exp();
}

namespace {
SeriesMatrix identity_minus(const SeriesMatrix& phi) {
    int d = static_cast<int>(phi.size());
    int deg = phi[0][0].degree();
    SeriesMatrix m = series_identity(d, deg);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}
} // namespace

double zeta_identity_residual(const PLMap& map, const TransitionMatrix& A, int degree) {
    PowerSeries det = det_series(identity_minus(fredholm_markov(map, A, degree)));
    PowerSeries zeta = zeta_series(map, A, degree);
    PowerSeries prod = det * zeta;
    prod.at(0) -= 1.0;
    return prod.max_abs_coeff();
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and root finding.

std::vector<double> char_poly(const std::vector<std::vector<int>>& a) {
    int d = static_cast<int>(a.size());
    using LD = long double;
    std::vector<std::vector<LD>> A(static_cast<std::size_t>(d),
                                   std::vector<LD>(static_cast<std::size_t>(d), 0.0L));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<LD>(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

    auto mul = [&](const std::vector<std::vector<LD>>& x, const std::vector<std::vector<LD>>& y) {
        std::vector<std::vector<LD>> z(static_cast<std::size_t>(d),
                                       std::vector<LD>(static_cast<std::size_t>(d), 0.0L));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                LD v = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (v == 0.0L)
                    continue;
                for (int j = 0; j < d; ++j)
                    z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        v * y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
        return z;
    };

    std::vector<double> coeffs(static_cast<std::size_t>(d) + 1, 0.0);
    coeffs[0] = 1.0;
    std::vector<std::vector<LD>> m = A;
    for (int k = 1; k <= d; ++k) {
        LD tr = 0.0L;
        for (int i = 0; i < d; ++i)
            tr += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        LD ck = -tr / static_cast<LD>(k);
        // coefficients of 0/1 matrices are integers; snap away float fuzz
        LD snapped = std::roundl(ck);
        if (std::abs(static_cast<double>(ck - snapped)) < 1e-6 * std::max(1.0, std::abs(static_cast<double>(ck))))
            ck = snapped;
        coeffs[static_cast<std::size_t>(k)] = static_cast<double>(ck);
        if (k < d) {
            for (int i = 0; i < d; ++i)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += ck;
            m = mul(A, m);
        }
    }
    return coeffs;
}

std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs_in) {
    std::vector<double> c = coeffs_in;
    while (c.size() > 1 && c.front() == 0.0)
        c.erase(c.begin());
    int zero_roots = 0;
    while (c.size() > 1 && c.back() == 0.0) {
        c.pop_back();
        ++zero_roots;
    }
    int deg = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> roots;
    if (deg >= 1) {
        double lead = c[0];
        std::vector<double> a(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            a[i] = c[i] / lead;

        double radius = 0.0;
        for (int i = 1; i <= deg; ++i)
            radius = std::max(radius, std::pow(std::abs(a[static_cast<std::size_t>(i)]), 1.0 / i));
        radius = 2.0 * radius + 1.0;

        roots.resize(static_cast<std::size_t>(deg));
        for (int j = 0; j < deg; ++j) {
            double ang = 2.0 * std::numbers::pi * (j + 0.35) / deg + 0.4;
            roots[static_cast<std::size_t>(j)] =
                0.5 * radius * std::complex<double>(std::cos(ang), std::sin(ang));
        }

        auto eval = [&](std::complex<double> z, std::complex<double>& dp) {
            std::complex<double> p = a[0];
            dp = 0.0;
            for (int i = 1; i <= deg; ++i) {
                dp = dp * z + p;
                p = p * z + a[static_cast<std::size_t>(i)];
            }
            return p;
        };

        bool converged = false;
        for (int iter = 0; iter < 400 && !converged; ++iter) {
            double max_step = 0.0;
            for (int j = 0; j < deg; ++j) {
                std::complex<double> dp;
                std::complex<double> p = eval(roots[static_cast<std::size_t>(j)], dp);
                if (std::abs(p) == 0.0)
                    continue;
                std::complex<double> w = dp == 0.0 ? std::complex<double>(1e-12, 0) : p / dp;
                std::complex<double> s = 0.0;
                for (int k = 0; k < deg; ++k)
                    if (k != j)
                        s += 1.0 / (roots[static_cast<std::size_t>(j)] - roots[static_cast<std::size_t>(k)]);
                std::complex<double> denom = 1.0 - w * s;
                std::complex<double> step = std::abs(denom) < 1e-300 ? w : w / denom;
                roots[static_cast<std::size_t>(j)] -= step;
                max_step = std::max(max_step,
                                    std::abs(step) / (1.0 + std::abs(roots[static_cast<std::size_t>(j)])));
            }
            converged = max_step < 1e-14;
        }
        if (!converged)
            throw NumericalError("polynomial root iteration did not converge");

        // Newton polish.
        for (auto& z : roots)
            for (int it = 0; it < 3; ++it) {
                std::complex<double> dp;
                std::complex<double> p = eval(z, dp);
                if (std::abs(dp) > 1e-300)
                    z -= p / dp;
            }
    }
    for (int i = 0; i < zero_roots; ++i)
        roots.emplace_back(0.0, 0.0);
    return roots;
}

SpectrumReport spectrum(const PLMap& map, const TransitionMatrix& A) {
    SpectrumReport rep;
    rep.beta = map.beta();
    const double root_tol = 1e-9;

    std::vector<double> cp = char_poly(A.a);
    std::vector<std::complex<double>> eig = poly_roots(cp);

    // Cluster eigenvalues into multiplicities; a root of multiplicity m is
    // only accurate to eps^{1/m} from the iteration, so refine the cluster
    // center as a simple root of the (m-1)-th derivative.
    struct EigCluster {
        std::complex<double> lambda;
        int mult;
    };
    std::vector<EigCluster> clusters;
    std::vector<char> used(eig.size(), 0);
    for (std::size_t i = 0; i < eig.size(); ++i) {
        if (used[i])
            continue;
        std::complex<double> sum = eig[i];
        int mult = 1;
        used[i] = 1;
        for (std::size_t j = i + 1; j < eig.size(); ++j)
            if (!used[j] && std::abs(eig[j] - eig[i]) <= 1e-6 * std::max(1.0, std::abs(eig[i]))) {
                used[j] = 1;
                sum += eig[j];
                ++mult;
            }
        std::complex<double> center = sum / static_cast<double>(mult);
        if (mult > 1) {
            std::vector<double> q = cp;
            for (int d = 1; d < mult; ++d) {
                std::vector<double> dq(q.size() - 1);
                int deg = static_cast<int>(q.size()) - 1;
                for (std::size_t k = 0; k + 1 < q.size(); ++k)
                    dq[k] = q[k] * static_cast<double>(deg - static_cast<int>(k));
                q = std::move(dq);
            }
            for (int it = 0; it < 50; ++it) {
                std::complex<double> p = 0.0, dp = 0.0;
                for (double c : q) {
                    dp = dp * center + p;
                    p = p * center + c;
                }
                if (std::abs(dp) < 1e-300)
                    break;
                std::complex<double> step = p / dp;
                center -= step;
                if (std::abs(step) < 1e-15 * (1.0 + std::abs(center)))
                    break;
            }
        }
        clusters.push_back({center, mult});
    }

    std::vector<std::complex<double>> zeros; // with multiplicity, for p'(1)
    for (const auto& c : clusters) {
        if (std::abs(c.lambda) <= root_tol)
            continue;
        DetZero z;
        z.z = rep.beta / c.lambda;
        z.multiplicity = c.mult;
        z.inside = std::abs(z.z) < rep.beta * (1.0 - root_tol);
        rep.zeros.push_back(z);
        for (int k = 0; k < c.mult; ++k)
            zeros.push_back(z.z);
    }
    std::sort(rep.zeros.begin(), rep.zeros.end(),
              [](const DetZero& a, const DetZero& b) { return std::abs(a.z) < std::abs(b.z); });

    for (const auto& z : rep.zeros)
        if (std::abs(z.z - 1.0) <= root_tol)
            rep.multiplicity_at_one += z.multiplicity;

    // Derivative of det(I - zA/beta) = prod(1 - z lambda/beta) at z = 1.
    {
        std::complex<double> dsum = 0.0;
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            std::complex<double> term = -1.0 / zeros[i]; // -lambda_i/beta
            for (std::size_t j = 0; j < zeros.size(); ++j)
                if (j != i)
                    term *= 1.0 - 1.0 / zeros[j];
            dsum += term;
        }
        rep.det_derivative_at_one = std::abs(dsum);
    }

    bool only_one_inside = true;
    for (const auto& z : rep.zeros)
        if (z.inside && std::abs(z.z - 1.0) > root_tol)
            only_one_inside = false;
    rep.certificate = only_one_inside && rep.multiplicity_at_one == 1 &&
                      rep.det_derivative_at_one > 1e-6;

    rep.eta = 1.0 / rep.beta;
    rep.eta_is_bound = true;
    double best = rep.beta;
    for (const auto& z : rep.zeros)
        if (z.inside && std::abs(z.z - 1.0) > root_tol && std::abs(z.z) < best) {
            best = std::abs(z.z);
            rep.eta = 1.0 / best;
            rep.eta_is_bound = false;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Signed route.

namespace {

// Signed points are ordered with an infinitesimal nudge toward the side they
// approach from: (v,+) sits just below v, (v,-) just above.  Rank breaks the
// tie between coinciding values.
int side_rank(int side) { return side > 0 ? 0 : 1; }

int key_compare(double v1, int s1, double v2, int s2, double tol, int* coincidences) {
    if (std::abs(v1 - v2) <= tol) {
        if (v1 != v2 && coincidences)
            ++*coincidences;
        int r1 = side_rank(s1), r2 = side_rank(s2);
        return r1 < r2 ? -1 : (r1 > r2 ? 1 : 0);
    }
    return v1 < v2 ? -1 : 1;
}

// sigma(u^s, .) against a signed point, +1/2 or -1/2.
double sigma_signed(double uv, int us, double vv, int vs, double tol, int* coincidences) {
    int cmp = key_compare(uv, us, vv, vs, tol, coincidences);
    bool plus = us > 0 ? cmp >= 0 : cmp <= 0;
    return plus ? 0.5 : -0.5;
}

// sigma(u^s, x) against a plain point; exact coincidence counts as "y >= x"
// in both directions.
double sigma_point(double uv, int us, double x, double tol, int* coincidences) {
    if (std::abs(uv - x) <= tol && uv != x && coincidences)
        ++*coincidences;
    bool plus = us > 0 ? uv >= x : uv <= x;
    return plus ? 0.5 : -0.5;
}

} // namespace

SignedSystem signed_fredholm(const PLMap& map, int degree, int markov_depth) {
    SignedSystem sys;
    sys.degree = degree;
    sys.beta = map.beta();
    int na = map.alphabet_size();
    double tol = map.tol();

    for (int a = 0; a < na; ++a) {
        sys.symbols.push_back({a, -1, map.branch(a).left});
        sys.symbols.push_back({a, +1, map.branch(a).right});
    }
    int m = static_cast<int>(sys.symbols.size());

    int orbit_depth = std::max(degree, markov_depth);
    for (const auto& sym : sys.symbols)
        sys.orbits.push_back(signed_orbit(map, sym.value, sym.side, orbit_depth));

    // Partition endpoint values for Def-style Markov classification.
    std::vector<double> cuts;
    cuts.push_back(map.branch(0).left);
    for (int a = 0; a < na; ++a)
        cuts.push_back(map.branch(a).right);
    auto is_cut = [&](double v) {
        for (double c : cuts)
            if (std::abs(v - c) <= tol)
                return true;
        return false;
    };

    sys.phi.assign(static_cast<std::size_t>(m),
                   std::vector<PowerSeries>(static_cast<std::size_t>(m), PowerSeries(degree)));
    sys.step_markov.assign(static_cast<std::size_t>(m), 0);
    sys.markov_endpoint.assign(static_cast<std::size_t>(m), 0);

    double inv_beta = 1.0 / sys.beta;
    for (int i = 0; i < m; ++i) {
        const SignedOrbit& o = sys.orbits[static_cast<std::size_t>(i)];

        for (int k = 1; k <= markov_depth; ++k)
            if (is_cut(o.value[static_cast<std::size_t>(k)])) {
                sys.markov_endpoint[static_cast<std::size_t>(i)] = 1;
                break;
            }

        // Does the shifted endpoint land exactly on the matching signed
        // endpoint of its own cell?  Then one step closes the renewal row.
        double v1 = o.value[1];
        int s1 = o.side[1];
        int c1 = map.cell_of_signed(v1, s1);
        double target = s1 > 0 ? map.branch(c1).right : map.branch(c1).left;
        bool case_a = std::abs(v1 - target) <= tol;
        sys.step_markov[static_cast<std::size_t>(i)] = case_a ? 1 : 0;

        int n_max = case_a ? 1 : degree;
        double weight = inv_beta;
        int sign_prefix = 1; // sgn of the first n-1 symbols
        for (int n = 1; n <= n_max; ++n) {
            double vn = o.value[static_cast<std::size_t>(n)];
            int sn = o.side[static_cast<std::size_t>(n)];
            for (int j = 0; j < m; ++j) {
                const SignedSymbol& col = sys.symbols[static_cast<std::size_t>(j)];
                double sig = sigma_signed(vn, sn, col.value, col.side, tol, &sys.coincidences);
                sys.phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].at(n) =
                    weight * sign_prefix * sig;
            }
            weight *= inv_beta;
            sign_prefix *= map.branch(o.symbol[static_cast<std::size_t>(n - 1)]).sign;
        }
    }
    return sys;
}

std::vector<PowerSeries> signed_chi(const SignedSystem& sys, const PLMap& map, double x) {
    int m = static_cast<int>(sys.symbols.size());
    double tol = map.tol();
    double inv_beta = 1.0 / sys.beta;
    std::vector<PowerSeries> chi(static_cast<std::size_t>(m), PowerSeries(sys.degree));
    int coincidences = 0;
    for (int i = 0; i < m; ++i) {
        const SignedOrbit& o = sys.orbits[static_cast<std::size_t>(i)];
        if (sys.step_markov[static_cast<std::size_t>(i)]) {
            chi[static_cast<std::size_t>(i)].at(0) =
                sigma_point(o.value[0], o.side[0], x, tol, &coincidences);
            continue;
        }
        double weight = 1.0;
        for (int n = 0; n <= sys.degree; ++n) {
            chi[static_cast<std::size_t>(i)].at(n) =
                weight * sigma_point(o.value[static_cast<std::size_t>(n)],
                                     o.side[static_cast<std::size_t>(n)], x, tol, &coincidences);
            weight *= inv_beta;
        }
    }
    return chi;
}

PowerSeries signed_det(const SignedSystem& sys) {
    return det_series(identity_minus(sys.phi));
}

// ---------------------------------------------------------------------------
// Generating functions.

PowerSeries generating_function(const PLMap& map, double j_lo, double j_hi, double x, int degree) {
    if (!(j_lo < j_hi))
        throw UsageError("generating_function: empty interval");
    PowerSeries s(degree);
    auto in_j = [&](double p) { return p >= j_lo && p < j_hi; };
    s.at(0) = in_j(x) ? 1.0 : 0.0;
    double weight = 1.0;
    for (int n = 1; n <= degree; ++n) {
        weight /= map.beta();
        int hits = 0;
        for (const Word& w : words_of_length(map, n)) {
            auto p = point_of_wx(map, w, x);
            if (p && in_j(*p))
                ++hits;
        }
        s.at(n) = weight * hits;
    }
    return s;
}

RenewalCheck renewal_check(const PLMap& map, double x, int degree) {
    RenewalCheck out;
    out.degree = degree;
    int na = map.alphabet_size();

    // Direct enumeration of s^{<a>}(z,x) for every cell at once.
    std::vector<PowerSeries> enumerated(static_cast<std::size_t>(na), PowerSeries(degree));
    enumerated[static_cast<std::size_t>(map.cell_of(x))].at(0) = 1.0;
    double weight = 1.0;
    for (int n = 1; n <= degree; ++n) {
        weight /= map.beta();
        for (const Word& w : words_of_length(map, n)) {
            auto p = point_of_wx(map, w, x);
            if (p)
                enumerated[static_cast<std::size_t>(map.cell_of(*p))].at(n) += weight;
        }
    }

    MarkovInfo info = markov_structure(map);
    if (info.markov) {
        SeriesMatrix lhs = identity_minus(fredholm_markov(map, info.transitions, degree));
        std::vector<PowerSeries> chi(static_cast<std::size_t>(na), PowerSeries(degree));
        chi[static_cast<std::size_t>(map.cell_of(x))].at(0) = 1.0;
        std::vector<PowerSeries> solved = solve_series(lhs, chi);
        double r = 0.0;
        for (int a = 0; a < na; ++a)
            r = std::max(r, (solved[static_cast<std::size_t>(a)] -
                             enumerated[static_cast<std::size_t>(a)])
                                .max_abs_coeff());
        out.markov_residual = r;
    }

    SignedSystem sys = signed_fredholm(map, degree);
    std::vector<PowerSeries> chi = signed_chi(sys, map, x);
    std::vector<PowerSeries> solved = solve_series(identity_minus(sys.phi), chi);
    double r = 0.0;
    for (int a = 0; a < na; ++a) {
        PowerSeries cell_sum = solved[static_cast<std::size_t>(2 * a)] +
                               solved[static_cast<std::size_t>(2 * a + 1)];
        r = std::max(r, (cell_sum - enumerated[static_cast<std::size_t>(a)]).max_abs_coeff());
    }
    out.signed_residual = r;
    return out;
}

// ---------------------------------------------------------------------------
// Certificates.

ZetaCoefficients zeta_coefficient_bound(const PLMap& map, int n_max) {
    if (n_max < 0)
        throw UsageError("zeta_coefficient_bound: n_max must be >= 0");
    int degree = std::max(n_max, 1);
    MarkovInfo info = markov_structure(map);
    PowerSeries zeta = info.markov
                           ? zeta_series(map, info.transitions, degree)
                           : signed_det(signed_fredholm(map, degree)).inverse();

    ZetaCoefficients out;
    double bn = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        double coeff = zeta.coeff(n) - (n >= 1 ? zeta.coeff(n - 1) : 0.0);
        out.zeta_n.push_back(bn * coeff);
        out.sup_abs = std::max(out.sup_abs, std::abs(out.zeta_n.back()));
        bn *= map.beta();
    }
    double early = 0.0, late = 0.0;
    int half = n_max / 2;
    for (int n = 0; n <= n_max; ++n) {
        double v = std::abs(out.zeta_n[static_cast<std::size_t>(n)]);
        (n <= half ? early : late) = std::max(n <= half ? early : late, v);
    }
    out.late_to_early_ratio = early > 0.0 ? late / early : (late > 0.0 ? 1e300 : 0.0);
    out.bounded_heuristic = late <= std::max(early * 1.05, 1e-9);
    return out;
}

ContourCount count_zeros_on_circle(const PowerSeries& d, double radius, double tail_bound,
                                   int samples) {
    ContourCount out;
    out.radius = radius;
    out.tail_bound = tail_bound;
    out.min_abs = 1e300;

    double total_turn = 0.0;
    std::complex<double> prev = d.eval(std::complex<double>(radius, 0.0));
    out.min_abs = std::min(out.min_abs, std::abs(prev));
    for (int k = 1; k <= samples; ++k) {
        double ang = 2.0 * std::numbers::pi * k / samples;
        std::complex<double> cur = d.eval(radius * std::complex<double>(std::cos(ang), std::sin(ang)));
        out.min_abs = std::min(out.min_abs, std::abs(cur));
        if (std::abs(cur) > 0.0 && std::abs(prev) > 0.0)
            total_turn += std::arg(cur / prev);
        prev = cur;
    }
    double winding = total_turn / (2.0 * std::numbers::pi);
    out.zeros = static_cast<int>(std::lround(winding));
    out.conclusive = out.min_abs > 10.0 * tail_bound && out.min_abs > 1e-12 &&
                     std::abs(winding - out.zeros) < 0.25;
    return out;
}

MinorCertificate markov_minor_certificate(const PLMap& map, int degree) {
    MinorCertificate cert;
    SignedSystem sys = signed_fredholm(map, degree);
    int m = static_cast<int>(sys.symbols.size());
    double beta = map.beta();
    double r = 0.95 * beta;

    std::vector<int> markov_rows;
    int case_b_markov_rows = 0;
    for (int i = 0; i < m; ++i) {
        if (sys.markov_endpoint[static_cast<std::size_t>(i)]) {
            markov_rows.push_back(i);
            if (!sys.step_markov[static_cast<std::size_t>(i)])
                ++case_b_markov_rows;
        } else {
            ++cert.non_markov_endpoints;
        }
    }

    // Truncation tail of a degree-K entry evaluated on |z| = r; exact (zero)
    // when every participating row closes at step one.
    double q = r / beta;
    double entry_tail = 0.5 * std::pow(q, degree + 1) / (1.0 - q);
    double entry_bound = 0.5 * q / (1.0 - q);
    auto det_tail = [&](int rows_with_tail, int dim) {
        if (rows_with_tail == 0)
            return 0.0;
        return rows_with_tail * entry_tail * std::pow(1.0 + dim * entry_bound, dim - 1);
    };

    if (markov_rows.empty())
        throw NumericalError("no Markov endpoints: the minor is empty");

    // Minor over Markov endpoints.
    int dm = static_cast<int>(markov_rows.size());
    SeriesMatrix minor(static_cast<std::size_t>(dm),
                       std::vector<PowerSeries>(static_cast<std::size_t>(dm), PowerSeries(degree)));
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j)
            minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                sys.phi[static_cast<std::size_t>(markov_rows[static_cast<std::size_t>(i)])]
                       [static_cast<std::size_t>(markov_rows[static_cast<std::size_t>(j)])];
    PowerSeries d11 = det_series(identity_minus(minor));
    cert.minor_count = count_zeros_on_circle(d11, r, det_tail(case_b_markov_rows, dm));
    cert.minor_vanishes_at_one = std::abs(d11.eval(1.0)) <= 1e-9;

    int case_b_rows = 0;
    for (int i = 0; i < m; ++i)
        if (!sys.step_markov[static_cast<std::size_t>(i)])
            ++case_b_rows;
    PowerSeries dfull = signed_det(sys);
    cert.full_count = count_zeros_on_circle(dfull, r, det_tail(case_b_rows, m));
    cert.full_has_zero_at_one = std::abs(dfull.eval(1.0)) <= 1e-9;
    cert.truncation_tail = det_tail(case_b_rows, m);

    bool minor_known = cert.minor_count.conclusive;
    bool minor_ok = minor_known &&
                    cert.minor_count.zeros - (cert.minor_vanishes_at_one ? 1 : 0) == 0;
    bool full_known = cert.full_count.conclusive;
    bool full_ok = full_known && cert.full_count.zeros == 1 && cert.full_has_zero_at_one;

    if (minor_known && !minor_ok)
        cert.verdict = Verdict::False;
    else if (full_known && !full_ok)
        cert.verdict = Verdict::False;
    else if (minor_known && full_known)
        cert.verdict = Verdict::True;
    else
        cert.verdict = Verdict::Inconclusive;
    return cert;
}

} // namespace corput
