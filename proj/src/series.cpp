#include "corput/series.hpp"

#include <cmath>
#include <cstdlib>

#include "corput/errors.hpp"

namespace corput {

PowerSeries PowerSeries::constant(double v, int degree) {
    PowerSeries s(degree);
    s.at(0) = v;
    return s;
}

PowerSeries PowerSeries::monomial(double v, int power, int degree) {
    PowerSeries s(degree);
    if (power <= degree)
        s.at(power) = v;
    return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries s(std::max(degree(), o.degree()));
    for (int i = 0; i <= s.degree(); ++i)
        s.at(i) = coeff(i) + o.coeff(i);
    return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries s(std::max(degree(), o.degree()));
    for (int i = 0; i <= s.degree(); ++i)
        s.at(i) = coeff(i) - o.coeff(i);
    return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    PowerSeries s(std::max(degree(), o.degree()));
    int k = s.degree();
    for (int i = 0; i <= std::min(degree(), k); ++i) {
        double ci = coeff(i);
        if (ci == 0.0)
            continue;
        int jmax = std::min(o.degree(), k - i);
        for (int j = 0; j <= jmax; ++j)
            s.at(i + j) += ci * o.coeff(j);
    }
    return s;
}

PowerSeries PowerSeries::scaled(double f) const {
    PowerSeries s(degree());
    for (int i = 0; i <= degree(); ++i)
        s.at(i) = coeff(i) * f;
    return s;
}

PowerSeries PowerSeries::exp() const {
    if (coeff(0) != 0.0)
        throw UsageError("series exp needs a zero constant term");
    int k = degree();
    PowerSeries b(k);
    b.at(0) = 1.0;
    for (int n = 1; n <= k; ++n) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j)
            acc += static_cast<double>(j) * coeff(j) * b.coeff(n - j);
        b.at(n) = acc / static_cast<double>(n);
    }
    return b;
}

PowerSeries PowerSeries::inverse() const {
    double c0 = coeff(0);
    if (c0 == 0.0)
        throw UsageError("series inverse needs a nonzero constant term");
    int k = degree();
    PowerSeries b(k);
    b.at(0) = 1.0 / c0;
    for (int n = 1; n <= k; ++n) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j)
            acc += coeff(j) * b.coeff(n - j);
        b.at(n) = -acc / c0;
    }
    return b;
}

std::complex<double> PowerSeries::eval(std::complex<double> z) const {
    std::complex<double> v = 0.0;
    for (int i = degree(); i >= 0; --i)
        v = v * z + coeff(i);
    return v;
}

double PowerSeries::max_abs_coeff() const {
    double m = 0.0;
    for (int i = 0; i <= degree(); ++i)
        m = std::max(m, std::abs(coeff(i)));
    return m;
}

SeriesMatrix series_identity(int n, int degree) {
    SeriesMatrix m(static_cast<std::size_t>(n),
                   std::vector<PowerSeries>(static_cast<std::size_t>(n), PowerSeries(degree)));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].at(0) = 1.0;
    return m;
}

PowerSeries det_series(SeriesMatrix m) {
    int n = static_cast<int>(m.size());
    if (n == 0)
        throw UsageError("det of empty matrix");
    int deg = m[0][0].degree();
    PowerSeries det = PowerSeries::constant(1.0, deg);
    for (int col = 0; col < n; ++col) {
        auto& pivot = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        if (pivot.coeff(0) == 0.0)
            throw NumericalError("series determinant: pivot has zero constant term");
        PowerSeries inv = pivot.inverse();
        det = det * pivot;
        for (int r = col + 1; r < n; ++r) {
            PowerSeries factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
            if (factor.max_abs_coeff() == 0.0)
                continue;
            for (int c = col; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    return det;
}

std::vector<PowerSeries> solve_series(SeriesMatrix m, std::vector<PowerSeries> rhs) {
    int n = static_cast<int>(m.size());
    if (rhs.size() != m.size())
        throw UsageError("solve_series: dimension mismatch");
    for (int col = 0; col < n; ++col) {
        auto& pivot = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        if (pivot.coeff(0) == 0.0)
            throw NumericalError("series solve: pivot has zero constant term");
        PowerSeries inv = pivot.inverse();
        for (int r = col + 1; r < n; ++r) {
            PowerSeries factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
            if (factor.max_abs_coeff() == 0.0)
                continue;
            for (int c = col; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] =
                rhs[static_cast<std::size_t>(r)] - factor * rhs[static_cast<std::size_t>(col)];
        }
    }
    std::vector<PowerSeries> x(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        PowerSeries acc = rhs[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c)
            acc = acc - m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] =
            acc * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)].inverse();
    }
    return x;
}

} // namespace corput
