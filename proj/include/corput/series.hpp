#pragma once

#include <complex>
#include <vector>

namespace corput {

/// Real power series truncated at a fixed degree; all arithmetic is carried
/// out mod z^{K+1}.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int degree) : c_(static_cast<std::size_t>(degree) + 1, 0.0) {}

    static PowerSeries constant(double v, int degree);
    static PowerSeries monomial(double v, int power, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double coeff(int i) const { return i <= degree() ? c_[static_cast<std::size_t>(i)] : 0.0; }
    double& at(int i) { return c_[static_cast<std::size_t>(i)]; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries scaled(double f) const;

    /// exp of a series with zero constant term.
    PowerSeries exp() const;

    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;

    std::complex<double> eval(std::complex<double> z) const;

    double max_abs_coeff() const;

private:
    std::vector<double> c_;
};

using SeriesMatrix = std::vector<std::vector<PowerSeries>>;

SeriesMatrix series_identity(int n, int degree);

/// Determinant over the truncated power-series ring by Gaussian elimination;
/// every leading principal pivot must have a nonzero constant term (true for
/// matrices of the form I - Phi(z) with Phi(0) = 0).
PowerSeries det_series(SeriesMatrix m);

/// Solves m * s = rhs over the truncated series ring.
std::vector<PowerSeries> solve_series(SeriesMatrix m, std::vector<PowerSeries> rhs);

} // namespace corput
