#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace corput {

/// A maximizing box [lo_i, hi_i) (per dimension) together with whether the
/// supremum came from the closed or the open counting variant.
struct Witness {
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
    bool closed = false;
};

struct DiscrepancyValue {
    double value = 0.0;
    Witness witness;
};

/// Exact star discrepancy in 1D over anchored intervals [0, a).
DiscrepancyValue star_discrepancy_1d(const std::vector<double>& points);

/// Exact extreme discrepancy in 1D over all intervals (open/closed variants
/// evaluated combinatorially at point coordinates).  O(N^2).
DiscrepancyValue extreme_discrepancy_1d(const std::vector<double>& points);

/// Exact star discrepancy in 2D over anchored boxes [0,a) x [0,b);
/// O(N^2 log N).  Guarded at max_points.
DiscrepancyValue star_discrepancy_2d(const std::vector<std::array<double, 2>>& points,
                                     std::size_t max_points = 20000);

/// Exact supremum over boxes whose corners are multiples of 2^-k
/// (half-open), via prefix sums of the cell histogram.
DiscrepancyValue dyadic_discrepancy_1d(const std::vector<double>& points, int k);
DiscrepancyValue dyadic_discrepancy_2d(const std::vector<std::array<double, 2>>& points, int k);
DiscrepancyValue dyadic_discrepancy_3d(const std::vector<std::array<double, 3>>& points, int k);

/// Exhaustive oracle over grid-corner boxes, half-open, direct counting.
/// anchored=true restricts to boxes anchored at the origin.
double brute_force_discrepancy_1d(const std::vector<double>& points, int grid, bool anchored);
double brute_force_discrepancy_2d(const std::vector<std::array<double, 2>>& points, int grid,
                                  bool anchored);

struct GrowthFit {
    std::vector<double> c; // N * D_N / (log_base N)^p
    double max_c = 0.0;
    double slope = 0.0; // least-squares slope of log c against log log N
};

/// Normalized constants and their trend for a measured discrepancy series.
/// The log base affects only the constants, not the slope.
GrowthFit growth_fit(const std::vector<double>& ns, const std::vector<double>& ds, double p,
                     double log_base = 2.0);

} // namespace corput
