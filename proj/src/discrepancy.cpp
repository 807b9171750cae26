#include "corput/discrepancy.hpp"

#include <algorithm>
#include <cmath>

#include "corput/errors.hpp"

namespace corput {

namespace {

void require_unit(double v) {
    if (!(v >= 0.0) || v >= 1.0)
        throw UsageError("points must lie in [0,1)");
}

struct Fenwick {
    std::vector<int> t;
    explicit Fenwick(int n) : t(static_cast<std::size_t>(n) + 1, 0) {}
    void add(int i) {
        for (++i; i < static_cast<int>(t.size()); i += i & -i)
            ++t[static_cast<std::size_t>(i)];
    }
    int prefix(int n) const { // count of entries with rank < n
        int s = 0;
        for (; n > 0; n -= n & -n)
            s += t[static_cast<std::size_t>(n)];
        return s;
    }
};

} // namespace

DiscrepancyValue star_discrepancy_1d(const std::vector<double>& points) {
    if (points.empty())
        throw UsageError("star_discrepancy_1d: empty input");
    std::vector<double> x = points;
    for (double v : x)
        require_unit(v);
    std::sort(x.begin(), x.end());
    std::size_t n = x.size();
    DiscrepancyValue out;
    for (std::size_t i = 1; i <= n; ++i) {
        double xi = x[i - 1];
        double over = static_cast<double>(i) / n - xi;   // closed [0, xi]
        double under = xi - static_cast<double>(i - 1) / n; // open [0, xi)
        if (over > out.value) {
            out.value = over;
            out.witness = {{0, 0, 0}, {xi, 1, 1}, true};
        }
        if (under > out.value) {
            out.value = under;
            out.witness = {{0, 0, 0}, {xi, 1, 1}, false};
        }
    }
    return out;
}

DiscrepancyValue extreme_discrepancy_1d(const std::vector<double>& points) {
    if (points.empty())
        throw UsageError("extreme_discrepancy_1d: empty input");
    std::vector<double> x = points;
    for (double v : x)
        require_unit(v);
    std::sort(x.begin(), x.end());
    double n = static_cast<double>(x.size());

    std::vector<double> vals; // unique coordinates
    std::vector<int> less, leq;
    for (std::size_t i = 0; i < x.size();) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i])
            ++j;
        vals.push_back(x[i]);
        less.push_back(static_cast<int>(i));
        leq.push_back(static_cast<int>(j));
        i = j;
    }

    std::vector<double> lo_cand = vals;
    lo_cand.insert(lo_cand.begin(), 0.0);
    std::vector<double> hi_cand = vals;
    hi_cand.push_back(1.0);

    auto count_less = [&](double v) {
        std::size_t k = static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
        return k < vals.size() && vals[k] == v ? less[k] : (k == 0 ? 0 : leq[k - 1]);
    };
    auto count_leq = [&](double v) {
        std::size_t k = static_cast<std::size_t>(std::upper_bound(vals.begin(), vals.end(), v) - vals.begin());
        return k == 0 ? 0 : leq[k - 1];
    };

    DiscrepancyValue out;
    for (double u : lo_cand)
        for (double v : hi_cand) {
            if (v < u)
                continue;
            double over = (count_leq(v) - count_less(u)) / n - (v - u); // closed [u,v]
            double under = (v - u) - (count_less(v) - count_leq(u)) / n; // open (u,v)
            if (over > out.value) {
                out.value = over;
                out.witness = {{u, 0, 0}, {v, 1, 1}, true};
            }
            if (under > out.value) {
                out.value = under;
                out.witness = {{u, 0, 0}, {v, 1, 1}, false};
            }
        }
    return out;
}

DiscrepancyValue star_discrepancy_2d(const std::vector<std::array<double, 2>>& points,
                                     std::size_t max_points) {
    if (points.empty())
        throw UsageError("star_discrepancy_2d: empty input");
    if (points.size() > max_points)
        throw ResourceError("star_discrepancy_2d: too many points (use the dyadic mode)");
    for (const auto& p : points) {
        require_unit(p[0]);
        require_unit(p[1]);
    }
    double n = static_cast<double>(points.size());

    std::vector<std::array<double, 2>> pts = points;
    std::sort(pts.begin(), pts.end());

    std::vector<double> ys;
    for (const auto& p : pts)
        ys.push_back(p[1]);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto rank_less = [&](double b) {
        return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), b) - ys.begin());
    };
    auto rank_leq = [&](double b) {
        return static_cast<int>(std::upper_bound(ys.begin(), ys.end(), b) - ys.begin());
    };

    std::vector<double> xs;
    for (const auto& p : pts)
        xs.push_back(p[0]);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    xs.push_back(1.0);

    std::vector<double> b_cand = ys;
    b_cand.push_back(1.0);

    Fenwick closed(static_cast<int>(ys.size()));
    Fenwick open(static_cast<int>(ys.size()));
    std::size_t ins_closed = 0, ins_open = 0;

    DiscrepancyValue out;
    for (double a : xs) {
        while (ins_closed < pts.size() && pts[ins_closed][0] <= a)
            closed.add(rank_less(pts[ins_closed++][1]));
        while (ins_open < pts.size() && pts[ins_open][0] < a)
            open.add(rank_less(pts[ins_open++][1]));
        for (double b : b_cand) {
            double over = closed.prefix(rank_leq(b)) / n - a * b;
            double under = a * b - open.prefix(rank_less(b)) / n;
            if (over > out.value) {
                out.value = over;
                out.witness = {{0, 0, 0}, {a, b, 1}, true};
            }
            if (under > out.value) {
                out.value = under;
                out.witness = {{0, 0, 0}, {a, b, 1}, false};
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dyadic modes.

namespace {

int dyadic_cell(double v, int k) {
    int c = static_cast<int>(std::floor(std::ldexp(v, k)));
    return std::clamp(c, 0, (1 << k) - 1);
}

} // namespace

DiscrepancyValue dyadic_discrepancy_1d(const std::vector<double>& points, int k) {
    if (points.empty())
        throw UsageError("dyadic_discrepancy_1d: empty input");
    if (k < 1 || k > 12)
        throw ResourceError("dyadic_discrepancy_1d supports 1 <= k <= 12");
    int g = 1 << k;
    double n = static_cast<double>(points.size());
    std::vector<double> prefix(static_cast<std::size_t>(g) + 1, 0.0);
    for (double v : points) {
        require_unit(v);
        prefix[static_cast<std::size_t>(dyadic_cell(v, k)) + 1] += 1.0;
    }
    for (int i = 0; i < g; ++i)
        prefix[static_cast<std::size_t>(i) + 1] += prefix[static_cast<std::size_t>(i)];

    DiscrepancyValue out;
    double scale = 1.0 / g;
    for (int a = 0; a < g; ++a)
        for (int b = a + 1; b <= g; ++b) {
            double count = prefix[static_cast<std::size_t>(b)] - prefix[static_cast<std::size_t>(a)];
            double dev = std::abs(count / n - (b - a) * scale);
            if (dev > out.value) {
                out.value = dev;
                out.witness = {{a * scale, 0, 0}, {b * scale, 1, 1}, false};
            }
        }
    return out;
}

DiscrepancyValue dyadic_discrepancy_2d(const std::vector<std::array<double, 2>>& points, int k) {
    if (points.empty())
        throw UsageError("dyadic_discrepancy_2d: empty input");
    if (k < 1 || k > 7)
        throw ResourceError("dyadic_discrepancy_2d supports 1 <= k <= 7");
    int g = 1 << k;
    double n = static_cast<double>(points.size());
    std::vector<std::vector<double>> pre(static_cast<std::size_t>(g) + 1,
                                         std::vector<double>(static_cast<std::size_t>(g) + 1, 0.0));
    for (const auto& p : points) {
        require_unit(p[0]);
        require_unit(p[1]);
        pre[static_cast<std::size_t>(dyadic_cell(p[0], k)) + 1]
           [static_cast<std::size_t>(dyadic_cell(p[1], k)) + 1] += 1.0;
    }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                pre[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] -
                pre[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];

    DiscrepancyValue out;
    double scale = 1.0 / g;
    for (int a1 = 0; a1 < g; ++a1)
        for (int b1 = a1 + 1; b1 <= g; ++b1) {
            double width = (b1 - a1) * scale;
            for (int a2 = 0; a2 < g; ++a2)
                for (int b2 = a2 + 1; b2 <= g; ++b2) {
                    double count = pre[static_cast<std::size_t>(b1)][static_cast<std::size_t>(b2)] -
                                   pre[static_cast<std::size_t>(a1)][static_cast<std::size_t>(b2)] -
                                   pre[static_cast<std::size_t>(b1)][static_cast<std::size_t>(a2)] +
                                   pre[static_cast<std::size_t>(a1)][static_cast<std::size_t>(a2)];
                    double dev = std::abs(count / n - width * (b2 - a2) * scale);
                    if (dev > out.value) {
                        out.value = dev;
                        out.witness = {{a1 * scale, a2 * scale, 0},
                                       {b1 * scale, b2 * scale, 1},
                                       false};
                    }
                }
        }
    return out;
}

DiscrepancyValue dyadic_discrepancy_3d(const std::vector<std::array<double, 3>>& points, int k) {
    if (points.empty())
        throw UsageError("dyadic_discrepancy_3d: empty input");
    if (k < 1 || k > 5)
        throw ResourceError("dyadic_discrepancy_3d supports 1 <= k <= 5");
    int g = 1 << k;
    double n = static_cast<double>(points.size());
    auto idx = [g](int i, int j, int l) {
        return (static_cast<std::size_t>(i) * (g + 1) + j) * (g + 1) + l;
    };
    std::vector<double> pre(static_cast<std::size_t>(g + 1) * (g + 1) * (g + 1), 0.0);
    for (const auto& p : points) {
        require_unit(p[0]);
        require_unit(p[1]);
        require_unit(p[2]);
        pre[idx(dyadic_cell(p[0], k) + 1, dyadic_cell(p[1], k) + 1, dyadic_cell(p[2], k) + 1)] += 1.0;
    }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int l = 1; l <= g; ++l)
                pre[idx(i, j, l)] += pre[idx(i - 1, j, l)] + pre[idx(i, j - 1, l)] +
                                     pre[idx(i, j, l - 1)] - pre[idx(i - 1, j - 1, l)] -
                                     pre[idx(i - 1, j, l - 1)] - pre[idx(i, j - 1, l - 1)] +
                                     pre[idx(i - 1, j - 1, l - 1)];

    DiscrepancyValue out;
    double scale = 1.0 / g;
    std::vector<double> slab(static_cast<std::size_t>(g + 1) * (g + 1), 0.0);
    for (int a1 = 0; a1 < g; ++a1)
        for (int b1 = a1 + 1; b1 <= g; ++b1) {
            double w1 = (b1 - a1) * scale;
            for (int j = 0; j <= g; ++j)
                for (int l = 0; l <= g; ++l)
                    slab[static_cast<std::size_t>(j) * (g + 1) + l] =
                        pre[idx(b1, j, l)] - pre[idx(a1, j, l)];
            for (int a2 = 0; a2 < g; ++a2)
                for (int b2 = a2 + 1; b2 <= g; ++b2) {
                    double w12 = w1 * (b2 - a2) * scale;
                    const double* qb = &slab[static_cast<std::size_t>(b2) * (g + 1)];
                    const double* qa = &slab[static_cast<std::size_t>(a2) * (g + 1)];
                    for (int a3 = 0; a3 < g; ++a3)
                        for (int b3 = a3 + 1; b3 <= g; ++b3) {
                            double count = qb[b3] - qa[b3] - qb[a3] + qa[a3];
                            double dev = std::abs(count / n - w12 * (b3 - a3) * scale);
                            if (dev > out.value) {
                                out.value = dev;
                                out.witness = {{a1 * scale, a2 * scale, a3 * scale},
                                               {b1 * scale, b2 * scale, b3 * scale},
                                               false};
                            }
                        }
                }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

double brute_force_discrepancy_1d(const std::vector<double>& points, int grid, bool anchored) {
    if (points.empty())
        throw UsageError("brute_force_discrepancy_1d: empty input");
    if (grid < 1 || grid > 1 << 14)
        throw ResourceError("brute_force_discrepancy_1d grid out of range");
    double n = static_cast<double>(points.size());
    std::vector<double> prefix(static_cast<std::size_t>(grid) + 1, 0.0);
    for (double v : points) {
        require_unit(v);
        int c = std::clamp(static_cast<int>(std::floor(v * grid)), 0, grid - 1);
        prefix[static_cast<std::size_t>(c) + 1] += 1.0;
    }
    for (int i = 0; i < grid; ++i)
        prefix[static_cast<std::size_t>(i) + 1] += prefix[static_cast<std::size_t>(i)];
    double best = 0.0;
    for (int b = 1; b <= grid; ++b) {
        int a_max = anchored ? 0 : b - 1;
        for (int a = 0; a <= a_max; ++a) {
            double count = prefix[static_cast<std::size_t>(b)] - prefix[static_cast<std::size_t>(a)];
            best = std::max(best, std::abs(count / n - static_cast<double>(b - a) / grid));
        }
    }
    return best;
}

double brute_force_discrepancy_2d(const std::vector<std::array<double, 2>>& points, int grid,
                                  bool anchored) {
    if (points.empty())
        throw UsageError("brute_force_discrepancy_2d: empty input");
    if (grid < 1 || grid > (anchored ? 1 << 10 : 64))
        throw ResourceError("brute_force_discrepancy_2d grid out of range");
    double n = static_cast<double>(points.size());
    std::vector<std::vector<double>> pre(static_cast<std::size_t>(grid) + 1,
                                         std::vector<double>(static_cast<std::size_t>(grid) + 1, 0.0));
    for (const auto& p : points) {
        require_unit(p[0]);
        require_unit(p[1]);
        int cx = std::clamp(static_cast<int>(std::floor(p[0] * grid)), 0, grid - 1);
        int cy = std::clamp(static_cast<int>(std::floor(p[1] * grid)), 0, grid - 1);
        pre[static_cast<std::size_t>(cx) + 1][static_cast<std::size_t>(cy) + 1] += 1.0;
    }
    for (int i = 1; i <= grid; ++i)
        for (int j = 1; j <= grid; ++j)
            pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                pre[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] -
                pre[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    double best = 0.0;
    double scale = 1.0 / grid;
    for (int b1 = 1; b1 <= grid; ++b1)
        for (int b2 = 1; b2 <= grid; ++b2) {
            int a1_max = anchored ? 0 : b1 - 1;
            int a2_max = anchored ? 0 : b2 - 1;
            for (int a1 = 0; a1 <= a1_max; ++a1)
                for (int a2 = 0; a2 <= a2_max; ++a2) {
                    double count = pre[static_cast<std::size_t>(b1)][static_cast<std::size_t>(b2)] -
                                   pre[static_cast<std::size_t>(a1)][static_cast<std::size_t>(b2)] -
                                   pre[static_cast<std::size_t>(b1)][static_cast<std::size_t>(a2)] +
                                   pre[static_cast<std::size_t>(a1)][static_cast<std::size_t>(a2)];
                    double vol = (b1 - a1) * scale * (b2 - a2) * scale;
                    best = std::max(best, std::abs(count / n - vol));
                }
        }
    return best;
}

GrowthFit growth_fit(const std::vector<double>& ns, const std::vector<double>& ds, double p,
                     double log_base) {
    if (ns.size() != ds.size() || ns.empty())
        throw UsageError("growth_fit: need matching nonempty N and D lists");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 2.0)
            throw UsageError("growth_fit: N must be >= 2");
        if (i > 0 && ns[i] <= ns[i - 1])
            throw UsageError("growth_fit: N must be strictly increasing");
    }
    GrowthFit out;
    double lb = std::log(log_base);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        double logn = std::log(ns[i]) / lb;
        double c = ns[i] * ds[i] / std::pow(logn, p);
        out.c.push_back(c);
        out.max_c = std::max(out.max_c, c);
        if (c > 0.0)
            xs.push_back(std::log(std::log(ns[i]))), ys.push_back(std::log(c));
    }
    if (xs.size() >= 2) {
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - mx) * (ys[i] - my);
            den += (xs[i] - mx) * (xs[i] - mx);
        }
        out.slope = den > 0.0 ? num / den : 0.0;
    }
    return out;
}

} // namespace corput
