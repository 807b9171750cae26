#include "corput/multidim.hpp"

#include <algorithm>
#include <cmath>

#include "corput/errors.hpp"

namespace corput {

int s1_bit(int p) {
    if (p < 1)
        throw UsageError("s1 digits are 1-based");
    // Ones exactly at positions 2^k - 1.
    unsigned q = static_cast<unsigned>(p) + 1u;
    return (q & (q - 1u)) == 0u ? 1 : 0;
}

BitString s1_prefix(int precision, int shift) {
    BitString s(precision);
    for (int i = 1; i <= precision; ++i)
        if (s1_bit(shift + i))
            s.set_bit(i, 1);
    return s;
}

bool span_test_2d(int n) {
    if (n < 1)
        throw UsageError("span_test_2d needs n >= 1");
    Gf2Matrix rows(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            rows.set(i, j - 1, s1_bit(i + j));
    return rows.rank() == n;
}

Point2D map2d_forward(const Point2D& p) {
    if (p.x.precision() != p.y.precision())
        throw UsageError("2D point coordinates must share the precision");
    if (p.x.precision() < 2)
        throw UsageError("map2d_forward needs precision >= 2");
    int prec = p.x.precision();
    int x1 = p.x.bit(1), y1 = p.y.bit(1);
    BitString zero(prec);
    zero.set_known_digits(prec);
    Point2D out;
    out.x = p.x.shifted_left() ^ (y1 ? s1_prefix(prec) : zero);
    out.y = p.y.shifted_left() ^ (x1 ? s1_prefix(prec) : zero);
    int known = std::max(0, std::min(p.x.known_digits(), p.y.known_digits()) - 1);
    out.x.set_known_digits(known);
    out.y.set_known_digits(known);
    return out;
}

namespace {

std::uint64_t interleaved_key_2d(const Point2D& p, int n) {
    std::uint64_t key = 0;
    for (int i = 1; i <= n; ++i) {
        key |= static_cast<std::uint64_t>(p.x.bit(i)) << (2 * (i - 1));
        key |= static_cast<std::uint64_t>(p.y.bit(i)) << (2 * (i - 1) + 1);
    }
    return key;
}

BitString cell_corner_bits(std::uint64_t idx, int k, int precision) {
    BitString s(precision);
    for (int i = 1; i <= k; ++i)
        if ((idx >> (k - i)) & 1u)
            s.set_bit(i, 1);
    return s;
}

std::uint64_t dyadic_index(double v, int k) {
    double scaled = std::ldexp(v, k);
    double snapped = std::round(scaled);
    if (std::abs(scaled - snapped) > 1e-9)
        throw UsageError("corner is not aligned to the 2^-k grid");
    return static_cast<std::uint64_t>(snapped);
}

} // namespace

std::vector<Point2D> map2d_level(const Point2D& base, int n, std::size_t budget) {
    if (n < 0)
        throw UsageError("level must be >= 0");
    if (base.x.precision() != base.y.precision())
        throw UsageError("2D point coordinates must share the precision");
    std::size_t count = std::size_t{1} << (2 * n);
    if (2 * n >= 62 || count > budget)
        throw ResourceError("2D level of 4^" + std::to_string(n) + " points exceeds the budget");

    int prec = base.x.precision();
    BitString zero(prec);
    BitString s1 = s1_prefix(prec);
    std::vector<Point2D> level{base};
    for (int step = 0; step < n; ++step) {
        std::vector<Point2D> next;
        next.reserve(level.size() * 4);
        for (const Point2D& p : level)
            for (int dx = 0; dx <= 1; ++dx)
                for (int dy = 0; dy <= 1; ++dy) {
                    Point2D q;
                    q.x = (p.x ^ (dy ? s1 : zero)).prepended(dx);
                    q.y = (p.y ^ (dx ? s1 : zero)).prepended(dy);
                    next.push_back(std::move(q));
                }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [&](const Point2D& a, const Point2D& b) {
        return interleaved_key_2d(a, n) < interleaved_key_2d(b, n);
    });
    return level;
}

bool rect_image_test_2d(int n, int m, double alpha, double beta, int grid_k) {
    if (n < 1 || m < 0 || m > n)
        throw UsageError("rect_image_test_2d needs 0 <= m <= n, n >= 1");
    if (grid_k < n + m)
        throw UsageError("rect_image_test_2d needs grid_k >= n+m (cells must fit the box)");
    if (2 * (grid_k - n) > 26 || grid_k > 26)
        throw ResourceError("rect_image_test_2d: grid_k - n too large for the hit table");
    std::uint64_t ax = dyadic_index(alpha, grid_k);
    std::uint64_t by = dyadic_index(beta, grid_k);
    std::uint64_t wx = std::uint64_t{1} << (grid_k - (n - m)); // cells along x
    std::uint64_t wy = std::uint64_t{1} << (grid_k - (n + m)); // cells along y
    std::uint64_t grid = std::uint64_t{1} << grid_k;
    if (ax + wx > grid || by + wy > grid)
        throw UsageError("rectangle leaves [0,1)^2");

    int out_k = grid_k - n;
    std::vector<char> hit(std::size_t{1} << (2 * out_k), 0);
    const int prec = 64;
    for (std::uint64_t i = 0; i < wx; ++i)
        for (std::uint64_t j = 0; j < wy; ++j) {
            Point2D p{cell_corner_bits(ax + i, grid_k, prec), cell_corner_bits(by + j, grid_k, prec)};
            for (int step = 0; step < n; ++step)
                p = map2d_forward(p);
            std::uint64_t cell = (p.x.leading_bits(out_k) << out_k) | p.y.leading_bits(out_k);
            if (hit[cell])
                return false;
            hit[cell] = 1;
        }
    for (char h : hit)
        if (!h)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// 3D mixing matrix.

namespace {
// Rows x1,y1,z1,...,x10,y10,z10; columns x-1,y-1,z-1,...,x-4,y-4,z-4.
constexpr const char* kMixRows[MixMatrix::kRows] = {
    "011010010001", // x1
    "101001001100", // y1
    "110100100010", // z1
    "010001010010", // x2
    "001100001001", // y2
    "100010100100", // z2
    "010010001010", // x3
    "001001100001", // y3
    "100100010100", // z3
    "000001010001", // x4
    "000100001100", // y4
    "000010100010", // z4
    "000010010011", // x5
    "000001001101", // y5
    "000100100110", // z5
    "000000010001", // x6
    "000000001100", // y6
    "000000100010", // z6
    "000000010010", // x7
    "000000001001", // y7
    "000000100100", // z7
    "000000000010", // x8
    "000000000001", // y8
    "000000000100", // z8
    "000000000001", // x9
    "000000000100", // y9
    "000000000010", // z9
    "000000000000", // x10
    "000000000000", // y10
    "000000000000", // z10
};
} // namespace

MixMatrix::MixMatrix() : m_(kRows, kCols) {
    for (int r = 0; r < kRows; ++r)
        for (int c = 0; c < kCols; ++c)
            m_.set(r, c, kMixRows[r][c] == '1' ? 1 : 0);
}

std::uint64_t MixMatrix::checksum() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int r = 0; r < kRows; ++r)
        for (int c = 0; c < kCols; ++c) {
            h ^= static_cast<std::uint64_t>(m_.get(r, c) ? '1' : '0');
            h *= 0x100000001b3ULL;
        }
    return h;
}

const MixMatrix& mix_matrix() {
    static const MixMatrix m;
    return m;
}

Gf2Matrix MixMatrix::minor(int n, int m, const std::array<int, 3>& perm, int family) const {
    if (n < 0 || m < 0 || n + m < 1 || n + m > kMaxLevel)
        throw UsageError("minor needs 1 <= n+m <= 4");
    std::vector<int> rows, cols;
    if (family == 1) {
        for (int j = 1; j <= n + m; ++j)
            rows.push_back(row_index(perm[0], j));
        for (int j = 1; j <= n; ++j)
            cols.push_back(col_index(perm[1], j));
        for (int j = 1; j <= m; ++j)
            cols.push_back(col_index(perm[2], j));
    } else if (family == 2) {
        for (int j = 1; j <= n; ++j)
            rows.push_back(row_index(perm[0], j));
        for (int j = 1; j <= m; ++j)
            rows.push_back(row_index(perm[1], j));
        for (int j = 1; j <= n + m; ++j)
            cols.push_back(col_index(perm[2], j));
    } else {
        throw UsageError("minor family must be 1 or 2");
    }
    return m_.submatrix(rows, cols);
}

bool MixMatrix::minor_test(int n, int m, const std::array<int, 3>& perm) const {
    return minor(n, m, perm, 1).det() == 1 && minor(n, m, perm, 2).det() == 1;
}

// ---------------------------------------------------------------------------
// 3D transformation.

Point3D map3d_forward(int n, const Point3D& p) {
    if (n < 1 || n > MixMatrix::kMaxLevel)
        throw UsageError("map3d_forward: level must be in 1..4 (matrix block exhausted)");
    int prec = p.x.precision();
    if (p.y.precision() != prec || p.z.precision() != prec)
        throw UsageError("3D point coordinates must share the precision");
    if (prec <= n)
        throw UsageError("precision too small for the requested level");

    const MixMatrix& M = mix_matrix();
    // v holds the first n digit triples, latest digit first.
    std::array<int, 12> v{};
    for (int j = 1; j <= n; ++j) {
        int digit = n - j + 1;
        v[static_cast<std::size_t>(MixMatrix::col_index(0, j))] = p.x.bit(digit);
        v[static_cast<std::size_t>(MixMatrix::col_index(1, j))] = p.y.bit(digit);
        v[static_cast<std::size_t>(MixMatrix::col_index(2, j))] = p.z.bit(digit);
    }
    std::array<int, MixMatrix::kRows> mv{};
    for (int r = 0; r < MixMatrix::kRows; ++r) {
        int acc = 0;
        for (int c = 0; c < MixMatrix::kCols; ++c)
            acc ^= M.get(r, c) & v[static_cast<std::size_t>(c)];
        mv[static_cast<std::size_t>(r)] = acc;
    }

    Point3D out{BitString(prec), BitString(prec), BitString(prec)};
    BitString* coords[3] = {&out.x, &out.y, &out.z};
    const BitString* in[3] = {&p.x, &p.y, &p.z};
    for (int c = 0; c < 3; ++c) {
        for (int j = 1; j + n <= prec; ++j) {
            int bit = in[c]->bit(j + n);
            if (j <= 10)
                bit ^= mv[static_cast<std::size_t>(MixMatrix::row_index(c, j))];
            coords[c]->set_bit(j, bit);
        }
    }
    int known = std::max(0, std::min({p.x.known_digits(), p.y.known_digits(), p.z.known_digits()}) - n);
    out.x.set_known_digits(known);
    out.y.set_known_digits(known);
    out.z.set_known_digits(known);
    return out;
}

std::vector<Point3D> map3d_level(const Point3D& base, int n, std::size_t budget) {
    if (n < 0 || n > MixMatrix::kMaxLevel)
        throw UsageError("map3d_level: level must be in 0..4 (matrix block exhausted)");
    if (n == 0)
        return {base};
    int prec = base.x.precision();
    if (base.y.precision() != prec || base.z.precision() != prec)
        throw UsageError("3D point coordinates must share the precision");
    std::size_t count = std::size_t{1} << (3 * n);
    if (count > budget)
        throw ResourceError("3D level of 8^" + std::to_string(n) + " points exceeds the budget");

    const MixMatrix& M = mix_matrix();
    std::vector<Point3D> level;
    level.reserve(count);
    // The chosen leading digits are the point's own leading digits, so
    // iterating the interleaved radical-inverse key directly emits in order.
    for (std::uint64_t key = 0; key < count; ++key) {
        Point3D q{BitString(prec), BitString(prec), BitString(prec)};
        std::array<int, 12> v{};
        for (int i = 1; i <= n; ++i) {
            int dx = static_cast<int>((key >> (3 * (i - 1))) & 1u);
            int dy = static_cast<int>((key >> (3 * (i - 1) + 1)) & 1u);
            int dz = static_cast<int>((key >> (3 * (i - 1) + 2)) & 1u);
            q.x.set_bit(i, dx);
            q.y.set_bit(i, dy);
            q.z.set_bit(i, dz);
            int block = n - i + 1; // digit i sits in column block n-i+1
            v[static_cast<std::size_t>(MixMatrix::col_index(0, block))] = dx;
            v[static_cast<std::size_t>(MixMatrix::col_index(1, block))] = dy;
            v[static_cast<std::size_t>(MixMatrix::col_index(2, block))] = dz;
        }
        std::array<int, MixMatrix::kRows> mv{};
        for (int r = 0; r < MixMatrix::kRows; ++r) {
            int acc = 0;
            for (int c = 0; c < MixMatrix::kCols; ++c)
                acc ^= M.get(r, c) & v[static_cast<std::size_t>(c)];
            mv[static_cast<std::size_t>(r)] = acc;
        }
        BitString* coords[3] = {&q.x, &q.y, &q.z};
        const BitString* in[3] = {&base.x, &base.y, &base.z};
        for (int c = 0; c < 3; ++c)
            for (int j = 1; j + n <= prec; ++j) {
                int bit = in[c]->bit(j);
                if (j <= 10)
                    bit ^= mv[static_cast<std::size_t>(MixMatrix::row_index(c, j))];
                coords[c]->set_bit(j + n, bit);
            }
        int known = std::min(n + std::min({base.x.known_digits(), base.y.known_digits(),
                                           base.z.known_digits()}),
                             prec);
        q.x.set_known_digits(known);
        q.y.set_known_digits(known);
        q.z.set_known_digits(known);
        level.push_back(std::move(q));
    }
    return level;
}

std::vector<Point3D> map3d_level_composed(const Point3D& base, int n, std::size_t budget) {
    if (n < 0 || n > MixMatrix::kMaxLevel)
        throw UsageError("map3d_level_composed: level must be in 0..4");
    std::vector<Point3D> set{base};
    // F_n o ... o F_1 applied first-to-last means inverting F_n first.
    for (int j = n; j >= 1; --j) {
        std::vector<Point3D> next;
        std::size_t factor = std::size_t{1} << (3 * j);
        if (set.size() * factor > budget)
            throw ResourceError("composed 3D level exceeds the budget");
        next.reserve(set.size() * factor);
        for (const Point3D& p : set)
            for (Point3D& q : map3d_level(p, j, budget))
                next.push_back(std::move(q));
        set = std::move(next);
    }
    return set;
}

bool rect_image_test_3d(int k, int n, int m, int shape, double alpha, double beta, double gamma,
                        int grid_res) {
    if (k < 1 || k > MixMatrix::kMaxLevel || n < 0 || m < 0 || k < n + m)
        throw UsageError("rect_image_test_3d needs 1 <= k <= 4 and k >= n+m");
    if (shape != 1 && shape != 2)
        throw UsageError("shape must be 1 or 2");
    int ex, ey, ez; // side exponents: side_i = 2^-e_i
    if (shape == 1) {
        ex = k + n + m;
        ey = k - n;
        ez = k - m;
    } else {
        ex = k + n;
        ey = k + m;
        ez = k - n - m;
    }
    if (grid_res < std::max({ex, ey, ez}) || grid_res > 10)
        throw UsageError("grid_res must cover the smallest box side (and stay <= 10)");

    std::uint64_t ax = dyadic_index(alpha, grid_res);
    std::uint64_t ay = dyadic_index(beta, grid_res);
    std::uint64_t az = dyadic_index(gamma, grid_res);
    std::uint64_t wx = std::uint64_t{1} << (grid_res - ex);
    std::uint64_t wy = std::uint64_t{1} << (grid_res - ey);
    std::uint64_t wz = std::uint64_t{1} << (grid_res - ez);
    std::uint64_t grid = std::uint64_t{1} << grid_res;
    if (ax + wx > grid || ay + wy > grid || az + wz > grid)
        throw UsageError("box leaves [0,1)^3");

    int out_k = grid_res - k;
    std::vector<char> hit(std::size_t{1} << (3 * out_k), 0);
    const int prec = 64;
    for (std::uint64_t i = 0; i < wx; ++i)
        for (std::uint64_t j = 0; j < wy; ++j)
            for (std::uint64_t l = 0; l < wz; ++l) {
                Point3D p{cell_corner_bits(ax + i, grid_res, prec),
                          cell_corner_bits(ay + j, grid_res, prec),
                          cell_corner_bits(az + l, grid_res, prec)};
                Point3D q = map3d_forward(k, p);
                std::uint64_t cell = (q.x.leading_bits(out_k) << (2 * out_k)) |
                                     (q.y.leading_bits(out_k) << out_k) | q.z.leading_bits(out_k);
                if (hit[cell])
                    return false;
                hit[cell] = 1;
            }
    for (char h : hit)
        if (!h)
            return false;
    return true;
}

} // namespace corput
