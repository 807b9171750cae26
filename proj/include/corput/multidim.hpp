#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "corput/bits.hpp"

namespace corput {

// ---------------------------------------------------------------------------
// The shuffling sequence s1 = 101000100000001... (ones exactly at the
// positions 2^k - 1) and s0 = 000...

/// Digit p (1-based) of s1.
int s1_bit(int p);

/// BitString holding digits s1[shift+1 .. shift+precision].
BitString s1_prefix(int precision, int shift = 0);

/// TRUE iff the length-n prefixes of s1, theta s1, ..., theta^{n-1} s1 span
/// GF(2)^n (s0 being the zero of the group).
bool span_test_2d(int n);

// ---------------------------------------------------------------------------
// 2D construction F(x,y) = (theta x + s_{y1}, theta y + s_{x1}).

struct Point2D {
    BitString x{1}, y{1};
};

Point2D map2d_forward(const Point2D& p);

/// All 4^n preimages of base under F^n, ordered by the binary radical
/// inverse of the interleaved leading digits x1 y1 x2 y2 ...
std::vector<Point2D> map2d_level(const Point2D& base, int n,
                                 std::size_t budget = std::size_t{1} << 24);

/// Grid-resolution bijectivity of F^n from the rectangle
/// [alpha, alpha+2^{m-n}) x [beta, beta+2^{-n-m}) onto [0,1)^2:
/// representatives of the 2^-grid_k cells inside the rectangle must hit
/// every 2^-(grid_k-n) cell exactly once.  Requires m <= n and
/// grid_k >= n+m.
bool rect_image_test_2d(int n, int m, double alpha, double beta, int grid_k);

// ---------------------------------------------------------------------------
// 3D construction driven by the mixing matrix M.

/// The 30x12 GF(2) mixing matrix with rows x1,y1,z1,...,x10,y10,z10 and
/// columns x-1,y-1,z-1,...,x-4,y-4,z-4.
class MixMatrix {
public:
    static constexpr int kRows = 30;
    static constexpr int kCols = 12;
    static constexpr int kMaxLevel = 4; // column blocks cover 4 digit triples

    MixMatrix();

    int get(int row, int col) const { return m_.get(row, col); }
    const Gf2Matrix& matrix() const { return m_; }

    /// Row index for coordinate c in {0,1,2} (x,y,z) and digit j >= 1.
    static int row_index(int c, int j) { return 3 * (j - 1) + c; }
    /// Column index for coordinate c and column block j in 1..4.
    static int col_index(int c, int j) { return 3 * (j - 1) + c; }

    /// FNV-1a digest of the row-major bit table; guards the transcription.
    std::uint64_t checksum() const;
    static constexpr std::uint64_t kExpectedChecksum = 0x10994a1b178bbb1cULL;
    bool checksum_ok() const { return checksum() == kExpectedChecksum; }

    /// Minor of one of the two families, with coordinate roles permuted by
    /// perm (perm[0] is the role played by x, etc.):
    ///   family 1: rows {x_1..x_{n+m}} x cols {y_-1..y_-n, z_-1..z_-m}
    ///   family 2: rows {x_1..x_n, y_1..y_m} x cols {z_-1..z_-(n+m)}
    Gf2Matrix minor(int n, int m, const std::array<int, 3>& perm, int family) const;

    /// TRUE iff both families' minors are invertible over GF(2).
    bool minor_test(int n, int m, const std::array<int, 3>& perm) const;

private:
    Gf2Matrix m_;
};

const MixMatrix& mix_matrix();

struct Point3D {
    BitString x{1}, y{1}, z{1};
};

/// Level-n transformation: digit j of the output is digit n+j of the input
/// plus row c_j of M applied to the first n digit triples (latest first).
/// Levels beyond 4 are unsupported (the printed matrix block is exhausted).
Point3D map3d_forward(int n, const Point3D& p);

/// All 8^n preimages of base under the level-n map, ordered by the binary
/// radical inverse of the interleaved leading digits x1 y1 z1 x2 ...
std::vector<Point3D> map3d_level(const Point3D& base, int n,
                                 std::size_t budget = std::size_t{1} << 24);

/// Preimages of base under the composition F_n o ... o F_1 (an alternative
/// reading of the level structure, for comparison only; the point count is
/// 8^{n(n+1)/2} so only tiny n fit the budget).
std::vector<Point3D> map3d_level_composed(const Point3D& base, int n,
                                          std::size_t budget = std::size_t{1} << 24);

/// Grid-resolution bijectivity of F_k on a box of one of the two admissible
/// shapes (k >= n+m, k <= 4):
///   shape 1: sides 2^-(k+n+m), 2^-(k-n), 2^-(k-m)
///   shape 2: sides 2^-(k+n),   2^-(k+m), 2^-(k-n-m)
bool rect_image_test_3d(int k, int n, int m, int shape, double alpha, double beta, double gamma,
                        int grid_res);

} // namespace corput
