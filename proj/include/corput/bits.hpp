#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace corput {

/// Fixed-precision binary expansion of a point in [0,1).
///
/// Digit 1 is the most significant stored digit (the coefficient of 2^-1).
/// Every operation is by value; the represented number always stays in
/// [0,1). A string additionally tracks how many leading digits are still
/// reliable: shifting left discards one reliable digit, prepending restores
/// one. Digits past the reliable count are stored (as zeros unless set) but
/// should not be trusted by consumers that demand exactness.
class BitString {
public:
    explicit BitString(int precision);

    /// Truncating conversion (never rounds): dyadic rationals that fit the
    /// precision are represented exactly.  v must lie in [0,1).
    static BitString from_unit(double v, int precision);

    double to_unit() const;

    int precision() const { return precision_; }
    int known_digits() const { return known_; }
    void set_known_digits(int k);

    int bit(int i) const; // 1-based
    void set_bit(int i, int value);

    /// Digitwise XOR; both operands must share the precision.
    BitString operator^(const BitString& other) const;

    /// Shift one digit to the left; the vacated last digit is zero and the
    /// reliable-digit count drops by one.
    BitString shifted_left() const;

    /// Insert d as the new first digit; the old last digit is discarded.
    /// Value becomes (d + value)/2.
    BitString prepended(int d) const;

    /// First k digits as an integer (digit 1 = most significant bit).
    std::uint64_t leading_bits(int k) const;

    bool operator==(const BitString& other) const;
    bool operator!=(const BitString& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<std::uint64_t> words_;
    int precision_ = 0;
    int known_ = 0;

    void mask_tail();
};

/// Dense matrix over GF(2).
class Gf2Matrix {
public:
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int get(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { entries_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(v & 1); }

    /// Minor addressed by row/column index lists, preserving list order.
    Gf2Matrix submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const;

    int rank() const;

    /// Determinant over GF(2); defined for square matrices only.
    int det() const;

private:
    int rows_, cols_;
    std::vector<std::uint8_t> entries_;
};

} // namespace corput
