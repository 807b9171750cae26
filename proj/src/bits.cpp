#include "corput/bits.hpp"

#include <algorithm>
#include <cmath>

#include "corput/errors.hpp"

namespace corput {

namespace {
constexpr int kWordBits = 64;

inline int word_index(int i) { return (i - 1) / kWordBits; }
// Digit 1 sits in the MSB of word 0.
inline int bit_offset(int i) { return kWordBits - 1 - ((i - 1) % kWordBits); }
} // namespace

BitString::BitString(int precision) : precision_(precision), known_(precision) {
    if (precision < 1)
        throw UsageError("BitString precision must be >= 1");
    words_.assign((precision + kWordBits - 1) / kWordBits, 0);
}

void BitString::mask_tail() {
    int used = precision_ % kWordBits;
    if (used != 0)
        words_.back() &= ~std::uint64_t{0} << (kWordBits - used);
}

BitString BitString::from_unit(double v, int precision) {
    if (!(v >= 0.0) || v >= 1.0)
        throw UsageError("from_unit: value outside [0,1)");
    BitString s(precision);
    for (int i = 1; i <= precision; ++i) {
        v *= 2.0;
        if (v >= 1.0) {
            s.set_bit(i, 1);
            v -= 1.0;
        }
    }
    return s;
}

double BitString::to_unit() const {
    double v = 0.0;
    for (int j = static_cast<int>(words_.size()) - 1; j >= 0; --j)
        v = std::ldexp(v, -kWordBits) + static_cast<double>(words_[static_cast<std::size_t>(j)]);
    return std::ldexp(v, -kWordBits);
}

void BitString::set_known_digits(int k) {
    known_ = std::clamp(k, 0, precision_);
}

int BitString::bit(int i) const {
    if (i < 1 || i > precision_)
        throw UsageError("BitString::bit index out of range");
    return static_cast<int>((words_[static_cast<std::size_t>(word_index(i))] >> bit_offset(i)) & 1u);
}

void BitString::set_bit(int i, int value) {
    if (i < 1 || i > precision_)
        throw UsageError("BitString::set_bit index out of range");
    std::uint64_t mask = std::uint64_t{1} << bit_offset(i);
    auto& w = words_[static_cast<std::size_t>(word_index(i))];
    if (value & 1)
        w |= mask;
    else
        w &= ~mask;
}

BitString BitString::operator^(const BitString& other) const {
    if (precision_ != other.precision_)
        throw UsageError("BitString xor: precision mismatch");
    BitString out(precision_);
    for (std::size_t j = 0; j < words_.size(); ++j)
        out.words_[j] = words_[j] ^ other.words_[j];
    out.known_ = std::min(known_, other.known_);
    return out;
}

BitString BitString::shifted_left() const {
    BitString out(precision_);
    for (std::size_t j = 0; j < words_.size(); ++j) {
        std::uint64_t w = words_[j] << 1;
        if (j + 1 < words_.size())
            w |= words_[j + 1] >> (kWordBits - 1);
        out.words_[j] = w;
    }
    out.mask_tail();
    out.known_ = std::max(known_ - 1, 0);
    return out;
}

BitString BitString::prepended(int d) const {
    BitString out(precision_);
    std::uint64_t carry = (d & 1) ? ~std::uint64_t{0} : 0; // only MSB of carry used
    for (std::size_t j = 0; j < words_.size(); ++j) {
        out.words_[j] = (carry << (kWordBits - 1)) | (words_[j] >> 1);
        carry = words_[j] & 1u;
    }
    out.mask_tail();
    out.known_ = std::min(known_ + 1, precision_);
    return out;
}

std::uint64_t BitString::leading_bits(int k) const {
    if (k < 0 || k > precision_ || k > 63)
        throw UsageError("leading_bits: bad digit count");
    std::uint64_t out = 0;
    for (int i = 1; i <= k; ++i)
        out = (out << 1) | static_cast<std::uint64_t>(bit(i));
    return out;
}

bool BitString::operator==(const BitString& other) const {
    return precision_ == other.precision_ && words_ == other.words_;
}

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(precision_), '0');
    for (int i = 1; i <= precision_; ++i)
        if (bit(i))
            s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw UsageError("Gf2Matrix dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Gf2Matrix Gf2Matrix::submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const {
    for (int r : row_idx)
        if (r < 0 || r >= rows_)
            throw UsageError("submatrix: row index out of range");
    for (int c : col_idx)
        if (c < 0 || c >= cols_)
            throw UsageError("submatrix: column index out of range");
    Gf2Matrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j), get(row_idx[i], col_idx[j]));
    return out;
}

int Gf2Matrix::rank() const {
    std::vector<std::uint8_t> m = entries_;
    auto at = [&](int r, int c) -> std::uint8_t& { return m[static_cast<std::size_t>(r) * cols_ + c]; };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int c = 0; c < cols_; ++c)
                std::swap(at(pivot, c), at(rank, c));
        for (int r = 0; r < rows_; ++r)
            if (r != rank && at(r, col))
                for (int c = col; c < cols_; ++c)
                    at(r, c) ^= at(rank, c);
        ++rank;
    }
    return rank;
}

int Gf2Matrix::det() const {
    if (rows_ != cols_)
        throw UsageError("det: matrix is not square");
    return rank() == rows_ ? 1 : 0;
}

} // namespace corput
