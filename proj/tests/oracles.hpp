#pragma once

// Independent reference implementations used only by tests.  These stay
// deliberately naive so that disagreement points at the library, not at the
// oracle.

#include <array>
#include <cstdint>
#include <vector>

#include "corput/bits.hpp"

namespace oracle {

/// Classic binary radical inverse of i >= 1.
inline double radical_inverse(std::uint64_t i) {
    double v = 0.0, base = 0.5;
    while (i) {
        if (i & 1)
            v += base;
        base *= 0.5;
        i >>= 1;
    }
    return v;
}

inline corput::BitString radical_inverse_bits(std::uint64_t i, int precision) {
    corput::BitString s(precision);
    int pos = 1;
    while (i && pos <= precision) {
        if (i & 1)
            s.set_bit(pos, 1);
        ++pos;
        i >>= 1;
    }
    return s;
}

/// GF(2) determinant by permutation expansion (Leibniz formula).
inline int gf2_det_permanent(const corput::Gf2Matrix& m) {
    int n = m.rows();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    int acc = 0;
    do {
        int prod = 1;
        for (int i = 0; i < n && prod; ++i)
            prod &= m.get(i, perm[static_cast<std::size_t>(i)]);
        acc ^= prod; // signs vanish mod 2
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// Integer matrix power (for transition-count checks).
inline std::vector<std::vector<std::int64_t>> mat_pow(const std::vector<std::vector<int>>& a,
                                                      int n) {
    std::size_t d = a.size();
    std::vector<std::vector<std::int64_t>> r(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        r[i][i] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<std::vector<std::int64_t>> t(d, std::vector<std::int64_t>(d, 0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j)
                    t[i][j] += r[i][k] * a[k][j];
        r = std::move(t);
    }
    return r;
}

/// xorshift generator for reproducible property tests.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

} // namespace oracle
