#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corput/bits.hpp"
#include "corput/errors.hpp"
#include "oracles.hpp"

using corput::BitString;
using corput::Gf2Matrix;

namespace {
BitString bits(const std::string& s) {
    BitString b(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1')
            b.set_bit(static_cast<int>(i) + 1, 1);
    return b;
}
} // namespace

TEST_CASE("xor is digitwise") {
    CHECK((bits("1010") ^ bits("0110")).to_string() == "1100");
    CHECK((bits("1011") ^ bits("0000")) == bits("1011"));
    CHECK((bits("1011") ^ bits("1011")) == bits("0000"));
    CHECK_THROWS_AS(bits("101") ^ bits("1010"), corput::UsageError);
}

TEST_CASE("xor group laws on random strings") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        BitString a(32), b(32), c(32);
        for (int i = 1; i <= 32; ++i) {
            a.set_bit(i, static_cast<int>(rng.next() & 1));
            b.set_bit(i, static_cast<int>(rng.next() & 1));
            c.set_bit(i, static_cast<int>(rng.next() & 1));
        }
        CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
        CHECK((a ^ b) == (b ^ a));
        CHECK((a ^ a) == BitString(32));
    }
}

TEST_CASE("shift drops the leading digit") {
    CHECK(bits("1100").shifted_left().to_string() == "1000");
    CHECK(bits("0000").shifted_left().to_string() == "0000");
    BitString s = bits("1111");
    for (int i = 0; i < 4; ++i)
        s = s.shifted_left();
    CHECK(s.to_string() == "0000");
    CHECK(s.known_digits() == 0);
}

TEST_CASE("prepend halves the value and restores a digit") {
    CHECK(bits("1000").prepended(1).to_string() == "1100");
    CHECK(bits("1000").prepended(1).to_unit() == doctest::Approx(0.75));
    CHECK(bits("0000").prepended(0).to_string() == "0000");

    // composition law holds exactly while no set digit is truncated away
    BitString x = bits("10100000");
    double v = x.to_unit();
    double composed = x.prepended(0).prepended(1).to_unit();
    CHECK(composed == doctest::Approx((1.0 + v / 2.0) / 2.0).epsilon(1e-12));

    // shift after prepend is the identity on stored digits
    for (int d : {0, 1}) {
        BitString y = x.prepended(d).shifted_left();
        CHECK(y.to_string() == x.to_string());
    }
}

TEST_CASE("unit conversions truncate") {
    CHECK(bits("101").to_unit() == doctest::Approx(0.625));
    CHECK(BitString::from_unit(0.5, 4).to_string() == "1000");
    BitString third = BitString::from_unit(1.0 / 3.0, 4);
    CHECK(third.to_string() == "0101");
    CHECK(third.to_unit() == doctest::Approx(0.3125));
    CHECK(std::abs(third.to_unit() - 1.0 / 3.0) < 1.0 / 16.0);
    CHECK_THROWS_AS(BitString::from_unit(1.0, 8), corput::UsageError);
    CHECK_THROWS_AS(BitString::from_unit(-0.1, 8), corput::UsageError);

    // round trip within 2^-P
    oracle::Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        double v = rng.unit();
        CHECK(std::abs(BitString::from_unit(v, 40).to_unit() - v) < 0x1.0p-40);
    }
}

TEST_CASE("to_unit is monotone in lexicographic digit order") {
    oracle::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        BitString a(16), b(16);
        for (int i = 1; i <= 16; ++i) {
            a.set_bit(i, static_cast<int>(rng.next() & 1));
            b.set_bit(i, static_cast<int>(rng.next() & 1));
        }
        if (a.to_string() < b.to_string())
            CHECK(a.to_unit() < b.to_unit());
        else if (b.to_string() < a.to_string())
            CHECK(b.to_unit() < a.to_unit());
    }
}

TEST_CASE("gf2 rank and determinant") {
    Gf2Matrix tri(2, 2);
    tri.set(0, 0, 1);
    tri.set(1, 0, 1);
    tri.set(1, 1, 1);
    CHECK(tri.rank() == 2);
    CHECK(tri.det() == 1);

    Gf2Matrix equal_rows(2, 2);
    equal_rows.set(0, 0, 1);
    equal_rows.set(0, 1, 1);
    equal_rows.set(1, 0, 1);
    equal_rows.set(1, 1, 1);
    CHECK(equal_rows.rank() == 1);
    CHECK(equal_rows.det() == 0);

    Gf2Matrix id(5, 5);
    for (int i = 0; i < 5; ++i)
        id.set(i, i, 1);
    CHECK(id.rank() == 5);
    CHECK(id.det() == 1);

    Gf2Matrix rect(2, 3);
    CHECK_THROWS_AS(rect.det(), corput::UsageError);
}

TEST_CASE("gf2 det agrees with permutation expansion, exhaustively to 4x4") {
    for (int n = 1; n <= 4; ++n) {
        int cells = n * n;
        for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
            Gf2Matrix m(n, n);
            for (int i = 0; i < cells; ++i)
                if ((mask >> i) & 1u)
                    m.set(i / n, i % n, 1);
            CAPTURE(n);
            CAPTURE(mask);
            REQUIRE(m.det() == oracle::gf2_det_permanent(m));
        }
    }
}

TEST_CASE("submatrix preserves label order") {
    Gf2Matrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m.set(i, j, (i + j) % 2);
    std::vector<int> rows{2, 0}, cols{1};
    Gf2Matrix sub = m.submatrix(rows, cols);
    CHECK(sub.rows() == 2);
    CHECK(sub.cols() == 1);
    CHECK(sub.get(0, 0) == m.get(2, 1));
    CHECK(sub.get(1, 0) == m.get(0, 1));

    std::vector<int> all{0, 1, 2};
    Gf2Matrix same = m.submatrix(all, all);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(same.get(i, j) == m.get(i, j));

    std::vector<int> bad{3};
    CHECK_THROWS_AS(m.submatrix(bad, all), corput::UsageError);
}
