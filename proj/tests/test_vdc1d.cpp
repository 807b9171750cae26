#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "corput/errors.hpp"
#include "corput/map_io.hpp"
#include "corput/spectral.hpp"
#include "corput/vdc1d.hpp"
#include "oracles.hpp"

using namespace corput;

TEST_CASE("doubling stream from one half is the classic sequence") {
    auto pts = vdc_take(doubling_map(), 0.5, 7);
    std::vector<double> expect{0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875};
    REQUIRE(pts.size() == expect.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pts[i] == expect[i]); // dyadic, so exact

    // and it agrees with the radical inverse for many more points
    auto many = vdc_take(doubling_map(), 0.5, 511);
    for (std::size_t i = 0; i < many.size(); ++i)
        CHECK(many[i] == oracle::radical_inverse(i + 1));
}

TEST_CASE("duplicates are emitted when the base is a fixed point") {
    auto pts = vdc_take(doubling_map(), 0.0, 7);
    std::vector<double> expect{0.0, 0.0, 0.5, 0.0, 0.5, 0.25, 0.75};
    REQUIRE(pts.size() == expect.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pts[i] == expect[i]);
}

TEST_CASE("golden mean stream skips words with the forbidden block") {
    PLMap g = golden_mean_map();
    VdcStream stream(g, 0.0);
    std::size_t count = 0;
    for (int i = 0; i < 1 + 2 + 3 + 5 + 8; ++i) { // levels 0..4 have Fibonacci sizes
        auto item = stream.next();
        for (std::size_t k = 0; k + 1 < item.word.size(); ++k)
            CHECK_FALSE((item.word[k] == 1 && item.word[k + 1] == 1));
        ++count;
    }
    auto bounds = stream.level_boundaries();
    REQUIRE(bounds.size() >= 4);
    CHECK(bounds[0] == 1);
    CHECK(bounds[1] == 3);
    CHECK(bounds[2] == 6);
    CHECK(bounds[3] == 11);
}

TEST_CASE("empty take and determinism") {
    CHECK(vdc_take(doubling_map(), 0.5, 0).empty());
    auto a = vdc_take(tent_map(), 0.3, 100);
    auto b = vdc_take(tent_map(), 0.3, 100);
    CHECK(a == b);
}

TEST_CASE("level sizes count admissible existing words") {
    PLMap d = doubling_map();
    VdcStream stream(d, 0.5);
    for (int i = 0; i < 1 + 2 + 4 + 8 + 16; ++i)
        stream.next();
    auto bounds = stream.level_boundaries();
    REQUIRE(bounds.size() >= 4);
    for (std::size_t l = 0; l < 4; ++l)
        CHECK(bounds[l] == (std::size_t{1} << (l + 1)) - 1);
}

TEST_CASE("level hit counts equal transfer-operator counts") {
    // #{level-n points in cell J} == (A^n)[J][cell(x)], an exact integer law
    for (const PLMap& map : {doubling_map(), golden_mean_map()}) {
        auto info = markov_structure(map);
        REQUIRE(info.markov);
        for (double x : {0.5, 0.3}) {
            VdcStream stream(map, x);
            stream.next(); // epsilon
            for (int n = 1; n <= 10; ++n) {
                std::vector<std::int64_t> hits(static_cast<std::size_t>(map.alphabet_size()), 0);
                std::size_t level_size = 0;
                for (const Word& w : words_of_length(map, n))
                    if (auto p = point_of_wx(map, w, x)) {
                        ++hits[static_cast<std::size_t>(map.cell_of(*p))];
                        ++level_size;
                    }
                for (int cell = 0; cell < map.alphabet_size(); ++cell) {
                    std::vector<std::int64_t> ind(static_cast<std::size_t>(map.alphabet_size()), 0);
                    ind[static_cast<std::size_t>(cell)] = 1;
                    auto counts = pf_apply_counts(info.transitions, ind, n);
                    CHECK(hits[static_cast<std::size_t>(cell)] ==
                          counts[static_cast<std::size_t>(map.cell_of(x))]);
                }
            }
        }
    }
}

TEST_CASE("base point validation") {
    CHECK_THROWS_AS(VdcStream(doubling_map(), 1.0), UsageError);
    CHECK_THROWS_AS(VdcStream(doubling_map(), -0.25), UsageError);
}
