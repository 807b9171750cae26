#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corput/errors.hpp"
#include "corput/interval_map.hpp"
#include "corput/map_io.hpp"
#include "oracles.hpp"

using namespace corput;

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("validate accepts the canonical maps") {
    PLMap d = doubling_map();
    CHECK(d.beta() == doctest::Approx(2.0));
    CHECK(d.xi() == doctest::Approx(std::log(2.0)));

    PLMap t = tent_map();
    CHECK(t.branch(0).sign == +1);
    CHECK(t.branch(1).sign == -1);

    CHECK(golden_mean_map().beta() == doctest::Approx(kPhi));
}

TEST_CASE("validate rejects malformed branch lists") {
    // mixed slopes
    CHECK_THROWS_AS(PLMap::validated({{0.0, 0.5, +1, 2.0, 0.0, 1.0}, {0.5, 1.0, +1, 3.0, 0.0, 1.0}}),
                    UsageError);
    // not expanding
    CHECK_THROWS_AS(PLMap::validated({{0.0, 1.0, +1, 1.0, 0.0, 1.0}}), UsageError);
    // gap in the partition
    CHECK_THROWS_AS(PLMap::validated({{0.0, 0.4, +1, 2.0, 0.0, 0.8}, {0.5, 1.0, +1, 2.0, 0.0, 1.0}}),
                    UsageError);
    // image escapes [0,1]
    CHECK_THROWS_AS(PLMap::validated({{0.0, 0.5, +1, 2.2, 0.0, 1.1}, {0.5, 1.0, +1, 2.2, 0.0, 1.1}}),
                    UsageError);
    // affinity broken
    CHECK_THROWS_AS(PLMap::validated({{0.0, 0.5, +1, 2.0, 0.0, 0.9}, {0.5, 1.0, +1, 2.0, 0.0, 1.0}}),
                    UsageError);
}

TEST_CASE("markov structure of the standard maps") {
    MarkovInfo d = markov_structure(doubling_map());
    REQUIRE(d.markov);
    CHECK(d.transitions.a == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
    CHECK(d.non_markov_count == 0);

    MarkovInfo g = markov_structure(golden_mean_map());
    REQUIRE(g.markov);
    CHECK(g.transitions.a == std::vector<std::vector<int>>{{1, 1}, {1, 0}});

    MarkovInfo b = markov_structure(beta_map(1.9));
    CHECK_FALSE(b.markov);
    CHECK(b.non_markov_count == 1);
    int non_markov_seen = 0;
    for (const auto& e : b.endpoints)
        if (!e.markov) {
            ++non_markov_seen;
            CHECK(e.value == doctest::Approx(1.0));
            CHECK(e.side == +1);
        }
    CHECK(non_markov_seen == 1);
}

TEST_CASE("expansion follows branch itineraries") {
    CHECK(expansion(doubling_map(), 5.0 / 8.0, 3) == Word{1, 0, 1});
    CHECK(expansion(golden_mean_map(), 0.0, 4) == Word{0, 0, 0, 0});
    CHECK(expansion(tent_map(), 0.75, 2) == Word{1, 1});
}

TEST_CASE("branch inverses") {
    PLMap d = doubling_map();
    auto y = d.branch_inverse(1, 0.25);
    REQUIRE(y);
    CHECK(*y == doctest::Approx(0.625));

    PLMap t = tent_map();
    auto z = t.branch_inverse(1, 0.5);
    REQUIRE(z);
    CHECK(*z == doctest::Approx(0.75));

    CHECK_FALSE(golden_mean_map().branch_inverse(1, 0.9).has_value());
}

TEST_CASE("point_of_wx composes inverse branches") {
    PLMap d = doubling_map();
    auto p = point_of_wx(d, Word{1, 0}, 0.5);
    REQUIRE(p);
    CHECK(*p == doctest::Approx(0.625));

    auto q = point_of_wx(d, Word{}, 0.37);
    REQUIRE(q);
    CHECK(*q == 0.37);

    CHECK_FALSE(point_of_wx(golden_mean_map(), Word{1, 1}, 0.0).has_value());
}

TEST_CASE("point_of_wx satisfies the word and image contracts") {
    oracle::Rng rng(5);
    for (const PLMap& map : {doubling_map(), tent_map(), golden_mean_map()}) {
        for (int n = 1; n <= 8; ++n) {
            double x = rng.unit();
            for (const Word& w : words_of_length(map, n)) {
                auto p = point_of_wx(map, w, x);
                if (!p)
                    continue;
                CHECK(expansion(map, *p, n) == w);
                double fwd = *p;
                for (int i = 0; i < n; ++i)
                    fwd = map.step(fwd);
                double tol = 2.0 * std::pow(map.beta(), n) * 1e-15;
                CHECK(std::abs(fwd - x) <= tol + 1e-12);
            }
        }
    }
}

TEST_CASE("word order matches the listed sequences") {
    PLMap d = doubling_map();
    auto w2 = words_of_length(d, 2);
    REQUIRE(w2.size() == 4);
    CHECK(w2[0] == Word{0, 0});
    CHECK(w2[1] == Word{1, 0});
    CHECK(w2[2] == Word{0, 1});
    CHECK(w2[3] == Word{1, 1});

    // epsilon precedes every length-1 word
    CHECK(word_less(d, Word{}, Word{0}));
    CHECK(word_less(d, Word{}, Word{1}));

    PLMap t = tent_map();
    CHECK(word_less(t, Word{0, 0}, Word{1, 0}));  // suffix "0" has sign +1
    CHECK(word_less(t, Word{1, 1}, Word{0, 1}));  // suffix "1" has sign -1, order flips
}

TEST_CASE("word order is a strict total order") {
    oracle::Rng rng(17);
    for (const PLMap& map : {tent_map(), golden_mean_map()}) {
        for (int n : {3, 5, 8}) {
            auto words = words_of_length(map, n);
            for (int t = 0; t < 300; ++t) {
                const Word& a = words[static_cast<std::size_t>(rng.below(static_cast<int>(words.size())))];
                const Word& b = words[static_cast<std::size_t>(rng.below(static_cast<int>(words.size())))];
                const Word& c = words[static_cast<std::size_t>(rng.below(static_cast<int>(words.size())))];
                if (a != b)
                    CHECK(word_less(map, a, b) != word_less(map, b, a));
                else
                    CHECK_FALSE(word_less(map, a, b));
                if (word_less(map, a, b) && word_less(map, b, c))
                    CHECK(word_less(map, a, c));
            }
        }
    }
}

TEST_CASE("word counts match transition-matrix path counts") {
    PLMap g = golden_mean_map();
    auto info = markov_structure(g);
    REQUIRE(info.markov);

    CHECK(words_of_length(g, 0).size() == 1);
    CHECK(words_of_length(g, 3).size() == 5); // Fibonacci

    for (int n = 2; n <= 10; ++n) {
        auto pow = oracle::mat_pow(info.transitions.a, n - 1);
        std::int64_t expected = 0;
        for (const auto& row : pow)
            for (std::int64_t v : row)
                expected += v;
        CHECK(static_cast<std::int64_t>(words_of_length(g, n).size()) == expected);
    }
}

TEST_CASE("admissibility equals transition-admissibility for Markov maps") {
    for (const PLMap& map : {doubling_map(), tent_map(), golden_mean_map()}) {
        auto info = markov_structure(map);
        REQUIRE(info.markov);
        for (int n = 1; n <= 10; ++n) {
            auto level = words_of_length(map, n);
            for (const Word& w : level) {
                bool path_ok = true;
                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                    path_ok = path_ok && info.transitions.a[static_cast<std::size_t>(w[i])]
                                                           [static_cast<std::size_t>(w[i + 1])] == 1;
                CHECK(path_ok);
            }
            // count equals the number of admissible paths
            std::int64_t paths = static_cast<std::int64_t>(map.alphabet_size());
            if (n >= 2) {
                auto pow = oracle::mat_pow(info.transitions.a, n - 1);
                paths = 0;
                for (const auto& row : pow)
                    for (std::int64_t v : row)
                        paths += v;
            }
            CHECK(static_cast<std::int64_t>(level.size()) == paths);
        }
    }
}

TEST_CASE("cylinders obey the affine length law") {
    for (const PLMap& map : {doubling_map(), tent_map(), golden_mean_map()}) {
        for (int n = 1; n <= 8; ++n)
            for (const Word& w : words_of_length(map, n)) {
                auto cyl = cylinder(map, w);
                REQUIRE(cyl);
                // |<w>| = beta^-n * |F^n(<w>)|; for full-branch maps the
                // image is the last branch's image interval
                double width = cyl->second - cyl->first;
                CHECK(width > 0.0);
                CHECK(width <= std::pow(map.beta(), -n) + 1e-12);
            }
    }
    // full-branch maps: |<w>| = beta^-|w| exactly
    PLMap d = doubling_map();
    for (const Word& w : words_of_length(d, 6)) {
        auto cyl = cylinder(d, w);
        REQUIRE(cyl);
        CHECK(cyl->second - cyl->first == doctest::Approx(std::pow(2.0, -6)).epsilon(1e-12));
    }
}

TEST_CASE("level budget guard") {
    CHECK_THROWS_AS(words_of_length(doubling_map(), 30, 1000), ResourceError);
}
