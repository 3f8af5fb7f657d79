#include <catch2/catch_amalgamated.hpp>

#include "sumcard/error.hpp"
#include "sumcard/random.hpp"
#include "sumcard/sumset.hpp"
#include "test_util.hpp"

using namespace sumcard;

TEST_CASE("sumset layers for a small interval") {
    PointSet a = make_point_set(1, {{0}, {1}, {3}});
    std::vector<SumsetLayer> layers = sumset_layers(a, 4, Budget{});
    REQUIRE(layers.size() == 5);
    CHECK(layers[0].points == std::vector<Point>{{0}});
    CHECK(layers[1].points == std::vector<Point>{{0}, {1}, {3}});
    CHECK(layers[2].points == std::vector<Point>{{0}, {1}, {2}, {3}, {4}, {6}});
    CHECK(layers[3].points.size() == 9);
    CHECK(layers[4].points.size() == 12);
    CHECK(layers[3].contains({5}));
    CHECK_FALSE(layers[3].contains({8}));
    CHECK(layers[3].contains({9}));

    for (const auto& layer : layers)
        CHECK(std::is_sorted(layer.points.begin(), layer.points.end()));
}

TEST_CASE("layers match the multiset oracle") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        int dim = 1 + static_cast<int>(rng.uniform_int(0, 2));
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < dim + 2) {
            Point p = sample_point(rng, dim, 3);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        PointSet a = make_point_set(dim, pts);
        std::vector<SumsetLayer> layers = sumset_layers(a, 5, Budget{});
        for (int h = 0; h <= 5; ++h) CHECK(layers[h].points == testutil::multiset_sumset(a, h));
    }
}

TEST_CASE("singleton set stays a singleton") {
    PointSet a = make_point_set(2, {{3, -1}});
    std::vector<Int> seq = cardinality_sequence(a, 6, Budget{});
    for (const Int& v : seq) CHECK(v == 1);
    CHECK(iterated_sumset(a, 5, Budget{}) == std::vector<Point>{{15, -5}});
}

TEST_CASE("unit simplex cardinalities follow the simplex numbers") {
    for (int d = 1; d <= 4; ++d) {
        std::vector<Point> pts(1, Point(d, 0));
        for (int i = 0; i < d; ++i) {
            Point e(d, 0);
            e[i] = 1;
            pts.push_back(e);
        }
        PointSet a = make_point_set(d, pts);
        std::vector<Int> seq = cardinality_sequence(a, 6, Budget{});
        for (int h = 0; h <= 6; ++h) {
            // hA is every lattice point of the dilated simplex
            CHECK(seq[h] == binomial(h + d, d));
        }
    }
}

TEST_CASE("cardinality_sequence agrees with sumset_layers") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        int dim = 1 + static_cast<int>(rng.uniform_int(0, 2));
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < dim + 3) {
            Point p = sample_point(rng, dim, 4);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        PointSet a = make_point_set(dim, pts);
        std::vector<Int> seq = cardinality_sequence(a, 6, Budget{});
        std::vector<SumsetLayer> layers = sumset_layers(a, 6, Budget{});
        REQUIRE(seq.size() == layers.size());
        for (std::size_t h = 0; h < seq.size(); ++h)
            CHECK(seq[h] == static_cast<std::int64_t>(layers[h].points.size()));
    }
}

TEST_CASE("cardinalities are invariant under translation and unimodular maps") {
    SplitMix64 rng(33);
    PointSet a = make_point_set(2, {{0, 0}, {1, 0}, {2, 1}, {0, 1}});
    std::vector<Int> base = cardinality_sequence(a, 8, Budget{});
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix u = testutil::random_unimodular(rng, 2);
        PointSet moved = testutil::translate_set(testutil::transform_set(u, a),
                                                 {rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)});
        CHECK(cardinality_sequence(moved, 8, Budget{}) == base);
    }
}

TEST_CASE("sumset growth is monotone after translating a point to the origin") {
    // with 0 in A we get hA subseteq (h+1)A, so cardinalities never decrease
    SplitMix64 rng(34);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Point> pts{{0, 0}};
        while (pts.size() < 5) {
            Point p = sample_point(rng, 2, 4);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        std::vector<Int> seq =
            cardinality_sequence(make_point_set(2, pts), 8, Budget{});
        for (std::size_t h = 1; h < seq.size(); ++h) CHECK(seq[h] >= seq[h - 1]);
    }
}

TEST_CASE("budget violations raise Budget errors") {
    Budget tiny;
    tiny.max_layer_points = 5;
    PointSet a = make_point_set(1, {{0}, {1}, {3}});
    CHECK_THROWS_MATCHES(cardinality_sequence(a, 4, tiny), Error,
                         testutil::HasKind(ErrorKind::Budget));

    Budget b;
    PointSet wide = make_point_set(1, {{0}, {1000000000000}});
    CHECK_THROWS_MATCHES(cardinality_sequence(wide, 10000, b), Error,
                         testutil::HasKind(ErrorKind::Budget));
    CHECK_THROWS_AS(sumset_layers(wide, 10000, b), Error);
}

TEST_CASE("negative h is rejected") {
    PointSet a = make_point_set(1, {{0}, {1}});
    CHECK_THROWS_AS(cardinality_sequence(a, -1, Budget{}), Error);
    CHECK_THROWS_AS(sumset_layers(a, -1, Budget{}), Error);
}

TEST_CASE("khovanskii fit for the unit interval") {
    PointSet a = make_point_set(1, {{0}, {1}});
    std::vector<Int> seq = cardinality_sequence(a, 8, Budget{});
    KhovanskiiFit fit = khovanskii_fit(seq, 1);
    CHECK(fit.h0 == 0);
    CHECK(fit.degree == 1);
    CHECK(fit.leading_times_dfact == 1);
    for (int h = 0; h <= 20; ++h) CHECK(fit.evaluate(h) == Rational(h + 1));
}

TEST_CASE("khovanskii fit for the interval {0,1,3}") {
    PointSet a = make_point_set(1, {{0}, {1}, {3}});
    std::vector<Int> seq = cardinality_sequence(a, 8, Budget{});
    KhovanskiiFit fit = khovanskii_fit(seq, 1);
    CHECK(fit.h0 == 1);
    CHECK(fit.degree == 1);
    CHECK(fit.leading_times_dfact == 3);
    CHECK(fit.evaluate(5) == Rational(15));
    // agrees with the tail of the sequence
    for (std::int64_t h = fit.h0; h <= 8; ++h) CHECK(fit.evaluate(h) == Rational(seq[h]));
}

TEST_CASE("khovanskii fit needs a stabilized tail and enough data") {
    PointSet a = make_point_set(1, {{0}, {1}, {3}});
    std::vector<Int> seq = cardinality_sequence(a, 3, Budget{});
    CHECK_THROWS_MATCHES(khovanskii_fit(seq, 1), Error,
                         testutil::HasKind(ErrorKind::NotStabilized));
    // exponential data never stabilizes to a degree-1 polynomial
    std::vector<Int> expo{1, 2, 4, 8, 16, 32, 64, 128, 256};
    CHECK_THROWS_MATCHES(khovanskii_fit(expo, 1), Error,
                         testutil::HasKind(ErrorKind::NotStabilized));
}

TEST_CASE("layer computation is deterministic") {
    PointSet a = make_point_set(2, {{0, 0}, {1, 1}, {1, -2}, {-2, 1}, {0, 1}});
    std::vector<Int> s1 = cardinality_sequence(a, 10, Budget{});
    std::vector<Int> s2 = cardinality_sequence(a, 10, Budget{});
    CHECK(s1 == s2);
    CHECK(s1[2] == 15);
    CHECK(s1[3] == 33);
}
