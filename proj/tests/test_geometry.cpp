#include <doctest.h>

#include <random>
#include <set>

#include "boxdist/geometry.hpp"
#include "oracles.hpp"

using namespace boxdist;

namespace {

Point pt(std::vector<long> xs) {
    std::vector<Scalar> c;
    for (long x : xs) c.emplace_back(x);
    return Point(std::move(c));
}

PointSet grid_set(std::size_t n, std::size_t q, const std::vector<std::vector<long>>& pts) {
    std::vector<Point> ps;
    for (const auto& p : pts) ps.push_back(pt(p));
    return PointSet(Box::integer_grid(n, q), std::move(ps));
}

}  // namespace

TEST_CASE("scalar parsing and canonical form") {
    CHECK(Scalar::from_string("13/36").str() == "13/36");
    CHECK(Scalar::from_string("2/4") == Scalar(1, 2));
    CHECK(Scalar::from_string("2/4").str() == "1/2");
    CHECK(Scalar::from_string("-6/4").str() == "-3/2");
    CHECK(Scalar::from_string("0").str() == "0");
    CHECK(Scalar::from_string("0/7") == Scalar(0));
    CHECK(Scalar::from_string("12345678901234567890123").denominator() == 1);

    CHECK_THROWS_AS(Scalar::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::from_string("+5"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::from_string(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
}

TEST_CASE("scalar arithmetic is exact") {
    Scalar a(1, 3), b(1, 6);
    CHECK(a + b == Scalar(1, 2));
    CHECK(a - b == Scalar(1, 6));
    CHECK(a * b == Scalar(1, 18));
    CHECK(a / b == Scalar(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a < Scalar(1, 2));
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("squared_distance examples") {
    CHECK(squared_distance(pt({0, 0}), pt({0, 0})) == Scalar(0));
    CHECK(squared_distance(pt({1, 0, 0}), pt({0, 1, 0})) == Scalar(2));
    Point a({Scalar(1, 2), Scalar(1, 3)});
    CHECK(squared_distance(a, pt({0, 0})) == Scalar(13, 36));  // 1/4 + 1/9
    CHECK_THROWS_AS(squared_distance(pt({0}), pt({0, 0})), std::invalid_argument);
}

TEST_CASE("squared_distance properties on random rational points") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Point a = oracle::random_point(rng, 3), b = oracle::random_point(rng, 3);
        Scalar dab = squared_distance(a, b);
        CHECK(dab == squared_distance(b, a));
        CHECK(dab.sgn() >= 0);
        CHECK((dab.is_zero() == (a == b)));
    }
}

TEST_CASE("distance_palette examples") {
    CHECK(distance_palette(grid_set(2, 2, {{0, 0}})).empty());

    auto tri = distance_palette(grid_set(2, 2, {{0, 0}, {0, 1}, {1, 0}}));
    REQUIRE(tri.size() == 2);
    CHECK(tri.values()[0] == Scalar(1));
    CHECK(tri.values()[1] == Scalar(2));

    // standard basis vectors: all pairs at squared distance 2
    const std::size_t n = 5;
    std::vector<std::vector<long>> basis;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        basis.push_back(e);
    }
    auto pal = distance_palette(grid_set(n, 2, basis));
    REQUIRE(pal.size() == 1);
    CHECK(pal.values()[0] == Scalar(2));
}

TEST_CASE("is_s_distance_set examples") {
    CHECK(is_s_distance_set(grid_set(2, 2, {{0, 0}, {1, 1}}), 1));
    CHECK_FALSE(is_s_distance_set(grid_set(2, 2, {{0, 0}, {0, 1}, {1, 0}}), 1));
    CHECK(is_s_distance_set(grid_set(2, 2, {{0, 0}, {0, 1}, {1, 0}}), 2));
    CHECK(is_s_distance_set(grid_set(2, 2, {{0, 0}}), 0));
}

TEST_CASE("scalar_product_set examples") {
    auto orth = scalar_product_set(grid_set(2, 2, {{1, 0}, {0, 1}}));
    REQUIRE(orth.size() == 1);
    CHECK(orth.values()[0] == Scalar(0));

    auto three = scalar_product_set(grid_set(2, 2, {{1, 1}, {1, 0}, {0, 1}}));
    REQUIRE(three.size() == 2);
    CHECK(three.values()[0] == Scalar(0));
    CHECK(three.values()[1] == Scalar(1));

    CHECK(scalar_product_set(grid_set(2, 2, {{1, 1}})).empty());
}

TEST_CASE("check_df_conditions examples") {
    CHECK(check_df_conditions(grid_set(3, 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1));
    // (0,0).(0,0) = 0 lies in s(F) = {0}: condition (i) fails
    CHECK_FALSE(check_df_conditions(grid_set(2, 2, {{0, 0}, {1, 0}}), 1));
    CHECK(check_df_conditions(grid_set(2, 2, {{1, 1}}), 0));
}

TEST_CASE("palette invariance under translation and coordinate permutation") {
    std::mt19937 rng(11);
    Box box = Box::integer_grid(2, 4);
    auto all = box.all_points();
    for (int iter = 0; iter < 50; ++iter) {
        auto pts = oracle::sample_points(rng, all, 4);
        PointSet F(box, pts);
        auto base = distance_palette(F);

        Scalar tx(5), ty(-7, 2);
        std::vector<std::vector<Scalar>> shifted_coords(2);
        for (int c = 0; c < 2; ++c)
            for (const auto& v : box.coordinate_set(c))
                shifted_coords[c].push_back(v + (c == 0 ? tx : ty));
        std::vector<Point> moved, swapped;
        for (const auto& p : pts) {
            moved.push_back(Point({p[0] + tx, p[1] + ty}));
            swapped.push_back(Point({p[1], p[0]}));
        }
        CHECK(distance_palette(PointSet(Box(shifted_coords), moved)) == base);
        CHECK(distance_palette(PointSet(box, swapped)) == base);

        CHECK(base.size() <= pts.size() * (pts.size() - 1) / 2);
    }
}

TEST_CASE("point set construction enforces invariants") {
    Box box = Box::integer_grid(2, 2);
    CHECK_THROWS_AS(PointSet(box, {pt({0, 0}), pt({0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(box, {pt({0, 2})}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(box, {pt({0})}), std::invalid_argument);
    CHECK_NOTHROW(PointSet(box, {}));
    CHECK_THROWS_AS(distance_palette(PointSet(box, {})), std::invalid_argument);
    CHECK_THROWS_AS(scalar_product_set(PointSet(box, {})), std::invalid_argument);
}

TEST_CASE("box construction enforces invariants") {
    CHECK_THROWS_AS(Box({}), std::invalid_argument);
    CHECK_THROWS_AS(Box({{Scalar(0)}}), std::invalid_argument);  // q = 1
    CHECK_THROWS_AS(Box({{Scalar(0), Scalar(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(Box({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(2)}}),
                    std::invalid_argument);
    Box unsorted({{Scalar(2), Scalar(0), Scalar(1)}});
    CHECK(unsorted.coordinate_set(0)[0] == Scalar(0));  // sorted at construction
    CHECK(unsorted.side_size() == 3);

    Box grid = Box::integer_grid(3, 2);
    CHECK(grid.point_count() == 8);
    CHECK(grid.all_points().size() == 8);
    CHECK(grid.contains(pt({1, 0, 1})));
    CHECK_FALSE(grid.contains(pt({1, 2, 0})));
    CHECK_THROWS_AS(Box::integer_grid(30, 4).all_points(), std::invalid_argument);
}

TEST_CASE("distance table agrees between integer and rational paths") {
    // the same configuration expressed with integer coordinates and divided
    // by a denominator too large for the scaled-int64 path
    std::mt19937 rng(23);
    const BigInt den("123456789012345678901234567890");
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Point> ints, scaled;
        std::uniform_int_distribution<long> coord(0, 9);
        std::set<std::vector<long>> seen;
        while (ints.size() < 5) {
            std::vector<long> v{coord(rng), coord(rng)};
            if (!seen.insert(v).second) continue;
            ints.push_back(pt(v));
            scaled.push_back(Point({Scalar(BigInt(v[0]), den), Scalar(BigInt(v[1]), den)}));
        }
        DistanceTable ti(ints), ts(scaled);
        REQUIRE(ti.value_count() == ts.value_count());
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) CHECK(ti.id(i, j) == ts.id(i, j));
        for (std::uint32_t id = 0; id < ti.value_count(); ++id)
            CHECK(ts.value(id) * Scalar(BigInt(den * den)) == ti.value(id));
    }
}

TEST_CASE("distance table values are the pairwise squared distances") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Point> pts;
        std::set<std::pair<std::string, std::string>> seen;
        while (pts.size() < 6) {
            Point p = oracle::random_point(rng, 2, 6, 4);
            if (seen.emplace(p[0].str(), p[1].str()).second) pts.push_back(p);
        }
        DistanceTable table(pts);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                CHECK(table.value(table.id(i, j)) == squared_distance(pts[i], pts[j]));
        for (std::uint32_t id = 1; id < table.value_count(); ++id)
            CHECK(table.value(id - 1) < table.value(id));
    }
}
