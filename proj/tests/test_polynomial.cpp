#include <doctest.h>

#include <random>

#include "boxdist/polynomial.hpp"
#include "oracles.hpp"

using namespace boxdist;

namespace {

Point pt(std::vector<long> xs) {
    std::vector<Scalar> c;
    for (long x : xs) c.emplace_back(x);
    return Point(std::move(c));
}

SquaredDistancePalette pal(std::vector<long> vs) {
    std::vector<Scalar> out;
    for (long v : vs) out.emplace_back(v);
    return SquaredDistancePalette(std::move(out));
}

// the unexpanded product: prod_i (d2(a,b) - v_i)
Scalar product_form(const SquaredDistancePalette& palette, const Point& a, const Point& b) {
    Scalar d2 = squared_distance(a, b);
    Scalar acc(1);
    for (const auto& v : palette.values()) acc *= d2 - v;
    return acc;
}

MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, std::size_t terms,
                      std::uint32_t max_exp) {
    MultiPoly p(nvars);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (std::size_t t = 0; t < terms; ++t) {
        MultiPoly::Exponents e(nvars);
        for (auto& x : e) x = exp(rng);
        p.add_term(e, Scalar(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("build_distance_polynomial expands (x-y)^2 - 1 correctly") {
    MultiPoly p = build_distance_polynomial(1, pal({1}));
    CHECK(p.nvars() == 2);
    CHECK(p.total_degree() == 2);
    REQUIRE(p.term_count() == 4);
    const auto& terms = p.terms();
    CHECK(terms.at({2, 0}) == Scalar(1));    // x^2
    CHECK(terms.at({0, 2}) == Scalar(1));    // y^2
    CHECK(terms.at({1, 1}) == Scalar(-2));   // -2xy
    CHECK(terms.at({0, 0}) == Scalar(-1));   // -1
}

TEST_CASE("evaluate examples") {
    MultiPoly p = build_distance_polynomial(1, pal({1}));
    CHECK(evaluate(p, pt({0}), pt({0})) == Scalar(-1));
    CHECK(evaluate(p, pt({1}), pt({0})) == Scalar(0));
    MultiPoly zero(2);
    CHECK(evaluate(zero, pt({5}), pt({7})) == Scalar(0));
    CHECK_THROWS_AS(evaluate(p, pt({0, 0}), pt({0, 0})), std::invalid_argument);
}

TEST_CASE("degree-4 witness vanishes at a palette distance") {
    MultiPoly p = build_distance_polynomial(2, pal({1, 2}));
    CHECK(p.total_degree() == 4);
    CHECK(evaluate(p, pt({0, 0}), pt({0, 1})) == Scalar(0));  // (1-1)(1-2) = 0
    CHECK(evaluate(p, pt({0, 0}), pt({0, 0})) == Scalar(2));  // (-1)(-2)
}

TEST_CASE("total degree is twice the palette size") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> val(1, 30);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Scalar> vals;
        for (int k = 0; k < 1 + iter % 4; ++k) vals.emplace_back(val(rng));
        SquaredDistancePalette palette(vals);
        for (std::size_t n = 1; n <= 3; ++n) {
            MultiPoly p = build_distance_polynomial(n, palette);
            CHECK(p.total_degree() == 2 * palette.size());
        }
    }
    CHECK_THROWS_AS(build_distance_polynomial(2, SquaredDistancePalette()),
                    std::invalid_argument);
}

TEST_CASE("expanded polynomial equals the product form on random rational pairs") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> val(1, 12);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t n = 1 + iter % 3;
        std::vector<Scalar> vals;
        for (int k = 0; k < 1 + iter % 3; ++k) vals.emplace_back(val(rng));
        SquaredDistancePalette palette(vals);
        MultiPoly p = build_distance_polynomial(n, palette);
        for (int rep = 0; rep < 10; ++rep) {
            Point a = oracle::random_point(rng, n, 6, 4);
            Point b = oracle::random_point(rng, n, 6, 4);
            CHECK(evaluate(p, a, b) == product_form(palette, a, b));
        }
    }
}

TEST_CASE("evaluate is linear in the polynomial") {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 1 + iter % 2;
        MultiPoly p = random_poly(rng, 2 * n, 5, 3);
        MultiPoly q = random_poly(rng, 2 * n, 5, 3);
        Point a = oracle::random_point(rng, n, 5, 3);
        Point b = oracle::random_point(rng, n, 5, 3);
        CHECK(evaluate(p + q, a, b) == evaluate(p, a, b) + evaluate(q, a, b));
    }
}

TEST_CASE("add_term cancellation keeps the degree consistent") {
    MultiPoly p(2);
    p.add_term({3, 0}, Scalar(2));
    p.add_term({1, 0}, Scalar(1));
    CHECK(p.total_degree() == 3);
    p.add_term({3, 0}, Scalar(-2));  // cancels the cubic term
    CHECK(p.total_degree() == 1);
    CHECK(p.term_count() == 1);
    p.add_term({1, 0}, Scalar(-1));
    CHECK(p.is_zero());
    CHECK(p.total_degree() == 0);
}

TEST_CASE("verify_witness accepts the palette polynomial of its own point set") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 1 + iter % 3;
        const std::size_t q = 2 + iter % 2;
        Box box = Box::integer_grid(n, q);
        auto all = box.all_points();
        const std::size_t k = 2 + iter % std::min<std::size_t>(4, all.size() - 1);
        PointSet F(box, oracle::sample_points(rng, all, k));
        SquaredDistancePalette palette = distance_palette(F);
        MultiPoly P = build_distance_polynomial(n, palette);
        WitnessCheckResult res = verify_witness(P, F, static_cast<unsigned>(q));
        CHECK(res.condition_i_ok);
        CHECK(res.condition_ii_ok);
        CHECK_FALSE(res.first_violation.has_value());
        CHECK(P.total_degree() == 2 * palette.size());
        CHECK(BigInt(static_cast<unsigned long>(F.size())) <= res.bound_maincor);
    }
}

TEST_CASE("verify_witness flags a point at a distance outside the palette") {
    Box box = Box::integer_grid(1, 3);
    PointSet small(box, {pt({0}), pt({1})});
    MultiPoly P = build_distance_polynomial(1, distance_palette(small));  // palette {1}
    PointSet larger(box, {pt({0}), pt({1}), pt({2})});  // adds squared distances 1 and 4
    WitnessCheckResult res = verify_witness(P, larger, 3);
    CHECK(res.condition_i_ok);
    CHECK_FALSE(res.condition_ii_ok);
    REQUIRE(res.first_violation.has_value());
    // lexicographically first offending ordered pair is (0) vs (2)
    CHECK(res.first_violation->first == pt({0}));
    CHECK(res.first_violation->second == pt({2}));
}

TEST_CASE("verify_witness reports the counting bound at the spec point") {
    Box box = Box::integer_grid(2, 2);
    PointSet F(box, {pt({0, 0}), pt({1, 1})});
    MultiPoly P = build_distance_polynomial(2, pal({2}));
    WitnessCheckResult res = verify_witness(P, F, 2);
    CHECK(res.condition_i_ok);
    CHECK(res.condition_ii_ok);
    CHECK(res.bound_maincor == 6);  // 2 * count_monomials(2,2,1)
    CHECK(res.bound_maincor2.contains(8.0));
}

TEST_CASE("verify_witness rejects mismatched inputs") {
    Box box = Box::integer_grid(2, 2);
    PointSet F(box, {pt({0, 0}), pt({1, 1})});
    MultiPoly P = build_distance_polynomial(2, pal({2}));
    CHECK_THROWS_AS(verify_witness(P, F, 3), std::invalid_argument);  // wrong t
    MultiPoly constant = MultiPoly::constant(4, Scalar(1));
    CHECK_THROWS_AS(verify_witness(constant, F, 2), std::invalid_argument);  // deg 0
    MultiPoly wrong_vars = build_distance_polynomial(1, pal({2}));
    CHECK_THROWS_AS(verify_witness(wrong_vars, F, 2), std::invalid_argument);
}

TEST_CASE("witness property holds exhaustively on small boxes") {
    // every subset of size 2..6 of each box; palette polynomial passes both
    // conditions and the subset respects the reported counting bound
    for (auto [n, q] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        Box box = Box::integer_grid(n, q);
        auto all = box.all_points();
        const std::size_t N = all.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
            const int bits = __builtin_popcountll(mask);
            if (bits < 2 || bits > 6) continue;
            std::vector<Point> pts;
            for (std::size_t i = 0; i < N; ++i)
                if (mask & (std::uint64_t{1} << i)) pts.push_back(all[i]);
            PointSet F(box, std::move(pts));
            SquaredDistancePalette palette = distance_palette(F);
            MultiPoly P = build_distance_polynomial(n, palette);
            WitnessCheckResult res = verify_witness(P, F, static_cast<unsigned>(q));
            REQUIRE(res.condition_i_ok);
            REQUIRE(res.condition_ii_ok);
            REQUIRE(BigInt(static_cast<unsigned long>(F.size())) <= res.bound_maincor);
        }
    }
}

TEST_CASE("witness property holds on sampled subsets of the 27-point box") {
    std::mt19937 rng(53);
    Box box = Box::integer_grid(3, 3);
    auto all = box.all_points();
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t k = 2 + iter % 4;  // up to 5 points
        PointSet F(box, oracle::sample_points(rng, all, k));
        MultiPoly P = build_distance_polynomial(3, distance_palette(F));
        WitnessCheckResult res = verify_witness(P, F, 3);
        REQUIRE(res.condition_i_ok);
        REQUIRE(res.condition_ii_ok);
        REQUIRE(BigInt(static_cast<unsigned long>(F.size())) <= res.bound_maincor);
    }
}

TEST_CASE("clp_check examples") {
    Box box3 = Box::integer_grid(3, 3);
    auto all = box3.all_points();

    SUBCASE("zero polynomial: origin value holds whatever the status") {
        MultiPoly zero(3);
        PointSet F(box3, {all[0], all[1]});
        ClpCheckResult r = clp_check(zero, F);
        CHECK(r.zero_at_origin);
        CHECK(r.threshold == 2);  // degree 0
        CHECK(r.status == ClpStatus::cardinality_not_met);  // |F| = 2 <= 2

        PointSet big(box3, std::vector<Point>(all.begin(), all.begin() + 5));
        ClpCheckResult r2 = clp_check(zero, big);
        CHECK(r2.zero_at_origin);
        CHECK(r2.status == ClpStatus::verified);
    }

    SUBCASE("constant 1: differences do not vanish") {
        MultiPoly one = MultiPoly::constant(3, Scalar(1));
        PointSet big(box3, std::vector<Point>(all.begin(), all.begin() + 7));
        ClpCheckResult r = clp_check(one, big);
        CHECK(r.status == ClpStatus::vanishing_not_met);
        CHECK_FALSE(r.zero_at_origin);
    }

    SUBCASE("non-multilinear polynomial is rejected") {
        MultiPoly sq = MultiPoly::monomial(3, {2, 0, 0}, Scalar(1));
        PointSet F(box3, {all[0], all[1]});
        CHECK_THROWS_AS(clp_check(sq, F), std::invalid_argument);
    }
}

TEST_CASE("clp_check randomized hyperplane instances find no counterexample") {
    // P = z_j * Q vanishes on differences of any set with constant j-th
    // coordinate, and the proposition then forces P(0) = 0
    std::mt19937 rng(67);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = 2 + iter % 3;
        const std::size_t j = iter % n;
        Box box = Box::integer_grid(n, 3);
        auto all = box.all_points();

        MultiPoly q_poly(n);
        std::uniform_int_distribution<long> coef(-3, 3);
        for (int t = 0; t < 4; ++t) {
            MultiPoly::Exponents e(n, 0);
            for (std::size_t v = 0; v < n; ++v)
                if (v != j) e[v] = rng() % 2;
            q_poly.add_term(e, Scalar(coef(rng)));
        }
        MultiPoly zj = MultiPoly::monomial(n, [&] {
            MultiPoly::Exponents e(n, 0);
            e[j] = 1;
            return e;
        }(), Scalar(1));
        MultiPoly P = zj * q_poly;
        if (P.is_zero()) continue;

        std::vector<Point> slab;
        for (const auto& p : all)
            if (p[j] == Scalar(1)) slab.push_back(p);
        PointSet F(box, slab);  // 3^{n-1} points with x_j = 1

        ClpCheckResult r = clp_check(P, F);
        if (r.status == ClpStatus::verified) {
            CHECK(r.zero_at_origin);
        } else {
            CHECK(r.status == ClpStatus::cardinality_not_met);
        }
        CHECK(r.status != ClpStatus::counterexample);
    }
}
