#include "doctest.h"

#include "isoclass/exact_poly.hpp"

#include <stdexcept>

using namespace isoclass;

namespace {
ZPoly zp(std::initializer_list<long> ascending) {
    ZPoly f;
    for (long c : ascending)
        f.emplace_back(c);
    zp_trim(f);
    return f;
}
} // namespace

TEST_CASE("ring operations") {
    ZPoly f = zp({5, -1, 1});  // x^2 - x + 5
    ZPoly g = zp({-1, 1});     // x - 1
    CHECK(zp_mul(f, g) == zp({-5, 6, -2, 1}));
    CHECK(zp_add(f, g) == zp({4, 0, 1}));
    CHECK(zp_sub(f, f).empty());
    CHECK(zp_derivative(f) == zp({-1, 2}));
    CHECK(zp_eval(f, 3) == 11);
    CHECK(zp_degree(zp({0})) == -1);
}

TEST_CASE("resultants and discriminants") {
    CHECK(resultant(zp({5, -1, 1}), zp({-1, 2})) == 19);
    CHECK(discriminant(zp({5, -1, 1})) == -19);
    CHECK(discriminant(zp({-5, 0, 1})) == 20);
    CHECK(discriminant(zp({1, -2, 0, 1})) == 5);        // x^3 - 2x + 1
    CHECK(discriminant(zp({-6, 11, -6, 1})) == 4);      // (x-1)(x-2)(x-3)
    CHECK(discriminant(zp({1, 3, 2})) == 1);            // non-monic
    CHECK(discriminant(zp({1, 2, 1})) == 0);            // (x+1)^2
    CHECK(resultant(zp({-1, 1}), zp({-2, 1})) == -1);   // x-1 vs x-2: 1-2
    CHECK(discriminant(zp({25, -5, 2, -1, 1})) == 3375900);
}

TEST_CASE("squarefree part") {
    // (x-1)^2 (x+2) = x^3 - 3x + 2
    CHECK(squarefree_part(zp({2, -3, 0, 1})) == zp({-2, 1, 1}));
    CHECK(squarefree_part(zp({5, -1, 1})) == zp({5, -1, 1}));
    // 4(x-1)^2 -> x - 1 up to sign normalization
    CHECK(squarefree_part(zp({4, -8, 4})) == zp({-1, 1}));
}

TEST_CASE("Sturm root counting") {
    CHECK(count_real_roots(zp({1, 0, 1})) == 0);
    CHECK(count_real_roots(zp({-2, 0, 1})) == 2);
    CHECK(count_real_roots(zp({0, -2, 0, 1})) == 3);
    CHECK(count_real_roots(zp({5, -1, 1})) == 0);
    CHECK(count_real_roots(zp({-8, -1, 1})) == 2);
    CHECK(count_real_roots_above(zp({-2, 0, 1}), mpq_class(0)) == 1);
    CHECK(count_real_roots_above(zp({-2, 0, 1}), mpq_class(3, 2)) == 0);
    CHECK(count_real_roots_above(zp({-4, 0, 1}), mpq_class(2)) == 0); // boundary root excluded
    CHECK(count_real_roots_above(zp({-4, 0, 1}), mpq_class(1)) == 1);
}

TEST_CASE("Newton identities round-trip") {
    ZPoly f = zp({5, -1, 1});
    auto p = power_sums(f, 4);
    REQUIRE(p.size() == 4);
    CHECK(p[0] == 1);
    CHECK(p[1] == -9);
    CHECK(p[2] == -14);
    CHECK(p[3] == 31);
    CHECK(poly_from_power_sums({p[0], p[1]}, 2) == f);

    ZPoly quartic = zp({25, -5, 2, -1, 1});
    auto pq = power_sums(quartic, 8);
    ZPoly back = poly_from_power_sums({pq[0], pq[1], pq[2], pq[3]}, 4);
    CHECK(back == quartic);
}

TEST_CASE("characteristic polynomial of a power") {
    ZPoly f = zp({5, -1, 1});
    CHECK(char_poly_of_power(f, 1) == f);
    CHECK(char_poly_of_power(f, 2) == zp({25, 9, 1}));
    CHECK(char_poly_of_power(f, 3) == zp({125, 14, 1}));
    // Constant term of the n-th power polynomial is q^n.
    ZPoly c5 = char_poly_of_power(f, 5);
    CHECK(c5[0] == 5 * 5 * 5 * 5 * 5);
    CHECK_THROWS_AS(char_poly_of_power(zp({1, 2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(char_poly_of_power(zp({1, 0, 2}), 2), std::invalid_argument);
}

TEST_CASE("trace polynomial extraction") {
    auto h = trace_polynomial(zp({25, -5, 2, -1, 1}), 5);
    REQUIRE(h.has_value());
    CHECK(*h == zp({-8, -1, 1})); // y^2 - y - 8

    auto h1 = trace_polynomial(zp({5, -1, 1}), 5);
    REQUIRE(h1.has_value());
    CHECK(*h1 == zp({-1, 1}));

    auto hs = trace_polynomial(zp({5, 0, 1}), 5);
    REQUIRE(hs.has_value());
    CHECK(*hs == zp({0, 1}));

    CHECK_FALSE(trace_polynomial(zp({-5, 0, 1}), 5).has_value());    // x^2 - 5
    CHECK_FALSE(trace_polynomial(zp({7, -1, 1}), 5).has_value());    // constant term mismatch
    CHECK_FALSE(trace_polynomial(zp({1, 1}), 5).has_value());        // odd degree
}

TEST_CASE("root squaring") {
    ZPoly g = root_square_transform(zp({-8, -1, 1}));
    // Normalize sign for comparison.
    if (!g.empty() && g.back() < 0)
        g = zp_neg(g);
    CHECK(g == zp({64, -17, 1}));

    ZPoly g2 = root_square_transform(zp({0, 1})); // H = y
    if (!g2.empty() && g2.back() < 0)
        g2 = zp_neg(g2);
    CHECK(g2 == zp({0, 1}));
}

TEST_CASE("real root isolation brackets every root") {
    // (x - 1)(x - 2)(x + 3)
    auto iv = isolate_real_roots(zp({6, -7, 0, 1}));
    REQUIRE(iv.size() == 3);
    const long roots[] = {-3, 1, 2};
    for (size_t i = 0; i < 3; ++i) {
        const mpq_class r(roots[i]);
        if (iv[i].first == iv[i].second)
            CHECK(iv[i].first == r);
        else {
            CHECK(iv[i].first < r);
            CHECK(r <= iv[i].second);
        }
    }
    for (size_t i = 0; i + 1 < iv.size(); ++i)
        CHECK(iv[i].second <= iv[i + 1].first);

    // x^2 - 2: both intervals strictly bracket an irrational root
    auto sq = isolate_real_roots(zp({-2, 0, 1}));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second <= 0);
    CHECK(sq[1].first >= 0);
    CHECK(sq[0].first * sq[0].first > 2);
    CHECK(sq[1].second * sq[1].second > 2);

    CHECK(isolate_real_roots(zp({1, 0, 1})).empty());
    CHECK(isolate_real_roots(zp({7})).empty());
}

TEST_CASE("integer polynomial gcd") {
    // gcd((x-1)(x-2), (x-1)(x+5)) = x - 1
    auto g = zp_gcd(zp({2, -3, 1}), zp({-5, 4, 1}));
    CHECK(g == zp({-1, 1}));
    CHECK(zp_gcd(zp({2, -3, 1}), zp({1, 1})) == zp({1}));
    // common content is stripped: gcd(2x, 4) = 1 over Q
    CHECK(zp_gcd(zp({0, 2}), zp({4})) == zp({1}));
}
