#include "doctest.h"

#include "isoclass/class_groups.hpp"

#include <random>
#include <stdexcept>

using namespace isoclass;

TEST_CASE("kronecker symbol fixtures") {
    CHECK(kronecker_symbol(-4, 5) == 1);
    CHECK(kronecker_symbol(-4, 2) == 0);
    CHECK(kronecker_symbol(-3, 2) == -1);
    CHECK(kronecker_symbol(-3, 3) == 0);
    CHECK(kronecker_symbol(5, 5) == 0);
    CHECK(kronecker_symbol(2, 7) == 1);
    CHECK(kronecker_symbol(3, 7) == -1);
    CHECK(kronecker_symbol(-1, 1) == 1);
    CHECK(kronecker_symbol(7, 1) == 1);
}

TEST_CASE("kronecker symbol agrees with gmp") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<i64> dD(-2000000, 2000000);
    std::uniform_int_distribution<i64> dm(1, 2000000);
    for (int i = 0; i < 10000; ++i) {
        i64 D = dD(rng), m = dm(rng);
        mpz_class zD(static_cast<long>(D)), zm(static_cast<long>(m));
        CHECK(kronecker_symbol(D, m) == mpz_kronecker(zD.get_mpz_t(), zm.get_mpz_t()));
    }
}

TEST_CASE("kronecker symbol is multiplicative in the denominator") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<i64> dD(-1000000, 1000000);
    std::uniform_int_distribution<i64> dm(1, 30000);
    for (int i = 0; i < 10000; ++i) {
        i64 D = dD(rng), m1 = dm(rng), m2 = dm(rng);
        CHECK(kronecker_symbol(D, m1 * m2) == kronecker_symbol(D, m1) * kronecker_symbol(D, m2));
    }
}

TEST_CASE("fundamental discriminant recognition") {
    for (i64 D : {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24, -163})
        CHECK(is_fundamental_discriminant(D));
    for (i64 D : {-12, -16, -27, -28, -32, -36, -48, -63, -9, -18, -25, -45})
        CHECK_FALSE(is_fundamental_discriminant(D));
    CHECK_FALSE(is_fundamental_discriminant(-5)); // 3 mod 4
    CHECK(is_fundamental_discriminant(5));        // (positive ones exist too)
}

TEST_CASE("class numbers by reduced forms") {
    CHECK(class_number_forms(-3) == 1);
    CHECK(class_number_forms(-4) == 1);
    CHECK(class_number_forms(-7) == 1);
    CHECK(class_number_forms(-8) == 1);
    CHECK(class_number_forms(-11) == 1);
    CHECK(class_number_forms(-12) == 1);
    CHECK(class_number_forms(-15) == 2);
    CHECK(class_number_forms(-16) == 1);
    CHECK(class_number_forms(-19) == 1);
    CHECK(class_number_forms(-20) == 2);
    CHECK(class_number_forms(-23) == 3);
    CHECK(class_number_forms(-24) == 2);
    CHECK(class_number_forms(-27) == 1);
    CHECK(class_number_forms(-64) == 2);
    CHECK(class_number_forms(-71) == 7);
    CHECK(class_number_forms(-163) == 1);
    CHECK(class_number_forms(-5460) == 16); // largest Euler idoneal discriminant -4*1365

    CHECK_THROWS_AS(class_number_forms(-5), std::invalid_argument);  // 3 mod 4
    CHECK_THROWS_AS(class_number_forms(-6), std::invalid_argument);  // 2 mod 4
    CHECK_THROWS_AS(class_number_forms(0), std::invalid_argument);
    CHECK_THROWS_AS(class_number_forms(5), std::invalid_argument);
}

TEST_CASE("conductor formula fixtures") {
    CHECK(class_number_order(-4, 1) == 1);
    CHECK(class_number_order(-4, 2) == 1);
    CHECK(class_number_order(-4, 4) == 2);
    CHECK(class_number_order(-3, 2) == 1);
    CHECK(class_number_order(-3, 3) == 1);
    CHECK(class_number_order(-19, 1) == 1);
    CHECK(class_number_order(-4, 24) == 16);
    CHECK(class_number_order(-4, 24) == class_number_forms(-2304));

    CHECK_THROWS_AS(class_number_order(-12, 2), std::invalid_argument); // not fundamental
    CHECK_THROWS_AS(class_number_order(5, 2), std::invalid_argument);   // positive
    CHECK_THROWS_AS(class_number_order(-3, 0), std::invalid_argument);
}

TEST_CASE("conductor formula equals forms count on a sweep") {
    for (i64 D_K = -3; D_K >= -99; --D_K) {
        if (!is_fundamental_discriminant(D_K))
            continue;
        for (u64 f = 1; f <= 5; ++f)
            CHECK(class_number_order(D_K, f) == class_number_forms(f * f * D_K));
    }
}

TEST_CASE("euler product without the 1/p factor diverges from the forms count") {
    // The side-by-side variant: for (-4, 2) it gives 1*2*(1-0)/2 = 1 (agrees),
    // but for (-3, 2) it gives 1*2*(1-(-1))/3 = 4/3, not the true h = 1.
    CHECK(class_number_order_no_p(-4, 2) == mpq_class(1));
    CHECK(class_number_order_no_p(-3, 2) == mpq_class(4, 3));
    CHECK(class_number_order_no_p(-7, 3) == mpq_class(6));
    CHECK(class_number_order(-7, 3) == 4); // 1 * 3 * (1 - (-1)/3) = 4
}

TEST_CASE("order descriptor") {
    OrderDescriptor o = make_order(-4, 3);
    CHECK(o.disc() == -36);
    CHECK_THROWS_AS(make_order(-16, 1), std::invalid_argument);
}
