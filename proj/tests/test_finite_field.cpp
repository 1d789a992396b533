#include "doctest.h"

#include "isoclass/finite_field.hpp"

#include <stdexcept>

using namespace isoclass;

TEST_CASE("field construction and default moduli") {
    Field f4 = Field::make(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<u64>{1, 1, 1}); // t^2 + t + 1

    Field f9 = Field::make(3, 2);
    CHECK(f9.modulus() == std::vector<u64>{1, 0, 1}); // t^2 + 1

    Field f7 = Field::make(7, 1);
    CHECK(f7.q() == 7);
    CHECK(f7.k() == 1);

    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 9), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(0x7fffffffffffffe7ull, 2), std::overflow_error);

    // Custom modulus must be monic and irreducible.
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<u64>{1, 0, 1}), std::invalid_argument); // (t+1)^2
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<u64>{1, 0, 2}), std::invalid_argument); // not monic
    Field f9b = Field::make(3, 2, std::vector<u64>{2, 2, 1}); // t^2 + 2t + 2 irreducible
    CHECK(f9b.q() == 9);
    CHECK_FALSE(f9.same_as(f9b));
}

TEST_CASE("prime field arithmetic") {
    Field f7 = Field::make(7, 1);
    auto a = f7.from_scalar(3);
    auto b = f7.from_scalar(5);
    CHECK(f7.index(f7.mul(a, b)) == 1);
    CHECK(f7.index(f7.add(a, b)) == 1);
    CHECK(f7.index(f7.sub(a, b)) == 5);
    CHECK(f7.index(f7.neg(a)) == 4);
    CHECK(f7.index(f7.div(f7.one(), a)) == 5); // 3 * 5 = 15 = 1
    CHECK(f7.index(f7.from_scalar(-3)) == 4);
    CHECK_THROWS_AS(f7.inv(f7.zero()), std::domain_error);
}

TEST_CASE("F_4 arithmetic against multiplication table") {
    Field f4 = Field::make(2, 2);
    auto t = f4.from_index(2);      // t
    auto t1 = f4.from_index(3);     // t + 1
    CHECK(f4.index(f4.mul(t, t1)) == 1);   // t^2 + t = 1
    CHECK(f4.index(f4.mul(t, t)) == 3);    // t^2 = t + 1
    CHECK(f4.index(f4.div(f4.one(), t)) == 3);
    CHECK(f4.index(f4.add(t, t1)) == 1);
    CHECK(f4.to_string(t1) == "t + 1");
}

TEST_CASE("element indexing round-trips") {
    Field f = Field::make(5, 3);
    for (u64 i = 0; i < f.q(); ++i)
        CHECK(f.index(f.from_index(i)) == i);
    CHECK_THROWS_AS(f.from_index(f.q()), std::invalid_argument);
    CHECK(f.index(f.from_coeffs({2, 3})) == 2 + 3 * 5);
    CHECK_THROWS_AS(f.from_coeffs({1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("field axioms on a sample of F_27") {
    Field f = Field::make(3, 3);
    for (u64 i = 0; i < f.q(); ++i) {
        auto x = f.from_index(i);
        for (u64 j = 0; j < f.q(); j += 5) {
            auto y = f.from_index(j);
            CHECK(f.mul(x, y) == f.mul(y, x));
            CHECK(f.add(x, y) == f.add(y, x));
            // Frobenius is a ring endomorphism.
            CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
            CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
        }
        if (!f.is_zero(x)) {
            CHECK(f.mul(x, f.inv(x)) == f.one());
            CHECK(f.pow(x, f.q() - 1) == f.one());
        }
        CHECK(f.pow(x, f.q()) == x);
    }
}

TEST_CASE("subfield membership counts p^d points") {
    Field f64 = Field::make(2, 6);
    for (unsigned d : {1u, 2u, 3u, 6u}) {
        u64 count = 0;
        for (u64 i = 0; i < f64.q(); ++i)
            if (f64.subfield_membership(f64.from_index(i), d))
                ++count;
        CHECK(count == checked_pow(2, d));
    }
    CHECK_THROWS_AS(f64.subfield_membership(f64.one(), 4), std::invalid_argument);
    CHECK_THROWS_AS(f64.subfield_membership(f64.one(), 0), std::invalid_argument);

    Field f81 = Field::make(3, 4);
    u64 count = 0;
    for (u64 i = 0; i < f81.q(); ++i)
        if (f81.subfield_membership(f81.from_index(i), 2))
            ++count;
    CHECK(count == 9);
}

TEST_CASE("elements of different fields do not mix") {
    Field a = Field::make(5, 1);
    Field b = Field::make(7, 1);
    CHECK_THROWS_AS(a.add(a.one(), b.one()), std::invalid_argument);
    Field a2 = Field::make(5, 1);
    CHECK(a2.same_as(a));
    CHECK_NOTHROW(a2.add(a.one(), a2.one())); // equal descriptors interoperate
}

TEST_CASE("named operation dispatch") {
    Field f = Field::make(13, 1);
    auto x = f.from_scalar(6);
    auto y = f.from_scalar(11);
    CHECK(f.index(field_arithmetic(f, x, y, "mul")) == 66 % 13);
    CHECK(f.index(field_arithmetic(f, x, y, "pow", 2)) == 36 % 13);
    CHECK(f.index(field_arithmetic(f, x, y, "frobenius")) == 6);
    CHECK_THROWS_AS(field_arithmetic(f, x, y, "nope"), std::invalid_argument);
}
