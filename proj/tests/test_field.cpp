#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "netforge/field.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace netforge;

int main(int argc, char** argv) {
    argc = testutil::strip_seed_arg(argc, argv);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}

TEST_CASE("make_field basics") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->order() == 7);
    CHECK(f7->modulus() == std::vector<uint32_t>{0, 1}); // modulus X for prime fields

    auto f9 = Field::make(3, 2);
    CHECK(f9->order() == 9);
    CHECK(f9->modulus().size() == 3);
    CHECK(f9->modulus().back() == 1);

    CHECK_THROWS_AS(Field::make(4, 1), Error);
    CHECK_THROWS_AS(Field::make(1, 1), Error);
    // X^2 + 1 is reducible over F_2 ((X+1)^2), irreducible over F_3
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<uint32_t>{1, 0, 1}), Error);
    CHECK(Field::make(3, 2, std::vector<uint32_t>{1, 0, 1})->order() == 9);
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<uint32_t>{1, 1}), Error);   // wrong degree
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<uint32_t>{1, 0, 2}), Error); // not monic
}

TEST_CASE("deterministic modulus is reproducible and lex-smallest") {
    auto a = Field::make(2, 4);
    auto b = Field::make(2, 4);
    CHECK(a->modulus() == b->modulus());
    // every monic irreducible of degree 4 over F_2 compares >= the chosen one
    // in lex order on (c0, c1, c2, c3)
    auto chosen = a->modulus();
    for (uint32_t m = 0; m < 16; ++m) {
        std::vector<uint32_t> c = {(m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1, 1};
        std::vector<uint32_t> lex(c.begin(), c.end() - 1);
        std::vector<uint32_t> chosen_lex(chosen.begin(), chosen.end() - 1);
        bool irr = true;
        try {
            Field::make(2, 4, c);
        } catch (const Error&) {
            irr = false;
        }
        if (irr) CHECK(!(lex < chosen_lex));
    }
}

TEST_CASE("inv examples") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->element(2).inv() == f7->element(4));
    CHECK(f7->one().inv() == f7->one());
    CHECK_THROWS_AS(f7->zero().inv(), Error);

    auto f9 = Field::make(3, 2);
    for (uint64_t c = 1; c < 9; ++c) {
        auto x = f9->element(c);
        CHECK(x * x.inv() == f9->one());
    }
}

TEST_CASE("is_square examples") {
    auto f7 = Field::make(7, 1);
    CHECK(is_square(f7->from_int(-3))); // -3 = 4 = 2^2
    CHECK(is_square(f7->zero()));

    auto f5 = Field::make(5, 1);
    // brute-force oracle: squares mod 5 are {0, 1, 4}
    std::set<uint64_t> squares;
    for (uint64_t x = 0; x < 5; ++x) squares.insert(x * x % 5);
    CHECK(squares == std::set<uint64_t>{0, 1, 4});
    CHECK(!is_square(f5->from_int(-3))); // -3 = 2, not in {0,1,4}

    // p = 2: Frobenius is onto, everything is a square
    auto f8 = Field::make(2, 3);
    for (auto& x : f8->elements()) CHECK(is_square(x));
}

TEST_CASE("is_square is multiplicative for odd p") {
    for (auto [p, r] : {std::pair<uint64_t, uint32_t>{7, 1}, {5, 2}, {3, 3}}) {
        auto f = Field::make(p, r);
        auto rng = testutil::test_rng(p * 100 + r);
        std::uniform_int_distribution<uint64_t> d(1, f->order() - 1);
        for (int i = 0; i < 200; ++i) {
            auto a = f->element(d(rng)), b = f->element(d(rng));
            CHECK(is_square(a * b) == (is_square(a) == is_square(b)));
        }
    }
}

TEST_CASE("primitive cube roots") {
    auto f7 = Field::make(7, 1);
    auto xi = primitive_cube_root(*f7);
    REQUIRE(xi.has_value());
    CHECK(*xi == f7->element(2)); // 2^3 = 8 = 1, smallest such

    auto f5 = Field::make(5, 1);
    CHECK(!primitive_cube_root(*f5).has_value()); // 3 does not divide 4

    auto f4 = Field::make(2, 2);
    auto w = primitive_cube_root(*f4);
    REQUIRE(w.has_value());
    CHECK(w->pow(3) == f4->one());
    CHECK(*w != f4->one());

    // brute-force cross-check on several fields: existence iff q = 1 mod 3
    for (auto [p, r] : {std::pair<uint64_t, uint32_t>{2, 2}, {2, 3}, {3, 2}, {7, 1}, {13, 1}, {5, 3}}) {
        auto f = Field::make(p, r);
        size_t count = 0;
        for (auto& x : f->elements())
            if (x != f->one() && !x.is_zero() && x.pow(3) == f->one()) ++count;
        CHECK((count > 0) == (f->order() % 3 == 1));
        CHECK(primitive_cube_root(*f).has_value() == (f->order() % 3 == 1));
    }
}

TEST_CASE("field axioms on random samples") {
    for (auto [p, r] : {std::pair<uint64_t, uint32_t>{2, 1}, {7, 1}, {2, 3}, {3, 2}, {5, 3}, {2, 7}}) {
        auto f = Field::make(p, r);
        auto rng = testutil::test_rng(p * 1000 + r);
        std::uniform_int_distribution<uint64_t> d(0, f->order() - 1);
        for (int i = 0; i < 100; ++i) {
            auto a = f->element(d(rng)), b = f->element(d(rng)), c = f->element(d(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == f->zero());
            if (!a.is_zero()) CHECK(a * a.inv() == f->one());
            // Frobenius is additive and multiplicative
            CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
            CHECK((a * b).pow(p) == a.pow(p) * b.pow(p));
        }
    }
}

TEST_CASE("Lagrange: a^(q-1) = 1 for all nonzero a, q <= 128") {
    for (auto [p, r] : {std::pair<uint64_t, uint32_t>{2, 7}, {5, 3}, {11, 2}, {127, 1}}) {
        auto f = Field::make(p, r);
        for (uint64_t c = 1; c < f->order(); ++c) CHECK(f->pow(c, f->order() - 1) == 1);
    }
}

TEST_CASE("element representation is canonical") {
    auto f9 = Field::make(3, 2);
    auto x = f9->from_coeffs({2, 1});
    CHECK(x.coeffs() == std::vector<uint32_t>{2, 1});
    CHECK(f9->from_coeffs({2}) == f9->from_int(2));
    CHECK_THROWS_AS(f9->from_coeffs({3, 0}), Error);
    CHECK_THROWS_AS(f9->from_coeffs({0, 0, 1}), Error);

    auto f7 = Field::make(7, 1);
    CHECK_THROWS_AS(f7->element(0) + f9->element(0), Error);
}
