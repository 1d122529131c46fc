#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include <cabcode/field.hpp>

using namespace cabcode;

TEST_CASE("field construction validates its parameters") {
    Field f(2, 3);
    CHECK(f.p() == 2);
    CHECK(f.m() == 3);
    CHECK(f.q() == 8);
    CHECK(f.modulus().size() == 4);
    CHECK(f.modulus().back() == 1);

    Field g(3, 2);
    CHECK(g.q() == 9);

    CHECK_THROWS_AS(Field(4, 2), NonPrimeBase);
    CHECK_THROWS_AS(Field(1, 2), NonPrimeBase);
    CHECK_THROWS_AS(Field(2, 0), BadRange);
    CHECK_THROWS_AS(Field(2, 21), SizeExceeded);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937 rng(987654);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> shapes = {
        {2, 3}, {2, 4}, {2, 5}, {3, 2}, {5, 1}, {7, 2}};
    for (auto [p, m] : shapes) {
        Field f(p, m);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.q() - 1));
        for (int t = 0; t < 1200; ++t) {
            std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(f.addv(a, b) == f.addv(b, a));
            CHECK(f.mulv(a, b) == f.mulv(b, a));
            CHECK(f.addv(f.addv(a, b), c) == f.addv(a, f.addv(b, c)));
            CHECK(f.mulv(f.mulv(a, b), c) == f.mulv(a, f.mulv(b, c)));
            CHECK(f.mulv(a, f.addv(b, c)) == f.addv(f.mulv(a, b), f.mulv(a, c)));
            CHECK(f.addv(a, 0) == a);
            CHECK(f.mulv(a, 1) == a);
            CHECK(f.addv(a, f.negv(a)) == 0);
            CHECK(f.subv(f.addv(a, b), b) == a);
            if (a != 0) {
                CHECK(f.mulv(a, f.invv(a)) == 1);
                CHECK(f.divv(f.mulv(a, b), a) == b);
            }
        }
    }
}

TEST_CASE("frobenius is additive") {
    for (auto [p, m] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {2, 4}, {3, 2}}) {
        Field f(p, m);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.powv(f.addv(a, b), p) == f.addv(f.powv(a, p), f.powv(b, p)));
    }
}

TEST_CASE("powers agree with iterated products") {
    Field f(2, 4);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
        std::uint32_t acc = 1;
        for (std::uint64_t e = 0; e <= 2 * f.q(); ++e) {
            CHECK(f.powv(a, e) == acc);
            acc = f.mulv(acc, a);
        }
        if (a != 0) CHECK(f.powv(a, f.q() - 1) == 1);
        CHECK(f.powv(a, f.q()) == a);
    }
}

TEST_CASE("from_int wraps modulo the characteristic") {
    Field f(2, 3);
    CHECK(f.from_int(0) == 0);
    CHECK(f.from_int(1) == 1);
    CHECK(f.from_int(2) == 0);
    CHECK(f.from_int(-1) == 1);
    Field g(5, 1);
    CHECK(g.from_int(7) == 2);
    CHECK(g.from_int(-3) == 2);
}

TEST_CASE("prime subfield membership") {
    Field f(3, 2);
    int count = 0;
    for (std::uint32_t a = 0; a < f.q(); ++a)
        if (f.in_prime_subfield(a)) ++count;
    CHECK(count == 3);
}

TEST_CASE("inverse of zero throws") {
    Field f(2, 3);
    CHECK_THROWS_AS(f.invv(0), DivisionByZero);
    CHECK_THROWS_AS(f.divv(1, 0), DivisionByZero);
}

TEST_CASE("construction is deterministic") {
    Field f1(2, 4), f2(2, 4);
    CHECK(f1.modulus() == f2.modulus());
    CHECK(f1.modulus_string() == f2.modulus_string());
    for (std::uint32_t a = 0; a < f1.q(); ++a)
        for (std::uint32_t b = 0; b < f1.q(); ++b)
            CHECK(f1.mulv(a, b) == f2.mulv(a, b));
}

TEST_CASE("modulus has no roots in the prime subfield") {
    // Necessary (not sufficient) irreducibility check, kept independent of
    // the log-table construction.
    for (auto [p, m] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {2, 5}, {3, 2}, {5, 2}}) {
        Field f(p, m);
        for (std::uint32_t x = 0; x < p; ++x) {
            std::uint64_t acc = 0;
            for (std::size_t i = f.modulus().size(); i-- > 0;)
                acc = (acc * x + f.modulus()[i]) % p;
            CHECK(acc != 0);
        }
    }
}

TEST_CASE("element wrapper mirrors the table operations") {
    Field f(2, 3), g(2, 3);
    Element a(f, 3), b(f, 5);
    CHECK((a + b).v == f.addv(3, 5));
    CHECK((a - b).v == f.subv(3, 5));
    CHECK((a * b).v == f.mulv(3, 5));
    CHECK((a / b).v == f.divv(3, 5));
    CHECK((-a).v == f.negv(3));
    CHECK(a == Element(f, 3));
    CHECK(a != b);
    Element other(g, 3);
    CHECK_THROWS_AS((void)(a + other), MixedFields);
}

TEST_CASE("univariate horner evaluation") {
    Field f(2, 3);
    // x^2 + x + 1 at a few points
    std::vector<std::uint32_t> coeffs = {1, 1, 1};
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        std::uint32_t want = f.addv(f.addv(f.mulv(x, x), x), 1);
        CHECK(eval_univariate(f, coeffs, x) == want);
    }
}

TEST_CASE("field spec strings parse") {
    CHECK(parse_field_spec("2^3") == std::pair<std::uint64_t, std::uint64_t>{2, 3});
    CHECK(parse_field_spec("5") == std::pair<std::uint64_t, std::uint64_t>{5, 1});
    CHECK_THROWS_AS(parse_field_spec("2^"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("x^2"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("2^3x"), ParseError);
}
