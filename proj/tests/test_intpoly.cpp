#include "doctest.h"
#include "modcodes/error.hpp"
#include "modcodes/intpoly.hpp"

using modcodes::IntPoly;

TEST_CASE("parse and render") {
    CHECK(IntPoly::parse("x^7-x").coefficients() == std::vector<std::int64_t>{0, -1, 0, 0, 0, 0, 0, 1});
    CHECK(IntPoly::parse("-x^2 - x - 1") == IntPoly({-1, -1, -1}));
    CHECK(IntPoly::parse("3*x^2+2x+5") == IntPoly({5, 2, 3}));
    CHECK(IntPoly::parse("x^2 + x^2") == IntPoly({0, 0, 2}));
    CHECK(IntPoly::parse("0").is_zero());
    CHECK(IntPoly::parse("x^3 - x^2 + 1").to_string() == "x^3 - x^2 + 1");
    CHECK(IntPoly({0, -1, 0, 2}).to_string() == "2x^3 - x");
    CHECK(IntPoly().to_string() == "0");
    CHECK_THROWS_AS(IntPoly::parse("x^"), modcodes::Error);
    CHECK_THROWS_AS(IntPoly::parse("y+1"), modcodes::Error);
    CHECK_THROWS_AS(IntPoly::parse(""), modcodes::Error);
}

TEST_CASE("round trip through text") {
    for (const auto& p : {IntPoly({1, 2, 3}), IntPoly({0, 0, -7, 1}), IntPoly({-5}), IntPoly({0, 1})})
        CHECK(IntPoly::parse(p.to_string()) == p);
}

TEST_CASE("ring operations") {
    const IntPoly a({1, 1}), b({-1, 1});
    CHECK(a * b == IntPoly({-1, 0, 1}));
    CHECK(a + b == IntPoly({0, 2}));
    CHECK((a + b.scaled(-1)) == IntPoly({2}));
    CHECK(a.scaled(0).is_zero());
    CHECK(IntPoly({5, 3, 0, 2}).derivative() == IntPoly({3, 0, 6}));
    CHECK(IntPoly({4}).derivative().is_zero());
    CHECK(IntPoly({1, 0, 0}).degree() == 0);
    CHECK(IntPoly().degree() == -1);
}

TEST_CASE("evaluation and reduction mod p") {
    const auto f = IntPoly::parse("x^3 - x^2");
    for (std::uint32_t x = 0; x < 13; ++x) {
        const std::int64_t v = static_cast<std::int64_t>(x) * x * x - static_cast<std::int64_t>(x) * x;
        CHECK(f.eval_mod(x, 13) == static_cast<std::uint32_t>(((v % 13) + 13) % 13));
    }
    CHECK(IntPoly::parse("7x^2 + 1").reduced(7) == std::vector<std::uint32_t>{1});
    CHECK(IntPoly::parse("-x").reduced(5) == std::vector<std::uint32_t>{0, 4});
}

TEST_CASE("discriminant") {
    // b^2 - 4ac and -4p^3 - 27q^2 are the closed forms for degrees 2 and 3.
    CHECK(modcodes::discriminant(IntPoly({1, 3, 2})) == 9 - 8);
    CHECK(modcodes::discriminant(IntPoly({1, 0, 1})) == -4);
    CHECK(modcodes::discriminant(IntPoly({-1, 0, 0, 1})) == -27);
    CHECK(modcodes::discriminant(IntPoly({0, -1, 0, 1})) == 4);
    for (std::int64_t p = -4; p <= 4; ++p)
        for (std::int64_t q = -4; q <= 4; ++q)
            CHECK(modcodes::discriminant(IntPoly({q, p, 0, 1})) == -4 * p * p * p - 27 * q * q);
    // Repeated root.
    CHECK(modcodes::discriminant(IntPoly({1, -2, 1})) == 0);
    CHECK(modcodes::discriminant(IntPoly({-1, 1})) == 1);
    CHECK_THROWS_AS(modcodes::discriminant(IntPoly({3})), modcodes::Error);
}

TEST_CASE("discriminant from integer roots") {
    // For monic f with roots r_i, disc f = prod_{i<j} (r_i - r_j)^2.
    const std::vector<std::vector<std::int64_t>> root_sets{{0, 1, 2, 3}, {-2, 1, 5}, {1, 4, -3, 7, 2}, {2, 2, 5}};
    for (const auto& roots : root_sets) {
        IntPoly f({1});
        mpz_class expect = 1;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            f = f * IntPoly({-roots[i], 1});
            for (std::size_t j = i + 1; j < roots.size(); ++j) expect *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
        }
        CHECK(modcodes::discriminant(f) == expect);
        // Scaling by c multiplies the discriminant by c^(2n-2).
        mpz_class c_pow = 1;
        for (std::size_t i = 0; i + 2 < 2 * roots.size(); ++i) c_pow *= 3;
        CHECK(modcodes::discriminant(f.scaled(3)) == expect * c_pow);
    }
}
