#include <set>

#include "doctest.h"
#include "modcodes/riemann_roch.hpp"

using namespace modcodes;
using namespace modcodes::rr;
using ff::FieldElement;

namespace {

std::array<FieldElement, 3> triple(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t p) {
    return {FieldElement(x, p), FieldElement(y, p), FieldElement(z, p)};
}

}  // namespace

TEST_CASE("one-point bases") {
    CHECK(one_point_basis(CurveKind::elliptic(), 2) == std::vector<MonomialFunction>{{0, 0}, {1, 0}});
    CHECK(one_point_basis(CurveKind::elliptic(), 6) ==
          std::vector<MonomialFunction>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}});
    CHECK(one_point_basis(CurveKind::hyperelliptic(7), 4) == std::vector<MonomialFunction>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(one_point_basis(CurveKind::hyperelliptic(7), 7).size() == 5);
    CHECK(one_point_basis(CurveKind::elliptic(), 0).size() == 1);
    CHECK(one_point_basis(CurveKind::elliptic(), 1).size() == 1);
    CHECK_THROWS_AS(CurveKind::hyperelliptic(4), Error);
    CHECK_THROWS_AS(CurveKind::hyperelliptic(1), Error);
}

TEST_CASE("elliptic bases have dimension a with distinct pole orders") {
    for (unsigned a = 1; a <= 30; ++a) {
        const auto basis = one_point_basis(CurveKind::elliptic(), a);
        CHECK(basis.size() == a);
        std::set<unsigned> orders;
        unsigned previous = 0;
        for (const auto& m : basis) {
            const unsigned o = pole_order(m, CurveKind::elliptic());
            CHECK(o == 2 * m.i + 3 * m.j);
            CHECK(o <= a);
            CHECK(o >= previous);
            previous = o;
            orders.insert(o);
        }
        CHECK(orders.size() == basis.size());
        CHECK_FALSE(orders.count(1));
    }
}

TEST_CASE("hyperelliptic bases count the semigroup <2, deg f>") {
    for (unsigned deg : {3u, 5u, 7u, 9u}) {
        for (unsigned a = 0; a <= 25; ++a) {
            std::size_t expect = 0;
            for (unsigned o = 0; o <= a; ++o) {
                bool reachable = false;
                for (unsigned j = 0; j <= 1; ++j)
                    if (o >= j * deg && (o - j * deg) % 2 == 0) reachable = true;
                expect += reachable;
            }
            CHECK(one_point_basis(CurveKind::hyperelliptic(deg), a).size() == expect);
        }
    }
}

TEST_CASE("monomial evaluation") {
    const auto p13 = curves::CurvePoint::affine(FieldElement(5, 13), FieldElement(3, 13));
    const auto p7 = curves::CurvePoint::affine(FieldElement(1, 7), FieldElement(3, 7));
    CHECK(eval_monomial({0, 0}, p13).value() == 1);
    CHECK(eval_monomial({1, 0}, p13).value() == 5);
    CHECK(eval_monomial({1, 1}, p7).value() == 3);
    CHECK(eval_monomial({2, 1}, p13).value() == (25 * 3) % 13);
    CHECK_THROWS_AS(eval_monomial({1, 0}, curves::CurvePoint::infinity(13)), Error);
    CHECK(to_string(MonomialFunction{0, 0}) == "1");
    CHECK(to_string(MonomialFunction{1, 0}) == "x");
    CHECK(to_string(MonomialFunction{0, 1}) == "y");
    CHECK(to_string(MonomialFunction{2, 1}) == "x^2*y");
}

TEST_CASE("conic ratios") {
    const auto basis = conic_basis();
    REQUIRE(basis.size() == 6);
    CHECK(to_string(basis[0]) == "1");
    CHECK(to_string(basis[1]) == "x^2/phi");
    CHECK(to_string(basis[4]) == "xy/phi");
    CHECK(to_string(basis[5]) == "yz/phi");

    CHECK(eval_projective(basis[1], triple(0, 0, 1, 7)).value() == 0);
    CHECK(eval_projective(basis[1], triple(1, 0, 2, 7)).value() == 3);
    for (std::int64_t l = 1; l < 7; ++l) CHECK(eval_projective(basis[1], triple(l, 0, 2 * l, 7)).value() == 3);

    try {
        eval_projective(basis[1], triple(0, 0, 0, 7));
        FAIL("expected ZeroTriple");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroTriple);
    }
    // 1 + 2^2 + 3^2 = 14 = 0 mod 7.
    try {
        eval_projective(basis[2], triple(1, 2, 3, 7));
        FAIL("expected DenominatorVanishes");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DenominatorVanishes);
    }
}

TEST_CASE("conic ratios are scaling invariant and phi/phi is 1, exhaustive over GF(7)") {
    const std::int64_t p = 7;
    const auto basis = conic_basis();
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            for (std::int64_t z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                const auto pt = triple(x, y, z, p);
                if (eval_form(kConicPhi, pt).is_zero()) continue;
                CHECK(eval_projective(basis[0], pt).value() == 1);
                for (const auto& r : basis) {
                    const auto v = eval_projective(r, pt);
                    for (std::int64_t l = 2; l < p; ++l) REQUIRE(eval_projective(r, triple(l * x, l * y, l * z, p)) == v);
                }
            }
}

TEST_CASE("quadratic form evaluation") {
    const QuadraticForm q{1, 2, 3, 4, 5, 6};
    // x^2 + 2y^2 + 3z^2 + 4xy + 5yz + 6xz at (1, 2, 3) = 1 + 8 + 27 + 8 + 30 + 18 = 92.
    CHECK(eval_form(q, triple(1, 2, 3, 101)).value() == 92);
    CHECK(eval_form(kConicPhi, triple(1, 0, 2, 7)).value() == 5);
}
