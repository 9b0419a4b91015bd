#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "modcodes/bounds.hpp"
#include "modcodes/error.hpp"
#include "modcodes/qseries.hpp"

using namespace modcodes;
using namespace modcodes::qs;

namespace {

// prod_{n>=1} (1 - q^(d n))^e as plain power-series coefficients below `order`,
// multiplying one binomial factor at a time.
std::vector<mpz_class> naive_eta_product(int d, int e, int order) {
    std::vector<mpz_class> c(order, 0);
    c[0] = 1;
    for (int n = 1; d * n < order; ++n) {
        const int step = d * n;
        for (int rep = 0; rep < (e < 0 ? -e : e); ++rep) {
            if (e > 0) {
                for (int i = order - 1; i >= step; --i) c[i] -= c[i - step];
            } else {
                for (int i = step; i < order; ++i) c[i] += c[i - step];
            }
        }
    }
    return c;
}

mpz_class naive_sigma(unsigned r, std::uint64_t n) {
    mpz_class s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), d, r);
        s += t;
    }
    return s;
}

LaurentSeries random_series(std::mt19937& rng, int lowest, int order) {
    std::uniform_int_distribution<int> d(-50, 50);
    std::vector<mpz_class> c(order - lowest);
    for (auto& x : c) x = d(rng);
    return LaurentSeries(lowest, c);
}

}  // namespace

TEST_CASE("sigma") {
    CHECK(sigma(1, 6) == 12);
    CHECK(sigma(3, 2) == 9);
    CHECK(sigma(1, 1) == 1);
    for (unsigned r = 0; r <= 5; ++r)
        for (std::uint64_t n = 1; n <= 60; ++n) REQUIRE(sigma(r, n) == naive_sigma(r, n));
}

TEST_CASE("eta quotient examples") {
    const auto f = eta_quotient({{1, 2}, {11, 2}}, 8);
    CHECK(f.lowest_exponent() == 1);
    CHECK(f.order() == 8);
    const std::vector<int> printed{1, -2, -1, 2, 1, 2, -2};
    for (int n = 1; n < 8; ++n) CHECK(f.coeff(n) == printed[n - 1]);
    CHECK(f.to_string() == "q - 2*q^2 - q^3 + 2*q^4 + q^5 + 2*q^6 - 2*q^7 + O(q^8)");

    const auto d = eta_quotient({{1, 24}}, 4);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);
    CHECK_THROWS_AS(d.coeff(4), Error);
}

TEST_CASE("eta quotients agree with naive expansion") {
    const int order = 40;
    const std::vector<EtaQuotientSpec> specs{{{1, 24}}, {{1, 2}, {11, 2}}, {{2, 12}}, {{1, 8}, {2, 8}},
                                             {{2, 16}, {1, -8}}, {{1, 4}, {5, 4}}};
    for (const auto& spec : specs) {
        int shift = 0;
        for (const auto& [d, e] : spec) shift += d * e;
        REQUIRE(shift % 24 == 0);
        shift /= 24;
        std::vector<mpz_class> expect(order, 0);
        expect[0] = 1;
        for (const auto& [d, e] : spec) {
            const auto factor = naive_eta_product(d, e, order);
            std::vector<mpz_class> next(order, 0);
            for (int i = 0; i < order; ++i)
                for (int j = 0; i + j < order; ++j) next[i + j] += expect[i] * factor[j];
            expect = next;
        }
        const auto s = eta_quotient(spec, order + shift);
        for (int n = 0; n < order; ++n) REQUIRE(s.coeff(n + shift) == expect[n]);
    }
}

TEST_CASE("eta quotient rejects fractional prefactors") {
    try {
        eta_quotient({{1, 2}}, 10);
        FAIL("expected FractionalExponent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FractionalExponent);
    }
}

TEST_CASE("Eisenstein series") {
    const auto e4 = eisenstein_normalized(4, 3);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    const auto e6 = eisenstein_normalized(6, 2);
    CHECK(e6.coeff(0) == 1);
    CHECK(e6.coeff(1) == -504);
    const auto e4l = eisenstein_normalized(4, 30), e6l = eisenstein_normalized(6, 30);
    for (int n = 1; n < 30; ++n) {
        CHECK(e4l.coeff(n) == 240 * naive_sigma(3, n));
        CHECK(e6l.coeff(n) == -504 * naive_sigma(5, n));
    }
    // E4^2 = E8 = 1 + 480 sum sigma_7(n) q^n, an identity of weight-8 forms.
    const auto e8 = e4l * e4l;
    for (int n = 1; n < 30; ++n) CHECK(e8.coeff(n) == 480 * naive_sigma(7, n));
    CHECK_THROWS_AS(eisenstein_normalized(8, 5), Error);
}

TEST_CASE("Delta") {
    const auto d = delta_series(60);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.agrees_with(eta_quotient({{1, 24}}, 60)));
    CHECK(d.order() >= 60);
    for (int m = 2; m <= 60; m += 7) CHECK(delta_series(m).agrees_with(eta_quotient({{1, 24}}, m)));
    CHECK_THROWS_AS(delta_series(1), Error);

    // Ramanujan tau is multiplicative and satisfies tau(p^2) = tau(p)^2 - p^11 tau(1).
    auto tau = [&](int n) { return d.coeff(n); };
    CHECK(tau(6) == tau(2) * tau(3));
    CHECK(tau(10) == tau(2) * tau(5));
    mpz_class two11;
    mpz_ui_pow_ui(two11.get_mpz_t(), 2, 11);
    CHECK(tau(4) == tau(2) * tau(2) - two11);
}

TEST_CASE("j-invariant") {
    const auto j = j_series(4);
    CHECK(j.lowest_exponent() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    CHECK(j.coeff(3) == mpz_class("864299970"));

    const auto jl = j_series(30);
    const auto e4 = eisenstein_normalized(4, 31);
    const auto lhs = jl * delta_series(32);
    const auto rhs = e4.pow(3);
    CHECK(lhs.order() >= 30);
    CHECK(lhs.agrees_with(rhs));
    CHECK(j_series(0).order() == 0);
}

TEST_CASE("Hecke coefficients of the level-11 form") {
    CHECK(hecke_coeff_level11(3, 8) == -1);
    CHECK(hecke_coeff_level11(2, 8) == -2);
    CHECK(hecke_coeff_level11(7, 8) == -2);
    CHECK(hecke_coeff_level11(6, 8) == hecke_coeff_level11(2, 8) * hecke_coeff_level11(3, 8));
    CHECK(hecke_coeff_level11(6, 8) == 2);
    CHECK_THROWS_AS(hecke_coeff_level11(8, 8), Error);

    const int order = 51;
    const auto f = eta_quotient({{1, 2}, {11, 2}}, order);
    for (int m = 1; m <= 50; ++m)
        for (int n = 1; m * n <= 50; ++n)
            if (std::gcd(m, n) == 1) REQUIRE(f.coeff(m * n) == f.coeff(m) * f.coeff(n));
    // a_{p^2} = a_p^2 - p for good primes.
    for (int p : {2, 3, 5, 7}) CHECK(f.coeff(p * p) == f.coeff(p) * f.coeff(p) - p);
}

TEST_CASE("series ring laws and truncation") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, -1, 12), b = random_series(rng, 0, 15), c = random_series(rng, 1, 10);
        CHECK(((a + b) * c).agrees_with(a * c + b * c));
        CHECK((a * b).agrees_with(b * a));
        CHECK(((a * b) * c).agrees_with(a * (b * c)));
        CHECK((a - a).is_zero());
        // A product is known below min(order(a) + lowest(b), order(b) + lowest(a)).
        CHECK((a * b).order() == std::min(a.order() + b.lowest_exponent(), b.order() + a.lowest_exponent()));
        CHECK((a + b).order() == std::min(a.order(), b.order()));
    }
}

TEST_CASE("series inverse, substitution and shifts") {
    const auto d = delta_series(20);
    const auto inv = d.inverse();
    CHECK(inv.lowest_exponent() == -1);
    CHECK((d * inv).agrees_with(LaurentSeries::constant(1, 18)));
    CHECK_THROWS_AS(LaurentSeries(0, {2, 1, 1}).inverse(), Error);

    const auto s = LaurentSeries(-1, {1, 2, 3, 4});
    const auto t = s.substitute_power(3);
    CHECK(t.lowest_exponent() == -3);
    CHECK(t.coeff(-3) == 1);
    CHECK(t.coeff(0) == 2);
    CHECK(t.coeff(-2) == 0);
    CHECK(t.coeff(6) == 4);
    CHECK(t.order() == 9);
    CHECK(s.shifted(2).coeff(1) == 1);
    CHECK(s.truncated(1).order() == 1);
    CHECK(s.scaled(3).coeff(2) == 12);
    CHECK(s.scaled(6).divided_exact(3).coeff(2) == 8);
    CHECK_THROWS_AS(s.divided_exact(2), Error);
    CHECK(s.coeff(-5) == 0);
    CHECK(s.to_string() == "q^-1 + 2 + 3*q + 4*q^2 + O(q^3)");
}

TEST_CASE("modular polynomial check") {
    BivariatePoly diag{{{1, 0}, 1}, {{0, 1}, -1}};
    CHECK(modular_poly_check(diag, 1, 10).vanishes);
    const auto bad = modular_poly_check(diag, 2, 10);
    CHECK_FALSE(bad.vanishes);
    CHECK_FALSE(bad.residual.is_zero());

    // The classical modular polynomial of level 2.
    const mpz_class c1488 = 1488, c162 = -162000, c4077 = 40773375, c8748("8748000000"), c0("-157464000000000");
    BivariatePoly phi2{{{3, 0}, 1},      {{0, 3}, 1},      {{2, 2}, -1},     {{2, 1}, c1488}, {{1, 2}, c1488},
                       {{2, 0}, c162},   {{0, 2}, c162},   {{1, 1}, c4077},  {{1, 0}, c8748}, {{0, 1}, c8748},
                       {{0, 0}, c0}};
    const auto good = modular_poly_check(phi2, 2, 40);
    CHECK(good.vanishes);
    CHECK(good.degree_matches);
    CHECK(bounds::mu(2) == 3);

    const auto solved = solve_modular_relation(2, 3, 40);
    CHECK(solved == phi2);
    for (const auto& [ab, c] : solved) CHECK(solved.at({ab.second, ab.first}) == c);

    auto perturbed = phi2;
    perturbed[{0, 0}] += 1;
    CHECK_FALSE(modular_poly_check(perturbed, 2, 40).vanishes);
}
