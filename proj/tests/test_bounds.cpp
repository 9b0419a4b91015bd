#include <cmath>
#include <numeric>

#include "doctest.h"
#include "modcodes/bounds.hpp"
#include "modcodes/error.hpp"
#include "modcodes/ffcore.hpp"

using namespace modcodes;
using namespace modcodes::bounds;

namespace {

// |P^1(Z/N)|: pairs (c, d) with gcd(c, d, N) = 1, modulo the units of Z/N.
std::uint64_t projective_line_size(std::uint64_t n) {
    std::uint64_t pairs = 0, units = 0;
    for (std::uint64_t c = 0; c < n; ++c) {
        if (std::gcd(c, n) == 1) ++units;
        for (std::uint64_t d = 0; d < n; ++d)
            if (std::gcd(std::gcd(c, d), n) == 1) ++pairs;
    }
    return pairs / units;
}

// Elliptic points of order 2 and 3 correspond to roots of x^2 + 1 and x^2 + x + 1 mod N.
std::uint64_t roots_mod(std::uint64_t n, std::uint64_t b) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < n; ++x)
        if ((x * x + b * x + 1) % n == 0) ++count;
    return count;
}

std::uint64_t cusps(std::uint64_t n) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        const std::uint64_t g = std::gcd(d, n / d);
        std::uint64_t phi = 0;
        for (std::uint64_t k = 1; k <= g; ++k) phi += std::gcd(k, g) == 1;
        s += phi;
    }
    return s;
}

double entropy(double q, double d) {
    if (d == 0.0) return 0.0;
    const double lq = std::log(q);
    return d * std::log(q - 1) / lq - d * std::log(d) / lq - (1 - d) * std::log(1 - d) / lq;
}

// Genera of X_0(N) for N = 1..50, from standard tables.
const std::int64_t kTabulatedGenus[51] = {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1,
                                          0,  1, 1, 1, 2, 2, 1, 0, 2, 1, 2, 2, 3, 2, 1, 3, 3, 3,
                                          1,  2, 4, 3, 3, 3, 5, 3, 4, 3, 5, 4, 3, 1, 2};

}  // namespace

TEST_CASE("mu") {
    CHECK(mu(1) == 1);
    CHECK(mu(2) == 3);
    CHECK(mu(11) == 12);
    for (std::uint64_t n = 1; n <= 120; ++n) REQUIRE(mu(n) == projective_line_size(n));
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (std::uint64_t p = 2; p < 200; ++p)
        if (ff::is_prime(static_cast<std::int64_t>(p))) CHECK(euler_phi(p) == p - 1);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        std::uint64_t c = 0;
        for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
        REQUIRE(euler_phi(n) == c);
    }
}

TEST_CASE("elliptic points and cusps against root counts") {
    for (std::uint64_t n = 1; n <= 400; ++n) {
        REQUIRE(mu2(n) == roots_mod(n, 0));
        REQUIRE(mu3(n) == roots_mod(n, 1));
        REQUIRE(mu_inf(n) == cusps(n));
    }
    CHECK(mu2(2) == 1);
    CHECK(mu2(10) == 2);
    CHECK(mu2(4) == 0);
    CHECK(mu3(9) == 0);
    CHECK(mu3(7) == 2);
}

TEST_CASE("genus of X_0(N)") {
    CHECK(genus_x0(11).genus == 1);
    CHECK(genus_x0(13).genus == 0);
    for (std::uint64_t n : {1, 3, 4, 5, 6, 7, 8, 9, 12, 13, 16, 18, 25}) CHECK(genus_x0(n).genus == 0);
    for (std::uint64_t n : {11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49}) CHECK(genus_x0(n).genus == 1);
    for (std::uint64_t n = 1; n <= 50; ++n) CHECK(genus_x0(n).genus == kTabulatedGenus[n]);

    const auto r = genus_x0(11);
    CHECK(r.mu == 12);
    CHECK(r.mu2 == 0);
    CHECK(r.mu3 == 0);
    CHECK(r.mu_inf == 2);
}

TEST_CASE("genus is integral and non-negative up to 1000") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        const auto r = genus_x0(n);
        REQUIRE(r.genus >= 0);
        // 12 (g - 1) = mu - 3 mu2 - 4 mu3 - 6 mu_inf.
        REQUIRE(12 * (r.genus - 1) == static_cast<std::int64_t>(r.mu) - 3 * static_cast<std::int64_t>(r.mu2) -
                                          4 * static_cast<std::int64_t>(r.mu3) - 6 * static_cast<std::int64_t>(r.mu_inf));
    }
}

TEST_CASE("genus of prime levels 1 mod 12") {
    CHECK(genus_prime_1mod12(13) == 0);
    CHECK(genus_prime_1mod12(37) == 2);
    CHECK(genus_prime_1mod12(61) == 4);
    for (std::uint64_t n = 13; n <= 601; n += 12)
        if (ff::is_prime(static_cast<std::int64_t>(n))) CHECK(genus_prime_1mod12(n) == genus_x0(n).genus);
    for (std::uint64_t bad : {11, 25, 49, 2}) {
        try {
            genus_prime_1mod12(bad);
            FAIL("expected PreconditionFailed");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PreconditionFailed);
        }
    }
}

TEST_CASE("prime powers") {
    for (std::uint64_t q : {2, 3, 4, 8, 9, 25, 49, 121, 1024}) CHECK(is_prime_power(q));
    for (std::uint64_t q : {0, 1, 6, 12, 36, 100}) CHECK_FALSE(is_prime_power(q));
}

TEST_CASE("Gilbert-Varshamov curve") {
    for (std::uint64_t q : {2, 3, 4, 49}) {
        const double qd = static_cast<double>(q);
        CHECK(std::abs(gv_bound(q, 0.0) - 1.0) < 1e-9);
        CHECK(std::abs(gv_bound(q, (qd - 1) / qd)) < 1e-9);
        CHECK(gv_bound(q, 1.0) == 0.0);
        // Direct entropy formula and strict decrease on a 10^4 grid.
        double previous = 2.0;
        const int grid = 10000;
        for (int i = 1; i < grid; ++i) {
            const double d = (qd - 1) / qd * i / grid;
            const double v = gv_bound(q, d);
            REQUIRE(std::abs(v - (1.0 - entropy(qd, d))) < 1e-12);
            REQUIRE(v < previous);
            previous = v;
        }
    }
    const double mid = gv_bound(49, 0.5);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    // Binary entropy at 0.11 is just under 1/2.
    CHECK(std::abs(gv_bound(2, 0.11) - 0.5000840418) < 1e-9);
}

TEST_CASE("TVZ line") {
    CHECK(std::abs(tvz_line(49, 0.0) - 5.0 / 6.0) < 1e-12);
    CHECK(std::abs(tvz_line(49, 5.0 / 6.0)) < 1e-12);
    CHECK(tvz_line(4, 0.0) == 0.0);
    CHECK(tvz_line(49, 0.9) == 0.0);
    CHECK_THROWS_AS(tvz_line(12, 0.1), Error);
    for (std::uint64_t q : {7, 8, 32}) {
        try {
            tvz_line(q, 0.1);
            FAIL("expected NotASquare");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotASquare);
        }
    }
}

TEST_CASE("TVZ exceeds GV") {
    const auto i49 = tvz_exceeds_gv(49, 1000);
    REQUIRE(i49.has_value());
    CHECK(i49->lo < i49->hi);
    CHECK(std::abs(tvz_line(49, i49->lo) - gv_bound(49, i49->lo)) < 1e-8);
    CHECK(std::abs(tvz_line(49, i49->hi) - gv_bound(49, i49->hi)) < 1e-8);
    const double mid = 0.5 * (i49->lo + i49->hi);
    CHECK(tvz_line(49, mid) > gv_bound(49, mid));
    CHECK_FALSE(tvz_exceeds_gv(4, 1000).has_value());

    // Cross-check against a direct maximum-difference scan.
    for (std::uint64_t q : {4, 9, 16, 25, 49, 64, 121, 169}) {
        double best = -1.0;
        for (int i = 0; i <= 20000; ++i) {
            const double d = i / 20000.0;
            best = std::max(best, tvz_line(q, d) - gv_bound(q, d));
        }
        CHECK(tvz_exceeds_gv(q, 1000).has_value() == (best > 1e-9));
    }
    CHECK_FALSE(tvz_exceeds_gv(25, 1000).has_value());
    CHECK(tvz_exceeds_gv(64, 1000).has_value());
}

TEST_CASE("genus bound on relative distance plus rate") {
    CHECK(prop7_bound(1, 17) == 1.0);
    CHECK(prop7_bound(1, 5) == 1.0);
    CHECK(std::abs(prop7_bound(0, 10) - 1.1) < 1e-12);
    CHECK(std::abs(prop7_bound(3, 7) - 5.0 / 7.0) < 1e-12);
    // The [17, 2, 15] code meets it with equality.
    CHECK(std::abs((15.0 + 2.0) / 17.0 - prop7_bound(1, 17)) < 1e-12);
}
