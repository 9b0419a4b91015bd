#include <functional>
#include <random>

#include "doctest.h"
#include "modcodes/codes.hpp"

using namespace modcodes;
using namespace modcodes::codes;
using curves::CurvePoint;
using ff::FFMatrix;

namespace {

const curves::WeierstrassModel kLevel19{0, 1, 1, 1, 0};

std::vector<CurvePoint> affine_points(const std::vector<CurvePoint>& all) {
    std::vector<CurvePoint> out;
    for (const auto& pt : all)
        if (!pt.is_infinity()) out.push_back(pt);
    return out;
}

LinearCode level19_code(std::int64_t p, unsigned a) {
    const auto pts = affine_points(curves::enumerate_points(kLevel19, p));
    return evaluation_code(rr::one_point_basis(rr::CurveKind::elliptic(), a), pts, p);
}

LinearCode septic_code(unsigned a) {
    const curves::HyperellipticModel m{IntPoly::parse("x^7-x"), IntPoly()};
    const auto pts = affine_points(curves::enumerate_points(m, 7));
    return evaluation_code(rr::one_point_basis(rr::CurveKind::hyperelliptic(7), a), pts, 7);
}

// Every linear combination of the rows, counted by weight, with a plain recursive sweep.
std::vector<long> naive_distribution(const FFMatrix& g) {
    const std::uint32_t p = g.modulus();
    std::vector<long> counts(g.cols() + 1, 0);
    std::vector<std::uint32_t> word(g.cols(), 0);
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == g.rows()) {
            std::size_t w = 0;
            for (auto v : word) w += v != 0;
            ++counts[w];
            return;
        }
        const auto saved = word;
        for (std::uint32_t c = 0; c < p; ++c) {
            for (std::size_t j = 0; j < word.size(); ++j) word[j] = (saved[j] + c * g.entry(row, j)) % p;
            self(self, row + 1);
        }
        word = saved;
    };
    rec(rec, 0);
    return counts;
}

WeightDistribution from_longs(const std::vector<long>& v) {
    WeightDistribution w;
    for (long x : v) w.counts.emplace_back(x);
    return w;
}

FFMatrix random_matrix(std::mt19937& rng, std::uint32_t p, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    FFMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d(rng));
    return m;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("evaluation codes from the level-19 curve") {
    const auto c = level19_code(13, 2);
    CHECK(c.n == 17);
    CHECK(c.k == 2);
    CHECK(c.warnings.empty());
    for (unsigned a = 2; a <= 10; ++a) CHECK(level19_code(13, a).k == a);

    const auto small = level19_code(3, 2);
    CHECK(small.n == 5);
    CHECK(small.k == 2);
}

TEST_CASE("level-19 distributions over GF(13) for a = 2, 3, 4") {
    const auto w2 = weight_distribution(level19_code(13, 2));
    CHECK(render(w2, Convention::Table2) == "x^17+96x^2+12x+60");
    CHECK(w2.counts[15] == 96);
    CHECK(w2.counts[16] == 12);
    CHECK(w2.counts[17] == 60);
    CHECK(w2.total() == 169);

    const auto w4 = weight_distribution(level19_code(13, 4));
    CHECK(w4.counts[13] == 1608);
    CHECK(w4.counts[14] == 1728);
    CHECK(w4.counts[15] == 8016);
    CHECK(w4.counts[16] == 9684);
    CHECK(w4.counts[17] == 7524);
    for (std::size_t w = 1; w < 13; ++w) CHECK(w4.counts[w] == 0);

    const auto w3 = weight_distribution(level19_code(13, 3));
    CHECK(w3.counts[14] == 456);
}

TEST_CASE("small level-19 code over GF(3)") {
    const auto c = level19_code(3, 2);
    const auto w = weight_distribution(c);
    CHECK(render(w, Convention::Table2) == "x^5+4x^2+2x+2");
    CHECK(w.counts == std::vector<mpz_class>{1, 0, 0, 4, 2, 2});
    CHECK(min_distance(c) == 3);
}

TEST_CASE("codes from y^2 = x^7 - x") {
    const auto c2 = septic_code(2), c4 = septic_code(4);
    CHECK(c2.n == 7);
    CHECK(c2.k == 2);
    CHECK(c4.k == 3);
    CHECK(render(weight_distribution(c2), Convention::Plain) == "1+42x^6+6x^7");
    CHECK(render(weight_distribution(c4), Convention::Plain) == "1+126x^5+84x^6+132x^7");
    const auto p2 = code_parameters(c2);
    CHECK(p2.d == 6);
    CHECK(p2.mds);
    CHECK(p2.t == 2);
    CHECK(min_distance(c4) == 5);
    CHECK(code_parameters(c4).mds);
    CHECK(elliptic_sum_property(p2, 3));

    const auto sf = systematic(c4);
    const auto h = ff::check_matrix(sf.matrix);
    CHECK((h * sf.matrix.transpose()).is_zero());
    CHECK(min_distance_by_columns(h) == 5);
}

TEST_CASE("code parameters for the level-19 family over GF(13)") {
    CHECK(code_parameters(level19_code(13, 2)).t == 7);
    CHECK(code_parameters(level19_code(13, 9)).t == 3);
    for (unsigned a = 2; a <= 7; ++a) {
        const auto c = level19_code(13, a);
        const auto params = code_parameters(c);
        CHECK(params.d <= params.n - params.k + 1);
        CHECK(params.d >= params.n - a);
        CHECK(elliptic_sum_property(params, 1));
        CHECK(params.t == (params.d - 1) / 2);
    }
    CHECK(elliptic_sum_property(parameters_from(17, 2, 15), 1));
    CHECK_FALSE(elliptic_sum_property(parameters_from(17, 2, 14), 1));
    CHECK(parameters_from(7, 2, 6).mds);
}

TEST_CASE("all routes agree with the naive oracle on random codes") {
    std::mt19937 rng(99);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t n = 3 + trial % 6, rows = 1 + trial % n;
            const auto code = LinearCode::from_matrix(random_matrix(rng, p, rows, n), "random");
            if (code.k == 0) continue;
            const auto expect = from_longs(naive_distribution(code.generator));
            for (Strategy s : {Strategy::Direct, Strategy::Dual, Strategy::SupportRank, Strategy::Auto}) {
                EnumerationOptions opts;
                opts.strategy = s;
                CHECK(weight_distribution(code, opts) == expect);
            }
            CHECK(min_distance(code) == expect.min_weight().value_or(0));
            if (code.k < n) {
                const auto h = dual_generator(code);
                CHECK((h * code.generator.transpose()).is_zero());
                CHECK(ff::rank(h) == n - code.k);
                CHECK(kernel_distribution(h) == expect);
                if (expect.min_weight()) CHECK(min_distance_by_columns(h) == *expect.min_weight());
            }
        }
    }
}

TEST_CASE("direct and support-rank routes agree on the level-19 family") {
    for (unsigned a = 2; a <= 6; ++a) {
        const auto c = level19_code(13, a);
        EnumerationOptions direct{Strategy::Direct, 1, kDefaultEnumerationLimit};
        EnumerationOptions rank{Strategy::SupportRank, 1, kDefaultEnumerationLimit};
        const auto wd = weight_distribution(c, direct);
        CHECK(weight_distribution(c, rank) == wd);
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), 13, a);
        CHECK(wd.total() == total);
        CHECK(wd.counts[0] == 1);
    }
}

TEST_CASE("parallel enumeration is deterministic") {
    const auto c = level19_code(13, 4);
    const auto serial = weight_distribution(c, {Strategy::Direct, 1, kDefaultEnumerationLimit});
    for (unsigned jobs : {2u, 3u, 7u})
        CHECK(weight_distribution(c, {Strategy::Direct, jobs, kDefaultEnumerationLimit}) == serial);
    const auto dual = weight_distribution(level19_code(13, 14), {Strategy::Dual, 1, kDefaultEnumerationLimit});
    CHECK(weight_distribution(level19_code(13, 14), {Strategy::Dual, 4, kDefaultEnumerationLimit}) == dual);
}

TEST_CASE("MacWilliams transform") {
    // Whole space [4, 4] over GF(3): A_w = C(4, w) 2^w; its dual is the zero code.
    WeightDistribution whole{{1, 8, 24, 32, 16}};
    const auto dual = macwilliams_transform(whole, 4, 3);
    CHECK(dual.counts == std::vector<mpz_class>{1, 0, 0, 0, 0});

    const auto w2 = weight_distribution(level19_code(13, 2));
    const auto d2 = macwilliams_transform(w2, 2, 13);
    mpz_class dual_size;
    mpz_ui_pow_ui(dual_size.get_mpz_t(), 13, 15);
    CHECK(d2.total() == dual_size);
    CHECK(macwilliams_transform(d2, 15, 13) == w2);

    WeightDistribution bogus{{1, 1, 0}};
    CHECK(code_of([&] { macwilliams_transform(bogus, 1, 3); }) == ErrorCode::NonIntegralResult);

    // K_w(0) = C(n, w) (p - 1)^w.
    CHECK(krawtchouk(5, 3, 2, 0) == 40);
    CHECK(krawtchouk(5, 2, 0, 3) == 1);
}

TEST_CASE("Shokrollahi template") {
    const auto w2 = weight_distribution(level19_code(13, 2));
    const auto r = shokrollahi_check(w2, 17, 2, 13);
    CHECK(r.consistent);
    CHECK(r.b_a == 96);
    CHECK(r.coprime);
    CHECK(r.gcd == 1);

    auto perturbed = w2;
    perturbed.counts[16] += 1;
    CHECK_FALSE(shokrollahi_check(perturbed, 17, 2, 13).consistent);

    // The [5, 1] repetition code over GF(3): W(x) = x^5 + 2.
    WeightDistribution rep{{1, 0, 0, 0, 0, 2}};
    const auto r1 = shokrollahi_check(rep, 5, 1, 3);
    CHECK(r1.consistent);
    CHECK(r1.b_a == 0);

    for (unsigned a = 3; a <= 5; ++a) {
        const auto w = weight_distribution(level19_code(13, a));
        const auto ra = shokrollahi_check(w, 17, a, 13);
        CHECK(ra.consistent);
        CHECK(ra.b_a >= 0);
    }
}

TEST_CASE("evaluation code errors and rank deficiency") {
    const auto pts = affine_points(curves::enumerate_points(kLevel19, 13));
    auto dup = pts;
    dup.push_back(pts[0]);
    const auto basis = rr::one_point_basis(rr::CurveKind::elliptic(), 2);
    CHECK(code_of([&] { evaluation_code(basis, dup, 13); }) == ErrorCode::DuplicatePoint);
    auto with_inf = pts;
    with_inf.push_back(CurvePoint::infinity(13));
    CHECK(code_of([&] { evaluation_code(basis, with_inf, 13); }) == ErrorCode::SupportCollision);
    CHECK(code_of([&] { evaluation_code(basis, pts, 7); }) == ErrorCode::ModulusMismatch);

    // Two points only: x and x^2 on two points cannot give rank 3.
    const std::vector<CurvePoint> two{pts[0], pts[2]};
    const auto c = evaluation_code(rr::one_point_basis(rr::CurveKind::elliptic(), 4), two, 13);
    CHECK(c.k == 2);
    CHECK_FALSE(c.warnings.empty());
    CHECK(c.evaluation.rows() == 4);

    using T = std::array<ff::FieldElement, 3>;
    auto t = [](std::int64_t x, std::int64_t y, std::int64_t z) {
        return T{ff::FieldElement(x, 7), ff::FieldElement(y, 7), ff::FieldElement(z, 7)};
    };
    CHECK(code_of([&] { evaluation_code(rr::conic_basis(), {t(1, 0, 2), t(2, 0, 4)}, 7); }) ==
          ErrorCode::DuplicatePoint);
    CHECK(code_of([&] { evaluation_code(rr::conic_basis(), {t(1, 2, 3)}, 7); }) == ErrorCode::SupportCollision);
}

TEST_CASE("enumeration limits") {
    const auto c = level19_code(13, 6);
    CHECK(code_of([&] { weight_distribution(c, {Strategy::Direct, 1, 1000}); }) == ErrorCode::TooLarge);
    CHECK(code_of([&] { enumerate_row_space(c.generator, 1, 1000); }) == ErrorCode::TooLarge);
    // Auto falls back to support ranks when neither side is enumerable.
    CHECK(weight_distribution(c, {Strategy::Auto, 1, 1000}) == weight_distribution(c));
}

TEST_CASE("strategy and convention parsing") {
    CHECK(parse_strategy("auto") == Strategy::Auto);
    CHECK(parse_strategy("direct") == Strategy::Direct);
    CHECK(parse_strategy("dual") == Strategy::Dual);
    CHECK(parse_strategy("rank") == Strategy::SupportRank);
    CHECK(to_string(Strategy::SupportRank) == "rank");
    CHECK_THROWS_AS(parse_strategy("fast"), Error);
    CHECK(parse_convention("table2") == Convention::Table2);
    CHECK(parse_convention("plain") == Convention::Plain);
    CHECK_THROWS_AS(parse_convention("other"), Error);
    WeightDistribution w{{1, 0, 3}};
    CHECK(render(w, Convention::Plain) == "1+3x^2");
    CHECK(render(w, Convention::Table2) == "x^2+3");
    CHECK(w.min_weight() == 2u);
    CHECK(WeightDistribution{{1, 0}}.min_weight() == std::nullopt);
}
