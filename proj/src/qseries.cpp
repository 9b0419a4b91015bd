#include "modcodes/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "modcodes/bounds.hpp"
#include "modcodes/error.hpp"

namespace modcodes::qs {

LaurentSeries::LaurentSeries(int lowest, std::vector<mpz_class> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {}

LaurentSeries LaurentSeries::constant(const mpz_class& c, int order) {
    if (order <= 0) return LaurentSeries(order, {});
    std::vector<mpz_class> v(static_cast<std::size_t>(order), 0);
    v[0] = c;
    return LaurentSeries(0, std::move(v));
}

mpz_class LaurentSeries::coeff(int exponent) const {
    if (exponent >= order()) {
        throw Error(ErrorCode::TruncationTooSmall,
                    "coefficient of q^" + std::to_string(exponent) + " beyond order " + std::to_string(order()));
    }
    if (exponent < lowest_) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    const int lo = std::min(lowest_, o.lowest_);
    const int ord = std::min(order(), o.order());
    if (ord <= lo) return LaurentSeries(ord, {});
    std::vector<mpz_class> v(static_cast<std::size_t>(ord - lo));
    for (int e = lo; e < ord; ++e) v[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
    return LaurentSeries(lo, std::move(v));
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& c : v) c = -c;
    return LaurentSeries(lowest_, std::move(v));
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    const int lo = lowest_ + o.lowest_;
    const int ord = std::min(order() + o.lowest_, o.order() + lowest_);
    if (ord <= lo) return LaurentSeries(ord, {});
    const std::size_t len = static_cast<std::size_t>(ord - lo);
    std::vector<mpz_class> v(len, 0);
    for (std::size_t i = 0; i < coeffs_.size() && i < len; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size() && i + j < len; ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
        }
    }
    return LaurentSeries(lo, std::move(v));
}

LaurentSeries LaurentSeries::scaled(const mpz_class& c) const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& x : v) x *= c;
    return LaurentSeries(lowest_, std::move(v));
}

LaurentSeries LaurentSeries::divided_exact(const mpz_class& c) const {
    std::vector<mpz_class> v = coeffs_;
    for (auto& x : v) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
            throw Error(ErrorCode::NonIntegralResult, "series coefficient not divisible by " + c.get_str());
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return LaurentSeries(lowest_, std::move(v));
}

LaurentSeries LaurentSeries::pow(unsigned e) const {
    if (e == 0) return constant(1, std::max(order() - lowest_, 0));
    std::optional<LaurentSeries> result;
    LaurentSeries base = *this;
    while (e != 0) {
        if (e & 1U) result = result ? *result * base : base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return *result;
}

int LaurentSeries::first_nonzero() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

LaurentSeries LaurentSeries::inverse() const {
    const int f = first_nonzero();
    if (f < 0) throw Error(ErrorCode::NotInvertible, "series is zero to its known order");
    const mpz_class& u0 = coeffs_[static_cast<std::size_t>(f)];
    if (u0 != 1 && u0 != -1) {
        throw Error(ErrorCode::NotInvertible, "leading coefficient " + u0.get_str() + " is not a unit");
    }
    const std::size_t len = coeffs_.size() - static_cast<std::size_t>(f);
    std::vector<mpz_class> v(len, 0);
    v[0] = u0;  // 1/u0 = u0 for a unit
    for (std::size_t n = 1; n < len; ++n) {
        mpz_class acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            mpz_addmul(acc.get_mpz_t(), coeffs_[static_cast<std::size_t>(f) + i].get_mpz_t(), v[n - i].get_mpz_t());
        }
        v[n] = -acc * u0;
    }
    const int e0 = lowest_ + f;
    return LaurentSeries(-e0, std::move(v));
}

LaurentSeries LaurentSeries::substitute_power(int n) const {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "substitution exponent must be positive");
    std::vector<mpz_class> v(coeffs_.size() * static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<std::size_t>(n)] = coeffs_[i];
    return LaurentSeries(lowest_ * n, std::move(v));
}

LaurentSeries LaurentSeries::shifted(int shift) const { return LaurentSeries(lowest_ + shift, coeffs_); }

LaurentSeries LaurentSeries::truncated(int ord) const {
    if (ord >= order()) return *this;
    if (ord <= lowest_) return LaurentSeries(ord, {});
    return LaurentSeries(lowest_, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + (ord - lowest_)));
}

bool LaurentSeries::is_zero() const { return first_nonzero() < 0; }

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
    const int lo = std::min(lowest_, o.lowest_);
    const int ord = std::min(order(), o.order());
    for (int e = lo; e < ord; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        const int e = lowest_ + static_cast<int>(i);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const mpz_class mag = abs(c);
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    if (first) os << '0';
    os << " + O(q^" << order() << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

mpz_class sigma(unsigned r, std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "sigma needs n >= 1");
    mpz_class total = 0;
    mpz_class term;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(term.get_mpz_t(), d, r);
        total += term;
        const std::uint64_t other = n / d;
        if (other != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), other, r);
            total += term;
        }
    }
    return total;
}

namespace {

// prod_{n>=1} (1 - q^n), known to the given order.
LaurentSeries euler_product(int order) {
    if (order <= 0) return LaurentSeries(order, {});
    std::vector<mpz_class> v(static_cast<std::size_t>(order), 0);
    v[0] = 1;
    for (int n = 1; n < order; ++n) {
        // multiply by (1 - q^n) in place, high exponents first
        for (int e = order - 1; e >= n; --e) v[static_cast<std::size_t>(e)] -= v[static_cast<std::size_t>(e - n)];
    }
    return LaurentSeries(0, std::move(v));
}

}  // namespace

LaurentSeries eta_quotient(const EtaQuotientSpec& spec, int order) {
    long weighted = 0;
    for (const auto& f : spec) {
        if (f.scale < 1) throw Error(ErrorCode::InvalidArgument, "eta scale must be positive");
        weighted += static_cast<long>(f.scale) * f.exponent;
    }
    if (weighted % 24 != 0) {
        throw Error(ErrorCode::FractionalExponent,
                    "sum of d*e = " + std::to_string(weighted) + " is not divisible by 24");
    }
    const int shift = static_cast<int>(weighted / 24);
    const int rel = order - shift;
    if (rel <= 0) return LaurentSeries(order, {});

    LaurentSeries unit = LaurentSeries::constant(1, rel);
    for (const auto& f : spec) {
        if (f.exponent == 0) continue;
        const int inner = (rel + f.scale - 1) / f.scale;
        LaurentSeries factor = euler_product(inner).substitute_power(f.scale).truncated(rel);
        if (f.exponent < 0) factor = factor.inverse();
        const unsigned e = static_cast<unsigned>(f.exponent < 0 ? -f.exponent : f.exponent);
        unit = (unit * factor.pow(e)).truncated(rel);
    }
    return unit.shifted(shift);
}

LaurentSeries eisenstein_normalized(int weight, int order) {
    unsigned r = 0;
    long scale = 0;
    if (weight == 4) {
        r = 3;
        scale = 240;
    } else if (weight == 6) {
        r = 5;
        scale = -504;
    } else {
        throw Error(ErrorCode::UnsupportedWeight, "weight " + std::to_string(weight) + " (expected 4 or 6)");
    }
    if (order <= 0) return LaurentSeries(order, {});
    std::vector<mpz_class> v(static_cast<std::size_t>(order));
    v[0] = 1;
    for (int n = 1; n < order; ++n) v[static_cast<std::size_t>(n)] = scale * sigma(r, static_cast<std::uint64_t>(n));
    return LaurentSeries(0, std::move(v));
}

LaurentSeries delta_series(int order) {
    if (order < 2) throw Error(ErrorCode::TruncationTooSmall, "delta_series needs order >= 2");
    const auto e4 = eisenstein_normalized(4, order);
    const auto e6 = eisenstein_normalized(6, order);
    auto diff = e4.pow(3) - e6.pow(2);
    // the constant terms cancel; drop the known-zero constant so the series starts at q
    diff = LaurentSeries(1, std::vector<mpz_class>(diff.coefficients().begin() + 1, diff.coefficients().end()));
    return diff.divided_exact(1728);
}

LaurentSeries j_series(int order) {
    if (order < 0) throw Error(ErrorCode::TruncationTooSmall, "j_series needs order >= 0");
    const auto delta = delta_series(order + 2);
    const auto e4 = eisenstein_normalized(4, order + 2);
    return (e4.pow(3) * delta.inverse()).truncated(order);
}

mpz_class hecke_coeff_level11(int n, int order) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "coefficient index must be positive");
    if (n >= order) {
        throw Error(ErrorCode::TruncationTooSmall,
                    "a_" + std::to_string(n) + " needs order > " + std::to_string(n));
    }
    return eta_quotient({{1, 2}, {11, 2}}, order).coeff(n);
}

// ---------------------------------------------------------------------------
// Modular polynomials

namespace {

struct JPowers {
    std::vector<LaurentSeries> x;  // j(q)^a
    std::vector<LaurentSeries> y;  // j(q^N)^b
};

JPowers j_powers(int level, int max_x, int max_y, int order) {
    // enough headroom that every monomial up to the given degrees is known to `order`
    const int work = order + max_x + level * max_y + 2;
    const auto j = j_series(work);
    const auto jn = j.substitute_power(level);
    JPowers out;
    out.x.push_back(LaurentSeries::constant(1, work + level * work));
    out.y.push_back(LaurentSeries::constant(1, work + level * work));
    for (int a = 1; a <= max_x; ++a) out.x.push_back(out.x.back() * j);
    for (int b = 1; b <= max_y; ++b) out.y.push_back(out.y.back() * jn);
    return out;
}

}  // namespace

ModularPolyCheck modular_poly_check(const BivariatePoly& h, int level, int order) {
    if (level < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
    int max_x = 0;
    int max_y = 0;
    for (const auto& [ab, c] : h) {
        if (c == 0) continue;
        if (ab.first < 0 || ab.second < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
        max_x = std::max(max_x, ab.first);
        max_y = std::max(max_y, ab.second);
    }
    const auto pw = j_powers(level, max_x, max_y, order);
    LaurentSeries sum = LaurentSeries::constant(0, order);
    for (const auto& [ab, c] : h) {
        if (c == 0) continue;
        sum = sum + (pw.x[static_cast<std::size_t>(ab.first)] * pw.y[static_cast<std::size_t>(ab.second)]).scaled(c);
    }
    sum = sum.truncated(order);
    const long mu = static_cast<long>(bounds::mu(static_cast<std::uint64_t>(level)));
    ModularPolyCheck out{sum.is_zero(), max_x == mu && max_y == mu, sum.order(), sum};
    return out;
}

BivariatePoly solve_modular_relation(int level, int max_degree, int order) {
    const auto pw = j_powers(level, max_degree, max_degree, order);
    std::vector<std::pair<int, int>> monomials;
    for (int a = 0; a <= max_degree; ++a)
        for (int b = 0; b <= max_degree; ++b) monomials.emplace_back(a, b);
    const int lowest = -max_degree - level * max_degree;
    const std::size_t cols = monomials.size();

    std::vector<LaurentSeries> terms;
    for (auto [a, b] : monomials) terms.push_back(pw.x[static_cast<std::size_t>(a)] * pw.y[static_cast<std::size_t>(b)]);

    std::vector<std::vector<mpq_class>> rows;
    for (int e = lowest; e < order; ++e) {
        std::vector<mpq_class> row(cols);
        for (std::size_t c = 0; c < cols; ++c) row[c] = terms[c].coeff(e);
        rows.push_back(std::move(row));
    }

    // Gauss-Jordan over Q
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr][c] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        const mpq_class piv = rows[r][c];
        for (auto& v : rows[r]) v /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const mpq_class f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivots.size() + 1 != cols) return {};

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<mpq_class> sol(cols, 0);
    sol[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = -rows[i][free_col];

    mpz_class den_lcm = 1;
    for (const auto& v : sol) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> ints(cols);
    mpz_class g = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        mpq_class scaled = sol[c] * den_lcm;
        ints[c] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[c].get_mpz_t());
    }
    const std::size_t lead = static_cast<std::size_t>(max_degree) * static_cast<std::size_t>(max_degree + 1);
    if (ints[lead] < 0) g = -g;
    BivariatePoly out;
    for (std::size_t c = 0; c < cols; ++c) {
        if (ints[c] == 0) continue;
        mpz_class v = ints[c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        out[monomials[c]] = v;
    }
    return out;
}

std::string to_string(const BivariatePoly& h) {
    std::ostringstream os;
    bool first = true;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        const auto& [ab, c] = *it;
        if (c == 0) continue;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const mpz_class mag = abs(c);
        const bool has_var = ab.first > 0 || ab.second > 0;
        if (!has_var || mag != 1) os << mag.get_str() << (has_var ? "*" : "");
        bool need_star = false;
        if (ab.first > 0) {
            os << 'x';
            if (ab.first > 1) os << '^' << ab.first;
            need_star = true;
        }
        if (ab.second > 0) {
            if (need_star) os << '*';
            os << 'y';
            if (ab.second > 1) os << '^' << ab.second;
        }
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace modcodes::qs
