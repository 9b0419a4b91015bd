#include "modcodes/intpoly.hpp"

#include <cctype>
#include <sstream>

#include "modcodes/error.hpp"
#include "modcodes/ffcore.hpp"

namespace modcodes {

IntPoly::IntPoly(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");

    std::vector<std::int64_t> coeffs;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, "'" + std::string(text) + "': " + why);
    };
    auto read_int = [&](std::int64_t& out) {
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) return false;
        out = std::stoll(s.substr(start, i - start));
        return true;
    };
    bool first = true;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        std::int64_t c = 1;
        const bool has_coeff = read_int(c);
        std::size_t exponent = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) fail("dangling '*'");
            ++i;
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::int64_t e = 0;
                if (!read_int(e)) fail("missing exponent");
                exponent = static_cast<std::size_t>(e);
            }
        } else if (!has_coeff) {
            fail("expected a term");
        }
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
        coeffs[exponent] += sign * c;
    }
    return IntPoly(std::move(coeffs));
}

std::uint32_t IntPoly::eval_mod(std::uint32_t x, std::uint32_t p) const noexcept {
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = (acc * x + ff::reduce(*it, p)) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> IntPoly::reduced(std::uint32_t p) const {
    std::vector<std::uint32_t> out;
    out.reserve(coeffs_.size());
    for (auto c : coeffs_) out.push_back(ff::reduce(c, p));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

IntPoly IntPoly::derivative() const {
    std::vector<std::int64_t> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<std::int64_t>(i));
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<std::int64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(std::int64_t c) const {
    std::vector<std::int64_t> r = coeffs_;
    for (auto& v : r) v *= c;
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

namespace {

// Fraction-free (Bareiss) determinant.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree();
    const int n = g.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = static_cast<long>(f.coeff(static_cast<std::size_t>(m - i)));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = static_cast<long>(g.coeff(static_cast<std::size_t>(n - i)));
    return bareiss_determinant(std::move(s));
}

}  // namespace

mpz_class discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "discriminant of a constant");
    if (n == 1) return 1;
    mpz_class res = resultant(f, f.derivative());
    mpz_class lead = static_cast<long>(f.leading());
    mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), lead.get_mpz_t());
    if ((n * (n - 1) / 2) % 2 != 0) res = -res;
    return res;
}

}  // namespace modcodes
