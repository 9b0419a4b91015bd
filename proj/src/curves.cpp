#include "modcodes/curves.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "modcodes/error.hpp"

namespace modcodes::curves {

using ff::FieldElement;

// ---------------------------------------------------------------------------
// Models

CurveModel CurveModel::from(const WeierstrassModel& w) {
    return CurveModel{IntPoly({w.a3, w.a1}), IntPoly({w.a6, w.a4, w.a2, 1})};
}

CurveModel CurveModel::from(const HyperellipticModel& m) {
    const int df = m.f.degree();
    if (df < 3 || df % 2 == 0) {
        throw Error(ErrorCode::InvalidArgument, "hyperelliptic f must have odd degree >= 3");
    }
    if (m.h.degree() > df / 2) {
        throw Error(ErrorCode::InvalidArgument, "deg h must be at most deg f / 2");
    }
    return CurveModel{m.h, m.f};
}

IntPoly CurveModel::branch_polynomial() const { return h * h + f.scaled(4); }

int CurveModel::genus() const {
    const int d = branch_polynomial().degree();
    return d < 1 ? 0 : (d - 1) / 2;
}

std::optional<WeierstrassModel> CurveModel::as_weierstrass() const {
    if (h.degree() > 1 || f.degree() != 3 || f.leading() != 1) return std::nullopt;
    return WeierstrassModel{h.coeff(1), f.coeff(2), h.coeff(0), f.coeff(1), f.coeff(0)};
}

std::string CurveModel::to_string() const {
    std::ostringstream os;
    os << "y^2";
    if (!h.is_zero()) {
        const auto& c = h.coefficients();
        const bool monomial = std::count_if(c.begin(), c.end(), [](auto v) { return v != 0; }) == 1;
        if (monomial) {
            const std::string hs = h.to_string();
            if (hs == "1") {
                os << " + y";
            } else if (hs == "-1") {
                os << " - y";
            } else if (hs.front() == '-') {
                os << " - " << hs.substr(1) << "*y";
            } else {
                os << " + " << hs << "*y";
            }
        } else {
            os << " + (" << h.to_string() << ")*y";
        }
    }
    os << " = " << f.to_string();
    return os.str();
}

mpz_class discriminant(const WeierstrassModel& w) {
    const mpz_class a1 = static_cast<long>(w.a1), a2 = static_cast<long>(w.a2), a3 = static_cast<long>(w.a3),
                    a4 = static_cast<long>(w.a4), a6 = static_cast<long>(w.a6);
    const mpz_class b2 = a1 * a1 + 4 * a2;
    const mpz_class b4 = 2 * a4 + a1 * a3;
    const mpz_class b6 = a3 * a3 + 4 * a6;
    const mpz_class b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

mpz_class discriminant(const CurveModel& m) {
    if (auto w = m.as_weierstrass()) return discriminant(*w);
    const IntPoly q = m.branch_polynomial();
    const int d = q.degree();
    if (d < 3) throw Error(ErrorCode::InvalidArgument, "branch polynomial of degree < 3");
    const int g = (d - 1) / 2;
    mpz_class disc = discriminant(q);
    if (d % 2 == 1) {
        // binary form of degree d + 1 with vanishing leading coefficient
        const mpz_class lead = static_cast<long>(q.leading());
        disc *= lead * lead;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(4 * g));
    return scale * disc;
}

// ---------------------------------------------------------------------------
// Points

CurvePoint CurvePoint::affine(const FieldElement& x, const FieldElement& y) {
    if (x.modulus() != y.modulus()) throw Error(ErrorCode::ModulusMismatch, "point coordinates from different fields");
    return CurvePoint(false, x.modulus(), x.value(), y.value(), 0);
}

CurvePoint CurvePoint::infinity(std::uint32_t p, std::uint32_t branch) noexcept {
    return CurvePoint(true, p, 0, 0, branch);
}

FieldElement CurvePoint::x() const {
    if (infinity_) throw Error(ErrorCode::InfinityEvaluation, "point at infinity has no affine x");
    return FieldElement::unchecked(x_, p_);
}

FieldElement CurvePoint::y() const {
    if (infinity_) throw Error(ErrorCode::InfinityEvaluation, "point at infinity has no affine y");
    return FieldElement::unchecked(y_, p_);
}

std::string CurvePoint::to_string() const {
    if (infinity_) return branch_ == 0 ? "inf" : "inf[" + std::to_string(branch_ - 1) + "]";
    return "[" + std::to_string(x_) + ", " + std::to_string(y_) + "]";
}

bool operator<(const CurvePoint& a, const CurvePoint& b) noexcept {
    if (a.infinity_ != b.infinity_) return b.infinity_;
    if (a.infinity_) return a.branch_ < b.branch_;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
}

namespace {

// --- small dense polynomial helpers over GF(p), ascending coefficients ---
using FPoly = std::vector<std::uint32_t>;

void trim(FPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FPoly poly_mod(FPoly a, const FPoly& b, std::uint32_t p) {
    trim(a);
    const std::uint64_t inv_lead = ff::pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

FPoly poly_gcd(FPoly a, FPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FPoly poly_derivative(const FPoly& a, std::uint32_t p) {
    FPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<std::uint32_t>(a[i] * (i % p) % p));
    trim(d);
    return d;
}

FPoly poly_mul(const FPoly& a, const FPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    trim(r);
    return r;
}

FPoly poly_add(const FPoly& a, const FPoly& b, std::uint32_t p) {
    FPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::uint64_t s = std::uint64_t{i < a.size() ? a[i] : 0} + (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    trim(r);
    return r;
}

// Reverse a polynomial read as a form of the given degree: u^deg * a(1/u).
FPoly reversed_as(const FPoly& a, std::size_t deg) {
    FPoly r(deg + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= deg; ++i) r[deg - i] = a[i];
    trim(r);
    return r;
}

// Affine smoothness of v^2 + H v = F over the algebraic closure of GF(p).
bool affine_smooth(const FPoly& hp, const FPoly& fp, std::uint32_t p) {
    if (p == 2) {
        // singular points need H(x) = 0 and F'(x)^2 = H'(x)^2 F(x)
        const FPoly dh = poly_derivative(hp, p);
        const FPoly df = poly_derivative(fp, p);
        const FPoly cond = poly_add(poly_mul(df, df, p), poly_mul(poly_mul(dh, dh, p), fp, p), p);
        if (hp.empty()) return cond.size() == 1;  // h = 0: smooth only if cond is a nonzero constant
        return poly_gcd(hp, cond, p).size() == 1;
    }
    // odd characteristic: squarefree branch polynomial
    FPoly q = poly_add(poly_mul(hp, hp, p), poly_mul(fp, FPoly{4 % p}, p), p);
    if (q.empty()) return false;
    return poly_gcd(q, poly_derivative(q, p), p).size() == 1;
}

std::uint32_t eval(const FPoly& a, std::uint32_t x, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
    return static_cast<std::uint32_t>(acc);
}

struct Reduced {
    std::uint32_t p;
    FPoly h;
    FPoly f;
    int degree;  // degree of h^2 + 4f over Z
    int genus;
};

Reduced reduce_model(const CurveModel& m, std::int64_t p_in) {
    const std::uint32_t p = ff::checked_modulus(p_in);
    const int d = m.branch_polynomial().degree();
    if (d < 3) throw Error(ErrorCode::InvalidArgument, "model is not a curve of positive genus");
    return Reduced{p, m.h.reduced(p), m.f.reduced(p), d, (d - 1) / 2};
}

// Y values labelling the points at infinity for an even-degree branch polynomial.
std::vector<std::uint32_t> infinity_branches(const CurveModel& m, const Reduced& r) {
    const std::size_t g1 = static_cast<std::size_t>(r.genus + 1);
    const std::uint32_t htop = ff::reduce(m.h.coeff(g1), r.p);
    const std::uint32_t ftop = ff::reduce(m.f.coeff(2 * g1), r.p);
    std::vector<std::uint32_t> out;
    for (std::uint32_t y = 0; y < r.p; ++y) {
        const std::uint64_t lhs = (std::uint64_t{y} * y + std::uint64_t{htop} * y) % r.p;
        if (lhs == ftop) out.push_back(y);
    }
    return out;
}

bool reduced_smooth(const CurveModel& m, const Reduced& r) {
    const std::uint32_t p = r.p;
    // the degree of h^2 + 4f must survive reduction (for p = 2, the weighted degree of the model)
    if (p != 2) {
        const IntPoly q = m.branch_polynomial();
        if (ff::reduce(q.leading(), p) == 0) return false;
    } else {
        const std::size_t top = static_cast<std::size_t>(r.degree);
        const bool odd = r.degree % 2 == 1;
        if (odd && ff::reduce(m.f.coeff(top), p) == 0) return false;
        if (!odd) {
            const std::size_t g1 = static_cast<std::size_t>(r.genus + 1);
            if (ff::reduce(m.h.coeff(g1), p) == 0) return false;
        }
    }
    if (!affine_smooth(r.h, r.f, p)) return false;
    if (r.degree % 2 == 0) {
        const std::size_t g1 = static_cast<std::size_t>(r.genus + 1);
        const FPoly hr = reversed_as(r.h, g1);
        const FPoly fr = reversed_as(r.f, 2 * g1);
        if (!affine_smooth(hr, fr, p)) return false;
    }
    return true;
}

}  // namespace

bool nonsingular_mod(const CurveModel& m, std::int64_t p) {
    const Reduced r = reduce_model(m, p);
    return reduced_smooth(m, r);
}

bool on_curve(const CurveModel& m, const CurvePoint& pt) {
    if (pt.is_infinity()) return true;
    const std::uint32_t p = pt.modulus();
    const std::uint64_t x = pt.x().value();
    const std::uint64_t y = pt.y().value();
    const std::uint64_t lhs = (y * y + m.h.eval_mod(static_cast<std::uint32_t>(x), p) * y) % p;
    return lhs == m.f.eval_mod(static_cast<std::uint32_t>(x), p);
}

std::vector<CurvePoint> enumerate_points(const CurveModel& m, std::int64_t p_in) {
    const Reduced r = reduce_model(m, p_in);
    const std::uint32_t p = r.p;
    if (p_in > kMaxEnumerationPrime) {
        throw Error(ErrorCode::TooLarge, "point enumeration limited to p <= " + std::to_string(kMaxEnumerationPrime));
    }
    if (!reduced_smooth(m, r)) {
        throw Error(ErrorCode::SingularReduction, m.to_string() + " is singular mod " + std::to_string(p));
    }

    std::vector<CurvePoint> pts;
    if (p == 2) {
        for (std::uint32_t x = 0; x < 2; ++x)
            for (std::uint32_t y = 0; y < 2; ++y) {
                const std::uint32_t lhs = (y * y + eval(r.h, x, p) * y) % p;
                if (lhs == eval(r.f, x, p)) pts.push_back(CurvePoint::affine(FieldElement::unchecked(x, p),
                                                                             FieldElement::unchecked(y, p)));
            }
    } else {
        // square roots by exhaustion: root[v] = smallest s with s^2 = v, or p if none
        std::vector<std::uint32_t> root(p, p);
        for (std::uint32_t s = 0; s < p; ++s) {
            const auto sq = static_cast<std::uint32_t>(std::uint64_t{s} * s % p);
            if (root[sq] == p) root[sq] = s;
        }
        const std::uint64_t inv2 = (p + 1) / 2;
        for (std::uint32_t x = 0; x < p; ++x) {
            // (2y + h)^2 = h^2 + 4f
            const std::uint64_t hx = eval(r.h, x, p);
            const std::uint64_t fx = eval(r.f, x, p);
            const auto disc = static_cast<std::uint32_t>((hx * hx + 4 * fx) % p);
            const std::uint32_t s = root[disc];
            if (s == p) continue;
            std::vector<std::uint32_t> ys;
            ys.push_back(static_cast<std::uint32_t>((s + p - hx) % p * inv2 % p));
            if (s != 0) ys.push_back(static_cast<std::uint32_t>((2 * p - s - hx) % p * inv2 % p));
            std::sort(ys.begin(), ys.end());
            for (auto y : ys)
                pts.push_back(CurvePoint::affine(FieldElement::unchecked(x, p), FieldElement::unchecked(y, p)));
        }
    }
    for (const auto& pt : pts) {
        if (!on_curve(m, pt)) throw std::logic_error("enumerated point " + pt.to_string() + " is not on the curve");
    }
    if (r.degree % 2 == 1) {
        pts.push_back(CurvePoint::infinity(p));
    } else {
        for (auto y : infinity_branches(m, r)) pts.push_back(CurvePoint::infinity(p, y + 1));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<CurvePoint> enumerate_points(const WeierstrassModel& w, std::int64_t p) {
    const std::uint32_t q = ff::checked_modulus(p);
    if (mpz_divisible_ui_p(discriminant(w).get_mpz_t(), q)) {
        throw Error(ErrorCode::SingularReduction, "discriminant vanishes mod " + std::to_string(q));
    }
    return enumerate_points(CurveModel::from(w), p);
}

std::vector<CurvePoint> enumerate_points(const HyperellipticModel& h, std::int64_t p) {
    return enumerate_points(CurveModel::from(h), p);
}

// ---------------------------------------------------------------------------
// Group law

namespace {

void require_on_curve(const WeierstrassModel& w, const CurvePoint& pt) {
    if (pt.is_infinity()) {
        if (pt.branch() != 0) throw Error(ErrorCode::PointNotOnCurve, "labelled infinity on a Weierstrass curve");
        return;
    }
    if (!on_curve(CurveModel::from(w), pt)) {
        throw Error(ErrorCode::PointNotOnCurve, pt.to_string() + " mod " + std::to_string(pt.modulus()));
    }
}

FieldElement coeff(std::int64_t a, std::uint32_t p) { return FieldElement::unchecked(ff::reduce(a, p), p); }

}  // namespace

CurvePoint ec_neg(const WeierstrassModel& w, const CurvePoint& pt) {
    require_on_curve(w, pt);
    if (pt.is_infinity()) return pt;
    const std::uint32_t p = pt.modulus();
    const FieldElement x = pt.x();
    return CurvePoint::affine(x, -pt.y() - coeff(w.a1, p) * x - coeff(w.a3, p));
}

CurvePoint ec_add(const WeierstrassModel& w, const CurvePoint& a, const CurvePoint& b) {
    require_on_curve(w, a);
    require_on_curve(w, b);
    if (a.modulus() != b.modulus()) throw Error(ErrorCode::ModulusMismatch, "points over different fields");
    if (a.is_infinity()) return b;
    if (b.is_infinity()) return a;
    const std::uint32_t p = a.modulus();
    const FieldElement a1 = coeff(w.a1, p), a2 = coeff(w.a2, p), a3 = coeff(w.a3, p), a4 = coeff(w.a4, p),
                       a6 = coeff(w.a6, p);
    const FieldElement x1 = a.x(), y1 = a.y(), x2 = b.x(), y2 = b.y();
    const FieldElement zero = FieldElement::unchecked(0, p);

    FieldElement lambda = zero;
    FieldElement nu = zero;
    if (x1 == x2) {
        const FieldElement denom = y1 + y1 + a1 * x1 + a3;
        if (y1 != y2 || denom.is_zero()) return CurvePoint::infinity(p);
        const FieldElement three = FieldElement::unchecked(3 % p, p);
        const FieldElement two = FieldElement::unchecked(2 % p, p);
        lambda = (three * x1 * x1 + two * a2 * x1 + a4 - a1 * y1) / denom;
        nu = (-(x1 * x1 * x1) + a4 * x1 + two * a6 - a3 * y1) / denom;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
        nu = (y1 * x2 - y2 * x1) / (x2 - x1);
    }
    const FieldElement x3 = lambda * lambda + a1 * lambda - a2 - x1 - x2;
    const FieldElement y3 = -(lambda + a1) * x3 - nu - a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint ec_mul(const WeierstrassModel& w, const CurvePoint& pt, std::int64_t k) {
    require_on_curve(w, pt);
    CurvePoint base = k < 0 ? ec_neg(w, pt) : pt;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    CurvePoint acc = CurvePoint::infinity(pt.modulus());
    while (e != 0) {
        if (e & 1U) acc = ec_add(w, acc, base);
        e >>= 1U;
        if (e != 0) base = ec_add(w, base, base);
    }
    return acc;
}

std::uint64_t ec_order(const WeierstrassModel& w, const CurvePoint& pt) {
    require_on_curve(w, pt);
    std::uint64_t n = 1;
    CurvePoint acc = pt;
    while (!acc.is_infinity()) {
        acc = ec_add(w, acc, pt);
        ++n;
    }
    return n;
}

GroupStructure group_structure(const WeierstrassModel& w, std::int64_t p) {
    const auto pts = enumerate_points(w, p);
    const std::uint64_t total = pts.size();
    std::uint64_t exponent = 1;
    for (const auto& pt : pts) exponent = std::max(exponent, ec_order(w, pt));
    if (total % exponent != 0) throw std::logic_error("element order does not divide the group order");
    GroupStructure gs{total / exponent, exponent};
    if (gs.d2 % gs.d1 != 0 || (static_cast<std::uint64_t>(p) - 1) % gs.d1 != 0) {
        throw std::logic_error("invariant factors violate d1 | d2 and d1 | p - 1");
    }
    return gs;
}

std::vector<std::array<std::uint32_t, 3>> projective_points(const WeierstrassModel& w, std::int64_t p) {
    const auto pts = enumerate_points(w, p);
    std::vector<std::array<std::uint32_t, 3>> out;
    for (const auto& pt : pts) {
        if (pt.is_infinity()) {
            out.push_back({0, 1, 0});
            continue;
        }
        const FieldElement x = pt.x(), y = pt.y();
        const FieldElement one = FieldElement::unchecked(1, pt.modulus());
        if (!x.is_zero()) {
            const FieldElement s = x.inv();
            out.push_back({1, (y * s).value(), s.value()});
        } else if (!y.is_zero()) {
            out.push_back({0, 1, y.inv().value()});
        } else {
            out.push_back({0, 0, one.value()});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct CatalogRow {
    int level;
    const char* h;
    const char* f;
    long discriminant;
    const char* source;
};

// h and f of y^2 + h(x) y = f(x)
constexpr CatalogRow kCatalog[] = {
    {11, "1", "x^3-x^2", -11, "y^2 + y = x^3 - x^2"},
    {14, "x-1", "x^3", -28, "y^2 + xy - y = x^3"},
    {15, "7x+2", "x^3+4x^2+x", 15, "y^2 + 7xy + 2y = x^3 + 4x^2 + x"},
    {17, "3x", "x^3+x", 17, "y^2 + 3xy = x^3 + x"},
    {19, "1", "x^3+x^2+x", -19, "y^2 + y = x^3 + x^2 + x"},
    {20, "0", "x^3+x^2-x", 80, "y^2 = x^3 + x^2 - x"},
    {21, "x", "x^3+x", -63, "y^2 + xy = x^3 + x"},
    {24, "0", "x^3-x^2+x", -48, "y^2 = x^3 - x^2 + x"},
    {27, "1", "x^3", -27, "y^2 + y = x^3"},
    {32, "0", "x^3-x", 64, "y^2 = x^3 - x"},
    {36, "x^2+1", "x^3-2x^2+x", -1769472,
     "cubic form of y^2 = x^4 - 4x^3 - 6x^2 - 4x + 1; h^2 + 4f is that quartic at -x"},
    // The printed cubic for level 49 applies x -> -x to the right-hand side only. This
    // entry applies it to both sides of y^2 + (-x^2 - x - 1)y = -x^3 - 3x^2 + 2x - 1, so
    // h^2 + 4f is y^2 = x^4 - 2x^3 - 9x^2 + 10x - 3 at -x and the stored discriminant holds.
    {49, "-x^2+x-1", "x^3-3x^2-2x-1", -1404928,
     "cubic form of y^2 = x^4 - 2x^3 - 9x^2 + 10x - 3 with x -> -x applied to h and f"},
};

}  // namespace

const std::vector<int>& catalog_levels() {
    static const std::vector<int> levels = [] {
        std::vector<int> v;
        for (const auto& row : kCatalog) v.push_back(row.level);
        return v;
    }();
    return levels;
}

ModelCatalogEntry x0_model(int level) {
    for (const auto& row : kCatalog) {
        if (row.level != level) continue;
        CurveModel m{IntPoly::parse(row.h), IntPoly::parse(row.f)};
        return ModelCatalogEntry{row.level, m, m.as_weierstrass(), mpz_class(row.discriminant), row.source};
    }
    throw Error(ErrorCode::NoModelForLevel, "no genus-one model stored for N = " + std::to_string(level));
}

std::int64_t hecke_trace_by_count(int level, std::int64_t p) {
    const auto entry = x0_model(level);
    const std::uint32_t q = ff::checked_modulus(p);
    if (level % static_cast<std::int64_t>(q) == 0) {
        throw Error(ErrorCode::BadReduction, std::to_string(q) + " divides the level " + std::to_string(level));
    }
    if (mpz_divisible_ui_p(entry.discriminant.get_mpz_t(), q)) {
        throw Error(ErrorCode::BadReduction, std::to_string(q) + " divides the discriminant");
    }
    const auto pts = enumerate_points(entry.model, p);
    return p + 1 - static_cast<std::int64_t>(pts.size());
}

mpz_class frobenius_count(std::int64_t ap, std::int64_t p, unsigned k) {
    ff::checked_modulus(p);
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (ap * ap > 4 * p) {
        throw Error(ErrorCode::HasseViolation,
                    "|a_p| = " + std::to_string(ap < 0 ? -ap : ap) + " exceeds 2 sqrt(" + std::to_string(p) + ")");
    }
    const mpz_class a = static_cast<long>(ap);
    const mpz_class q = static_cast<long>(p);
    mpz_class s_prev = 2;  // s_0
    mpz_class s = a;       // s_1
    for (unsigned i = 2; i <= k; ++i) {
        mpz_class next = a * s - q * s_prev;
        s_prev = s;
        s = next;
    }
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), q.get_mpz_t(), k);
    return pk + 1 - s;
}

}  // namespace modcodes::curves
