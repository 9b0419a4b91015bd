#include "modcodes/riemann_roch.hpp"

#include <algorithm>

#include "modcodes/error.hpp"

namespace modcodes::rr {

using ff::FieldElement;

CurveKind CurveKind::hyperelliptic(unsigned deg_f) {
    if (deg_f < 3 || deg_f % 2 == 0) {
        throw Error(ErrorCode::InvalidArgument, "hyperelliptic basis needs odd deg f >= 3, got " + std::to_string(deg_f));
    }
    return CurveKind{deg_f};
}

unsigned pole_order(const MonomialFunction& m, CurveKind kind) noexcept { return 2 * m.i + kind.y_weight * m.j; }

std::vector<MonomialFunction> one_point_basis(CurveKind kind, unsigned a) {
    std::vector<MonomialFunction> out;
    for (unsigned j = 0; j <= 1; ++j) {
        if (kind.y_weight * j > a) break;
        for (unsigned i = 0; 2 * i + kind.y_weight * j <= a; ++i) out.push_back({i, j});
    }
    // pole orders are distinct (2i even, 2i + w odd), so this order is total
    std::sort(out.begin(), out.end(),
              [kind](const auto& l, const auto& r) { return pole_order(l, kind) < pole_order(r, kind); });
    return out;
}

FieldElement eval_monomial(const MonomialFunction& m, const curves::CurvePoint& pt) {
    if (pt.is_infinity()) throw Error(ErrorCode::InfinityEvaluation, to_string(m) + " has a pole at infinity");
    FieldElement v = pt.x().pow(m.i);
    if (m.j == 1) v *= pt.y();
    return v;
}

std::string to_string(const MonomialFunction& m) {
    if (m.i == 0 && m.j == 0) return "1";
    std::string s;
    if (m.i == 1) s = "x";
    if (m.i > 1) s = "x^" + std::to_string(m.i);
    if (m.j == 1) s += s.empty() ? "y" : "*y";
    return s;
}

std::vector<ProjectiveFormRatio> conic_basis() {
    std::vector<ProjectiveFormRatio> out;
    out.push_back({kConicPhi, kConicPhi});
    for (std::size_t slot : {0U, 1U, 2U, 3U, 4U}) {
        QuadraticForm num{};
        num[slot] = 1;
        out.push_back({num, kConicPhi});
    }
    return out;
}

FieldElement eval_form(const QuadraticForm& q, const std::array<FieldElement, 3>& pt) {
    const std::uint32_t p = pt[0].modulus();
    const auto& [x, y, z] = pt;
    const std::array<FieldElement, 6> mono{x * x, y * y, z * z, x * y, y * z, x * z};
    FieldElement acc = FieldElement::unchecked(0, p);
    for (std::size_t i = 0; i < 6; ++i) {
        if (q[i] != 0) acc += FieldElement::unchecked(ff::reduce(q[i], p), p) * mono[i];
    }
    return acc;
}

FieldElement eval_projective(const ProjectiveFormRatio& r, const std::array<FieldElement, 3>& pt) {
    if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero()) {
        throw Error(ErrorCode::ZeroTriple, "(0, 0, 0) is not a projective point");
    }
    const FieldElement den = eval_form(r.denominator, pt);
    if (den.is_zero()) {
        throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at (" + std::to_string(pt[0].value()) + ", " +
                                                        std::to_string(pt[1].value()) + ", " +
                                                        std::to_string(pt[2].value()) + ")");
    }
    return eval_form(r.numerator, pt) / den;
}

namespace {

std::string form_to_string(const QuadraticForm& q) {
    static constexpr const char* kNames[6] = {"x^2", "y^2", "z^2", "xy", "yz", "xz"};
    std::string s;
    for (std::size_t i = 0; i < 6; ++i) {
        if (q[i] == 0) continue;
        const std::int64_t c = q[i];
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a) + "*";
        s += kNames[i];
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string to_string(const ProjectiveFormRatio& r) {
    if (r.numerator == r.denominator) return "1";
    const std::string den = r.denominator == kConicPhi ? "phi" : "(" + form_to_string(r.denominator) + ")";
    std::string num = form_to_string(r.numerator);
    if (num.find(' ') != std::string::npos) num = "(" + num + ")";
    return num + "/" + den;
}

}  // namespace modcodes::rr
