#pragma once

// Explicit bases for the two kinds of Riemann-Roch space used to build codes:
// one-point spaces L(a P_inf) on (hyper)elliptic models and the six conic ratios
// over phi = x^2 + y^2 + z^2.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modcodes/curves.hpp"
#include "modcodes/ffcore.hpp"

namespace modcodes::rr {

/// x^i y^j with j in {0, 1}.
struct MonomialFunction {
    unsigned i = 0;
    unsigned j = 0;

    friend bool operator==(const MonomialFunction&, const MonomialFunction&) = default;
};

/// Pole order of y at P_inf: 3 on an elliptic curve, deg f on an odd hyperelliptic model.
struct CurveKind {
    unsigned y_weight = 3;

    static CurveKind elliptic() noexcept { return CurveKind{3}; }
    /// deg_f must be odd and >= 3.
    static CurveKind hyperelliptic(unsigned deg_f);
};

unsigned pole_order(const MonomialFunction& m, CurveKind kind) noexcept;

/// Monomials with pole order <= a, ascending by pole order.
std::vector<MonomialFunction> one_point_basis(CurveKind kind, unsigned a);

/// x(P)^i y(P)^j. InfinityEvaluation at a point at infinity.
ff::FieldElement eval_monomial(const MonomialFunction& m, const curves::CurvePoint& pt);

/// "1", "x", "y", "x^2*y", ...
std::string to_string(const MonomialFunction& m);

/// Coefficients of x^2, y^2, z^2, xy, yz, xz.
using QuadraticForm = std::array<std::int64_t, 6>;

struct ProjectiveFormRatio {
    QuadraticForm numerator{};
    QuadraticForm denominator{};
};

/// x^2 + y^2 + z^2
constexpr QuadraticForm kConicPhi{1, 1, 1, 0, 0, 0};

/// {phi/phi, x^2/phi, y^2/phi, z^2/phi, xy/phi, yz/phi}
std::vector<ProjectiveFormRatio> conic_basis();

ff::FieldElement eval_form(const QuadraticForm& q, const std::array<ff::FieldElement, 3>& pt);

/// numerator(P) / denominator(P). ZeroTriple for (0,0,0), DenominatorVanishes otherwise.
ff::FieldElement eval_projective(const ProjectiveFormRatio& r, const std::array<ff::FieldElement, 3>& pt);

/// "x^2/phi", "xy/phi", "1" for phi/phi.
std::string to_string(const ProjectiveFormRatio& r);

}  // namespace modcodes::rr
