#pragma once

/**
 * @file curves.hpp
 * @brief Plane models y^2 + h(x) y = f(x) over the integers and their points mod p.
 *
 * Three shapes are used:
 *  - generalized Weierstrass cubics (h = a1 x + a3, f monic cubic), with a group law;
 *  - odd-degree hyperelliptic models, one point at infinity;
 *  - genus-one models whose h^2 + 4f is a quartic (h of degree 2), as printed for the
 *    levels 36 and 49. These have zero or two points at infinity over GF(p).
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modcodes/ffcore.hpp"
#include "modcodes/intpoly.hpp"

namespace modcodes::curves {

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassModel {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t a3 = 0;
    std::int64_t a4 = 0;
    std::int64_t a6 = 0;

    friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;
};

/// y^2 + h(x) y = f(x) with f of odd degree >= 3 and deg h <= deg f / 2.
struct HyperellipticModel {
    IntPoly f;
    IntPoly h;
};

/// The general shape y^2 + h(x) y = f(x).
struct CurveModel {
    IntPoly h;
    IntPoly f;

    static CurveModel from(const WeierstrassModel& w);
    /// Validates the odd-degree shape; throws InvalidArgument.
    static CurveModel from(const HyperellipticModel& m);

    /// h^2 + 4 f, whose roots are the branch points in odd characteristic.
    IntPoly branch_polynomial() const;
    /// floor((deg(h^2 + 4f) - 1) / 2).
    int genus() const;
    /// Weierstrass-shaped: deg h <= 1 and f a monic cubic.
    std::optional<WeierstrassModel> as_weierstrass() const;

    /// "y^2 + (x^2 + 1)*y = x^3 - 2x^2 + x"
    std::string to_string() const;

    friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

/// Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
mpz_class discriminant(const WeierstrassModel& w);

/// Weierstrass-shaped models use the b-invariant formula; every other model uses
/// 2^(4g) times the discriminant of h^2 + 4f read as a binary form of degree 2g + 2.
mpz_class discriminant(const CurveModel& m);

class CurvePoint {
public:
    static CurvePoint affine(const ff::FieldElement& x, const ff::FieldElement& y);
    /// branch is 0 when there is a single point at infinity; for two-point models it is
    /// 1 + (the root of Y^2 + h_top Y = f_top labelling the branch).
    static CurvePoint infinity(std::uint32_t p, std::uint32_t branch = 0) noexcept;

    bool is_infinity() const noexcept { return infinity_; }
    std::uint32_t branch() const noexcept { return branch_; }
    std::uint32_t modulus() const noexcept { return p_; }
    /// InfinityEvaluation for points at infinity.
    ff::FieldElement x() const;
    ff::FieldElement y() const;

    /// "[x, y]", "inf", or "inf[Y]" for a labelled branch.
    std::string to_string() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    /// (x asc, y asc), points at infinity last.
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) noexcept;

private:
    CurvePoint(bool inf, std::uint32_t p, std::uint32_t x, std::uint32_t y, std::uint32_t branch) noexcept
        : infinity_(inf), p_(p), x_(x), y_(y), branch_(branch) {}

    bool infinity_;
    std::uint32_t p_;
    std::uint32_t x_;
    std::uint32_t y_;
    std::uint32_t branch_;
};

/// Largest p accepted by point enumeration (square-root table by exhaustion).
constexpr std::int64_t kMaxEnumerationPrime = 1'000'000;

/// True when the model has good (nonsingular) reduction at p, including the points at
/// infinity for even-degree branch polynomials.
bool nonsingular_mod(const CurveModel& m, std::int64_t p);

bool on_curve(const CurveModel& m, const CurvePoint& pt);

/// All GF(p)-points, sorted (x, y) with points at infinity last.
/// Throws SingularReduction when the reduction mod p is singular.
std::vector<CurvePoint> enumerate_points(const CurveModel& m, std::int64_t p);
std::vector<CurvePoint> enumerate_points(const WeierstrassModel& w, std::int64_t p);
std::vector<CurvePoint> enumerate_points(const HyperellipticModel& h, std::int64_t p);

// --- group law on Weierstrass models ---------------------------------------

CurvePoint ec_neg(const WeierstrassModel& w, const CurvePoint& pt);
CurvePoint ec_add(const WeierstrassModel& w, const CurvePoint& a, const CurvePoint& b);
CurvePoint ec_mul(const WeierstrassModel& w, const CurvePoint& pt, std::int64_t k);
/// Smallest n >= 1 with n P = O (brute force).
std::uint64_t ec_order(const WeierstrassModel& w, const CurvePoint& pt);

struct GroupStructure {
    std::uint64_t d1 = 1;  ///< d1 | d2, group isomorphic to C_d1 x C_d2
    std::uint64_t d2 = 1;
    std::uint64_t order() const noexcept { return d1 * d2; }
};

GroupStructure group_structure(const WeierstrassModel& w, std::int64_t p);

/// Projective GF(p)-points of the homogenised Weierstrass cubic, each scaled so its
/// first nonzero coordinate is 1, sorted lexicographically.
std::vector<std::array<std::uint32_t, 3>> projective_points(const WeierstrassModel& w, std::int64_t p);

// --- X_0(N) catalog ----------------------------------------------------------

struct ModelCatalogEntry {
    int level = 0;
    CurveModel model;
    std::optional<WeierstrassModel> weierstrass;  ///< set for Weierstrass-shaped entries
    mpz_class discriminant;                      ///< stored value
    std::string source;
};

/// Levels with a stored genus-one model.
const std::vector<int>& catalog_levels();

/// Throws NoModelForLevel for levels outside catalog_levels().
ModelCatalogEntry x0_model(int level);

/// p + 1 - |X_0(N)(F_p)| from the catalog model. BadReduction when p | N or p | Delta.
std::int64_t hecke_trace_by_count(int level, std::int64_t p);

/// |E(F_{p^k})| = p^k + 1 - s_k, with s_1 = a_p, s_2 = a_p^2 - 2p and
/// s_k = a_p s_{k-1} - p s_{k-2}. HasseViolation when a_p^2 > 4p.
mpz_class frobenius_count(std::int64_t ap, std::int64_t p, unsigned k);

}  // namespace modcodes::curves
