#pragma once

/**
 * @file qseries.hpp
 * @brief Truncated Laurent series in q with big-integer coefficients.
 *
 * A series carries its lowest exponent L, coefficients for q^L .. q^(M-1), and the
 * truncation order M: nothing is claimed about exponents >= M. Ring operations
 * propagate the tightest order that the operands actually determine, so a result
 * never reports a coefficient that depends on unknown input terms.
 *
 * Everything here is exact. Eisenstein series use the integer normalisations
 * E4 = 1 + 240 sum sigma_3(n) q^n and E6 = 1 - 504 sum sigma_5(n) q^n, which give
 * Delta = (E4^3 - E6^2) / 1728 and j = E4^3 / Delta with integer coefficients.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace modcodes::qs {

class LaurentSeries {
public:
    /// coeffs[i] is the coefficient of q^(lowest + i); order = lowest + coeffs.size().
    LaurentSeries(int lowest, std::vector<mpz_class> coeffs);
    /// The constant c, known to the given order.
    static LaurentSeries constant(const mpz_class& c, int order);

    int lowest_exponent() const noexcept { return lowest_; }
    /// Coefficients are known for exponents strictly below this.
    int order() const noexcept { return lowest_ + static_cast<int>(coeffs_.size()); }
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

    /// Zero below the lowest exponent; throws TruncationTooSmall at or beyond the order.
    mpz_class coeff(int exponent) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries scaled(const mpz_class& c) const;
    /// Exact division of every coefficient; throws NonIntegralResult otherwise.
    LaurentSeries divided_exact(const mpz_class& c) const;
    LaurentSeries pow(unsigned e) const;
    /// Requires the first nonzero coefficient to be +1 or -1.
    LaurentSeries inverse() const;
    /// q -> q^n.
    LaurentSeries substitute_power(int n) const;
    /// Multiplies by q^shift.
    LaurentSeries shifted(int shift) const;
    /// Drops every term at or above the given order.
    LaurentSeries truncated(int order) const;

    /// True when every known coefficient is zero.
    bool is_zero() const;

    /// Renders "c_{-1}*q^-1 + c_0 + c_1*q + ..." skipping zero terms.
    std::string to_string() const;

    /// Equality of coefficients on the shared known range.
    bool agrees_with(const LaurentSeries& o) const;

private:
    int first_nonzero() const;

    int lowest_;
    std::vector<mpz_class> coeffs_;
};

/// Sum of r-th powers of the positive divisors of n (n >= 1).
mpz_class sigma(unsigned r, std::uint64_t n);

struct EtaFactor {
    int scale;     ///< d in eta(d z)
    int exponent;  ///< e
};
using EtaQuotientSpec = std::vector<EtaFactor>;

/// q^(sum d e / 24) * prod_d (prod_{n>=1} (1 - q^(d n)))^e to order M.
LaurentSeries eta_quotient(const EtaQuotientSpec& spec, int order);

/// k in {4, 6}; constant term 1.
LaurentSeries eisenstein_normalized(int weight, int order);

/// Requires order >= 2.
LaurentSeries delta_series(int order);

/// q^-1 + 744 + 196884 q + ..., known to the given order (>= 0).
LaurentSeries j_series(int order);

/// a_n of eta(z)^2 eta(11 z)^2, computed from a series truncated at `order` (> n).
mpz_class hecke_coeff_level11(int n, int order);

/// Sparse bivariate integer polynomial: (a, b) -> coefficient of x^a y^b.
using BivariatePoly = std::map<std::pair<int, int>, mpz_class>;

struct ModularPolyCheck {
    bool vanishes = false;       ///< H(j(q), j(q^N)) is zero to the checked order
    bool degree_matches = false; ///< degree in x and in y both equal mu(N)
    int checked_order = 0;       ///< order actually verified (may be below the requested one)
    LaurentSeries residual;
};

/// Substitutes x = j(q), y = j(q^N) into H and tests for vanishing to order M.
ModularPolyCheck modular_poly_check(const BivariatePoly& h, int level, int order);

/// Recovers a polynomial H with deg_x, deg_y <= max_degree and H(j(q), j(q^N)) = 0 by
/// solving the linear system on q-coefficients of j(q)^a j(q^N)^b over the rationals.
/// The result is primitive with a positive coefficient of x^max_degree; returns an
/// empty map when the solution space is not one-dimensional.
BivariatePoly solve_modular_relation(int level, int max_degree, int order);

std::string to_string(const BivariatePoly& h);

}  // namespace modcodes::qs
