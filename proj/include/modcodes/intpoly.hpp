#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace modcodes {

/// Dense univariate polynomial in x with small integer coefficients, ascending order.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> ascending);

    /// Accepts text such as "x^7-x", "-x^2 - x - 1" or "3*x^2+2x+5".
    static IntPoly parse(std::string_view text);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

    std::uint32_t eval_mod(std::uint32_t x, std::uint32_t p) const noexcept;
    /// Coefficients reduced mod p, trailing zeros trimmed.
    std::vector<std::uint32_t> reduced(std::uint32_t p) const;

    IntPoly derivative() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(std::int64_t c) const;

    /// Renders as e.g. "x^3 - x^2 + 1".
    std::string to_string() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// Polynomial discriminant over the integers (degree >= 1).
mpz_class discriminant(const IntPoly& f);

}  // namespace modcodes
