#pragma once

/**
 * @file ffcore.hpp
 * @brief Prime-field scalars, vectors and dense matrices.
 *
 * Every residue is stored as a 32-bit value in [0, p) with p < 2^31, so sums and
 * products fit comfortably in 64-bit intermediates. Vectors and matrices store raw
 * residues next to their modulus; element accessors hand out FieldElement values.
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "modcodes/error.hpp"

namespace modcodes::ff {

constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

/// Trial division; adequate for the moduli accepted here (p < 2^31).
bool is_prime(std::int64_t n) noexcept;

/// Throws NotPrime unless 2 <= p < 2^31 and p is prime.
std::uint32_t checked_modulus(std::int64_t p);

/// Canonical representative of v mod p in [0, p).
std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept;

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint32_t p) noexcept;

class FieldElement {
public:
    /// Validates p (primality) and reduces v.
    FieldElement(std::int64_t v, std::int64_t p);

    /// Skips the primality check; p must already have been validated.
    static FieldElement unchecked(std::uint32_t value, std::uint32_t p) noexcept {
        return FieldElement(value, p, Unchecked{});
    }

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const noexcept;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Negative exponents invert first.
    FieldElement pow(std::int64_t exponent) const;
    FieldElement inv() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    struct Unchecked {};
    FieldElement(std::uint32_t value, std::uint32_t p, Unchecked) noexcept : value_(value), modulus_(p) {}
    void require_same_field(const FieldElement& o) const;

    std::uint32_t value_;
    std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

enum class ArithOp { Add, Sub, Mul, Div, Pow, Inv, Neg };

/// Single entry point for the binary/unary field operations; `b` is ignored for
/// inv and neg, and for pow its residue is used as the exponent.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Legendre symbol via Euler's criterion. Throws EvenModulus for p = 2.
int legendre_symbol(std::int64_t a, std::int64_t p);

class FFVector {
public:
    FFVector(std::uint32_t p, std::size_t length);
    FFVector(std::uint32_t p, std::vector<std::uint32_t> entries);
    /// Reduces each integer mod p.
    static FFVector from_integers(std::int64_t p, std::span<const std::int64_t> values);

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t size() const noexcept { return entries_.size(); }
    FieldElement operator[](std::size_t i) const { return FieldElement::unchecked(entries_.at(i), p_); }
    void set(std::size_t i, const FieldElement& v);
    std::span<const std::uint32_t> raw() const noexcept { return entries_; }

    friend bool operator==(const FFVector&, const FFVector&) = default;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> entries_;
};

std::size_t hamming(const FFVector& x, const FFVector& y);
std::size_t weight(const FFVector& x);

class FFMatrix {
public:
    FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    /// Reduces each integer mod p; rows must all have the same length.
    static FFMatrix from_rows(std::int64_t p, const std::vector<std::vector<std::int64_t>>& rows);
    static FFMatrix identity(std::uint32_t p, std::size_t n);

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement at(std::size_t r, std::size_t c) const {
        return FieldElement::unchecked(entry(r, c), p_);
    }
    std::uint32_t entry(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, std::uint32_t value);
    std::span<const std::uint32_t> row(std::size_t r) const;
    FFVector row_vector(std::size_t r) const;

    FFMatrix transpose() const;
    FFMatrix operator*(const FFMatrix& rhs) const;
    bool is_zero() const noexcept;
    FFMatrix select_rows(std::span<const std::size_t> indices) const;
    FFMatrix select_columns(std::span<const std::size_t> indices) const;
    /// Stacks rows of `below` under this matrix.
    FFMatrix stacked(const FFMatrix& below) const;

    std::vector<std::vector<std::uint32_t>> to_rows() const;

    friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

private:
    std::uint32_t p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

std::ostream& operator<<(std::ostream& os, const FFMatrix& m);

/// Reduced row-echelon form with the pivot columns, in place of a full standard_form.
struct RowEchelon {
    FFMatrix matrix;
    std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(const FFMatrix& m);

std::size_t rank(const FFMatrix& m);

struct StandardForm {
    /// RREF with columns permuted so that the leading rank x rank block is the identity.
    FFMatrix matrix;
    /// column_permutation[j] is the original column placed at position j.
    std::vector<std::size_t> column_permutation;
    std::size_t rank = 0;

    bool identity_permutation() const noexcept;
};

StandardForm standard_form(const FFMatrix& g);

/// H = [-A^T | I_{n-k}] for G = [I_k | A]. Throws NotSystematic otherwise.
FFMatrix check_matrix(const FFMatrix& systematic);

/// True when every row of `sub` lies in the row space of `m`.
bool row_space_contains(const FFMatrix& m, const FFMatrix& sub);

/// Indices of a maximal linearly independent subset of rows, chosen greedily top-down.
std::vector<std::size_t> independent_rows(const FFMatrix& m);

}  // namespace modcodes::ff
