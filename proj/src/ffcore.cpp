#include "modcodes/ffcore.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace modcodes::ff {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint32_t checked_modulus(std::int64_t p) {
    if (p < 2 || p > kMaxModulus || !is_prime(p)) {
        throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return static_cast<std::uint32_t>(p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint32_t p) noexcept {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base % p;
        base = base * base % p;
        exponent >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::int64_t v, std::int64_t p)
    : value_(0), modulus_(checked_modulus(p)) {
    value_ = reduce(v, modulus_);
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (modulus_ != o.modulus_) {
        throw Error(ErrorCode::ModulusMismatch,
                    "GF(" + std::to_string(modulus_) + ") vs GF(" + std::to_string(o.modulus_) + ")");
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    std::uint64_t s = std::uint64_t{value_} + o.value_;
    if (s >= modulus_) s -= modulus_;
    return unchecked(static_cast<std::uint32_t>(s), modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(o);
    std::uint64_t s = std::uint64_t{value_} + modulus_ - o.value_;
    if (s >= modulus_) s -= modulus_;
    return unchecked(static_cast<std::uint32_t>(s), modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    return unchecked(static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % modulus_), modulus_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(o);
    return *this * o.inv();
}

FieldElement FieldElement::operator-() const noexcept {
    return unchecked(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement FieldElement::inv() const {
    if (value_ == 0) {
        throw Error(ErrorCode::ZeroInverse, "0 has no inverse in GF(" + std::to_string(modulus_) + ")");
    }
    return unchecked(pow_mod(value_, modulus_ - 2, modulus_), modulus_);
}

FieldElement FieldElement::pow(std::int64_t exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    return unchecked(pow_mod(value_, static_cast<std::uint64_t>(exponent), modulus_), modulus_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
        case ArithOp::Pow:
            if (a.modulus() != b.modulus()) {
                throw Error(ErrorCode::ModulusMismatch, "pow operands from different fields");
            }
            return a.pow(b.value());
        case ArithOp::Inv: return a.inv();
        case ArithOp::Neg: return -a;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown field operation");
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
    if (p == 2) throw Error(ErrorCode::EvenModulus, "Legendre symbol needs an odd prime");
    const std::uint32_t q = checked_modulus(p);
    const std::uint32_t r = reduce(a, q);
    if (r == 0) return 0;
    return pow_mod(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// FFVector

FFVector::FFVector(std::uint32_t p, std::size_t length) : p_(p), entries_(length, 0) {}

FFVector::FFVector(std::uint32_t p, std::vector<std::uint32_t> entries) : p_(p), entries_(std::move(entries)) {
    for (auto& e : entries_) e %= p_;
}

FFVector FFVector::from_integers(std::int64_t p, std::span<const std::int64_t> values) {
    const std::uint32_t q = checked_modulus(p);
    std::vector<std::uint32_t> entries;
    entries.reserve(values.size());
    for (auto v : values) entries.push_back(reduce(v, q));
    return FFVector(q, std::move(entries));
}

void FFVector::set(std::size_t i, const FieldElement& v) {
    if (v.modulus() != p_) throw Error(ErrorCode::ModulusMismatch, "vector entry from another field");
    entries_.at(i) = v.value();
}

std::size_t hamming(const FFVector& x, const FFVector& y) {
    if (x.modulus() != y.modulus()) throw Error(ErrorCode::ModulusMismatch, "hamming distance across fields");
    if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "hamming distance of unequal lengths");
    const auto a = x.raw();
    const auto b = y.raw();
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
    return d;
}

std::size_t weight(const FFVector& x) {
    return static_cast<std::size_t>(std::count_if(x.raw().begin(), x.raw().end(), [](auto v) { return v != 0; }));
}

// ---------------------------------------------------------------------------
// FFMatrix

FFMatrix::FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FFMatrix FFMatrix::from_rows(std::int64_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::uint32_t q = checked_modulus(p);
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FFMatrix m(q, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = reduce(rows[r][c], q);
    }
    return m;
}

FFMatrix FFMatrix::identity(std::uint32_t p, std::size_t n) {
    FFMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
    return m;
}

void FFMatrix::set(std::size_t r, std::size_t c, std::uint32_t value) {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::DimensionMismatch, "matrix index out of range");
    data_[r * cols_ + c] = value % p_;
}

std::span<const std::uint32_t> FFMatrix::row(std::size_t r) const {
    if (r >= rows_) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
    return std::span<const std::uint32_t>(data_).subspan(r * cols_, cols_);
}

FFVector FFMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return FFVector(p_, std::vector<std::uint32_t>(s.begin(), s.end()));
}

FFMatrix FFMatrix::transpose() const {
    FFMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

FFMatrix FFMatrix::operator*(const FFMatrix& rhs) const {
    if (p_ != rhs.p_) throw Error(ErrorCode::ModulusMismatch, "matrix product across fields");
    if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    FFMatrix out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < cols_; ++t) {
                acc = (acc + std::uint64_t{data_[i * cols_ + t]} * rhs.data_[t * rhs.cols_ + j]) % p_;
            }
            out.data_[i * rhs.cols_ + j] = static_cast<std::uint32_t>(acc);
        }
    }
    return out;
}

bool FFMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

FFMatrix FFMatrix::select_rows(std::span<const std::size_t> indices) const {
    FFMatrix out(p_, indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        auto src = row(indices[i]);
        std::copy(src.begin(), src.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    }
    return out;
}

FFMatrix FFMatrix::select_columns(std::span<const std::size_t> indices) const {
    FFMatrix out(p_, rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < indices.size(); ++j) {
            if (indices[j] >= cols_) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
            out.data_[r * indices.size() + j] = data_[r * cols_ + indices[j]];
        }
    return out;
}

FFMatrix FFMatrix::stacked(const FFMatrix& below) const {
    if (p_ != below.p_) throw Error(ErrorCode::ModulusMismatch, "stacking matrices across fields");
    if (cols_ != below.cols_) throw Error(ErrorCode::DimensionMismatch, "stacking matrices of different widths");
    FFMatrix out(p_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

std::vector<std::vector<std::uint32_t>> FFMatrix::to_rows() const {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto s = row(r);
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FFMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.entry(r, c);
        os << "]\n";
    }
    return os;
}

// ---------------------------------------------------------------------------
// Linear algebra

namespace {

// Gauss-Jordan on a row-major buffer; returns pivot columns.
std::vector<std::size_t> gauss_jordan(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                                      std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
        }
        const std::uint64_t inv = pow_mod(a[r * cols + c], p - 2, p);
        for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = static_cast<std::uint32_t>(a[r * cols + j] * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint64_t f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                const std::uint64_t sub = f * a[r * cols + j] % p;
                a[i * cols + j] = static_cast<std::uint32_t>((a[i * cols + j] + p - sub) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RowEchelon row_reduce(const FFMatrix& m) {
    std::vector<std::uint32_t> buf;
    buf.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto s = m.row(r);
        buf.insert(buf.end(), s.begin(), s.end());
    }
    auto pivots = gauss_jordan(buf, m.rows(), m.cols(), m.modulus());
    FFMatrix out(m.modulus(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, buf[r * m.cols() + c]);
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const FFMatrix& m) { return row_reduce(m).pivots.size(); }

bool StandardForm::identity_permutation() const noexcept {
    for (std::size_t j = 0; j < column_permutation.size(); ++j)
        if (column_permutation[j] != j) return false;
    return true;
}

StandardForm standard_form(const FFMatrix& g) {
    auto [rref, pivots] = row_reduce(g);
    std::vector<std::size_t> perm = pivots;
    std::vector<bool> is_pivot(g.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) perm.push_back(c);
    const std::size_t r = pivots.size();
    StandardForm out{rref.select_columns(perm), std::move(perm), r};
    return out;
}

FFMatrix check_matrix(const FFMatrix& systematic) {
    const std::size_t k = systematic.rows();
    const std::size_t n = systematic.cols();
    const std::uint32_t p = systematic.modulus();
    if (k > n) throw Error(ErrorCode::NotSystematic, "more rows than columns");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (systematic.entry(i, j) != (i == j ? 1 % p : 0)) {
                throw Error(ErrorCode::NotSystematic, "leading block is not the identity");
            }
    FFMatrix h(p, n - k, n);
    for (std::size_t i = 0; i < n - k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t a = systematic.entry(j, k + i);
            h.set(i, j, a == 0 ? 0 : p - a);
        }
        h.set(i, k + i, 1);
    }
    return h;
}

bool row_space_contains(const FFMatrix& m, const FFMatrix& sub) {
    if (sub.rows() == 0) return true;
    if (m.rows() == 0) return sub.is_zero();
    return rank(m.stacked(sub)) == rank(m);
}

std::vector<std::size_t> independent_rows(const FFMatrix& m) {
    std::vector<std::size_t> chosen;
    std::size_t current = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto trial = chosen;
        trial.push_back(r);
        const std::size_t rk = rank(m.select_rows(trial));
        if (rk > current) {
            chosen = std::move(trial);
            current = rk;
        }
    }
    return chosen;
}

}  // namespace modcodes::ff
