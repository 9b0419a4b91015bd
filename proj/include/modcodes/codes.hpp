#pragma once

/**
 * @file codes.hpp
 * @brief Evaluation codes, their weight distributions and the classical checks on them.
 *
 * Weight distributions are always the vector A_0..A_n indexed by weight. Three routes
 * compute one:
 *  - direct enumeration of the row space of a generator matrix;
 *  - enumeration of the dual code followed by the MacWilliams transform;
 *  - a non-enumerative count for kernel codes {x : M x^T = 0}, using
 *    #{x : supp(x) in T} = p^(|T| - rank M_T) and inclusion-exclusion over supports.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modcodes/curves.hpp"
#include "modcodes/ffcore.hpp"
#include "modcodes/riemann_roch.hpp"

namespace modcodes::codes {

struct LinearCode {
    std::uint32_t p = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    ff::FFMatrix generator{2, 0, 0};   ///< k x n, full rank
    ff::FFMatrix evaluation{2, 0, 0};  ///< one row per basis function, possibly dependent
    std::string provenance;
    std::vector<std::string> warnings;

    /// Keeps a maximal independent set of rows (top-down) as the generator.
    static LinearCode from_matrix(const ff::FFMatrix& rows, std::string provenance);
};

/// Row r evaluates basis[r] at the affine points. DuplicatePoint, SupportCollision (a
/// point at infinity lies in the support of the one-point divisor).
LinearCode evaluation_code(const std::vector<rr::MonomialFunction>& basis,
                           const std::vector<curves::CurvePoint>& points, std::int64_t p);

/// Projective evaluation points given as triples; SupportCollision where a denominator
/// vanishes, DuplicatePoint for proportional triples.
LinearCode evaluation_code(const std::vector<rr::ProjectiveFormRatio>& basis,
                           const std::vector<std::array<ff::FieldElement, 3>>& points, std::int64_t p);

struct WeightDistribution {
    std::vector<mpz_class> counts;  ///< A_0 .. A_n

    std::size_t length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
    mpz_class total() const;
    /// Smallest w > 0 with A_w > 0.
    std::optional<std::size_t> min_weight() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

enum class Strategy {
    Auto,         ///< direct when k <= n - k, dual enumeration otherwise
    Direct,       ///< all p^k codewords
    Dual,         ///< p^(n-k) dual words, then MacWilliams
    SupportRank,  ///< dual distribution from support ranks of G, then MacWilliams
};

Strategy parse_strategy(const std::string& text);
std::string to_string(Strategy s);

constexpr std::uint64_t kDefaultEnumerationLimit = 2'000'000'000ULL;
/// Largest length accepted by the support-rank route (2^n rank computations).
constexpr std::size_t kMaxSupportRankLength = 26;

struct EnumerationOptions {
    Strategy strategy = Strategy::Auto;
    unsigned jobs = 1;
    std::uint64_t limit = kDefaultEnumerationLimit;  ///< bound on p^dim enumerated words
};

/// Distribution of the row space of a full-rank matrix by enumeration of information
/// vectors (lexicographic, split across `jobs` workers). TooLarge beyond `limit` words.
WeightDistribution enumerate_row_space(const ff::FFMatrix& g, unsigned jobs = 1,
                                       std::uint64_t limit = kDefaultEnumerationLimit);

/// Distribution of {x in GF(p)^n : M x^T = 0}. M may be rank deficient.
WeightDistribution kernel_distribution(const ff::FFMatrix& m);

/// A'_w = p^(-k) sum_v A_v K_w(v). NonIntegralResult when W is not a code distribution.
WeightDistribution macwilliams_transform(const WeightDistribution& w, std::size_t k, std::uint32_t p);

/// Krawtchouk K_w(v) for length n over GF(p).
mpz_class krawtchouk(std::size_t n, std::uint32_t p, std::size_t w, std::size_t v);

WeightDistribution weight_distribution(const LinearCode& c, const EnumerationOptions& opts = {});

/// Systematic generator and its column permutation.
ff::StandardForm systematic(const LinearCode& c);

/// (n - k) x n check matrix in the original column order: H G^T = 0.
ff::FFMatrix dual_generator(const LinearCode& c);

std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opts = {});

/// Smallest number of linearly dependent columns of a check matrix.
std::size_t min_distance_by_columns(const ff::FFMatrix& h);

struct CodeParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    bool mds = false;
    std::size_t t = 0;  ///< floor((d - 1) / 2)
};

CodeParameters code_parameters(const LinearCode& c, const EnumerationOptions& opts = {});
CodeParameters parameters_from(std::size_t n, std::size_t k, std::size_t d);

struct ShokrollahiResult {
    bool consistent = false;
    mpz_class b_a;              ///< meaningful only when consistent
    bool coprime = false;       ///< gcd(n, a!) = 1
    mpz_class gcd;              ///< gcd(n, a!)
    std::vector<mpz_class> quotient;  ///< (W - fixed part) / (x - 1)^a, ascending
};

/// Fits W(x) = sum A_w x^(n-w) to x^n + sum_{i<a} C(n,i)(p^(a-i) - 1)(x-1)^i + B_a (x-1)^a.
ShokrollahiResult shokrollahi_check(const WeightDistribution& w, std::size_t n, std::size_t a, std::uint32_t p);

/// n <= k + d <= n + 1 when g = 1, and k + d >= n - g + 1 for every g.
bool elliptic_sum_property(const CodeParameters& params, int genus);

enum class Convention {
    Table2,  ///< sum A_w x^(n-w)
    Plain,   ///< sum A_w x^w
};

Convention parse_convention(const std::string& text);

/// "x^17+96x^2+12x+60" (Table2) or "1+42x^6+6x^7" (Plain).
std::string render(const WeightDistribution& w, Convention convention);

}  // namespace modcodes::codes
