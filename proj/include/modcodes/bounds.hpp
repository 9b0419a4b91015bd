#pragma once

/**
 * @file bounds.hpp
 * @brief Genus of X_0(N) and the asymptotic rate/distance curves.
 *
 * The genus is assembled as an exact rational with denominator 12 and only
 * converted to an integer once the numerator is known to be divisible.
 */

#include <cstdint>
#include <optional>

namespace modcodes::bounds {

/// Index of Gamma_0(N) in SL(2, Z): N prod_{p | N} (1 + 1/p).
std::uint64_t mu(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Number of elliptic points of order 2; zero when 4 | N.
std::uint64_t mu2(std::uint64_t n);
/// Number of elliptic points of order 3; zero when 2 | N or 9 | N.
std::uint64_t mu3(std::uint64_t n);
/// Number of cusps: sum over d | N of phi(gcd(d, N/d)).
std::uint64_t mu_inf(std::uint64_t n);

struct GenusReport {
    std::uint64_t level = 0;
    std::uint64_t mu = 0;
    std::uint64_t mu2 = 0;
    std::uint64_t mu3 = 0;
    std::uint64_t mu_inf = 0;
    std::int64_t genus = 0;
};

/// g = 1 + mu/12 - mu2/4 - mu3/3 - mu_inf/2. Throws NonIntegralGenus if the
/// rational value is not an integer.
GenusReport genus_x0(std::uint64_t n);

/// (N - 1)/12 - 1 for a prime N = 1 mod 12; PreconditionFailed otherwise.
std::int64_t genus_prime_1mod12(std::uint64_t n);

/// True when q = p^m for a prime p and m >= 1.
bool is_prime_power(std::uint64_t q);

/// 1 - H_q(d) with H_q(d) = d log_q(q-1) - d log_q d - (1-d) log_q(1-d), 0 log 0 = 0,
/// clamped to zero for d >= (q-1)/q.
double gv_bound(std::uint64_t q, double delta);

/// max(0, 1 - delta - 1/(sqrt(q) - 1)); q must be a square prime power.
double tvz_line(std::uint64_t q, double delta);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Longest run of grid points where the TVZ line exceeds the GV curve by more than a
/// 1e-12 guard band, with both ends refined by bisection to 1e-9. Empty when no grid
/// point clears the guard band.
std::optional<Interval> tvz_exceeds_gv(std::uint64_t q, std::size_t grid);

/// 1 - (g - 1)/n: lower bound on delta + R for an AG code of length n on a genus-g curve.
double prop7_bound(std::int64_t genus, std::uint64_t n);

}  // namespace modcodes::bounds
