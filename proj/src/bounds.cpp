#include "modcodes/bounds.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "modcodes/error.hpp"
#include "modcodes/ffcore.hpp"

namespace modcodes::bounds {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

void require_positive(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "level must be >= 1");
}

constexpr double kGuard = 1e-12;
constexpr double kBisectTol = 1e-9;

}  // namespace

std::uint64_t mu(std::uint64_t n) {
    require_positive(n);
    std::uint64_t m = n;
    for (auto p : prime_divisors(n)) m = m / p * (p + 1);
    return m;
}

std::uint64_t euler_phi(std::uint64_t n) {
    require_positive(n);
    std::uint64_t r = n;
    for (auto p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

std::uint64_t mu2(std::uint64_t n) {
    require_positive(n);
    if (n % 4 == 0) return 0;
    std::uint64_t prod = 1;
    for (auto p : prime_divisors(n)) {
        if (p == 2) continue;  // (-4/2) = 0
        prod *= static_cast<std::uint64_t>(1 + ff::legendre_symbol(-4, static_cast<std::int64_t>(p)));
    }
    return prod;
}

std::uint64_t mu3(std::uint64_t n) {
    require_positive(n);
    if (n % 2 == 0 || n % 9 == 0) return 0;
    std::uint64_t prod = 1;
    for (auto p : prime_divisors(n)) {
        prod *= static_cast<std::uint64_t>(1 + ff::legendre_symbol(-3, static_cast<std::int64_t>(p)));
    }
    return prod;
}

std::uint64_t mu_inf(std::uint64_t n) {
    require_positive(n);
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) total += euler_phi(std::gcd(d, n / d));
    return total;
}

GenusReport genus_x0(std::uint64_t n) {
    GenusReport r;
    r.level = n;
    r.mu = mu(n);
    r.mu2 = mu2(n);
    r.mu3 = mu3(n);
    r.mu_inf = mu_inf(n);
    // 12 g = 12 + mu - 3 mu2 - 4 mu3 - 6 mu_inf
    const std::int64_t twelve_g = 12 + static_cast<std::int64_t>(r.mu) - 3 * static_cast<std::int64_t>(r.mu2) -
                                  4 * static_cast<std::int64_t>(r.mu3) - 6 * static_cast<std::int64_t>(r.mu_inf);
    if (twelve_g % 12 != 0 || twelve_g < 0) {
        throw Error(ErrorCode::NonIntegralGenus,
                    "12 g = " + std::to_string(twelve_g) + " for N = " + std::to_string(n));
    }
    r.genus = twelve_g / 12;
    return r;
}

std::int64_t genus_prime_1mod12(std::uint64_t n) {
    if (!ff::is_prime(static_cast<std::int64_t>(n)) || n % 12 != 1) {
        throw Error(ErrorCode::PreconditionFailed, std::to_string(n) + " is not a prime congruent to 1 mod 12");
    }
    return static_cast<std::int64_t>((n - 1) / 12) - 1;
}

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    auto ps = prime_divisors(q);
    return ps.size() == 1;
}

double gv_bound(std::uint64_t q, double delta) {
    if (!is_prime_power(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    if (!(delta >= 0.0 && delta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "delta outside [0, 1]");
    const double qd = static_cast<double>(q);
    if (delta >= (qd - 1.0) / qd) return 0.0;
    const double ln_q = std::log(qd);
    auto xlogx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
    const double entropy = (delta * std::log(qd - 1.0) - xlogx(delta) - xlogx(1.0 - delta)) / ln_q;
    return std::max(0.0, 1.0 - entropy);
}

double tvz_line(std::uint64_t q, double delta) {
    if (!is_prime_power(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    if (root * root != q) throw Error(ErrorCode::NotASquare, std::to_string(q) + " is not a square");
    if (!(delta >= 0.0 && delta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "delta outside [0, 1]");
    return std::max(0.0, 1.0 - delta - 1.0 / (static_cast<double>(root) - 1.0));
}

std::optional<Interval> tvz_exceeds_gv(std::uint64_t q, std::size_t grid) {
    if (grid < 100) throw Error(ErrorCode::InvalidArgument, "grid must have at least 100 steps");
    auto excess = [q](double d) { return tvz_line(q, d) - gv_bound(q, d) > kGuard; };
    excess(0.0);  // validates q up front

    std::size_t best_start = 0;
    std::size_t best_len = 0;
    std::size_t run_start = 0;
    std::size_t run_len = 0;
    for (std::size_t i = 0; i <= grid; ++i) {
        const double d = static_cast<double>(i) / static_cast<double>(grid);
        if (excess(d)) {
            if (run_len == 0) run_start = i;
            ++run_len;
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
        } else {
            run_len = 0;
        }
    }
    if (best_len == 0) return std::nullopt;

    auto at = [grid](std::size_t i) { return static_cast<double>(i) / static_cast<double>(grid); };
    // bisect between an outside point and an inside point
    auto refine = [&](double outside, double inside) {
        while (std::abs(inside - outside) > kBisectTol) {
            const double mid = 0.5 * (inside + outside);
            (excess(mid) ? inside : outside) = mid;
        }
        return inside;
    };
    const std::size_t first = best_start;
    const std::size_t last = best_start + best_len - 1;
    Interval out;
    out.lo = first == 0 ? 0.0 : refine(at(first - 1), at(first));
    out.hi = last == grid ? 1.0 : refine(at(last + 1), at(last));
    return out;
}

double prop7_bound(std::int64_t genus, std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "code length must be >= 1");
    return 1.0 - static_cast<double>(genus - 1) / static_cast<double>(n);
}

}  // namespace modcodes::bounds
