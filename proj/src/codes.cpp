#include "modcodes/codes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "modcodes/error.hpp"

namespace modcodes::codes {

using ff::FFMatrix;
using ff::FieldElement;

// ---------------------------------------------------------------------------
// Construction

LinearCode LinearCode::from_matrix(const FFMatrix& rows, std::string provenance) {
    LinearCode c;
    c.p = rows.modulus();
    c.n = rows.cols();
    c.evaluation = rows;
    const auto keep = ff::independent_rows(rows);
    c.generator = rows.select_rows(keep);
    c.k = keep.size();
    c.provenance = std::move(provenance);
    if (c.k < rows.rows()) {
        c.warnings.push_back("evaluation matrix has rank " + std::to_string(c.k) + " < " +
                             std::to_string(rows.rows()) + " basis functions; dependent rows dropped");
    }
    return c;
}

LinearCode evaluation_code(const std::vector<rr::MonomialFunction>& basis, const std::vector<curves::CurvePoint>& points,
                           std::int64_t p_in) {
    const std::uint32_t p = ff::checked_modulus(p_in);
    if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "empty basis");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].is_infinity()) {
            throw Error(ErrorCode::SupportCollision, "point at infinity lies in the divisor support");
        }
        if (points[i].modulus() != p) throw Error(ErrorCode::ModulusMismatch, "point not over GF(" + std::to_string(p) + ")");
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i] == points[j]) throw Error(ErrorCode::DuplicatePoint, points[i].to_string() + " repeated");
        }
    }
    FFMatrix e(p, basis.size(), points.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < points.size(); ++c) e.set(r, c, rr::eval_monomial(basis[r], points[c]).value());

    std::ostringstream prov;
    prov << "monomials {";
    for (std::size_t r = 0; r < basis.size(); ++r) prov << (r ? ", " : "") << rr::to_string(basis[r]);
    prov << "} at " << points.size() << " affine points over GF(" << p << ")";
    return LinearCode::from_matrix(e, prov.str());
}

namespace {

std::array<std::uint32_t, 3> normalized(const std::array<FieldElement, 3>& pt) {
    std::size_t lead = 0;
    while (lead < 3 && pt[lead].is_zero()) ++lead;
    if (lead == 3) throw Error(ErrorCode::ZeroTriple, "(0, 0, 0) is not a projective point");
    const FieldElement s = pt[lead].inv();
    return {(pt[0] * s).value(), (pt[1] * s).value(), (pt[2] * s).value()};
}

}  // namespace

LinearCode evaluation_code(const std::vector<rr::ProjectiveFormRatio>& basis,
                           const std::vector<std::array<FieldElement, 3>>& points, std::int64_t p_in) {
    const std::uint32_t p = ff::checked_modulus(p_in);
    if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "empty basis");
    std::vector<std::array<std::uint32_t, 3>> seen;
    for (const auto& pt : points) {
        for (const auto& c : pt)
            if (c.modulus() != p) throw Error(ErrorCode::ModulusMismatch, "point not over GF(" + std::to_string(p) + ")");
        const auto key = normalized(pt);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw Error(ErrorCode::DuplicatePoint, "projective point repeated");
        }
        seen.push_back(key);
        for (const auto& r : basis) {
            if (rr::eval_form(r.denominator, pt).is_zero()) {
                throw Error(ErrorCode::SupportCollision, rr::to_string(r) + " has a pole at an evaluation point");
            }
        }
    }
    FFMatrix e(p, basis.size(), points.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < points.size(); ++c) e.set(r, c, rr::eval_projective(basis[r], points[c]).value());

    std::ostringstream prov;
    prov << "ratios {";
    for (std::size_t r = 0; r < basis.size(); ++r) prov << (r ? ", " : "") << rr::to_string(basis[r]);
    prov << "} at " << points.size() << " projective points over GF(" << p << ")";
    return LinearCode::from_matrix(e, prov.str());
}

// ---------------------------------------------------------------------------
// Distributions

mpz_class WeightDistribution::total() const {
    mpz_class s = 0;
    for (const auto& a : counts) s += a;
    return s;
}

std::optional<std::size_t> WeightDistribution::min_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] > 0) return w;
    return std::nullopt;
}

Strategy parse_strategy(const std::string& text) {
    if (text == "auto") return Strategy::Auto;
    if (text == "direct") return Strategy::Direct;
    if (text == "dual") return Strategy::Dual;
    if (text == "rank") return Strategy::SupportRank;
    throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + text + "' (auto, direct, dual, rank)");
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Direct: return "direct";
        case Strategy::Dual: return "dual";
        case Strategy::SupportRank: return "rank";
    }
    return "?";
}

namespace {

// Information vectors whose first nonzero digit is 1, in lexicographic order. Block l
// holds the vectors with leading 1 at position l: p^(k-1-l) of them.
struct ProjectiveLayout {
    std::vector<std::uint64_t> block_start;  // size k + 1
    std::uint64_t total() const { return block_start.back(); }
};

ProjectiveLayout projective_layout(std::size_t k, std::uint32_t p) {
    ProjectiveLayout layout;
    std::vector<std::uint64_t> sizes(k);
    std::uint64_t s = 1;
    for (std::size_t l = k; l-- > 0;) {
        sizes[l] = s;
        s *= p;
    }
    layout.block_start.push_back(0);
    for (std::size_t l = 0; l < k; ++l) layout.block_start.push_back(layout.block_start.back() + sizes[l]);
    return layout;
}

template <typename T>
void count_range(const std::vector<std::vector<T>>& rows, std::uint32_t p, const ProjectiveLayout& layout,
                 std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hist) {
    if (lo >= hi) return;
    const std::size_t k = rows.size();
    const std::size_t n = rows.front().size();
    const T mod = static_cast<T>(p);
    std::vector<T> word(n);
    std::vector<std::uint32_t> digit(k, 0);

    auto add_row = [&](std::size_t j) {
        const T* r = rows[j].data();
        for (std::size_t c = 0; c < n; ++c) {
            T s = static_cast<T>(word[c] + r[c]);
            if (s >= mod) s = static_cast<T>(s - mod);
            word[c] = s;
        }
    };

    std::size_t lead = static_cast<std::size_t>(
        std::upper_bound(layout.block_start.begin(), layout.block_start.end(), lo) - layout.block_start.begin() - 1);

    auto load = [&](std::uint64_t index) {
        std::fill(digit.begin(), digit.end(), 0U);
        std::uint64_t local = index - layout.block_start[lead];
        for (std::size_t j = k; j-- > lead + 1;) {
            digit[j] = static_cast<std::uint32_t>(local % p);
            local /= p;
        }
        std::fill(word.begin(), word.end(), T{0});
        add_row(lead);
        for (std::size_t j = lead + 1; j < k; ++j) {
            if (digit[j] == 0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint64_t v = word[c] + std::uint64_t{digit[j]} * rows[j][c] % p;
                word[c] = static_cast<T>(v % p);
            }
        }
    };

    load(lo);
    for (std::uint64_t idx = lo;;) {
        std::size_t w = 0;
        for (std::size_t c = 0; c < n; ++c) w += word[c] != 0;
        ++hist[w];
        if (++idx >= hi) break;
        if (idx == layout.block_start[lead + 1]) {
            ++lead;
            load(idx);
            continue;
        }
        // odometer: a digit that wraps has added its row p times, which is zero
        for (std::size_t j = k - 1;; --j) {
            add_row(j);
            if (++digit[j] < p) break;
            digit[j] = 0;
        }
    }
}

template <typename T>
std::vector<std::uint64_t> count_projective(const FFMatrix& g, unsigned jobs) {
    const std::uint32_t p = g.modulus();
    std::vector<std::vector<T>> rows(g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const auto src = g.row(r);
        rows[r].assign(src.begin(), src.end());
    }
    const ProjectiveLayout layout = projective_layout(g.rows(), p);
    const std::uint64_t total = layout.total();
    jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total)));

    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(g.cols() + 1, 0));
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
        const std::uint64_t lo = total * t / jobs;
        const std::uint64_t hi = total * (t + 1) / jobs;
        if (jobs == 1) {
            count_range(rows, p, layout, lo, hi, partial[t]);
        } else {
            workers.emplace_back([&, lo, hi, t] { count_range(rows, p, layout, lo, hi, partial[t]); });
        }
    }
    for (auto& w : workers) w.join();
    std::vector<std::uint64_t> merged(g.cols() + 1, 0);
    for (const auto& part : partial)
        for (std::size_t w = 0; w < merged.size(); ++w) merged[w] += part[w];
    return merged;
}

mpz_class power(std::uint32_t p, std::size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

mpz_class binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

WeightDistribution enumerate_row_space(const FFMatrix& g, unsigned jobs, std::uint64_t limit) {
    const std::uint32_t p = g.modulus();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    WeightDistribution out{std::vector<mpz_class>(n + 1, 0)};
    out.counts[0] = 1;
    if (k == 0) return out;
    if (ff::rank(g) != k) throw Error(ErrorCode::InvalidArgument, "enumeration needs a full-rank generator");
    if (power(p, k) > mpz_class(std::to_string(limit))) {
        throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(k) + " words exceed the limit of " +
                                             std::to_string(limit));
    }
    std::vector<std::uint64_t> hist;
    if (p < 128) {
        hist = count_projective<std::uint8_t>(g, jobs);
    } else if (p < 32768) {
        hist = count_projective<std::uint16_t>(g, jobs);
    } else {
        hist = count_projective<std::uint32_t>(g, jobs);
    }
    // every nonzero codeword is a unique nonzero scalar times a projective representative
    for (std::size_t w = 1; w <= n; ++w) {
        out.counts[w] = mpz_class(std::to_string(hist[w])) * (p - 1);
    }
    if (hist[0] != 0) throw std::logic_error("nonzero information vector produced the zero word");
    return out;
}

WeightDistribution kernel_distribution(const FFMatrix& m) {
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.cols();
    if (n > kMaxSupportRankLength) {
        throw Error(ErrorCode::TooLarge, "support-rank route limited to n <= " + std::to_string(kMaxSupportRankLength));
    }
    // column vectors of the row-reduced matrix
    const auto echelon = ff::row_reduce(m);
    const std::size_t r = echelon.pivots.size();
    std::vector<std::vector<std::uint32_t>> columns(n, std::vector<std::uint32_t>(r));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < r; ++i) columns[c][i] = echelon.matrix.entry(i, c);

    // count[t][e]: subsets T with |T| = t and |T| - rank(M_T) = e
    std::vector<std::vector<std::uint64_t>> count(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    struct BasisVec {
        std::size_t pivot;
        std::vector<std::uint32_t> v;
    };
    std::vector<BasisVec> basis;
    basis.reserve(r);

    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t c, std::size_t size) {
        if (c == n) {
            ++count[size][size - basis.size()];
            return;
        }
        walk(c + 1, size);
        std::vector<std::uint32_t> v = columns[c];
        for (const auto& b : basis) {
            const std::uint64_t f = v[b.pivot];
            if (f == 0) continue;
            for (std::size_t i = 0; i < r; ++i) v[i] = static_cast<std::uint32_t>((v[i] + (p - f) * b.v[i]) % p);
        }
        const auto nz = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (nz == v.end()) {
            walk(c + 1, size + 1);
            return;
        }
        const std::size_t piv = static_cast<std::size_t>(nz - v.begin());
        const std::uint64_t inv = ff::pow_mod(v[piv], p - 2, p);
        for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p);
        basis.push_back({piv, std::move(v)});
        walk(c + 1, size + 1);
        basis.pop_back();
    };
    walk(0, 0);

    std::vector<mpz_class> supported(n + 1, 0);  // N_t
    for (std::size_t t = 0; t <= n; ++t)
        for (std::size_t e = 0; e <= t; ++e)
            if (count[t][e] != 0) supported[t] += mpz_class(std::to_string(count[t][e])) * power(p, e);

    WeightDistribution out{std::vector<mpz_class>(n + 1, 0)};
    for (std::size_t w = 0; w <= n; ++w) {
        mpz_class a = 0;
        for (std::size_t t = 0; t <= w; ++t) {
            const mpz_class term = binomial(n - t, w - t) * supported[t];
            if ((w - t) % 2 == 0) a += term;
            else a -= term;
        }
        out.counts[w] = a;
    }
    return out;
}

mpz_class krawtchouk(std::size_t n, std::uint32_t p, std::size_t w, std::size_t v) {
    mpz_class s = 0;
    for (std::size_t j = 0; j <= w; ++j) {
        const mpz_class term = binomial(v, j) * binomial(n - v, w - j) * power(p - 1, w - j);
        if (j % 2 == 0) s += term;
        else s -= term;
    }
    return s;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, std::size_t k, std::uint32_t p) {
    const std::size_t n = w.length();
    const mpz_class scale = power(p, k);
    WeightDistribution out{std::vector<mpz_class>(n + 1, 0)};
    for (std::size_t u = 0; u <= n; ++u) {
        mpz_class s = 0;
        for (std::size_t v = 0; v <= n; ++v)
            if (w.counts[v] != 0) s += w.counts[v] * krawtchouk(n, p, u, v);
        if (!mpz_divisible_p(s.get_mpz_t(), scale.get_mpz_t())) {
            throw Error(ErrorCode::NonIntegralResult, "transformed count for weight " + std::to_string(u) +
                                                          " is not divisible by " + std::to_string(p) + "^" +
                                                          std::to_string(k));
        }
        mpz_divexact(out.counts[u].get_mpz_t(), s.get_mpz_t(), scale.get_mpz_t());
    }
    return out;
}

ff::StandardForm systematic(const LinearCode& c) { return ff::standard_form(c.generator); }

FFMatrix dual_generator(const LinearCode& c) {
    const auto sf = systematic(c);
    const FFMatrix hp = ff::check_matrix(sf.matrix);
    FFMatrix h(c.p, hp.rows(), c.n);
    for (std::size_t i = 0; i < hp.rows(); ++i)
        for (std::size_t j = 0; j < c.n; ++j) h.set(i, sf.column_permutation[j], hp.entry(i, j));
    return h;
}

WeightDistribution weight_distribution(const LinearCode& c, const EnumerationOptions& opts) {
    Strategy s = opts.strategy;
    const std::size_t dual_dim = c.n - c.k;
    if (s == Strategy::Auto) {
        s = c.k <= dual_dim ? Strategy::Direct : Strategy::Dual;
        const std::size_t dim = std::min(c.k, dual_dim);
        if (power(c.p, dim) > mpz_class(std::to_string(opts.limit)) && c.n <= kMaxSupportRankLength) {
            s = Strategy::SupportRank;
        }
    }
    switch (s) {
        case Strategy::Direct:
            return enumerate_row_space(c.generator, opts.jobs, opts.limit);
        case Strategy::Dual: {
            const WeightDistribution dual = enumerate_row_space(dual_generator(c), opts.jobs, opts.limit);
            return macwilliams_transform(dual, dual_dim, c.p);
        }
        case Strategy::SupportRank:
            return macwilliams_transform(kernel_distribution(c.generator), dual_dim, c.p);
        case Strategy::Auto:
            break;
    }
    throw std::logic_error("unresolved strategy");
}

std::size_t min_distance(const LinearCode& c, const EnumerationOptions& opts) {
    const auto d = weight_distribution(c, opts).min_weight();
    if (!d) throw Error(ErrorCode::InvalidArgument, "the zero code has no minimum distance");
    return *d;
}

std::size_t min_distance_by_columns(const FFMatrix& h) {
    const std::size_t n = h.cols();
    const std::size_t r = ff::rank(h);
    for (std::size_t w = 1; w <= std::min(n, r + 1); ++w) {
        std::vector<std::size_t> pick(w);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (ff::rank(h.select_columns(pick)) < w) return w;
            std::size_t i = w;
            while (i > 0 && pick[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "every column set is independent: the code is zero");
}

CodeParameters parameters_from(std::size_t n, std::size_t k, std::size_t d) {
    return CodeParameters{n, k, d, d == n - k + 1, d == 0 ? 0 : (d - 1) / 2};
}

CodeParameters code_parameters(const LinearCode& c, const EnumerationOptions& opts) {
    return parameters_from(c.n, c.k, min_distance(c, opts));
}

ShokrollahiResult shokrollahi_check(const WeightDistribution& w, std::size_t n, std::size_t a, std::uint32_t p) {
    if (w.length() != n) throw Error(ErrorCode::LengthMismatch, "distribution length differs from n");
    ShokrollahiResult res;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), a);
    mpz_gcd(res.gcd.get_mpz_t(), mpz_class(static_cast<unsigned long>(n)).get_mpz_t(), fact.get_mpz_t());
    res.coprime = res.gcd == 1;

    // R(x) = sum A_w x^(n-w) - x^n - sum_{i<a} C(n,i)(p^(a-i) - 1)(x-1)^i, ascending
    std::vector<mpz_class> r(n + 1, 0);
    for (std::size_t wt = 0; wt <= n; ++wt) r[n - wt] += w.counts[wt];
    r[n] -= 1;
    for (std::size_t i = 0; i < a && i <= n; ++i) {
        const mpz_class c = binomial(n, i) * (power(p, a - i) - 1);
        // (x - 1)^i = sum_j C(i,j) x^j (-1)^(i-j)
        for (std::size_t j = 0; j <= i; ++j) {
            const mpz_class term = c * binomial(i, j);
            if ((i - j) % 2 == 0) r[j] -= term;
            else r[j] += term;
        }
    }
    // divide by (x - 1) a times; every remainder must vanish
    bool exact = true;
    for (std::size_t step = 0; step < a && exact; ++step) {
        const std::size_t deg = r.size() - 1;
        if (deg == 0) {
            exact = r[0] == 0;
            r.assign(1, 0);
            continue;
        }
        std::vector<mpz_class> q(deg, 0);
        mpz_class carry = 0;
        for (std::size_t i = deg; i-- > 0;) {
            carry += r[i + 1];
            q[i] = carry;
        }
        exact = carry + r[0] == 0;
        r = std::move(q);
    }
    res.quotient = r;
    const bool constant = std::all_of(r.begin() + 1, r.end(), [](const mpz_class& x) { return x == 0; });
    res.consistent = exact && constant && r[0] >= 0;
    if (res.consistent) res.b_a = r[0];
    return res;
}

bool elliptic_sum_property(const CodeParameters& params, int genus) {
    const auto n = static_cast<std::int64_t>(params.n);
    const auto kd = static_cast<std::int64_t>(params.k + params.d);
    if (genus == 1 && !(n <= kd && kd <= n + 1)) return false;
    return kd >= n - genus + 1;
}

Convention parse_convention(const std::string& text) {
    if (text == "table2") return Convention::Table2;
    if (text == "plain") return Convention::Plain;
    throw Error(ErrorCode::InvalidArgument, "unknown convention '" + text + "' (table2, plain)");
}

std::string render(const WeightDistribution& w, Convention convention) {
    const std::size_t n = w.length();
    std::vector<std::pair<std::size_t, mpz_class>> terms;  // (power, coefficient)
    for (std::size_t wt = 0; wt <= n; ++wt) {
        if (w.counts[wt] == 0) continue;
        terms.emplace_back(convention == Convention::Table2 ? n - wt : wt, w.counts[wt]);
    }
    if (convention == Convention::Table2) {
        std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    } else {
        std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    }
    std::string s;
    for (const auto& [pw, c] : terms) {
        const bool negative = c < 0;
        if (!s.empty()) s += negative ? "-" : "+";
        else if (negative) s += "-";
        const mpz_class mag = abs(c);
        if (pw == 0 || mag != 1) s += mag.get_str();
        if (pw >= 1) s += "x";
        if (pw >= 2) s += "^" + std::to_string(pw);
    }
    return s.empty() ? "0" : s;
}

}  // namespace modcodes::codes
