#include "modcodes/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "modcodes/bounds.hpp"
#include "modcodes/codes.hpp"
#include "modcodes/curves.hpp"
#include "modcodes/error.hpp"
#include "modcodes/qseries.hpp"
#include "modcodes/riemann_roch.hpp"

namespace modcodes::reproduce {

using codes::Convention;
using codes::EnumerationOptions;
using codes::LinearCode;
using codes::Strategy;
using codes::WeightDistribution;
using ff::FFMatrix;
using ff::FieldElement;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Erratum: return "ERRATUM";
    }
    return "?";
}

const std::vector<std::string>& groups() {
    static const std::vector<std::string> g{"table2", "oracle", "erratum", "hyperelliptic", "points", "hecke",
                                            "qseries", "genus",  "shokrollahi", "bounds",  "conic"};
    return g;
}

bool criterion_passed(const std::vector<Row>& rows, int criterion) {
    bool any = false;
    for (const auto& r : rows) {
        if (r.criterion != criterion) continue;
        any = true;
        if (r.status == Status::Fail) return false;
    }
    return any;
}

namespace {

// --- printed data ---------------------------------------------------------------

struct PrintedEnumerator {
    unsigned a;
    const char* polynomial;  // sum A_w x^(n-w); "..." marks elided terms
    std::size_t errors;
};

constexpr PrintedEnumerator kTable2[] = {
    {2, "x^17+96x^2+12x+60", 7},
    {3, "x^17+456x^3+264x^2+960x+516", 6},
    {4, "x^17+1608x^4+1728x^3+8016x^2+9684x+7524", 6},
    {5, "x^17+4104x^5+8040x^4+...+94644", 5},
    {6, "x^17+8232x^6+24864x^5+...+1239540", 5},
    {7, "x^17+12984x^7+57624x^6+...+16090116", 4},
    {8, "x^17+16272x^8+103200x^7+...+209219292", 4},
    {9, "x^17+16176x^9+146136x^8+...+2719777524", 3},
    {10, "x^17+12912x^10+162600x^9+...+35357193732", 3},
};

constexpr long kProseMinWeightCount = 384;  // stated for k = 3 in the running text

const std::vector<std::pair<int, int>> kLevel19Mod13 = {
    {0, 0}, {0, 12}, {1, 6},  {3, 0},  {3, 12}, {4, 2},  {4, 10}, {5, 3},  {5, 9},
    {8, 3}, {8, 9},  {9, 0},  {9, 12}, {11, 4}, {11, 8}, {12, 3}, {12, 9},
};
const std::vector<std::pair<int, int>> kLevel19Mod3 = {{0, 0}, {0, 2}, {1, 0}, {1, 2}, {2, 1}};
const std::vector<std::pair<int, int>> kLevel11Mod3 = {{0, 0}, {0, 2}, {1, 0}, {1, 2}};

const std::vector<std::vector<std::int64_t>> kSeptic2G = {
    {1, 0, 0, 2, 5, 1, 5},
    {0, 1, 0, 1, 5, 5, 2},
    {0, 0, 1, 5, 5, 2, 1},
};
const std::vector<std::vector<std::int64_t>> kSeptic2H = {
    {5, 6, 2, 1, 0, 0, 0},
    {2, 2, 2, 0, 1, 0, 0},
    {6, 2, 5, 0, 0, 1, 0},
    {2, 5, 6, 0, 0, 0, 1},
};

const std::vector<std::array<std::uint32_t, 3>> kConicPoints = {
    {0, 0, 1}, {0, 1, 0}, {0, 1, 6}, {1, 0, 2}, {1, 0, 4}, {1, 3, 4}, {1, 3, 6}, {1, 5, 2}, {1, 5, 6},
};
const std::vector<std::vector<std::int64_t>> kConicG = {
    {0, 0, 0, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 2, 2, 4, 4}, {1, 0, 1, 4, 2, 2, 1, 4, 1},
    {0, 0, 0, 0, 0, 3, 3, 5, 5}, {0, 0, 6, 0, 0, 5, 4, 3, 2}, {0, 0, 0, 2, 4, 4, 6, 2, 6},
};
const std::vector<std::vector<std::int64_t>> kConicGPrime = {
    {1, 0, 0, 0, 0, 0, 0, 4, 4}, {0, 1, 0, 0, 0, 0, 6, 0, 6}, {0, 0, 1, 0, 0, 0, 1, 3, 4},
    {0, 0, 0, 1, 0, 0, 6, 1, 6}, {0, 0, 0, 0, 1, 0, 1, 3, 5}, {0, 0, 0, 0, 0, 1, 1, 4, 4},
};
const std::vector<std::vector<std::int64_t>> kConicH = {
    {0, 1, 2, 1, 2, 2, 1, 0, 0},
    {3, 0, 4, 6, 4, 3, 0, 1, 0},
    {3, 1, 3, 1, 2, 3, 0, 0, 1},
};

const std::vector<long> kLevel11Form = {1, -2, -1, 2, 1, 2, -2};  // q .. q^7
const std::vector<std::string> kJCoefficients = {"1", "744", "196884", "21493760", "864299970"};

const std::vector<int> kGenusOneLevels = {11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49};
const std::vector<int> kGenusZeroLevels = {1, 3, 4, 5, 6, 7, 8, 9, 12, 13, 16, 18, 25};

// The cubic printed for level 49 before the sign change of x was carried into h.
constexpr const char* kPrinted49H = "-x^2-x-1";
constexpr const char* kPrinted49F = "x^3-3x^2-2x-1";

// --- helpers ----------------------------------------------------------------------

struct ParsedPolynomial {
    std::map<std::size_t, mpz_class> terms;  // power -> coefficient
    bool elided = false;
};

ParsedPolynomial parse_enumerator(const std::string& text) {
    ParsedPolynomial out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '+') {
            ++i;
            continue;
        }
        if (text.compare(i, 3, "...") == 0) {
            out.elided = true;
            i += 3;
            continue;
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        std::size_t power = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string e;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
                power = std::stoul(e);
            }
        }
        out.terms[power] = digits.empty() ? mpz_class(1) : mpz_class(digits);
    }
    return out;
}

// Printed terms must all match; when nothing is elided, no other term may be present.
bool matches_printed(const WeightDistribution& w, const ParsedPolynomial& printed, std::string& mismatch) {
    const std::size_t n = w.length();
    for (const auto& [power, c] : printed.terms) {
        const mpz_class got = power <= n ? w.counts[n - power] : mpz_class(0);
        if (got != c) {
            mismatch = "x^" + std::to_string(power) + ": printed " + c.get_str() + ", computed " + got.get_str();
            return false;
        }
    }
    if (!printed.elided) {
        for (std::size_t wt = 0; wt <= n; ++wt) {
            if (w.counts[wt] != 0 && !printed.terms.count(n - wt)) {
                mismatch = "unprinted term x^" + std::to_string(n - wt);
                return false;
            }
        }
    }
    return true;
}

std::string join_points(const std::vector<curves::CurvePoint>& pts) {
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "" : " ") + p.to_string();
    return s;
}

FFMatrix matrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    return FFMatrix::from_rows(p, rows);
}

bool same_row_space(const FFMatrix& a, const FFMatrix& b) {
    return ff::rank(a) == ff::rank(b) && ff::row_space_contains(a, b);
}

// Is C(b) = C(a) D for some invertible diagonal D? Both matrices full rank.
bool scaled_equivalent(const FFMatrix& a, const FFMatrix& b) {
    const auto ra = ff::row_reduce(a);
    const auto rb = ff::row_reduce(b);
    if (ra.pivots != rb.pivots) return false;
    const std::uint32_t p = a.modulus();
    const std::size_t n = a.cols();
    // rb[i][j] = ra[i][j] * d_j / d_{pivot_i}
    std::vector<std::optional<FieldElement>> d(n);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < ra.pivots.size(); ++i) {
            const std::size_t pc = ra.pivots[i];
            for (std::size_t j = 0; j < n; ++j) {
                const FieldElement x = ra.matrix.at(i, j);
                const FieldElement y = rb.matrix.at(i, j);
                if (x.is_zero() != y.is_zero()) return false;
                if (x.is_zero()) continue;
                const FieldElement ratio = y / x;  // d_j / d_pc
                if (d[pc] && !d[j]) {
                    d[j] = ratio * *d[pc];
                    progress = true;
                } else if (d[j] && !d[pc]) {
                    d[pc] = *d[j] / ratio;
                    progress = true;
                } else if (d[j] && d[pc] && *d[j] != ratio * *d[pc]) {
                    return false;
                }
            }
        }
        if (!progress) {
            // seed one unconstrained column per connected component
            for (std::size_t j = 0; j < n; ++j) {
                if (!d[j]) {
                    d[j] = FieldElement::unchecked(1, p);
                    progress = true;
                    break;
                }
            }
        }
    }
    return true;
}

// A column permutation (and scaling) carrying C(a) onto C(b), rendered, if one exists.
std::optional<std::string> find_equivalence(const FFMatrix& a, const FFMatrix& b, bool allow_scaling) {
    const std::size_t n = a.cols();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const FFMatrix pa = a.select_columns(perm);
        if (allow_scaling ? scaled_equivalent(pa, b) : same_row_space(pa, b)) {
            std::string s = "(";
            for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(perm[i] + 1);
            return s + ")";
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::string rows_to_string(const FFMatrix& m) {
    std::string s;
    for (const auto& row : m.to_rows()) {
        s += s.empty() ? "[" : " [";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + std::to_string(row[j]);
        s += "]";
    }
    return s;
}

// --- context ------------------------------------------------------------------------

class Report {
public:
    explicit Report(const Options& opts) : opts_(opts) {}

    bool wanted(const std::string& group, int criterion) const {
        return opts_.only.empty() || opts_.only == group || opts_.only == std::to_string(criterion);
    }

    void add(int criterion, std::string id, std::string group, Status status, std::string description,
             std::string detail) {
        rows_.push_back({criterion, std::move(id), std::move(group), status, std::move(description), std::move(detail)});
    }

    // Failures inside one comparison become FAIL rows rather than aborting the report.
    void guarded(int criterion, const std::string& id, const std::string& group, const std::string& description,
                 const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(criterion, id, group, Status::Fail, description, std::string("exception: ") + e.what());
        }
    }

    unsigned jobs() const { return opts_.jobs; }
    std::vector<Row> take() { return std::move(rows_); }

    // level-19 code over GF(13) with L(a P_inf)
    const LinearCode& family_code(unsigned a) {
        auto it = codes_.find(a);
        if (it != codes_.end()) return it->second;
        const auto entry = curves::x0_model(19);
        auto pts = curves::enumerate_points(entry.model, 13);
        pts.pop_back();  // the point at infinity carries the divisor
        auto code = codes::evaluation_code(rr::one_point_basis(rr::CurveKind::elliptic(), a), pts, 13);
        return codes_.emplace(a, std::move(code)).first->second;
    }

    const WeightDistribution& family_distribution(unsigned a) {
        auto it = dists_.find(a);
        if (it != dists_.end()) return it->second;
        EnumerationOptions o;
        o.jobs = opts_.jobs;
        return dists_.emplace(a, codes::weight_distribution(family_code(a), o)).first->second;
    }

private:
    Options opts_;
    std::vector<Row> rows_;
    std::map<unsigned, LinearCode> codes_;
    std::map<unsigned, WeightDistribution> dists_;
};

LinearCode septic_code(unsigned a) {
    const std::int64_t p = 7;
    curves::HyperellipticModel m{IntPoly::parse("x^7-x"), IntPoly()};
    auto pts = curves::enumerate_points(m, p);
    pts.pop_back();
    return codes::evaluation_code(rr::one_point_basis(rr::CurveKind::hyperelliptic(7), a), pts, p);
}

std::vector<std::array<FieldElement, 3>> conic_points() {
    std::vector<std::array<FieldElement, 3>> out;
    for (const auto& t : kConicPoints) {
        out.push_back({FieldElement::unchecked(t[0], 7), FieldElement::unchecked(t[1], 7), FieldElement::unchecked(t[2], 7)});
    }
    return out;
}

// --- criteria -------------------------------------------------------------------------

void table2(Report& r) {
    for (const auto& row : kTable2) {
        const std::string id = "table2-a" + std::to_string(row.a);
        const std::string desc = "weight enumerator, level-19 curve over GF(13), a = " + std::to_string(row.a);
        r.guarded(1, id, "table2", desc, [&] {
            const auto& code = r.family_code(row.a);
            const auto& w = r.family_distribution(row.a);
            const auto printed = parse_enumerator(row.polynomial);
            std::string mismatch;
            const bool ok_w = matches_printed(w, printed, mismatch);
            const auto d = *w.min_weight();
            const auto params = codes::parameters_from(code.n, code.k, d);
            const bool ok_t = params.t == row.errors;
            const Strategy used = code.k <= code.n - code.k ? Strategy::Direct : Strategy::Dual;
            std::ostringstream det;
            det << "[" << code.n << "," << code.k << "," << d << "] via " << codes::to_string(used) << ": "
                << codes::render(w, Convention::Table2) << "; corrects " << params.t << " (printed " << row.errors
                << ")";
            if (printed.elided) det << "; printed terms only";
            if (!ok_w) det << "; " << mismatch;
            r.add(1, id, "table2", ok_w && ok_t ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
}

void oracle(Report& r) {
    for (unsigned a = 2; a <= 10; ++a) {
        const std::string id = "oracle-a" + std::to_string(a);
        const std::string desc = "independent weight distributions agree, a = " + std::to_string(a);
        r.guarded(2, id, "oracle", desc, [&] {
            const auto& code = r.family_code(a);
            EnumerationOptions o;
            o.jobs = r.jobs();
            std::ostringstream det;
            bool ok = true;
            WeightDistribution enumerated;
            if (a <= 8) {
                o.strategy = Strategy::Direct;
                enumerated = codes::weight_distribution(code, o);
                det << "direct enumeration";
            } else {
                o.strategy = Strategy::Dual;
                enumerated = codes::weight_distribution(code, o);
                det << "dual enumeration + MacWilliams";
            }
            o.strategy = Strategy::SupportRank;
            const auto via_rank = codes::weight_distribution(code, o);
            det << (enumerated == via_rank ? " = " : " != ") << "dual by support ranks + MacWilliams";
            ok = ok && enumerated == via_rank;
            const auto via_kernel = codes::kernel_distribution(codes::dual_generator(code));
            det << (enumerated == via_kernel ? " = " : " != ") << "support ranks of H";
            ok = ok && enumerated == via_kernel;
            const bool total = enumerated.total() == [&] {
                mpz_class t;
                mpz_ui_pow_ui(t.get_mpz_t(), 13, code.k);
                return t;
            }();
            ok = ok && total;
            det << "; sum = 13^" << code.k << (total ? "" : " violated");
            r.add(2, id, "oracle", ok ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
}

void erratum(Report& r) {
    const std::string desc = "minimum-weight count for k = 3: prose 384 vs tabulated 456";
    r.guarded(3, "erratum-a3", "erratum", desc, [&] {
        const auto& w = r.family_distribution(3);
        const mpz_class a14 = w.counts[14];
        const mpz_class tabulated = parse_enumerator(kTable2[1].polynomial).terms.at(3);
        std::ostringstream det;
        det << "exhaustive A_14 = " << a14 << " over all 13^3 codewords; ";
        Status s = Status::Erratum;
        if (a14 == tabulated) {
            det << "tabulated " << tabulated << " confirmed, prose " << kProseMinWeightCount << " is an erratum";
        } else if (a14 == kProseMinWeightCount) {
            det << "prose " << kProseMinWeightCount << " confirmed, tabulated " << tabulated << " is an erratum";
        } else {
            det << "neither printed value holds";
            s = Status::Fail;
        }
        r.add(3, "erratum-a3", "erratum", s, desc, det.str());
    });
}

void hyperelliptic(Report& r) {
    struct Expect {
        unsigned a;
        std::size_t k, d;
        const char* plain;
    };
    for (const Expect& e : {Expect{2, 2, 6, "1+42x^6+6x^7"}, Expect{4, 3, 5, "1+126x^5+84x^6+132x^7"}}) {
        const std::string id = "septic-a" + std::to_string(e.a);
        const std::string desc = "y^2 = x^7 - x over GF(7), L(" + std::to_string(e.a) + "P_inf)";
        r.guarded(4, id, "hyperelliptic", desc, [&] {
            const auto code = septic_code(e.a);
            const auto w = codes::weight_distribution(code);
            const auto params = codes::code_parameters(code);
            const std::string got = codes::render(w, Convention::Plain);
            const FFMatrix h = codes::dual_generator(code);
            const FFMatrix sys = codes::systematic(code).matrix;
            const FFMatrix hs = ff::check_matrix(sys);
            const bool orth = (h * code.generator.transpose()).is_zero() && (hs * sys.transpose()).is_zero();
            bool ok = params.k == e.k && params.d == e.d && got == e.plain && orth;
            if (e.a == 2) ok = ok && params.mds;
            std::ostringstream det;
            det << "[" << params.n << "," << params.k << "," << params.d << "] " << got << (params.mds ? ", MDS" : "")
                << "; H G^T = 0: " << (orth ? "yes" : "no");
            r.add(4, id, "hyperelliptic", ok ? Status::Pass : Status::Fail, desc, det.str());
        });
    }

    const std::string desc = "printed [7,3] generator and check matrix";
    r.guarded(4, "septic-matrices", "hyperelliptic", desc, [&] {
        const FFMatrix g = matrix(7, kSeptic2G);
        const FFMatrix h = matrix(7, kSeptic2H);
        const bool h_ok = ff::check_matrix(g) == h && (h * g.transpose()).is_zero();
        const auto printed = LinearCode::from_matrix(g, "printed");
        const auto w = codes::weight_distribution(printed);
        const std::string got = codes::render(w, Convention::Plain);
        const auto ours = septic_code(4);
        const FFMatrix sys = codes::systematic(ours).matrix;
        std::ostringstream det;
        det << "check matrix of printed G equals printed H: " << (h_ok ? "yes" : "no") << "; printed G spans " << got;
        det << "; computed systematic G " << rows_to_string(sys);
        if (same_row_space(ours.generator, g)) {
            det << " spans the same code";
        } else if (auto perm = find_equivalence(ours.generator, g, false)) {
            det << " matches after column permutation " << *perm;
        } else if (auto mono = find_equivalence(ours.generator, g, true)) {
            det << " matches after column permutation " << *mono << " and column scaling";
        } else {
            det << " is not monomially equivalent";
        }
        const bool ok = h_ok && got == "1+126x^5+84x^6+132x^7";
        r.add(4, "septic-matrices", "hyperelliptic", ok ? Status::Pass : Status::Fail, desc, det.str());
    });
}

void points(Report& r) {
    {
        const std::string desc = "level-19 curve over GF(13): 18 points as listed";
        r.guarded(5, "points-19-13", "points", desc, [&] {
            const auto pts = curves::enumerate_points(curves::x0_model(19).model, 13);
            std::vector<curves::CurvePoint> expect;
            for (auto [x, y] : kLevel19Mod13) {
                expect.push_back(curves::CurvePoint::affine(FieldElement(x, 13), FieldElement(y, 13)));
            }
            expect.push_back(curves::CurvePoint::infinity(13));
            const bool ok = pts == expect;
            r.add(5, "points-19-13", "points", ok ? Status::Pass : Status::Fail, desc,
                  std::to_string(pts.size()) + " points: " + join_points(pts));
        });
    }
    for (int p : {3, 7, 11, 19}) {
        const std::string id = "points-32-" + std::to_string(p);
        const std::string desc = "y^2 = x^3 - x over GF(" + std::to_string(p) + ") has p + 1 points";
        r.guarded(5, id, "points", desc, [&] {
            const auto n = curves::enumerate_points(curves::WeierstrassModel{0, 0, 0, -1, 0}, p).size();
            r.add(5, id, "points", n == static_cast<std::size_t>(p + 1) ? Status::Pass : Status::Fail, desc,
                  std::to_string(n) + " points");
        });
    }
    struct Listed {
        int level;
        const std::vector<std::pair<int, int>>* listing;
        const char* id;
    };
    for (const Listed& l : {Listed{19, &kLevel19Mod3, "points-19-3"}, Listed{11, &kLevel11Mod3, "points-11-3"}}) {
        const std::string desc = "level-" + std::to_string(l.level) + " curve over GF(3) against the printed listing";
        r.guarded(5, l.id, "points", desc, [&] {
            const auto pts = curves::enumerate_points(curves::x0_model(l.level).model, 3);
            std::vector<curves::CurvePoint> expect;
            for (auto [x, y] : *l.listing) expect.push_back(curves::CurvePoint::affine(FieldElement(x, 3), FieldElement(y, 3)));
            expect.push_back(curves::CurvePoint::infinity(3));
            const bool ok = pts == expect;
            std::ostringstream det;
            det << pts.size() << " points (listing has " << expect.size() << "): " << join_points(pts);
            r.add(5, l.id, "points", ok ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
    {
        const std::string desc = "y^2 = x^7 - x over GF(7): infinity and (x, 0) for every x";
        r.guarded(5, "points-septic", "points", desc, [&] {
            const auto pts = curves::enumerate_points(curves::HyperellipticModel{IntPoly::parse("x^7-x"), IntPoly()}, 7);
            bool ok = pts.size() == 8 && pts.back().is_infinity();
            for (std::size_t i = 0; ok && i < 7; ++i) ok = pts[i].x().value() == i && pts[i].y().value() == 0;
            r.add(5, "points-septic", "points", ok ? Status::Pass : Status::Fail, desc, join_points(pts));
        });
    }
}

void hecke(Report& r) {
    for (int p : {2, 3, 5, 7, 13}) {
        const std::string id = "hecke-" + std::to_string(p);
        const std::string desc = "trace of T_" + std::to_string(p) + " on level 11: point count vs eta product";
        r.guarded(6, id, "hecke", desc, [&] {
            const std::int64_t by_count = curves::hecke_trace_by_count(11, p);
            const mpz_class by_eta = qs::hecke_coeff_level11(p, 60);
            bool ok = by_eta == static_cast<long>(by_count);
            if (p == 3) ok = ok && by_count == -1;
            std::ostringstream det;
            det << by_count << " (count) = " << by_eta << " (eta)";
            if (p == 3) det << "; printed -1";
            r.add(6, id, "hecke", ok ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
}

void qseries(Report& r) {
    {
        const std::string desc = "j-invariant q^-1 .. q^3";
        r.guarded(7, "qseries-j", "qseries", desc, [&] {
            const auto j = qs::j_series(4);
            bool ok = j.lowest_exponent() == -1;
            for (int e = -1; e <= 3; ++e) ok = ok && j.coeff(e) == mpz_class(kJCoefficients[static_cast<std::size_t>(e + 1)]);
            r.add(7, "qseries-j", "qseries", ok ? Status::Pass : Status::Fail, desc, j.to_string());
        });
    }
    {
        const std::string desc = "eta(z)^2 eta(11z)^2, seven printed terms";
        r.guarded(7, "qseries-eta11", "qseries", desc, [&] {
            const auto f = qs::eta_quotient({{1, 2}, {11, 2}}, 8);
            bool ok = f.lowest_exponent() >= 1 || f.coeff(0) == 0;
            for (std::size_t n = 1; n <= kLevel11Form.size(); ++n) ok = ok && f.coeff(static_cast<int>(n)) == kLevel11Form[n - 1];
            r.add(7, "qseries-eta11", "qseries", ok ? Status::Pass : Status::Fail, desc, f.to_string());
        });
    }
    {
        const std::string desc = "eta^24 equals Delta to order 60";
        r.guarded(7, "qseries-delta", "qseries", desc, [&] {
            const auto eta24 = qs::eta_quotient({{1, 24}}, 60);
            const auto delta = qs::delta_series(60);
            const bool ok = eta24.order() >= 60 && delta.order() >= 60 && eta24.agrees_with(delta) &&
                            (eta24 - delta).is_zero();
            r.add(7, "qseries-delta", "qseries", ok ? Status::Pass : Status::Fail, desc,
                  "coefficients agree for exponents below " + std::to_string(std::min(eta24.order(), delta.order())) +
                      "; tau(2..4) = " + delta.coeff(2).get_str() + ", " + delta.coeff(3).get_str() + ", " +
                      delta.coeff(4).get_str());
        });
    }
}

void genus(Report& r) {
    {
        const std::string desc = "genus 1 at the twelve tabulated levels";
        r.guarded(8, "genus-one", "genus", desc, [&] {
            bool ok = true;
            std::string det;
            for (int n : kGenusOneLevels) {
                const auto g = bounds::genus_x0(static_cast<std::uint64_t>(n)).genus;
                ok = ok && g == 1;
                det += (det.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(g);
            }
            r.add(8, "genus-one", "genus", ok ? Status::Pass : Status::Fail, desc, det);
        });
    }
    {
        const std::string desc = "genus 0 at the thirteen listed levels";
        r.guarded(8, "genus-zero", "genus", desc, [&] {
            bool ok = true;
            std::string det;
            for (int n : kGenusZeroLevels) {
                const auto g = bounds::genus_x0(static_cast<std::uint64_t>(n)).genus;
                ok = ok && g == 0;
                det += (det.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(g);
            }
            r.add(8, "genus-zero", "genus", ok ? Status::Pass : Status::Fail, desc, det);
        });
    }
    {
        const std::string desc = "(N - 1)/12 - 1 for primes N = 1 mod 12 up to 601";
        r.guarded(8, "genus-primes", "genus", desc, [&] {
            bool ok = true;
            int count = 0;
            for (std::uint64_t n = 13; n <= 601; n += 12) {
                if (!ff::is_prime(static_cast<std::int64_t>(n))) continue;
                ++count;
                ok = ok && bounds::genus_prime_1mod12(n) == bounds::genus_x0(n).genus;
            }
            r.add(8, "genus-primes", "genus", ok ? Status::Pass : Status::Fail, desc,
                  std::to_string(count) + " primes checked");
        });
    }
    {
        const std::string desc = "stored discriminants recomputed from the stored models";
        r.guarded(8, "genus-discriminants", "genus", desc, [&] {
            bool ok = true;
            std::string det;
            for (int n : curves::catalog_levels()) {
                const auto e = curves::x0_model(n);
                const auto d = curves::discriminant(e.model);
                ok = ok && d == e.discriminant && bounds::genus_x0(static_cast<std::uint64_t>(n)).genus == e.model.genus();
                det += (det.empty() ? "" : " ") + std::to_string(n) + ":" + d.get_str();
            }
            r.add(8, "genus-discriminants", "genus", ok ? Status::Pass : Status::Fail, desc, det);
        });
    }
    {
        const std::string desc = "printed level-49 cubic against its printed discriminant -1404928";
        r.guarded(8, "genus-model-49", "genus", desc, [&] {
            const curves::CurveModel printed{IntPoly::parse(kPrinted49H), IntPoly::parse(kPrinted49F)};
            const auto d = curves::discriminant(printed);
            const auto stored = curves::x0_model(49);
            std::ostringstream det;
            det << "printed " << printed.to_string() << " has discriminant " << d << "; " << stored.model.to_string()
                << " (x -> -x applied to h as well) has " << curves::discriminant(stored.model);
            const bool printed_ok = d == stored.discriminant;
            const bool fixed_ok = curves::discriminant(stored.model) == stored.discriminant;
            r.add(8, "genus-model-49", "genus",
                  printed_ok ? Status::Pass : (fixed_ok ? Status::Erratum : Status::Fail), desc, det.str());
        });
    }
}

void shokrollahi(Report& r) {
    const std::string desc = "a = 2 distribution against the weight-enumerator template";
    r.guarded(9, "shokrollahi-a2", "shokrollahi", desc, [&] {
        const auto& w = r.family_distribution(2);
        const auto res = codes::shokrollahi_check(w, 17, 2, 13);
        const bool ok = res.consistent && res.b_a == 96;
        std::ostringstream det;
        det << (res.consistent ? "zero remainder" : "inconsistent") << ", B_2 = " << res.b_a << ", gcd(17, 2!) = "
            << res.gcd;
        r.add(9, "shokrollahi-a2", "shokrollahi", ok ? Status::Pass : Status::Fail, desc, det.str());
    });
}

void bounds_rows(Report& r) {
    {
        const std::string desc = "GV curve endpoints for q in {2, 3, 4, 49}";
        r.guarded(10, "bounds-gv", "bounds", desc, [&] {
            bool ok = true;
            std::ostringstream det;
            for (std::uint64_t q : {2, 3, 4, 49}) {
                const double qd = static_cast<double>(q);
                const double at0 = bounds::gv_bound(q, 0.0);
                const double at_end = bounds::gv_bound(q, (qd - 1.0) / qd);
                ok = ok && std::abs(at0 - 1.0) <= 1e-9 && std::abs(at_end) <= 1e-9;
                det << "q=" << q << ": " << at0 << ", " << at_end << "; ";
            }
            r.add(10, "bounds-gv", "bounds", ok ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
    {
        const std::string desc = "TVZ line above GV for q = 49, nowhere for q = 4";
        r.guarded(10, "bounds-tvz", "bounds", desc, [&] {
            const auto i49 = bounds::tvz_exceeds_gv(49, 1000);
            const auto i4 = bounds::tvz_exceeds_gv(4, 1000);
            std::ostringstream det;
            det.precision(10);
            if (i49) det << "q=49: (" << i49->lo << ", " << i49->hi << ")";
            else det << "q=49: empty";
            det << "; q=4: " << (i4 ? "nonempty" : "empty");
            r.add(10, "bounds-tvz", "bounds", i49 && !i4 ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
    {
        const std::string desc = "delta + R >= 1 - (g - 1)/n for every constructed code";
        r.guarded(10, "bounds-prop7", "bounds", desc, [&] {
            struct Item {
                std::string name;
                codes::CodeParameters params;
                int genus;
            };
            std::vector<Item> items;
            for (unsigned a = 2; a <= 10; ++a) {
                const auto& c = r.family_code(a);
                items.push_back({"level19/13 a=" + std::to_string(a),
                                 codes::parameters_from(c.n, c.k, *r.family_distribution(a).min_weight()), 1});
            }
            {
                auto pts = curves::enumerate_points(curves::x0_model(19).model, 3);
                pts.pop_back();
                const auto c = codes::evaluation_code(rr::one_point_basis(rr::CurveKind::elliptic(), 2), pts, 3);
                items.push_back({"level19/3 a=2", codes::code_parameters(c), 1});
            }
            for (unsigned a : {2U, 4U}) items.push_back({"septic a=" + std::to_string(a), codes::code_parameters(septic_code(a)), 3});
            {
                // the bound needs k = dim L(D); the rank-5 span of the printed ratios is a proper subcode
                auto basis = rr::conic_basis();
                basis[0] = rr::ProjectiveFormRatio{{0, 0, 0, 0, 0, 1}, rr::kConicPhi};
                const auto c = codes::evaluation_code(basis, conic_points(), 7);
                items.push_back({"conic L(D)", codes::code_parameters(c), 1});
            }
            bool ok = true;
            std::ostringstream det;
            for (const auto& it : items) {
                const double n = static_cast<double>(it.params.n);
                const double lhs = static_cast<double>(it.params.d + it.params.k) / n;
                const double rhs = bounds::prop7_bound(it.genus, it.params.n);
                const bool holds = lhs >= rhs - 1e-9;
                ok = ok && holds && codes::elliptic_sum_property(it.params, it.genus);
                det << it.name << " [" << it.params.n << "," << it.params.k << "," << it.params.d << "]"
                    << (holds ? "" : " VIOLATED") << "; ";
            }
            det << "rank-5 conic subcode excluded (k < deg D - g + 1)";
            r.add(10, "bounds-prop7", "bounds", ok ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
}

void conic(Report& r) {
    const auto pts = conic_points();
    {
        const std::string desc = "nine projective points of the level-19 cubic over GF(7)";
        r.guarded(11, "conic-points", "conic", desc, [&] {
            const auto got = curves::projective_points(*curves::x0_model(19).weierstrass, 7);
            const bool ok = got == kConicPoints;
            std::string det;
            for (const auto& t : got) {
                det += (det.empty() ? "" : " ") + std::string("[") + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                       "," + std::to_string(t[2]) + "]";
            }
            r.add(11, "conic-points", "conic", ok ? Status::Pass : Status::Fail, desc, det);
        });
    }
    {
        const std::string desc = "rank of the recomputed 6 x 9 evaluation matrix (printed dimension 6)";
        r.guarded(11, "conic-rank", "conic", desc, [&] {
            const auto code = codes::evaluation_code(rr::conic_basis(), pts, 7);
            std::ostringstream det;
            det << "rank " << code.k << "; matrix " << rows_to_string(code.evaluation)
                << "; phi/phi = x^2/phi + y^2/phi + z^2/phi, so the six ratios span at most 5 dimensions";
            const Status s = code.k == 6 ? Status::Pass : (code.k == 5 ? Status::Erratum : Status::Fail);
            r.add(11, "conic-rank", "conic", s, desc, det.str());
        });
    }
    {
        const std::string desc = "printed G against the recomputed ratios";
        r.guarded(11, "conic-printed-g", "conic", desc, [&] {
            const FFMatrix printed = matrix(7, kConicG);
            const auto code = codes::evaluation_code(rr::conic_basis(), pts, 7);
            // the printed rows, read as plain quadratic forms at the listed representatives
            const std::vector<rr::QuadraticForm> numerators = {
                {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
            FFMatrix forms(7, 6, pts.size());
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < pts.size(); ++j) forms.set(i, j, rr::eval_form(numerators[i], pts[j]).value());
            const bool equal = printed == code.evaluation;
            const bool is_forms = printed == forms;
            std::ostringstream det;
            det << "entries " << (equal ? "equal" : "differ") << " (x^2/phi at [1,0,2] is "
                << rr::eval_projective(rr::conic_basis()[1], pts[3]).value() << ", printed " << kConicG[0][3] << ")";
            if (is_forms) det << "; printed rows are x^2, y^2, z^2, xy, yz, xz at the representatives, without phi";
            r.add(11, "conic-printed-g", "conic", equal ? Status::Pass : (is_forms ? Status::Erratum : Status::Fail), desc,
                  det.str());
        });
    }
    {
        const std::string desc = "printed G' is the reduced form of printed G";
        r.guarded(11, "conic-gprime", "conic", desc, [&] {
            const auto red = ff::row_reduce(matrix(7, kConicG));
            const bool ok = red.matrix == matrix(7, kConicGPrime);
            r.add(11, "conic-gprime", "conic", ok ? Status::Pass : Status::Fail, desc, rows_to_string(red.matrix));
        });
    }
    {
        const std::string desc = "minimum distance 3 for the printed code";
        r.guarded(11, "conic-distance", "conic", desc, [&] {
            const auto code = LinearCode::from_matrix(matrix(7, kConicG), "printed");
            const auto w = codes::weight_distribution(code);
            const std::size_t d = *w.min_weight();
            const std::size_t by_columns = codes::min_distance_by_columns(codes::dual_generator(code));
            const bool ok = d == 3 && by_columns == 3 && code.k == 6;
            r.add(11, "conic-distance", "conic", ok ? Status::Pass : Status::Fail, desc,
                  "d = " + std::to_string(d) + " by enumeration, " + std::to_string(by_columns) + " by dependent columns; " +
                      codes::render(w, Convention::Plain));
        });
    }
    {
        const std::string desc = "printed H against the check matrix of printed G'";
        r.guarded(11, "conic-h", "conic", desc, [&] {
            const FFMatrix h = ff::check_matrix(matrix(7, kConicGPrime));
            const FFMatrix printed = matrix(7, kConicH);
            const bool equal = h == printed;
            std::ostringstream det;
            det << "computed " << rows_to_string(h);
            std::vector<std::size_t> bad;
            for (std::size_t i = 0; i < h.rows(); ++i) {
                bool same = true;
                for (std::size_t j = 0; j < h.cols(); ++j) same = same && h.entry(i, j) == printed.entry(i, j);
                if (!same) bad.push_back(i + 1);
            }
            for (auto i : bad) det << "; printed row " << i << " differs";
            const bool orth = (printed * matrix(7, kConicGPrime).transpose()).is_zero();
            det << "; printed H G'^T = 0: " << (orth ? "yes" : "no");
            r.add(11, "conic-h", "conic", equal ? Status::Pass : Status::Erratum, desc, det.str());
        });
    }
    {
        const std::string desc = "row-space relations between recomputed and printed codes";
        r.guarded(11, "conic-containment", "conic", desc, [&] {
            const FFMatrix printed = matrix(7, kConicG);
            const auto ratios = codes::evaluation_code(rr::conic_basis(), pts, 7);
            // multiplying column i by phi(P_i) turns each ratio into its numerator form
            FFMatrix scaled = ratios.evaluation;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                const auto phi = rr::eval_form(rr::kConicPhi, pts[j]);
                for (std::size_t i = 0; i < scaled.rows(); ++i) scaled.set(i, j, (scaled.at(i, j) * phi).value());
            }
            const bool contained = ff::row_space_contains(printed, scaled);
            // replacing phi/phi by xz/phi restores six independent ratios
            auto basis = rr::conic_basis();
            basis[0] = rr::ProjectiveFormRatio{{0, 0, 0, 0, 0, 1}, rr::kConicPhi};
            const auto corrected = codes::evaluation_code(basis, pts, 7);
            const auto printed_code = LinearCode::from_matrix(printed, "printed");
            const bool same_weights =
                codes::weight_distribution(corrected) == codes::weight_distribution(printed_code);
            const bool equivalent = scaled_equivalent(corrected.generator, printed_code.generator);
            std::ostringstream det;
            det << "phi-scaled recomputed rows lie in the printed row space: " << (contained ? "yes" : "no")
                << "; with xz/phi in place of 1: rank " << corrected.k << ", column-scaled equal to the printed code: "
                << (equivalent ? "yes" : "no") << ", same weight distribution: " << (same_weights ? "yes" : "no");
            const bool ok = contained && corrected.k == 6 && equivalent && same_weights;
            r.add(11, "conic-containment", "conic", ok ? Status::Pass : Status::Fail, desc, det.str());
        });
    }
}

}  // namespace

std::vector<Row> reproduce_paper(const Options& opts) {
    if (!opts.only.empty()) {
        const auto& g = groups();
        bool known = std::find(g.begin(), g.end(), opts.only) != g.end();
        for (int c = 1; c <= 11 && !known; ++c) known = opts.only == std::to_string(c);
        if (!known) throw Error(ErrorCode::InvalidArgument, "unknown report filter '" + opts.only + "'");
    }
    Report r(opts);
    if (r.wanted("table2", 1)) table2(r);
    if (r.wanted("oracle", 2)) oracle(r);
    if (r.wanted("erratum", 3)) erratum(r);
    if (r.wanted("hyperelliptic", 4)) hyperelliptic(r);
    if (r.wanted("points", 5)) points(r);
    if (r.wanted("hecke", 6)) hecke(r);
    if (r.wanted("qseries", 7)) qseries(r);
    if (r.wanted("genus", 8)) genus(r);
    if (r.wanted("shokrollahi", 9)) shokrollahi(r);
    if (r.wanted("bounds", 10)) bounds_rows(r);
    if (r.wanted("conic", 11)) conic(r);
    return r.take();
}

}  // namespace modcodes::reproduce
