#include "modcodes/cli.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modcodes/bounds.hpp"
#include "modcodes/codes.hpp"
#include "modcodes/curves.hpp"
#include "modcodes/error.hpp"
#include "modcodes/qseries.hpp"
#include "modcodes/reproduce.hpp"
#include "modcodes/riemann_roch.hpp"

namespace modcodes::cli {

using nlohmann::json;

namespace {

constexpr int kSchema = 1;

json big(const mpz_class& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

// Curve selection shared by points / code / weights.
struct CurveArgs {
    std::optional<int> level;
    std::string f;
    std::string h;
    std::int64_t p = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--level,--N", level, "level of a stored genus-one model");
        cmd->add_option("--f", f, "right-hand side f(x) of y^2 + h(x) y = f(x)");
        cmd->add_option("--h", h, "h(x) of y^2 + h(x) y = f(x) (default 0)");
        cmd->add_option("--p", p, "prime field size")->required();
    }

    curves::CurveModel model() const {
        if (level && !f.empty()) throw CLI::ValidationError("--level and --f are mutually exclusive");
        if (level) return curves::x0_model(*level).model;
        if (f.empty()) throw CLI::ValidationError("one of --level or --f is required");
        return curves::CurveModel{h.empty() ? IntPoly() : IntPoly::parse(h), IntPoly::parse(f)};
    }
};

json point_json(const curves::CurvePoint& pt) {
    if (pt.is_infinity()) return json(pt.to_string());
    return json::array({pt.x().value(), pt.y().value()});
}

json matrix_json(const ff::FFMatrix& m) { return json(m.to_rows()); }

void print_matrix(std::ostream& out, const std::string& title, const ff::FFMatrix& m) {
    out << title << " (" << m.rows() << " x " << m.cols() << ")\n" << m;
}

codes::LinearCode build_code(const CurveArgs& c, unsigned a) {
    const auto model = c.model();
    auto pts = curves::enumerate_points(model, c.p);
    if (model.genus() == 1 && model.as_weierstrass()) {
        pts.pop_back();
        return codes::evaluation_code(rr::one_point_basis(rr::CurveKind::elliptic(), a), pts, c.p);
    }
    if (model.branch_polynomial().degree() % 2 == 0) {
        throw Error(ErrorCode::InvalidArgument, "one-point codes need a single point at infinity");
    }
    pts.pop_back();
    const auto deg = static_cast<unsigned>(model.branch_polynomial().degree());
    return codes::evaluation_code(rr::one_point_basis(rr::CurveKind::hyperelliptic(deg), a), pts, c.p);
}

std::string series_text(const qs::LaurentSeries& s) { return s.to_string(); }

json series_json(const qs::LaurentSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(big(c));
    return json{{"schema", kSchema}, {"lowest_exponent", s.lowest_exponent()}, {"order", s.order()},
                {"coefficients", coeffs}};
}

qs::EtaQuotientSpec parse_eta(const std::string& text) {
    qs::EtaQuotientSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--eta expects d:e pairs, e.g. 1:2,11:2");
        try {
            spec.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--eta expects integer d:e pairs");
        }
    }
    if (spec.empty()) throw CLI::ValidationError("--eta is empty");
    return spec;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modular curves, elliptic and hyperelliptic Goppa codes, and their weight enumerators", "modcodes"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

    // points
    CurveArgs points_args;
    auto* points = app.add_subcommand("points", "GF(p)-points of a stored or given model");
    points_args.attach(points);
    points->add_flag("--json", as_json, "machine-readable output");

    // model
    int model_level = 0;
    auto* model = app.add_subcommand("model", "stored genus-one model of X_0(N)");
    model->add_option("--level,--N", model_level, "level N")->required();
    model->add_flag("--json", as_json, "machine-readable output");

    // genus
    std::uint64_t genus_level = 0;
    auto* genus = app.add_subcommand("genus", "genus of X_0(N)");
    genus->add_option("--level,--N", genus_level, "level N")->required()->check(CLI::PositiveNumber);
    genus->add_flag("--json", as_json, "machine-readable output");

    // code
    CurveArgs code_args;
    unsigned code_a = 2;
    auto* code = app.add_subcommand("code", "one-point evaluation code L(a P_inf)");
    code_args.attach(code);
    code->add_option("--a", code_a, "pole order bound")->required();
    code->add_flag("--json", as_json, "machine-readable output");

    // weights
    CurveArgs weights_args;
    unsigned weights_a = 2;
    std::string convention = "table2";
    std::string strategy = "auto";
    unsigned jobs = 1;
    auto* weights = app.add_subcommand("weights", "weight distribution of a one-point code");
    weights_args.attach(weights);
    weights->add_option("--a", weights_a, "pole order bound")->required();
    weights->add_option("--convention", convention, "table2: sum A_w x^(n-w); plain: sum A_w x^w")
        ->check(CLI::IsMember({"table2", "plain"}));
    weights->add_option("--strategy", strategy, "enumeration route (default auto)")->check(CLI::IsMember({"auto", "direct", "dual", "rank"}));
    weights->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));
    weights->add_flag("--json", as_json, "machine-readable output");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "GV and TVZ curves");
    bounds_cmd->require_subcommand(1);
    std::uint64_t q = 49;
    std::size_t grid = 1000;
    std::optional<std::int64_t> prop_g;
    std::optional<std::uint64_t> prop_n;
    auto* curve = bounds_cmd->add_subcommand("curve", "CSV delta,gv,tvz,prop7 on a uniform grid");
    curve->add_option("--q", q, "field size")->required();
    curve->add_option("--grid", grid, "number of grid intervals")->check(CLI::Range(std::size_t{1}, std::size_t{10'000'000}));
    curve->add_option("--g", prop_g, "genus for the prop7 column");
    curve->add_option("--n", prop_n, "length for the prop7 column")->check(CLI::PositiveNumber);
    auto* exceeds = bounds_cmd->add_subcommand("exceeds", "interval where the TVZ line beats GV");
    exceeds->add_option("--q", q, "field size, a perfect square")->required();
    exceeds->add_option("--grid", grid, "scan resolution")->check(CLI::Range(std::size_t{100}, std::size_t{10'000'000}));
    exceeds->add_flag("--json", as_json, "machine-readable output");

    // qseries
    std::string kind;
    int order = 60;
    std::string eta_spec;
    auto* qseries = app.add_subcommand("qseries", "q-expansions: j, delta, e4, e6, eta");
    qseries->add_option("kind", kind)->required()->check(CLI::IsMember({"j", "delta", "e4", "e6", "eta"}));
    qseries->add_option("--order", order, "truncation order")->check(CLI::Range(0, 100000));
    qseries->add_option("--eta", eta_spec, "eta quotient as d:e pairs, e.g. 1:2,11:2");
    qseries->add_flag("--json", as_json, "machine-readable output");

    // hecke
    int hecke_level = 11;
    std::int64_t hecke_p = 0;
    auto* hecke = app.add_subcommand("hecke", "trace of T_p from point counts (and the eta product at level 11)");
    hecke->add_option("--level,--N", hecke_level, "level N")->required();
    hecke->add_option("--p", hecke_p, "prime")->required();
    hecke->add_flag("--json", as_json, "machine-readable output");

    // conic-example
    auto* conic = app.add_subcommand("conic-example", "conic-ratio code on the level-19 cubic over GF(7)");
    conic->add_flag("--json", as_json, "machine-readable output");

    // reproduce
    reproduce::Options rep;
    auto* repro = app.add_subcommand("reproduce", "recompute every printed value and report PASS/FAIL/ERRATUM");
    repro->add_option("--only", rep.only, "group name or criterion number");
    repro->add_option("--jobs", rep.jobs, "worker threads")->check(CLI::Range(1U, 256U));
    repro->add_flag("--json", as_json, "machine-readable output");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (points->parsed()) {
            const auto m = points_args.model();
            const auto pts = curves::enumerate_points(m, points_args.p);
            if (as_json) {
                json arr = json::array();
                for (const auto& pt : pts) arr.push_back(point_json(pt));
                out << json{{"schema", kSchema}, {"model", m.to_string()}, {"p", points_args.p},
                            {"count", pts.size()}, {"points", arr}}.dump(2)
                    << "\n";
            } else {
                out << m.to_string() << " over GF(" << points_args.p << "): " << pts.size() << " points\n{";
                for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? ", " : "") << pts[i].to_string();
                out << "}\n";
            }
        } else if (model->parsed()) {
            const auto e = curves::x0_model(model_level);
            const auto computed = curves::discriminant(e.model);
            if (as_json) {
                out << json{{"schema", kSchema}, {"level", e.level}, {"model", e.model.to_string()},
                            {"h", e.model.h.to_string()}, {"f", e.model.f.to_string()},
                            {"discriminant", big(e.discriminant)}, {"recomputed", big(computed)},
                            {"note", e.source}}.dump(2)
                    << "\n";
            } else {
                out << "X_0(" << e.level << "): " << e.model.to_string() << "\n";
                out << "discriminant " << e.discriminant << " (recomputed " << computed << ")\n";
                out << "note: " << e.source << "\n";
            }
        } else if (genus->parsed()) {
            const auto g = bounds::genus_x0(genus_level);
            if (as_json) {
                out << json{{"schema", kSchema}, {"level", g.level}, {"mu", g.mu},         {"mu2", g.mu2},
                            {"mu3", g.mu3},      {"mu_inf", g.mu_inf}, {"genus", g.genus}}.dump(2)
                    << "\n";
            } else {
                out << "g(X_0(" << g.level << ")) = " << g.genus << "  [mu=" << g.mu << " mu2=" << g.mu2
                    << " mu3=" << g.mu3 << " mu_inf=" << g.mu_inf << "]\n";
            }
        } else if (code->parsed()) {
            const auto c = build_code(code_args, code_a);
            const auto sf = codes::systematic(c);
            const auto h = codes::dual_generator(c);
            if (as_json) {
                out << json{{"schema", kSchema},          {"n", c.n},
                            {"k", c.k},                   {"p", c.p},
                            {"provenance", c.provenance}, {"warnings", c.warnings},
                            {"generator", matrix_json(c.generator)},
                            {"systematic", matrix_json(sf.matrix)},
                            {"column_permutation", sf.column_permutation},
                            {"check", matrix_json(h)}}.dump(2)
                    << "\n";
            } else {
                out << "[" << c.n << ", " << c.k << "] code over GF(" << c.p << "): " << c.provenance << "\n";
                for (const auto& w : c.warnings) out << "warning: " << w << "\n";
                print_matrix(out, "generator", c.generator);
                print_matrix(out, "systematic", sf.matrix);
                if (!sf.identity_permutation()) {
                    out << "column permutation:";
                    for (auto j : sf.column_permutation) out << " " << j;
                    out << "\n";
                }
                print_matrix(out, "check matrix", h);
            }
        } else if (weights->parsed()) {
            const auto c = build_code(weights_args, weights_a);
            codes::EnumerationOptions o;
            o.strategy = codes::parse_strategy(strategy);
            o.jobs = jobs;
            const auto w = codes::weight_distribution(c, o);
            if (as_json) {
                json counts = json::array();
                for (const auto& a : w.counts) counts.push_back(big(a));
                out << json{{"schema", kSchema}, {"n", c.n}, {"k", c.k}, {"p", c.p}, {"counts", counts},
                            {"polynomial", codes::render(w, codes::parse_convention(convention))}}.dump(2)
                    << "\n";
            } else {
                out << codes::render(w, codes::parse_convention(convention)) << "\n";
            }
        } else if (curve->parsed()) {
            if (prop_g.has_value() != prop_n.has_value()) throw CLI::ValidationError("--g and --n go together");
            const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
            const bool square = root * root == q;
            out << "delta,gv,tvz,prop7\n" << std::setprecision(12);
            for (std::size_t i = 0; i <= grid; ++i) {
                const double delta = static_cast<double>(i) / static_cast<double>(grid);
                out << delta << "," << bounds::gv_bound(q, delta) << ",";
                if (square) out << bounds::tvz_line(q, delta);
                out << ",";
                if (prop_g) out << bounds::prop7_bound(*prop_g, *prop_n);
                out << "\n";
            }
        } else if (exceeds->parsed()) {
            const auto iv = bounds::tvz_exceeds_gv(q, grid);
            if (as_json) {
                json j{{"schema", kSchema}, {"q", q}, {"grid", grid}};
                j["interval"] = iv ? json::array({iv->lo, iv->hi}) : json(nullptr);
                out << j.dump(2) << "\n";
            } else if (iv) {
                out << std::setprecision(10) << "TVZ above GV for delta in (" << iv->lo << ", " << iv->hi << ")\n";
            } else {
                out << "TVZ nowhere above GV\n";
            }
        } else if (qseries->parsed()) {
            qs::LaurentSeries s = qs::LaurentSeries::constant(0, 0);
            if (kind == "j") s = qs::j_series(order);
            else if (kind == "delta") s = qs::delta_series(order);
            else if (kind == "e4") s = qs::eisenstein_normalized(4, order);
            else if (kind == "e6") s = qs::eisenstein_normalized(6, order);
            else s = qs::eta_quotient(parse_eta(eta_spec.empty() ? "1:2,11:2" : eta_spec), order);
            if (as_json) out << series_json(s).dump(2) << "\n";
            else out << series_text(s) << "\n";
        } else if (hecke->parsed()) {
            const auto by_count = curves::hecke_trace_by_count(hecke_level, hecke_p);
            std::optional<mpz_class> by_eta;
            if (hecke_level == 11) by_eta = qs::hecke_coeff_level11(static_cast<int>(hecke_p), static_cast<int>(hecke_p) + 2);
            if (as_json) {
                json j{{"schema", kSchema}, {"level", hecke_level}, {"p", hecke_p}, {"count", by_count}};
                j["eta"] = by_eta ? big(*by_eta) : json(nullptr);
                out << j.dump(2) << "\n";
            } else {
                out << "Tr(T_" << hecke_p << ") = " << by_count << " (count)";
                if (by_eta) out << " = " << *by_eta << " (eta)";
                out << "\n";
            }
            if (by_eta && *by_eta != static_cast<long>(by_count)) return 1;
        } else if (conic->parsed()) {
            const auto w = *curves::x0_model(19).weierstrass;
            const auto triples = curves::projective_points(w, 7);
            std::vector<std::array<ff::FieldElement, 3>> pts;
            for (const auto& t : triples) {
                pts.push_back({ff::FieldElement::unchecked(t[0], 7), ff::FieldElement::unchecked(t[1], 7),
                               ff::FieldElement::unchecked(t[2], 7)});
            }
            const auto c = codes::evaluation_code(rr::conic_basis(), pts, 7);
            const auto sf = codes::systematic(c);
            const auto h = codes::dual_generator(c);
            const auto dist = codes::weight_distribution(c);
            if (as_json) {
                json counts = json::array();
                for (const auto& a : dist.counts) counts.push_back(big(a));
                out << json{{"schema", kSchema},    {"points", triples},
                            {"evaluation", matrix_json(c.evaluation)},
                            {"rank", c.k},          {"systematic", matrix_json(sf.matrix)},
                            {"check", matrix_json(h)}, {"min_distance", *dist.min_weight()},
                            {"counts", counts},     {"warnings", c.warnings}}.dump(2)
                    << "\n";
            } else {
                out << "points:";
                for (const auto& t : triples) out << " [" << t[0] << "," << t[1] << "," << t[2] << "]";
                out << "\nbasis:";
                for (const auto& b : rr::conic_basis()) out << " " << rr::to_string(b);
                out << "\n";
                print_matrix(out, "evaluation matrix", c.evaluation);
                out << "rank " << c.k << "\n";
                for (const auto& wrn : c.warnings) out << "warning: " << wrn << "\n";
                print_matrix(out, "systematic", sf.matrix);
                print_matrix(out, "check matrix", h);
                out << "minimum distance " << *dist.min_weight() << "; " << codes::render(dist, codes::Convention::Plain)
                    << "\n";
            }
        } else if (repro->parsed()) {
            const auto rows = reproduce::reproduce_paper(rep);
            bool failed = false;
            for (const auto& r : rows) failed = failed || r.status == reproduce::Status::Fail;
            if (as_json) {
                json arr = json::array();
                for (const auto& r : rows) {
                    arr.push_back({{"criterion", r.criterion}, {"id", r.id},       {"group", r.group},
                                   {"status", reproduce::to_string(r.status)},   {"description", r.description},
                                   {"detail", r.detail}});
                }
                out << json{{"schema", kSchema}, {"rows", arr}, {"failed", failed}}.dump(2) << "\n";
            } else {
                for (const auto& r : rows) {
                    out << std::left << std::setw(8) << reproduce::to_string(r.status) << std::setw(4) << r.criterion
                        << std::setw(22) << r.id << r.description << "\n        " << r.detail << "\n";
                }
            }
            return failed ? 1 : 0;
        }
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace modcodes::cli
