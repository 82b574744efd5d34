#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charclass/chow_expr.hpp"
#include "charclass/errors.hpp"
#include "charclass/report.hpp"
#include "charclass/verify.hpp"

namespace cc = charclass;

namespace {

std::string strip(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto p = text.find(sep, start);
        std::string piece =
            strip(text.substr(start, p == std::string::npos ? std::string::npos
                                                            : p - start));
        if (!piece.empty()) out.push_back(piece);
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}

int parse_int_strict(const std::string& text) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw cc::ParseError("invalid integer '" + text + "'", 0);
    }
}

// "3" -> {3}; "2..5" -> {2,3,4,5}
std::vector<int> parse_range(const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) throw cc::ParseError("empty range", 0);
    auto dots = t.find("..");
    if (dots == std::string::npos) return {parse_int_strict(t)};
    const int lo = parse_int_strict(strip(t.substr(0, dots)));
    const int hi = parse_int_strict(strip(t.substr(dots + 2)));
    if (lo > hi || hi - lo > 1000)
        throw cc::ParseError("invalid range '" + t + "'", 0);
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void emit(const cc::Json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << cc::render_text(j);
}

std::vector<std::optional<int>> parse_charts(const std::string& text,
                                             std::size_t npoints) {
    std::vector<std::optional<int>> charts(npoints, std::nullopt);
    if (strip(text).empty()) return charts;
    const auto pieces = split_list(text, ',');
    if (pieces.size() != npoints)
        throw cc::PreconditionError(
            "the chart list must have one entry per singular point");
    for (std::size_t i = 0; i < pieces.size(); ++i)
        charts[i] = parse_int_strict(pieces[i]);
    return charts;
}

void check_point_sizes(const std::vector<std::vector<cc::Rational>>& points,
                       int ncoords) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != ncoords)
            throw cc::PreconditionError(
                "point " + cc::point_to_string(p) + " needs " +
                std::to_string(ncoords) + " homogeneous coordinates");
}

void check_pairwise_distinct(const std::vector<std::vector<cc::Rational>>& points) {
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            bool proportional = true;
            const auto& p = points[a];
            const auto& q = points[b];
            for (std::size_t i = 0; i < p.size() && proportional; ++i)
                for (std::size_t j = i + 1; j < q.size() && proportional; ++j)
                    proportional = p[i] * q[j] == p[j] * q[i];
            if (proportional)
                throw cc::PreconditionError(
                    "singular points must be pairwise distinct: " +
                    cc::point_to_string(p) + " and " + cc::point_to_string(q));
        }
}

// Singularity records taken on trust (no defining polynomial): the Milnor
// numbers come from --mu (default 1 per point) and are marked certified with
// cutoff 0, meaning asserted rather than computed.
cc::SingularityData asserted_singularities(
    const std::vector<std::vector<cc::Rational>>& points,
    const std::string& mu_text, int ncoords) {
    check_point_sizes(points, ncoords);
    check_pairwise_distinct(points);
    std::vector<long long> mus(points.size(), 1);
    if (!strip(mu_text).empty()) {
        const auto pieces = split_list(mu_text, ',');
        if (pieces.size() != points.size())
            throw cc::PreconditionError(
                "the mu list must have one entry per singular point");
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            mus[i] = parse_int_strict(pieces[i]);
            if (mus[i] < 1)
                throw cc::PreconditionError("Milnor numbers must be positive");
        }
    }
    cc::SingularityData data;
    for (std::size_t i = 0; i < points.size(); ++i) {
        int chart = -1;
        for (std::size_t j = 0; j < points[i].size() && chart < 0; ++j)
            if (points[i][j] != 0) chart = static_cast<int>(j);
        data.push_back({points[i], chart, {mus[i], 0, true}});
    }
    return data;
}

struct Options {
    std::string ambient;
    std::string vars;
    std::string poly;
    std::string sing;
    std::string chart;
    std::string expr;
    std::string mu;
    std::string format = "text";
    std::string n, d, d1, d2;
    int max_cutoff = cc::kDefaultMaxCutoff;
    bool check_complete = false;
};

cc::Poly parse_homogeneous(const Options& opt, const cc::Ambient& amb) {
    const auto vars = split_list(opt.vars, ',');
    if (static_cast<int>(vars.size()) != amb.n + 1)
        throw cc::PreconditionError(
            "ambient " + amb.to_string() + " needs " + std::to_string(amb.n + 1) +
            " variables, got " + std::to_string(vars.size()));
    cc::Poly f = cc::Poly::parse(opt.poly, vars);
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
        throw cc::PreconditionError(
            "a nonzero homogeneous polynomial of positive degree is required");
    return f;
}

cc::HypersurfaceSpec spec_from_poly(const Options& opt, const cc::Ambient& amb,
                                    const cc::Poly& f) {
    const auto points = cc::parse_point_list(opt.sing);
    check_point_sizes(points, amb.n + 1);
    const auto charts = parse_charts(opt.chart, points.size());
    cc::SingularityData data =
        cc::build_singularity_data(f, points, charts, opt.max_cutoff);
    return cc::HypersurfaceSpec(
        amb, cc::ChowClass::hyperplane(amb) * cc::Rational(f.degree()),
        std::move(data));
}

cc::Json completeness_block(const cc::Poly& f, const cc::SingularityData& data,
                            int max_cutoff) {
    cc::Json out = cc::Json::array();
    for (int chart = 0; chart < f.num_vars(); ++chart) {
        cc::Json entry;
        entry["chart"] = chart;
        try {
            const long long total =
                cc::total_milnor_affine(f.dehomogenize(chart), max_cutoff);
            long long claimed = 0;
            for (const auto& rec : data)
                if (rec.point[chart] != 0) claimed += rec.milnor.mu;
            entry["status"] = "ok";
            entry["critical_total"] = total;
            entry["claimed"] = claimed;
            entry["match"] = total == claimed;
        } catch (const cc::NonIsolatedError&) {
            entry["status"] = "not finite";
        }
        out.push_back(std::move(entry));
    }
    return out;
}

int run_csm(const Options& opt) {
    const cc::Ambient amb = cc::parse_ambient(opt.ambient);
    if (amb.is_blowup())
        throw cc::PreconditionError(
            "polynomial hypersurfaces are supported in projective space; blowup "
            "geometries are exercised by the verify scenarios");
    const cc::Poly f = parse_homogeneous(opt, amb);
    const cc::HypersurfaceSpec spec = spec_from_poly(opt, amb, f);
    cc::Json j = cc::hypersurface_report(spec);
    if (opt.check_complete)
        j["completeness"] = completeness_block(f, spec.singularities, opt.max_cutoff);
    emit(j, opt.format);
    return 0;
}

int run_milnor(const Options& opt) {
    const auto vars = split_list(opt.vars, ',');
    if (vars.empty()) throw cc::PreconditionError("at least one variable is required");
    const cc::Poly f = cc::Poly::parse(opt.poly, vars);
    const std::vector<cc::Rational> origin(vars.size(), cc::Rational(0));
    if (f.evaluate(origin) != 0)
        throw cc::PreconditionError("the origin does not lie on the hypersurface");
    for (const cc::Poly& g : f.gradient())
        if (g.evaluate(origin) != 0)
            throw cc::PreconditionError(
                "the origin is not a singular point of the hypersurface");
    const cc::MilnorResult r = cc::milnor_at(f, opt.max_cutoff);
    if (!r.certified)
        throw cc::NonIsolatedError(
            "possibly non-isolated singularity at this point (no certificate up "
            "to cutoff " +
            std::to_string(r.cutoff) + ")");
    cc::Json j = cc::milnor_to_json(r);
    if (opt.check_complete) {
        try {
            j["jacobian_quotient_dim"] = cc::total_milnor_affine(f, opt.max_cutoff);
        } catch (const cc::NonIsolatedError&) {
            j["jacobian_quotient_dim"] = "not finite";
        }
    }
    emit(j, opt.format);
    return 0;
}

int run_chow(const Options& opt) {
    const cc::Ambient amb = cc::parse_ambient(opt.ambient);
    const cc::ChowClass c = cc::eval_chow_expr(opt.expr, amb);
    cc::Json j;
    j["ambient"] = amb.to_string();
    j["expression"] = opt.expr;
    j["class"] = cc::class_to_json(c);
    j["degree"] = cc::rat_str(cc::degree_int(c));
    emit(j, opt.format);
    return 0;
}

int run_chi_complement(const Options& opt) {
    const cc::Ambient amb = cc::parse_ambient(opt.ambient);
    if (amb.is_blowup())
        throw cc::PreconditionError(
            "polynomial hypersurfaces are supported in projective space");
    cc::HypersurfaceSpec spec(amb, cc::ChowClass::zero(amb));
    if (!strip(opt.poly).empty()) {
        const cc::Poly f = parse_homogeneous(opt, amb);
        spec = spec_from_poly(opt, amb, f);
    } else if (!strip(opt.sing).empty()) {
        throw cc::PreconditionError(
            "singular points need a defining polynomial here");
    }
    const cc::ChiComplementRoutes routes = cc::chi_complement_routes(spec);
    const bool consistent = routes.via_log_formula == routes.via_csm_additivity;
    cc::Json j;
    j["ambient"] = amb.to_string();
    j["divisor"] = cc::class_to_json(spec.divisor_class);
    j["singularities"] = cc::singularities_to_json(spec.singularities);
    j["routes"] = {
        {"log_formula", routes.via_log_formula.convert_to<long long>()},
        {"csm_additivity", routes.via_csm_additivity.convert_to<long long>()}};
    j["consistent"] = consistent;
    if (consistent)
        j["chi_complement"] = routes.via_log_formula.convert_to<long long>();
    emit(j, opt.format);
    if (!consistent) {
        std::cerr << "internal consistency failure: Euler characteristic routes "
                     "disagree\n";
        return 3;
    }
    return 0;
}

int run_verify(const std::string& scenario, const Options& opt) {
    std::vector<cc::VerificationReport> reports;

    auto range_of = [](const std::string& text, const char* flag) {
        if (strip(text).empty())
            throw cc::PreconditionError(std::string("this scenario needs ") + flag);
        return parse_range(text);
    };
    auto singleton = [](const std::vector<int>& r, const char* flag) {
        if (r.size() != 1)
            throw cc::PreconditionError(std::string(flag) +
                                        " must be a single value here");
        return r.front();
    };

    if (scenario == "thm12-blowup") {
        for (int n : range_of(opt.n, "--n"))
            reports.push_back(cc::verify_thm12_point_blowup(n));
    } else if (scenario == "thm12-identity" || scenario == "cor13") {
        const auto ns = range_of(opt.n, "--n");
        const auto ds = range_of(opt.d, "--d");
        const auto points = cc::parse_point_list(opt.sing);
        cc::SingularityData data;
        if (!points.empty()) {
            const int n = singleton(ns, "--n");
            singleton(ds, "--d");
            if (!strip(opt.poly).empty()) {
                const cc::Ambient amb = cc::parse_ambient("P(" + std::to_string(n) + ")");
                const cc::Poly f = parse_homogeneous(opt, amb);
                if (f.degree() != ds.front())
                    throw cc::PreconditionError(
                        "the polynomial degree does not match --d");
                check_point_sizes(points, n + 1);
                data = cc::build_singularity_data(
                    f, points, parse_charts(opt.chart, points.size()),
                    opt.max_cutoff);
            } else {
                data = asserted_singularities(points, opt.mu, n + 1);
            }
        }
        for (int n : ns)
            for (int d : ds)
                reports.push_back(scenario == "cor13"
                                      ? cc::verify_cor13(n, d, data)
                                      : cc::verify_thm12_identity_map(n, d, data));
    } else {
        const auto ns = range_of(opt.n, "--n");
        const auto d1s = range_of(opt.d1, "--d1");
        const auto d2s = range_of(opt.d2, "--d2");
        for (int n : ns)
            for (int a : d1s)
                for (int b : d2s) {
                    if (scenario == "aluffi-nc")
                        reports.push_back(cc::verify_aluffi_nc(n, a, b));
                    else if (scenario == "multilog")
                        reports.push_back(cc::verify_multilog(n, a, b));
                    else
                        reports.push_back(cc::verify_lemma52(n, a, b));
                }
    }

    bool all_equal = true;
    cc::Json j;
    j["scenarios"] = cc::Json::array();
    for (const auto& r : reports) {
        all_equal = all_equal && r.equal;
        j["scenarios"].push_back(cc::verification_to_json(r));
    }
    j["all_equal"] = all_equal;
    emit(j, opt.format);
    if (!all_equal) {
        std::cerr << "internal consistency failure: at least one identity does "
                     "not hold\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    int default_cutoff = cc::kDefaultMaxCutoff;
    if (const char* env = std::getenv("CHARCLASS_MAX_CUTOFF")) {
        try {
            default_cutoff = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "invalid CHARCLASS_MAX_CUTOFF value '" << env << "'\n";
            return 1;
        }
    }

    CLI::App app{"exact characteristic classes of singular projective hypersurfaces"};
    app.require_subcommand(1);
    Options opt;
    opt.max_cutoff = default_cutoff;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--max-cutoff", opt.max_cutoff,
                        "truncation cutoff for Milnor certificates");
    };

    CLI::App* csm = app.add_subcommand(
        "csm", "Fulton, mu and CSM classes of a hypersurface, with Euler numbers");
    csm->add_option("--ambient", opt.ambient, "ambient space, e.g. P3")->required();
    csm->add_option("--vars", opt.vars, "comma-separated variables")->required();
    csm->add_option("--poly", opt.poly, "homogeneous polynomial")->required();
    csm->add_option("--sing", opt.sing,
                    "semicolon-separated singular points, e.g. \"0:0:1\"");
    csm->add_option("--chart", opt.chart, "forced chart index per singular point");
    csm->add_flag("--check-complete", opt.check_complete,
                  "cross-check the singular list against per-chart critical counts");
    add_format(csm);

    CLI::App* milnor = app.add_subcommand(
        "milnor", "Milnor number of an isolated singularity at the affine origin");
    milnor->add_option("--vars", opt.vars, "comma-separated variables")->required();
    milnor->add_option("--poly", opt.poly, "affine polynomial")->required();
    milnor->add_flag("--check-complete", opt.check_complete,
                     "also report the global Jacobian quotient dimension");
    add_format(milnor);

    CLI::App* chow = app.add_subcommand(
        "chow", "evaluate an expression in the modeled intersection ring");
    chow->add_option("--ambient", opt.ambient, "ambient space")->required();
    chow->add_option("--expr", opt.expr, "expression over h, e1..em")->required();
    add_format(chow);

    CLI::App* verify = app.add_subcommand(
        "verify", "instantiate both sides of a class identity and compare exactly");
    std::string scenario;
    verify
        ->add_option("scenario", scenario,
                     "thm12-blowup | thm12-identity | aluffi-nc | multilog | "
                     "lemma52 | cor13")
        ->required()
        ->check(CLI::IsMember({"thm12-blowup", "thm12-identity", "aluffi-nc",
                               "multilog", "lemma52", "cor13"}));
    verify->add_option("--n", opt.n, "ambient dimension or range a..b");
    verify->add_option("--d", opt.d, "hypersurface degree or range");
    verify->add_option("--d1", opt.d1, "first degree or range");
    verify->add_option("--d2", opt.d2, "second degree or range");
    verify->add_option("--sing", opt.sing, "singular points (semicolon-separated)");
    verify->add_option("--mu", opt.mu,
                       "asserted Milnor numbers, one per point (default 1)");
    verify->add_option("--poly", opt.poly,
                       "defining polynomial, to certify Milnor numbers exactly");
    verify->add_option("--vars", opt.vars, "variables for --poly");
    verify->add_option("--chart", opt.chart, "forced chart index per singular point");
    add_format(verify);

    CLI::App* chi = app.add_subcommand(
        "chi-complement", "Euler characteristic of a hypersurface complement");
    chi->add_option("--ambient", opt.ambient, "ambient space")->required();
    chi->add_option("--vars", opt.vars, "comma-separated variables");
    chi->add_option("--poly", opt.poly, "homogeneous polynomial (empty: no divisor)");
    chi->add_option("--sing", opt.sing, "semicolon-separated singular points");
    chi->add_option("--chart", opt.chart, "forced chart index per singular point");
    add_format(chi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (csm->parsed()) return run_csm(opt);
        if (milnor->parsed()) return run_milnor(opt);
        if (chow->parsed()) return run_chow(opt);
        if (verify->parsed()) return run_verify(scenario, opt);
        if (chi->parsed()) return run_chi_complement(opt);
        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const cc::ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what()
                  << "\n";
        return 1;
    } catch (const cc::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const cc::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
