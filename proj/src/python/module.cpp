#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "charclass/chow_expr.hpp"
#include "charclass/errors.hpp"
#include "charclass/report.hpp"
#include "charclass/verify.hpp"

namespace py = pybind11;
namespace cc = charclass;

namespace {

py::object to_py(const cc::Json& j) {
    return py::module_::import("json").attr("loads")(py::str(j.dump()));
}

cc::Poly parse_poly(const std::string& poly, const std::vector<std::string>& vars) {
    return cc::Poly::parse(poly, vars);
}

cc::HypersurfaceSpec make_spec(const std::string& ambient,
                               const std::vector<std::string>& vars,
                               const std::string& poly, const std::string& sing,
                               int max_cutoff) {
    const cc::Ambient amb = cc::parse_ambient(ambient);
    if (amb.is_blowup())
        throw cc::PreconditionError(
            "polynomial hypersurfaces are supported in projective space");
    if (static_cast<int>(vars.size()) != amb.n + 1)
        throw cc::PreconditionError("ambient " + amb.to_string() + " needs " +
                                    std::to_string(amb.n + 1) + " variables");
    const cc::Poly f = cc::Poly::parse(poly, vars);
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
        throw cc::PreconditionError(
            "a nonzero homogeneous polynomial of positive degree is required");
    const auto points = cc::parse_point_list(sing);
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != amb.n + 1)
            throw cc::PreconditionError("point " + cc::point_to_string(p) +
                                        " needs " + std::to_string(amb.n + 1) +
                                        " homogeneous coordinates");
    std::vector<std::optional<int>> charts(points.size(), std::nullopt);
    cc::SingularityData data =
        cc::build_singularity_data(f, points, charts, max_cutoff);
    return cc::HypersurfaceSpec(
        amb, cc::ChowClass::hyperplane(amb) * cc::Rational(f.degree()),
        std::move(data));
}

cc::SingularityData asserted_data(
    const std::vector<std::pair<std::string, long long>>& sing, int ncoords) {
    cc::SingularityData data;
    for (const auto& [text, mu] : sing) {
        const auto p = cc::parse_point(text);
        if (static_cast<int>(p.size()) != ncoords)
            throw cc::PreconditionError("point " + cc::point_to_string(p) +
                                        " needs " + std::to_string(ncoords) +
                                        " homogeneous coordinates");
        if (mu < 1) throw cc::PreconditionError("Milnor numbers must be positive");
        int chart = -1;
        for (std::size_t j = 0; j < p.size() && chart < 0; ++j)
            if (p[j] != 0) chart = static_cast<int>(j);
        data.push_back({p, chart, {mu, 0, true}});
    }
    return data;
}

}  // namespace

PYBIND11_MODULE(_charclass, m) {
    m.doc() = "exact characteristic classes of singular projective hypersurfaces";

    py::register_exception<cc::ParseError>(m, "InputParseError", PyExc_ValueError);
    auto pre = py::register_exception<cc::PreconditionError>(m, "PreconditionError");
    py::register_exception<cc::NonIsolatedError>(m, "NonIsolatedError", pre.ptr());
    py::register_exception<cc::ConsistencyError>(m, "ConsistencyError");

    m.def(
        "canonical_poly",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return parse_poly(poly, vars).to_string();
        },
        py::arg("poly"), py::arg("vars"),
        "parse a polynomial and return its canonical rendering");

    m.def(
        "gradient",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            std::vector<std::string> out;
            for (const cc::Poly& g : parse_poly(poly, vars).gradient())
                out.push_back(g.to_string());
            return out;
        },
        py::arg("poly"), py::arg("vars"), "partial derivatives, one per variable");

    m.def(
        "milnor_number",
        [](const std::string& poly, const std::vector<std::string>& vars,
           int max_cutoff) {
            return to_py(cc::milnor_to_json(
                cc::milnor_at(parse_poly(poly, vars), max_cutoff)));
        },
        py::arg("poly"), py::arg("vars"), py::arg("max_cutoff") = cc::kDefaultMaxCutoff,
        "Milnor number at the affine origin, with certification status");

    m.def(
        "total_milnor",
        [](const std::string& poly, const std::vector<std::string>& vars,
           int max_cutoff) {
            return cc::total_milnor_affine(parse_poly(poly, vars), max_cutoff);
        },
        py::arg("poly"), py::arg("vars"), py::arg("max_cutoff") = cc::kDefaultMaxCutoff,
        "dimension of the global Jacobian quotient of an affine polynomial");

    m.def(
        "csm_report",
        [](const std::string& ambient, const std::vector<std::string>& vars,
           const std::string& poly, const std::string& sing, int max_cutoff) {
            return to_py(cc::hypersurface_report(
                make_spec(ambient, vars, poly, sing, max_cutoff)));
        },
        py::arg("ambient"), py::arg("vars"), py::arg("poly"), py::arg("sing") = "",
        py::arg("max_cutoff") = cc::kDefaultMaxCutoff,
        "Fulton, mu and CSM classes with Euler characteristics");

    m.def(
        "chi_complement",
        [](const std::string& ambient, const std::vector<std::string>& vars,
           const std::string& poly, const std::string& sing, int max_cutoff) {
            const cc::Ambient amb = cc::parse_ambient(ambient);
            cc::HypersurfaceSpec spec(amb, cc::ChowClass::zero(amb));
            if (!poly.empty()) spec = make_spec(ambient, vars, poly, sing, max_cutoff);
            return cc::chi_complement(spec).convert_to<long long>();
        },
        py::arg("ambient"), py::arg("vars") = std::vector<std::string>{},
        py::arg("poly") = "", py::arg("sing") = "",
        py::arg("max_cutoff") = cc::kDefaultMaxCutoff,
        "Euler characteristic of the hypersurface complement (both routes, "
        "asserted equal)");

    m.def(
        "chow_eval",
        [](const std::string& ambient, const std::string& expr) {
            const cc::Ambient amb = cc::parse_ambient(ambient);
            const cc::ChowClass c = cc::eval_chow_expr(expr, amb);
            cc::Json j;
            j["ambient"] = amb.to_string();
            j["expression"] = expr;
            j["class"] = cc::class_to_json(c);
            j["degree"] = cc::rat_str(cc::degree_int(c));
            return to_py(j);
        },
        py::arg("ambient"), py::arg("expr"),
        "evaluate an expression in the modeled intersection ring");

    m.def(
        "verify_thm12_point_blowup",
        [](int n) { return to_py(cc::verification_to_json(cc::verify_thm12_point_blowup(n))); },
        py::arg("n"));

    m.def(
        "verify_thm12_identity",
        [](int n, int d, const std::vector<std::pair<std::string, long long>>& sing) {
            return to_py(cc::verification_to_json(
                cc::verify_thm12_identity_map(n, d, asserted_data(sing, n + 1))));
        },
        py::arg("n"), py::arg("d"),
        py::arg("sing") = std::vector<std::pair<std::string, long long>>{});

    m.def(
        "verify_aluffi_nc",
        [](int n, int d1, int d2) {
            return to_py(cc::verification_to_json(cc::verify_aluffi_nc(n, d1, d2)));
        },
        py::arg("n"), py::arg("d1"), py::arg("d2"));

    m.def(
        "verify_multilog",
        [](int n, int d1, int d2) {
            return to_py(cc::verification_to_json(cc::verify_multilog(n, d1, d2)));
        },
        py::arg("n"), py::arg("d1"), py::arg("d2"));

    m.def(
        "verify_lemma52",
        [](int n, int d1, int d2) {
            return to_py(cc::verification_to_json(cc::verify_lemma52(n, d1, d2)));
        },
        py::arg("n"), py::arg("d1"), py::arg("d2"));

    m.def(
        "verify_cor13",
        [](int n, int d, const std::vector<std::pair<std::string, long long>>& sing) {
            return to_py(cc::verification_to_json(
                cc::verify_cor13(n, d, asserted_data(sing, n + 1))));
        },
        py::arg("n"), py::arg("d"),
        py::arg("sing") = std::vector<std::pair<std::string, long long>>{});
}
