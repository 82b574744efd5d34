#include "charclass/verify.hpp"

#include "charclass/errors.hpp"

namespace charclass {

namespace {

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string s = "(";
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) s += ", ";
        s += std::string(k) + "=" + std::to_string(v);
        first = false;
    }
    return s + ")";
}

}  // namespace

VerificationReport make_report(std::string scenario, const ChowClass& lhs,
                               const ChowClass& rhs) {
    ChowClass diff = lhs - rhs;
    const bool equal = diff.is_zero();
    return VerificationReport{std::move(scenario), lhs, rhs, std::move(diff), equal};
}

VerificationReport verify_thm12_point_blowup(int n) {
    if (n < 2)
        throw PreconditionError("the point-blowup scenario needs dimension at least 2");
    const Ambient pn = Ambient::projective(n);
    const Ambient bl = Ambient::blowup(n, 1);
    const ChowClass lhs = ChowClass::point_class(pn);
    const HypersurfaceSpec exceptional(bl, ChowClass::exceptional(bl, 0));
    const ChowClass rhs =
        chern_tangent(pn) - pushforward(log_chern_dual(exceptional));
    return make_report("thm12-blowup" + params({{"n", n}}), lhs, rhs);
}

VerificationReport verify_thm12_identity_map(int n, int d,
                                             const SingularityData& sing) {
    if (n < 3)
        throw PreconditionError(
            "the identity-map scenario needs ambient dimension at least 3");
    const HypersurfaceSpec spec = degree_hypersurface(n, d, sing);
    const ChowClass lhs = csm_hypersurface(spec);

    const LineBundleClass L(spec.divisor_class);
    const ChowClass mu = mu_class_isolated(sing, spec.ambient);
    const ChowClass one = ChowClass::one(spec.ambient);
    const ChowClass correction =
        (one + L.c1()).pow(n - 1) * class_tensor(class_dual(mu), L);
    const ChowClass rhs =
        chern_tangent(spec.ambient) - log_chern_dual(spec) + correction;
    return make_report("thm12-identity" + params({{"n", n}, {"d", d}}), lhs, rhs);
}

VerificationReport verify_aluffi_nc(int n, int d1, int d2) {
    const Ambient pn = Ambient::projective(n);
    const ChowClass lhs = csm_nc_union(pn, {d1, d2});
    const ChowClass rhs = chern_tangent(pn) - nc_log_chern_dual(pn, {d1, d2});
    return make_report("aluffi-nc" + params({{"n", n}, {"d1", d1}, {"d2", d2}}), lhs,
                       rhs);
}

VerificationReport verify_multilog(int n, int d1, int d2) {
    const Ambient pn = Ambient::projective(n);
    const ChowClass ci = csm_smooth_ci(pn, {d1, d2});
    const ChowClass lhs = ci;
    const ChowClass rhs = chern_tangent(pn) - multilog_chern_dual(pn, d1, d2) + ci -
                          csm_nc_union(pn, {d1, d2});
    return make_report("multilog" + params({{"n", n}, {"d1", d1}, {"d2", d2}}), lhs,
                       rhs);
}

VerificationReport verify_lemma52(int n, int d1, int d2) {
    const Ambient pn = Ambient::projective(n);
    const ChowClass lhs = multilog_whitney_route(pn, d1, d2);
    const ChowClass rhs = nc_log_chern_dual(pn, {d1, d2});
    return make_report("lemma52" + params({{"n", n}, {"d1", d1}, {"d2", d2}}), lhs,
                       rhs);
}

VerificationReport verify_cor13(int n, int d, const SingularityData& sing) {
    const HypersurfaceSpec spec = degree_hypersurface(n, d, sing);
    const ChiComplementRoutes routes = chi_complement_routes(spec);
    const Ambient pn = spec.ambient;
    const ChowClass lhs = ChowClass::point_class(pn) * Rational(routes.via_log_formula);
    const ChowClass rhs =
        ChowClass::point_class(pn) * Rational(routes.via_csm_additivity);
    return make_report("cor13" + params({{"n", n}, {"d", d}}), lhs, rhs);
}

}  // namespace charclass
