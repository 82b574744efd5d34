#include "charclass/classes.hpp"

#include "charclass/errors.hpp"

namespace charclass {

namespace {

void require_divisor(const ChowClass& d) {
    LineBundleClass check(d);  // pure codimension 1
    if (!d.is_integral())
        throw PreconditionError("the divisor class must have integer coefficients");
}

Rational parity_sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

void require_projective(const Ambient& a, const char* what) {
    if (a.is_blowup())
        throw PreconditionError(std::string(what) +
                                " is modeled in projective space only");
}

int checked_degree(int d) {
    if (d < 1) throw PreconditionError("degrees must be positive");
    return d;
}

}  // namespace

HypersurfaceSpec degree_hypersurface(int n, int d, SingularityData s) {
    if (d < 0) throw PreconditionError("the degree must be nonnegative");
    const Ambient amb = Ambient::projective(n);
    return HypersurfaceSpec(amb, ChowClass::hyperplane(amb) * Rational(d),
                            std::move(s));
}

ChowClass fulton_divisor(const HypersurfaceSpec& spec) {
    if (spec.divisor_class.is_zero())
        throw PreconditionError("the Fulton class needs a nonzero divisor");
    require_divisor(spec.divisor_class);
    const ChowClass one = ChowClass::one(spec.ambient);
    return chern_tangent(spec.ambient) * spec.divisor_class *
           inv_unit(one + spec.divisor_class);
}

ChowClass mu_class_isolated(const SingularityData& sing, const Ambient& ambient) {
    Rational total(0);
    for (const auto& rec : sing) {
        if (!rec.milnor.certified)
            throw PreconditionError("uncertified Milnor number at " +
                                    point_to_string(rec.point));
        total += rec.milnor.mu;
    }
    return ChowClass::point_class(ambient) * total;
}

ChowClass csm_hypersurface(const HypersurfaceSpec& spec) {
    if (spec.divisor_class.is_zero()) {
        if (!spec.singularities.empty())
            throw PreconditionError("an empty hypersurface cannot carry singular points");
        return ChowClass::zero(spec.ambient);
    }
    require_divisor(spec.divisor_class);
    const int n = spec.ambient.n;
    const ChowClass fulton = fulton_divisor(spec);
    const LineBundleClass L(spec.divisor_class);
    const ChowClass mu = mu_class_isolated(spec.singularities, spec.ambient);
    const ChowClass one = ChowClass::one(spec.ambient);
    const ChowClass correction =
        (one + L.c1()).pow(n - 1) * class_tensor(class_dual(mu), L);
    // For point-supported mu the twist collapses to a pure sign.
    if (!(correction == mu * parity_sign(n)))
        throw ConsistencyError("mu-class correction routes disagree");
    ChowClass csm = fulton + correction;
    assert_integral(csm, "CSM class");
    return csm;
}

ChowClass csm_smooth_ci(const Ambient& ambient, const std::vector<int>& degrees) {
    require_projective(ambient, "a complete intersection");
    if (degrees.empty() || degrees.size() > 2)
        throw PreconditionError("one or two degrees are supported");
    const ChowClass one = ChowClass::one(ambient);
    const ChowClass h = ChowClass::hyperplane(ambient);
    ChowClass acc = chern_tangent(ambient);
    for (int d : degrees) {
        const ChowClass dh = h * Rational(checked_degree(d));
        acc = acc * dh * inv_unit(one + dh);
    }
    return acc;
}

ChowClass csm_nc_union(const Ambient& ambient, const std::vector<int>& degrees) {
    if (degrees.size() != 2)
        throw PreconditionError("a union of exactly two hypersurfaces is supported");
    return csm_smooth_ci(ambient, {degrees[0]}) + csm_smooth_ci(ambient, {degrees[1]}) -
           csm_smooth_ci(ambient, degrees);
}

ChowClass log_chern_dual(const HypersurfaceSpec& spec) {
    require_divisor(spec.divisor_class);
    const ChowClass one = ChowClass::one(spec.ambient);
    return chern_tangent(spec.ambient) * inv_unit(one + spec.divisor_class);
}

ChowClass nc_log_chern_dual(const Ambient& ambient, const std::vector<int>& degrees) {
    require_projective(ambient, "a normal-crossing union");
    const ChowClass one = ChowClass::one(ambient);
    const ChowClass h = ChowClass::hyperplane(ambient);
    ChowClass acc = class_dual(chern_tangent(ambient));  // cotangent Chern class
    for (int d : degrees)
        acc = acc * inv_unit(one - h * Rational(checked_degree(d)));
    return chern_dual(acc);
}

ChowClass multilog_whitney_route(const Ambient& ambient, int d1, int d2) {
    require_projective(ambient, "a multi-logarithmic sheaf");
    const ChowClass one = ChowClass::one(ambient);
    const ChowClass h = ChowClass::hyperplane(ambient);
    const ChowClass omega = class_dual(chern_tangent(ambient));
    const ChowClass a1 = omega * inv_unit(one - h * Rational(checked_degree(d1)));
    const ChowClass a2 = omega * inv_unit(one - h * Rational(checked_degree(d2)));
    return chern_dual(a1 * a2 * inv_unit(omega));
}

ChowClass multilog_chern_dual(const Ambient& ambient, int d1, int d2) {
    const ChowClass residue = nc_log_chern_dual(ambient, {d1, d2});
    const ChowClass whitney = multilog_whitney_route(ambient, d1, d2);
    if (!(residue == whitney))
        throw ConsistencyError("multi-logarithmic Chern class routes disagree");
    return residue;
}

Int euler(const ChowClass& c) {
    const Rational d = degree_int(c.component(c.dim()));
    if (!is_integer(d))
        throw ConsistencyError("the class has a non-integer point degree: " +
                               rat_str(d));
    return numerator(d);
}

ChiComplementRoutes chi_complement_routes(const HypersurfaceSpec& spec) {
    const int n = spec.ambient.n;
    Int mu_total = 0;
    for (const auto& rec : spec.singularities) {
        if (!rec.milnor.certified)
            throw PreconditionError("uncertified Milnor number at " +
                                    point_to_string(rec.point));
        mu_total += rec.milnor.mu;
    }
    const Int signed_mu = (n + 1) % 2 == 0 ? mu_total : Int(-mu_total);
    ChiComplementRoutes r;
    r.via_log_formula = euler(log_chern_dual(spec)) + signed_mu;
    r.via_csm_additivity =
        euler(chern_tangent(spec.ambient)) - euler(csm_hypersurface(spec));
    return r;
}

Int chi_complement(const HypersurfaceSpec& spec) {
    const ChiComplementRoutes r = chi_complement_routes(spec);
    if (r.via_log_formula != r.via_csm_additivity)
        throw ConsistencyError("Euler characteristic routes disagree: " +
                               r.via_log_formula.str() + " vs " +
                               r.via_csm_additivity.str());
    return r.via_log_formula;
}

}  // namespace charclass
