#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charclass/chow_expr.hpp"
#include "charclass/classes.hpp"
#include "charclass/errors.hpp"
#include "test_support.hpp"

using namespace charclass;

namespace {
const Ambient P2 = Ambient::projective(2);
const Ambient P3 = Ambient::projective(3);
const Ambient Bl2 = Ambient::blowup(2, 1);

ChowClass E(const std::string& expr, const Ambient& amb) {
    return eval_chow_expr(expr, amb);
}

SingularPointRecord node_at(const std::string& point, long long mu) {
    const auto p = parse_point(point);
    int chart = 0;
    while (p[chart] == 0) ++chart;
    return {p, chart, {mu, 2, true}};
}

// Independent closed form for the Euler characteristic of a smooth degree-d
// hypersurface in P^n: chi = d * sum_k C(n+1,k) (-d)^{n-1-k}, k = 0..n-1.
Int smooth_chi(int n, int d) {
    Int acc = 0;
    Int pw = 1;  // (-d)^{n-1-k} built from the top down
    for (int k = n - 1; k >= 0; --k) {
        acc += binomial(n + 1, k) * pw;
        pw *= -d;
    }
    return d * acc;
}
}  // namespace

TEST_CASE("Fulton class of divisors") {
    CHECK(fulton_divisor(degree_hypersurface(2, 3)) == E("3*h + 0*h^2", P2));
    CHECK(fulton_divisor(degree_hypersurface(3, 4)) == E("4*h + 24*h^3", P3));

    const HypersurfaceSpec exceptional(Bl2, E("e", Bl2));
    const ChowClass f = fulton_divisor(exceptional);
    CHECK(f == E("e - 2*e^2", Bl2));
    CHECK(degree_int(f) == Rational(2));  // chi of a line

    CHECK_THROWS_AS(fulton_divisor(HypersurfaceSpec(P2, ChowClass::zero(P2))),
                    PreconditionError);
}

TEST_CASE("mu class of isolated singular points") {
    CHECK(mu_class_isolated({node_at("0:0:0:1", 1)}, P3) == E("h^3", P3));
    CHECK(mu_class_isolated({}, P3).is_zero());
    CHECK(mu_class_isolated({node_at("0:0:1", 1), node_at("1:0:0", 2)}, P2) ==
          E("3*h^2", P2));

    SingularityData uncertified{node_at("0:0:1", 1)};
    uncertified[0].milnor.certified = false;
    CHECK_THROWS_AS(mu_class_isolated(uncertified, P2), PreconditionError);
}

TEST_CASE("CSM classes of singular plane cubics and the nodal quartic") {
    const HypersurfaceSpec nodal(P2, E("3*h", P2), {node_at("0:0:1", 1)});
    CHECK(csm_hypersurface(nodal) == E("3*h + h^2", P2));
    CHECK(euler(csm_hypersurface(nodal)) == 1);

    const HypersurfaceSpec cuspidal(P2, E("3*h", P2), {node_at("0:0:1", 2)});
    CHECK(csm_hypersurface(cuspidal) == E("3*h + 2*h^2", P2));
    CHECK(euler(csm_hypersurface(cuspidal)) == 2);

    const HypersurfaceSpec quartic(P3, E("4*h", P3), {node_at("0:0:0:1", 1)});
    CHECK(csm_hypersurface(quartic) == E("4*h + 23*h^3", P3));
    CHECK(euler(csm_hypersurface(quartic)) == 23);
}

TEST_CASE("smooth hypersurfaces have CSM equal to the Fulton class") {
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d) {
            const HypersurfaceSpec spec = degree_hypersurface(n, d);
            CHECK(csm_hypersurface(spec) == fulton_divisor(spec));
        }
}

TEST_CASE("CSM of smooth complete intersections") {
    CHECK(csm_smooth_ci(P2, {1, 1}) == E("h^2", P2));
    CHECK(csm_smooth_ci(P3, {2, 3}) == E("6*h^2 - 6*h^3", P3));
    CHECK(euler(csm_smooth_ci(P3, {2, 3})) == -6);
    CHECK(csm_smooth_ci(P3, {2}) == E("2*h + 4*h^2 + 4*h^3", P3));
    CHECK(euler(csm_smooth_ci(P3, {2})) == 4);
    CHECK_THROWS_AS(csm_smooth_ci(P3, {1, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(csm_smooth_ci(P3, {}), PreconditionError);
    CHECK_THROWS_AS(csm_smooth_ci(P3, {0}), PreconditionError);
}

TEST_CASE("CSM of a transversal union by inclusion-exclusion") {
    CHECK(csm_nc_union(P2, {1, 1}) == E("2*h + 3*h^2", P2));
    CHECK(euler(csm_nc_union(P2, {1, 1})) == 3);
    // two planes meeting in a line: chi = 3 + 3 - 2
    CHECK(csm_nc_union(P3, {1, 1}) == E("2*h + 5*h^2 + 4*h^3", P3));
    CHECK(euler(csm_nc_union(P3, {1, 1})) == 4);
    // conic plus a transversal line: chi = 2 + 2 - 2
    CHECK(euler(csm_nc_union(P2, {2, 1})) == 2);
}

TEST_CASE("log-tangent classes") {
    CHECK(log_chern_dual(degree_hypersurface(3, 4)) == E("1 + 6*h^2 - 20*h^3", P3));
    CHECK(log_chern_dual(HypersurfaceSpec(P2, ChowClass::zero(P2))) ==
          chern_tangent(P2));
    CHECK(log_chern_dual(HypersurfaceSpec(Bl2, E("e", Bl2))) ==
          E("1 + (3*h - 2*e) + (3*h^2 + e^2)", Bl2));
}

TEST_CASE("normal-crossing log-tangent classes via residues") {
    CHECK(nc_log_chern_dual(P2, {1, 1}) == E("1 + h + 0*h^2", P2));
    CHECK(nc_log_chern_dual(P3, {}) == chern_tangent(P3));
    CHECK(nc_log_chern_dual(P3, {2, 3}).component(1) == E("-h", P3));
}

TEST_CASE("multi-log class agrees between the two construction routes") {
    CHECK(multilog_chern_dual(P2, 1, 1) == E("1 + h + 0*h^2", P2));
    for (int n = 2; n <= 4; ++n)
        for (int d1 = 1; d1 <= 3; ++d1)
            for (int d2 = 1; d2 <= 3; ++d2) {
                const Ambient amb = Ambient::projective(n);
                const ChowClass ml = multilog_chern_dual(amb, d1, d2);
                CHECK(ml == nc_log_chern_dual(amb, {d1, d2}));
                CHECK(ml == multilog_whitney_route(amb, d1, d2));
            }
}

TEST_CASE("euler degree extraction") {
    CHECK(euler(chern_tangent(P2)) == 3);
    CHECK(euler(ChowClass::zero(P3)) == 0);
    ChowClass half = ChowClass::zero(P2);
    half.set_h(2, Rational(1, 2));
    CHECK_THROWS_AS(euler(half), ConsistencyError);
}

TEST_CASE("complement Euler characteristics via both routes") {
    const HypersurfaceSpec quartic(P3, E("4*h", P3), {node_at("0:0:0:1", 1)});
    const ChiComplementRoutes r = chi_complement_routes(quartic);
    CHECK(r.via_log_formula == -19);
    CHECK(r.via_csm_additivity == -19);
    CHECK(chi_complement(quartic) == -19);

    CHECK(chi_complement(degree_hypersurface(3, 2)) == 0);  // P3 minus a quadric
    CHECK(chi_complement(HypersurfaceSpec(P2, ChowClass::zero(P2))) == 3);

    const HypersurfaceSpec nodal(P2, E("3*h", P2), {node_at("0:0:1", 1)});
    CHECK(chi_complement(nodal) == 2);

    // the blowup ambient works too: complement of the exceptional line
    const HypersurfaceSpec exc(Bl2, E("e", Bl2));
    CHECK(chi_complement(exc) == 2);
}

TEST_CASE("smooth-hypersurface Euler grid matches the independent closed form") {
    CHECK(smooth_chi(2, 3) == 0);
    CHECK(smooth_chi(3, 2) == 4);
    CHECK(smooth_chi(3, 4) == 24);
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 5; ++d)
            CHECK(euler(csm_smooth_ci(Ambient::projective(n), {d})) == smooth_chi(n, d));
}

TEST_CASE("divisor spec validation") {
    CHECK(degree_hypersurface(3, 4).divisor_class == E("4*h", P3));
    // degree 0 models the empty divisor and is allowed
    CHECK(degree_hypersurface(3, 0).divisor_class.is_zero());
    CHECK_THROWS_AS(degree_hypersurface(3, -1), PreconditionError);
    // mixed-codimension divisor classes are rejected at class construction
    CHECK_THROWS_AS(fulton_divisor(HypersurfaceSpec(P3, E("1 + h", P3))),
                    PreconditionError);
}
