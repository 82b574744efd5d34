#pragma once

#include <vector>

#include "charclass/chow.hpp"
#include "charclass/milnor.hpp"

namespace charclass {

// A hypersurface described at class level: its ambient, the class of its
// divisor, and the certified isolated singular points attached to it.
struct HypersurfaceSpec {
    Ambient ambient;
    ChowClass divisor_class;
    SingularityData singularities;

    HypersurfaceSpec(const Ambient& a, const ChowClass& d, SingularityData s = {})
        : ambient(a), divisor_class(d), singularities(std::move(s)) {}
};

// Convenience: degree-d hypersurface in P^n with the given singular points.
HypersurfaceSpec degree_hypersurface(int n, int d, SingularityData s = {});

// Fulton class of a divisor: c(TM) * D / (1 + D), as a class in the ambient.
ChowClass fulton_divisor(const HypersurfaceSpec& spec);

// Sum of m_i times the point class; the isolated-point mu-class.
ChowClass mu_class_isolated(const SingularityData& sing, const Ambient& ambient);

// CSM class of a hypersurface with isolated singularities: Fulton class plus
// the twisted mu-class correction. The correction is computed both through
// the full dual/tensor machinery and as (-1)^dim * sum m_i [x_i]; the two
// routes are asserted equal.
ChowClass csm_hypersurface(const HypersurfaceSpec& spec);

// CSM class of a smooth complete intersection of one or two hypersurfaces of
// the given degrees in P^n.
ChowClass csm_smooth_ci(const Ambient& ambient, const std::vector<int>& degrees);

// CSM class of the union of two smooth transversal hypersurfaces, by
// inclusion-exclusion of constructible functions.
ChowClass csm_nc_union(const Ambient& ambient, const std::vector<int>& degrees);

// Chern class of the dual of the sheaf of logarithmic 1-forms along the
// divisor: c(TM) / (1 + D).
ChowClass log_chern_dual(const HypersurfaceSpec& spec);

// Same for a normal-crossing union of smooth hypersurfaces of the given
// degrees, through the residue sequence: dual of c(Omega^1) * prod 1/(1-d_i h).
ChowClass nc_log_chern_dual(const Ambient& ambient, const std::vector<int>& degrees);

// Chern class of the dual multi-logarithmic sheaf of C = D1 cap D2, computed
// along the Whitney route (sum-of-sheaves sequence); equals the residue route.
ChowClass multilog_whitney_route(const Ambient& ambient, int d1, int d2);

// Both routes computed and asserted equal; returns the residue route value.
ChowClass multilog_chern_dual(const Ambient& ambient, int d1, int d2);

// Degree of the codimension-n component; must be an integer.
Int euler(const ChowClass& c);

struct ChiComplementRoutes {
    Int via_log_formula;     // integral of the log dual plus the signed mu sum
    Int via_csm_additivity;  // chi(ambient) minus chi of the hypersurface
};

// Both routes, without the consistency assertion (used for reporting).
ChiComplementRoutes chi_complement_routes(const HypersurfaceSpec& spec);

// Euler characteristic of the complement; the two routes are asserted equal.
Int chi_complement(const HypersurfaceSpec& spec);

}  // namespace charclass
