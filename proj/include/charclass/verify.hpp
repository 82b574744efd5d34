#pragma once

#include <string>

#include "charclass/classes.hpp"

namespace charclass {

// Outcome of instantiating both sides of one identity on one geometry.
struct VerificationReport {
    std::string scenario;
    ChowClass lhs;
    ChowClass rhs;
    ChowClass diff;  // lhs - rhs, identically zero iff equal
    bool equal = false;
};

VerificationReport make_report(std::string scenario, const ChowClass& lhs,
                               const ChowClass& rhs);

// Blowup of P^n at one rational point: the class of the point must equal
// c(TP^n) minus the pushforward of the dual log Chern class along the
// exceptional divisor. Both sides are h^n.
VerificationReport verify_thm12_point_blowup(int n);

// Identity map on P^n (n >= 3), degree-d hypersurface with certified isolated
// singular points: CSM through the Fulton-plus-correction route must equal
// the tangent-minus-log route with the same correction.
VerificationReport verify_thm12_identity_map(int n, int d, const SingularityData& sing);

// Union of two smooth transversal hypersurfaces: inclusion-exclusion CSM
// against the normal-crossing log route.
VerificationReport verify_aluffi_nc(int n, int d1, int d2);

// Complete intersection of two smooth transversal hypersurfaces: CSM of the
// intersection against the multi-logarithmic assembly.
VerificationReport verify_multilog(int n, int d1, int d2);

// Whitney route against residue route for the multi-logarithmic Chern class.
VerificationReport verify_lemma52(int n, int d1, int d2);

// Two-route Euler characteristic of the complement; the values are reported
// as multiples of the point class.
VerificationReport verify_cor13(int n, int d, const SingularityData& sing);

}  // namespace charclass
