#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charclass/poly.hpp"
#include "charclass/rational.hpp"

namespace charclass {

inline constexpr int kDefaultMaxCutoff = 32;

// A local Milnor number together with the truncation level that produced it.
// certified == true means the Nakayama-style containment was verified at that
// level, so mu is the exact local Milnor number.
struct MilnorResult {
    long long mu = 0;
    int cutoff = 0;
    bool certified = false;
};

struct SingularPointRecord {
    std::vector<Rational> point;  // homogeneous rational coordinates
    int chart = 0;                // index of a nonzero coordinate
    MilnorResult milnor;
};

using SingularityData = std::vector<SingularPointRecord>;

// Checks that p lies on the hypersurface f = 0 and is a singular point of it,
// and returns the chart (first nonzero coordinate unless one is forced).
int verify_singular_point(const Poly& f, const std::vector<Rational>& p,
                          std::optional<int> forced_chart = std::nullopt);

// Local Milnor number of an isolated hypersurface singularity at the origin.
// For increasing truncation degrees D the span of all degree-< D truncations
// of x^alpha * df/dx_i with |alpha| < D is row-reduced exactly; the candidate
// mu_D is codimension of that span. The result is certified once every
// monomial of degree D-1 lies in the span, which by Nakayama places the
// (D-1)-st power of the maximal ideal inside the Jacobian ideal of the local
// ring. Reaching max_cutoff uncertified returns certified == false.
MilnorResult milnor_at(const Poly& f_affine, int max_cutoff = kDefaultMaxCutoff);

// Dimension of the quotient of the full polynomial ring by the ideal of
// partial derivatives, i.e. the number of critical points of the chart
// polynomial counted with their Milnor numbers. Computed by Buchberger
// completion in graded reverse-lexicographic order followed by a
// standard-monomial count. Throws NonIsolatedError when the critical locus
// is not zero-dimensional.
long long total_milnor_affine(const Poly& f_affine, int max_cutoff = kDefaultMaxCutoff);

// Dehomogenizes f in the given chart, rescales the point so the chart
// coordinate is 1 and translates it to the origin.
Poly local_equation(const Poly& f_homogeneous, const std::vector<Rational>& point,
                    int chart);

// Runs verify_singular_point and milnor_at over a list of points; enforces
// pairwise projective distinctness.
SingularityData build_singularity_data(const Poly& f_homogeneous,
                                       const std::vector<std::vector<Rational>>& points,
                                       const std::vector<std::optional<int>>& charts,
                                       int max_cutoff = kDefaultMaxCutoff);

// "p/q" or "p"
Rational parse_rational(const std::string& text);

// Colon-separated homogeneous rationals, e.g. "0:0:1".
std::vector<Rational> parse_point(const std::string& text);

// Semicolon-separated list of points.
std::vector<std::vector<Rational>> parse_point_list(const std::string& text);

std::string point_to_string(const std::vector<Rational>& p);

}  // namespace charclass
