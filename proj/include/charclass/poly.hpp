#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charclass/rational.hpp"

namespace charclass {

// Dense small exponent vectors; desk-scale inputs live in at most 5 variables.
inline constexpr int kMaxVars = 8;

using ExpVec = std::array<std::uint8_t, kMaxVars>;

int total_degree(const ExpVec& e);

// Graded-lexicographic order, largest term first: higher total degree wins,
// ties broken lexicographically with earlier variables dominating. This is
// the canonical term order of every serialization.
struct GradedLexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients. Values are
// immutable by convention: every operation returns a fresh polynomial. No
// zero coefficients are ever stored.
class Poly {
public:
    using TermMap = std::map<ExpVec, Rational, GradedLexDesc>;

    explicit Poly(std::vector<std::string> vars);

    static Poly constant(std::vector<std::string> vars, const Rational& c);
    static Poly variable(const std::vector<std::string>& vars, int index);
    static Poly monomial(const std::vector<std::string>& vars, const ExpVec& e,
                         const Rational& c);

    // Parses the ASCII grammar: integer and p/q rational literals,
    // identifiers, binary + - *, ^ with nonnegative integer literal exponent,
    // parentheses. A leading sign is accepted so that printing round-trips.
    static Poly parse(const std::string& text, const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    int num_vars() const { return static_cast<int>(vars_.size()); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& c) const;
    Poly pow(int e) const;
    bool operator==(const Poly& rhs) const;

    void add_term(const ExpVec& e, const Rational& c);

    Poly partial(int var) const;
    std::vector<Poly> gradient() const;

    // Substitutes 1 for the chart variable; the result has one fewer
    // variable. Requires a homogeneous input.
    Poly dehomogenize(int chart) const;

    // f(x + p); the point p moves to the origin.
    Poly translate(const std::vector<Rational>& p) const;

    Poly substitute(const std::vector<Poly>& images) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace charclass
