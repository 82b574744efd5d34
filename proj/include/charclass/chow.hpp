#pragma once

#include <string>
#include <vector>

#include "charclass/rational.hpp"

namespace charclass {

enum class AmbientKind { ProjectiveSpace, BlowupAtPoints };

// The modeled ambient smooth variety: P^n, or P^n blown up at m distinct
// rational points.
struct Ambient {
    AmbientKind kind = AmbientKind::ProjectiveSpace;
    int n = 1;  // dimension of the underlying projective space
    int m = 0;  // number of blown-up points

    static Ambient projective(int n);
    static Ambient blowup(int n, int m);

    bool is_blowup() const { return kind == AmbientKind::BlowupAtPoints; }
    bool operator==(const Ambient& rhs) const = default;

    std::string to_string() const;  // "P(n)" or "BlPt(P(n), m)"
};

// Accepts "P2", "P^2", "P(2)", "BlPt(P2,1)", "BlPt(P(2), 1)".
Ambient parse_ambient(const std::string& text);

// Element of the modeled Chow ring, graded by codimension. Basis
// {h^k : 0 <= k <= n} plus {e_i^k : 1 <= k <= n} per blown-up point i, with
// relations h*e_i = 0 and e_i*e_j = 0 for i != j. Products truncate above
// codimension n.
class ChowClass {
public:
    explicit ChowClass(const Ambient& a);

    static ChowClass zero(const Ambient& a) { return ChowClass(a); }
    static ChowClass one(const Ambient& a);
    static ChowClass scalar(const Ambient& a, const Rational& c);
    static ChowClass hyperplane(const Ambient& a);            // h
    static ChowClass exceptional(const Ambient& a, int i);    // e_i, 0-based i
    static ChowClass point_class(const Ambient& a);           // h^n

    const Ambient& ambient() const { return amb_; }
    int dim() const { return amb_.n; }

    const Rational& h_coeff(int codim) const { return h_[codim]; }
    const Rational& e_coeff(int point, int codim) const;  // codim in 1..n
    void set_h(int codim, const Rational& c) { h_[codim] = c; }
    void set_e(int point, int codim, const Rational& c);

    bool is_zero() const;
    bool is_integral() const;
    ChowClass component(int codim) const;  // codimension-p graded piece

    ChowClass operator-() const;
    ChowClass operator+(const ChowClass& rhs) const;
    ChowClass operator-(const ChowClass& rhs) const;
    ChowClass operator*(const ChowClass& rhs) const;
    ChowClass operator*(const Rational& c) const;
    ChowClass pow(int e) const;
    bool operator==(const ChowClass& rhs) const = default;

    std::string to_string() const;

private:
    Ambient amb_;
    std::vector<Rational> h_;               // indexed by codimension 0..n
    std::vector<std::vector<Rational>> e_;  // per point, codimension 1..n
};

// The first Chern class of a line bundle: a purely codimension-1 class.
class LineBundleClass {
public:
    explicit LineBundleClass(const ChowClass& divisor);
    const ChowClass& c1() const { return c1_; }
    const Ambient& ambient() const { return c1_.ambient(); }

private:
    ChowClass c1_;
};

// Multiplicative inverse of a class with constant term 1.
ChowClass inv_unit(const ChowClass& a);

// Gradewise sign flip: the codimension-p part is scaled by (-1)^p.
ChowClass class_dual(const ChowClass& a);

// Gradewise line-bundle twist: the codimension-p part is divided by (1+c1(L))^p.
ChowClass class_tensor(const ChowClass& a, const LineBundleClass& L);

// Total Chern class of the dual sheaf. Same arithmetic as class_dual but the
// argument must have constant term 1.
ChowClass chern_dual(const ChowClass& c);

// Degree pairing: deg h^n = 1, deg e_i^n = (-1)^(n-1), linear extension.
Rational degree_int(const ChowClass& a);

// Pushforward along the blowdown: h^k -> h^k, e_i^k -> 0 for k < n,
// e_i^n -> (-1)^(n-1) h^n.
ChowClass pushforward(const ChowClass& a);

// Pullback from P^n to a blowup of it: h^k -> h^k, exceptional parts zero.
ChowClass pullback(const ChowClass& a, const Ambient& target);

// Total Chern class of the tangent bundle. P^n gives (1+h)^(n+1) truncated;
// a point blowup adds, per center, the pure-e part of the toric divisor
// product (1+h)(1+h-e)^n(1+e).
ChowClass chern_tangent(const Ambient& a);

// Pure-e correction block of chern_tangent for one blown-up point, computed
// in BlPt(P(n),1) and checked to be h-free.
ChowClass blowup_tangent_delta(int n);

void assert_integral(const ChowClass& a, const std::string& what);

}  // namespace charclass
