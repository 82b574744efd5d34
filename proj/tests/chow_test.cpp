#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charclass/chow.hpp"
#include "charclass/chow_expr.hpp"
#include "charclass/errors.hpp"
#include "test_support.hpp"

using namespace charclass;

namespace {
ChowClass E(const std::string& expr, const Ambient& amb) {
    return eval_chow_expr(expr, amb);
}
const Ambient P2 = Ambient::projective(2);
const Ambient P3 = Ambient::projective(3);
const Ambient Bl2 = Ambient::blowup(2, 1);
}  // namespace

TEST_CASE("ambient parsing") {
    CHECK(parse_ambient("P2") == P2);
    CHECK(parse_ambient("P^3") == P3);
    CHECK(parse_ambient("P(4)") == Ambient::projective(4));
    CHECK(parse_ambient("BlPt(P2,1)") == Bl2);
    CHECK(parse_ambient("BlPt(P(3), 2)") == Ambient::blowup(3, 2));
    CHECK(parse_ambient(" P2 ") == P2);
    CHECK_THROWS_AS(parse_ambient("P2 junk"), ParseError);
    CHECK_THROWS_AS(parse_ambient("Q2"), ParseError);
    CHECK_THROWS_AS(parse_ambient("BlPt(P2)"), ParseError);
    CHECK_THROWS_AS(parse_ambient("P0"), PreconditionError);
    CHECK_THROWS_AS(parse_ambient("BlPt(P1,1)"), PreconditionError);
}

TEST_CASE("multiplication truncates and kills mixed h,e products") {
    CHECK(E("h^2 * h^2", P3).is_zero());
    CHECK(E("h * e", Bl2).is_zero());
    CHECK(E("(3*h - e)^2", Bl2) == E("9*h^2 + e^2", Bl2));
    CHECK(degree_int(E("(3*h - e)^2", Bl2)) == Rational(8));

    const Ambient two = Ambient::blowup(2, 2);
    CHECK(E("e1 * e2", two).is_zero());
    CHECK(E("(1 + e1)*(1 + e2)", two) == E("1 + e1 + e2", two));
}

TEST_CASE("ring axioms on random classes") {
    for (const Ambient& amb : {P3, Ambient::blowup(3, 2), Ambient::blowup(2, 3)}) {
        for (int t = 0; t < 20; ++t) {
            const ChowClass a = testsup::random_class(amb);
            const ChowClass b = testsup::random_class(amb);
            const ChowClass c = testsup::random_class(amb);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * ChowClass::one(amb) == a);
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("series inversion") {
    CHECK(E("inv(1 + 4*h)", P3) == E("1 - 4*h + 16*h^2 - 64*h^3", P3));
    CHECK(E("inv(1)", P2) == ChowClass::one(P2));
    CHECK(E("inv(1 + e)", Bl2) == E("1 - e + e^2", Bl2));
    CHECK_THROWS_AS(inv_unit(E("2 + h", P2)), PreconditionError);

    for (const Ambient& amb : {P3, Ambient::blowup(3, 2)}) {
        for (int t = 0; t < 15; ++t) {
            const ChowClass a = testsup::random_unit(amb);
            CHECK(a * inv_unit(a) == ChowClass::one(amb));
        }
    }
}

TEST_CASE("dual operator flips odd codimensions and is an involution") {
    CHECK(class_dual(E("3*h + 5*h^3", P3)) == E("-3*h - 5*h^3", P3));
    CHECK(class_dual(E("1 + 6*h^2", P3)) == E("1 + 6*h^2", P3));
    for (int t = 0; t < 15; ++t) {
        const ChowClass a = testsup::random_class(Ambient::blowup(3, 1));
        CHECK(class_dual(class_dual(a)) == a);
    }
}

TEST_CASE("tensor operator matches the codimension-weighted division") {
    const LineBundleClass O4(E("4*h", P3));
    CHECK(class_tensor(E("h^3", P3), O4) == E("h^3", P3));
    CHECK(class_tensor(E("6*h^2 - 20*h^3", P3), O4) == E("6*h^2 - 68*h^3", P3));

    const LineBundleClass O0(ChowClass::zero(P3));
    const LineBundleClass O2(E("2*h", P3));
    const LineBundleClass O6(E("6*h", P3));
    for (int t = 0; t < 15; ++t) {
        const ChowClass a = testsup::random_class(P3);
        CHECK(class_tensor(a, O0) == a);
        CHECK(class_tensor(class_tensor(a, O4), O2) == class_tensor(a, O6));
    }
}

TEST_CASE("chern dual of the cotangent class is the tangent class") {
    CHECK(chern_dual(E("1 - 3*h + 3*h^2", P2)) == E("1 + 3*h + 3*h^2", P2));
    CHECK(chern_dual(ChowClass::one(P2)) == ChowClass::one(P2));
    CHECK_THROWS_AS(chern_dual(E("h", P2)), PreconditionError);
    for (int t = 0; t < 10; ++t) {
        const ChowClass a = testsup::random_unit(Ambient::blowup(2, 2));
        CHECK(chern_dual(chern_dual(a)) == a);
    }
}

TEST_CASE("degree pairing conventions") {
    CHECK(degree_int(E("4*h + 24*h^3", P3)) == Rational(24));
    CHECK(degree_int(E("e^2", Bl2)) == Rational(-1));
    CHECK(degree_int(ChowClass::one(P2)) == Rational(0));
    CHECK(degree_int(E("e^3", Ambient::blowup(3, 1))) == Rational(1));
}

TEST_CASE("pushforward to projective space") {
    CHECK(pushforward(E("3*h - 2*e", Bl2)) == E("3*h", P2));
    CHECK(pushforward(E("e^2", Bl2)) == E("-h^2", P2));
    const Ambient bl3 = Ambient::blowup(3, 2);
    for (int k = 0; k <= 3; ++k)
        CHECK(pushforward(ChowClass::hyperplane(bl3).pow(k)) ==
              ChowClass::hyperplane(P3).pow(k));
    CHECK_THROWS_AS(pushforward(ChowClass::one(P2)), PreconditionError);

    for (int t = 0; t < 20; ++t) {
        const ChowClass a = testsup::random_class(bl3);
        CHECK(degree_int(pushforward(a)) == degree_int(a));
    }
}

TEST_CASE("pullback and the projection formula") {
    const Ambient bl3 = Ambient::blowup(3, 2);
    const ChowClass c = E("1 + 3*h + 3*h^2", P3);
    const ChowClass up = pullback(c, bl3);
    for (int k = 0; k <= 3; ++k) CHECK(up.h_coeff(k) == c.h_coeff(k));
    for (int i = 0; i < 2; ++i)
        for (int k = 1; k <= 3; ++k) CHECK(up.e_coeff(i, k) == 0);
    CHECK(pullback(ChowClass::zero(P3), bl3).is_zero());
    CHECK_THROWS_AS(pullback(testsup::random_class(bl3), bl3), PreconditionError);

    for (int t = 0; t < 20; ++t) {
        const ChowClass a = testsup::random_class(P3);
        const ChowClass b = testsup::random_class(bl3);
        CHECK(pushforward(pullback(a, bl3) * b) == a * pushforward(b));
    }
}

TEST_CASE("tangent classes of the supported ambients") {
    CHECK(chern_tangent(P2) == E("1 + 3*h + 3*h^2", P2));
    CHECK(chern_tangent(Bl2) == E("1 + (3*h - e) + (3*h^2 - e^2)", Bl2));

    const Ambient bl3 = Ambient::blowup(3, 1);
    const ChowClass t3 = chern_tangent(bl3);
    CHECK(t3.component(1) == E("4*h - 2*e", bl3));
    CHECK(degree_int(t3.component(3)) == Rational(6));

    // top Chern degree equals the Euler characteristic of the blown-up space
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 3; ++m) {
            const Ambient amb = Ambient::blowup(n, m);
            CHECK(degree_int(chern_tangent(amb).component(n)) ==
                  Rational((n + 1) + m * (n - 1)));
        }
}

TEST_CASE("blowup tangent correction is h-free by construction") {
    for (int n = 2; n <= 5; ++n) {
        const ChowClass delta = blowup_tangent_delta(n);
        for (int k = 0; k <= n; ++k) CHECK(delta.h_coeff(k) == 0);
    }
    CHECK(blowup_tangent_delta(2) == E("0 - e - e^2", Bl2));
}

TEST_CASE("line bundles require a pure codimension-1 divisor") {
    CHECK(LineBundleClass(E("4*h", P3)).c1() == E("4*h", P3));
    CHECK(LineBundleClass(E("e", Bl2)).c1() == E("e", Bl2));
    CHECK_THROWS_AS(LineBundleClass(E("1 + h", P3)), PreconditionError);
    CHECK_THROWS_AS(LineBundleClass(E("h^2", P3)), PreconditionError);
}

TEST_CASE("expression evaluator rejects out-of-ambient generators") {
    CHECK_THROWS_AS(E("e", P2), ParseError);
    CHECK_THROWS_AS(E("e", Ambient::blowup(2, 2)), ParseError);
    CHECK_THROWS_AS(E("e3", Ambient::blowup(2, 2)), ParseError);
    CHECK(E("e2^2", Ambient::blowup(2, 2)) == E("e2 * e2", Ambient::blowup(2, 2)));
    CHECK_THROWS_AS(E("q + h", P2), ParseError);
}

TEST_CASE("class rendering uses the documented surface syntax") {
    CHECK(E("1 + 3*h + 3*h^2", P2).to_string() == "1 + 3*h + 3*h^2");
    CHECK(E("9*h^2 + e^2", Bl2).to_string() == "9*h^2 + e1^2");
    CHECK(ChowClass::zero(P2).to_string() == "0");
    CHECK(E("-h", P2).to_string() == "-h");
}

TEST_CASE("integrality assertion guards exported classes") {
    CHECK_NOTHROW(assert_integral(E("3*h + h^2", P2), "test class"));
    ChowClass half = ChowClass::zero(P2);
    half.set_h(1, Rational(1, 2));
    CHECK_THROWS_AS(assert_integral(half, "test class"), ConsistencyError);
}
