#include "charclass/chow.hpp"

#include <cctype>
#include <sstream>

#include "charclass/errors.hpp"

namespace charclass {

namespace {

constexpr int kMaxDim = 64;
constexpr int kMaxCenters = 16;

void require_same_ambient(const Ambient& a, const Ambient& b) {
    if (!(a == b))
        throw PreconditionError("classes live in different ambients: " + a.to_string() +
                                " vs " + b.to_string());
}

}  // namespace

Ambient Ambient::projective(int n) {
    if (n < 1 || n > kMaxDim)
        throw PreconditionError("ambient dimension out of supported range");
    return Ambient{AmbientKind::ProjectiveSpace, n, 0};
}

Ambient Ambient::blowup(int n, int m) {
    if (n < 2 || n > kMaxDim)
        throw PreconditionError("blowup ambient needs dimension at least 2");
    if (m < 1 || m > kMaxCenters)
        throw PreconditionError("number of blown-up points out of supported range");
    return Ambient{AmbientKind::BlowupAtPoints, n, m};
}

std::string Ambient::to_string() const {
    if (!is_blowup()) return "P(" + std::to_string(n) + ")";
    return "BlPt(P(" + std::to_string(n) + "), " + std::to_string(m) + ")";
}

Ambient parse_ambient(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto eat = [&](char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        std::size_t at = pos;
        long long v = 0;
        bool any = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError("number too large", at);
            ++pos;
            any = true;
        }
        if (!any) throw ParseError("expected a number", at);
        return static_cast<int>(v);
    };
    auto parse_proj = [&]() -> int {
        skip_ws();
        if (!eat('P')) throw ParseError("expected 'P'", pos);
        if (eat('(')) {
            int n = parse_int();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return n;
        }
        eat('^');
        return parse_int();
    };

    skip_ws();
    Ambient result;
    if (text.compare(pos, 5, "BlPt(") == 0) {
        pos += 5;
        int n = parse_proj();
        if (!eat(',')) throw ParseError("expected ','", pos);
        int m = parse_int();
        if (!eat(')')) throw ParseError("expected ')'", pos);
        result = Ambient::blowup(n, m);
    } else {
        result = Ambient::projective(parse_proj());
    }
    skip_ws();
    if (pos != text.size())
        throw ParseError("unexpected trailing characters in ambient", pos);
    return result;
}

// ---------------------------------------------------------------------------

ChowClass::ChowClass(const Ambient& a)
    : amb_(a),
      h_(a.n + 1, Rational(0)),
      e_(a.m, std::vector<Rational>(a.n, Rational(0))) {}

ChowClass ChowClass::one(const Ambient& a) { return scalar(a, 1); }

ChowClass ChowClass::scalar(const Ambient& a, const Rational& c) {
    ChowClass r(a);
    r.h_[0] = c;
    return r;
}

ChowClass ChowClass::hyperplane(const Ambient& a) {
    ChowClass r(a);
    r.h_[1] = 1;
    return r;
}

ChowClass ChowClass::exceptional(const Ambient& a, int i) {
    if (i < 0 || i >= a.m)
        throw PreconditionError("exceptional divisor index out of range");
    ChowClass r(a);
    r.e_[i][0] = 1;
    return r;
}

ChowClass ChowClass::point_class(const Ambient& a) {
    ChowClass r(a);
    r.h_[a.n] = 1;
    return r;
}

const Rational& ChowClass::e_coeff(int point, int codim) const {
    return e_.at(point).at(codim - 1);
}

void ChowClass::set_e(int point, int codim, const Rational& c) {
    e_.at(point).at(codim - 1) = c;
}

bool ChowClass::is_zero() const {
    for (const auto& c : h_)
        if (c != 0) return false;
    for (const auto& block : e_)
        for (const auto& c : block)
            if (c != 0) return false;
    return true;
}

bool ChowClass::is_integral() const {
    for (const auto& c : h_)
        if (!is_integer(c)) return false;
    for (const auto& block : e_)
        for (const auto& c : block)
            if (!is_integer(c)) return false;
    return true;
}

ChowClass ChowClass::component(int codim) const {
    ChowClass r(amb_);
    if (codim < 0 || codim > amb_.n) return r;
    r.h_[codim] = h_[codim];
    if (codim >= 1)
        for (int p = 0; p < amb_.m; ++p) r.e_[p][codim - 1] = e_[p][codim - 1];
    return r;
}

ChowClass ChowClass::operator-() const {
    ChowClass r(amb_);
    for (int k = 0; k <= amb_.n; ++k) r.h_[k] = -h_[k];
    for (int p = 0; p < amb_.m; ++p)
        for (int k = 0; k < amb_.n; ++k) r.e_[p][k] = -e_[p][k];
    return r;
}

ChowClass ChowClass::operator+(const ChowClass& rhs) const {
    require_same_ambient(amb_, rhs.amb_);
    ChowClass r = *this;
    for (int k = 0; k <= amb_.n; ++k) r.h_[k] += rhs.h_[k];
    for (int p = 0; p < amb_.m; ++p)
        for (int k = 0; k < amb_.n; ++k) r.e_[p][k] += rhs.e_[p][k];
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& rhs) const { return *this + (-rhs); }

ChowClass ChowClass::operator*(const ChowClass& rhs) const {
    require_same_ambient(amb_, rhs.amb_);
    const int n = amb_.n;
    ChowClass r(amb_);
    for (int i = 0; i <= n; ++i) {
        if (h_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) r.h_[i + j] += h_[i] * rhs.h_[j];
    }
    // Mixed h*e and e_i*e_j (i != j) products vanish, so each exceptional
    // block only sees the two constant terms and its own square.
    const Rational& a0 = h_[0];
    const Rational& b0 = rhs.h_[0];
    for (int p = 0; p < amb_.m; ++p) {
        for (int k = 1; k <= n; ++k) {
            Rational acc = a0 * rhs.e_[p][k - 1] + b0 * e_[p][k - 1];
            for (int i = 1; i < k; ++i) acc += e_[p][i - 1] * rhs.e_[p][k - i - 1];
            r.e_[p][k - 1] = acc;
        }
    }
    return r;
}

ChowClass ChowClass::operator*(const Rational& c) const {
    ChowClass r(amb_);
    for (int k = 0; k <= amb_.n; ++k) r.h_[k] = h_[k] * c;
    for (int p = 0; p < amb_.m; ++p)
        for (int k = 0; k < amb_.n; ++k) r.e_[p][k] = e_[p][k] * c;
    return r;
}

ChowClass ChowClass::pow(int e) const {
    if (e < 0) throw PreconditionError("negative powers are not defined");
    ChowClass acc = ChowClass::one(amb_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string ChowClass::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& gen) {
        if (c == 0) return;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (gen.empty()) {
            out << rat_str(mag);
        } else if (mag == 1) {
            out << gen;
        } else {
            out << rat_str(mag) << "*" << gen;
        }
    };
    auto power_name = [](const std::string& base, int k) {
        return k == 1 ? base : base + "^" + std::to_string(k);
    };
    emit(h_[0], "");
    for (int k = 1; k <= amb_.n; ++k) emit(h_[k], power_name("h", k));
    for (int p = 0; p < amb_.m; ++p)
        for (int k = 1; k <= amb_.n; ++k)
            emit(e_[p][k - 1], power_name("e" + std::to_string(p + 1), k));
    if (first) return "0";
    return out.str();
}

// ---------------------------------------------------------------------------

LineBundleClass::LineBundleClass(const ChowClass& divisor) : c1_(divisor) {
    const int n = c1_.dim();
    bool ok = c1_.h_coeff(0) == 0;
    for (int k = 2; k <= n && ok; ++k) ok = c1_.h_coeff(k) == 0;
    for (int p = 0; p < c1_.ambient().m && ok; ++p)
        for (int k = 2; k <= n && ok; ++k) ok = c1_.e_coeff(p, k) == 0;
    if (!ok)
        throw PreconditionError("a line bundle class must be purely of codimension 1");
}

ChowClass inv_unit(const ChowClass& a) {
    if (a.h_coeff(0) != 1)
        throw PreconditionError("inverse requires constant term exactly 1");
    const int n = a.dim();
    ChowClass r = ChowClass::zero(a.ambient());
    std::vector<Rational> inv(n + 1, Rational(0));
    inv[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j) s += a.h_coeff(j) * inv[k - j];
        inv[k] = -s;
    }
    for (int k = 0; k <= n; ++k) r.set_h(k, inv[k]);
    // Each exceptional block of 1/(u) is 1/(1 + block) - 1 in that block alone.
    for (int p = 0; p < a.ambient().m; ++p) {
        std::vector<Rational> binv(n + 1, Rational(0));
        binv[0] = 1;
        for (int k = 1; k <= n; ++k) {
            Rational s(0);
            for (int j = 1; j <= k; ++j) s += a.e_coeff(p, j) * binv[k - j];
            binv[k] = -s;
        }
        for (int k = 1; k <= n; ++k) r.set_e(p, k, binv[k]);
    }
    return r;
}

ChowClass class_dual(const ChowClass& a) {
    ChowClass r = a;
    for (int k = 1; k <= a.dim(); k += 2) {
        r.set_h(k, -a.h_coeff(k));
        for (int p = 0; p < a.ambient().m; ++p) r.set_e(p, k, -a.e_coeff(p, k));
    }
    return r;
}

ChowClass class_tensor(const ChowClass& a, const LineBundleClass& L) {
    require_same_ambient(a.ambient(), L.ambient());
    const ChowClass unit = ChowClass::one(a.ambient()) + L.c1();
    ChowClass acc = ChowClass::zero(a.ambient());
    for (int p = 0; p <= a.dim(); ++p)
        acc = acc + a.component(p) * inv_unit(unit.pow(p));
    return acc;
}

ChowClass chern_dual(const ChowClass& c) {
    if (c.h_coeff(0) != 1)
        throw PreconditionError("a total Chern class must have constant term 1");
    return class_dual(c);
}

Rational degree_int(const ChowClass& a) {
    const int n = a.dim();
    Rational d = a.h_coeff(n);
    const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);  // (-1)^(n-1)
    for (int p = 0; p < a.ambient().m; ++p) d += sign * a.e_coeff(p, n);
    return d;
}

ChowClass pushforward(const ChowClass& a) {
    if (!a.ambient().is_blowup())
        throw PreconditionError("pushforward needs a blowup ambient");
    const int n = a.dim();
    ChowClass r(Ambient::projective(n));
    for (int k = 0; k <= n; ++k) r.set_h(k, a.h_coeff(k));
    Rational extra(0);
    for (int p = 0; p < a.ambient().m; ++p) extra += a.e_coeff(p, n);
    const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
    r.set_h(n, r.h_coeff(n) + sign * extra);
    return r;
}

ChowClass pullback(const ChowClass& a, const Ambient& target) {
    if (a.ambient().is_blowup())
        throw PreconditionError("pullback source must be a projective space");
    if (a.dim() != target.n)
        throw PreconditionError("pullback requires matching dimensions");
    ChowClass r(target);
    for (int k = 0; k <= target.n; ++k) r.set_h(k, a.h_coeff(k));
    return r;
}

ChowClass blowup_tangent_delta(int n) {
    const Ambient bl = Ambient::blowup(n, 1);
    const ChowClass one = ChowClass::one(bl);
    const ChowClass h = ChowClass::hyperplane(bl);
    const ChowClass e = ChowClass::exceptional(bl, 0);
    const ChowClass full = (one + h) * (one + h - e).pow(n) * (one + e);
    ChowClass delta = full - (one + h).pow(n + 1);
    for (int k = 0; k <= n; ++k)
        if (delta.h_coeff(k) != 0)
            throw ConsistencyError("blowup tangent correction has hyperplane terms");
    return delta;
}

ChowClass chern_tangent(const Ambient& a) {
    ChowClass r(a);
    for (int k = 0; k <= a.n; ++k) r.set_h(k, Rational(binomial(a.n + 1, k)));
    if (a.is_blowup()) {
        const ChowClass delta = blowup_tangent_delta(a.n);
        for (int p = 0; p < a.m; ++p)
            for (int k = 1; k <= a.n; ++k) r.set_e(p, k, delta.e_coeff(0, k));
    }
    return r;
}

void assert_integral(const ChowClass& a, const std::string& what) {
    if (!a.is_integral())
        throw ConsistencyError(what + " has a non-integer coefficient: " + a.to_string());
}

}  // namespace charclass
