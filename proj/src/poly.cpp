#include "charclass/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "charclass/errors.hpp"

namespace charclass {

int total_degree(const ExpVec& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GradedLexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // earlier variables dominate
}

namespace {

ExpVec zero_exp() {
    ExpVec e{};
    e.fill(0);
    return e;
}

void check_var_count(std::size_t n) {
    if (n > kMaxVars)
        throw PreconditionError("at most " + std::to_string(kMaxVars) +
                                " variables are supported");
}

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (int i = 0; i < kMaxVars; ++i) {
        int s = int(a[i]) + int(b[i]);
        if (s > 255) throw PreconditionError("monomial degree out of supported range");
        r[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

}  // namespace

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    check_var_count(vars_.size());
}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
    Poly p(std::move(vars));
    p.add_term(zero_exp(), c);
    return p;
}

Poly Poly::variable(const std::vector<std::string>& vars, int index) {
    ExpVec e = zero_exp();
    e[index] = 1;
    return monomial(vars, e, 1);
}

Poly Poly::monomial(const std::vector<std::string>& vars, const ExpVec& e,
                    const Rational& c) {
    Poly p(vars);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // leading term has top degree
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& rhs) const {
    Poly r(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) r.add_term(add_exps(ea, eb), ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::constant(vars_, 1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool Poly::operator==(const Poly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

Poly Poly::partial(int var) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * int(e[var]));
    }
    return r;
}

std::vector<Poly> Poly::gradient() const {
    std::vector<Poly> g;
    g.reserve(vars_.size());
    for (int i = 0; i < num_vars(); ++i) g.push_back(partial(i));
    return g;
}

Poly Poly::dehomogenize(int chart) const {
    if (!is_homogeneous()) throw PreconditionError("polynomial is not homogeneous");
    if (chart < 0 || chart >= num_vars())
        throw PreconditionError("chart index out of range");
    std::vector<std::string> new_vars;
    for (int i = 0; i < num_vars(); ++i)
        if (i != chart) new_vars.push_back(vars_[i]);
    Poly r(new_vars);
    for (const auto& [e, c] : terms_) {
        ExpVec d = zero_exp();
        int k = 0;
        for (int i = 0; i < num_vars(); ++i)
            if (i != chart) d[k++] = e[i];
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::translate(const std::vector<Rational>& p) const {
    if (static_cast<int>(p.size()) != num_vars())
        throw PreconditionError("translation point has wrong dimension");
    std::vector<Poly> images;
    images.reserve(p.size());
    for (int i = 0; i < num_vars(); ++i)
        images.push_back(Poly::variable(vars_, i) + Poly::constant(vars_, p[i]));
    return substitute(images);
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != num_vars())
        throw PreconditionError("substitution needs one image per variable");
    const auto& target_vars = images.empty() ? vars_ : images.front().vars();
    Poly r(target_vars);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target_vars, c);
        for (int i = 0; i < num_vars(); ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != num_vars())
        throw PreconditionError("evaluation point has wrong dimension");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < num_vars(); ++i)
            if (e[i] > 0) t *= rational_pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mono;
        for (int i = 0; i < num_vars(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(int(e[i]));
        }
        if (mono.empty()) {
            out << rat_str(mag);
        } else if (mag == 1) {
            out << mono;
        } else {
            out << rat_str(mag) << "*" << mono;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars)
        : lex_{text}, vars_(vars) {
        check_var_count(vars.size());
    }

    Poly run() {
        Poly p = parse_expr();
        if (lex_.peek() != '\0')
            throw ParseError("unexpected character '" + std::string(1, lex_.peek()) + "'",
                             lex_.pos);
        return p;
    }

private:
    Lexer lex_;
    const std::vector<std::string>& vars_;

    Poly parse_expr() {
        bool negate = false;
        if (lex_.eat('-'))
            negate = true;
        else
            lex_.eat('+');
        Poly acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (lex_.eat('+'))
                acc = acc + parse_term();
            else if (lex_.eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_power();
        while (lex_.eat('*')) acc = acc * parse_power();
        return acc;
    }

    Poly parse_power() {
        Poly base = parse_primary();
        if (lex_.eat('^')) {
            std::size_t at = lex_.pos;
            if (!std::isdigit(static_cast<unsigned char>(lex_.peek())))
                throw ParseError("exponent must be a nonnegative integer literal", at);
            long long e = parse_uint();
            if (e > 200) throw ParseError("exponent out of supported range", at);
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Poly parse_primary() {
        char c = lex_.peek();
        std::size_t at = lex_.pos;
        if (c == '(') {
            lex_.eat('(');
            Poly inner = parse_expr();
            if (!lex_.eat(')')) throw ParseError("expected ')'", lex_.pos);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
                if (vars_[i] == name) return Poly::variable(vars_, i);
            throw ParseError("unknown variable '" + name + "'", at);
        }
        throw ParseError("expected a literal, variable, or '('", at);
    }

    Poly parse_literal() {
        Int num = parse_bigint();
        if (lex_.eat('/')) {
            std::size_t at = lex_.pos;
            if (!std::isdigit(static_cast<unsigned char>(lex_.peek())))
                throw ParseError("expected a denominator", at);
            Int den = parse_bigint();
            if (den == 0) throw ParseError("zero denominator", at);
            return Poly::constant(vars_, Rational(num, den));
        }
        return Poly::constant(vars_, Rational(num));
    }

    long long parse_uint() {
        lex_.skip_ws();
        long long v = 0;
        while (lex_.pos < lex_.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
            v = v * 10 + (lex_.text[lex_.pos] - '0');
            if (v > 1'000'000) throw ParseError("integer literal too large", lex_.pos);
            ++lex_.pos;
        }
        return v;
    }

    Int parse_bigint() {
        lex_.skip_ws();
        std::string digits;
        while (lex_.pos < lex_.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos])))
            digits += lex_.text[lex_.pos++];
        return Int(digits);
    }

    std::string parse_ident() {
        lex_.skip_ws();
        std::string name;
        while (lex_.pos < lex_.text.size()) {
            char c = lex_.text[lex_.pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++lex_.pos;
            } else {
                break;
            }
        }
        return name;
    }
};

}  // namespace

Poly Poly::parse(const std::string& text, const std::vector<std::string>& vars) {
    return PolyParser(text, vars).run();
}

}  // namespace charclass
