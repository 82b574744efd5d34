#include "charclass/chow_expr.hpp"

#include <cctype>

#include "charclass/errors.hpp"

namespace charclass {

namespace {

class ChowExprParser {
public:
    ChowExprParser(const std::string& text, const Ambient& ambient)
        : text_(text), amb_(ambient) {}

    ChowClass run() {
        ChowClass v = parse_expr();
        if (peek() != '\0')
            throw ParseError("unexpected character '" + std::string(1, peek()) + "'",
                             pos_);
        return v;
    }

private:
    const std::string& text_;
    const Ambient& amb_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ChowClass parse_expr() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        ChowClass acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    ChowClass parse_term() {
        ChowClass acc = parse_power();
        while (eat('*')) acc = acc * parse_power();
        return acc;
    }

    ChowClass parse_power() {
        ChowClass base = parse_primary();
        if (eat('^')) {
            std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("exponent must be a nonnegative integer literal", at);
            return base.pow(parse_uint());
        }
        return base;
    }

    ChowClass parse_primary() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            eat('(');
            ChowClass inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ChowClass::scalar(amb_, parse_uint());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = parse_ident();
            if (name == "inv") {
                if (!eat('(')) throw ParseError("expected '(' after inv", pos_);
                ChowClass inner = parse_expr();
                if (!eat(')')) throw ParseError("expected ')'", pos_);
                return inv_unit(inner);
            }
            if (name == "h") return ChowClass::hyperplane(amb_);
            if (name == "e") {
                if (amb_.m == 0)
                    throw ParseError("no exceptional divisor in " + amb_.to_string(), at);
                if (amb_.m != 1)
                    throw ParseError("'e' is ambiguous with several centers; use e1..e" +
                                         std::to_string(amb_.m),
                                     at);
                return ChowClass::exceptional(amb_, 0);
            }
            if (name.size() >= 2 && name[0] == 'e') {
                bool digits = true;
                for (std::size_t i = 1; i < name.size(); ++i)
                    digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
                if (digits) {
                    int idx = std::stoi(name.substr(1));
                    if (idx < 1 || idx > amb_.m)
                        throw ParseError("no exceptional divisor '" + name + "' in " +
                                             amb_.to_string(),
                                         at);
                    return ChowClass::exceptional(amb_, idx - 1);
                }
            }
            throw ParseError("unknown generator '" + name + "'", at);
        }
        throw ParseError("expected a literal, generator, or '('", at);
    }

    int parse_uint() {
        skip_ws();
        std::size_t at = pos_;
        long long v = 0;
        bool any = false;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("integer literal too large", at);
            ++pos_;
            any = true;
        }
        if (!any) throw ParseError("expected a number", at);
        return static_cast<int>(v);
    }

    std::string parse_ident() {
        skip_ws();
        std::string name;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++pos_;
            } else {
                break;
            }
        }
        return name;
    }
};

}  // namespace

ChowClass eval_chow_expr(const std::string& text, const Ambient& ambient) {
    return ChowExprParser(text, ambient).run();
}

}  // namespace charclass
