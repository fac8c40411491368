#include "csa/poly_io.hpp"

#include <cctype>

#include "csa/error.hpp"

namespace csa {

std::vector<std::string> to_coeff_strings(const RatPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

RatPoly from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(parse_rat(s));
    return RatPoly(std::move(v));
}

namespace {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*     (juxtaposition multiplies)
//   factor := atom ('^' integer)?
//   atom   := integer | 't' | '(' expr ')'
class Parser {
   public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatPoly parse() {
        RatPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("end of input");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw Error(ErrorKind::ParseError, "parse error at offset " + std::to_string(pos_) + " in '" +
                                               std::string(s_) + "': expected " + expected +
                                               " (grammar: sums of products of rationals, t, "
                                               "parenthesized terms and ^integer powers)");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatPoly expr() {
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
        RatPoly acc = term();
        if (negate) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            bool minus = s_[pos_++] == '-';
            RatPoly rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    bool starts_atom() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(';
    }

    RatPoly term() {
        RatPoly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '/') {
                ++pos_;
                RatPoly d = factor();
                if (d.degree() != 0) fail("a nonzero constant divisor");
                acc *= 1 / d.leading();
            } else if (starts_atom()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    RatPoly factor() {
        RatPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            Int e = integer();
            if (e > 4096) fail("an exponent of at most 4096");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Int integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("an integer");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    RatPoly atom() {
        char c = peek();
        if (c == 't') {
            ++pos_;
            return RatPoly::t();
        }
        if (c == '(') {
            ++pos_;
            RatPoly inner = expr();
            if (peek() != ')') fail("')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatPoly::constant(Rat(integer()));
        fail("an integer, 't' or '('");
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace csa
