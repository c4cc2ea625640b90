// Recursive-descent parser for the polynomial grammar:
//   expr := '-'? term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base := identifier | rational | '(' expr ')'
//   rational := int ('/' uint)?
// 'i' names sqrt(-1) when the coefficient field has one.
#include <cctype>

#include "degenlab/poly.hpp"

namespace degenlab {

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = eat('-');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            uint32_t e = parse_uint();
            return b.pow(e);
        }
        return b;
    }

    Poly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
        fail("expected identifier, number or '('");
    }

    Poly identifier() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name == "i") {
            if (!ring_->field().has_sqrt_minus_one())
                throw ParseError("'i' used but the coefficient field has no sqrt(-1)", start);
            return Poly::constant(ring_, ring_->field().imaginary_unit());
        }
        if (ring_->var_index(name) < 0)
            throw ParseError("unknown variable name '" + name + "'", start);
        return Poly::variable(ring_, name);
    }

    uint32_t parse_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected unsigned integer");
        unsigned long v = std::stoul(s_.substr(start, pos_ - start));
        return static_cast<uint32_t>(v);
    }

    Poly rational() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        mpz_class num(s_.substr(start, pos_ - start));
        mpz_class den(1);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) fail("expected denominator");
            den = mpz_class(s_.substr(dstart, pos_ - dstart));
            if (den == 0) throw ParseError("division by zero in rational literal", dstart);
        }
        mpq_class q(num, den);
        q.canonicalize();
        return Poly::constant(ring_, ring_->field().from_mpq(q));
    }

    const std::string& s_;
    RingPtr ring_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace degenlab
