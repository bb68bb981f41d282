#include "defkit/parser.hpp"

#include <cctype>

namespace defkit {

namespace {

class Parser {
public:
    Parser(const std::string& src, const RingPtr& ring) : src_(src), ring_(ring) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& src_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::SyntaxError,
                    what + " at column " + std::to_string(pos_ + 1));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    Polynomial expr() {
        bool neg = accept('-');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            std::uint64_t n = natural();
            Polynomial acc = Polynomial::constant(ring_, Rational(1));
            for (std::uint64_t i = 0; i < n; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("expected number, variable or '('");
    }

    std::uint64_t natural() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected exponent");
        std::uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    Polynomial rational() {
        Integer num = integer_digits();
        if (accept('/')) {
            std::size_t den_col = pos_;
            Integer den = integer_digits();
            if (sgn(den) == 0)
                throw Error(ErrorKind::ZeroDenominator,
                            "zero denominator at column " + std::to_string(den_col + 1));
            Rational r(num, den);
            r.canonicalize();
            return Polynomial::constant(ring_, r);
        }
        return Polynomial::constant(ring_, Rational(num));
    }

    Integer integer_digits() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected digits");
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits += src_[pos_++];
        }
        return Integer(digits);
    }

    Polynomial variable() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            name += src_[pos_++];
        }
        std::size_t idx = ring_->index_of(name);
        if (idx == Ring::npos)
            throw Error(ErrorKind::UnknownVariable,
                        "unknown variable '" + name + "' at column " + std::to_string(start + 1));
        return Polynomial::variable(ring_, idx);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& src, const RingPtr& ring) {
    return Parser(src, ring).run();
}

} // namespace defkit
