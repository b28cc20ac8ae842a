#include "glmn/parser.hpp"

#include <cctype>

namespace glmn {

namespace {

class Parser {
public:
    Parser(const std::string& text, const GenericMatrix& gm) : s_(text), gm_(gm) {}

    SuperElem run() {
        SuperElem e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    SuperElem expr() {
        skip_ws();
        bool negate = accept('-');
        SuperElem e = term();
        if (negate) e = -e;
        for (;;) {
            skip_ws();
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    SuperElem term() {
        SuperElem e = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                e *= factor();
            else
                return e;
        }
    }

    SuperElem factor() {
        skip_ws();
        std::size_t at = pos_;
        auto [e, is_det, diag] = atom();
        skip_ws();
        if (accept('^')) {
            long exp = integer();
            if (exp < 0) {
                if (!is_det)
                    throw ParseError("negative exponents are only allowed on D1 and D2", at);
                return SuperElem::constant(gm_.ring(), 1)
                    .times_det_power(diag, static_cast<int>(exp));
            }
            return e.pow(static_cast<int>(exp));
        }
        return e;
    }

    struct Atom {
        SuperElem e;
        bool is_det = false;
        Block diag = Block::I11;
        Atom(SuperElem el) : e(std::move(el)) {}
        Atom(SuperElem el, Block d) : e(std::move(el)), is_det(true), diag(d) {}
    };

    Atom atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SuperElem e = expr();
            expect(')');
            return Atom(std::move(e));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Atom(rational());
        if (c == 'x' || c == 'y' || c == 'A') {
            ++pos_;
            auto [i, j] = index_pair();
            const RingSpec& ring = gm_.ring();
            if (c == 'x') return Atom(SuperElem::variable(ring, i, j));
            if (c == 'y') return Atom(gm_.y(i, j));
            return Atom(gm_.cofactor(i, j));
        }
        if (c == 'D') {
            ++pos_;
            if (accept('1')) return Atom(gm_.det(Block::I11), Block::I11);
            if (accept('2')) return Atom(gm_.det(Block::I22), Block::I22);
            throw ParseError("expected D1 or D2", pos_);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    SuperElem rational() {
        long num = digits();
        if (accept('/')) {
            std::size_t at = pos_;
            long den = digits();
            if (den == 0) throw ParseError("zero denominator", at);
            const unsigned p = gm_.ring().characteristic;
            if (p == 0) return SuperElem::constant(gm_.ring(), Scalar::rational(num, den));
            return SuperElem::constant(
                gm_.ring(), Scalar::reduce_mod(mpq_class(num, den), p));
        }
        return SuperElem::constant(gm_.ring(), num);
    }

    long integer() {
        skip_ws();
        bool neg = accept('-');
        long v = digits();
        return neg ? -v : v;
    }

    long digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return std::stol(s_.substr(start, pos_ - start));
    }

    std::pair<int, int> index_pair() {
        expect('[');
        long i = digits();
        expect(',');
        long j = digits();
        expect(']');
        gm_.ring().check_index(static_cast<int>(i), static_cast<int>(j));
        return {static_cast<int>(i), static_cast<int>(j)};
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    const std::string& s_;
    const GenericMatrix& gm_;
    std::size_t pos_ = 0;
};

}  // namespace

SuperElem parse_expr(const std::string& text, const GenericMatrix& gm) {
    return Parser(text, gm).run();
}

SuperElem parse_expr(const std::string& text, RingSpec ring) {
    GenericMatrix gm(ring);
    return parse_expr(text, gm);
}

}  // namespace glmn
