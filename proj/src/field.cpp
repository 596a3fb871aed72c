#include "qovar/field.hpp"

#include <sstream>

namespace qovar {

FieldElem::FieldElem(Rational r0, Rational rI, Rational rR, Rational rIR) : c0_(std::move(r0)) {
    if (!rI.is_zero() || !rR.is_zero() || !rIR.is_zero())
        ext_ = std::make_unique<Ext>(Ext{std::move(rI), std::move(rR), std::move(rIR)});
}

const Rational& FieldElem::rat() const {
    if (ext_) throw Error("field: element is not rational");
    return c0_;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    FieldElem r(a.c0_ + b.c0_);
    if (a.ext_ || b.ext_) {
        auto e = std::make_unique<FieldElem::Ext>();
        for (int k = 0; k < 3; ++k)
            (*e)[k] = (a.ext_ ? (*a.ext_)[k] : Rational()) + (b.ext_ ? (*b.ext_)[k] : Rational());
        r.ext_ = std::move(e);
        r.normalize();
    }
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    FieldElem r(a.c0_ - b.c0_);
    if (a.ext_ || b.ext_) {
        auto e = std::make_unique<FieldElem::Ext>();
        for (int k = 0; k < 3; ++k)
            (*e)[k] = (a.ext_ ? (*a.ext_)[k] : Rational()) - (b.ext_ ? (*b.ext_)[k] : Rational());
        r.ext_ = std::move(e);
        r.normalize();
    }
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (!a.ext_ && !b.ext_) return FieldElem(a.c0_ * b.c0_);
    const Rational &a0 = a.c0_, &b0 = b.c0_;
    Rational a1 = a.c(1), a2 = a.c(2), a3 = a.c(3);
    Rational b1 = b.c(1), b2 = b.c(2), b3 = b.c(3);
    Rational two(2);
    // basis products: I^2 = -1, R^2 = 2, (IR)^2 = -2, I*R = IR, I*IR = -R, R*IR = 2I
    Rational e0 = a0 * b0 - a1 * b1 + two * (a2 * b2) - two * (a3 * b3);
    Rational e1 = a0 * b1 + a1 * b0 + two * (a2 * b3) + two * (a3 * b2);
    Rational e2 = a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1;
    Rational e3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    return FieldElem(std::move(e0), std::move(e1), std::move(e2), std::move(e3));
}

FieldElem FieldElem::operator-() const {
    FieldElem r(-c0_);
    if (ext_) {
        r.ext_ = std::make_unique<Ext>(Ext{-(*ext_)[0], -(*ext_)[1], -(*ext_)[2]});
    }
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error("field: inverse of zero");
    if (!ext_) return FieldElem(c0_.inverse());
    // conj_I then conj_R bring the norm down to Q:
    //   y = conj_I(x), z = x*y in Q(R), w = conj_R(z), x*y*w in Q.
    FieldElem y(c0_, -(*ext_)[0], (*ext_)[1], -(*ext_)[2]);
    FieldElem z = *this * y;
    FieldElem w(z.c0_, Rational(), -z.c(2), Rational());
    FieldElem n = z * w;  // rational by construction
    return y * w * FieldElem(n.rat().inverse());
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.c0_ != b.c0_) return false;
    if (!a.ext_ && !b.ext_) return true;
    for (int k = 1; k < 4; ++k)
        if (a.c(k) != b.c(k)) return false;
    return true;
}

std::string FieldElem::str() const {
    if (!ext_) return c0_.str();
    static const char* units[3] = {"I", "R", "I*R"};
    std::ostringstream os;
    os << "(";
    bool first = true;
    if (!c0_.is_zero()) {
        os << c0_.str();
        first = false;
    }
    for (int k = 0; k < 3; ++k) {
        const Rational& c = (*ext_)[k];
        if (c.is_zero()) continue;
        if (first) {
            os << c.str() << "*" << units[k];
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ") << c.abs().str() << "*" << units[k];
        }
    }
    os << ")";
    return os.str();
}

FieldElem FieldElem::parse(const std::string& s) {
    if (s.empty()) throw Error("field: empty string");
    if (s.front() != '(') return FieldElem(Rational::parse(s));
    if (s.back() != ')') throw Error("field: unbalanced parentheses in '" + s + "'");
    std::string body = s.substr(1, s.size() - 2);
    // split into signed components at top level (no nested parens inside)
    FieldElem out;
    size_t i = 0;
    bool first = true;
    while (i < body.size()) {
        int sign = 1;
        while (i < body.size() && body[i] == ' ') ++i;
        if (!first || body[i] == '+' || body[i] == '-') {
            if (i >= body.size() || (body[i] != '+' && body[i] != '-'))
                throw Error("field: expected sign in '" + s + "'");
            sign = body[i] == '-' ? -1 : 1;
            ++i;
            while (i < body.size() && body[i] == ' ') ++i;
        }
        size_t j = i;
        while (j < body.size() && body[j] != ' ') ++j;
        std::string piece = body.substr(i, j - i);
        i = j;
        first = false;
        // piece is RAT, RAT*I, RAT*R or RAT*I*R
        int unit = 0;  // 0:1 1:I 2:R 3:IR
        if (piece.size() >= 4 && piece.compare(piece.size() - 4, 4, "*I*R") == 0) {
            unit = 3;
            piece.resize(piece.size() - 4);
        } else if (piece.size() >= 2 && piece.compare(piece.size() - 2, 2, "*I") == 0) {
            unit = 1;
            piece.resize(piece.size() - 2);
        } else if (piece.size() >= 2 && piece.compare(piece.size() - 2, 2, "*R") == 0) {
            unit = 2;
            piece.resize(piece.size() - 2);
        }
        Rational r = Rational::parse(piece);
        if (sign < 0) r = -r;
        Rational comps[4];
        comps[unit] = r;
        out += FieldElem(comps[0], comps[1], comps[2], comps[3]);
    }
    return out;
}

}  // namespace qovar
