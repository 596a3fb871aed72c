#pragma once

#include <array>
#include <memory>
#include <string>

#include "qovar/rational.hpp"

namespace qovar {

// Element of Q(i, sqrt(2)) in the fixed basis {1, I, R, I*R} with
// I^2 = -1, R^2 = 2.  The extension part is heap-allocated and absent
// for plain rationals, which dominate every computation on the catalog.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(long long n) : c0_(n) {}
    FieldElem(const Rational& r) : c0_(r) {}
    FieldElem(Rational r0, Rational rI, Rational rR, Rational rIR);
    FieldElem(const FieldElem& o) : c0_(o.c0_) {
        if (o.ext_) ext_ = std::make_unique<Ext>(*o.ext_);
    }
    FieldElem(FieldElem&&) noexcept = default;
    FieldElem& operator=(const FieldElem& o) {
        if (this != &o) {
            c0_ = o.c0_;
            ext_ = o.ext_ ? std::make_unique<Ext>(*o.ext_) : nullptr;
        }
        return *this;
    }
    FieldElem& operator=(FieldElem&&) noexcept = default;

    static FieldElem i() { return FieldElem(0, 1, 0, 0); }
    static FieldElem sqrt2() { return FieldElem(0, 0, 1, 0); }

    bool is_rational() const { return !ext_; }
    bool is_zero() const { return !ext_ && c0_.is_zero(); }
    bool is_one() const { return !ext_ && c0_.is_one(); }

    const Rational& c0() const { return c0_; }
    Rational c(int k) const {
        if (k == 0) return c0_;
        return ext_ ? (*ext_)[k - 1] : Rational();
    }
    // requires is_rational()
    const Rational& rat() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
    FieldElem operator-() const;
    FieldElem inverse() const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // "p/q" for rationals, "(c0 + c1*I + c2*R + c3*I*R)" otherwise,
    // zero components omitted
    std::string str() const;
    static FieldElem parse(const std::string& s);

private:
    using Ext = std::array<Rational, 3>;  // coefficients of I, R, I*R

    Rational c0_;
    std::unique_ptr<Ext> ext_;

    void normalize() {
        if (ext_ && (*ext_)[0].is_zero() && (*ext_)[1].is_zero() && (*ext_)[2].is_zero())
            ext_.reset();
    }
};

}  // namespace qovar
