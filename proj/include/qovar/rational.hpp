#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "qovar/error.hpp"

namespace qovar {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Values whose numerator and denominator fit in int64 are stored inline;
// anything larger lives in a heap mpq_class (marked by den_ == 0).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q) { adopt(q); }
    Rational(const Rational& o) { copy_from(o); }
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
        o.num_ = 0;
        o.den_ = 1;
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            destroy();
            copy_from(o);
        }
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) {
            destroy();
            num_ = o.num_;
            den_ = o.den_;
            o.num_ = 0;
            o.den_ = 1;
        }
        return *this;
    }
    ~Rational() { destroy(); }

    bool is_zero() const { return den_ > 0 ? num_ == 0 : false; }
    bool is_one() const { return den_ == 1 && num_ == 1; }
    bool is_integer() const { return den_ > 0 ? den_ == 1 : big().get_den() == 1; }
    int sign() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    mpq_class to_mpq() const {
        if (den_ > 0) {
            mpq_class q;
            q = make_mpq(num_, den_);
            return q;
        }
        return big();
    }

    // "p" for integers, "p/q" otherwise
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    std::int64_t num_;
    std::int64_t den_;  // > 0: inline value; == 0: num_ holds an mpq_class*

    const mpq_class& big() const { return *reinterpret_cast<const mpq_class*>(num_); }
    mpq_class& big() { return *reinterpret_cast<mpq_class*>(num_); }
    void destroy() {
        if (den_ == 0) delete reinterpret_cast<mpq_class*>(num_);
    }
    void copy_from(const Rational& o) {
        if (o.den_ == 0) {
            num_ = reinterpret_cast<std::int64_t>(new mpq_class(o.big()));
            den_ = 0;
        } else {
            num_ = o.num_;
            den_ = o.den_;
        }
    }
    void adopt(const mpq_class& q);  // canonicalize + demote if it fits
    static mpq_class make_mpq(std::int64_t n, std::int64_t d);
    static Rational from_i128(__int128 n, __int128 d);

    friend struct RationalOps;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace qovar
