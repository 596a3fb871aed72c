#include "qovar/rational.hpp"

#include <numeric>
#include <limits>

namespace qovar {

namespace {

using i128 = __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits64(i128 v) { return v >= static_cast<i128>(kMin) && v <= static_cast<i128>(kMax); }

i128 iabs(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    return neg ? mpz_class(-out) : out;
}

}  // namespace

mpq_class Rational::make_mpq(std::int64_t n, std::int64_t d) {
    mpq_class q(to_mpz(n));
    q /= mpq_class(to_mpz(d));
    return q;
}

void Rational::adopt(const mpq_class& q0) {
    mpq_class q(q0);
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
    } else {
        num_ = reinterpret_cast<std::int64_t>(new mpq_class(std::move(q)));
        den_ = 0;
    }
}

Rational Rational::from_i128(i128 n, i128 d) {
    if (d == 0) throw Error("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    if (fits64(n) && fits64(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
    } else {
        mpq_class q(to_mpz(n));
        q /= mpq_class(to_mpz(d));
        r.num_ = reinterpret_cast<std::int64_t>(new mpq_class(std::move(q)));
        r.den_ = 0;
    }
    return r;
}

Rational::Rational(long long n, long long d) : num_(0), den_(1) {
    if (d == 0) throw Error("rational: zero denominator");
    *this = from_i128(n, d);
}

int Rational::sign() const {
    if (den_ > 0) return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
    return sgn(big());
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ > 0 && b.den_ > 0) {
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    Rational r;
    r.adopt(mpq_class(a.to_mpq() + b.to_mpq()));
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ > 0 && b.den_ > 0) {
        i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    Rational r;
    r.adopt(mpq_class(a.to_mpq() - b.to_mpq()));
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ > 0 && b.den_ > 0) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        i128 n = static_cast<i128>(a.num_) * b.num_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    Rational r;
    r.adopt(mpq_class(a.to_mpq() * b.to_mpq()));
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational: division by zero");
    if (a.den_ > 0 && b.den_ > 0) {
        i128 n = static_cast<i128>(a.num_) * b.den_;
        i128 d = static_cast<i128>(a.den_) * b.num_;
        return Rational::from_i128(n, d);
    }
    Rational r;
    r.adopt(mpq_class(a.to_mpq() / b.to_mpq()));
    return r;
}

Rational Rational::operator-() const {
    if (den_ > 0) {
        if (num_ != kMin) {
            Rational r;
            r.num_ = -num_;
            r.den_ = den_;
            return r;
        }
    }
    Rational r;
    r.adopt(mpq_class(-to_mpq()));
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("rational: inverse of zero");
    if (den_ > 0) return from_i128(den_, num_);
    Rational r;
    r.adopt(mpq_class(1 / big()));
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.den_ > 0 && b.den_ > 0) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.den_ == 0 && b.den_ == 0) return a.big() == b.big();
    // canonical form guarantees a big value never equals an inline one
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.den_ > 0 && b.den_ > 0)
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return cmp(a.to_mpq(), b.to_mpq()) < 0;
}

std::string Rational::str() const {
    if (den_ > 0) {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }
    const mpq_class& q = big();
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw Error("rational: empty string");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
        if (!ok) throw Error("rational: bad character in '" + s + "'");
    }
    auto slash = s.find('/');
    try {
        mpq_class q;
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(s));
        } else {
            mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw Error("rational: zero denominator in '" + s + "'");
            q = mpq_class(num) / mpq_class(den);
        }
        Rational r;
        r.adopt(q);
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("rational: cannot parse '" + s + "'");
    }
}

}  // namespace qovar
