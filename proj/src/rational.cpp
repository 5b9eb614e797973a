#include "hk/rational.hpp"

#include <limits>
#include <numeric>

namespace hk {

namespace {

long long narrow(__int128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw MathError(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(__int128 n, __int128 d, const char* what) {
    if (d == 0) throw MathError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, what), narrow(d, what));
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw MathError("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::pow_int(long long base, long long e) {
    bool invert = e < 0;
    if (invert) e = -e;
    __int128 v = 1;
    for (long long i = 0; i < e; ++i) {
        v *= base;
        narrow(v, "integer power");
    }
    long long w = narrow(v, "integer power");
    return invert ? Rational(1, w) : Rational(w, 1);
}

Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make(n, d, "addition");
}

Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make(n, d, "subtraction");
}

Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make(n, d, "multiplication");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw MathError("division by zero rational");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return make(n, d, "division");
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hk
