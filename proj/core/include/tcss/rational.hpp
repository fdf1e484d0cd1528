#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace tcss {

/* Exact rational with an infinity value, used for fractional filtrations
 * and spectral sequence page indices. Never touches floating point. */
struct Rational {
    long long num = 0;
    long long den = 1; // den == 0 encodes +infinity

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    static Rational infinity() {
        Rational r;
        r.num = 1;
        r.den = 0;
        return r;
    }

    bool is_infinite() const { return den == 0; }

    void normalize() {
        if (den == 0) {
            num = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den == 0 ? 0 : b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        if (is_infinite()) return "inf";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace tcss
