#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ultraspec {

using Int = boost::multiprecision::cpp_int;

/**
 * Exact rational number over arbitrary-precision integers.
 *
 * Always stored canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
 * Every operation in this library is exact; there is no floating point
 * anywhere, because the ultrametric identities we check are equalities.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}

    // Canonicalizing constructor: sign moves to the numerator, gcd cancels.
    Rational(const Int& n, const Int& d) {
        if (d == 0) throw std::domain_error("division by zero");
        v_ = boost::multiprecision::cpp_rational(n);
        v_ /= boost::multiprecision::cpp_rational(d);
    }
    Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return Rational(denominator(), numerator());
    }

    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    // Canonical text form: "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Int pow_int(Int base, unsigned long long e) {
    Int r = 1;
    while (e) {
        if (e & 1ULL) r *= base;
        base *= base;
        e >>= 1ULL;
    }
    return r;
}

// p^k for integer k (negative exponents give 1/p^(-k)).
inline Rational pow_rational(const Rational& base, long long e) {
    if (e >= 0) {
        Rational r = 1;
        Rational b = base;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1ULL) r *= b;
            b *= b;
            k >>= 1ULL;
        }
        return r;
    }
    return pow_rational(base.reciprocal(), -e);
}

} // namespace ultraspec
