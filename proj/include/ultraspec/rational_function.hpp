#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ultraspec/polynomial.hpp"

namespace ultraspec {

/**
 * Element of the rational function field Q(x), kept in lowest terms.
 *
 * The constructor always cancels the gcd and scales the denominator
 * monic, so place valuations are well-defined on the stored
 * representative. Zero is 0/1.
 */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}

    RationalFunction(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly::constant(1);
            return;
        }
        const Poly g = poly_gcd(num, den);
        num = poly_divmod(num, g).first;
        den = poly_divmod(den, g).first;
        const Rational scale = den.leading().reciprocal();
        num_ = num * scale;
        den_ = den * scale;
    }

    static RationalFunction from_poly(Poly p) {
        return RationalFunction(std::move(p), Poly::constant(1));
    }
    static RationalFunction constant(const Rational& a) {
        return from_poly(Poly::constant(a));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string to_string() const {
        if (den_ == Poly::constant(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    Poly num_;
    Poly den_;
};

} // namespace ultraspec
