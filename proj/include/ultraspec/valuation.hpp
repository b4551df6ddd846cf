#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ultraspec/rational.hpp"

namespace ultraspec {

/**
 * A prime p fixing the p-adic structure on Q.
 *
 * Primality is checked by deterministic trial division at construction;
 * a composite p would silently break the valuation axioms downstream,
 * so it is rejected up front.
 */
class PAdicContext {
public:
    explicit PAdicContext(Int p) : p_(std::move(p)) {
        if (p_ < 2) throw std::invalid_argument("p must be a prime >= 2");
        for (Int d = 2; d * d <= p_; ++d)
            if (p_ % d == 0) throw std::invalid_argument("p must be prime: " + p_.str());
    }

    explicit PAdicContext(long long p) : PAdicContext(Int(p)) {}

    const Int& p() const { return p_; }

    friend bool operator==(const PAdicContext& a, const PAdicContext& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PAdicContext& a, const PAdicContext& b) { return a.p_ != b.p_; }

private:
    Int p_;
};

/**
 * Value of an additive valuation: a finite integer exponent, or the
 * infinity that marks the zero element.
 *
 * Arithmetic follows the usual conventions: infinity absorbs addition,
 * min(infinity, v) = v, and infinity compares greater than every
 * finite value.
 */
class ValuationValue {
public:
    static ValuationValue finite(long long e) { return ValuationValue(false, e); }
    static ValuationValue infinity() { return ValuationValue(true, 0); }

    bool is_infinity() const { return inf_; }

    long long exponent() const {
        if (inf_) throw std::domain_error("infinite valuation has no exponent");
        return e_;
    }

    friend ValuationValue operator+(const ValuationValue& a, const ValuationValue& b) {
        if (a.inf_ || b.inf_) return infinity();
        return finite(a.e_ + b.e_);
    }

    friend ValuationValue min(const ValuationValue& a, const ValuationValue& b) {
        return a < b ? a : b;
    }

    friend bool operator==(const ValuationValue& a, const ValuationValue& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.e_ == b.e_);
    }
    friend bool operator!=(const ValuationValue& a, const ValuationValue& b) { return !(a == b); }
    friend bool operator<(const ValuationValue& a, const ValuationValue& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.e_ < b.e_;
    }
    friend bool operator<=(const ValuationValue& a, const ValuationValue& b) { return a < b || a == b; }
    friend bool operator>(const ValuationValue& a, const ValuationValue& b) { return b < a; }
    friend bool operator>=(const ValuationValue& a, const ValuationValue& b) { return b <= a; }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(e_); }

private:
    ValuationValue(bool inf, long long e) : inf_(inf), e_(e) {}
    bool inf_;
    long long e_;
};

/**
 * Exact element of the value group {p^k : k in Z} together with 0.
 *
 * Only the exponent is stored; p^k is never approximated by a float.
 * Comparisons and products are integer operations on exponents, which
 * is what makes every ultrametric identity in this library decidable.
 * Zero corresponds to the infinite valuation: PPow(k) <-> Finite(-k).
 */
class AbsValue {
public:
    static AbsValue zero() { return AbsValue(true, 0); }
    static AbsValue ppow(long long k) { return AbsValue(false, k); }
    static AbsValue one() { return ppow(0); }

    static AbsValue from_valuation(const ValuationValue& v) {
        return v.is_infinity() ? zero() : ppow(-v.exponent());
    }

    bool is_zero() const { return zero_; }

    long long exponent() const {
        if (zero_) throw std::domain_error("zero absolute value has no exponent");
        return k_;
    }

    ValuationValue valuation() const {
        return zero_ ? ValuationValue::infinity() : ValuationValue::finite(-k_);
    }

    friend AbsValue operator*(const AbsValue& a, const AbsValue& b) {
        if (a.zero_ || b.zero_) return zero();
        return ppow(a.k_ + b.k_);
    }

    friend bool operator==(const AbsValue& a, const AbsValue& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.k_ == b.k_);
    }
    friend bool operator!=(const AbsValue& a, const AbsValue& b) { return !(a == b); }
    friend bool operator<(const AbsValue& a, const AbsValue& b) {
        if (b.zero_) return false;
        if (a.zero_) return true;
        return a.k_ < b.k_;
    }
    friend bool operator<=(const AbsValue& a, const AbsValue& b) { return a < b || a == b; }
    friend bool operator>(const AbsValue& a, const AbsValue& b) { return b < a; }
    friend bool operator>=(const AbsValue& a, const AbsValue& b) { return b <= a; }

    friend AbsValue max(const AbsValue& a, const AbsValue& b) { return a < b ? b : a; }

    // p^k as an exact rational, for display.
    Rational exact_value(const PAdicContext& ctx) const {
        if (zero_) return Rational(0);
        return pow_rational(Rational(ctx.p()), k_);
    }

    std::string to_string(const PAdicContext& ctx) const {
        return exact_value(ctx).to_string();
    }

private:
    AbsValue(bool z, long long k) : zero_(z), k_(k) {}
    bool zero_;
    long long k_;
};

/**
 * p-adic valuation of an integer: the exact exponent of p in n,
 * infinity for n = 0.
 */
inline ValuationValue vp_int(const PAdicContext& ctx, Int n) {
    if (n == 0) return ValuationValue::infinity();
    long long e = 0;
    Int q, r;
    while (true) {
        boost::multiprecision::divide_qr(n, ctx.p(), q, r);
        if (r != 0) break;
        n = q;
        ++e;
    }
    return ValuationValue::finite(e);
}

// Extension to Q: V_p(t/s) = V_p(t) - V_p(s).
inline ValuationValue vp_rat(const PAdicContext& ctx, const Rational& x) {
    if (x.is_zero()) return ValuationValue::infinity();
    return ValuationValue::finite(vp_int(ctx, x.numerator()).exponent() -
                                  vp_int(ctx, x.denominator()).exponent());
}

// |x|_p = p^(-V_p(x)), exactly, and 0 for x = 0.
inline AbsValue abs_p(const PAdicContext& ctx, const Rational& x) {
    return AbsValue::from_valuation(vp_rat(ctx, x));
}

// Ultrametric distance d(x, y) = |x - y|_p.
inline AbsValue dist_p(const PAdicContext& ctx, const Rational& x, const Rational& y) {
    return abs_p(ctx, x - y);
}

} // namespace ultraspec
