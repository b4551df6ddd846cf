#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ultraspec/rational.hpp"

namespace ultraspec {

/**
 * Dense univariate polynomial over the rationals.
 *
 * Coefficients are stored lowest degree first; the highest stored
 * coefficient is nonzero, and the zero polynomial is the empty list
 * (degree -1). Degrees at desk scale stay small, so a dense list wins
 * on simplicity over sparse representations.
 */
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }

    // (x - r), handy for building test polynomials from roots.
    static Poly linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }

    Rational leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == Rational(1); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Rational& s) {
        if (s.is_zero()) return Poly();
        Poly r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("zero polynomial cannot be made monic");
        return *this * leading().reciprocal();
    }

    // Human-readable form, e.g. "x^2 - 1".
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/**
 * Exact division with remainder: a = q*b + r with deg r < deg b or r = 0.
 */
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};

    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational lead_inv = b.leading().reciprocal();
    const auto db = static_cast<std::size_t>(b.degree());

    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const Rational f = rem[i] * lead_inv;
        quo[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] -= f * b.coeff(j);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline bool poly_divides(const Poly& d, const Poly& a) {
    return poly_divmod(a, d).second.is_zero();
}

// Monic gcd via the Euclidean algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/**
 * Largest m with p^m | f, by repeated exact division.
 *
 * p must be monic of degree >= 1. Irreducibility of p is the caller's
 * responsibility: for reducible p the derived valuation axioms can fail.
 */
inline unsigned factor_multiplicity(const Poly& f, const Poly& p) {
    if (f.is_zero()) throw std::domain_error("multiplicity undefined for zero");
    if (p.degree() < 1) throw std::invalid_argument("divisor must have degree >= 1");
    if (!p.is_monic()) throw std::invalid_argument("divisor must be monic");

    unsigned m = 0;
    Poly g = f;
    while (true) {
        auto [q, r] = poly_divmod(g, p);
        if (!r.is_zero()) return m;
        ++m;
        g = std::move(q);
    }
}

inline std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        const bool first = out.empty();
        const Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) out += "-";
        } else {
            out += a.sign() < 0 ? " - " : " + ";
        }
        const bool unit = (mag == Rational(1));
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!unit) out += mag.to_string() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

/**
 * All rational roots of a nonzero polynomial, with multiplicities,
 * found by candidate testing over divisors of the (integerized)
 * constant and leading coefficients, then deflation.
 */
inline std::vector<std::pair<Rational, unsigned>> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("rational roots undefined for zero polynomial");

    std::vector<std::pair<Rational, unsigned>> roots;
    Poly g = f;

    // Roots at zero first: strip factors of x.
    unsigned at_zero = 0;
    while (!g.is_zero() && g.coeff(0).is_zero()) {
        g = poly_divmod(g, Poly::x()).first;
        ++at_zero;
    }
    if (at_zero > 0) roots.emplace_back(Rational(0), at_zero);
    if (g.degree() < 1) return roots;

    // Primitive integer coefficients: clear denominators, strip the content.
    Int den_lcm = 1;
    for (const auto& a : g.coeffs()) {
        Int d = a.denominator();
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    std::vector<Int> c;
    c.reserve(g.coeffs().size());
    for (const auto& a : g.coeffs()) c.push_back((a * Rational(den_lcm)).numerator());
    Int content = 0;
    for (const Int& x : c) content = boost::multiprecision::gcd(content, x);
    for (Int& x : c) x /= content;
    const std::size_t deg = c.size() - 1;

    // Values at +-1: p/q can be a root only if p-q | g(1) and p+q | g(-1).
    Int g_at_1 = 0, g_at_m1 = 0;
    for (std::size_t i = 0; i <= deg; ++i) {
        g_at_1 += c[i];
        g_at_m1 += (i % 2 == 0) ? c[i] : -c[i];
    }
    const auto divides = [](const Int& a, const Int& b) { return a == 0 ? b == 0 : b % a == 0; };

    auto divisors = [](Int n) {
        n = boost::multiprecision::abs(n);
        std::vector<Int> out;
        const Int r = boost::multiprecision::sqrt(n);
        for (Int d = 1; d <= r; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        }
        return out;
    };

    // Integer Horner: p/q is a root iff sum_i c_i p^i q^(deg-i) = 0.
    const auto is_root = [&](const Int& p, const Int& q) {
        Int v = c[deg];
        Int qk = 1;
        for (std::size_t i = deg; i-- > 0;) {
            qk *= q;
            v = v * p + c[i] * qk;
        }
        return v == 0;
    };

    std::vector<Rational> found;
    for (const Int& pnum : divisors(c.front()))
        for (const Int& q : divisors(c.back())) {
            if (boost::multiprecision::gcd(pnum, q) != 1) continue;
            for (const int sign : {1, -1}) {
                const Int p = sign > 0 ? pnum : Int(-pnum);
                if (!divides(p - q, g_at_1) || !divides(p + q, g_at_m1)) continue;
                if (is_root(p, q)) found.emplace_back(p, q);
            }
        }

    for (const Rational& r : found) {
        unsigned m = 0;
        const Poly lin = Poly::linear_root(r);
        while (g.degree() >= 1 && g.eval(r).is_zero()) {
            g = poly_divmod(g, lin).first;
            ++m;
        }
        roots.emplace_back(r, m);
    }

    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

} // namespace ultraspec
