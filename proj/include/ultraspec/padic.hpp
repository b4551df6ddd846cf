#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ultraspec/valuation.hpp"

namespace ultraspec {

/**
 * Finite-precision p-adic expansion: the value
 *
 *     sum_i digits[i] * p^(shift + i)
 *
 * known modulo p^N with absolute precision N = shift + len(digits).
 * Digits are canonical in [0, p), so equality at a common precision is
 * a digit comparison. The canonical form puts shift at the exact
 * valuation; the leading digit is zero only when the value is
 * indistinguishable from zero at this precision (valuation unresolved).
 */
struct PAdicApprox {
    PAdicContext ctx;
    long long shift = 0;
    std::vector<unsigned long long> digits;

    long long precision() const {
        return shift + static_cast<long long>(digits.size());
    }

    bool digits_all_zero() const {
        return std::all_of(digits.begin(), digits.end(),
                           [](unsigned long long d) { return d == 0; });
    }

    // Valuation lower bound visible at this precision: the position of
    // the first nonzero digit, or the full precision when all are zero.
    long long apparent_valuation() const {
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (digits[i] != 0) return shift + static_cast<long long>(i);
        return precision();
    }

    // The canonical representative as an exact rational.
    Rational value() const {
        Rational acc = 0;
        Rational pw = pow_rational(Rational(ctx.p()), shift);
        const Rational p(ctx.p());
        for (unsigned long long d : digits) {
            if (d != 0) acc += Rational(static_cast<long long>(d)) * pw;
            pw *= p;
        }
        return acc;
    }
};

namespace detail {

// Inverse of b mod p for prime p and p not dividing b.
inline Int mod_inverse(const Int& b, const Int& p) {
    Int r0 = p, r1 = ((b % p) + p) % p;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("not invertible mod p");
    return ((t0 % p) + p) % p;
}

} // namespace detail

/**
 * Canonical expansion of a rational to absolute precision N, i.e. the
 * result differs from x by at most p^(-N) in |.|_p. Negative-valuation
 * inputs get a negative shift.
 */
inline PAdicApprox approx_from_rational(const PAdicContext& ctx, const Rational& x, long long N) {
    const ValuationValue v = vp_rat(ctx, x);
    if (v.is_infinity() || v.exponent() >= N) {
        // Indistinguishable from zero at this precision.
        const long long shift = std::min(N, 0LL);
        return PAdicApprox{ctx, shift,
                           std::vector<unsigned long long>(static_cast<std::size_t>(N - shift), 0)};
    }

    const long long shift = v.exponent();
    const auto len = static_cast<std::size_t>(N - shift);

    // Write x = p^shift * a/b with p dividing neither a nor b, then
    // peel digits: d = a * b^(-1) mod p, a <- (a - d*b)/p.
    Int a = x.numerator();
    Int b = x.denominator();
    const Int& p = ctx.p();
    for (long long k = 0; k < shift; ++k) a /= p;
    for (long long k = 0; k > shift; --k) b /= p;
    const Int binv = detail::mod_inverse(b, p);

    std::vector<unsigned long long> digits(len, 0);
    Int r = a;
    for (std::size_t i = 0; i < len; ++i) {
        Int d = ((r * binv) % p + p) % p;
        digits[i] = d.convert_to<unsigned long long>();
        r = (r - d * b) / p;
    }
    return PAdicApprox{ctx, shift, std::move(digits)};
}

// Both operands must share the prime.
inline void require_same_context(const PAdicApprox& a, const PAdicApprox& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("mismatched p-adic contexts");
}

/**
 * Sum, correct to the smaller of the two precisions.
 */
inline PAdicApprox approx_add(const PAdicApprox& a, const PAdicApprox& b) {
    require_same_context(a, b);
    const long long N = std::min(a.precision(), b.precision());
    return approx_from_rational(a.ctx, a.value() + b.value(), N);
}

/**
 * Product. If a is known mod p^Na and b mod p^Nb, the product of the
 * true values is pinned mod p^min(Na + v(b), Nb + v(a)).
 */
inline PAdicApprox approx_mul(const PAdicApprox& a, const PAdicApprox& b) {
    require_same_context(a, b);
    const long long N = std::min(a.precision() + b.apparent_valuation(),
                                 b.precision() + a.apparent_valuation());
    return approx_from_rational(a.ctx, a.value() * b.value(), N);
}

// Same residue class mod p^min(Na, Nb)?
inline bool equal_at_shared_precision(const PAdicApprox& a, const PAdicApprox& b) {
    require_same_context(a, b);
    const long long N = std::min(a.precision(), b.precision());
    const ValuationValue v = vp_rat(a.ctx, a.value() - b.value());
    return v >= ValuationValue::finite(N);
}

/**
 * A guaranteed lower bound g(n) on term valuations, with g monotone
 * and unbounded. Finite prefixes never prove convergence; only a
 * declared tail does.
 */
struct TailBound {
    std::function<long long(std::size_t)> bound;
};

/**
 * Deterministic sequence of rationals, optionally with a declared tail
 * guarantee V_p(term(n)) >= g(n).
 */
struct SequenceOracle {
    std::function<Rational(std::size_t)> term;
    std::optional<TailBound> tail;
};

// Partial sums S_n = term(0) + ... + term(n). A tail bound on the
// terms transfers to the consecutive differences S_(n+1) - S_n.
inline SequenceOracle partial_sums(const SequenceOracle& seq) {
    SequenceOracle out;
    out.term = [term = seq.term](std::size_t n) {
        Rational s = 0;
        for (std::size_t k = 0; k <= n; ++k) s += term(k);
        return s;
    };
    if (seq.tail)
        out.tail = TailBound{[g = seq.tail->bound](std::size_t n) { return g(n + 1); }};
    return out;
}

enum class CauchyVerdict { Certified, PrefixConsistent, PrefixRefuted };

inline std::string to_string(CauchyVerdict v) {
    switch (v) {
        case CauchyVerdict::Certified: return "cauchy-certified";
        case CauchyVerdict::PrefixConsistent: return "prefix-consistent";
        case CauchyVerdict::PrefixRefuted: return "prefix-refuted";
    }
    throw std::logic_error("unreachable");
}

struct CauchyReport {
    std::vector<ValuationValue> diff_valuations; // V_p(x_(n+1) - x_n) over the prefix
    CauchyVerdict verdict;
    std::optional<std::size_t> violation_index;
};

/**
 * Consecutive-difference test over a finite prefix of the sequence.
 *
 * A sequence is Cauchy exactly when its consecutive differences tend
 * to zero, but a finite prefix can never establish that on its own:
 * the verdict is "cauchy-certified" only when the oracle declares a
 * tail bound, here read as a guarantee on the consecutive differences
 * V_p(x_(n+1) - x_n) >= g(n). A prefix can refute a declared tail; it
 * can never refute Cauchyness without one.
 */
inline CauchyReport cauchy_check(const PAdicContext& ctx, const SequenceOracle& seq,
                                 std::size_t prefix_len) {
    if (prefix_len < 2) throw std::invalid_argument("prefix must have at least 2 terms");

    CauchyReport rep{{}, CauchyVerdict::PrefixConsistent, std::nullopt};
    Rational prev = seq.term(0);
    for (std::size_t n = 0; n + 1 < prefix_len; ++n) {
        const Rational next = seq.term(n + 1);
        rep.diff_valuations.push_back(vp_rat(ctx, next - prev));
        prev = next;
    }

    if (!seq.tail) return rep;

    for (std::size_t n = 0; n < rep.diff_valuations.size(); ++n) {
        if (rep.diff_valuations[n] < ValuationValue::finite(seq.tail->bound(n))) {
            rep.verdict = CauchyVerdict::PrefixRefuted;
            rep.violation_index = n;
            return rep;
        }
    }
    rep.verdict = CauchyVerdict::Certified;
    return rep;
}

/**
 * Partial sum of a series, certified correct to the target precision.
 *
 * Terms are added until the declared tail guarantees every remaining
 * term has valuation >= target, so the discarded tail cannot move the
 * result at this precision. Without a tail bound, or when max_terms
 * runs out first, convergence cannot be certified. A term observed to
 * violate the declared bound also aborts: a false certificate would be
 * worse than none.
 */
inline PAdicApprox sum_series(const PAdicContext& ctx, const SequenceOracle& seq,
                              long long target_precision, std::size_t max_terms) {
    if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
    if (!seq.tail)
        throw std::domain_error("convergence not certified at this precision");

    std::optional<std::size_t> cutoff;
    for (std::size_t n = 0; n <= max_terms; ++n) {
        if (seq.tail->bound(n) >= target_precision) {
            cutoff = n;
            break;
        }
    }
    if (!cutoff || *cutoff > max_terms)
        throw std::domain_error("convergence not certified at this precision");

    Rational sum = 0;
    for (std::size_t n = 0; n < *cutoff; ++n) {
        const Rational t = seq.term(n);
        if (vp_rat(ctx, t) < ValuationValue::finite(seq.tail->bound(n)))
            throw std::domain_error("declared tail bound violated at index " + std::to_string(n));
        sum += t;
    }
    return approx_from_rational(ctx, sum, target_precision);
}

} // namespace ultraspec
