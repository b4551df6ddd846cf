#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ultraspec/function_field.hpp"
#include "ultraspec/padic.hpp"
#include "ultraspec/perturbation.hpp"
#include "ultraspec/spectral.hpp"
#include "ultraspec/ultrametric.hpp"
#include "ultraspec/valuation.hpp"
#include "ultraspec/vectors.hpp"

namespace ultraspec {

/**
 * Seeded deterministic generator. mt19937_64 output is pinned by the
 * standard and ranges are reduced by modulo, so a (seed, cases) pair
 * reproduces the exact same inputs on every platform — unlike
 * uniform_int_distribution, whose mapping is implementation-defined.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(unsigned num, unsigned den) { return raw() % den < num; }

    Rational rational(long long bound) {
        return Rational(Int(range(-bound, bound)), Int(range(1, bound)));
    }

    Rational nonzero_rational(long long bound) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937_64 eng_;
};

struct PropResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    bool passed() const { return failures == 0; }
};

namespace gen {

inline const std::vector<long long>& small_primes() {
    static const std::vector<long long> ps{2, 3, 5};
    return ps;
}

inline PAdicContext random_ctx(Rng& rng) {
    const auto& ps = small_primes();
    return PAdicContext(Int(ps[static_cast<std::size_t>(rng.range(0, 2))]));
}

inline Poly random_poly(Rng& rng, int max_deg, long long bound, bool allow_zero) {
    if (allow_zero && rng.chance(1, 10)) return Poly();
    const int deg = static_cast<int>(rng.range(0, max_deg));
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = rng.rational(bound);
    c.back() = rng.nonzero_rational(bound);
    return Poly(std::move(c));
}

inline RationalFunction random_rf(Rng& rng, int max_deg, long long bound) {
    return RationalFunction(random_poly(rng, max_deg, bound, true),
                            random_poly(rng, max_deg, bound, false));
}

// Monic irreducibles used as finite places.
inline const std::vector<Poly>& fixed_places() {
    static const std::vector<Poly> ps{
        Poly::x(),
        Poly({Rational(-1), Rational(1)}),            // x - 1
        Poly({Rational(1), Rational(1)}),             // x + 1
        Poly({Rational(1), Rational(0), Rational(1)}) // x^2 + 1
    };
    return ps;
}

inline Vec random_vec(Rng& rng, std::size_t t, long long bound) {
    Vec x(t);
    for (auto& c : x) c = rng.rational(bound);
    return x;
}

inline WeightSeq random_weights(Rng& rng, std::size_t t, long long bound) {
    std::vector<Rational> w(t);
    for (auto& c : w) c = rng.nonzero_rational(bound);
    return WeightSeq(std::move(w));
}

// alpha = p^e * (a/b) with p dividing neither a nor b, so v_p >= 1.
inline Rational random_alpha(Rng& rng, const PAdicContext& ctx) {
    const long long p = ctx.p().convert_to<long long>();
    Rational unit;
    do {
        unit = rng.nonzero_rational(7);
    } while (!(vp_rat(ctx, unit) == ValuationValue::finite(0)));
    return pow_rational(Rational(p), rng.range(1, 2)) * unit;
}

inline SpectralProfile random_explicit(Rng& rng, bool allow_infinite) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
    std::vector<ExplicitEntry> entries;
    for (std::size_t i = 0; i < n; ++i) {
        Rational v;
        bool fresh = false;
        while (!fresh) {
            v = rng.rational(6);
            fresh = true;
            for (const auto& e : entries)
                if (e.value == v) fresh = false;
        }
        const Multiplicity m = (allow_infinite && rng.chance(1, 4))
                                   ? Multiplicity::infinite()
                                   : Multiplicity::finite(static_cast<unsigned long long>(rng.range(1, 3)));
        entries.push_back(ExplicitEntry{v, m});
    }
    return SpectralProfile::explicit_profile(std::move(entries));
}

inline SpectralProfile random_geometric(Rng& rng) {
    PAdicContext ctx = random_ctx(rng);
    const Rational c = rng.nonzero_rational(9);
    const Rational alpha = random_alpha(rng, ctx);
    return SpectralProfile::geometric(std::move(ctx), c, alpha,
                                      static_cast<std::size_t>(rng.range(4, 12)));
}

inline SpectralProfile random_profile(Rng& rng) {
    switch (rng.range(0, 3)) {
        case 0: return random_explicit(rng, true);
        case 1: return random_geometric(rng);
        default: {
            std::vector<SpectralProfile> parts;
            const std::size_t n = static_cast<std::size_t>(rng.range(2, 3));
            for (std::size_t i = 0; i < n; ++i)
                parts.push_back(rng.chance(1, 2) ? random_explicit(rng, true)
                                                 : random_geometric(rng));
            return SpectralProfile::union_profile(std::move(parts), {});
        }
    }
}

inline FiniteRankPerturbation random_perturbation(Rng& rng, std::size_t t, std::size_t max_m,
                                                  long long bound) {
    std::vector<std::pair<Vec, Vec>> pairs;
    const std::size_t m = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_m)));
    for (std::size_t k = 0; k < m; ++k)
        pairs.emplace_back(random_vec(rng, t, bound), random_vec(rng, t, bound));
    return FiniteRankPerturbation(random_weights(rng, t, bound), std::move(pairs));
}

} // namespace gen

/**
 * Fixed battery of eigenvalue profiles exercising every shape the
 * spectral theory distinguishes: single and multiple finite
 * eigenvalues, infinite multiplicities, geometric families with their
 * accumulation at 0, finite-rank diagonals, all-infinite-multiplicity
 * families, unions, and a declared accumulation point that finite
 * sampling cannot certify (warning case).
 */
inline std::vector<SpectralProfile> battery_profiles() {
    using SP = SpectralProfile;
    const auto F = [](unsigned long long n) { return Multiplicity::finite(n); };
    const auto I = [] { return Multiplicity::infinite(); };
    const PAdicContext p2((Int(2))), p3((Int(3))), p5((Int(5))), p7((Int(7)));

    std::vector<SP> out;
    // explicit, all finite
    out.push_back(SP::explicit_profile({{Rational(3), F(1)}}));
    out.push_back(SP::explicit_profile({{Rational(1), F(1)}, {Rational(2), F(1)}}));
    out.push_back(SP::explicit_profile({{Rational(2), F(2)}, {Rational(3), F(1)}}));
    out.push_back(SP::explicit_profile({{Rational(-1), F(1)}, {Rational(1), F(1)}, {Rational(0), F(1)}}));
    out.push_back(SP::explicit_profile({{Rational(Int(1), Int(2)), F(2)}, {Rational(Int(5), Int(3)), F(3)}}));
    // explicit with infinite multiplicities
    out.push_back(SP::explicit_profile({{Rational(2), F(3)}, {Rational(7), I()}}));
    out.push_back(SP::explicit_profile({{Rational(Int(1), Int(4)), I()}, {Rational(Int(3), Int(4)), F(2)}}));
    // finite-rank diagonals: (0, inf) plus finitely many nonzero values
    out.push_back(SP::explicit_profile({{Rational(0), I()}}));
    out.push_back(SP::explicit_profile({{Rational(0), I()}, {Rational(2), F(1)}, {Rational(3), F(2)}}));
    out.push_back(SP::explicit_profile({{Rational(0), I()}, {Rational(5), F(1)}}));
    out.push_back(SP::explicit_profile({{Rational(0), I()}, {Rational(-2), F(2)}, {Rational(Int(1), Int(3)), F(1)}}));
    // all-infinite-multiplicity families (diagonal pairing style)
    out.push_back(SP::explicit_profile({{Rational(1), I()}, {Rational(2), I()}}));
    out.push_back(SP::explicit_profile(
        {{Rational(Int(1), Int(2)), I()}, {Rational(Int(1), Int(3)), I()}, {Rational(Int(1), Int(5)), I()}}));
    // geometric families
    out.push_back(SP::geometric(p5, Rational(1), Rational(5), 20));
    out.push_back(SP::geometric(p2, Rational(3), Rational(2), 16));
    out.push_back(SP::geometric(p3, Rational(Int(1), Int(2)), Rational(9), 12));
    out.push_back(SP::geometric(p5, Rational(7), Rational(Int(5), Int(2)), 10));
    out.push_back(SP::geometric(p7, Rational(1), Rational(7), 9));
    // unions
    out.push_back(SP::union_profile(
        {SP::geometric(p5, Rational(1), Rational(5), 8), SP::geometric(p5, Rational(2), Rational(5), 8)}, {}));
    out.push_back(SP::union_profile(
        {SP::explicit_profile({{Rational(1), F(2)}}), SP::geometric(p3, Rational(1), Rational(3), 10)}, {}));
    out.push_back(SP::union_profile(
        {SP::explicit_profile({{Rational(0), I()}, {Rational(4), F(1)}}),
         SP::explicit_profile({{Rational(9), F(2)}})},
        {}));
    out.push_back(SP::union_profile(
        {SP::geometric(p2, Rational(1), Rational(2), 12), SP::explicit_profile({{Rational(3), I()}})}, {}));
    out.push_back(SP::union_profile(
        {SP::union_profile({SP::geometric(p3, Rational(1), Rational(3), 8)}, {}),
         SP::explicit_profile({{Rational(5), F(1)}})},
        {}));
    // declared accumulation: validated (0 is approached by the family)
    out.push_back(SP::union_profile({SP::geometric(p5, Rational(1), Rational(5), 8)}, {Rational(0)}));
    // declared accumulation a finite set cannot certify: draws a warning
    out.push_back(SP::union_profile(
        {SP::explicit_profile({{Rational(1), F(1)}, {Rational(Int(1), Int(5)), F(1)},
                               {Rational(Int(1), Int(25)), F(1)}})},
        {Rational(0)}));
    return out;
}

// ---- ball brute-force oracle ----------------------------------------

namespace detail {

// Membership-sample classification of two balls, used to cross-check
// balls_relation. Points must include both centers.
inline bool brute_relation_matches(const PAdicContext& ctx, const Ball& a, const Ball& b,
                                   const std::vector<Rational>& points) {
    bool any_both = false, a_not_b = false, b_not_a = false;
    for (const Rational& x : points) {
        const bool ina = ball_contains(ctx, a, x);
        const bool inb = ball_contains(ctx, b, x);
        if (ina && inb) any_both = true;
        if (ina && !inb) a_not_b = true;
        if (inb && !ina) b_not_a = true;
    }

    const BallRelation rel = balls_relation(ctx, a, b);
    switch (rel) {
        case BallRelation::Disjoint: return !any_both;
        case BallRelation::Equal: return any_both && !a_not_b && !b_not_a;
        case BallRelation::LeftInsideRight: return any_both && !a_not_b;
        case BallRelation::RightInsideLeft: return any_both && !b_not_a;
    }
    return false;
}

// Points on and around the radius shells of both balls, plus noise.
inline std::vector<Rational> shell_points(Rng& rng, const PAdicContext& ctx, const Ball& a,
                                          const Ball& b) {
    const long long p = ctx.p().convert_to<long long>();
    std::vector<Rational> pts{a.center, b.center};
    const std::vector<Rational> units{Rational(1), Rational(p + 1), Rational(2 * p - 1)};
    for (const Ball* ball : {&a, &b}) {
        const long long k = closed_radius_exponent(*ball);
        for (long long j = -k - 1; j <= -k + 2; ++j)
            for (const Rational& u : units)
                pts.push_back(ball->center + u * pow_rational(Rational(p), j));
    }
    for (int i = 0; i < 6; ++i)
        pts.push_back(rng.rational(30));
    return pts;
}

inline Ball random_ball(Rng& rng, const PAdicContext& ctx) {
    const Rational center(Int(rng.range(-30, 30)), Int(rng.range(1, 30)));
    const long long k = rng.range(-3, 3);
    const BallKind kind = rng.chance(1, 2) ? BallKind::Open : BallKind::Closed;
    return Ball(center, AbsValue::ppow(k), kind);
}

} // namespace detail

// ---- property suites -------------------------------------------------

namespace props {

inline PropResult rational_field_axioms(std::uint64_t seed, std::size_t cases) {
    PropResult r{"rational-field-axioms"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const Rational a = rng.rational(50), b = rng.rational(50), c = rng.rational(50);
        bool ok = (a + b) + c == a + (b + c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a + b == b + a && a * b == b * a;
        ok = ok && a - a == Rational(0);
        if (!b.is_zero()) ok = ok && (a / b) * b == a;
        // construction canonicalizes: scaling numerator and denominator is invisible
        const long long n = rng.range(-40, 40), d = rng.range(1, 40), s = rng.range(1, 9);
        ok = ok && Rational(Int(n * s), Int(d * s)) == Rational(Int(n), Int(d));
        ok = ok && Rational(Int(-n), Int(d)) == -Rational(Int(n), Int(d));
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult poly_divmod_roundtrip(std::uint64_t seed, std::size_t cases) {
    PropResult r{"poly-divmod-roundtrip"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const Poly a = gen::random_poly(rng, 8, 6, true);
        const Poly b = gen::random_poly(rng, 5, 6, false);
        const auto [q, rem] = poly_divmod(a, b);
        if (!(q * b + rem == a && rem.degree() < b.degree())) ++r.failures;
    }
    return r;
}

inline PropResult factor_multiplicity_step(std::uint64_t seed, std::size_t cases) {
    PropResult r{"factor-multiplicity-step"};
    Rng rng(seed);
    const auto& places = gen::fixed_places();
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const Poly& p = places[static_cast<std::size_t>(rng.range(0, 3))];
        const Poly f = gen::random_poly(rng, 5, 6, false);
        if (factor_multiplicity(f * p, p) != factor_multiplicity(f, p) + 1) ++r.failures;
    }
    return r;
}

inline PropResult valuation_multiplicative(std::uint64_t seed, std::size_t cases) {
    PropResult r{"valuation-multiplicative"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Rational x = rng.rational(60), y = rng.rational(60);
        if (vp_rat(ctx, x * y) != vp_rat(ctx, x) + vp_rat(ctx, y)) ++r.failures;
    }
    return r;
}

inline PropResult valuation_strong_triangle(std::uint64_t seed, std::size_t cases) {
    PropResult r{"valuation-strong-triangle"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Rational x = rng.rational(60), y = rng.rational(60);
        const ValuationValue vx = vp_rat(ctx, x), vy = vp_rat(ctx, y);
        const ValuationValue vs = vp_rat(ctx, x + y);
        const ValuationValue lo = min(vx, vy);
        bool ok = vs >= lo;
        if (vx != vy) ok = ok && vs == lo;
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult integer_boundedness(std::uint64_t seed, std::size_t cases) {
    PropResult r{"integer-boundedness"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Int n(rng.range(-1000000, 1000000));
        if (!(abs_p(ctx, Rational(n)) <= AbsValue::one())) ++r.failures;
    }
    return r;
}

inline PropResult abs_multiplicative_max(std::uint64_t seed, std::size_t cases) {
    PropResult r{"abs-multiplicative-max"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Rational x = rng.rational(60), y = rng.rational(60);
        const AbsValue ax = abs_p(ctx, x), ay = abs_p(ctx, y);
        bool ok = abs_p(ctx, x * y) == ax * ay;
        const AbsValue as = abs_p(ctx, x + y);
        ok = ok && as <= max(ax, ay);
        if (!(ax == ay)) ok = ok && as == max(ax, ay);
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult function_field_axioms(std::uint64_t seed, std::size_t cases) {
    PropResult r{"function-field-valuation-axioms"};
    Rng rng(seed);
    const auto& places = gen::fixed_places();
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const RationalFunction f = gen::random_rf(rng, 6, 4);
        const RationalFunction g = gen::random_rf(rng, 6, 4);
        bool ok = true;
        const Poly& p = places[static_cast<std::size_t>(rng.range(0, 3))];
        {
            const ValuationValue vf = vfunc_px(f, p), vg = vfunc_px(g, p);
            ok = ok && vfunc_px(f * g, p) == vf + vg;
            const ValuationValue vs = vfunc_px(f + g, p);
            ok = ok && vs >= min(vf, vg);
            if (vf != vg) ok = ok && vs == min(vf, vg);
        }
        {
            const ValuationValue vf = vfunc_inf(f), vg = vfunc_inf(g);
            ok = ok && vfunc_inf(f * g) == vf + vg;
            const ValuationValue vs = vfunc_inf(f + g);
            ok = ok && vs >= min(vf, vg);
            if (vf != vg) ok = ok && vs == min(vf, vg);
        }
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult abs_valuation_duality(std::uint64_t seed, std::size_t cases) {
    PropResult r{"abs-valuation-duality"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Rational x = rng.rational(60);
        const ValuationValue v = vp_rat(ctx, x);
        const AbsValue a = abs_p(ctx, x);
        bool ok = AbsValue::from_valuation(v) == a && a.valuation() == v;
        if (!v.is_infinity()) ok = ok && a.exponent() == -v.exponent();
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult ball_recenter_clopen(std::uint64_t seed, std::size_t cases) {
    PropResult r{"ball-recenter-clopen"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const long long p = ctx.p().convert_to<long long>();
        const Ball b = detail::random_ball(rng, ctx);
        const long long k = closed_radius_exponent(b);
        // members sit at |delta| <= p^k, i.e. valuation >= -k; the low
        // end of the exponent range lands outside the ball on purpose
        const Rational delta =
            Rational(p + 1) * pow_rational(Rational(p), rng.range(-k - 2, -k + 3));
        const Rational y = b.center + delta;
        const Ball moved(y, b.radius, b.kind);
        bool ok;
        if (ball_contains(ctx, b, y)) {
            ok = recenter_equivalent(ctx, b, y) &&
                 balls_relation(ctx, b, moved) == BallRelation::Equal;
        } else {
            ok = balls_relation(ctx, b, moved) == BallRelation::Disjoint;
        }
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult ball_dichotomy_bruteforce(std::uint64_t seed, std::size_t cases) {
    PropResult r{"ball-dichotomy-bruteforce"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Ball a = detail::random_ball(rng, ctx);
        const Ball b = detail::random_ball(rng, ctx);
        const auto pts = detail::shell_points(rng, ctx, a, b);
        if (!detail::brute_relation_matches(ctx, a, b, pts)) ++r.failures;
    }
    return r;
}

inline PropResult isosceles_triangles(std::uint64_t seed, std::size_t cases) {
    PropResult r{"isosceles-triangles"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Rational x = rng.rational(40), y = rng.rational(40), z = rng.rational(40);
        if (x == y || y == z || x == z) continue; // witness requires a genuine triangle
        try {
            const TriangleReport t = isosceles_witness(ctx, x, y, z);
            if (!(t.third_length <= t.equal_length)) ++r.failures;
        } catch (const std::exception&) {
            ++r.failures;
        }
    }
    return r;
}

inline PropResult expansion_ring_homomorphism(std::uint64_t seed, std::size_t cases) {
    PropResult r{"expansion-ring-homomorphism"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Rational x = rng.rational(40), y = rng.rational(40);
        const long long na = rng.range(-2, 8), nb = rng.range(-2, 8);
        const PAdicApprox a = approx_from_rational(ctx, x, na);
        const PAdicApprox b = approx_from_rational(ctx, y, nb);

        const PAdicApprox sum = approx_add(a, b);
        const PAdicApprox sum_exact = approx_from_rational(ctx, x + y, std::min(na, nb));
        bool ok = sum.shift == sum_exact.shift && sum.digits == sum_exact.digits;

        const PAdicApprox prod = approx_mul(a, b);
        const long long nm = std::min(a.precision() + b.apparent_valuation(),
                                      b.precision() + a.apparent_valuation());
        const PAdicApprox prod_exact = approx_from_rational(ctx, x * y, nm);
        ok = ok && prod.shift == prod_exact.shift && prod.digits == prod_exact.digits;
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult expansion_truncation_error(std::uint64_t seed, std::size_t cases) {
    PropResult r{"expansion-truncation-error"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const Rational x = rng.rational(60);
        const long long n = rng.range(-4, 10);
        const PAdicApprox a = approx_from_rational(ctx, x, n);
        bool ok = vp_rat(ctx, x - a.value()) >= ValuationValue::finite(n);
        // canonical form: leading digit nonzero unless valuation unresolved
        if (!a.digits.empty() && a.digits.front() == 0) ok = ok && a.digits_all_zero();
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult geometric_series_identity(std::uint64_t seed, std::size_t cases) {
    PropResult r{"geometric-series-identity"};
    (void)seed;
    (void)cases;
    for (const long long p : {2LL, 3LL, 5LL, 7LL}) {
        const PAdicContext ctx((Int(p)));
        const Rational limit = Rational(1) / Rational(1 - p);
        for (long long n = 1; n <= 12; ++n) {
            for (long long m = n; m <= 14; ++m) {
                ++r.cases;
                Rational partial = 0;
                for (long long k = 0; k < m; ++k) partial += pow_rational(Rational(p), k);
                if (!(abs_p(ctx, partial - limit) <= AbsValue::ppow(-n))) ++r.failures;
            }
        }
    }
    return r;
}

inline PropResult cauchy_telescoping_certified(std::uint64_t seed, std::size_t cases) {
    PropResult r{"cauchy-telescoping-certified"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const long long p = ctx.p().convert_to<long long>();
        // term(n) = u_n * p^n with u_n a unit: valuations strictly increase
        std::vector<Rational> units(16);
        for (auto& u : units) {
            do {
                u = rng.nonzero_rational(9);
            } while (!(vp_rat(ctx, u) == ValuationValue::finite(0)));
        }
        SequenceOracle terms;
        terms.term = [units, p](std::size_t n) {
            return units.at(n % units.size()) * pow_rational(Rational(p), static_cast<long long>(n));
        };
        terms.tail = TailBound{[](std::size_t n) { return static_cast<long long>(n); }};

        bool ok = true;
        const CauchyReport cr = cauchy_check(ctx, partial_sums(terms), 10);
        ok = ok && cr.verdict == CauchyVerdict::Certified;

        const PAdicApprox s = sum_series(ctx, terms, 6, 64);
        Rational exact6 = 0;
        for (std::size_t n = 0; n < 6; ++n) exact6 += terms.term(n);
        ok = ok && vp_rat(ctx, s.value() - exact6) >= ValuationValue::finite(6);
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult cauchy_schwarz(std::uint64_t seed, std::size_t cases) {
    PropResult r{"cauchy-schwarz"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const std::size_t t = static_cast<std::size_t>(rng.range(1, 6));
        const Vec x = gen::random_vec(rng, t, 30), y = gen::random_vec(rng, t, 30);
        if (!(abs_p(ctx, inner_t(x, y)) <= norm_max(ctx, x) * norm_max(ctx, y))) ++r.failures;
    }
    return r;
}

inline PropResult norm_ultrametricity(std::uint64_t seed, std::size_t cases) {
    PropResult r{"norm-ultrametricity"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const PAdicContext ctx = gen::random_ctx(rng);
        const std::size_t t = static_cast<std::size_t>(rng.range(1, 6));
        const Vec x = gen::random_vec(rng, t, 30), y = gen::random_vec(rng, t, 30);
        const AbsValue nx = norm_max(ctx, x), ny = norm_max(ctx, y);
        const AbsValue ns = norm_max(ctx, vec_add(x, y));
        bool ok = ns <= max(nx, ny);
        if (!(nx == ny)) ok = ok && ns == max(nx, ny);
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult unique_basis_expansion(std::uint64_t seed, std::size_t cases) {
    PropResult r{"unique-basis-expansion"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const std::size_t t = static_cast<std::size_t>(rng.range(1, 6));
        const Vec x = gen::random_vec(rng, t, 30);
        Vec rebuilt(t, Rational(0));
        for (std::size_t k = 0; k < t; ++k)
            rebuilt = vec_add(rebuilt, vec_scale(x[k], basis_vector(t, k)));
        if (!(rebuilt == x)) ++r.failures;
    }
    return r;
}

inline PropResult double_complement(std::uint64_t seed, std::size_t cases) {
    PropResult r{"double-complement"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const std::size_t t = static_cast<std::size_t>(rng.range(1, 8));
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < t; ++k)
            if (rng.chance(1, 2)) idx.push_back(k);
        const CoordSubspace s(t, idx);
        if (!(s.complement().complement().indices() == s.indices())) ++r.failures;
    }
    return r;
}

inline PropResult complement_orthogonality(std::uint64_t seed, std::size_t cases) {
    PropResult r{"complement-orthogonality"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const std::size_t t = static_cast<std::size_t>(rng.range(2, 8));
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < t; ++k)
            if (rng.chance(1, 2)) idx.push_back(k);
        const CoordSubspace s(t, idx);
        const WeightSeq w = gen::random_weights(rng, t, 9);
        const Vec u = s.project(gen::random_vec(rng, t, 30));
        const Vec v = s.complement().project(gen::random_vec(rng, t, 30));
        if (!inner_omega(w, u, v).is_zero()) ++r.failures;
    }
    return r;
}

inline PropResult kernel_cokernel_agreement(std::uint64_t seed, std::size_t cases) {
    PropResult r{"kernel-cokernel-agreement"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const SpectralProfile profile = gen::random_profile(rng);
        std::vector<Rational> probes{Rational(0), rng.rational(8)};
        const auto support = support_bound(profile);
        const std::size_t t =
            support ? std::min<std::size_t>(*support, 6) : static_cast<std::size_t>(6);
        if (t > 0) {
            const auto prefix = realize_prefix(profile, t);
            probes.push_back(prefix[static_cast<std::size_t>(rng.range(0, static_cast<long long>(t) - 1))]);
        }
        bool ok = true;
        for (const Rational& lam : probes) {
            if (multiplicity(profile, lam) != cokernel_dim(profile, lam)) ok = false;
            try {
                fredholm_status(profile, lam); // also asserts eta = delta internally
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult essential_spectrum_decomposition(std::uint64_t seed, std::size_t cases) {
    PropResult r{"essential-spectrum-decomposition"};
    (void)seed;
    (void)cases;
    for (const SpectralProfile& profile : battery_profiles()) {
        ++r.cases;
        bool ok = true;
        const SpectrumReport rep = spectrum_report(profile);

        // sigma_e is exactly the union of its two parts, disjointly
        std::vector<Rational> u = rep.sigma_e_prime;
        u.insert(u.end(), rep.sigma_e_double_prime.begin(), rep.sigma_e_double_prime.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        ok = ok && u == rep.sigma_e;
        ok = ok && u.size() == rep.sigma_e_prime.size() + rep.sigma_e_double_prime.size();

        // boundary part: accumulation points that are not eigenvalues
        const AccumulationReport acc = accumulation_points(profile);
        std::vector<Rational> boundary;
        for (const Rational& a : acc.points)
            if (multiplicity(profile, a).is_zero()) boundary.push_back(a);
        ok = ok && boundary == rep.sigma_e_prime;

        // improper part consists of eigenvalues (of infinite multiplicity)
        for (const Rational& b : rep.sigma_e_double_prime)
            ok = ok && multiplicity(profile, b).is_infinite();

        // finite multiplicities everywhere => sigma_e = boundary part
        if (rep.sigma_e_double_prime.empty()) ok = ok && rep.sigma_e == rep.sigma_e_prime;

        // all-infinite explicit families: essential spectrum is the whole spectrum
        if (profile.is_explicit()) {
            bool all_inf = true;
            for (const auto& e : profile.as_explicit().entries)
                if (!e.mult.is_infinite()) all_inf = false;
            if (all_inf) ok = ok && rep.sigma_e == rep.sigma.listed && rep.sigma.is_finite();
        }
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult range_kernel_complement(std::uint64_t seed, std::size_t cases) {
    PropResult r{"range-kernel-complement"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const SpectralProfile profile = gen::random_profile(rng);
        const auto support = support_bound(profile);
        std::size_t t = static_cast<std::size_t>(rng.range(1, 12));
        if (support) t = std::min(t, *support);
        if (t == 0) continue;
        const auto prefix = realize_prefix(profile, t);
        const Rational lam =
            rng.chance(1, 2)
                ? prefix[static_cast<std::size_t>(rng.range(0, static_cast<long long>(t) - 1))]
                : rng.rational(8);
        if (!range_equals_kernel_perp(profile, lam, t).ok) ++r.failures;
    }
    return r;
}

inline PropResult theta_diagonal_identity(std::uint64_t seed, std::size_t cases) {
    PropResult r{"theta-diagonal-identity"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const std::size_t t = static_cast<std::size_t>(rng.range(1, 10));
        const FiniteRankPerturbation pert = gen::random_perturbation(rng, t, 3, 6);
        std::vector<Rational> lambda(t);
        for (auto& l : lambda) l = rng.rational(6);

        // theta_sequence asserts agreement with the assembled diagonal;
        // re-derive the formula here to catch a consistent bug in both.
        const auto theta = theta_sequence(lambda, pert);
        bool ok = theta.size() == t;
        for (std::size_t j = 0; j < t && ok; ++j) {
            Rational s = 0;
            for (const auto& [u, v] : pert.pairs) s += u[j] * v[j];
            ok = theta[j] == lambda[j] + pert.weights[j] * s;
        }
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult eigen_oracle_agreement(std::uint64_t seed, std::size_t cases) {
    PropResult r{"eigen-oracle-agreement"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const std::size_t t = static_cast<std::size_t>(rng.range(2, 5));
        const FiniteRankPerturbation pert = gen::random_perturbation(rng, t, 2, 3);
        std::vector<Rational> lambda(t);
        for (auto& l : lambda) l = rng.rational(4);
        const TruncatedOperator op = assemble(lambda, pert);

        bool ok = true;
        const Poly cp = char_poly_oracle(op);
        for (const auto& [root, mult] : rational_roots(cp)) {
            (void)mult;
            if (!is_eigenvalue(op, root).is_eigen) ok = false;
        }
        for (int probe = 0; probe < 8; ++probe) {
            const Rational lam = rng.rational(6);
            if (is_eigenvalue(op, lam).is_eigen != cp.eval(lam).is_zero()) ok = false;
        }
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult zero_perturbation_diagonal(std::uint64_t seed, std::size_t cases) {
    PropResult r{"zero-perturbation-diagonal"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const std::size_t t = static_cast<std::size_t>(rng.range(1, 6));
        std::vector<Rational> lambda(t);
        for (auto& l : lambda) l = rng.rational(6);
        const FiniteRankPerturbation pert(
            gen::random_weights(rng, t, 6),
            {{Vec(t, Rational(0)), gen::random_vec(rng, t, 6)}});

        const ComparisonReport rep = spectrum_compare(lambda, pert);
        std::vector<Rational> expect = lambda;
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        bool ok = rep.theta == lambda && rep.sigma_p == expect &&
                  rep.relation == "equal as sets" && rep.char_poly_splits;
        if (!ok) ++r.failures;
    }
    return r;
}

inline PropResult permutation_similarity(std::uint64_t seed, std::size_t cases) {
    PropResult r{"permutation-similarity"};
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        const std::size_t t = static_cast<std::size_t>(rng.range(2, 6));
        const FiniteRankPerturbation pert = gen::random_perturbation(rng, t, 2, 4);
        std::vector<Rational> lambda(t);
        for (auto& l : lambda) l = rng.rational(5);

        std::vector<std::size_t> perm(t);
        for (std::size_t k = 0; k < t; ++k) perm[k] = k;
        for (std::size_t k = t; k > 1; --k)
            std::swap(perm[k - 1], perm[static_cast<std::size_t>(rng.range(0, static_cast<long long>(k) - 1))]);

        const auto apply_perm = [&](const Vec& x) {
            Vec out(t);
            for (std::size_t k = 0; k < t; ++k) out[k] = x[perm[k]];
            return out;
        };
        std::vector<Rational> plambda(t);
        std::vector<Rational> pw(t);
        for (std::size_t k = 0; k < t; ++k) {
            plambda[k] = lambda[perm[k]];
            pw[k] = pert.weights[perm[k]];
        }
        std::vector<std::pair<Vec, Vec>> ppairs;
        for (const auto& [u, v] : pert.pairs) ppairs.emplace_back(apply_perm(u), apply_perm(v));
        const FiniteRankPerturbation permuted(WeightSeq(pw), std::move(ppairs));

        const ComparisonReport base = spectrum_compare(lambda, pert);
        const ComparisonReport moved = spectrum_compare(plambda, permuted);
        bool ok = moved.sigma_p == base.sigma_p;
        for (std::size_t k = 0; k < t && ok; ++k) ok = moved.theta[k] == base.theta[perm[k]];
        if (!ok) ++r.failures;
    }
    return r;
}

} // namespace props

// ---- registry --------------------------------------------------------

using PropFn = PropResult (*)(std::uint64_t, std::size_t);

struct PropSpec {
    const char* name;
    PropFn fn;
};

inline const std::vector<PropSpec>& prop_registry() {
    static const std::vector<PropSpec> reg{
        {"rational-field-axioms", props::rational_field_axioms},
        {"poly-divmod-roundtrip", props::poly_divmod_roundtrip},
        {"factor-multiplicity-step", props::factor_multiplicity_step},
        {"valuation-multiplicative", props::valuation_multiplicative},
        {"valuation-strong-triangle", props::valuation_strong_triangle},
        {"integer-boundedness", props::integer_boundedness},
        {"abs-multiplicative-max", props::abs_multiplicative_max},
        {"function-field-valuation-axioms", props::function_field_axioms},
        {"abs-valuation-duality", props::abs_valuation_duality},
        {"ball-recenter-clopen", props::ball_recenter_clopen},
        {"ball-dichotomy-bruteforce", props::ball_dichotomy_bruteforce},
        {"isosceles-triangles", props::isosceles_triangles},
        {"expansion-ring-homomorphism", props::expansion_ring_homomorphism},
        {"expansion-truncation-error", props::expansion_truncation_error},
        {"geometric-series-identity", props::geometric_series_identity},
        {"cauchy-telescoping-certified", props::cauchy_telescoping_certified},
        {"cauchy-schwarz", props::cauchy_schwarz},
        {"norm-ultrametricity", props::norm_ultrametricity},
        {"unique-basis-expansion", props::unique_basis_expansion},
        {"double-complement", props::double_complement},
        {"complement-orthogonality", props::complement_orthogonality},
        {"kernel-cokernel-agreement", props::kernel_cokernel_agreement},
        {"essential-spectrum-decomposition", props::essential_spectrum_decomposition},
        {"range-kernel-complement", props::range_kernel_complement},
        {"theta-diagonal-identity", props::theta_diagonal_identity},
        {"eigen-oracle-agreement", props::eigen_oracle_agreement},
        {"zero-perturbation-diagonal", props::zero_perturbation_diagonal},
        {"permutation-similarity", props::permutation_similarity},
    };
    return reg;
}

namespace detail {

// Stable per-suite seed: don't let registry order affect any suite.
inline std::uint64_t fnv1a(const char* s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
    return h;
}

} // namespace detail

inline std::vector<PropResult> run_props(std::uint64_t seed, std::size_t cases) {
    std::vector<PropResult> out;
    for (const PropSpec& spec : prop_registry())
        out.push_back(spec.fn(seed ^ detail::fnv1a(spec.name), cases));
    return out;
}

} // namespace ultraspec
