#include <catch2/catch_amalgamated.hpp>

#include <ultraspec/padic.hpp>

using namespace ultraspec;

namespace {

std::vector<unsigned long long> digs(std::initializer_list<unsigned long long> d) {
    return std::vector<unsigned long long>(d);
}

}  // namespace

TEST_CASE("digit expansion of frozen rationals", "[padic]") {
    const PAdicContext p5(5), p2(2), p3(3), p7(7);

    // -1/4 = 1 + 5 + 5^2 + ... in Q_5
    const auto a = approx_from_rational(p5, Rational(-1, 4), 8);
    CHECK(a.shift == 0);
    CHECK(a.digits == digs({1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(a.precision() == 8);

    // 50/7: valuation 2, digits 1,2,1,4,2,3
    const auto b = approx_from_rational(p5, Rational(50, 7), 8);
    CHECK(b.shift == 2);
    CHECK(b.digits == digs({1, 2, 1, 4, 2, 3}));
    CHECK(b.precision() == 8);
    CHECK(b.apparent_valuation() == 2);

    // 1/3 in Q_2: 1,1,0,1,0,1,...
    const auto c = approx_from_rational(p2, Rational(1, 3), 8);
    CHECK(c.shift == 0);
    CHECK(c.digits == digs({1, 1, 0, 1, 0, 1, 0, 1}));

    // -1/2 in Q_3: all digits 1
    const auto d = approx_from_rational(p3, Rational(-1, 2), 6);
    CHECK(d.shift == 0);
    CHECK(d.digits == digs({1, 1, 1, 1, 1, 1}));

    // integers terminate: 12 = 5 + 1*7 in base 7
    const auto e = approx_from_rational(p7, Rational(12), 5);
    CHECK(e.shift == 0);
    CHECK(e.digits == digs({5, 1, 0, 0, 0}));

    // negative valuation: 3/50 at p = 5 starts at shift -2
    const auto f = approx_from_rational(p5, Rational(3, 50), 4);
    CHECK(f.shift == -2);
    CHECK(f.digits == digs({4, 2, 2, 2, 2, 2}));
    CHECK(f.precision() == 4);
    CHECK(f.apparent_valuation() == -2);
}

TEST_CASE("zero expansions and precision bookkeeping", "[padic]") {
    const PAdicContext p5(5);
    const auto z = approx_from_rational(p5, Rational(0), 4);
    CHECK(z.shift == 0);
    CHECK(z.digits == digs({0, 0, 0, 0}));
    CHECK(z.digits_all_zero());
    CHECK(z.apparent_valuation() == 4);  // only a lower bound

    const auto zn = approx_from_rational(p5, Rational(0), -2);
    CHECK(zn.shift == -2);
    CHECK(zn.precision() == -2);
    CHECK(zn.digits.empty());

    // denominator divisible by p is fine; the shift goes negative
    const auto fifth = approx_from_rational(p5, Rational(1, 5), 0);
    CHECK(fifth.shift == -1);
    CHECK(fifth.digits == digs({1}));
    CHECK(fifth.precision() == 0);
}

TEST_CASE("expansion value round-trips to the residue", "[padic]") {
    const PAdicContext p5(5);
    for (const Rational& x : {Rational(-1, 4), Rational(50, 7), Rational(3, 50), Rational(17)}) {
        const auto a = approx_from_rational(p5, x, 10);
        // x - value is divisible by p^10
        CHECK(vp_rat(p5, x - a.value()) >= ValuationValue::finite(10));
    }
}

TEST_CASE("approximation addition at shared precision", "[padic]") {
    const PAdicContext p5(5);
    const auto a = approx_from_rational(p5, Rational(1, 3), 4);
    const auto b = approx_from_rational(p5, Rational(2, 3), 6);
    const auto s = approx_add(a, b);
    CHECK(s.precision() == 4);
    CHECK(equal_at_shared_precision(s, approx_from_rational(p5, Rational(1), 4)));

    // cancellation: (1/3) + (-1/3) shows only zeros at this precision
    const auto t = approx_add(a, approx_from_rational(p5, Rational(-1, 3), 9));
    CHECK(t.digits_all_zero());

    CHECK_THROWS(approx_add(a, approx_from_rational(PAdicContext(3), Rational(1), 4)));
}

TEST_CASE("approximation multiplication contracts precision", "[padic]") {
    const PAdicContext p5(5);
    // (-1/4)^2 = 1/16
    const auto a = approx_from_rational(p5, Rational(-1, 4), 6);
    const auto m = approx_mul(a, a);
    CHECK(m.precision() == 6);  // both factors are units
    CHECK(equal_at_shared_precision(m, approx_from_rational(p5, Rational(1, 16), 6)));

    // 50/7 * 3/50 = 3/7; valuations 2 and -2 shift the reachable precision
    const auto b = approx_from_rational(p5, Rational(50, 7), 6);
    const auto c = approx_from_rational(p5, Rational(3, 50), 6);
    const auto prod = approx_mul(b, c);
    CHECK(prod.precision() == std::min(6 + (-2), 6 + 2));
    CHECK(equal_at_shared_precision(prod,
                                    approx_from_rational(p5, Rational(3, 7), prod.precision())));
}

TEST_CASE("cauchy verdicts over prefixes", "[padic]") {
    const PAdicContext p5(5);

    // partial sums of 5^n: consecutive differences have valuation n+1
    SequenceOracle geo;
    geo.term = [](std::size_t n) { return pow_rational(Rational(5), static_cast<long long>(n)); };
    geo.tail = TailBound{[](std::size_t n) { return static_cast<long long>(n); }};
    const SequenceOracle sums = partial_sums(geo);

    const auto rep = cauchy_check(p5, sums, 8);
    CHECK(rep.verdict == CauchyVerdict::Certified);
    REQUIRE(rep.diff_valuations.size() == 7);
    for (std::size_t n = 0; n < rep.diff_valuations.size(); ++n)
        CHECK(rep.diff_valuations[n] == ValuationValue::finite(static_cast<long long>(n) + 1));

    // same prefix without a declared tail: consistent, never certified
    SequenceOracle untailed = sums;
    untailed.tail.reset();
    CHECK(cauchy_check(p5, untailed, 8).verdict == CauchyVerdict::PrefixConsistent);

    // alternating 0/1 violates any growing tail claim
    SequenceOracle alt;
    alt.term = [](std::size_t n) { return Rational(static_cast<long long>(n % 2)); };
    alt.tail = TailBound{[](std::size_t n) { return static_cast<long long>(n); }};
    const auto bad = cauchy_check(p5, alt, 6);
    CHECK(bad.verdict == CauchyVerdict::PrefixRefuted);
    REQUIRE(bad.violation_index.has_value());
    CHECK(*bad.violation_index == 1);  // V_5(x_2 - x_1) = 0 < 1

    // constant sequences are certified with all-infinite differences
    SequenceOracle constant;
    constant.term = [](std::size_t) { return Rational(7); };
    constant.tail = TailBound{[](std::size_t n) { return static_cast<long long>(n); }};
    const auto con = cauchy_check(p5, constant, 5);
    CHECK(con.verdict == CauchyVerdict::Certified);
    for (const auto& v : con.diff_valuations) CHECK(v.is_infinity());

    CHECK_THROWS(cauchy_check(p5, sums, 1));
    CHECK(to_string(CauchyVerdict::Certified) == "cauchy-certified");
    CHECK(to_string(CauchyVerdict::PrefixConsistent) == "prefix-consistent");
    CHECK(to_string(CauchyVerdict::PrefixRefuted) == "prefix-refuted");
}

TEST_CASE("series summation certified by tail bounds", "[padic]") {
    const PAdicContext p5(5);

    // sum 5^n = 1/(1-5) = -1/4
    SequenceOracle geo;
    geo.term = [](std::size_t n) { return pow_rational(Rational(5), static_cast<long long>(n)); };
    geo.tail = TailBound{[](std::size_t n) { return static_cast<long long>(n); }};

    const auto s = sum_series(p5, geo, 6, 50);
    CHECK(s.precision() == 6);
    CHECK(vp_rat(p5, s.value() - Rational(-1, 4)) >= ValuationValue::finite(6));
    CHECK(equal_at_shared_precision(s, approx_from_rational(p5, Rational(-1, 4), 6)));

    // not enough terms allowed to reach the target
    CHECK_THROWS_WITH(sum_series(p5, geo, 60, 10),
                      "convergence not certified at this precision");

    // no tail bound at all
    SequenceOracle untailed = geo;
    untailed.tail.reset();
    CHECK_THROWS_WITH(sum_series(p5, untailed, 3, 50),
                      "convergence not certified at this precision");

    // a lying tail bound is caught term by term
    SequenceOracle liar;
    liar.term = [](std::size_t) { return Rational(1); };
    liar.tail = TailBound{[](std::size_t n) { return static_cast<long long>(n); }};
    CHECK_THROWS(sum_series(p5, liar, 4, 50));
}

TEST_CASE("geometric series identity for small primes", "[padic]") {
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        const PAdicContext ctx(p);
        Rational partial(0);
        const Rational limit = Rational(1, 1 - p);
        for (long long n = 0; n < 12; ++n) {
            partial += pow_rational(Rational(p), n);
            // after adding p^0..p^(N-1), the gap has valuation exactly N
            CHECK(vp_rat(ctx, partial - limit) == ValuationValue::finite(n + 1));
        }
    }
}
