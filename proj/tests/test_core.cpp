#include <catch2/catch_amalgamated.hpp>

#include <ultraspec/rational.hpp>
#include <ultraspec/polynomial.hpp>
#include <ultraspec/rational_function.hpp>
#include <ultraspec/parse.hpp>

using namespace ultraspec;

TEST_CASE("rational canonicalization and field ops", "[core]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS(Rational(1, 0));

    const Rational a(3, 4), b(-5, 6);
    CHECK(a + b == Rational(-1, 12));
    CHECK(a - b == Rational(19, 12));
    CHECK(a * b == Rational(-5, 8));
    CHECK(a / b == Rational(-9, 10));
    CHECK_THROWS(a / Rational(0));

    CHECK(Rational(7, 3).numerator() == 7);
    CHECK(Rational(7, 3).denominator() == 3);
    CHECK(Rational(-1, 4).to_string() == "-1/4");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(5).is_integer());
    CHECK(!a.is_integer());
}

TEST_CASE("rational powers", "[core]") {
    CHECK(pow_rational(Rational(5), 3) == Rational(125));
    CHECK(pow_rational(Rational(5), -2) == Rational(1, 25));
    CHECK(pow_rational(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow_rational(Rational(7), 0) == Rational(1));
    CHECK(pow_int(Int(3), 5) == 243);
}

TEST_CASE("polynomial arithmetic and trimming", "[core]") {
    const Poly f({1, 2, 1});  // 1 + 2x + x^2
    const Poly g({-1, 1});    // x - 1
    CHECK(f.degree() == 2);
    CHECK((f + (-f)).is_zero());
    CHECK((f + (-f)).degree() == -1);
    CHECK(f * g == Poly({-1, -1, 1, 1}));
    CHECK(f.eval(Rational(2)) == Rational(9));
    CHECK(Poly::linear_root(Rational(3)) == Poly({-3, 1}));
    CHECK(Poly::x().degree() == 1);
    CHECK(Poly({Rational(0)}).is_zero());
}

TEST_CASE("polynomial division, gcd, factor multiplicity", "[core]") {
    const Poly f({-1, 0, 1});  // x^2 - 1
    const Poly d({1, 1});      // x + 1
    auto [q, r] = poly_divmod(f, d);
    CHECK(q == Poly({-1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_divides(d, f));
    CHECK(!poly_divides(Poly({2, 1}), f));
    CHECK_THROWS(poly_divmod(f, Poly()));

    // gcd(x^2-1, x^2+2x+1) = x+1, returned monic
    CHECK(poly_gcd(f, Poly({1, 2, 1})) == Poly({1, 1}));

    // (x-1)^3 (x+1) has multiplicity 3 at x-1
    const Poly h = Poly({-1, 1}) * Poly({-1, 1}) * Poly({-1, 1}) * Poly({1, 1});
    CHECK(factor_multiplicity(h, Poly({-1, 1})) == 3);
    CHECK(factor_multiplicity(h, Poly({1, 1})) == 1);
    CHECK(factor_multiplicity(h, Poly({2, 1})) == 0);
}

TEST_CASE("rational roots with multiplicities", "[core]") {
    // 6x^3 - 11x^2 + 6x - 1 = (x-1)(2x-1)(3x-1)
    const auto roots = rational_roots(Poly({-1, 6, -11, 6}));
    REQUIRE(roots.size() == 3);
    std::vector<Rational> vals;
    for (const auto& [r, m] : roots) {
        CHECK(m == 1);
        vals.push_back(r);
    }
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(1)});

    // (x-1)(x-3)^2 with a double root
    const auto r2 = rational_roots(Poly({-9, 15, -7, 1}));
    REQUIRE(r2.size() == 2);
    for (const auto& [r, m] : r2) {
        if (r == Rational(1)) CHECK(m == 1);
        else {
            CHECK(r == Rational(3));
            CHECK(m == 2);
        }
    }

    // x^2 - 2 has no rational roots; x^3 picks up 0 with multiplicity 3
    CHECK(rational_roots(Poly({-2, 0, 1})).empty());
    const auto r3 = rational_roots(Poly({0, 0, 0, 1}));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].first == Rational(0));
    CHECK(r3[0].second == 3);
}

TEST_CASE("rational function cancellation", "[core]") {
    // (x^2-1)/(x+1) reduces to (x-1)/1
    const RationalFunction rf(Poly({-1, 0, 1}), Poly({1, 1}));
    CHECK(rf.num() == Poly({-1, 1}));
    CHECK(rf.den() == Poly({1}));

    // denominator scaled monic: (x+1)/(2x+2) = (1/2)/1
    const RationalFunction rg(Poly({1, 1}), Poly({2, 2}));
    CHECK(rg.den().is_monic());
    CHECK(rg == RationalFunction(Poly({Rational(1, 2)}), Poly({1})));
    CHECK_THROWS(RationalFunction(Poly({1}), Poly()));
}

TEST_CASE("parse rationals with positions", "[core]") {
    CHECK(parse_rational("50/7") == Rational(50, 7));
    CHECK(parse_rational("-1/4") == Rational(-1, 4));
    CHECK(parse_rational("−1/4") == Rational(-1, 4));  // U+2212 minus
    CHECK(parse_rational("0") == Rational(0));
    CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2x"), ParseError);

    bool threw = false;
    try {
        parse_rational("12/abc");
    } catch (const ParseError& e) {
        threw = true;
        CHECK(e.position() == 3);
    }
    CHECK(threw);
}

TEST_CASE("parse rational lists", "[core]") {
    CHECK(parse_rational_list("[]").empty());
    CHECK(parse_rational_list("[1, -2/3, 4]") ==
          std::vector<Rational>{Rational(1), Rational(-2, 3), Rational(4)});
    CHECK_THROWS_AS(parse_rational_list("[1, 2"), ParseError);
    CHECK_THROWS_AS(parse_rational_list("1, 2]"), ParseError);
}

TEST_CASE("parse polynomials in both syntaxes", "[core]") {
    CHECK(parse_poly("x-1") == Poly({-1, 1}));
    CHECK(parse_poly("x^2 - 1") == Poly({-1, 0, 1}));
    CHECK(parse_poly("2*x^3 + x - 5") == Poly({-5, 1, 0, 2}));
    CHECK(parse_poly("(x-1)*(x+1)") == Poly({-1, 0, 1}));
    CHECK(parse_poly("x^2 + −3*x") == Poly({0, -3, 1}));

    // coefficient-list syntax: [c0, c1, ...]
    CHECK(parse_poly("[−1,1]") == Poly({-1, 1}));
    CHECK(parse_poly("[0, 0, 5]") == Poly({0, 0, 5}));
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("y+1"), ParseError);
}

TEST_CASE("parse rational functions", "[core]") {
    const RationalFunction rf = parse_rational_function("[−1,1]/[2,1]");
    CHECK(rf == RationalFunction(Poly({-1, 1}), Poly({2, 1})));
    CHECK(parse_rational_function("(x^2-1)/(x+2)") ==
          RationalFunction(Poly({-1, 0, 1}), Poly({2, 1})));
    CHECK(parse_rational_function("x+1") == RationalFunction(Poly({1, 1}), Poly({1})));
    CHECK_THROWS_AS(parse_rational_function("(x+1)/[0]"), ParseError);
}
