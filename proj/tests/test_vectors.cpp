#include <catch2/catch_amalgamated.hpp>

#include <ultraspec/vectors.hpp>
#include <ultraspec/matrix.hpp>

using namespace ultraspec;

TEST_CASE("max norm on K^t", "[vectors]") {
    const PAdicContext p3(3);
    CHECK(norm_max(p3, Vec{Rational(1), Rational(3), Rational(9)}) == AbsValue::one());
    CHECK(norm_max(p3, Vec{Rational(3), Rational(9)}) == AbsValue::ppow(-1));
    CHECK(norm_max(p3, Vec{Rational(1, 3), Rational(9)}) == AbsValue::ppow(1));
    CHECK(norm_max(p3, Vec{Rational(0), Rational(0)}).is_zero());
    CHECK(norm_max(p3, Vec{}).is_zero());
}

TEST_CASE("bilinear forms", "[vectors]") {
    const Vec x{Rational(1), Rational(3), Rational(9)};
    const Vec y{Rational(1), Rational(1), Rational(1)};
    CHECK(inner_t(x, y) == Rational(13));
    CHECK(inner_t(x, x) == Rational(91));
    CHECK(inner_t(Vec{}, Vec{}) == Rational(0));
    CHECK_THROWS(inner_t(x, Vec{Rational(1)}));

    const WeightSeq w({Rational(1), Rational(3), Rational(1)});
    CHECK(inner_omega(w, x, y) == Rational(19));   // 1 + 9 + 9
    CHECK(inner_omega(w, x, x) == Rational(109));  // 1 + 27 + 81
    CHECK_THROWS(WeightSeq({Rational(1), Rational(0)}));
    CHECK_THROWS(inner_omega(w, x, Vec{Rational(1)}));

    // symmetry
    CHECK(inner_t(x, y) == inner_t(y, x));
    CHECK(inner_omega(w, x, y) == inner_omega(w, y, x));
}

TEST_CASE("cauchy-schwarz bound on frozen pairs", "[vectors]") {
    const PAdicContext p5(5);
    const Vec x{Rational(1, 5), Rational(3), Rational(10)};
    const Vec y{Rational(25), Rational(-2), Rational(1, 2)};
    // |<x,y>| <= ||x|| ||y|| with the max norm
    CHECK(cauchy_schwarz_holds(p5, x, y));
    CHECK(abs_p(p5, inner_t(x, y)) <= norm_max(p5, x) * norm_max(p5, y));
    CHECK(cauchy_schwarz_holds(p5, Vec{Rational(0)}, Vec{Rational(7)}));
}

TEST_CASE("basis vectors and coordinate subspaces", "[vectors]") {
    const Vec e1 = basis_vector(4, 1);
    CHECK(e1 == Vec{Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK_THROWS(basis_vector(3, 5));

    const CoordSubspace s(5, {0, 2});
    CHECK(s.dim() == 2);
    CHECK(s.contains_index(2));
    CHECK(!s.contains_index(1));
    CHECK(s.contains(Vec{Rational(7), Rational(0), Rational(-1), Rational(0), Rational(0)}));
    CHECK(!s.contains(Vec{Rational(7), Rational(1), Rational(0), Rational(0), Rational(0)}));

    const CoordSubspace c = s.complement();
    CHECK(c.indices() == std::vector<std::size_t>{1, 3, 4});
    CHECK(c.complement().indices() == s.indices());

    const Vec v{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
    const Vec proj = s.project(v);
    CHECK(proj == Vec{Rational(1), Rational(0), Rational(3), Rational(0), Rational(0)});
    // projection splits v orthogonally
    CHECK(vec_add(proj, c.project(v)) == v);
    CHECK(inner_t(proj, c.project(v)) == Rational(0));

    CHECK_THROWS(CoordSubspace(3, {3}));
}

TEST_CASE("vector helpers", "[vectors]") {
    const Vec x{Rational(1), Rational(-2)};
    const Vec y{Rational(3), Rational(5)};
    CHECK(vec_add(x, y) == Vec{Rational(4), Rational(3)});
    CHECK(vec_sub(x, y) == Vec{Rational(-2), Rational(-7)});
    CHECK(vec_scale(Rational(-1, 2), y) == Vec{Rational(-3, 2), Rational(-5, 2)});
    CHECK(is_zero_vec(Vec{Rational(0), Rational(0)}));
    CHECK(!is_zero_vec(x));
}

TEST_CASE("matrix shape and arithmetic", "[matrix]") {
    const Matrix id = Matrix::identity(3);
    Matrix a(2, 3);
    a.at(0, 0) = 1;
    a.at(1, 2) = Rational(1, 2);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK_THROWS(Matrix({{Rational(1)}, {Rational(1), Rational(2)}}));

    const Matrix m({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}});
    CHECK(m * Matrix::identity(2) == m);
    CHECK((m - m) == Matrix(2, 2));
    CHECK(m.scaled(Rational(2)) ==
          Matrix({{Rational(4), Rational(2)}, {Rational(2), Rational(4)}}));
    CHECK(m.apply(Vec{Rational(1), Rational(1)}) == Vec{Rational(3), Rational(3)});
    CHECK(m.trace() == Rational(4));
    CHECK(id.trace() == Rational(3));
}

TEST_CASE("fraction-free rank", "[matrix]") {
    CHECK(bareiss_rank(Matrix({{Rational(1), Rational(2), Rational(3)},
                               {Rational(4), Rational(5), Rational(6)},
                               {Rational(7), Rational(8), Rational(9)}})) == 2);
    CHECK(bareiss_rank(Matrix::identity(4)) == 4);
    CHECK(bareiss_rank(Matrix(3, 3)) == 0);

    // rational entries: [[1/2, 1/3], [1/4, 1/6]] has proportional rows
    CHECK(bareiss_rank(Matrix({{Rational(1, 2), Rational(1, 3)},
                               {Rational(1, 4), Rational(1, 6)}})) == 1);

    // non-square
    CHECK(bareiss_rank(Matrix({{Rational(1), Rational(0), Rational(2)},
                               {Rational(0), Rational(1), Rational(3)}})) == 2);
}

TEST_CASE("row reduction and kernels", "[matrix]") {
    const Matrix m({{Rational(1), Rational(2), Rational(3)},
                    {Rational(4), Rational(5), Rational(6)},
                    {Rational(7), Rational(8), Rational(9)}});
    const auto [red, pivots] = rref(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});

    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == Vec{Rational(1), Rational(-2), Rational(1)});
    CHECK(is_zero_vec(m.apply(ker[0])));

    // rank 1 rational case: kernel spanned by (-2/3, 1)
    const auto k2 = kernel_basis(Matrix({{Rational(1, 2), Rational(1, 3)},
                                         {Rational(1, 4), Rational(1, 6)}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == Vec{Rational(-2, 3), Rational(1)});

    CHECK(kernel_basis(Matrix::identity(3)).empty());
    const auto full = kernel_basis(Matrix(2, 2));
    REQUIRE(full.size() == 2);
    CHECK(full[0] == Vec{Rational(1), Rational(0)});
    CHECK(full[1] == Vec{Rational(0), Rational(1)});

    // rank + nullity = columns on a frozen sample
    CHECK(bareiss_rank(m) + kernel_basis(m).size() == m.cols());
}
