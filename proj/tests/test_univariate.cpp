#include <doctest.h>

#include <random>

#include "specfm/error.hpp"
#include "specfm/univariate.hpp"
#include "test_support.hpp"

using namespace specfm;
using testsup::P;

TEST_SUITE("univariate") {

TEST_CASE("resultant of linear polynomials") {
    // Res_x(x - y, x - z) = y - z under the declared row convention
    const VarSet V{Var::x, Var::y, Var::z};
    const Poly r = resultant_univ(P("x - y", V), P("x - z", V), Var::x);
    CHECK(r == P("y - z", VarSet{Var::y, Var::z}));
}

TEST_CASE("resultant vanishes on a common root") {
    const VarSet V{Var::x};
    CHECK(resultant_univ(P("x^2", V), P("x", V), Var::x).is_zero());
}

TEST_CASE("resultant matches the discriminant convention on the nodal cubic") {
    // disc(p) = -Res_x(p, p') for a monic cubic
    const VarSet XT{Var::x, Var::t};
    const Poly p = P("x^3 + x^2 + t*(1-t)*x - t^2", XT);
    const Poly res = resultant_univ(p, p.derivative(Var::x), Var::x);
    const Poly disc = P("4*t^6 - 12*t^5 + 4*t^4 - 24*t^3 + 5*t^2", VarSet{Var::t});
    CHECK(-res == disc);
}

TEST_CASE("resultant rejects zero input") {
    const VarSet V{Var::x};
    CHECK_THROWS_AS(resultant_univ(Poly::zero(V), P("x", V), Var::x), Error);
}

TEST_CASE("exact division round trips") {
    std::mt19937 rng(31);
    const VarSet XY{Var::x, Var::y};
    for (int i = 0; i < 40; ++i) {
        const Poly a = testsup::random_poly(rng, XY, 4, 4);
        Poly b = testsup::random_poly(rng, XY, 3, 3);
        if (b.is_zero()) b = P("x + 1", XY);
        CHECK(poly_divexact(a * b, b) == a);
    }
    CHECK_THROWS_AS(poly_divexact(P("x + 1", XY), P("y", XY)), Error);
}

TEST_CASE("root extraction over Q(lambda): the nodal-fibre eliminant") {
    const Scalar l = Scalar::param(Param::Lambda);
    const Scalar c = Scalar(4) * l / ((Scalar(1) + l) * (Scalar(1) + l));
    // x^2 (4 lambda/(1+lambda)^2 + x)
    const VarSet X{Var::x};
    const Poly p =
        Poly::term(X, Monomial::var(Var::x, 3), Scalar(1)) +
        Poly::term(X, Monomial::var(Var::x, 2), c);
    const RootReport rr = squarefree_linear_roots(p, Var::x);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.residual_degree == 0);
    bool saw_zero = false, saw_moved_root = false;
    for (const auto& [root, mult] : rr.roots) {
        if (root.is_zero() && mult == 2) saw_zero = true;
        if (root == -c && mult == 1) saw_moved_root = true;
    }
    CHECK(saw_zero);
    CHECK(saw_moved_root);
}

TEST_CASE("irreducible quadratics become clusters") {
    const VarSet X{Var::x};
    const RootReport rr = squarefree_linear_roots(P("x^2 + 1", X), Var::x);
    CHECK(rr.roots.empty());
    CHECK(rr.residual_degree == 2);
    CHECK(rr.residual == P("x^2 + 1", X));
}

TEST_CASE("multiplicities of repeated roots") {
    const VarSet X{Var::x};
    const RootReport rr = squarefree_linear_roots(P("(x-1)^3", X), Var::x);
    REQUIRE(rr.roots.size() == 1);
    CHECK(rr.roots[0].first == Scalar(1));
    CHECK(rr.roots[0].second == 3);
    CHECK(rr.residual_degree == 0);
}

TEST_CASE("rational root theorem finds fractional roots") {
    const VarSet X{Var::x};
    // (2x - 3)(3x + 5)(x^2 + x + 1)
    const Poly p = P("(2*x - 3)*(3*x + 5)*(x^2 + x + 1)", X);
    const RootReport rr = squarefree_linear_roots(p, Var::x);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.residual_degree == 2);
    bool a = false, b = false;
    for (const auto& [root, mult] : rr.roots) {
        if (root == Scalar(3, 2) && mult == 1) a = true;
        if (root == Scalar(-5, 3) && mult == 1) b = true;
    }
    CHECK(a);
    CHECK(b);
}

TEST_CASE("quadratic extraction over Q(lambda) with exact square discriminant") {
    const Scalar l = Scalar::param(Param::Lambda);
    const VarSet X{Var::x};
    // (x - lambda)(x + 1) has discriminant (lambda+1)^2
    const Poly p = Poly::term(X, Monomial::var(Var::x, 2), Scalar(1)) +
                   Poly::term(X, Monomial::var(Var::x, 1), Scalar(1) - l) +
                   Poly::constant(X, -l);
    const RootReport rr = squarefree_linear_roots(p, Var::x);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.residual_degree == 0);
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(squarefree_linear_roots(Poly::zero(VarSet{Var::x}), Var::x), Error);
}

}  // TEST_SUITE
