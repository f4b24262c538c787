#include <doctest.h>

#include <random>

#include "specfm/error.hpp"
#include "specfm/fibration.hpp"
#include "specfm/univariate.hpp"
#include "test_support.hpp"

using namespace specfm;
using testsup::P;

namespace {

const VarSet T{Var::t};

WeierstrassFamily nodal_family() {
    return WeierstrassFamily::from_coeffs(P("1", T), P("t*(1-t)", T), P("-t^2", T));
}

// Rank of the quadratic part of the dehomogenized fibre equation at an
// affine point: independent route to the node/cusp decision.
int hessian_rank(const WeierstrassFamily& fam, const Scalar& t0, const Scalar& x0) {
    const VarSet XY{Var::x, Var::y};
    const Poly f = fam.curve_affine().substitute_scalar(Var::t, t0).with_vars(XY);
    const Poly sh = f.substitute({{Var::x, P("x", XY) + Poly::constant(XY, x0)}});
    Monomial uu = Monomial::var(Var::x, 2);
    Monomial vv = Monomial::var(Var::y, 2);
    Monomial uv = Monomial::var(Var::x, 1) * Monomial::var(Var::y, 1);
    const Scalar a = sh.coeff_of(uu), b = sh.coeff_of(uv), c = sh.coeff_of(vv);
    const Scalar det = Scalar(4) * a * c - b * b;
    if (!det.is_zero()) return 2;
    if (!a.is_zero() || !b.is_zero() || !c.is_zero()) return 1;
    return 0;
}

}  // namespace

TEST_SUITE("fibration") {

TEST_CASE("discriminant of the nodal family") {
    const WeierstrassFamily fam = nodal_family();
    const Poly disc = fam.discriminant();
    CHECK(disc.degree_in(Var::t) == 6);
    CHECK(disc.substitute_scalar(Var::t, Scalar(0)).constant_value().is_zero());
    // frozen value, derived by hand from the classical cubic discriminant
    CHECK(disc == P("4*t^6 - 12*t^5 + 4*t^4 - 24*t^3 + 5*t^2", T));
    // resultant oracle: disc(p) = -Res_x(p, p') for the monic cubic
    const Poly p = fam.affine_cubic();
    CHECK(-resultant_univ(p, p.derivative(Var::x), Var::x) == disc);
}

TEST_CASE("identically singular families") {
    // the constant cuspidal cubic y^2 z = x^3 has zero discriminant but is a
    // legitimate constant family: the cusp is reported for every t
    const WeierstrassFamily cusp =
        WeierstrassFamily::from_coeffs(P("0", T), P("0", T), P("0", T));
    CHECK(cusp.discriminant().is_zero());
    const SingularFibreReport rep = singular_fibres(cusp);
    REQUIRE(rep.fibres.size() == 1);
    CHECK(rep.fibres[0].for_all_t);
    CHECK(!rep.fibres[0].is_node);

    // a t-dependent family that is singular on every fibre is rejected
    const WeierstrassFamily degenerate =
        WeierstrassFamily::from_coeffs(P("t", T), P("0", T), P("0", T));
    CHECK(degenerate.discriminant().is_zero());
    CHECK_THROWS_AS(singular_fibres(degenerate), Error);
}

TEST_CASE("singular fibres of the nodal family") {
    const SingularFibreReport rep = singular_fibres(nodal_family());
    REQUIRE(rep.fibres.size() == 1);
    CHECK(rep.fibres[0].t0.is_zero());
    CHECK(rep.fibres[0].is_node);
    CHECK(proj_equal(rep.fibres[0].point, ProjPoint{Scalar(0), Scalar(0), Scalar(1)}));
    // the remaining singular parameters form a degree-4 cluster
    REQUIRE(rep.unresolved_t_degrees.size() == 1);
    CHECK(rep.unresolved_t_degrees[0] == 4);
}

TEST_CASE("constant family with a node at (1:0:1)") {
    // y^2 z = x^3 - 3 x z^2 + 2 z^3, double root of p at x = 1
    const WeierstrassFamily fam =
        WeierstrassFamily::from_coeffs(P("0", T), P("-3", T), P("2", T));
    const SingularFibreReport rep = singular_fibres(fam);
    REQUIRE(rep.fibres.size() == 1);
    CHECK(rep.fibres[0].is_node);
    CHECK(proj_equal(rep.fibres[0].point, ProjPoint{Scalar(1), Scalar(0), Scalar(1)}));
}

TEST_CASE("smooth constant family has no singular fibres") {
    const WeierstrassFamily fam =
        WeierstrassFamily::from_coeffs(P("0", T), P("0", T), P("1", T));
    CHECK(singular_fibres(fam).fibres.empty());
}

TEST_CASE("cusp detection") {
    // p = x^3 - t: triple root at t = 0
    const WeierstrassFamily fam =
        WeierstrassFamily::from_coeffs(P("0", T), P("0", T), P("-t", T));
    const SingularFibreReport rep = singular_fibres(fam);
    REQUIRE(rep.fibres.size() == 1);
    CHECK(rep.fibres[0].t0.is_zero());
    CHECK(!rep.fibres[0].is_node);
    CHECK(hessian_rank(fam, Scalar(0), Scalar(0)) == 1);
}

TEST_CASE("node type agrees with the Hessian rank") {
    const SingularFibreReport rep = singular_fibres(nodal_family());
    for (const auto& s : rep.fibres) {
        const int rank = hessian_rank(nodal_family(), s.t0, s.point.X);
        CHECK(s.is_node == (rank == 2));
    }
}

TEST_CASE("discriminant roots match singular fibres on random families") {
    std::mt19937 rng(808);
    int tested = 0;
    while (tested < 10) {
        const Poly a2 = testsup::random_poly(rng, T, 1, 2);
        const Poly a4 = testsup::random_poly(rng, T, 2, 2);
        const Poly a6 = testsup::random_poly(rng, T, 2, 2);
        const WeierstrassFamily fam = WeierstrassFamily::from_coeffs(a2, a4, a6);
        const Poly disc = fam.discriminant();
        if (disc.is_zero()) continue;
        ++tested;
        const SingularFibreReport rep = singular_fibres(fam);
        const RootReport roots =
            disc.total_degree() == 0 ? RootReport{{}, P("1", T), 0}
                                     : squarefree_linear_roots(disc, Var::t);
        for (const auto& [t0, mult] : roots.roots) {
            (void)mult;
            bool found = false;
            for (const auto& s : rep.fibres)
                if (s.t0 == t0) found = true;
            CHECK(found);
        }
        for (const auto& s : rep.fibres)
            CHECK(disc.substitute_scalar(Var::t, s.t0).constant_value().is_zero());
    }
}

TEST_CASE("section is on every fibre and in the smooth locus") {
    const WeierstrassFamily fam = nodal_family();
    const Poly F = fam.homogeneous_cubic();
    const Poly at_section = F.substitute_scalar(Var::x, Scalar(0))
                                .substitute_scalar(Var::y, Scalar(1))
                                .substitute_scalar(Var::z, Scalar(0));
    CHECK(at_section.is_zero());
    CHECK(smooth_locus_test(fam, fam.section(), Scalar(0)));
}

TEST_CASE("smooth locus test at the node and on smooth points") {
    const WeierstrassFamily fam = nodal_family();
    CHECK(!smooth_locus_test(fam, ProjPoint{Scalar(0), Scalar(0), Scalar(1)}, Scalar(0)));
    // (0:0:1) is not on the fibre t = 1 at all
    CHECK_THROWS_AS(
        smooth_locus_test(fam, ProjPoint{Scalar(0), Scalar(0), Scalar(1)}, Scalar(1)), Error);
    // an honest smooth point of the fibre t = 1: p(1) = 1, so (1, 1) is on it
    CHECK(smooth_locus_test(fam, ProjPoint{Scalar(1), Scalar(1), Scalar(1)}, Scalar(1)));
}

TEST_CASE("family equation factors through the tangent-line cover") {
    // y^2 z - x^3 - x^2 z - t(1-t) x z^2 + t^2 z^3
    //   = (y^2 - x^2) z - (x - t z)(x^2 + t x z + t z^2)
    const VarSet V{Var::x, Var::y, Var::z, Var::t};
    const Poly F = nodal_family().homogeneous_cubic();
    const Poly rhs = P("(y^2 - x^2)*z - (x - t*z)*(x^2 + t*x*z + t*z^2)", V);
    CHECK(F == rhs);
}

TEST_CASE("curve containment") {
    const WeierstrassFamily fam = nodal_family();
    const VarSet XYT{Var::x, Var::y, Var::t};
    const Ideal tangent = Ideal::make(XYT, {P("x + y", XYT), P("x^2 + t*x + t", XYT)});
    CHECK(contains_curve(fam, tangent));
    const Ideal band = Ideal::make(XYT, {P("(1+lambda)*y - (1-lambda)*x", XYT),
                                         P("y^2 - x^3 - x^2 - t*(1-t)*x + t^2", XYT)});
    CHECK(contains_curve(fam, band));
    const Ideal off = Ideal::make(XYT, {P("x - 1", XYT), P("y - 1", XYT)});
    CHECK(!contains_curve(fam, off));
}

}  // TEST_SUITE
