#include "specfm/fibration.hpp"

#include "specfm/error.hpp"
#include "specfm/univariate.hpp"

namespace specfm {

std::string ProjPoint::str() const {
    return "(" + X.str() + " : " + Y.str() + " : " + Z.str() + ")";
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
    const bool a_zero = a.X.is_zero() && a.Y.is_zero() && a.Z.is_zero();
    const bool b_zero = b.X.is_zero() && b.Y.is_zero() && b.Z.is_zero();
    if (a_zero || b_zero) fail_input("projective point with all coordinates zero");
    return (a.X * b.Y - a.Y * b.X).is_zero() && (a.X * b.Z - a.Z * b.X).is_zero() &&
           (a.Y * b.Z - a.Z * b.Y).is_zero();
}

WeierstrassFamily WeierstrassFamily::from_coeffs(Poly a2, Poly a4, Poly a6) {
    const VarSet tset{Var::t};
    for (const Poly* c : {&a2, &a4, &a6}) {
        for (Var v : c->vars().list())
            if (v != Var::t && c->involves(v))
                fail_input("family coefficients must be polynomials in t only");
    }
    WeierstrassFamily fam(a2.with_vars(tset), a4.with_vars(tset), a6.with_vars(tset));
    // Structural checks: the section lies on every fibre and the x^3
    // coefficient is -1, which excludes linear factors of F over any field.
    const Poly F = fam.homogeneous_cubic();
    Monomial y2z;
    y2z.e[int(Var::y)] = 2;
    y2z.e[int(Var::z)] = 1;
    Monomial x3;
    x3.e[int(Var::x)] = 3;
    if (!(F.coeff_of(y2z) == Scalar(1)) || !(F.coeff_of(x3) == Scalar(-1)))
        fail_internal("family: normal form violated");
    return fam;
}

Poly WeierstrassFamily::homogeneous_cubic() const {
    const VarSet vars{Var::x, Var::y, Var::z, Var::t};
    const Poly x = Poly::variable(vars, Var::x);
    const Poly y = Poly::variable(vars, Var::y);
    const Poly z = Poly::variable(vars, Var::z);
    const Poly c2 = a2_.with_vars(vars), c4 = a4_.with_vars(vars), c6 = a6_.with_vars(vars);
    return y * y * z - x * x * x - c2 * x * x * z - c4 * x * z * z - c6 * z * z * z;
}

Poly WeierstrassFamily::affine_cubic() const {
    const VarSet vars{Var::x, Var::t};
    const Poly x = Poly::variable(vars, Var::x);
    return x * x * x + a2_.with_vars(vars) * x * x + a4_.with_vars(vars) * x +
           a6_.with_vars(vars);
}

Poly WeierstrassFamily::curve_affine() const {
    const VarSet vars{Var::x, Var::y, Var::t};
    const Poly y = Poly::variable(vars, Var::y);
    return y * y - affine_cubic().with_vars(vars);
}

Poly WeierstrassFamily::discriminant() const {
    const Poly &A = a2_, &B = a4_, &C = a6_;
    const auto k = [&](long n) { return Poly::constant(VarSet{Var::t}, Scalar(n)); };
    return k(18) * A * B * C - k(4) * A * A * A * C + A * A * B * B - k(4) * B * B * B -
           k(27) * C * C;
}

bool WeierstrassFamily::uses_lambda() const {
    return a2_.uses_param(Param::Lambda) || a4_.uses_param(Param::Lambda) ||
           a6_.uses_param(Param::Lambda);
}

namespace {

// Singular points of the fibre over one parameter value.
void fibre_singular_points(const Poly& cubic_t_free, const Scalar& t0, bool for_all_t,
                           SingularFibreReport& report) {
    const Poly p0 = cubic_t_free;
    const Poly dp0 = p0.derivative(Var::x);
    const Poly g = univariate_gcd(p0, dp0, Var::x);
    if (g.total_degree() == 0)
        fail_internal("singular_fibres: discriminant root without a double root");
    const RootReport xroots = squarefree_linear_roots(g, Var::x);
    for (const auto& [x0, xm] : xroots.roots) {
        (void)xm;
        // singular point (x0 : 0 : 1); node iff p''(x0) != 0 (quadratic part
        // y^2 - (p''(x0)/2) u^2 of the local equation has rank 2)
        const Scalar p2 =
            dp0.derivative(Var::x).substitute_scalar(Var::x, x0).constant_value();
        report.fibres.push_back(
            {t0, ProjPoint::affine_xy(x0, Scalar(0)), !p2.is_zero(), for_all_t});
    }
    if (xroots.residual_degree >= 2)
        report.unresolved_point_degrees.push_back({t0, xroots.residual_degree});
}

}  // namespace

SingularFibreReport singular_fibres(const WeierstrassFamily& fam) {
    const Poly disc = fam.discriminant();
    const Poly p = fam.affine_cubic();

    SingularFibreReport report;
    if (disc.is_zero()) {
        // constant singular family: one cubic, singular on every fibre
        if (fam.a2().involves(Var::t) || fam.a4().involves(Var::t) ||
            fam.a6().involves(Var::t))
            fail_input("singular_fibres: the family is identically singular");
        fibre_singular_points(p.substitute_scalar(Var::t, Scalar(0)).with_vars(VarSet{Var::x}),
                              Scalar(0), /*for_all_t=*/true, report);
        return report;
    }
    if (disc.total_degree() == 0) return report;  // constant nonzero discriminant

    const RootReport troots = squarefree_linear_roots(disc, Var::t);
    if (troots.residual_degree >= 2)
        report.unresolved_t_degrees.push_back(troots.residual_degree);

    for (const auto& [t0, mult] : troots.roots) {
        (void)mult;
        fibre_singular_points(p.substitute_scalar(Var::t, t0).with_vars(VarSet{Var::x}), t0,
                              /*for_all_t=*/false, report);
    }
    return report;
}

bool contains_curve(const WeierstrassFamily& fam, const Ideal& cover) {
    const VarSet vars{Var::x, Var::y, Var::t};
    if (!cover.vars.subset_of(vars))
        fail_input("contains_curve: cover must live in the chart variables x, y, t");
    const Ideal ext = Ideal::make(vars, cover.gens);
    const GroebnerBasis gb = buchberger(ext, MonomialOrder::grevlex({Var::x, Var::y, Var::t}));
    return ideal_contains(gb, fam.curve_affine());
}

bool smooth_locus_test(const WeierstrassFamily& fam, const ProjPoint& point, const Scalar& t0) {
    const Poly F = fam.homogeneous_cubic().substitute_scalar(Var::t, t0);
    auto eval = [&](const Poly& f) {
        return f.substitute_scalar(Var::x, point.X)
            .substitute_scalar(Var::y, point.Y)
            .substitute_scalar(Var::z, point.Z)
            .constant_value();
    };
    if (!eval(F).is_zero()) fail_input("smooth_locus_test: point does not lie on the fibre");
    return !(eval(F.derivative(Var::x)).is_zero() && eval(F.derivative(Var::y)).is_zero() &&
             eval(F.derivative(Var::z)).is_zero());
}

}  // namespace specfm
