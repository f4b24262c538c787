#pragma once

#include <string>
#include <vector>

#include "specfm/groebner.hpp"
#include "specfm/poly.hpp"

namespace specfm {

// Projective point with exact coordinates.
struct ProjPoint {
    Scalar X, Y, Z;

    static ProjPoint affine_xy(const Scalar& x, const Scalar& y) { return {x, y, Scalar(1)}; }
    std::string str() const;
};

// Equality as projective points (all 2x2 minors vanish).
bool proj_equal(const ProjPoint& a, const ProjPoint& b);

struct FibreSingularity {
    Scalar t0;
    ProjPoint point;        // always affine (z = 1) with y = 0 for this family shape
    bool is_node;           // false = cusp
    bool for_all_t = false; // constant family: the point is singular on every fibre
};

struct SingularFibreReport {
    std::vector<FibreSingularity> fibres;
    // degrees of non-rational singular-parameter clusters (not analyzed)
    std::vector<std::uint64_t> unresolved_t_degrees;
    // per rational t0: degree of a non-rational singular-point cluster
    std::vector<std::pair<Scalar, std::uint64_t>> unresolved_point_degrees;
};

// The fibration y^2 z = x^3 + a2(t) x^2 z + a4(t) x z^2 + a6(t) z^3 with the
// section (0:1:0). In this normal form every fibre is an integral plane
// cubic of arithmetic genus one (the x^3 coefficient rules out linear
// factors) and the section always lies in the smooth locus, so the standing
// assumptions on the fibration hold by construction.
class WeierstrassFamily {
public:
    // a2, a4, a6 are polynomials in t (coefficients may involve lambda).
    static WeierstrassFamily from_coeffs(Poly a2, Poly a4, Poly a6);

    const Poly& a2() const { return a2_; }
    const Poly& a4() const { return a4_; }
    const Poly& a6() const { return a6_; }

    // F(x,y,z,t) = y^2 z - x^3 - a2 x^2 z - a4 x z^2 - a6 z^3
    Poly homogeneous_cubic() const;
    // p(x,t) = x^3 + a2 x^2 + a4 x + a6
    Poly affine_cubic() const;
    // y^2 - p(x,t), the chart z = 1
    Poly curve_affine() const;

    // Classical cubic discriminant of p as a polynomial in t:
    // 18 a2 a4 a6 - 4 a2^3 a6 + a2^2 a4^2 - 4 a4^3 - 27 a6^2.
    Poly discriminant() const;

    ProjPoint section() const { return {Scalar(0), Scalar(1), Scalar(0)}; }

    bool uses_lambda() const;

private:
    WeierstrassFamily(Poly a2, Poly a4, Poly a6)
        : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {}
    Poly a2_, a4_, a6_;
};

// Singular points of the rational singular fibres, classified node/cusp by
// the rank of the quadratic part of the local equation.
SingularFibreReport singular_fibres(const WeierstrassFamily& fam);

// True iff the dehomogenized family equation reduces to zero against the
// cover's Groebner basis (i.e. the cover lies on the fibration).
bool contains_curve(const WeierstrassFamily& fam, const Ideal& cover);

// True iff the fibre over t0 is smooth at the given point (which must lie on
// that fibre).
bool smooth_locus_test(const WeierstrassFamily& fam, const ProjPoint& point, const Scalar& t0);

}  // namespace specfm
