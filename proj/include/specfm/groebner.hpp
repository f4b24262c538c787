#pragma once

#include <optional>
#include <vector>

#include "specfm/order.hpp"
#include "specfm/poly.hpp"

namespace specfm {

// Generator presentation of an ideal. Generators are nonzero and canonical.
struct Ideal {
    VarSet vars;
    std::vector<Poly> gens;

    static Ideal make(VarSet vars, std::vector<Poly> gens);
    int coefficient_level() const;
    bool uses_param(Param p) const;
};

// Records the scalars inverted while computing a basis; the flatness test
// mines these for jump-locus candidates.
struct InversionLog {
    std::vector<Scalar> inverted;
};

struct GroebnerBasis {
    MonomialOrder order;
    VarSet vars;
    std::vector<Poly> polys;  // reduced: monic, pairwise tail-reduced, sorted by leading term
};

// Leading term of p under the order (p nonzero).
const Term& lead_term(const Poly& p, const MonomialOrder& order);

// Fully reduced normal form of p against basis (every term reducible by some
// leading term is eliminated).
Poly normal_form(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order,
                 InversionLog* log = nullptr);

// Buchberger with normal pair selection and the product/chain criteria;
// output is the unique reduced basis, deterministic for fixed input.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         InversionLog* log = nullptr);

// Standard monomials (outside the leading-term ideal); nullopt = infinite.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb);

std::optional<std::size_t> quotient_length(const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Poly& p);
bool ideals_equal(const Ideal& a, const Ideal& b);

// Generator of the elimination ideal in `keep` (the ideal must be
// zero-dimensional so the eliminant is nonzero); monic.
Poly eliminate(const Ideal& ideal, Var keep);

// (I : f) via the w-trick intersection; I is f-regular iff (I : f) = I.
Ideal ideal_quotient(const Ideal& ideal, const Poly& f);

// --- support of a zero-dimensional ideal in k[x,y] -------------------------

struct SupportPoint {
    Scalar x, y;
    std::size_t local_length;
};

struct SupportCluster {
    // Degree of the defining residual factor along the stated projection
    // (x-eliminant residual, or the y-residual over a rational x).
    std::uint64_t degree;
    std::size_t total_length;
    std::optional<Scalar> at_x;  // set when the cluster sits over a rational x
};

struct SupportReport {
    std::size_t total_length = 0;
    std::vector<SupportPoint> points;
    std::vector<SupportCluster> clusters;
};

// Field-rational support points with local multiplicities (computed by
// truncated local linear algebra at each point) plus cluster entries; the
// lengths always sum to quotient_length.
SupportReport support_points(const Ideal& ideal);

// --- flatness over the t-line ----------------------------------------------

enum class FlatVerdict { Flat, NotFlat, Undetermined };

struct FlatnessCertificate {
    FlatVerdict verdict = FlatVerdict::Undetermined;
    std::size_t generic_length = 0;
    // checked rational candidate values with their fibre lengths
    // (nullopt = infinite fibre)
    std::vector<std::pair<Scalar, std::optional<std::size_t>>> checked;
    // non-rational candidate factors (monic polynomials in t) that escape
    // the rational length check, with their degrees
    std::vector<Poly> unresolved_factors;
    std::vector<std::uint64_t> unresolved_degrees;
    // second, independent certificate on the unresolved factors: any torsion
    // of the cover module over k[t] lives over the candidate locus, so
    // (I : r) = I for every unresolved factor r certifies the absence of
    // torsion there. Set only when unresolved factors exist and no rational
    // jump was found; true upgrades the length verdict to flat.
    std::optional<bool> unresolved_t_regular;
};

// Length-constancy flatness test for a cover ideal in {x, y, t}: compares
// the generic fibre length over k(t) with the lengths at every rational
// candidate jump value (roots of scalars inverted while computing the
// generic basis). The length verdict is Undetermined when candidates escape
// the field; the ideal-quotient certificate on those factors then either
// exposes torsion (NotFlat) or certifies its absence (unresolved_t_regular).
FlatnessCertificate is_t_flat(const Ideal& cover);

// Specializes the t variable of a cover ideal (t0 in the coefficient field),
// producing an ideal in {x, y}.
Ideal specialize_t(const Ideal& cover, const Scalar& t0);

// Moves the t variable into the coefficient field (generic fibre).
Ideal generic_fibre_ideal(const Ideal& cover);

}  // namespace specfm
