#include <algorithm>

#include "specfm/error.hpp"
#include "specfm/groebner.hpp"
#include "specfm/univariate.hpp"

namespace specfm {

namespace {

MonomialOrder xy_order() { return MonomialOrder::grevlex({Var::x, Var::y}); }

std::optional<std::size_t> fibre_length_of(const Ideal& ideal) {
    return quotient_length(buchberger(ideal, xy_order()));
}

// Collects the rational roots (in t) of the numerators and denominators of a
// scalar that depends on the t parameter; non-rational residual factors are
// kept as polynomials for the torsion certificate.
void collect_candidates(const Scalar& s, std::vector<Scalar>& values,
                        std::vector<Poly>& unresolved) {
    if (s.level() < 2) return;  // no t-dependence
    auto scan = [&](const std::vector<Scalar>& coeffs) {
        const Poly p = from_dense(VarSet{Var::t}, Var::t, coeffs);
        if (p.total_degree() == 0) return;
        const RootReport rr = squarefree_linear_roots(p, Var::t);
        for (const auto& [root, mult] : rr.roots) {
            (void)mult;
            values.push_back(root);
        }
        if (rr.residual_degree >= 2) unresolved.push_back(rr.residual);
    };
    scan(s.numerator_coeffs());
    scan(s.denominator_coeffs());
}

}  // namespace

FlatnessCertificate is_t_flat(const Ideal& cover) {
    FlatnessCertificate cert;

    if (!cover.vars.contains(Var::t)) {
        // constant cover: every fibre is the same
        auto len = fibre_length_of(Ideal::make(VarSet{Var::x, Var::y}, cover.gens));
        if (!len) fail_input("is_t_flat: fibre length is infinite");
        cert.verdict = FlatVerdict::Flat;
        cert.generic_length = *len;
        return cert;
    }

    InversionLog log;
    const Ideal generic = generic_fibre_ideal(cover);
    const GroebnerBasis gb = buchberger(generic, xy_order(), &log);
    const auto generic_len = quotient_length(gb);
    if (!generic_len) fail_input("is_t_flat: generic fibre length is infinite");
    cert.generic_length = *generic_len;

    // candidate jump locus: roots of everything inverted along the way plus
    // the coefficients of the generic basis
    std::vector<Scalar> candidates;
    for (const auto& s : log.inverted) collect_candidates(s, candidates, cert.unresolved_factors);
    for (const auto& g : gb.polys)
        for (const auto& term : g.terms())
            collect_candidates(term.coeff, candidates, cert.unresolved_factors);

    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& a, const Scalar& b) { return a.str() < b.str(); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::sort(cert.unresolved_factors.begin(), cert.unresolved_factors.end(),
              [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    cert.unresolved_factors.erase(
        std::unique(cert.unresolved_factors.begin(), cert.unresolved_factors.end()),
        cert.unresolved_factors.end());
    for (const auto& f : cert.unresolved_factors)
        cert.unresolved_degrees.push_back(f.degree_in(Var::t));

    bool jump = false;
    for (const auto& t0 : candidates) {
        const auto len = fibre_length_of(specialize_t(cover, t0));
        cert.checked.push_back({t0, len});
        if (!len || *len != *generic_len) jump = true;
    }

    if (jump) {
        cert.verdict = FlatVerdict::NotFlat;
        return cert;
    }
    if (cert.unresolved_factors.empty()) {
        cert.verdict = FlatVerdict::Flat;
        return cert;
    }

    // Non-rational candidates remain: the length verdict is undetermined, but
    // any t-torsion is supported over the candidate locus, so ideal quotients
    // by the unresolved factors decide the question exactly.
    bool regular = true;
    for (const auto& f : cert.unresolved_factors) {
        const Ideal quot = ideal_quotient(cover, f.with_vars(cover.vars));
        if (!ideals_equal(quot, cover)) {
            regular = false;
            break;
        }
    }
    cert.unresolved_t_regular = regular;
    cert.verdict = regular ? FlatVerdict::Undetermined : FlatVerdict::NotFlat;
    return cert;
}

}  // namespace specfm
